#pragma once

namespace wqe {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wqe
