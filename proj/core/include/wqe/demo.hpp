#pragma once

#include <ostream>

namespace wqe {

// Worked small-dimension examples with their closed-form expected values,
// including the upper-bound comparison panel. Returns the number of lines
// whose computed value missed the expectation (0 = all good).
int run_demo(std::ostream& os);

}  // namespace wqe
