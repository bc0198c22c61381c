#pragma once

#include <ostream>

namespace cagekit {

/// Exit codes: 0 success, 1 a check or validation failed, 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cagekit
