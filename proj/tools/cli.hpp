#pragma once

#include <iosfwd>

namespace halving::cli {

/// Entry point shared by the executable and the tests.
/// Exit status: 0 success, 1 domain error, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace halving::cli
