#pragma once

#include <iosfwd>

namespace degplus {

/// Exit codes: 0 success (an infinite deg+ is a success), 1 precision or
/// iteration limit hit, 2 usage or parse error, 3 a self-check disagreed.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace degplus
