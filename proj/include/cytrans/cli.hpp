#pragma once

#include <iosfwd>

namespace cytrans {

// Entry point of the cytrans tool. Exit codes: 0 success, 1 domain error,
// 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cytrans
