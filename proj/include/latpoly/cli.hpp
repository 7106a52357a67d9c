#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latpoly::cli {

/// Dispatches a full command line (program name excluded). Streams are
/// injectable so tests can capture output byte-for-byte.
///
/// Exit codes: 0 success / all asserted checks pass; 1 an asserted identity
/// failed; 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace latpoly::cli
