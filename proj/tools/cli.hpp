#pragma once

#include <iosfwd>

namespace webiso::cli {

enum ExitCode { kOk = 0, kUsage = 1, kInvalidWeb = 2, kAlarm = 3 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace webiso::cli
