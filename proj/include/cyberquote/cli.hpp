#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace cyberquote::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 1,
  kFormat = 2,
  kNumerical = 3,
  kUsage = 4,
};

// args excludes the program name. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Text of the built-in CMMC 2.0 practice list used when --model is omitted.
std::string_view builtin_model_text();

}  // namespace cyberquote::cli
