#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qnm/channel.hpp"

namespace qnm::cli {

/// Stable exit-code contract of the command-line tool.
enum ExitCode : int {
  kPass = 0,
  kCertifyFail = 1,
  kUsage = 2,
  kIo = 3,
};

inline constexpr double kDefaultTol = 1e-9;

/// Default tolerance, overridden by the QNM_TOL environment variable.
double default_tolerance();

/// Adversary presets: identity, depolarize, replace:tau|<k>|<file>, weyl:<a>,<b>,
/// unitary:<file>, kraus:<file>, or a bare path to a Kraus file.
KrausChannel parse_adversary(const std::string& spec, std::size_t d);

/// Runs the tool. `args` excludes the program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qnm::cli
