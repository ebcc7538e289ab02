#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "trivdiag/verify.hpp"

namespace trivdiag::cli {

enum class Format { json, text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses `args` (without the program name), runs the subcommand and writes
/// its output. Returns 0 on success, 1 if a verification failed, 2 on a usage
/// error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Deterministic rendering of verification reports. JSON keys are sorted and
/// runtimes are left out; text mode prints one aligned row per report.
std::string render(const std::vector<verify::VerificationReport>& reports, Format format);

}  // namespace trivdiag::cli
