#pragma once

#include "job.hpp"

#include <string>

namespace qmut::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

struct DispatchResult {
  int exit_code = kOk;
  std::string output;       // stdout
  std::string diagnostics;  // stderr
};

/// Commands: mutate, cmatrix, classify, trace, zfun, coeff, verify-thm1,
/// verify-thm2, identity, stanley. Never throws.
DispatchResult dispatch(const JobSpec& job);

}  // namespace qmut::cli
