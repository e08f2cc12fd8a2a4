#pragma once

// Job files for the qmut tool: one JSON object naming the quiver, one or two
// mutation sequences and the parameters. Vertices are 1-indexed.
//
//   {"n":2, "B":[[0,1],[-1,0]], "sequence":[1,2], "sequence2":[2,1,2],
//    "r":[-2,1], "degree":4, "beta":[1,1], "command":"zfun", "format":"json"}
//
// "arrows":[[i,j,mult],...] may replace "B". "stanley":[a,b,c,d] selects one
// Stanley instance for the stanley command.

#include "qmut/quiver.hpp"
#include "qmut/torus.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmut::cli {

enum class Format { Json, Text };

class JobError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JobSpec {
  std::optional<Quiver> quiver;
  std::vector<MutationSequence> sequences;
  std::vector<std::int64_t> r;
  int degree = 4;
  std::optional<Multidegree> beta;
  std::optional<std::array<int, 4>> stanley;
  std::string command;
  Format format = Format::Json;
};

/// Command-line values that replace job-file fields.
struct Overrides {
  std::optional<std::string> command;
  std::optional<int> degree;
  std::optional<std::string> format;
  std::optional<std::string> r;
  std::optional<std::string> beta;
};

/// Parses and validates a job. Syntax errors report line and column;
/// validation errors name the failing field.
JobSpec parse_job(const std::string& text);
/// Applies overrides, then fills defaults (r = 0) and re-validates.
void apply_overrides(JobSpec& job, const Overrides& o);
void validate(const JobSpec& job);

/// "-2,1" -> {-2, 1}; whitespace around entries is allowed.
std::vector<std::int64_t> parse_int_list(const std::string& s, const std::string& field);

}  // namespace qmut::cli
