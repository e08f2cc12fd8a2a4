#include "job.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <sstream>

namespace qmut::cli {

namespace {

using Json = nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw JobError(msg); }

std::string location(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::int64_t as_int(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field + ": expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

std::vector<std::int64_t> int_array(const Json& j, const std::string& field) {
  if (!j.is_array()) fail(field + ": expected an array of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(as_int(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

MutationSequence sequence_from(const Json& j, const std::string& field) {
  MutationSequence m;
  for (auto v : int_array(j, field)) {
    if (v < INT32_MIN || v > INT32_MAX) fail(field + ": vertex " + std::to_string(v) + " out of range");
    m.push_back(static_cast<int>(v));
  }
  return m;
}

Quiver quiver_from(const Json& j) {
  if (!j.contains("n")) fail("n: missing");
  const std::int64_t n = as_int(j["n"], "n");
  if (n < 1) fail("n: must be positive");
  const bool has_b = j.contains("B"), has_arrows = j.contains("arrows");
  if (has_b == has_arrows) fail("quiver: give exactly one of \"B\" or \"arrows\"");

  if (has_b) {
    const Json& b = j["B"];
    if (!b.is_array() || b.size() != static_cast<std::size_t>(n))
      fail("B: expected " + std::to_string(n) + " rows");
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t i = 0; i < b.size(); ++i) {
      rows.push_back(int_array(b[i], "B[" + std::to_string(i) + "]"));
      if (rows.back().size() != static_cast<std::size_t>(n))
        fail("B[" + std::to_string(i) + "]: expected " + std::to_string(n) + " entries");
    }
    const IntMatrix m = IntMatrix::from_rows(rows);
    if (!m.is_skew_symmetric()) fail("B not skew-symmetric");
    return Quiver(m);
  }

  const Json& a = j["arrows"];
  if (!a.is_array()) fail("arrows: expected an array of [from, to, multiplicity]");
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string field = "arrows[" + std::to_string(i) + "]";
    auto t = int_array(a[i], field);
    if (t.size() != 2 && t.size() != 3) fail(field + ": expected [from, to] or [from, to, multiplicity]");
    const std::int64_t mult = t.size() == 3 ? t[2] : 1;
    if (t[0] == t[1]) fail("loop at vertex " + std::to_string(t[0]));
    for (int e = 0; e < 2; ++e)
      if (t[e] < 1 || t[e] > n) fail(field + ": vertex " + std::to_string(t[e]) + " outside 1.." + std::to_string(n));
    if (mult < 1) fail(field + ": multiplicity must be positive");
    arrows.push_back({static_cast<int>(t[0]), static_cast<int>(t[1]), mult});
  }
  return Quiver::from_arrows(static_cast<std::size_t>(n), arrows);
}

Format format_from(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "text") return Format::Text;
  fail("format: expected \"json\" or \"text\", got \"" + s + "\"");
}

Multidegree beta_from(const std::vector<std::int64_t>& v) {
  Multidegree b;
  for (auto x : v) {
    if (x < 0 || x > INT32_MAX) fail("beta: entries must be nonnegative");
    b.push_back(static_cast<int>(x));
  }
  return b;
}

}  // namespace

std::vector<std::int64_t> parse_int_list(const std::string& s, const std::string& field) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) fail(field + ": empty entry in \"" + s + "\"");
    const char* first = item.data() + b;
    const char* last = item.data() + e + 1;
    if (*first == '+') ++first;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) fail(field + ": not an integer: \"" + item + "\"");
    out.push_back(v);
  }
  if (out.empty()) fail(field + ": empty list");
  return out;
}

JobSpec parse_job(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::string what = e.what();
    if (auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
    throw JobError("parse error at " + location(text, e.byte) + ": " + what);
  }
  if (!j.is_object()) fail("job must be a JSON object");

  JobSpec job;
  if (j.contains("n") || j.contains("B") || j.contains("arrows")) job.quiver = quiver_from(j);
  if (j.contains("sequence")) job.sequences.push_back(sequence_from(j["sequence"], "sequence"));
  if (j.contains("sequence2")) {
    if (job.sequences.empty()) fail("sequence2: given without sequence");
    job.sequences.push_back(sequence_from(j["sequence2"], "sequence2"));
  }
  if (j.contains("r")) job.r = int_array(j["r"], "r");
  if (j.contains("degree")) {
    const auto d = as_int(j["degree"], "degree");
    if (d < 0 || d > 1000) fail("degree: must be in 0..1000");
    job.degree = static_cast<int>(d);
  }
  if (j.contains("beta")) job.beta = beta_from(int_array(j["beta"], "beta"));
  if (j.contains("stanley")) {
    auto v = int_array(j["stanley"], "stanley");
    if (v.size() != 4) fail("stanley: expected [a, b, c, d]");
    std::array<int, 4> abcd{};
    for (int i = 0; i < 4; ++i) {
      if (v[i] < 0 || v[i] > 1000) fail("stanley: entries must be in 0..1000");
      abcd[i] = static_cast<int>(v[i]);
    }
    job.stanley = abcd;
  }
  if (j.contains("command")) {
    if (!j["command"].is_string()) fail("command: expected a string");
    job.command = j["command"].get<std::string>();
  }
  if (j.contains("format")) {
    if (!j["format"].is_string()) fail("format: expected a string");
    job.format = format_from(j["format"].get<std::string>());
  }
  if (job.quiver && job.r.empty()) job.r.assign(job.quiver->size(), 0);
  validate(job);
  return job;
}

void apply_overrides(JobSpec& job, const Overrides& o) {
  if (o.command) job.command = *o.command;
  if (o.degree) {
    if (*o.degree < 0 || *o.degree > 1000) fail("degree: must be in 0..1000");
    job.degree = *o.degree;
  }
  if (o.format) job.format = format_from(*o.format);
  if (o.r) job.r = parse_int_list(*o.r, "r");
  if (o.beta) job.beta = beta_from(parse_int_list(*o.beta, "beta"));
  if (job.quiver && job.r.empty()) job.r.assign(job.quiver->size(), 0);
  validate(job);
}

void validate(const JobSpec& job) {
  if (!job.quiver) {
    if (!job.sequences.empty() || !job.r.empty() || job.beta) fail("n: missing");
    return;
  }
  const std::size_t n = job.quiver->size();
  for (std::size_t s = 0; s < job.sequences.size(); ++s) {
    const std::string field = s == 0 ? "sequence" : "sequence2";
    for (int v : job.sequences[s])
      if (v < 1 || static_cast<std::size_t>(v) > n)
        fail(field + ": vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
  }
  if (job.r.size() != n) fail("r: expected length " + std::to_string(n) + ", got " + std::to_string(job.r.size()));
  if (job.beta && job.beta->size() != n)
    fail("beta: expected length " + std::to_string(n) + ", got " + std::to_string(job.beta->size()));
}

}  // namespace qmut::cli
