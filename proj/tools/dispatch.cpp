#include "dispatch.hpp"

#include "qmut/json_io.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

namespace qmut::cli {

namespace {

using io::Json;

struct Output {
  Json json;
  std::string text;
  int exit_code = kOk;
};

template <typename T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string matrix_text(const IntMatrix& m) {
  std::ostringstream os;
  for (const auto& row : m.to_rows()) os << "  " << join(row, " ") << "\n";
  return os.str();
}

const Quiver& need_quiver(const JobSpec& job) {
  if (!job.quiver) throw JobError("n: this command needs a quiver");
  return *job.quiver;
}

const MutationSequence& need_sequence(const JobSpec& job, std::size_t i) {
  if (job.sequences.size() <= i) throw JobError(i == 0 ? "sequence: missing" : "sequence2: missing");
  return job.sequences[i];
}

const Multidegree& need_beta(const JobSpec& job) {
  if (!job.beta) throw JobError("beta: missing");
  return *job.beta;
}

int exit_for(Status s) { return s == Status::Fail ? kVerificationFailed : kOk; }

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.claim << ": " << to_string(r.status) << " (" << r.elapsed_ms << " ms)\n";
  if (r.permutation) os << "  frozen isomorphism: " << join(*r.permutation, " ") << "\n";
  if (r.first_diff) {
    os << "  first difference at beta=(" << join(r.first_diff->beta) << ")\n"
       << "    lhs: " << r.first_diff->lhs << "\n"
       << "    rhs: " << r.first_diff->rhs << "\n";
  }
  for (const auto& note : r.notes) os << "  note: " << note << "\n";
  return os.str();
}

Output cmd_mutate(const JobSpec& job) {
  const auto orbit = framed_orbit(need_quiver(job), need_sequence(job, 0));
  const IceQuiver& last = orbit.back();
  const IntMatrix b = last.principal_part().matrix();
  return {Json{{"B", io::to_json(b)}, {"Btilde", io::to_json(last.matrix())}},
          "B(T):\n" + matrix_text(b)};
}

Output cmd_cmatrix(const JobSpec& job) {
  const auto orbit = framed_orbit(need_quiver(job), need_sequence(job, 0));
  const IntMatrix c = orbit.back().c_matrix();
  return {Json{{"C", io::to_json(c)}}, "C(T):\n" + matrix_text(c)};
}

Output cmd_classify(const JobSpec& job) {
  const Classification c = classify_sequence(need_quiver(job), need_sequence(job, 0));
  std::ostringstream os;
  os << "signs:";
  for (Sign s : c.signs) os << " " << (s == Sign::Plus ? '+' : '-');
  os << "\ngreen: " << (c.is_green ? "yes" : "no") << "\nreddening: " << (c.is_reddening ? "yes" : "no")
     << "\nmaximal green: " << (c.is_maximal_green ? "yes" : "no") << "\n";
  return {io::to_json(c), os.str()};
}

Output cmd_trace(const JobSpec& job) {
  const MutationTrace tr = run_trace(need_quiver(job), need_sequence(job, 0));
  std::ostringstream os;
  for (std::size_t t = 0; t < tr.length(); ++t) {
    const auto& s = tr.steps[t];
    os << "t=" << t + 1 << " vertex " << s.vertex << " " << (s.sign == Sign::Plus ? '+' : '-') << " alpha=("
       << join(s.alpha) << ") kvee=" << s.kvee.to_string() << "\n";
  }
  return {io::trace_report(tr), os.str()};
}

Output cmd_zfun(const JobSpec& job) {
  const MutationTrace tr = run_trace(need_quiver(job), need_sequence(job, 0));
  const PartitionFunction z = partition_function(tr, job.r, job.degree);
  Json j = io::to_json(z.series);
  j["possibly_truncated"] = z.possibly_truncated;
  std::ostringstream os;
  for (const auto& [beta, c] : z.series.terms()) os << "y^(" << join(beta) << "): " << c << "\n";
  if (z.possibly_truncated) os << "(terms beyond degree " << job.degree << " may exist)\n";
  return {std::move(j), os.str()};
}

Output cmd_coeff(const JobSpec& job) {
  const MutationTrace tr = run_trace(need_quiver(job), need_sequence(job, 0));
  const LaurentPoly c = coefficient(tr, job.r, need_beta(job));
  return {io::to_json(c), c.to_string() + "\n"};
}

Output cmd_thm1(const JobSpec& job) {
  const auto rep = theorem1_check(need_quiver(job), need_sequence(job, 0), job.r, job.degree);
  return {io::to_json(rep), report_text(rep), exit_for(rep.status)};
}

Output cmd_thm2(const JobSpec& job) {
  const auto rep =
      theorem2_check(need_quiver(job), need_sequence(job, 0), need_sequence(job, 1), job.r, job.degree);
  return {io::to_json(rep), report_text(rep), exit_for(rep.status)};
}

Output cmd_identity(const JobSpec& job) {
  const auto id = render_identity(need_quiver(job), need_sequence(job, 0), need_sequence(job, 1), job.r,
                                  need_beta(job));
  return {io::to_json(id), to_text(id), id.holds() ? kOk : kVerificationFailed};
}

Output cmd_stanley(const JobSpec& job) {
  if (job.stanley) {
    const auto& [a, b, c, d] = *job.stanley;
    const auto rep = stanley_check(a, b, c, d);
    return {io::to_json(rep), report_text(rep), exit_for(rep.status)};
  }
  const auto start = std::chrono::steady_clock::now();
  Json failures = Json::array();
  std::string text;
  int instances = 0;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c)
        for (int d = 0; d <= 4; ++d, ++instances) {
          const auto rep = stanley_check(a, b, c, d);
          if (rep.passed()) continue;
          failures.push_back(io::to_json(rep));
          text += report_text(rep);
        }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  const Status status = failures.empty() ? Status::Pass : Status::Fail;
  Json j{{"claim", "stanley"},
         {"status", to_string(status)},
         {"first_diff", failures.empty() ? Json(nullptr) : failures[0]["first_diff"]},
         {"elapsed_ms", ms.count()},
         {"instances", instances},
         {"failures", std::move(failures)}};
  text = "stanley: " + to_string(status) + " (" + std::to_string(instances) + " instances, " +
         std::to_string(ms.count()) + " ms)\n" + text;
  return {std::move(j), text, exit_for(status)};
}

const std::map<std::string, std::function<Output(const JobSpec&)>>& commands() {
  static const std::map<std::string, std::function<Output(const JobSpec&)>> table{
      {"mutate", cmd_mutate},       {"cmatrix", cmd_cmatrix},   {"classify", cmd_classify},
      {"trace", cmd_trace},         {"zfun", cmd_zfun},         {"coeff", cmd_coeff},
      {"verify-thm1", cmd_thm1},    {"verify-thm2", cmd_thm2},  {"identity", cmd_identity},
      {"stanley", cmd_stanley},
  };
  return table;
}

}  // namespace

DispatchResult dispatch(const JobSpec& job) {
  DispatchResult res;
  const auto it = commands().find(job.command);
  if (it == commands().end()) {
    res.exit_code = kInputError;
    res.diagnostics = job.command.empty() ? "command: missing" : "command: unknown command \"" + job.command + "\"";
    return res;
  }
  try {
    Output out = it->second(job);
    res.exit_code = out.exit_code;
    res.output = job.format == Format::Json ? out.json.dump() + "\n" : out.text;
  } catch (const MixedSignError& e) {
    res.exit_code = kVerificationFailed;
    res.diagnostics = e.what();
  } catch (const JobError& e) {
    res.exit_code = kInputError;
    res.diagnostics = e.what();
  } catch (const NotApplicableError& e) {
    res.exit_code = kInputError;
    res.diagnostics = std::string("not applicable: ") + e.what();
  } catch (const std::invalid_argument& e) {
    res.exit_code = kInputError;
    res.diagnostics = e.what();
  } catch (const std::out_of_range& e) {
    res.exit_code = kInputError;
    res.diagnostics = e.what();
  } catch (const std::overflow_error& e) {
    res.exit_code = kInputError;
    res.diagnostics = e.what();
  } catch (const std::exception& e) {
    res.exit_code = kVerificationFailed;
    res.diagnostics = std::string("internal error: ") + e.what();
  }
  return res;
}

}  // namespace qmut::cli
