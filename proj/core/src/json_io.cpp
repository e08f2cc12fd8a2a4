#include "qmut/json_io.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace qmut::io {

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

Json to_json(const LaurentPoly& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = to_json(c);
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("Laurent polynomial must be a JSON object");
  std::vector<std::pair<int, Integer>> terms;
  for (const auto& [key, val] : j.items()) {
    std::size_t pos = 0;
    const int e = std::stoi(key, &pos);
    if (pos != key.size()) throw std::invalid_argument("bad exponent key: " + key);
    terms.emplace_back(e, integer_from_json(val));
  }
  return LaurentPoly::from_terms(terms);
}

Json to_json(const RationalV& x) {
  if (x.is_laurent()) return to_json(x.num());
  return Json{{"num", to_json(x.num())}, {"den", to_json(x.den())}};
}

RationalV rational_from_json(const Json& j) {
  if (j.is_object() && j.contains("num") && j.contains("den"))
    return RationalV(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
  return RationalV(laurent_from_json(j));
}

Json to_json(const Series& s) {
  Json terms = Json::array();
  for (const auto& [beta, c] : s.terms())
    terms.push_back(Json{{"beta", beta}, {"num", to_json(c.num())}, {"den", to_json(c.den())}});
  return Json{{"cutoff", s.cutoff()}, {"terms", std::move(terms)}};
}

Series series_from_json(const Json& j, SkewFormPtr form) {
  Series s(std::move(form), j.at("cutoff").get<int>());
  for (const auto& t : j.at("terms")) {
    auto beta = t.at("beta").get<Multidegree>();
    if (beta.size() != s.nvars()) throw std::invalid_argument("series term has wrong arity");
    s.add_term(beta, RationalV(laurent_from_json(t.at("num")), laurent_from_json(t.at("den"))));
  }
  return s;
}

Json to_json(const IntMatrix& m) { return Json(m.to_rows()); }

Json to_json(const LinForm& f) { return Json{{"k", f.k}, {"r", f.r}}; }

Json to_json(const Classification& c) {
  Json signs = Json::array();
  for (Sign s : c.signs) signs.push_back(to_int(s));
  return Json{{"signs", std::move(signs)},
              {"is_green", c.is_green},
              {"is_reddening", c.is_reddening},
              {"is_maximal_green", c.is_maximal_green}};
}

Json trace_report(const MutationTrace& tr) {
  Json steps = Json::array();
  for (std::size_t t = 0; t < tr.length(); ++t) {
    const auto& s = tr.steps[t];
    steps.push_back(Json{{"t", t + 1},
                         {"vertex", s.vertex},
                         {"sign", to_int(s.sign)},
                         {"alpha", s.alpha},
                         {"kvee_form", to_json(s.kvee)}});
  }
  Json table = Json::array();
  for (const auto& row : tr.s_table) {
    Json jr = Json::array();
    for (const auto& f : row) jr.push_back(to_json(f));
    table.push_back(std::move(jr));
  }
  return Json{{"steps", std::move(steps)}, {"s_table", std::move(table)}};
}

Json to_json(const VerificationReport& r) {
  Json out{{"claim", r.claim}, {"status", to_string(r.status)}};
  if (r.first_diff) {
    out["first_diff"] = Json{{"beta", r.first_diff->beta},
                             {"lhs", to_json(r.first_diff->lhs)},
                             {"rhs", to_json(r.first_diff->rhs)}};
  } else {
    out["first_diff"] = nullptr;
  }
  out["elapsed_ms"] = r.elapsed_ms;
  Json params = Json::object();
  if (r.quiver) params["B"] = to_json(*r.quiver);
  if (!r.sequences.empty()) params["sequences"] = r.sequences;
  if (!r.r.empty()) params["r"] = r.r;
  if (r.degree) params["degree"] = *r.degree;
  if (r.stanley) params["abcd"] = *r.stanley;
  out["parameters"] = std::move(params);
  if (r.permutation) out["permutation"] = *r.permutation;
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

namespace {

Json side_json(const IdentitySide& side) {
  Json terms = Json::array();
  for (const auto& t : side.terms) {
    Json factors = Json::array();
    for (const auto& f : t.factors)
      factors.push_back(Json{{"upper", f.upper},
                             {"upper_expr", f.upper_expr},
                             {"lower", f.lower},
                             {"eps", to_int(f.eps)}});
    terms.push_back(Json{{"k", t.k},
                         {"q_half_power", t.q_half_power},
                         {"factors", std::move(factors)},
                         {"value", to_json(t.value)}});
  }
  return Json{{"sequence", side.sequence},
              {"constraints", side.constraints},
              {"terms", std::move(terms)},
              {"value", to_json(side.value)}};
}

}  // namespace

Json to_json(const RenderedIdentity& id) {
  return Json{{"beta", id.beta},
              {"r", id.r},
              {"permutation", id.permutation},
              {"lhs", side_json(id.lhs)},
              {"rhs", side_json(id.rhs)},
              {"normalized", to_json(normalized(id.lhs.value))},
              {"holds", id.holds()}};
}

}  // namespace qmut::io
