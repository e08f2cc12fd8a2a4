#pragma once

// JSON encodings of the library's values. Object keys keep insertion order so
// output is byte-for-byte deterministic.
//
//   LaurentPoly  {"-2":1,"0":1,"2":1}   keys are v-exponents, ascending.
//                Coefficients outside int64 are written as decimal strings.
//   Series       {"cutoff":D,"terms":[{"beta":[..],"num":{..},"den":{..}},..]}
//                terms sorted by total degree, then lexicographically.
//   Report       {"claim":..,"status":"pass|fail|not-applicable",
//                 "first_diff":{"beta":[..],"lhs":{..},"rhs":{..}}|null,
//                 "elapsed_ms":..,...}

#include "qmut/qcoeff.hpp"
#include "qmut/quiver.hpp"
#include "qmut/torus.hpp"
#include "qmut/trace.hpp"
#include "qmut/verify.hpp"

#include <nlohmann/json.hpp>

namespace qmut::io {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& x);
Integer integer_from_json(const Json& j);

Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

/// A Laurent polynomial when the denominator is 1, else {"num":..,"den":..}.
Json to_json(const RationalV& x);
RationalV rational_from_json(const Json& j);

Json to_json(const Series& s);
/// The skew form is not part of the encoding and must be supplied.
Series series_from_json(const Json& j, SkewFormPtr form);

Json to_json(const IntMatrix& m);
Json to_json(const LinForm& f);
Json to_json(const Classification& c);
/// {"steps":[{"t","vertex","sign","alpha","kvee_form":{"k","r"}}],"s_table":[[..]]}
Json trace_report(const MutationTrace& tr);
Json to_json(const VerificationReport& r);
Json to_json(const RenderedIdentity& id);

}  // namespace qmut::io
