#pragma once

#include "qmut/qcoeff.hpp"
#include "qmut/quiver.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace qmut::testing {

// 1 -> 2
inline Quiver a2() { return Quiver::from_arrows(2, {{1, 2}}); }
// 1 -> 2 <- 3
inline Quiver a3() { return Quiver::from_arrows(3, {{1, 2}, {3, 2}}); }
// Level-2 restricted B2 periodicity quiver.
inline Quiver b2() {
  return Quiver::from_arrows(5, {{3, 5}, {5, 2}, {2, 3}, {2, 1}, {4, 2}, {1, 5}});
}

inline const MutationSequence kA2m{1, 2};
inline const MutationSequence kA2mp{2, 1, 2};
inline const MutationSequence kA3m{1, 3, 2};
inline const MutationSequence kA3mp{2, 1, 3, 2, 1, 3};
inline const MutationSequence kB2m{1, 3, 4, 2, 1, 3, 5, 2};
inline const MutationSequence kB2mp{2, 1, 3, 5, 2, 1, 3, 4, 2, 1, 3, 5};

/// c_0 + c_1 v^step + c_2 v^(2 step) + ... shifted by v^low.
inline LaurentPoly dense(std::initializer_list<long> c, int low = 0, int step = 1) {
  std::vector<std::pair<int, Integer>> t;
  int e = low;
  for (long x : c) {
    t.emplace_back(e, Integer(x));
    e += step;
  }
  return LaurentPoly::from_terms(t);
}

/// Polynomial in q = v^2 with coefficients c_0, c_1, ...
inline LaurentPoly q_poly(std::initializer_list<long> c, int low_q = 0) {
  return dense(c, 2 * low_q, 2);
}

inline LaurentPoly a3_degree17() {
  return q_poly({1, 3, 7, 13, 22, 32, 42, 50, 55, 55, 50, 42, 32, 22, 13, 7, 3, 1});
}

/// Strips blanks and TeX primes/underscores: "-k'_{1} + r_{2}" -> "-k1+r2".
inline std::string squash(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '_' && c != '{' && c != '}' && c != '\'') out += c;
  return out;
}

}  // namespace qmut::testing
