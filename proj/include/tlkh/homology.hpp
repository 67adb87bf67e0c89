#pragma once

#include "tlkh/complexes.hpp"
#include "tlkh/ints.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tlkh {

/// One homology group: free rank plus torsion recorded as prime powers
/// (an invariant factor 12 contributes 4 and 3), sorted ascending.
struct HomologyGroup {
  long long free_rank = 0;
  std::vector<Int> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;
};

/// Bigraded abelian group indexed by (homological degree i, quantum degree
/// q). Trivial entries are omitted.
struct BigradedGroup {
  std::map<std::pair<int, int>, HomologyGroup> entries;

  bool operator==(const BigradedGroup&) const = default;
  /// {"q": {"i": {"free": r, "torsion": [..]}}}, grades as decimal string
  /// keys in increasing numeric order.
  std::string to_json() const;
};

/// Prime-power factorization of n > 1, ascending (12 -> {3, 4}).
std::vector<Int> prime_power_factors(Int n);

/// Exact integral homology of every (q, i) block of an integer-matrix
/// complex, via sparse Smith normal form.
BigradedGroup homology(const ZComplex& z);

/// Same, restricted to quantum degrees in [q_lo, q_hi].
BigradedGroup homology(const ZComplex& z, int q_lo, int q_hi);

/// Homology of a closed complex (empty boundary), computed from its pairing
/// with the empty diagram. Throws std::invalid_argument on a complex with
/// boundary: such a complex has no preferred basis presentation, pair it
/// against test objects and use the ZComplex overload instead.
BigradedGroup homology(const Complex& c);

/// The sub-table of entries with quantum degree in [q_lo, q_hi].
BigradedGroup restricted(const BigradedGroup& g, int q_lo, int q_hi);

/// Entry-wise regrading (i, q) -> (i + di, q + dq).
BigradedGroup shifted(const BigradedGroup& g, int di, int dq);

/// Bivariate Poincare polynomial as (i, q) -> coefficient. p == 0 gives free
/// ranks over Z; a prime p gives F_p dimensions via universal coefficients
/// (a p-power torsion class in degree i contributes at both i and i-1).
std::map<std::pair<int, int>, Int> poincare(const BigradedGroup& h, int p = 0);

/// Graded Euler characteristic over Z: sum of (-1)^i free_rank q^q.
Laurent euler_characteristic(const BigradedGroup& h);

}  // namespace tlkh
