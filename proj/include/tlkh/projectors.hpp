#pragma once

#include "tlkh/compile.hpp"
#include "tlkh/complexes.hpp"
#include "tlkh/homology.hpp"

#include <map>
#include <string>
#include <vector>

namespace tlkh {

/// Stable range mu(j) for the n-strand twist tower: with m0 = ceil(j/2)
/// decomposed as n*k0 + r0 (0 <= r0 < n, floored division), mu = m0 +
/// min(r0, n - r0). The closure homology of the normalized k-fold twist at
/// quantum degree j is independent of k once k >= mu(j).
long long stable_range(int n, long long j);

/// Minimal q-shift bound B_{m+1} = m + n*k + 1 - n (with m = n*k + r,
/// 0 <= r < n) over the cells of the cone between the normalized m- and
/// (m+1)-fold fractional twists. Monotone increasing in m for fixed n.
long long cone_bound(int n, long long m);

/// Result of sliding the turnback e_i through the m = n*k + r fold
/// fractional twist on n strands: the turnback comes out at position
/// i_prime = (i + r) mod n, an (n-2)-strand twist of power inner_m =
/// (n-2)*k + r_prime survives between the two turnbacks, and the complex
/// picks up a total shift of q^{q_shift} with q_shift = 6k(n-1) + s.
struct TurnbackSlide {
  int i_prime = 0;
  long long r_prime = 0;
  long long s = 0;
  long long q_shift = 0;
  long long inner_m = 0;

  bool operator==(const TurnbackSlide&) const = default;
};

/// The three-case table: i < n-r gives (r_prime, s) = (r, 3r); i == n-r
/// gives (r-1, 3r); i > n-r gives (r-2, 3(n+r-2)). Requires 0 < i < n.
TurnbackSlide turnback_slide(int n, long long m, int i);

/// Length-L truncation of the standard zigzag model of the 2-strand
/// projector: the identity object at (q^0, h 0) followed by turnback objects
/// e_1 at (q^{2t-1}, h t) for t = 1..L-1. The first differential is the
/// saddle; after that the differentials alternate between the difference and
/// the sum of the two one-dotted identity cobordisms on e_1.
Complex p2_zigzag(int L);

/// The turnback-only companion zigzag: e_1 objects at (q^{2t-1}, h t) for
/// t = 1..L with the same alternating dotted differentials (difference
/// first). Equivalent to the cone of the projection of the 2-strand
/// projector onto its identity object, shifted into h >= 1.
Complex p20_zigzag(int L);

/// The normalized k-fold fractional twist complex q^{-k(n-1)} T_n^k on n
/// strands (right-handed crossings). With simplified = true the tensor is
/// folded one crossing at a time with delooping and elimination in between,
/// so the object count stays small; otherwise the raw 2^{k(n-1)}-object cube
/// is returned.
Complex twist_stage(int n, int k, bool simplified = true);

/// Fully reduced closure of twist_stage(n, k): every strand traced, then
/// delooped and eliminated down to a complex with no circles and no unit
/// differential entries.
Complex twist_stage_closure(int n, int k);

/// Integral homology of twist_stage_closure(n, k). Results are cached per
/// (n, k) for the lifetime of the process; safe to call concurrently.
BigradedGroup twist_closure_homology(int n, int k);

/// A truncated tower of projector approximations: stages[j] is the
/// normalized complex for index ks[j], maps[j] is the connecting chain map
/// stages[j+1] -> stages[j] (projection of the newest letters onto their
/// identity resolution; validated, degree (0, 0)), and stable_meta records
/// the stabilization bound mu(q) for quantum degrees the tower can certify.
struct Tower {
  int n = 0;
  std::vector<int> ks;
  std::vector<Complex> stages;
  std::vector<ChainMap> maps;
  std::map<long long, long long> stable_meta;
};

/// Twist tower on n strands with stages k = 0..depth, stage k being the
/// unsimplified q^{-k(n-1)} T_n^k. The connecting map collapses the top
/// fractional twist of stage k+1 to its all-identity resolution.
Tower twist_tower(int n, int depth);

/// Crossing-by-crossing filtration tower of the augmented Jucys-Murphy
/// construction on three strands: stage i is q^{-i} (P_2 || I_1) * J_3^{<i>}
/// where J_3^{<i>} keeps the top i crossings of a power of the Jucys-Murphy
/// braid and the inner 2-strand projector is truncated at length inner_L.
/// Stage 0 is P_2 || I_1; stage 2(n-1) = 4 is the first full augmented
/// power. The connecting map collapses the newest (bottom-most) crossing.
Tower ck_tower(int depth, int inner_L);

/// Stable homology of the n-strand infinite twist closure on the quantum
/// window [q_lo, q_hi]: for each q the closure homology of
/// twist_stage(n, k) with k = max(0, mu(q + n)) + safety is computed,
/// verified to agree with stage k+1 in degree q, and reported. (The + n
/// accounts for closure circles lowering the degree of an open cell by up
/// to n.) A verification failure throws std::runtime_error naming q and k.
/// threads > 1 computes the distinct stages concurrently; the result is
/// identical either way.
BigradedGroup stable_kh(int n, int q_lo, int q_hi, int safety = 0, int threads = 1);

/// Outcome of one named verification, with a human-readable detail line on
/// failure (first offending bidegree or group mismatch).
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Window-restricted projector-axiom checks for an (n, n) complex C
/// (n = 2 or 3): (a) C * e_i and e_i * C are acyclic in the window for every
/// turnback; (b) closure(C * C) has the closure homology of C; (c) closure
/// absorbs a crossing as q^{+1} (right-handed) and q^{-1} (left-handed);
/// (d) closure(C * (P_{n-1} || I_1)) has the closure homology of C.
std::vector<CheckResult> verify_projector(const Complex& c, int q_lo, int q_hi);

/// Verifies Kh^{i,q} = Kh^{i+8,q+12} for the stable 3-strand twist closure,
/// for every populated q in [q_lo, q_hi] (odd degrees). Requires q_lo >= 7;
/// below that the periodicity is not asserted.
std::vector<CheckResult> periodicity_check(int q_lo, int q_hi, int safety = 0);

}  // namespace tlkh
