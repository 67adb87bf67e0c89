#include "tlkh/projectors.hpp"

#include "tlkh/simplify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace tlkh {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  long long r = a % b;
  return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

}  // namespace

long long stable_range(int n, long long j) {
  if (n < 1) throw std::invalid_argument("stable_range: need n >= 1");
  // m0 = ceil(j/2) = floor((j+1)/2), then m0 = n*k0 + r0 with 0 <= r0 < n.
  long long m0 = floor_div(j + 1, 2);
  long long k0 = floor_div(m0, n);
  long long r0 = m0 - n * k0;
  return m0 + std::min(r0, n - r0);
}

long long cone_bound(int n, long long m) {
  if (n < 1 || m < 0) throw std::invalid_argument("cone_bound: need n >= 1, m >= 0");
  long long k = m / n;
  return m + n * k + 1 - n;
}

TurnbackSlide turnback_slide(int n, long long m, int i) {
  if (n < 2 || m < 0) throw std::invalid_argument("turnback_slide: need n >= 2, m >= 0");
  if (i <= 0 || i >= n) throw std::invalid_argument("turnback_slide: need 0 < i < n");
  long long k = m / n;
  long long r = m - n * k;
  TurnbackSlide out;
  out.i_prime = static_cast<int>((i + r) % n);
  if (i < n - r) {
    out.r_prime = r;
    out.s = 3 * r;
  } else if (i == n - r) {
    out.r_prime = r - 1;
    out.s = 3 * r;
  } else {
    out.r_prime = r - 2;
    out.s = 3 * (n + r - 2);
  }
  out.q_shift = 6 * k * (n - 1) + out.s;
  out.inner_m = (n - 2) * k + out.r_prime;
  return out;
}

namespace {

// The alternating dotted differential e_1 -> e_1 out of zigzag slot t: the
// dots sit on the top arc (boundary point 2) and bottom arc (point 0) of the
// turnback; odd slots take the difference, even slots the sum, so that
// consecutive arrows compose to zero (the two dots agree after the saddle,
// and a repeated dot vanishes).
CobMorphism zigzag_arrow(const FlatTangle& e1, int t) {
  CobMorphism top = CobMorphism::dot(e1, 2);
  CobMorphism bot = CobMorphism::dot(e1, 0);
  return (t % 2 != 0) ? top - bot : top + bot;
}

}  // namespace

Complex p2_zigzag(int L) {
  if (L < 1) throw std::invalid_argument("p2_zigzag: need L >= 1");
  FlatTangle id2 = FlatTangle::identity(2);
  FlatTangle e1 = FlatTangle::turnback(2, 1);
  std::vector<ComplexObj> objs;
  objs.push_back({id2, 0, 0});
  for (int t = 1; t < L; ++t) objs.push_back({e1, 2 * t - 1, t});
  Complex::EntryMap diff;
  if (L >= 2) diff.emplace(std::pair{0, 1}, CobMorphism::saddle(id2, e1));
  for (int t = 1; t + 1 < L; ++t) diff.emplace(std::pair{t, t + 1}, zigzag_arrow(e1, t));
  return Complex(2, 2, std::move(objs), std::move(diff));
}

Complex p20_zigzag(int L) {
  if (L < 1) throw std::invalid_argument("p20_zigzag: need L >= 1");
  FlatTangle e1 = FlatTangle::turnback(2, 1);
  std::vector<ComplexObj> objs;
  for (int t = 1; t <= L; ++t) objs.push_back({e1, 2 * t - 1, t});
  Complex::EntryMap diff;
  for (int t = 1; t < L; ++t) diff.emplace(std::pair{t - 1, t}, zigzag_arrow(e1, t));
  return Complex(2, 2, std::move(objs), std::move(diff));
}

namespace {

// Folds the word one crossing at a time, delooping and eliminating after
// each letter so intermediate complexes stay small.
Complex scan_simplify_word(const BraidWord& w) {
  w.check();
  Complex acc = Complex::single(FlatTangle::identity(w.strands));
  for (int letter : w.letters) {
    acc = tensor_v(acc, crossing_complex(w.strands, std::abs(letter), letter > 0 ? 1 : -1), false);
    acc = simplify_full(acc, false);
  }
  return acc;
}

Complex reduce_closure(Complex c) {
  while (c.bottom() > 0) c = simplify_full(partial_trace(c), false);
  return c;
}

}  // namespace

Complex twist_stage(int n, int k, bool simplified) {
  BraidWord w = torus_braid(n, k).mirrored();
  Complex c = simplified ? scan_simplify_word(w) : braid_complex(w);
  return c.shifted(-k * (n - 1), 0);
}

Complex twist_stage_closure(int n, int k) { return reduce_closure(twist_stage(n, k, true)); }

namespace {

std::map<std::pair<int, int>, BigradedGroup> g_twist_cache;
std::mutex g_twist_mutex;

}  // namespace

BigradedGroup twist_closure_homology(int n, int k) {
  {
    std::lock_guard<std::mutex> lock(g_twist_mutex);
    auto it = g_twist_cache.find({n, k});
    if (it != g_twist_cache.end()) return it->second;
  }
  BigradedGroup h = homology(twist_stage_closure(n, k));
  std::lock_guard<std::mutex> lock(g_twist_mutex);
  return g_twist_cache.emplace(std::pair{n, k}, std::move(h)).first->second;
}

Tower twist_tower(int n, int depth) {
  if (n < 2 || depth < 0) throw std::invalid_argument("twist_tower: need n >= 2, depth >= 0");
  Tower tw;
  tw.n = n;
  for (int k = 0; k <= depth; ++k) {
    tw.ks.push_back(k);
    tw.stages.push_back(twist_stage(n, k, false));
  }
  // Stage k+1 appends one fractional twist at the top of the word, i.e. the
  // n-1 least significant cube bits. Projecting them onto the all-identity
  // resolution (which nothing maps into, since differentials only raise
  // bits) is a chain map, and the q^{+1} of each identity resolution cancels
  // the normalization difference exactly.
  for (int k = 0; k < depth; ++k) {
    const int low = (1 << (n - 1)) - 1;
    const auto& src = tw.stages[k + 1].objects();
    std::map<std::pair<int, int>, CobMorphism> entries;
    for (int v = 0; v < static_cast<int>(src.size()); ++v) {
      if ((v & low) != 0) continue;
      entries.emplace(std::pair{v, v >> (n - 1)}, CobMorphism::identity(src[v].diag));
    }
    ChainMap f{tw.stages[k + 1], tw.stages[k], std::move(entries), 0, 0};
    f.validate();
    tw.maps.push_back(std::move(f));
  }
  for (long long q = -n; q <= -n + 2LL * depth * (n - 1); ++q)
    tw.stable_meta[q] = stable_range(n, q);
  return tw;
}

Tower ck_tower(int depth, int inner_L) {
  if (depth < 0 || inner_L < 1)
    throw std::invalid_argument("ck_tower: need depth >= 0, inner_L >= 1");
  const int n = 3;
  BraidWord jm = jm_braid(n).mirrored();
  const int per = static_cast<int>(jm.letters.size());
  std::vector<int> full;
  for (int rep = 0; rep < (depth + per - 1) / per; ++rep)
    full.insert(full.end(), jm.letters.begin(), jm.letters.end());
  Complex base = disjoint_union(p2_zigzag(inner_L), Complex::single(FlatTangle::identity(1)));

  Tower tw;
  tw.n = n;
  for (int i = 0; i <= depth; ++i) {
    BraidWord trunc;
    trunc.strands = n;
    trunc.letters.assign(full.end() - i, full.end());
    tw.ks.push_back(i);
    tw.stages.push_back(tensor_v(base, braid_complex(trunc), false).shifted(-i, 0));
  }
  // Stage i+1 prepends one crossing at the bottom of the truncated braid,
  // the most significant of its i+1 cube bits; project it onto its identity
  // resolution, as for the twist tower.
  for (int i = 0; i < depth; ++i) {
    const int jbits = 1 << (i + 1);
    const int high = 1 << i;
    const auto& src = tw.stages[i + 1].objects();
    std::map<std::pair<int, int>, CobMorphism> entries;
    for (int idx = 0; idx < static_cast<int>(src.size()); ++idx) {
      int b = idx / jbits;
      int v = idx % jbits;
      if ((v & high) != 0) continue;
      entries.emplace(std::pair{idx, b * high + v}, CobMorphism::identity(src[idx].diag));
    }
    ChainMap f{tw.stages[i + 1], tw.stages[i], std::move(entries), 0, 0};
    f.validate();
    tw.maps.push_back(std::move(f));
  }
  for (long long q = -n; q <= -n + 2LL * depth; ++q) tw.stable_meta[q] = stable_range(n, q);
  return tw;
}

BigradedGroup stable_kh(int n, int q_lo, int q_hi, int safety, int threads) {
  if (n < 2) throw std::invalid_argument("stable_kh: need n >= 2");
  if (q_hi < q_lo) throw std::invalid_argument("stable_kh: empty window");
  if (safety < 0 || threads < 1)
    throw std::invalid_argument("stable_kh: need safety >= 0, threads >= 1");
  // Closure homology of an n-strand diagram lives in q = n (mod 2) only.
  std::map<int, int> stage_for;
  std::vector<int> needed;
  for (int q = q_lo; q <= q_hi; ++q) {
    if (((q - n) % 2 + 2) % 2 != 0) continue;
    // Closure circles can lower the quantum degree of an open cell by up to
    // n, so closure homology at degree q needs the open tower stable through
    // degree q + n.
    int k = static_cast<int>(std::max<long long>(0, stable_range(n, q + n))) + safety;
    stage_for[q] = k;
    needed.push_back(k);
    needed.push_back(k + 1);
  }
  std::sort(needed.begin(), needed.end(), std::greater<>());
  needed.erase(std::unique(needed.begin(), needed.end()), needed.end());
  if (threads > 1 && needed.size() > 1) {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min<int>(threads, static_cast<int>(needed.size())); ++t)
      pool.emplace_back([&] {
        for (size_t j; (j = next.fetch_add(1)) < needed.size();)
          twist_closure_homology(n, needed[j]);
      });
    for (auto& th : pool) th.join();
  }
  BigradedGroup out;
  for (auto [q, k] : stage_for) {
    BigradedGroup a = restricted(twist_closure_homology(n, k), q, q);
    BigradedGroup b = restricted(twist_closure_homology(n, k + 1), q, q);
    if (!(a == b)) {
      std::ostringstream os;
      os << "stable_kh: stabilization check failed at q=" << q << " between stages k=" << k
         << " and k=" << k + 1;
      throw std::runtime_error(os.str());
    }
    for (auto& [key, grp] : a.entries) out.entries[key] = grp;
  }
  return out;
}

namespace {

std::string group_text(const HomologyGroup& g) {
  std::ostringstream os;
  bool first = true;
  if (g.free_rank > 0) {
    os << "Z";
    if (g.free_rank > 1) os << "^" << g.free_rank;
    first = false;
  }
  for (const auto& t : g.torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

// First bidegree where the two tables disagree, as a detail line.
std::string first_mismatch(const BigradedGroup& a, const BigradedGroup& b) {
  std::map<std::pair<int, int>, std::pair<HomologyGroup, HomologyGroup>> merged;
  for (const auto& [key, grp] : a.entries) merged[key].first = grp;
  for (const auto& [key, grp] : b.entries) merged[key].second = grp;
  for (const auto& [key, pair] : merged) {
    if (pair.first == pair.second) continue;
    std::ostringstream os;
    os << "mismatch at (i=" << key.first << ", q=" << key.second
       << "): " << group_text(pair.first) << " vs " << group_text(pair.second);
    return os.str();
  }
  return "";
}

// lhs restricted to the window, against rhs regraded by (di, dq).
CheckResult compare_windowed(std::string name, const BigradedGroup& lhs, const BigradedGroup& rhs,
                             int di, int dq, int q_lo, int q_hi) {
  BigradedGroup a = restricted(lhs, q_lo, q_hi);
  BigradedGroup b = restricted(shifted(rhs, di, dq), q_lo, q_hi);
  if (a == b) return {std::move(name), true, ""};
  return {std::move(name), false, first_mismatch(a, b)};
}

// First nonvanishing Hom-homology bidegree against any test diagram, inside
// the window; nullopt when acyclic there.
std::optional<std::pair<int, int>> first_homology_in_window(const Complex& c, int q_lo, int q_hi) {
  for (const auto& b : enumerate_flat(c.bottom(), c.top())) {
    BigradedGroup h = homology(hom_complex(Complex::single(b), c), q_lo, q_hi);
    if (!h.entries.empty()) return h.entries.begin()->first;
  }
  return std::nullopt;
}

}  // namespace

std::vector<CheckResult> verify_projector(const Complex& c, int q_lo, int q_hi) {
  if (c.bottom() != c.top())
    throw std::invalid_argument("verify_projector: need an (n, n) complex");
  const int n = c.top();
  if (n < 2 || n > 3) throw std::invalid_argument("verify_projector: supported for n = 2, 3");
  std::vector<CheckResult> out;
  Complex base = simplify_full(c, false);
  BigradedGroup closure_h = homology(reduce_closure(base));

  for (int i = 1; i < n; ++i) {
    Complex ei = Complex::single(FlatTangle::turnback(n, i));
    for (int side = 0; side < 2; ++side) {
      Complex t = side == 0 ? tensor_v(base, ei, false) : tensor_v(ei, base, false);
      auto bad = first_homology_in_window(simplify_full(t, false), q_lo, q_hi);
      std::ostringstream nm;
      nm << "kills-turnbacks e" << i << (side == 0 ? " above" : " below");
      std::string detail;
      if (bad) {
        std::ostringstream os;
        os << "nonzero group at (i=" << bad->first << ", q=" << bad->second << ")";
        detail = os.str();
      }
      out.push_back({nm.str(), !bad.has_value(), detail});
    }
  }

  {
    Complex sq = simplify_full(tensor_v(base, base, false), false);
    out.push_back(compare_windowed("idempotence-on-closure", homology(reduce_closure(sq)),
                                   closure_h, 0, 0, q_lo, q_hi));
  }

  for (int i = 1; i < n; ++i) {
    for (int sign : {+1, -1}) {
      Complex t = simplify_full(tensor_v(base, crossing_complex(n, i, sign), false), false);
      std::ostringstream nm;
      nm << "absorbs-crossing s" << i << (sign > 0 ? "+ as q^+1" : "- as q^-1");
      out.push_back(compare_windowed(nm.str(), homology(reduce_closure(t)), closure_h, 0, sign,
                                     q_lo, q_hi));
    }
  }

  {
    // Absorbing the smaller projector: P_1 is the single strand, and P_2 is
    // realized by a zigzag long enough to cover the window.
    Complex smaller = n == 2
                          ? Complex::single(FlatTangle::identity(2))
                          : disjoint_union(p2_zigzag(std::max(2, (q_hi + 7) / 2)),
                                           Complex::single(FlatTangle::identity(1)));
    Complex t = simplify_full(tensor_v(base, smaller, false), false);
    out.push_back(compare_windowed("absorbs-smaller-projector", homology(reduce_closure(t)),
                                   closure_h, 0, 0, q_lo, q_hi));
  }
  return out;
}

std::vector<CheckResult> periodicity_check(int q_lo, int q_hi, int safety) {
  if (q_lo < 7) throw std::invalid_argument("periodicity_check: window must sit in q >= 7");
  if (q_hi < q_lo) throw std::invalid_argument("periodicity_check: empty window");
  std::vector<CheckResult> out;
  for (int q = q_lo; q <= q_hi; ++q) {
    if (q % 2 == 0) continue;
    BigradedGroup a = stable_kh(3, q, q, safety);
    BigradedGroup b = stable_kh(3, q + 12, q + 12, safety);
    std::ostringstream nm;
    nm << "periodicity (i, " << q << ") -> (i+8, " << q + 12 << ")";
    out.push_back(compare_windowed(nm.str(), b, a, 8, 12, q + 12, q + 12));
  }
  return out;
}

}  // namespace tlkh
