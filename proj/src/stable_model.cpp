#include "tlkh/stable_model.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace tlkh {

namespace {

/// Monomial u_1^{e[1]} ... u_n^{e[n]} xi_S with e[1] <= 1; S a bitmask over
/// generator indices.
struct Mono {
  std::vector<int> e;
  std::uint32_t xi = 0;

  bool operator<(const Mono& o) const { return std::tie(e, xi) < std::tie(o.e, o.xi); }
};

std::pair<int, int> bidegree(const TwistDga& dga, const Mono& m) {
  int h = 0, q = 0;
  for (int i = 1; i <= dga.n; ++i) {
    h += m.e[i] * TwistDga::u_bidegree(i).first;
    q += m.e[i] * TwistDga::u_bidegree(i).second;
  }
  for (int i = dga.xi_lo(); i <= dga.xi_hi(); ++i)
    if (m.xi & (1u << i)) {
      h += TwistDga::xi_bidegree(i).first;
      q += TwistDga::xi_bidegree(i).second;
    }
  return {h, q};
}

/// All monomials with q <= q_hi, bucketed by (q, h).
void enumerate(const TwistDga& dga, int q_hi,
               std::map<std::pair<int, int>, std::vector<Mono>>& bucket,
               std::map<Mono, int>& pos) {
  std::vector<std::uint32_t> subsets{0};
  for (int i = dga.xi_lo(); i <= dga.xi_hi(); ++i) {
    size_t sz = subsets.size();
    for (size_t s = 0; s < sz; ++s) subsets.push_back(subsets[s] | (1u << i));
  }
  Mono m;
  m.e.assign(dga.n + 1, 0);
  // recursive choice of u-exponents, largest index first
  auto rec = [&](auto&& self, int i, int q_left) -> void {
    if (i == 0) {
      auto [h, q] = bidegree(dga, m);
      auto& b = bucket[{q, h}];
      pos.emplace(m, static_cast<int>(b.size()));
      b.push_back(m);
      return;
    }
    const int step = TwistDga::u_bidegree(i).second;
    const int top = i == 1 ? std::min(1, q_left / step) : q_left / step;
    for (int e = 0; e <= top; ++e) {
      m.e[i] = e;
      self(self, i - 1, q_left - e * step);
    }
    m.e[i] = 0;
  };
  for (std::uint32_t s : subsets) {
    m.xi = s;
    int q_xi = 0;
    for (int i = dga.xi_lo(); i <= dga.xi_hi(); ++i)
      if (s & (1u << i)) q_xi += TwistDga::xi_bidegree(i).second;
    if (q_xi <= q_hi) rec(rec, dga.n, q_hi - q_xi);
  }
}

}  // namespace

BigradedGroup twist_dga_homology(int n, int q_lo, int q_hi, bool include_top_xi) {
  if (n < 2) throw std::invalid_argument("twist_dga_homology: need n >= 2");
  if (q_lo > q_hi) return {};
  TwistDga dga{n, include_top_xi};
  std::map<std::pair<int, int>, std::vector<Mono>> bucket;
  std::map<Mono, int> pos;
  enumerate(dga, q_hi, bucket, pos);

  // the differential lowers h by one, so store buckets at -h to present the
  // homology engine with a raising differential
  ZComplex z;
  for (const auto& [qh, monos] : bucket)
    z.gens[qh.first][-qh.second].resize(monos.size());
  for (const auto& [qh, monos] : bucket) {
    const auto [q, h] = qh;
    auto lower = bucket.find({q, h - 1});
    if (lower == bucket.end()) continue;
    SparseMat mat(static_cast<int>(monos.size()), static_cast<int>(lower->second.size()));
    for (int r = 0; r < static_cast<int>(monos.size()); ++r) {
      const Mono& src = monos[r];
      int j = 0;  // Koszul sign: xi factors passed over, in ascending order
      for (int mgen = dga.xi_lo(); mgen <= dga.xi_hi(); ++mgen) {
        if (!(src.xi & (1u << mgen))) continue;
        const int sign = j % 2 ? -1 : 1;
        ++j;
        // d(xi_m) = sum_i u_i u_{m+1-i}; the symmetric pairs add up to 2
        for (int i = 1; i <= mgen; ++i) {
          Mono tgt = src;
          tgt.xi &= ~(1u << mgen);
          tgt.e[i] += 1;
          tgt.e[mgen + 1 - i] += 1;
          if (tgt.e[1] > 1) continue;  // u_1^2 = 0
          mat.add(r, pos.at(tgt), sign);
        }
      }
    }
    if (mat.nnz()) z.diff[q][-h] = std::move(mat);
  }
  // d^2 = 0 on the generated basis (u_1^2 = 0 makes it automatic; asserted)
  for (const auto& [q, byh] : z.diff)
    for (const auto& [h, mat] : byh) {
      auto next = byh.find(h + 1);
      if (next != byh.end() && (mat * next->second).nnz())
        throw std::runtime_error("twist_dga_homology: d^2 != 0");
    }
  BigradedGroup flipped = homology(z);
  BigradedGroup out;
  for (const auto& [iq, g] : flipped.entries)
    if (iq.second >= q_lo) out.entries.emplace(std::pair<int, int>{-iq.first, iq.second}, g);
  return out;
}

BigradedGroup retract_ranks(int n, int q_lo, int q_hi) {
  if (n < 2) throw std::invalid_argument("retract_ranks: need n >= 2");
  if (q_lo > q_hi) return {};
  TwistDga dga{n, /*include_top_xi=*/true};
  std::map<std::pair<int, int>, std::vector<Mono>> bucket;
  std::map<Mono, int> pos;
  enumerate(dga, q_hi, bucket, pos);
  BigradedGroup out;
  for (const auto& [qh, monos] : bucket)
    if (qh.first >= q_lo)
      out.entries[{qh.second, qh.first}].free_rank = static_cast<long long>(monos.size());
  return out;
}

namespace {

using Profile = std::map<int, long long>;  // h -> free rank, zero rows absent

Profile free_profile(const BigradedGroup& g, int q) {
  Profile p;
  for (const auto& [iq, grp] : g.entries)
    if (iq.second == q && grp.free_rank > 0) p[iq.first] = grp.free_rank;
  return p;
}

std::string group_text(const HomologyGroup& g) {
  std::string s = "Z^" + std::to_string(g.free_rank);
  for (const auto& t : g.torsion) s += "+Z/" + t.str();
  return s;
}

}  // namespace

StableMatchReport compare_to_stable(const BigradedGroup& model, const BigradedGroup& stable,
                                    const BigradedGroup& retract) {
  StableMatchReport r;
  if (model.entries.empty() || stable.entries.empty()) return r;

  std::set<int> populated;
  for (const auto& [iq, g] : model.entries)
    if (g.free_rank > 0) populated.insert(iq.second);
  for (int q : populated) {
    if (static_cast<int>(r.pinned_q.size()) == 3) break;
    r.pinned_q.push_back(q);
  }
  if (r.pinned_q.empty()) return r;

  // pin the transform (i, q) -> (eps * i + a, q + b) on the pinned rows,
  // preferring the smallest shift and eps = +1
  auto pin_ok = [&](int eps, int a, int b) {
    for (int q : r.pinned_q) {
      Profile want = free_profile(model, q), got;
      for (const auto& [h, rank] : free_profile(stable, q - b)) got[eps * h + a] = rank;
      if (want != got) return false;
    }
    return true;
  };
  std::tuple<int, int, int, int> best{};
  for (int eps : {1, -1})
    for (int a = -20; a <= 20; ++a)
      for (int b = -20; b <= 20; ++b)
        if (pin_ok(eps, a, b)) {
          std::tuple<int, int, int, int> key{std::abs(a) + std::abs(b), eps == 1 ? 0 : 1, a, b};
          if (!r.found || key < best) {
            best = key;
            r.found = true;
            r.eps = eps;
            r.a = a;
            r.b = b;
          }
        }
  if (!r.found) return r;

  const int s_qlo = stable.entries.begin()->first.second;
  int s_qhi = s_qlo, m_qlo = model.entries.begin()->first.second, m_qhi = m_qlo;
  for (const auto& [iq, g] : stable.entries) {
    s_qhi = std::max(s_qhi, iq.second);
  }
  for (const auto& [iq, g] : model.entries) {
    m_qlo = std::min(m_qlo, iq.second);
    m_qhi = std::max(m_qhi, iq.second);
  }
  int s_qlo2 = s_qlo;
  for (const auto& [iq, g] : stable.entries) s_qlo2 = std::min(s_qlo2, iq.second);
  r.q_lo = std::max(m_qlo, s_qlo2 + r.b);
  r.q_hi = std::min(m_qhi, s_qhi + r.b);

  // stable table in model coordinates, raw and with the universal-coefficient
  // torsion adjustment (cochain torsion at h belongs to model degree h - 1)
  BigradedGroup mapped, mapped_uct;
  for (const auto& [iq, g] : stable.entries) {
    std::pair<int, int> to{r.eps * iq.first + r.a, iq.second + r.b};
    mapped.entries[to].free_rank += g.free_rank;
    for (const auto& t : g.torsion) mapped.entries[to].torsion.push_back(t);
    mapped_uct.entries[to].free_rank += g.free_rank;
    std::pair<int, int> tto{r.eps * (iq.first - 1) + r.a, iq.second + r.b};
    for (const auto& t : g.torsion) mapped_uct.entries[tto].torsion.push_back(t);
  }
  for (auto* t : {&mapped, &mapped_uct})
    for (auto& [iq, g] : t->entries) std::sort(g.torsion.begin(), g.torsion.end());

  auto in_window = [&](int q) { return q >= r.q_lo && q <= r.q_hi; };
  auto compare = [&](const BigradedGroup& a, const BigradedGroup& b, bool record,
                     bool& free_ok, bool& tors_ok) {
    free_ok = tors_ok = true;
    std::set<std::pair<int, int>> keys;
    for (const auto& [iq, g] : a.entries)
      if (in_window(iq.second)) keys.insert(iq);
    for (const auto& [iq, g] : b.entries)
      if (in_window(iq.second)) keys.insert(iq);
    for (const auto& iq : keys) {
      static const HomologyGroup zero;
      auto ia = a.entries.find(iq), ib = b.entries.find(iq);
      const HomologyGroup& ga = ia == a.entries.end() ? zero : ia->second;
      const HomologyGroup& gb = ib == b.entries.end() ? zero : ib->second;
      if (ga.free_rank != gb.free_rank) free_ok = false;
      if (ga.torsion != gb.torsion) tors_ok = false;
      if (record && !(ga == gb))
        r.mismatches.push_back({"i=" + std::to_string(iq.first) +
                                    " q=" + std::to_string(iq.second),
                                false, group_text(ga) + " vs " + group_text(gb)});
    }
  };
  bool tors_raw = false, free_dummy = false, tors_uct = false;
  compare(model, mapped, /*record=*/true, r.free_agree, tors_raw);
  compare(model, mapped_uct, /*record=*/false, free_dummy, tors_uct);
  r.torsion_agree_raw = tors_raw;
  r.torsion_agree_uct = tors_uct;

  if (!retract.entries.empty()) {
    int w_qhi = retract.entries.begin()->first.second;
    for (const auto& [iq, g] : retract.entries) w_qhi = std::max(w_qhi, iq.second);
    for (const auto& [iq, g] : stable.entries) {
      if (g.free_rank == 0) continue;
      std::pair<int, int> to{r.eps * iq.first + r.a, iq.second + r.b};
      if (to.second > w_qhi) continue;  // ledger does not cover this bidegree
      auto it = retract.entries.find(to);
      long long cap = it == retract.entries.end() ? 0 : it->second.free_rank;
      if (g.free_rank > cap) {
        r.retract_bound_ok = false;
        r.retract_violations.push_back(
            {"i=" + std::to_string(to.first) + " q=" + std::to_string(to.second), false,
             "stable rank " + std::to_string(g.free_rank) + " exceeds retract rank " +
                 std::to_string(cap)});
      }
    }
  }
  return r;
}

}  // namespace tlkh
