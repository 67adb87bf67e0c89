#include "tlkh/hochschild.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <tuple>

namespace tlkh {

namespace {

/// Matrix of a morphism between closed diagrams in the labeling basis,
/// evaluated by composing each basis state (a labeled birth of the source's
/// circles) with the morphism.
PlatBimodule::MaskMat to_mask_mat(const CobMorphism& f) {
  const FlatTangle none = FlatTangle::identity(0);
  PlatBimodule::MaskMat out;
  const int circles = f.src().circles;
  for (Labeling l = 0; l < (Labeling(1) << circles); ++l) {
    CobMorphism img = compose(CobMorphism::from_labeling(none, f.src(), l, 1), f);
    for (const auto& [l2, coeff] : img.terms())
      if (coeff != 0) out[{l, l2}] = coeff;
  }
  return out;
}

int mask_qdeg(int circles, Labeling mask) { return circles - 2 * std::popcount(mask); }

}  // namespace

PlatBimodule extract_plat_bimodule(const Complex& c) {
  if (c.bottom() != 2 || c.top() != 2)
    throw std::invalid_argument("extract_plat_bimodule: needs a (2,2) complex");
  const FlatTangle cup = FlatTangle::cup(), cap = FlatTangle::cap();
  Complex p = tensor_v(Complex::single(cup), tensor_v(c, Complex::single(cap)));

  PlatBimodule m;
  for (size_t k = 0; k < p.objects().size(); ++k) {
    const ComplexObj& o = p.objects()[k];
    const ComplexObj& co = c.objects()[k];
    if (o.qshift != co.qshift || o.hdeg != co.hdeg)
      throw std::runtime_error("extract_plat_bimodule: plat object out of step");
    m.objects.push_back({o.qshift, o.hdeg, o.diag.circles});
    CobMorphism idv = CobMorphism::identity(co.diag);
    CobMorphism xlv =
        vstack(CobMorphism::identity(cup), vstack(idv, CobMorphism::dot(cap, 0)));
    CobMorphism xrv =
        vstack(CobMorphism::dot(cup, 0), vstack(idv, CobMorphism::identity(cap)));
    if (!(xlv.src() == o.diag) || !(xlv.tgt() == o.diag) || !(xrv.src() == o.diag))
      throw std::runtime_error("extract_plat_bimodule: action diagram out of step");
    m.xl.push_back(to_mask_mat(xlv));
    m.xr.push_back(to_mask_mat(xrv));
  }
  for (const auto& [vw, f] : p.differential()) m.d[vw] = to_mask_mat(f);
  return m;
}

BigradedGroup hh_small_resolution(const PlatBimodule& m, int n_trunc) {
  if (n_trunc < 1) throw std::invalid_argument("hh_small_resolution: need n_trunc >= 1");
  ZComplex z;
  // generator (t, v, mask) encoded as HomGen{c_obj = t, d_obj = v, label = mask}
  std::map<std::tuple<int, int, Labeling>, int> index;
  auto grade = [&](int t, int v, Labeling mask) {
    return std::pair<int, int>{(2 * t - 1) + m.objects[v].qshift +
                                   mask_qdeg(m.objects[v].circles, mask),
                               t + m.objects[v].hdeg};
  };
  for (int t = 1; t <= n_trunc; ++t)
    for (int v = 0; v < static_cast<int>(m.objects.size()); ++v)
      for (Labeling mask = 0; mask < (Labeling(1) << m.objects[v].circles); ++mask) {
        auto [q, h] = grade(t, v, mask);
        auto& slot = z.gens[q][h];
        index[{t, v, mask}] = static_cast<int>(slot.size());
        slot.push_back(HomGen{t, v, mask});
      }
  for (const auto& [q, byh] : z.gens)
    for (const auto& [h, gens] : byh) {
      int cols = z.dim(q, h + 1);
      if (cols == 0) continue;
      SparseMat mat(static_cast<int>(gens.size()), cols);
      for (int r = 0; r < static_cast<int>(gens.size()); ++r) {
        const HomGen& g = gens[r];
        const int t = g.c_obj, v = g.d_obj;
        const Labeling mask = g.label;
        const int sign_v = m.objects[v].hdeg % 2 ? -1 : 1;
        auto target = [&](int t2, int v2, Labeling mask2) {
          if (grade(t2, v2, mask2) != std::pair<int, int>{q, h + 1})
            throw std::runtime_error("hh_small_resolution: entry drops out of (q, h + 1)");
          return index.at({t2, v2, mask2});
        };
        // vertical: the tangle differential, unsigned
        for (const auto& [vw, dm] : m.d) {
          if (vw.first != v) continue;
          for (const auto& [masks, coeff] : dm)
            if (masks.first == mask) mat.add(r, target(t, vw.second, masks.second), coeff);
        }
        // horizontal: xl -+ xr toward t+1, Koszul sign from the tangle degree
        if (t < n_trunc) {
          auto put = [&](const PlatBimodule::MaskMat& action, int s) {
            for (const auto& [masks, coeff] : action)
              if (masks.first == mask)
                mat.add(r, target(t + 1, v, masks.second), coeff * s);
          };
          put(m.xl[v], sign_v);
          put(m.xr[v], sign_v * (t % 2 ? -1 : 1));
        }
      }
      if (mat.nnz()) z.diff[q][h] = std::move(mat);
    }
  return homology(z);
}

namespace {

/// The unreduced two-sided cobar complex of the bimodule: term t >= 1 is
/// m x A^{x(t-1)} {t} at homological offset t, A-factor labels are formal
/// bits (1 = X). The t + 1 cofaces split one junction circle each: slot 0 is
/// the coaction at the cap (delta_0(m x w) = m x X x w + xl(m) x 1 x w, using
/// that comultiplying any circle is "dot there x 1 + keep x X"), middle slots
/// comultiply an A-factor, the top slot is the coaction at the cup (xr, new
/// factor appended). Alternating coface signs plus the product Koszul sign
/// from the tangle degree; the assembled differential is checked to square
/// to zero.
ZComplex cobar_complex(const PlatBimodule& m, int n_trunc) {
  ZComplex z;
  const int nv = static_cast<int>(m.objects.size());
  // generator (t, v, mask | word << circles_v); word bit j-1 is the j-th
  // A-factor counted from the tangle
  std::map<std::tuple<int, int, Labeling>, int> index;
  auto grade = [&](int t, int v, Labeling packed) {
    const int circ = m.objects[v].circles;
    const Labeling mask = packed & ((Labeling(1) << circ) - 1);
    const Labeling word = packed >> circ;
    return std::pair<int, int>{m.objects[v].qshift + mask_qdeg(circ, mask) +
                                   ((t - 1) - 2 * std::popcount(word)) + t,
                               t + m.objects[v].hdeg};
  };
  for (int t = 1; t <= n_trunc; ++t)
    for (int v = 0; v < nv; ++v)
      for (Labeling packed = 0; packed < (Labeling(1) << (m.objects[v].circles + t - 1));
           ++packed) {
        auto [q, h] = grade(t, v, packed);
        auto& slot = z.gens[q][h];
        index[{t, v, packed}] = static_cast<int>(slot.size());
        slot.push_back(HomGen{t, v, packed});
      }
  auto insert_bit = [](Labeling word, int pos, int bit) {
    const Labeling low = word & ((Labeling(1) << pos) - 1);
    return low | (Labeling(bit) << pos) | ((word >> pos) << (pos + 1));
  };
  for (const auto& [q, byh] : z.gens)
    for (const auto& [h, gens] : byh) {
      int cols = z.dim(q, h + 1);
      if (cols == 0) continue;
      SparseMat mat(static_cast<int>(gens.size()), cols);
      for (int r = 0; r < static_cast<int>(gens.size()); ++r) {
        const auto [t, v, packed] = std::tuple{gens[r].c_obj, gens[r].d_obj, gens[r].label};
        const int circ = m.objects[v].circles;
        const Labeling mask = packed & ((Labeling(1) << circ) - 1);
        const Labeling word = packed >> circ;
        const int sign_v = m.objects[v].hdeg % 2 ? -1 : 1;
        auto target = [&](int t2, int v2, Labeling packed2, Int coeff) {
          if (coeff == 0) return;
          if (grade(t2, v2, packed2) != std::pair<int, int>{q, h + 1})
            throw std::runtime_error("cobar_complex: entry drops out of (q, h + 1)");
          mat.add(r, index.at({t2, v2, packed2}), coeff);
        };
        // vertical: the tangle differential on the m factor
        for (const auto& [vw, dm] : m.d) {
          if (vw.first != v) continue;
          const int circ_w = m.objects[vw.second].circles;
          for (const auto& [masks, coeff] : dm)
            if (masks.first == mask)
              target(t, vw.second, masks.second | (word << circ_w), coeff);
        }
        if (t == n_trunc) continue;
        // slot 0: m x X x w  +  xl(m) x 1 x w
        target(t + 1, v, mask | (insert_bit(word, 0, 1) << circ), sign_v);
        for (const auto& [masks, coeff] : m.xl[v])
          if (masks.first == mask)
            target(t + 1, v, masks.second | (insert_bit(word, 0, 0) << circ), coeff * sign_v);
        // middle slot j splits A-factor j: a x X + (X a) x 1
        for (int j = 1; j <= t - 1; ++j) {
          const int s = sign_v * (j % 2 ? -1 : 1);
          const int bit = (word >> (j - 1)) & 1;
          target(t + 1, v, mask | (insert_bit(word, j, 1) << circ), s);
          if (bit == 0)  // X . 1 = X; X . X = 0
            target(t + 1, v,
                   mask | ((insert_bit(word, j, 0) | (Labeling(1) << (j - 1))) << circ), s);
        }
        // top slot: m x w x X  +  xr(m) x w x 1
        const int s_top = sign_v * (t % 2 ? -1 : 1);
        target(t + 1, v, mask | (insert_bit(word, t - 1, 1) << circ), s_top);
        for (const auto& [masks, coeff] : m.xr[v])
          if (masks.first == mask)
            target(t + 1, v, masks.second | (insert_bit(word, t - 1, 0) << circ),
                   coeff * s_top);
      }
      if (mat.nnz()) z.diff[q][h] = std::move(mat);
    }
  // insurance: the assembled integer differential squares to zero
  for (const auto& [q, byh] : z.diff)
    for (const auto& [h, mat] : byh) {
      auto next = byh.find(h + 1);
      if (next == byh.end()) continue;
      SparseMat sq = mat * next->second;
      if (sq.nnz()) throw std::runtime_error("cobar_complex: d^2 != 0");
    }
  return z;
}

std::string bidegree_text(std::pair<int, int> iq) {
  return "(i=" + std::to_string(iq.first) + ", q=" + std::to_string(iq.second) + ")";
}

/// First bidegree where the two tables differ; entries both present and equal
/// are skipped. Assumes a != b.
std::pair<int, int> first_mismatch(const BigradedGroup& a, const BigradedGroup& b) {
  for (const auto& [iq, g] : a.entries) {
    auto it = b.entries.find(iq);
    if (it == b.entries.end() || !(it->second == g)) return iq;
  }
  for (const auto& [iq, g] : b.entries)
    if (!a.entries.count(iq)) return iq;
  return {0, 0};
}

void require_22(const TangleWord& w, const char* who) {
  if (w.bottom != 2 || w.top() != 2)
    throw std::invalid_argument(std::string(who) + ": needs a (2,2) tangle word");
}

}  // namespace

BigradedGroup hh_via_p20(const TangleWord& w, int q_lo, int q_hi, int L) {
  require_22(w, "hh_via_p20");
  if (L < 1) throw std::invalid_argument("hh_via_p20: need L >= 1");
  if (q_lo > q_hi) return {};
  Complex t = tangle_complex(w);
  auto run = [&](int len) {
    return restricted(homology(closure(tensor_v(t, p20_zigzag(len)))), q_lo, q_hi);
  };
  BigradedGroup a = run(L);
  if (!(a == run(L + 2)))
    throw std::runtime_error("hh_via_p20: window [" + std::to_string(q_lo) + ", " +
                             std::to_string(q_hi) + "] too wide for truncation L=" +
                             std::to_string(L));
  return a;
}

BigradedGroup hh_via_bar(const TangleWord& w, int n_trunc, int q_lo, int q_hi) {
  require_22(w, "hh_via_bar");
  if (n_trunc < 0) throw std::invalid_argument("hh_via_bar: negative truncation");
  if (q_lo > q_hi) return {};
  const int n = n_trunc ? n_trunc : (q_hi - q_lo) + 2;
  Complex t = tangle_complex(w);
  PlatBimodule m = extract_plat_bimodule(t);
  BigradedGroup small = restricted(hh_small_resolution(m, n), q_lo, q_hi);
  if (!(small == restricted(hh_small_resolution(m, n + 2), q_lo, q_hi)))
    throw std::runtime_error("hh_via_bar: window [" + std::to_string(q_lo) + ", " +
                             std::to_string(q_hi) + "] not stabilized at truncation " +
                             std::to_string(n));
  // Truncating the bar tower at height n is exact below homological degree
  // n + min hdeg; above it the missing cofaces leave junk in every q row, so
  // the cross-check runs on the exact range only.
  int h_min = m.objects[0].hdeg;
  for (const auto& o : m.objects) h_min = std::min(h_min, o.hdeg);
  auto below_cut = [cut = n + h_min](const BigradedGroup& g) {
    BigradedGroup out;
    for (const auto& [iq, grp] : g.entries)
      if (iq.first < cut) out.entries.emplace(iq, grp);
    return out;
  };
  BigradedGroup bar = below_cut(restricted(homology(cobar_complex(m, n)), q_lo, q_hi));
  if (!(bar == below_cut(small)))
    throw std::runtime_error("hh_via_bar: bar and small resolution disagree at " +
                             bidegree_text(first_mismatch(bar, below_cut(small))));
  return small;
}

long long hh0_coinvariant_rank(const TangleWord& w) {
  require_22(w, "hh0_coinvariant_rank");
  Complex t = tangle_complex(w);
  PlatBimodule m = extract_plat_bimodule(t);
  for (const auto& o : m.objects)
    if (o.hdeg != m.objects[0].hdeg)
      throw std::invalid_argument(
          "hh0_coinvariant_rank: tangle complex not concentrated in one degree");
  std::vector<int> offset(m.objects.size() + 1, 0);
  for (size_t v = 0; v < m.objects.size(); ++v)
    offset[v + 1] = offset[v] + (1 << m.objects[v].circles);
  SparseMat commutator(offset.back(), offset.back());
  for (size_t v = 0; v < m.objects.size(); ++v) {
    for (const auto& [masks, coeff] : m.xl[v])
      commutator.add(offset[v] + static_cast<int>(masks.first),
                     offset[v] + static_cast<int>(masks.second), coeff);
    for (const auto& [masks, coeff] : m.xr[v])
      commutator.add(offset[v] + static_cast<int>(masks.first),
                     offset[v] + static_cast<int>(masks.second), -coeff);
  }
  return offset.back() - rank_z(commutator);
}

S1S2Report s1s2_invariance_report(const TangleWord& t1, const TangleWord& t2, int q_lo,
                                  int q_hi, int L) {
  S1S2Report rep;
  rep.q_lo = q_lo;
  rep.q_hi = q_hi;
  rep.left = hh_via_p20(t1, q_lo, q_hi, L);
  rep.right = hh_via_p20(t2, q_lo, q_hi, L);
  rep.raw_agree = true;
  for (int q = q_lo; q <= q_hi; ++q) {
    bool same = restricted(rep.left, q, q) == restricted(rep.right, q, q);
    rep.rows.push_back({"q=" + std::to_string(q), same, ""});
    if (!same) {
      rep.raw_agree = false;
      rep.exceptional.push_back(q);
    }
  }
  // best affine regrading of the right table on the shifted window overlap
  int best_score = -1;
  for (int dh = -6; dh <= 6; ++dh)
    for (int dq = -12; dq <= 12; ++dq) {
      int lo = q_lo + std::max(0, dq), hi = q_hi + std::min(0, dq);
      if (hi - lo < (q_hi - q_lo) / 2) continue;  // demand a meaningful overlap
      BigradedGroup moved = shifted(rep.right, dh, dq);
      int score = 0;
      bool all = true;
      for (int q = lo; q <= hi; ++q) {
        if (restricted(rep.left, q, q) == restricted(moved, q, q))
          ++score;
        else
          all = false;
      }
      int cost = std::abs(dh) + std::abs(dq);
      int best_cost = std::abs(rep.best_dh) + std::abs(rep.best_dq);
      if (score > best_score || (score == best_score && cost < best_cost)) {
        best_score = score;
        rep.best_dh = dh;
        rep.best_dq = dq;
        rep.normalized_agree = all;
      }
    }
  return rep;
}

}  // namespace tlkh
