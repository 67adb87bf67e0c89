#include "tlkh/simplify.hpp"

#include "tlkh/homology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <tuple>
#include <utility>
#include <vector>

namespace tlkh {

namespace {

FlatTangle stripped(FlatTangle t) {
  t.circles = 0;
  return t;
}

// Inclusion of the copy selected by mask into the circled object. Circle k
// with mask bit 0 is the q^{+1} copy (plain birth going in, dotted death
// going out); bit 1 is the q^{-1} copy (dotted birth, plain death). The two
// families are biorthogonal and sum to the identity by neck-cutting, which is
// what makes the conjugated differential a homotopy equivalence.
CobMorphism deloop_in(const FlatTangle& orig, Labeling mask) {
  FlatTangle cur = stripped(orig);
  CobMorphism m = CobMorphism::identity(cur);
  for (int k = 0; k < orig.circles; ++k) {
    CobMorphism step = CobMorphism::cup_circle(cur, k, (mask >> k) & 1u);
    m = compose(m, step);
    cur = step.tgt();
  }
  return m;
}

CobMorphism deloop_out(const FlatTangle& orig, Labeling mask) {
  FlatTangle cur = orig;
  CobMorphism m = CobMorphism::identity(cur);
  for (int k = orig.circles - 1; k >= 0; --k) {
    CobMorphism step = CobMorphism::cap_circle(cur, k, ((mask >> k) & 1u) == 0);
    m = compose(m, step);
    cur = step.tgt();
  }
  return m;
}

}  // namespace

Complex deloop(const Complex& c, bool check) {
  const std::vector<ComplexObj>& objs = c.objects();
  bool any = false;
  for (const ComplexObj& o : objs)
    if (o.diag.circles > 0) any = true;
  if (!any) return c;

  std::vector<int> base(objs.size() + 1, 0);
  for (size_t i = 0; i < objs.size(); ++i)
    base[i + 1] = base[i] + (1 << objs[i].diag.circles);

  std::vector<ComplexObj> nobjs;
  nobjs.reserve(base.back());
  std::vector<std::vector<CobMorphism>> in_maps(objs.size()), out_maps(objs.size());
  for (size_t i = 0; i < objs.size(); ++i) {
    const int nc = objs[i].diag.circles;
    for (Labeling mu = 0; mu < (1u << nc); ++mu) {
      nobjs.push_back({stripped(objs[i].diag),
                       objs[i].qshift + nc - 2 * std::popcount(mu), objs[i].hdeg});
      in_maps[i].push_back(deloop_in(objs[i].diag, mu));
      out_maps[i].push_back(deloop_out(objs[i].diag, mu));
    }
  }

  Complex::EntryMap nd;
  for (const auto& [ij, f] : c.differential()) {
    const auto [i, j] = ij;
    for (size_t mu = 0; mu < in_maps[i].size(); ++mu) {
      const CobMorphism mid = compose(in_maps[i][mu], f);
      for (size_t nu = 0; nu < out_maps[j].size(); ++nu) {
        CobMorphism e = compose(mid, out_maps[j][nu]);
        if (!e.is_zero())
          nd.emplace(std::pair{base[i] + static_cast<int>(mu), base[j] + static_cast<int>(nu)},
                     std::move(e));
      }
    }
  }
  return Complex(c.bottom(), c.top(), std::move(nobjs), std::move(nd), check);
}

Complex gauss_eliminate(const Complex& c, bool check) {
  const std::vector<ComplexObj>& objs = c.objects();
  const int n = static_cast<int>(objs.size());
  std::vector<char> alive(n, 1);
  std::vector<std::map<int, CobMorphism>> out(n), in(n);
  for (const auto& [ij, f] : c.differential()) {
    out[ij.first].emplace(ij.second, f);
    in[ij.second].emplace(ij.first, f);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::tie(objs[a].hdeg, objs[a].qshift, a) < std::tie(objs[b].hdeg, objs[b].qshift, b);
  });

  std::map<FlatTangle, CobMorphism> id_cache;
  const auto id_of = [&](const FlatTangle& t) -> const CobMorphism& {
    auto it = id_cache.find(t);
    if (it == id_cache.end()) it = id_cache.emplace(t, CobMorphism::identity(t)).first;
    return it->second;
  };

  for (;;) {
    int pi = -1, pj = -1;
    Int eps = 0;
    for (int i : order) {
      if (!alive[i] || out[i].empty()) continue;
      std::vector<int> targets;
      targets.reserve(out[i].size());
      for (const auto& [j, f] : out[i]) targets.push_back(j);
      std::sort(targets.begin(), targets.end(), [&](int a, int b) {
        return std::tie(objs[a].qshift, a) < std::tie(objs[b].qshift, b);
      });
      for (int j : targets) {
        if (objs[i].diag != objs[j].diag || objs[i].qshift != objs[j].qshift) continue;
        const CobMorphism& f = out[i].at(j);
        const CobMorphism& id = id_of(objs[i].diag);
        if (f == id) {
          pi = i, pj = j, eps = 1;
        } else if (f == -id) {
          pi = i, pj = j, eps = -1;
        }
        if (pi >= 0) break;
      }
      if (pi >= 0) break;
    }
    if (pi < 0) break;

    std::map<int, CobMorphism> fan_in = in[pj], fan_out = out[pi];
    fan_in.erase(pi);
    fan_out.erase(pj);
    for (int v : {pi, pj}) {
      for (const auto& [t, f] : out[v]) in[t].erase(v);
      for (const auto& [s, f] : in[v]) out[s].erase(v);
      out[v].clear();
      in[v].clear();
      alive[v] = 0;
    }

    // the cancelled entry is eps * id, so the zig-zag through it contributes
    // eps * (gamma after beta) which has to be subtracted from d
    for (const auto& [k, beta] : fan_in) {
      for (const auto& [l, gamma] : fan_out) {
        const CobMorphism corr = compose(beta, gamma) * eps;
        const auto it = out[k].find(l);
        CobMorphism upd = (it != out[k].end()) ? it->second - corr : -corr;
        if (upd.is_zero()) {
          if (it != out[k].end()) {
            out[k].erase(it);
            in[l].erase(k);
          }
        } else {
          out[k][l] = upd;
          in[l][k] = std::move(upd);
        }
      }
    }
  }

  std::vector<int> remap(n, -1);
  std::vector<ComplexObj> nobjs;
  for (int i = 0; i < n; ++i) {
    if (!alive[i]) continue;
    remap[i] = static_cast<int>(nobjs.size());
    nobjs.push_back(objs[i]);
  }
  Complex::EntryMap nd;
  for (int i = 0; i < n; ++i)
    for (const auto& [j, f] : out[i]) nd.emplace(std::pair{remap[i], remap[j]}, f);
  return Complex(c.bottom(), c.top(), std::move(nobjs), std::move(nd), check);
}

Complex simplify_full(const Complex& c, bool check) {
  // gauss_eliminate never creates circles and deloop leaves a circle-free
  // complex alone, so one pass of each reaches the fixpoint
  return gauss_eliminate(deloop(c, check), check);
}

bool is_acyclic_in_window(const Complex& c, int q_lo, int q_hi) {
  if (c.objects().empty()) return true;
  for (const FlatTangle& b : enumerate_flat(c.bottom(), c.top())) {
    const ZComplex z = hom_complex(Complex::single(b), c);
    if (!homology(z, q_lo, q_hi).entries.empty()) return false;
  }
  return true;
}

}  // namespace tlkh
