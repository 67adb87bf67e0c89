#pragma once

// Independent brute-force Khovanov homology of a braid closure, for use as a
// test oracle. Builds the full resolution cube with union-find circle
// tracking and standard (-1)^(bits below) edge signs, entirely avoiding the
// production cobordism/composition machinery; homology comes from the dense
// SNF in this directory. Grading conventions match the production compiler:
//   positive letter: resolution I at bit 0 (qshift 1+bit), e at bit 1;
//   negative letter: resolution e at bit 0 (qshift -2+bit), I at bit 1;
//   hdeg(v) = sum over positive bits + sum over (negative bits - 1).

#include "support/z_homology.hpp"
#include "tlkh/compile.hpp"

#include <bit>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace tlkh::testsupport {

namespace cube_detail {

inline int find(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

struct Resolution {
  std::vector<int> circle_of;          // node -> circle index, -1 if unused
  int ncircles = 0;
  std::vector<std::pair<int, int>> site;  // per letter: cur strand nodes before it
};

/// Nodes: 0..n-1 are the bottom ends of the strands; letter e owns reserved
/// nodes n+2e, n+2e+1 for the outgoing arc of its e_i resolution, so node ids
/// are comparable between neighboring cube vertices.
inline Resolution resolve(const BraidWord& w, unsigned v) {
  const int n = w.strands;
  const int c = static_cast<int>(w.letters.size());
  const int nnodes = n + 2 * c;
  std::vector<int> parent(nnodes);
  for (int i = 0; i < nnodes; ++i) parent[i] = i;
  std::vector<bool> used(nnodes, false);
  std::vector<int> cur(n);
  for (int s = 0; s < n; ++s) {
    cur[s] = s;
    used[s] = true;
  }
  Resolution r;
  r.site.resize(c);
  for (int e = 0; e < c; ++e) {
    const int i = std::abs(w.letters[e]) - 1;
    r.site[e] = {cur[i], cur[i + 1]};
    const bool bit = (v >> e) & 1u;
    const bool eres = w.letters[e] > 0 ? bit : !bit;
    if (eres) {
      parent[find(parent, cur[i])] = find(parent, cur[i + 1]);
      const int a = n + 2 * e, b = a + 1;
      used[a] = used[b] = true;
      parent[find(parent, a)] = find(parent, b);
      cur[i] = a;
      cur[i + 1] = b;
    }
  }
  for (int s = 0; s < n; ++s) parent[find(parent, cur[s])] = find(parent, s);
  r.circle_of.assign(nnodes, -1);
  for (int u = 0; u < nnodes; ++u) {
    if (!used[u]) continue;
    const int root = find(parent, u);
    if (r.circle_of[root] == -1) r.circle_of[root] = r.ncircles++;
    r.circle_of[u] = r.circle_of[root];
  }
  return r;
}

inline int hdeg_of(const BraidWord& w, unsigned v) {
  int h = 0;
  for (size_t e = 0; e < w.letters.size(); ++e)
    h += static_cast<int>((v >> e) & 1u) - (w.letters[e] < 0 ? 1 : 0);
  return h;
}

inline int qshift_of(const BraidWord& w, unsigned v) {
  int q = 0;
  for (size_t e = 0; e < w.letters.size(); ++e)
    q += static_cast<int>((v >> e) & 1u) + (w.letters[e] > 0 ? 1 : -2);
  return q;
}

}  // namespace cube_detail

/// Full resolution-cube chain complex of the round closure of w, split by
/// quantum degree (label 1 contributes +1, X contributes -1, plus the vertex
/// q-shift). Generators are HomGen{vertex, 0, labeling}.
inline ZComplex kh_cube(const BraidWord& w) {
  using namespace cube_detail;
  w.check();
  const int c = static_cast<int>(w.letters.size());
  if (c > 20) throw std::invalid_argument("kh_cube: word too long for brute force");
  const unsigned nv = 1u << c;
  std::vector<Resolution> res(nv);
  for (unsigned v = 0; v < nv; ++v) res[v] = resolve(w, v);

  ZComplex z;
  std::map<std::pair<unsigned, Labeling>, std::tuple<int, int, int>> index;
  for (unsigned v = 0; v < nv; ++v) {
    const int h = hdeg_of(w, v);
    const int qs = qshift_of(w, v);
    for (Labeling mask = 0; mask < (1u << res[v].ncircles); ++mask) {
      const int q = qs + res[v].ncircles - 2 * std::popcount(mask);
      auto& bucket = z.gens[q][h];
      index.emplace(std::pair{v, mask},
                    std::tuple{q, h, static_cast<int>(bucket.size())});
      bucket.push_back({static_cast<int>(v), 0, mask});
    }
  }
  for (auto& [q, by_h] : z.gens)
    for (auto& [h, gens] : by_h) z.diff[q][h] = SparseMat(static_cast<int>(gens.size()), z.dim(q, h + 1));

  const int n = w.strands;
  for (unsigned v = 0; v < nv; ++v) {
    const Resolution& rv = res[v];
    for (int e = 0; e < c; ++e) {
      if ((v >> e) & 1u) continue;
      const unsigned vp = v | (1u << e);
      const Resolution& rt = res[vp];
      const Int sign = std::popcount(v & ((1u << e) - 1)) % 2 == 0 ? 1 : -1;
      const bool src_has_e = w.letters[e] < 0;  // bit 0 is the e_i resolution iff negative
      const auto [s1, s2] = rv.site[e];
      const int a_node = n + 2 * e;

      // Participating circles on the source side and targets on the other.
      bool is_merge = rt.ncircles == rv.ncircles - 1;
      int p1, p2 = -1, t1, t2 = -1;
      if (src_has_e) {
        p1 = rv.circle_of[s1];
        p2 = rv.circle_of[a_node];
      } else {
        p1 = rv.circle_of[s1];
        p2 = rv.circle_of[s2];
      }
      if (is_merge) {
        if (p1 == p2) throw std::logic_error("kh_cube: merge with one participant");
        t1 = rt.circle_of[s1];
      } else {
        if (p1 != p2) throw std::logic_error("kh_cube: split with two participants");
        t1 = rt.circle_of[s1];
        t2 = src_has_e ? rt.circle_of[s2] : rt.circle_of[a_node];
        if (t1 == t2) throw std::logic_error("kh_cube: split with one output");
      }
      // Transport of non-participating circles by shared nodes.
      std::vector<int> carry(rv.ncircles, -1);
      for (int u = 0; u < static_cast<int>(rv.circle_of.size()); ++u) {
        if (u == a_node || u == a_node + 1) continue;
        if (rv.circle_of[u] == -1 || rt.circle_of[u] == -1) continue;
        const int cv = rv.circle_of[u];
        if (cv == p1 || cv == p2) continue;
        carry[cv] = rt.circle_of[u];
      }

      for (Labeling mask = 0; mask < (1u << rv.ncircles); ++mask) {
        auto [q, h, row] = index.at({v, mask});
        Labeling base = 0;
        for (int cv = 0; cv < rv.ncircles; ++cv)
          if (carry[cv] >= 0 && ((mask >> cv) & 1u)) base |= 1u << carry[cv];
        auto emit = [&](Labeling tmask, const Int& coeff) {
          auto [tq, th, col] = index.at({vp, tmask});
          if (tq != q || th != h + 1) throw std::logic_error("kh_cube: degree bookkeeping");
          z.diff[q][h].add(row, col, coeff);
        };
        const bool x1 = (mask >> p1) & 1u;
        if (is_merge) {
          const bool x2 = (mask >> p2) & 1u;
          if (x1 && x2) continue;  // X.X = 0
          emit(base | ((x1 || x2) ? (1u << t1) : 0u), sign);
        } else {
          if (x1) {
            emit(base | (1u << t1) | (1u << t2), sign);  // X -> X X
          } else {
            emit(base | (1u << t2), sign);  // 1 -> 1 X + X 1
            emit(base | (1u << t1), sign);
          }
        }
      }
    }
  }
  return z;
}

/// Brute-force closure homology: the oracle against the production pipeline.
inline std::map<std::pair<int, int>, ZHomGroup> kh_closure_brute(const BraidWord& w) {
  return z_homology(kh_cube(w));
}

}  // namespace tlkh::testsupport
