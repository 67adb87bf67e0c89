#include "tlkh/frobcob.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tlkh {

Gluing glue(const FlatTangle& a, const FlatTangle& b) {
  if (a.bottom != b.bottom || a.top != b.top)
    throw std::invalid_argument("glue: boundary mismatch between diagrams");
  Gluing g;
  g.npoints = a.points();
  g.circle_of_point.assign(g.npoints, -1);
  int c = 0;
  for (int p = 0; p < g.npoints; ++p) {
    if (g.circle_of_point[p] != -1) continue;
    int cur = p;
    do {
      g.circle_of_point[cur] = c;
      cur = a.mate[cur];
      g.circle_of_point[cur] = c;
      cur = b.mate[cur];
    } while (cur != p);
    ++c;
  }
  g.nboundary = c;
  g.a_free_first = c;
  g.b_free_first = c + a.circles;
  g.ncircles = c + a.circles + b.circles;
  if (g.ncircles > 31)
    throw std::runtime_error("glue: more than 31 circles in one gluing is unsupported");
  return g;
}

CobMorphism::CobMorphism(FlatTangle src, FlatTangle tgt)
    : src_(std::move(src)), tgt_(std::move(tgt)) {
  ncircles_ = glue(src_, tgt_).ncircles;
}

void CobMorphism::add_term(Labeling mask, Int coeff) {
  if (coeff == 0) return;
  Int& c = terms_[mask];
  c += coeff;
  if (c == 0) terms_.erase(mask);
}

CobMorphism CobMorphism::identity(const FlatTangle& t) {
  CobMorphism m(t, t);
  Gluing g = glue(t, t);
  // Boundary circles carry 1; each carried circle pairs its source and target
  // copies through an annulus, contributing 1#X + X#1.
  std::vector<std::pair<Labeling, Int>> terms{{0u, Int(1)}};
  for (int i = 0; i < t.circles; ++i) {
    Labeling bs = 1u << (g.a_free_first + i), bt = 1u << (g.b_free_first + i);
    std::vector<std::pair<Labeling, Int>> next;
    next.reserve(terms.size() * 2);
    for (auto& [mask, c] : terms) {
      next.emplace_back(mask | bt, c);
      next.emplace_back(mask | bs, c);
    }
    terms = std::move(next);
  }
  for (auto& [mask, c] : terms) m.add_term(mask, c);
  return m;
}

CobMorphism CobMorphism::from_labeling(const FlatTangle& src, const FlatTangle& tgt, Labeling mask,
                                       Int coeff) {
  CobMorphism m(src, tgt);
  if (mask >= (1u << m.ncircles_))
    throw std::invalid_argument("from_labeling: mask out of range for gluing");
  m.add_term(mask, std::move(coeff));
  return m;
}

CobMorphism CobMorphism::saddle(const FlatTangle& src, const FlatTangle& tgt) {
  CobMorphism m = from_labeling(src, tgt, 0u, Int(1));
  if (m.qdeg() != -1)
    throw std::invalid_argument("saddle: diagrams do not differ by a single surgery");
  return m;
}

CobMorphism CobMorphism::dot(const FlatTangle& t, int boundary_point) {
  if (boundary_point < 0 || boundary_point >= t.points())
    throw std::invalid_argument("dot: boundary point out of range");
  Gluing g = glue(t, t);
  Labeling bit = 1u << g.circle_of_point[boundary_point];
  CobMorphism id = identity(t);
  CobMorphism m(t, t);
  for (const auto& [mask, c] : id.terms_) m.add_term(mask | bit, c);
  return m;
}

namespace {

/// Terms of the partial identity pairing src carried circle i with tgt
/// carried circle pair_of(i) for every i with pair_of(i) >= 0.
template <typename PairOf>
std::vector<std::pair<Labeling, Int>> copair_terms(const Gluing& g, int src_circles,
                                                   PairOf pair_of) {
  std::vector<std::pair<Labeling, Int>> terms{{0u, Int(1)}};
  for (int i = 0; i < src_circles; ++i) {
    int j = pair_of(i);
    if (j < 0) continue;
    Labeling bs = 1u << (g.a_free_first + i), bt = 1u << (g.b_free_first + j);
    std::vector<std::pair<Labeling, Int>> next;
    next.reserve(terms.size() * 2);
    for (auto& [mask, c] : terms) {
      next.emplace_back(mask | bt, c);
      next.emplace_back(mask | bs, c);
    }
    terms = std::move(next);
  }
  return terms;
}

}  // namespace

CobMorphism CobMorphism::cap_circle(const FlatTangle& src, int k, bool dotted) {
  if (k < 0 || k >= src.circles) throw std::invalid_argument("cap_circle: index out of range");
  FlatTangle tgt = src;
  tgt.circles -= 1;
  CobMorphism m(src, tgt);
  Gluing g = glue(src, tgt);
  auto pair_of = [&](int i) { return i == k ? -1 : (i < k ? i : i - 1); };
  Labeling capbit = dotted ? (1u << (g.a_free_first + k)) : 0u;
  for (auto& [mask, c] : copair_terms(g, src.circles, pair_of)) m.add_term(mask | capbit, c);
  return m;
}

CobMorphism CobMorphism::cup_circle(const FlatTangle& src, int k, bool dotted) {
  if (k < 0 || k > src.circles) throw std::invalid_argument("cup_circle: index out of range");
  FlatTangle tgt = src;
  tgt.circles += 1;
  CobMorphism m(src, tgt);
  Gluing g = glue(src, tgt);
  // src circle i pairs with tgt circle i (i<k) or i+1 (i>=k); tgt circle k is born.
  auto pair_of = [&](int i) { return i < k ? i : i + 1; };
  Labeling cupbit = dotted ? (1u << (g.b_free_first + k)) : 0u;
  for (auto& [mask, c] : copair_terms(g, src.circles, pair_of)) m.add_term(mask | cupbit, c);
  return m;
}

int CobMorphism::qdeg() const {
  if (terms_.empty()) throw std::logic_error("qdeg: zero morphism has no degree");
  int deg = 0;
  bool first = true;
  for (const auto& [mask, c] : terms_) {
    // Label sum (+1 per 1, -1 per X) minus half the boundary points.
    int d = (ncircles_ - 2 * std::popcount(mask)) - src_.points() / 2;
    if (first) {
      deg = d;
      first = false;
    } else if (d != deg) {
      throw std::logic_error("qdeg: inhomogeneous morphism");
    }
  }
  return deg;
}

CobMorphism CobMorphism::operator+(const CobMorphism& o) const {
  CobMorphism r = *this;
  r += o;
  return r;
}

CobMorphism& CobMorphism::operator+=(const CobMorphism& o) {
  if (!(src_ == o.src_) || !(tgt_ == o.tgt_))
    throw std::invalid_argument("CobMorphism: adding morphisms with different endpoints");
  for (const auto& [mask, c] : o.terms_) add_term(mask, c);
  return *this;
}

CobMorphism CobMorphism::operator-(const CobMorphism& o) const { return *this + (-o); }

CobMorphism CobMorphism::operator-() const {
  CobMorphism r = *this;
  for (auto& [mask, c] : r.terms_) c = -c;
  return r;
}

CobMorphism CobMorphism::operator*(const Int& c) const {
  CobMorphism r(src_, tgt_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [mask, v] : r.terms_) v *= c;
  return r;
}

bool CobMorphism::operator==(const CobMorphism& o) const {
  return src_ == o.src_ && tgt_ == o.tgt_ && terms_ == o.terms_;
}

namespace {

/// Structural record of one circle-level event during composition.
struct SurgeryOp {
  enum Kind { Merge, Split, Contract } kind;
  int a = -1, b = -1, c = -1;  // Merge: a,b -> c; Split: a -> b,c; Contract: a,b
};

/// Small union-find over piece indices.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

CobMorphism compose(const CobMorphism& f, const CobMorphism& g) {
  if (!(f.tgt_ == g.src_)) throw std::invalid_argument("compose: middle diagram mismatch");
  const FlatTangle &A = f.src_, &B = f.tgt_, &C = g.tgt_;
  const int P = A.points();
  Gluing gf = glue(A, B), gg = glue(B, C), gout = glue(A, C);

  // Item space: left-side points 0..P-1 (the A|B gluing), right-side points
  // P..2P-1 (the B|C gluing), then carried circles of A, B-left, B-right, C.
  const int R0 = P;
  const int FA = 2 * P;
  const int FBL = FA + A.circles;
  const int FBR = FBL + B.circles;
  const int FC = FBR + B.circles;

  std::vector<char> surgered(std::max(P, 1), 0);

  // Two edge families at each point: family 0 is the outer arc (A on the
  // left, mirrored C on the right), family 1 is the middle arc of B or, once
  // the arc through the point is surgered, the bridge to the other side.
  auto nbr = [&](int item, int fam) -> int {
    if (item < P) {
      int p = item;
      if (fam == 0) return A.mate[p];
      return surgered[p] ? R0 + p : B.mate[p];
    }
    int p = item - P;
    if (fam == 0) return R0 + C.mate[p];
    return surgered[p] ? p : R0 + B.mate[p];
  };

  auto trace = [&](int start) {
    std::vector<int> items;
    int cur = start, fam = 0;
    do {
      items.push_back(cur);
      cur = nbr(cur, fam);
      fam = 1 - fam;
    } while (cur != start);
    return items;
  };

  auto key_of = [&](int start) {
    auto items = trace(start);
    return *std::min_element(items.begin(), items.end());
  };

  // Initial keys of the circles of both gluings.
  auto initial_key_f = [&](int j) {
    if (j >= gf.b_free_first) return FBL + (j - gf.b_free_first);
    if (j >= gf.a_free_first) return FA + (j - gf.a_free_first);
    for (int p = 0;; ++p)
      if (gf.circle_of_point[p] == j) return p;
  };
  auto initial_key_g = [&](int j) {
    if (j >= gg.b_free_first) return FC + (j - gg.b_free_first);
    if (j >= gg.a_free_first) return FBR + (j - gg.a_free_first);
    for (int p = 0;; ++p)
      if (gg.circle_of_point[p] == j) return R0 + p;
  };

  // Structural pass: surger every arc of B in order of smallest endpoint.
  std::vector<SurgeryOp> ops;
  for (int p = 0; p < P; ++p) {
    int q = B.mate[p];
    if (q < p) continue;
    int kL = key_of(p);
    int kR = key_of(R0 + p);
    surgered[p] = surgered[q] = 1;
    if (kL != kR) {
      ops.push_back({SurgeryOp::Merge, kL, kR, key_of(p)});
    } else {
      int k1 = key_of(p), k2 = key_of(q);
      if (k1 == k2) throw std::logic_error("compose: surgery failed to split a planar circle");
      ops.push_back({SurgeryOp::Split, kL, k1, k2});
    }
  }
  for (int i = 0; i < B.circles; ++i) ops.push_back({SurgeryOp::Contract, FBL + i, FBR + i, -1});

  // Final circles correspond to the circles of glue(A, C).
  std::map<int, int> final_index;
  {
    std::vector<char> seen(std::max(P, 1), 0);
    for (int p = 0; p < P; ++p) {
      if (seen[p]) continue;
      auto items = trace(p);
      int key = *std::min_element(items.begin(), items.end());
      for (int it : items)
        if (it < P)
          seen[it] = 1;
        else
          seen[it - P] = 1;
      final_index[key] = gout.circle_of_point[p];
    }
    for (int i = 0; i < A.circles; ++i) final_index[FA + i] = gout.a_free_first + i;
    for (int i = 0; i < C.circles; ++i) final_index[FC + i] = gout.b_free_first + i;
  }

  // Label pass.
  using LMap = std::map<int, int>;
  std::map<LMap, Int> cur;
  for (const auto& [mf, cf] : f.terms_)
    for (const auto& [mg, cg] : g.terms_) {
      LMap lm;
      for (int j = 0; j < gf.ncircles; ++j) lm[initial_key_f(j)] = (mf >> j) & 1;
      for (int j = 0; j < gg.ncircles; ++j) lm[initial_key_g(j)] = (mg >> j) & 1;
      cur[lm] += cf * cg;
    }

  for (const auto& op : ops) {
    std::map<LMap, Int> next;
    for (auto& [lm0, coeff] : cur) {
      LMap lm = lm0;
      switch (op.kind) {
        case SurgeryOp::Merge: {
          int u = lm.at(op.a), v = lm.at(op.b);
          lm.erase(op.a);
          lm.erase(op.b);
          if (u + v <= 1) {
            lm[op.c] = u + v;
            next[lm] += coeff;
          }
          break;
        }
        case SurgeryOp::Split: {
          int u = lm.at(op.a);
          lm.erase(op.a);
          if (u == 1) {
            lm[op.b] = 1;
            lm[op.c] = 1;
            next[lm] += coeff;
          } else {
            lm[op.b] = 0;
            lm[op.c] = 1;
            next[lm] += coeff;
            lm[op.b] = 1;
            lm[op.c] = 0;
            next[lm] += coeff;
          }
          break;
        }
        case SurgeryOp::Contract: {
          int u = lm.at(op.a), v = lm.at(op.b);
          lm.erase(op.a);
          lm.erase(op.b);
          if (u + v == 1) next[lm] += coeff;
          break;
        }
      }
    }
    cur = std::move(next);
  }

  CobMorphism out(A, C);
  for (const auto& [lm, coeff] : cur) {
    if (coeff == 0) continue;
    Labeling mask = 0;
    for (const auto& [key, bit] : lm) {
      if (bit) mask |= 1u << final_index.at(key);
    }
    out.add_term(mask, coeff);
  }
  return out;
}

CobMorphism vstack(const CobMorphism& f, const CobMorphism& g) {
  const FlatTangle &x = f.src_, &xp = f.tgt_, &y = g.src_, &yp = g.tgt_;
  if (x.top != y.bottom) throw std::invalid_argument("vstack: interface mismatch");
  const int n = x.top;
  auto sc = compose_flat_traced(x, y);
  auto tc = compose_flat_traced(xp, yp);
  Gluing gf = glue(x, xp), gg = glue(y, yp), G = glue(sc.result, tc.result);

  // Pieces: one disk per circle of each factor gluing (the singleton
  // representative of a labeling). g's pieces are offset past f's.
  const int off = gf.ncircles;
  Dsu dsu(gf.ncircles + gg.ncircles);
  for (int t = 0; t < n; ++t)
    dsu.unite(gf.circle_of_point[x.bottom + n - 1 - t], off + gg.circle_of_point[t]);

  // Map each circle of the composite gluing to the component it lies on.
  const int m = sc.result.bottom;
  auto piece_of_circle = [&](int c) -> int {
    if (c < G.nboundary) {
      int p = 0;
      while (G.circle_of_point[p] != c) ++p;
      if (p < m) return gf.circle_of_point[p];                 // x's bottom point
      return off + gg.circle_of_point[p - m + n];              // y-side top point
    }
    if (c < G.b_free_first) {
      int j = c - G.a_free_first;  // carried circle of the composite source
      if (j < sc.new_loops) return off + gg.circle_of_point[sc.loop_interface[j][0]];
      j -= sc.new_loops;
      if (j < x.circles) return gf.a_free_first + j;
      return off + gg.a_free_first + (j - x.circles);
    }
    int j = c - G.b_free_first;  // carried circle of the composite target
    if (j < tc.new_loops) return off + gg.circle_of_point[tc.loop_interface[j][0]];
    j -= tc.new_loops;
    if (j < xp.circles) return gf.b_free_first + j;
    return off + gg.b_free_first + (j - xp.circles);
  };

  struct Comp {
    std::vector<int> pieces;
    std::vector<int> circles;  // circles of G on this component
    int arcs = 0;
    int genus = 0;
  };
  std::map<int, Comp> comps;
  for (int pc = 0; pc < gf.ncircles + gg.ncircles; ++pc) comps[dsu.find(pc)].pieces.push_back(pc);
  for (int t = 0; t < n; ++t)
    comps[dsu.find(gf.circle_of_point[x.bottom + n - 1 - t])].arcs += 1;
  for (int c = 0; c < G.ncircles; ++c) comps[dsu.find(piece_of_circle(c))].circles.push_back(c);

  for (auto& [root, comp] : comps) {
    int chi = static_cast<int>(comp.pieces.size()) - comp.arcs;
    int b = static_cast<int>(comp.circles.size());
    if (b == 0) throw std::logic_error("vstack: closed component");
    int two_genus = 2 - b - chi;
    if (two_genus < 0 || two_genus % 2 != 0) throw std::logic_error("vstack: bad genus count");
    comp.genus = two_genus / 2;
  }

  CobMorphism out(sc.result, tc.result);
  for (const auto& [mf, cf] : f.terms_)
    for (const auto& [mg, cg] : g.terms_) {
      // Dots per component, then expand each component's normal form.
      std::vector<std::pair<Labeling, Int>> expansion{{0u, cf * cg}};
      bool dead = false;
      for (const auto& [root, comp] : comps) {
        int dots = comp.genus;
        for (int pc : comp.pieces) {
          if (pc < off) {
            if ((mf >> pc) & 1) ++dots;
          } else if ((mg >> (pc - off)) & 1) {
            ++dots;
          }
        }
        if (dots >= 2) {
          dead = true;
          break;
        }
        Int factor = Int(1) << comp.genus;
        std::vector<std::pair<Labeling, Int>> next;
        if (dots == 1) {
          // One dot on a genus-0 component labels every boundary circle X.
          Labeling all = 0;
          for (int c : comp.circles) all |= 1u << c;
          for (auto& [mask, co] : expansion) next.emplace_back(mask | all, co * factor);
        } else {
          // No dots: sum over labelings with exactly one circle labeled 1.
          for (int one : comp.circles) {
            Labeling lab = 0;
            for (int c : comp.circles)
              if (c != one) lab |= 1u << c;
            for (auto& [mask, co] : expansion) next.emplace_back(mask | lab, co * factor);
          }
        }
        expansion = std::move(next);
      }
      if (dead) continue;
      for (auto& [mask, co] : expansion) out.add_term(mask, co);
    }
  return out;
}

CobMorphism hstack(const CobMorphism& f, const CobMorphism& g) {
  const FlatTangle &x = f.src_, &xp = f.tgt_, &y = g.src_, &yp = g.tgt_;
  FlatTangle src = hjoin(x, y), tgt = hjoin(xp, yp);
  Gluing gf = glue(x, xp), gg = glue(y, yp), G = glue(src, tgt);

  // Side-circle feeding each composite circle; the factors never interact.
  // Returns piece index in the same layout as vstack (g offset past f).
  const int off = gf.ncircles;
  auto side_circle = [&](int c) -> int {
    if (c < G.nboundary) {
      int p = 0;
      while (G.circle_of_point[p] != c) ++p;
      if (p < x.bottom) return gf.circle_of_point[p];
      if (p < x.bottom + y.points()) return off + gg.circle_of_point[p - x.bottom];
      return gf.circle_of_point[p - y.points()];
    }
    if (c < G.b_free_first) {
      int j = c - G.a_free_first;
      if (j < x.circles) return gf.a_free_first + j;
      return off + gg.a_free_first + (j - x.circles);
    }
    int j = c - G.b_free_first;
    if (j < xp.circles) return gf.b_free_first + j;
    return off + gg.b_free_first + (j - xp.circles);
  };

  CobMorphism out(src, tgt);
  std::vector<int> source(G.ncircles);
  for (int c = 0; c < G.ncircles; ++c) source[c] = side_circle(c);

  for (const auto& [mf, cf] : f.terms_)
    for (const auto& [mg, cg] : g.terms_) {
      Labeling mask = 0;
      for (int c = 0; c < G.ncircles; ++c) {
        int s = source[c];
        int bit = s < off ? ((mf >> s) & 1) : ((mg >> (s - off)) & 1);
        if (bit) mask |= 1u << c;
      }
      out.add_term(mask, cf * cg);
    }
  return out;
}

std::vector<std::pair<Labeling, int>> hom_basis(const FlatTangle& a, const FlatTangle& b) {
  Gluing g = glue(a, b);
  std::vector<std::pair<Labeling, int>> out;
  int half = a.points() / 2;
  for (Labeling mask = 0; mask < (1u << g.ncircles); ++mask)
    out.emplace_back(mask, (g.ncircles - 2 * std::popcount(mask)) - half);
  return out;
}

}  // namespace tlkh
