#include "tlkh/complexes.hpp"

#include <stdexcept>
#include <string>
#include <tuple>

namespace tlkh {

Complex::Complex(int bottom, int top, std::vector<ComplexObj> objs, EntryMap diff, bool check)
    : bottom_(bottom), top_(top), objs_(std::move(objs)) {
  // Drop stored zeros so entry maps compare and iterate canonically.
  for (auto& [key, f] : diff) {
    if (!f.is_zero()) diff_.emplace(key, std::move(f));
  }
  if (check) validate();
}

Complex Complex::single(const FlatTangle& t, int qshift, int hdeg) {
  return Complex(t.bottom, t.top, {ComplexObj{t, qshift, hdeg}}, {});
}

Complex Complex::shifted(int dq, int dh) const {
  std::vector<ComplexObj> objs = objs_;
  for (auto& o : objs) {
    o.qshift += dq;
    o.hdeg += dh;
  }
  return Complex(bottom_, top_, std::move(objs), diff_, false);
}

int Complex::min_h() const {
  int h = 0;
  bool first = true;
  for (const auto& o : objs_) {
    if (first || o.hdeg < h) h = o.hdeg;
    first = false;
  }
  return h;
}

int Complex::max_h() const {
  int h = 0;
  bool first = true;
  for (const auto& o : objs_) {
    if (first || o.hdeg > h) h = o.hdeg;
    first = false;
  }
  return h;
}

void Complex::validate() const {
  for (const auto& o : objs_) {
    o.diag.check();
    if (o.diag.bottom != bottom_ || o.diag.top != top_)
      throw std::invalid_argument("complex: object boundary mismatch");
  }
  const int n = static_cast<int>(objs_.size());
  for (const auto& [key, f] : diff_) {
    auto [i, j] = key;
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw std::invalid_argument("complex: differential index out of range");
    if (!(f.src() == objs_[i].diag) || !(f.tgt() == objs_[j].diag))
      throw std::invalid_argument("complex: differential entry between wrong diagrams");
    if (objs_[j].hdeg != objs_[i].hdeg + 1)
      throw std::invalid_argument("complex: differential must raise hdeg by 1");
    if (f.qdeg() != objs_[i].qshift - objs_[j].qshift)
      throw std::invalid_argument("complex: differential entry has wrong q-degree");
  }
  // d . d = 0, entrywise over all length-2 paths.
  std::vector<std::vector<std::pair<int, const CobMorphism*>>> out(n);
  for (const auto& [key, f] : diff_) out[key.first].push_back({key.second, &f});
  std::map<std::pair<int, int>, CobMorphism> sq;
  for (int i = 0; i < n; ++i) {
    for (const auto& [j, f] : out[i]) {
      for (const auto& [k, g] : out[j]) {
        auto it = sq.find({i, k});
        if (it == sq.end())
          sq.emplace(std::pair{i, k}, compose(*f, *g));
        else
          it->second += compose(*f, *g);
      }
    }
  }
  for (const auto& [key, v] : sq) {
    if (!v.is_zero())
      throw std::invalid_argument("complex: d^2 != 0 at (" + std::to_string(key.first) + "," +
                                  std::to_string(key.second) + ")");
  }
}

void ChainMap::validate() const {
  if (source.bottom() != target.bottom() || source.top() != target.top())
    throw std::invalid_argument("chain map: boundary mismatch");
  const auto& so = source.objects();
  const auto& to = target.objects();
  for (const auto& [key, f] : entries) {
    auto [i, j] = key;
    if (i < 0 || i >= static_cast<int>(so.size()) || j < 0 || j >= static_cast<int>(to.size()))
      throw std::invalid_argument("chain map: entry index out of range");
    if (!(f.src() == so[i].diag) || !(f.tgt() == to[j].diag))
      throw std::invalid_argument("chain map: entry between wrong diagrams");
    if (to[j].hdeg != so[i].hdeg + dh)
      throw std::invalid_argument("chain map: entry has wrong hdeg shift");
    if (!f.is_zero() && f.qdeg() != so[i].qshift - to[j].qshift + dq)
      throw std::invalid_argument("chain map: entry has wrong q-degree");
  }
  // Commutation d_target . F = (-1)^dh F . d_source, entrywise.
  std::map<std::pair<int, int>, CobMorphism> lhs;
  for (const auto& [key, f] : entries) {
    auto [i, j] = key;
    for (const auto& [dkey, g] : target.differential()) {
      if (dkey.first != j) continue;
      auto it = lhs.find({i, dkey.second});
      if (it == lhs.end())
        lhs.emplace(std::pair{i, dkey.second}, compose(f, g));
      else
        it->second += compose(f, g);
    }
  }
  const Int sign = (dh % 2 == 0) ? 1 : -1;
  for (const auto& [dkey, e] : source.differential()) {
    for (const auto& [key, f] : entries) {
      if (key.first != dkey.second) continue;
      auto it = lhs.find({dkey.first, key.second});
      CobMorphism term = compose(e, f) * (-sign);
      if (it == lhs.end())
        lhs.emplace(std::pair{dkey.first, key.second}, std::move(term));
      else
        it->second += term;
    }
  }
  for (const auto& [key, v] : lhs) {
    if (!v.is_zero()) throw std::invalid_argument("chain map: does not commute with differentials");
  }
}

Complex cone(const ChainMap& f) {
  if (f.dq != 0 || f.dh != 0)
    throw std::invalid_argument("cone: requires an unshifted chain map");
  f.validate();
  const auto& so = f.source.objects();
  const auto& to = f.target.objects();
  const int ns = static_cast<int>(so.size());
  std::vector<ComplexObj> objs;
  objs.reserve(so.size() + to.size());
  for (const auto& o : so) objs.push_back({o.diag, o.qshift, o.hdeg - 1});
  for (const auto& o : to) objs.push_back(o);
  Complex::EntryMap diff;
  for (const auto& [key, e] : f.source.differential()) diff.emplace(key, -e);
  for (const auto& [key, e] : f.entries) diff.emplace(std::pair{key.first, ns + key.second}, e);
  for (const auto& [key, e] : f.target.differential())
    diff.emplace(std::pair{ns + key.first, ns + key.second}, e);
  return Complex(f.source.bottom(), f.source.top(), std::move(objs), std::move(diff));
}

Complex direct_sum(const Complex& a, const Complex& b) {
  if (a.bottom() != b.bottom() || a.top() != b.top())
    throw std::invalid_argument("direct_sum: boundary mismatch");
  std::vector<ComplexObj> objs = a.objects();
  objs.insert(objs.end(), b.objects().begin(), b.objects().end());
  const int na = static_cast<int>(a.objects().size());
  Complex::EntryMap diff = a.differential();
  for (const auto& [key, e] : b.differential())
    diff.emplace(std::pair{na + key.first, na + key.second}, e);
  return Complex(a.bottom(), a.top(), std::move(objs), std::move(diff), false);
}

/// Shared skeleton for the two monoidal products; Join/Whisker abstract over
/// vertical vs horizontal composition.
template <class JoinObj, class WhiskerLeft, class WhiskerRight>
static Complex product_complex(const Complex& c, const Complex& d, JoinObj join,
                               WhiskerLeft whisk_left, WhiskerRight whisk_right, int bottom,
                               int top, bool check) {
  const auto& co = c.objects();
  const auto& dobj = d.objects();
  const int nd = static_cast<int>(dobj.size());
  std::vector<ComplexObj> objs;
  objs.reserve(co.size() * dobj.size());
  for (const auto& x : co) {
    for (const auto& y : dobj) {
      objs.push_back({join(x.diag, y.diag), x.qshift + y.qshift, x.hdeg + y.hdeg});
    }
  }
  Complex::EntryMap diff;
  for (const auto& [key, f] : c.differential()) {
    for (int j = 0; j < nd; ++j) {
      diff.emplace(std::pair{key.first * nd + j, key.second * nd + j},
                   whisk_left(f, dobj[j].diag));
    }
  }
  for (const auto& [key, g] : d.differential()) {
    for (int i = 0; i < static_cast<int>(co.size()); ++i) {
      CobMorphism entry = whisk_right(co[i].diag, g);
      if (co[i].hdeg % 2 != 0) entry = -entry;
      diff.emplace(std::pair{i * nd + key.first, i * nd + key.second}, std::move(entry));
    }
  }
  return Complex(bottom, top, std::move(objs), std::move(diff), check);
}

Complex tensor_v(const Complex& c, const Complex& d, bool check) {
  if (c.top() != d.bottom()) throw std::invalid_argument("tensor_v: boundary mismatch");
  return product_complex(
      c, d, [](const FlatTangle& x, const FlatTangle& y) { return compose_flat(x, y).first; },
      [](const CobMorphism& f, const FlatTangle& y) { return vstack(f, CobMorphism::identity(y)); },
      [](const FlatTangle& x, const CobMorphism& g) { return vstack(CobMorphism::identity(x), g); },
      c.bottom(), d.top(), check);
}

Complex disjoint_union(const Complex& c, const Complex& d, bool check) {
  return product_complex(
      c, d, [](const FlatTangle& x, const FlatTangle& y) { return hjoin(x, y); },
      [](const CobMorphism& f, const FlatTangle& y) { return hstack(f, CobMorphism::identity(y)); },
      [](const FlatTangle& x, const CobMorphism& g) { return hstack(CobMorphism::identity(x), g); },
      c.bottom() + d.bottom(), c.top() + d.top(), check);
}

Complex partial_trace(const Complex& c) {
  if (c.bottom() < 1 || c.top() < 1)
    throw std::invalid_argument("partial_trace: needs a strand on each side");
  Complex mid = disjoint_union(c, Complex::single(FlatTangle::identity(1)), false);
  Complex below = Complex::single(hjoin(FlatTangle::identity(c.bottom() - 1), FlatTangle::cup()));
  Complex above = Complex::single(hjoin(FlatTangle::identity(c.top() - 1), FlatTangle::cap()));
  return tensor_v(tensor_v(below, mid, false), above, false);
}

Complex closure(const Complex& c) {
  if (c.bottom() != c.top()) throw std::invalid_argument("closure: needs an (n,n) complex");
  Complex cur = c;
  while (cur.bottom() > 0) cur = partial_trace(cur);
  return cur;
}

int ZComplex::dim(int q, int h) const {
  auto itq = gens.find(q);
  if (itq == gens.end()) return 0;
  auto ith = itq->second.find(h);
  return ith == itq->second.end() ? 0 : static_cast<int>(ith->second.size());
}

Laurent graded_euler_characteristic(const Complex& c) {
  if (c.bottom() != 0 || c.top() != 0)
    throw std::invalid_argument("graded_euler_characteristic: complex must be closed");
  Laurent circle = Laurent::monomial(1, 1) + Laurent::monomial(1, -1);
  Laurent total;
  for (const auto& o : c.objects()) {
    Laurent term = Laurent::monomial(o.hdeg % 2 == 0 ? 1 : -1, o.qshift);
    for (int k = 0; k < o.diag.circles; ++k) term = term * circle;
    total += term;
  }
  return total;
}

ZComplex hom_complex(const Complex& c, const Complex& d) {
  if (c.bottom() != d.bottom() || c.top() != d.top())
    throw std::invalid_argument("hom_complex: boundary mismatch");
  const auto& co = c.objects();
  const auto& dobj = d.objects();
  ZComplex z;
  // (c object, d object, labeling) -> (q, h, row index)
  std::map<std::tuple<int, int, Labeling>, std::tuple<int, int, int>> index;
  for (int i = 0; i < static_cast<int>(co.size()); ++i) {
    for (int j = 0; j < static_cast<int>(dobj.size()); ++j) {
      const int h = dobj[j].hdeg - co[i].hdeg;
      for (const auto& [mask, deg] : hom_basis(co[i].diag, dobj[j].diag)) {
        const int q = deg - co[i].qshift + dobj[j].qshift;
        auto& bucket = z.gens[q][h];
        index.emplace(std::tuple{i, j, mask}, std::tuple{q, h, static_cast<int>(bucket.size())});
        bucket.push_back({i, j, mask});
      }
    }
  }
  for (auto& [q, by_h] : z.gens) {
    for (auto& [h, gens] : by_h) {
      SparseMat m(static_cast<int>(gens.size()), z.dim(q, h + 1));
      for (int r = 0; r < static_cast<int>(gens.size()); ++r) {
        const HomGen& gen = gens[r];
        CobMorphism f = CobMorphism::from_labeling(co[gen.c_obj].diag, dobj[gen.d_obj].diag,
                                                   gen.label, 1);
        // Post-compose with the target differential.
        for (const auto& [key, g] : d.differential()) {
          if (key.first != gen.d_obj) continue;
          const CobMorphism comp = compose(f, g);
          for (const auto& [mask, coeff] : comp.terms()) {
            auto [tq, th, col] = index.at({gen.c_obj, key.second, mask});
            if (tq != q || th != h + 1) throw std::logic_error("hom_complex: degree bookkeeping");
            m.add(r, col, coeff);
          }
        }
        // Pre-compose with the source differential, Koszul-signed.
        const Int sign = (h % 2 == 0) ? -1 : 1;  // -(-1)^h
        for (const auto& [key, e] : c.differential()) {
          if (key.second != gen.c_obj) continue;
          const CobMorphism comp = compose(e, f);
          for (const auto& [mask, coeff] : comp.terms()) {
            auto [tq, th, col] = index.at({key.first, gen.d_obj, mask});
            if (tq != q || th != h + 1) throw std::logic_error("hom_complex: degree bookkeeping");
            m.add(r, col, coeff * sign);
          }
        }
      }
      z.diff[q][h] = std::move(m);
    }
  }
  return z;
}

}  // namespace tlkh
