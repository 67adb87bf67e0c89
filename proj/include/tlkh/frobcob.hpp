#pragma once

#include "tlkh/diagrams.hpp"
#include "tlkh/ints.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace tlkh {

/// Circle decomposition of the closed 1-manifold obtained by gluing two
/// diagrams with equal boundary along that boundary.
///
/// Circle indices are canonical: boundary-touching circles first, ordered by
/// their smallest boundary point, then a's carried circles in index order,
/// then b's. Every stored morphism refers to circles through this numbering
/// of its own (source, target) gluing, which is what makes anonymous circle
/// counts on FlatTangle unambiguous.
struct Gluing {
  int npoints = 0;
  int nboundary = 0;   ///< number of boundary-touching circles
  int ncircles = 0;    ///< nboundary + a.circles + b.circles
  std::vector<int> circle_of_point;
  int a_free_first = 0;
  int b_free_first = 0;
};

/// Glues a and b (same bottom and top counts) along their boundary.
Gluing glue(const FlatTangle& a, const FlatTangle& b);

/// Bitmask over the circles of a gluing: bit set = circle labeled X,
/// bit clear = circle labeled 1.
using Labeling = std::uint32_t;

/// A morphism of the dotted-cobordism category between two flat tangles with
/// the same boundary, presented as a Z-linear combination of {1,X}-labelings
/// of the circles of the (source, target) gluing.
///
/// q-degree of a labeling: (#1-labels - #X-labels) - (boundary points)/2.
/// All stored morphisms are homogeneous; arithmetic rejects degree mixing.
class CobMorphism {
 public:
  CobMorphism() = default;
  /// The zero morphism between the given diagrams.
  CobMorphism(FlatTangle src, FlatTangle tgt);

  static CobMorphism identity(const FlatTangle& t);
  /// Single labeling with a coefficient.
  static CobMorphism from_labeling(const FlatTangle& src, const FlatTangle& tgt, Labeling mask,
                                   Int coeff);
  /// The undotted labeling (all circles 1). For a pair of diagrams differing
  /// by one planar surgery this is the saddle; checked to have q-degree -1.
  static CobMorphism saddle(const FlatTangle& src, const FlatTangle& tgt);
  /// Identity with one dot on the component through the given boundary point.
  static CobMorphism dot(const FlatTangle& t, int boundary_point);
  /// Death of carried circle k of src (target has one circle fewer); the
  /// capping disk carries a dot when dotted is true. Plain death has q-degree
  /// +1, dotted death -1.
  static CobMorphism cap_circle(const FlatTangle& src, int k, bool dotted);
  /// Birth of a circle inserted at index k of the target's carried circles.
  static CobMorphism cup_circle(const FlatTangle& src, int k, bool dotted);

  const FlatTangle& src() const { return src_; }
  const FlatTangle& tgt() const { return tgt_; }
  const std::map<Labeling, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Degree of the (homogeneous) morphism; throws on the zero morphism.
  int qdeg() const;

  CobMorphism operator+(const CobMorphism& o) const;
  CobMorphism operator-(const CobMorphism& o) const;
  CobMorphism operator-() const;
  CobMorphism operator*(const Int& c) const;
  CobMorphism& operator+=(const CobMorphism& o);
  bool operator==(const CobMorphism& o) const;

  /// Number of circles in the (src, tgt) gluing.
  int ncircles() const { return ncircles_; }

 private:
  void add_term(Labeling mask, Int coeff);
  FlatTangle src_, tgt_;
  int ncircles_ = 0;
  std::map<Labeling, Int> terms_;
  friend CobMorphism compose(const CobMorphism& f, const CobMorphism& g);
  friend CobMorphism vstack(const CobMorphism& f, const CobMorphism& g);
  friend CobMorphism hstack(const CobMorphism& f, const CobMorphism& g);
};

/// Composition g after f (f: a->b, g: b->c, result a->c). Implemented by
/// iterated planar surgery along the arcs of b: joining two distinct circles
/// multiplies labels (1.1=1, 1.X=X, X.X=0), splitting one circle comultiplies
/// (1 -> 1#X + X#1, X -> X#X), and each carried circle of b contracts the two
/// facing labels with the counit pairing (1 paired with X survives).
CobMorphism compose(const CobMorphism& f, const CobMorphism& g);

/// Stacks g above f: f: x->x', g: y->y' with x.top == y.bottom gives a
/// morphism compose(x,y) -> compose(x',y'). Computed by gluing the component
/// surfaces along the interface and re-expanding genus and dots.
CobMorphism vstack(const CobMorphism& f, const CobMorphism& g);

/// Places g to the right of f: a morphism hjoin(x,y) -> hjoin(x',y').
CobMorphism hstack(const CobMorphism& f, const CobMorphism& g);

/// Basis labelings of Hom(a, b) with their q-degrees, ordered by mask.
std::vector<std::pair<Labeling, int>> hom_basis(const FlatTangle& a, const FlatTangle& b);

}  // namespace tlkh
