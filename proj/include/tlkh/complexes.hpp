#pragma once

#include "tlkh/frobcob.hpp"

#include <map>
#include <utility>
#include <vector>

namespace tlkh {

/// One object of a complex: a diagram placed at a quantum shift and a
/// homological degree.
struct ComplexObj {
  FlatTangle diag;
  int qshift = 0;
  int hdeg = 0;
  bool operator==(const ComplexObj&) const = default;
};

/// A bounded complex over the diagram category. The differential raises the
/// homological degree by one; every entry f: i -> j satisfies
/// hdeg_j = hdeg_i + 1 and qdeg(f) = qshift_i - qshift_j, so the differential
/// is degree 0 overall. d squared = 0 is enforced on construction.
class Complex {
 public:
  using EntryMap = std::map<std::pair<int, int>, CobMorphism>;

  Complex(int bottom, int top, std::vector<ComplexObj> objs, EntryMap diff, bool check = true);

  /// One-object complex.
  static Complex single(const FlatTangle& t, int qshift = 0, int hdeg = 0);

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const std::vector<ComplexObj>& objects() const { return objs_; }
  const EntryMap& differential() const { return diff_; }

  /// Global shift: q^dq Sigma^dh (dh shifts every hdeg by +dh).
  Complex shifted(int dq, int dh) const;

  int min_h() const;
  int max_h() const;

  /// Degree constraints and d squared = 0; throws std::invalid_argument.
  void validate() const;

 private:
  int bottom_ = 0, top_ = 0;
  std::vector<ComplexObj> objs_;
  EntryMap diff_;
};

/// A chain map between complexes with an optional declared bidegree shift:
/// entries map hdeg h to h + dh and carry q-degree qshift_src - qshift_tgt + dq.
/// Commutation d_target . F = F . d_source is enforced by validate().
struct ChainMap {
  Complex source, target;
  std::map<std::pair<int, int>, CobMorphism> entries;
  int dq = 0;
  int dh = 0;
  void validate() const;
};

/// Mapping cone: source objects move to hdeg-1 with negated differential,
/// target objects stay put, F becomes the connecting block. Requires dh == 0
/// and dq == 0.
Complex cone(const ChainMap& f);

/// Direct sum (no interaction).
Complex direct_sum(const Complex& a, const Complex& b);

/// Vertical composition: stacks D above C (C feeds its top boundary into D's
/// bottom). Objects are flat compositions carrying any created circles;
/// differential is dC # id + (-1)^{hdeg of the C factor} id # dD.
Complex tensor_v(const Complex& c, const Complex& d, bool check = true);

/// Horizontal composition: places D to the right of C with the same sign rule.
Complex disjoint_union(const Complex& c, const Complex& d, bool check = true);

/// Closes the rightmost strand of an (n,n) complex around the right side.
Complex partial_trace(const Complex& c);

/// Full closure: all strands traced; result is a (0,0) complex.
Complex closure(const Complex& c);

/// Generator of an integer Hom complex, remembering where it came from.
struct HomGen {
  int c_obj = 0;  ///< object index in the source complex
  int d_obj = 0;  ///< object index in the target complex
  Labeling label = 0;
  bool operator==(const HomGen&) const = default;
};

/// Integer chain complex split by total q-degree. For each q and homological
/// degree h, `gens` lists the generators and `diff` holds the matrix of the
/// differential X_h -> X_{h+1} (row = source generator, column = target).
struct ZComplex {
  std::map<int, std::map<int, std::vector<HomGen>>> gens;
  std::map<int, std::map<int, SparseMat>> diff;

  int dim(int q, int h) const;
};

/// Total Hom complex of two complexes over the same boundary, with
/// differential f -> d_D . f - (-1)^{hdeg f} f . d_C, presented by integer
/// matrices in the labeling basis. Generator degrees: hdeg = h_D - h_C,
/// q = qdeg(label) - qshift_C + qshift_D.
ZComplex hom_complex(const Complex& c, const Complex& d);

/// Graded Euler characteristic of a closed (0,0) complex: each object
/// contributes (-1)^hdeg q^qshift (q + 1/q)^circles.
Laurent graded_euler_characteristic(const Complex& c);

}  // namespace tlkh
