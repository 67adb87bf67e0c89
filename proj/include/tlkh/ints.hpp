#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

namespace tlkh {

/// Exact integer type used throughout the chain-level kernel. Intermediate
/// entries of integer elimination can exceed 64 bits even for small complexes,
/// so everything runs on arbitrary precision from the start.
using Int = boost::multiprecision::cpp_int;

/// Laurent polynomial in one variable q with Int coefficients.
/// Used for graded Euler characteristics and the Kauffman bracket oracle.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(Int constant);

  /// Monomial c * q^k.
  static Laurent monomial(Int c, int k);

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o);
  bool operator==(const Laurent& o) const { return coeffs_ == coeffs_normalized(o); }

  bool is_zero() const { return coeffs_.empty(); }
  Int coeff(int k) const;
  const std::map<int, Int>& coeffs() const { return coeffs_; }

  /// Exponents in increasing order, e.g. "q^-2 + 2 + q^2".
  std::string to_string() const;

 private:
  static const std::map<int, Int>& coeffs_normalized(const Laurent& o) { return o.coeffs_; }
  void prune();
  std::map<int, Int> coeffs_;  // exponent -> coefficient, no zero values stored
};

/// Sparse integer matrix, row-major: rows_[i] maps column -> nonzero entry.
class SparseMat {
 public:
  SparseMat() = default;
  SparseMat(int rows, int cols) : nrows_(rows), ncols_(cols), rows_(rows) {}

  int rows() const { return nrows_; }
  int cols() const { return ncols_; }
  const std::map<int, Int>& row(int i) const { return rows_[i]; }

  Int get(int i, int j) const;
  void set(int i, int j, Int v);
  void add(int i, int j, const Int& v);
  long long nnz() const;

  SparseMat transposed() const;

  /// Matrix product (this * o); dimensions must agree.
  SparseMat operator*(const SparseMat& o) const;

 private:
  int nrows_ = 0, ncols_ = 0;
  std::vector<std::map<int, Int>> rows_;
};

/// Result of a Smith normal form computation. `invariants` are the nonzero
/// diagonal entries d_1 | d_2 | ... (all positive, divisibility chain holds);
/// rank == invariants.size().
struct SnfResult {
  std::vector<Int> invariants;
  int rank = 0;
};

/// Smith normal form of a sparse integer matrix via fraction-free elimination
/// with fill-minimizing pivot selection. Exact over Z.
SnfResult smith_normal_form(SparseMat m);

/// Rank over Q (same elimination, stopping at diagonalization).
int rank_z(const SparseMat& m);

}  // namespace tlkh
