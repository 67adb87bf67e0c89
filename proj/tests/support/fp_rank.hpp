#pragma once

#include "support/dense_snf.hpp"
#include "tlkh/complexes.hpp"
#include "tlkh/ints.hpp"

#include <map>
#include <utility>
#include <vector>

namespace tlkh::testsupport {

/// Rank of an integer matrix over F_p, by plain Gaussian elimination mod p.
/// Independent of the Smith-normal-form code paths on purpose.
inline int fp_rank(const tlkh::SparseMat& m, int p) {
  using tlkh::Int;
  std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols(), 0));
  for (int i = 0; i < m.rows(); ++i)
    for (const auto& [j, v] : m.row(i)) {
      Int r = v % p;
      if (r < 0) r += p;
      a[i][j] = r;
    }
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int i = rank; i < m.rows(); ++i)
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int i = rank + 1; i < m.rows(); ++i) {
      if (a[i][col] == 0) continue;
      // row_i := pivot * row_i - elem * row_rank (mod p) clears the column
      const Int e = a[i][col], q = a[rank][col];
      for (int j = col; j < m.cols(); ++j) {
        Int v = (q * a[i][j] - e * a[rank][j]) % p;
        if (v < 0) v += p;
        a[i][j] = v;
      }
    }
    ++rank;
  }
  return rank;
}

/// F_p dimension of the homology of each (q, h) block of a ZComplex,
/// dim - rank(d_h) - rank(d_{h-1}); zero entries omitted.
inline std::map<std::pair<int, int>, int> fp_homology_dims(const tlkh::ZComplex& z, int p) {
  std::map<std::pair<int, int>, int> out;
  for (const auto& [q, by_h] : z.gens) {
    const auto mats = z.diff.find(q);
    const auto rank_at = [&](int h) {
      if (mats == z.diff.end()) return 0;
      const auto mit = mats->second.find(h);
      return mit == mats->second.end() ? 0 : fp_rank(mit->second, p);
    };
    for (const auto& [h, gen_list] : by_h) {
      const int d = static_cast<int>(gen_list.size()) - rank_at(h) - rank_at(h - 1);
      if (d != 0) out[{q, h}] = d;
    }
  }
  return out;
}

}  // namespace tlkh::testsupport
