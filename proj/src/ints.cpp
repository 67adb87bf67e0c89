#include "tlkh/ints.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tlkh {

Laurent::Laurent(Int constant) {
  if (constant != 0) coeffs_[0] = std::move(constant);
}

Laurent Laurent::monomial(Int c, int k) {
  Laurent p;
  if (c != 0) p.coeffs_[k] = std::move(c);
  return p;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  r += o;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [k, c] : o.coeffs_) coeffs_[k] += c;
  prune();
  return *this;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  for (const auto& [k, c] : o.coeffs_) r.coeffs_[k] -= c;
  r.prune();
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [k1, c1] : coeffs_)
    for (const auto& [k2, c2] : o.coeffs_) r.coeffs_[k1 + k2] += c1 * c2;
  r.prune();
  return r;
}

Int Laurent::coeff(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Int(0) : it->second;
}

void Laurent::prune() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();)
    it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
}

std::string Laurent::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : coeffs_) {
    if (!first) out << (c > 0 ? " + " : " - ");
    if (first && c < 0) out << "-";
    first = false;
    Int a = abs(c);
    if (a != 1 || k == 0) out << a.str();
    if (k != 0) {
      if (a != 1) out << "*";
      out << "q";
      if (k != 1) out << "^" << k;
    }
  }
  return out.str();
}

Int SparseMat::get(int i, int j) const {
  auto it = rows_[i].find(j);
  return it == rows_[i].end() ? Int(0) : it->second;
}

void SparseMat::set(int i, int j, Int v) {
  if (v == 0)
    rows_[i].erase(j);
  else
    rows_[i][j] = std::move(v);
}

void SparseMat::add(int i, int j, const Int& v) {
  Int& e = rows_[i][j];
  e += v;
  if (e == 0) rows_[i].erase(j);
}

long long SparseMat::nnz() const {
  long long n = 0;
  for (const auto& r : rows_) n += static_cast<long long>(r.size());
  return n;
}

SparseMat SparseMat::transposed() const {
  SparseMat t(ncols_, nrows_);
  for (int i = 0; i < nrows_; ++i)
    for (const auto& [j, v] : rows_[i]) t.rows_[j][i] = v;
  return t;
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
  if (ncols_ != o.nrows_) throw std::invalid_argument("SparseMat: dimension mismatch");
  SparseMat r(nrows_, o.ncols_);
  for (int i = 0; i < nrows_; ++i)
    for (const auto& [k, v] : rows_[i])
      for (const auto& [j, w] : o.rows_[k]) r.add(i, j, v * w);
  return r;
}

namespace {

/// Working state for elimination: row-major and column-major copies kept in
/// sync so pivot selection and updates stay near-linear in fill.
struct Elim {
  std::vector<std::map<int, Int>> rows, cols;
  std::set<int> live_rows, live_cols;

  explicit Elim(const SparseMat& m) : rows(m.rows()), cols(m.cols()) {
    for (int i = 0; i < m.rows(); ++i)
      for (const auto& [j, v] : m.row(i)) {
        rows[i][j] = v;
        cols[j][i] = v;
      }
    for (int i = 0; i < m.rows(); ++i)
      if (!rows[i].empty()) live_rows.insert(i);
    for (int j = 0; j < m.cols(); ++j)
      if (!cols[j].empty()) live_cols.insert(j);
  }

  void set(int i, int j, const Int& v) {
    if (v == 0) {
      rows[i].erase(j);
      cols[j].erase(i);
      if (rows[i].empty()) live_rows.erase(i);
      if (cols[j].empty()) live_cols.erase(j);
    } else {
      rows[i][j] = v;
      cols[j][i] = v;
      live_rows.insert(i);
      live_cols.insert(j);
    }
  }

  // row[t] += c * row[s]
  void row_axpy(int t, int s, const Int& c) {
    if (c == 0) return;
    for (const auto& [j, v] : std::map<int, Int>(rows[s])) {
      Int nv = (rows[t].count(j) ? rows[t][j] : Int(0)) + c * v;
      set(t, j, nv);
    }
  }

  // col[t] += c * col[s]
  void col_axpy(int t, int s, const Int& c) {
    if (c == 0) return;
    for (const auto& [i, v] : std::map<int, Int>(cols[s])) {
      Int nv = (cols[t].count(i) ? cols[t][i] : Int(0)) + c * v;
      set(i, t, nv);
    }
  }

  bool empty() const { return live_rows.empty(); }

  /// Pivot choice: smallest |value|, ties broken by Markowitz fill count
  /// (nnz(row)-1)*(nnz(col)-1), then by position for determinism.
  std::pair<int, int> pick_pivot() const {
    Int best_abs = 0;
    long long best_fill = 0;
    std::pair<int, int> best{-1, -1};
    for (int i : live_rows) {
      for (const auto& [j, v] : rows[i]) {
        Int a = abs(v);
        long long fill =
            (static_cast<long long>(rows[i].size()) - 1) * (static_cast<long long>(cols[j].size()) - 1);
        bool better = false;
        if (best.first < 0)
          better = true;
        else if (a != best_abs)
          better = a < best_abs;
        else if (fill != best_fill)
          better = fill < best_fill;
        if (better) {
          best_abs = a;
          best_fill = fill;
          best = {i, j};
          if (best_abs == 1 && best_fill == 0) return best;
        }
      }
    }
    return best;
  }
};

}  // namespace

SnfResult smith_normal_form(SparseMat m) {
  Elim e(m);
  std::vector<Int> diag;
  while (!e.empty()) {
    auto [pi, pj] = e.pick_pivot();
    // Reduce until the pivot divides everything in its row and column, then
    // clear them. Euclidean steps strictly shrink |pivot|, so this terminates.
    for (;;) {
      Int p = e.rows[pi][pj];
      bool again = false;
      for (const auto& [i, v] : std::map<int, Int>(e.cols[pj])) {
        if (i == pi) continue;
        Int q = v / p;  // truncated division; remainder handled next pass
        e.row_axpy(i, pi, -q);
        if (e.cols[pj].count(i)) {
          // Remainder nonzero: swap roles so the smaller value becomes pivot.
          Int r = e.cols[pj][i];
          if (abs(r) < abs(p)) {
            pi = i;
            again = true;
            break;
          }
        }
      }
      if (again) continue;
      p = e.rows[pi][pj];
      for (const auto& [j, v] : std::map<int, Int>(e.rows[pi])) {
        if (j == pj) continue;
        Int q = v / p;
        e.col_axpy(j, pj, -q);
        if (e.rows[pi].count(j)) {
          Int r = e.rows[pi][j];
          if (abs(r) < abs(p)) {
            pj = j;
            again = true;
            break;
          }
        }
      }
      if (again) continue;
      // Column ops may have refilled the pivot column; verify both are clean.
      if (e.cols[pj].size() > 1 || e.rows[pi].size() > 1) continue;
      break;
    }
    Int p = abs(e.rows[pi][pj]);
    diag.push_back(p);
    e.set(pi, pj, Int(0));
  }
  // Normalize the diagonal into a divisibility chain: over Z, diag(a, b) is
  // equivalent to diag(gcd(a,b), lcm(a,b)); iterate to a fixed point.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < diag.size(); ++i)
      for (size_t j = i + 1; j < diag.size(); ++j) {
        if (diag[j] % diag[i] != 0) {
          Int g = gcd(diag[i], diag[j]);
          Int l = diag[i] / g * diag[j];
          diag[i] = g;
          diag[j] = l;
          changed = true;
        }
      }
  }
  std::sort(diag.begin(), diag.end());
  SnfResult r;
  r.invariants = std::move(diag);
  r.rank = static_cast<int>(r.invariants.size());
  return r;
}

int rank_z(const SparseMat& m) { return smith_normal_form(m).rank; }

}  // namespace tlkh
