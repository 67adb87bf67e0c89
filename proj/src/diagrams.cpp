#include "tlkh/diagrams.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tlkh {

FlatTangle FlatTangle::identity(int n) {
  if (n < 0) throw std::invalid_argument("identity: negative strand count");
  FlatTangle t;
  t.bottom = t.top = n;
  t.mate.resize(2 * n);
  for (int x = 0; x < n; ++x) {
    // Bottom position x+1 meets top position x+1; with the top numbered
    // right to left that position carries label 2n-1-x.
    t.mate[x] = 2 * n - 1 - x;
    t.mate[2 * n - 1 - x] = x;
  }
  return t;
}

FlatTangle FlatTangle::turnback(int n, int i) {
  if (n < 2 || i < 1 || i > n - 1)
    throw std::invalid_argument("turnback: index " + std::to_string(i) +
                                " out of range for n=" + std::to_string(n));
  FlatTangle t = identity(n);
  // Bottom arc joins bottom positions i,i+1 (labels i-1,i); top arc joins top
  // positions i,i+1 (labels 2n-i-1, 2n-i). Other strands stay vertical.
  t.mate[i - 1] = i;
  t.mate[i] = i - 1;
  t.mate[2 * n - i] = 2 * n - i - 1;
  t.mate[2 * n - i - 1] = 2 * n - i;
  t.check();
  return t;
}

FlatTangle FlatTangle::cup() {
  FlatTangle t;
  t.bottom = 0;
  t.top = 2;
  t.mate = {1, 0};
  return t;
}

FlatTangle FlatTangle::cap() {
  FlatTangle t;
  t.bottom = 2;
  t.top = 0;
  t.mate = {1, 0};
  return t;
}

int FlatTangle::through_degree() const {
  int d = 0;
  for (int p = 0; p < bottom; ++p)
    if (mate[p] >= bottom) ++d;
  return d;
}

FlatTangle FlatTangle::mirrored() const {
  // Reversing the boundary cyclic order exchanges bottom and top and
  // preserves the noncrossing property: label p maps to points()-1-p.
  FlatTangle t;
  t.bottom = top;
  t.top = bottom;
  t.circles = circles;
  int P = points();
  t.mate.resize(P);
  for (int p = 0; p < P; ++p) t.mate[P - 1 - p] = P - 1 - mate[p];
  return t;
}

void FlatTangle::check() const {
  int P = points();
  if (bottom < 0 || top < 0) throw std::invalid_argument("FlatTangle: negative boundary count");
  if ((P % 2) != 0) throw std::invalid_argument("FlatTangle: odd number of boundary points");
  if (static_cast<int>(mate.size()) != P)
    throw std::invalid_argument("FlatTangle: mate size mismatch");
  if (circles < 0) throw std::invalid_argument("FlatTangle: negative circle count");
  for (int p = 0; p < P; ++p) {
    if (mate[p] < 0 || mate[p] >= P) throw std::invalid_argument("FlatTangle: mate out of range");
    if (mate[p] == p) throw std::invalid_argument("FlatTangle: fixed point in involution");
    if (mate[mate[p]] != p) throw std::invalid_argument("FlatTangle: mate is not an involution");
  }
  // Noncrossing: no two chords of the boundary circle interleave.
  for (int p = 0; p < P; ++p) {
    int q = mate[p];
    if (q < p) continue;
    for (int r = p + 1; r < q; ++r) {
      int s = mate[r];
      if (s < p || s > q)
        throw std::invalid_argument("FlatTangle: arcs " + std::to_string(p + 1) + "-" +
                                    std::to_string(q + 1) + " and " + std::to_string(r + 1) + "-" +
                                    std::to_string(s + 1) + " cross");
    }
  }
}

std::string FlatTangle::to_text() const {
  std::ostringstream out;
  bool first = true;
  for (int p = 0; p < points(); ++p) {
    if (mate[p] < p) continue;
    if (!first) out << ",";
    first = false;
    out << (p + 1) << "-" << (mate[p] + 1);
  }
  if (circles > 0) out << " +" << circles << " circles";
  return out.str();
}

FlatTangle FlatTangle::from_text(int m, int n, const std::string& text) {
  FlatTangle t;
  t.bottom = m;
  t.top = n;
  t.mate.assign(m + n, -1);
  std::istringstream in(text);
  std::string pair;
  while (std::getline(in, pair, ',')) {
    auto dash = pair.find('-');
    if (dash == std::string::npos)
      throw std::invalid_argument("FlatTangle::from_text: bad pair '" + pair + "'");
    int a = 0, b = 0;
    try {
      a = std::stoi(pair.substr(0, dash));
      b = std::stoi(pair.substr(dash + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("FlatTangle::from_text: bad pair '" + pair + "'");
    }
    if (a < 1 || a > m + n || b < 1 || b > m + n)
      throw std::invalid_argument("FlatTangle::from_text: point out of range in '" + pair + "'");
    if (t.mate[a - 1] != -1 || t.mate[b - 1] != -1)
      throw std::invalid_argument("FlatTangle::from_text: point repeated in '" + pair + "'");
    t.mate[a - 1] = b - 1;
    t.mate[b - 1] = a - 1;
  }
  for (int p = 0; p < m + n; ++p)
    if (t.mate[p] == -1)
      throw std::invalid_argument("FlatTangle::from_text: point " + std::to_string(p + 1) +
                                  " unmatched");
  t.check();
  return t;
}

FlatComposition compose_flat_traced(const FlatTangle& a, const FlatTangle& b) {
  if (a.top != b.bottom)
    throw std::invalid_argument("compose_flat: boundary mismatch (a.top=" + std::to_string(a.top) +
                                ", b.bottom=" + std::to_string(b.bottom) + ")");
  const int m = a.bottom, n = a.top, p = b.top;
  // Interface position t in [0,n), counted left to right, corresponds to
  // a-label m+n-1-t (a's top runs right to left) and to b-label t.
  auto a_label = [&](int t) { return m + n - 1 - t; };

  FlatComposition out;
  out.result.bottom = m;
  out.result.top = p;
  out.result.mate.assign(m + p, -1);

  std::vector<char> seen_a(a.points(), 0), seen_b(b.points(), 0);

  // Follow the strand from boundary point `label` on side 0 (inside a) or
  // side 1 (inside b) until it exits at a composite boundary point.
  auto trace = [&](int side, int label) {
    for (;;) {
      if (side == 0) {
        seen_a[label] = 1;
        int j = a.mate[label];
        seen_a[j] = 1;
        if (j < m) return std::pair<int, int>(0, j);
        side = 1;
        label = m + n - 1 - j;  // interface position
      } else {
        seen_b[label] = 1;
        int k = b.mate[label];
        seen_b[k] = 1;
        if (k >= n) return std::pair<int, int>(1, k);
        side = 0;
        label = a_label(k);
      }
    }
  };

  // Composite labels: bottom points are a's bottoms; a composite top point
  // with b-label k (k >= n) sits at the same physical position, giving
  // composite label k - n + m.
  auto final_label = [&](std::pair<int, int> endpoint) {
    return endpoint.first == 0 ? endpoint.second : endpoint.second - n + m;
  };

  for (int i = 0; i < m + p; ++i) {
    if (out.result.mate[i] != -1) continue;
    std::pair<int, int> start =
        i < m ? std::pair<int, int>(0, i) : std::pair<int, int>(1, i - m + n);
    auto end = trace(start.first, start.second);
    int j = final_label(end);
    out.result.mate[i] = j;
    out.result.mate[j] = i;
  }

  // Interface points not visited by any boundary strand lie on closed loops
  // created by this composition.
  std::vector<std::vector<int>> loops;
  for (int t = 0; t < n; ++t) {
    if (seen_a[a_label(t)]) continue;
    std::vector<int> iface;
    int side = 0, label = a_label(t);
    while (!(side == 0 && seen_a[label]) && !(side == 1 && seen_b[label])) {
      if (side == 0) {
        seen_a[label] = 1;
        int j = a.mate[label];
        seen_a[j] = 1;
        int tt = m + n - 1 - j;
        iface.push_back(tt);
        side = 1;
        label = tt;
      } else {
        seen_b[label] = 1;
        int k = b.mate[label];
        seen_b[k] = 1;
        iface.push_back(k);
        side = 0;
        label = a_label(k);
      }
    }
    std::sort(iface.begin(), iface.end());
    iface.erase(std::unique(iface.begin(), iface.end()), iface.end());
    loops.push_back(std::move(iface));
  }
  std::sort(loops.begin(), loops.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });

  out.new_loops = static_cast<int>(loops.size());
  out.loop_interface = std::move(loops);
  out.result.circles = out.new_loops + a.circles + b.circles;
  out.result.check();
  return out;
}

std::pair<FlatTangle, int> compose_flat(const FlatTangle& a, const FlatTangle& b) {
  auto c = compose_flat_traced(a, b);
  return {c.result, c.new_loops};
}

FlatTangle hjoin(const FlatTangle& a, const FlatTangle& b) {
  FlatTangle t;
  t.bottom = a.bottom + b.bottom;
  t.top = a.top + b.top;
  t.circles = a.circles + b.circles;
  t.mate.assign(t.points(), -1);
  // a keeps its bottom labels; its top labels shift past all of b's points
  // (b occupies the rightmost top positions, hence the smallest top labels).
  auto lift_a = [&](int q) { return q < a.bottom ? q : q + b.points(); };
  // For b both bottom and top labels shift by a.bottom.
  auto lift_b = [&](int q) { return q + a.bottom; };
  for (int q = 0; q < a.points(); ++q) {
    int u = lift_a(q), v = lift_a(a.mate[q]);
    t.mate[u] = v;
    t.mate[v] = u;
  }
  for (int q = 0; q < b.points(); ++q) {
    int u = lift_b(q), v = lift_b(b.mate[q]);
    t.mate[u] = v;
    t.mate[v] = u;
  }
  t.check();
  return t;
}

namespace {

/// Noncrossing perfect matchings of the contiguous points lo..hi: the first
/// point pairs with a partner leaving evenly many points on each side, and
/// both sides match independently.
std::vector<std::vector<std::pair<int, int>>> nc_matchings(int lo, int hi) {
  std::vector<std::vector<std::pair<int, int>>> res;
  if (lo > hi) {
    res.emplace_back();
    return res;
  }
  for (int b = lo + 1; b <= hi; b += 2) {
    auto inner = nc_matchings(lo + 1, b - 1);
    auto outer = nc_matchings(b + 1, hi);
    for (const auto& in : inner)
      for (const auto& out : outer) {
        std::vector<std::pair<int, int>> mm;
        mm.reserve(1 + in.size() + out.size());
        mm.emplace_back(lo, b);
        mm.insert(mm.end(), in.begin(), in.end());
        mm.insert(mm.end(), out.begin(), out.end());
        res.push_back(std::move(mm));
      }
  }
  return res;
}

}  // namespace

std::vector<FlatTangle> enumerate_tl(int n) { return enumerate_flat(n, n); }

std::vector<FlatTangle> enumerate_flat(int bottom, int top) {
  if (bottom < 0 || top < 0 || (bottom + top) % 2 != 0)
    throw std::invalid_argument("enumerate_flat: boundary total must be even and non-negative");
  // the boundary points read in order 0..bottom+top-1 trace the disk boundary
  // once, so planar diagrams correspond to noncrossing matchings of that
  // linear order regardless of where the bottom/top split falls
  std::vector<FlatTangle> out;
  for (const auto& mm : nc_matchings(0, bottom + top - 1)) {
    FlatTangle t;
    t.bottom = bottom;
    t.top = top;
    t.mate.assign(bottom + top, -1);
    for (auto [u, v] : mm) {
      t.mate[u] = v;
      t.mate[v] = u;
    }
    t.check();
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tlkh
