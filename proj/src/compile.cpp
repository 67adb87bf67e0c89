#include "tlkh/compile.hpp"

#include "tlkh/simplify.hpp"

#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tlkh {

void BraidWord::check() const {
  if (strands < 1) throw std::invalid_argument("braid word: needs at least one strand");
  for (int letter : letters) {
    int i = std::abs(letter);
    if (i < 1 || i > strands - 1)
      throw std::invalid_argument("braid word: letter " + std::to_string(letter) +
                                  " out of range for " + std::to_string(strands) + " strands");
  }
}

BraidWord BraidWord::from_text(int strands, const std::string& text) {
  BraidWord w;
  w.strands = strands;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("braid word: bad token '" + tok + "'");
    }
    if (pos != tok.size()) throw std::invalid_argument("braid word: bad token '" + tok + "'");
    w.letters.push_back(v);
  }
  w.check();
  return w;
}

std::string BraidWord::to_text() const {
  std::string out;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters[i]);
  }
  return out;
}

BraidWord BraidWord::mirrored() const {
  BraidWord w = *this;
  for (int& letter : w.letters) letter = -letter;
  return w;
}

int BraidWord::writhe() const {
  int w = 0;
  for (int letter : letters) w += letter > 0 ? 1 : -1;
  return w;
}

Complex crossing_complex(int n, int i, int sign) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("crossing_complex: invalid generator index");
  if (sign != 1 && sign != -1) throw std::invalid_argument("crossing_complex: sign must be +-1");
  FlatTangle id = FlatTangle::identity(n);
  FlatTangle e = FlatTangle::turnback(n, i);
  if (sign > 0)
    return Complex(n, n, {{id, 1, 0}, {e, 2, 1}}, {{{0, 1}, CobMorphism::saddle(id, e)}});
  return Complex(n, n, {{e, -2, -1}, {id, -1, 0}}, {{{0, 1}, CobMorphism::saddle(e, id)}});
}

Complex braid_complex(const BraidWord& w) {
  w.check();
  Complex acc = Complex::single(FlatTangle::identity(w.strands));
  for (int letter : w.letters)
    acc = tensor_v(acc, crossing_complex(w.strands, std::abs(letter), letter > 0 ? 1 : -1));
  return acc;
}

BraidWord torus_braid(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("torus_braid: need n >= 1, k >= 0");
  BraidWord w;
  w.strands = n;
  for (int rep = 0; rep < k; ++rep)
    for (int i = n - 1; i >= 1; --i) w.letters.push_back(-i);
  return w;
}

BraidWord jm_braid(int n) {
  if (n < 1) throw std::invalid_argument("jm_braid: need n >= 1");
  BraidWord w;
  w.strands = n;
  for (int i = n - 1; i >= 1; --i) w.letters.push_back(-i);
  for (int i = 1; i <= n - 1; ++i) w.letters.push_back(-i);
  return w;
}

int closure_circles(const FlatTangle& t) {
  if (t.bottom != t.top) throw std::invalid_argument("closure_circles: needs an (n,n) diagram");
  const int n = t.bottom;
  // Round closure joins bottom position s to the top position directly above
  // it, which carries label 2n-1-s; together with the diagram's own arcs this
  // makes every boundary point degree 2, so circles = cycles of the pairing.
  std::vector<bool> seen(2 * n, false);
  int circles = t.circles;
  for (int start = 0; start < 2 * n; ++start) {
    if (seen[start]) continue;
    ++circles;
    int p = start;
    while (!seen[p]) {
      seen[p] = true;
      int q = t.mate[p];
      seen[q] = true;
      p = 2 * n - 1 - q;
    }
  }
  return circles;
}

void TangleWord::check() const {
  if (bottom < 0) throw std::invalid_argument("tangle word: negative bottom width");
  int width = bottom;
  for (const TangleToken& t : tokens) {
    switch (t.kind) {
      case TangleToken::crossing: {
        int i = std::abs(t.value);
        if (i < 1 || i > width - 1)
          throw std::invalid_argument("tangle word: crossing " + std::to_string(t.value) +
                                      " out of range at width " + std::to_string(width));
        break;
      }
      case TangleToken::cup:
        if (t.value < 0 || t.value > width)
          throw std::invalid_argument("tangle word: cup position " + std::to_string(t.value) +
                                      " out of range at width " + std::to_string(width));
        width += 2;
        break;
      case TangleToken::cap:
        if (t.value < 0 || t.value > width - 2)
          throw std::invalid_argument("tangle word: cap position " + std::to_string(t.value) +
                                      " out of range at width " + std::to_string(width));
        width -= 2;
        break;
    }
  }
}

int TangleWord::top() const {
  check();
  int width = bottom;
  for (const TangleToken& t : tokens) {
    if (t.kind == TangleToken::cup) width += 2;
    if (t.kind == TangleToken::cap) width -= 2;
  }
  return width;
}

TangleWord TangleWord::from_text(const std::string& text, int bottom) {
  TangleWord w;
  w.bottom = bottom;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    TangleToken t;
    std::string num = tok;
    if (tok[0] == 'u' || tok[0] == 'n') {
      t.kind = tok[0] == 'u' ? TangleToken::cup : TangleToken::cap;
      num = tok.substr(1);
    }
    size_t pos = 0;
    try {
      t.value = std::stoi(num, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("tangle word: bad token '" + tok + "'");
    }
    if (pos != num.size() || num.empty())
      throw std::invalid_argument("tangle word: bad token '" + tok + "'");
    w.tokens.push_back(t);
  }
  w.check();
  return w;
}

std::string TangleWord::to_text() const {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    if (tokens[i].kind == TangleToken::cup) out += 'u';
    if (tokens[i].kind == TangleToken::cap) out += 'n';
    out += std::to_string(tokens[i].value);
  }
  return out;
}

Complex tangle_complex(const TangleWord& w, bool simplified) {
  w.check();
  Complex acc = Complex::single(FlatTangle::identity(w.bottom));
  int width = w.bottom;
  for (const TangleToken& t : w.tokens) {
    switch (t.kind) {
      case TangleToken::crossing:
        acc = tensor_v(acc, crossing_complex(width, std::abs(t.value), t.value > 0 ? 1 : -1));
        break;
      case TangleToken::cup:
        acc = tensor_v(acc, Complex::single(hjoin(FlatTangle::identity(t.value),
                                                  hjoin(FlatTangle::cup(),
                                                        FlatTangle::identity(width - t.value)))));
        width += 2;
        break;
      case TangleToken::cap:
        acc = tensor_v(acc, Complex::single(hjoin(FlatTangle::identity(t.value),
                                                  hjoin(FlatTangle::cap(),
                                                        FlatTangle::identity(width - t.value - 2)))));
        width -= 2;
        break;
    }
    if (simplified) acc = simplify_full(acc);
  }
  return acc;
}

Laurent kauffman_bracket(const BraidWord& w) {
  w.check();
  const Laurent circle = Laurent::monomial(1, 1) + Laurent::monomial(1, -1);
  // State: TL_n element as a combination of crossingless diagrams.
  std::map<FlatTangle, Laurent> state;
  state.emplace(FlatTangle::identity(w.strands), Laurent(Int(1)));
  for (int letter : w.letters) {
    // sigma^+ -> q I - q^2 e;  sigma^- -> 1/q I - 1/q^2 e  (Euler characteristic
    // of the crossing complex).
    int i = std::abs(letter);
    bool pos = letter > 0;
    std::map<FlatTangle, Laurent> next;
    for (const auto& [diag, coeff] : state) {
      next[diag] += coeff * Laurent::monomial(1, pos ? 1 : -1);
      auto [comp, loops] = compose_flat(diag, FlatTangle::turnback(w.strands, i));
      comp.circles = 0;  // loops are absorbed into the coefficient
      Laurent term = coeff * Laurent::monomial(-1, pos ? 2 : -2);
      for (int l = 0; l < loops; ++l) term = term * circle;
      next[comp] += term;
    }
    state = std::move(next);
  }
  Laurent total;
  for (const auto& [diag, coeff] : state) {
    Laurent term = coeff;
    for (int l = 0; l < closure_circles(diag); ++l) term = term * circle;
    total += term;
  }
  return total;
}

}  // namespace tlkh
