#pragma once

#include "tlkh/complexes.hpp"

#include <string>
#include <vector>

namespace tlkh {

/// A braid word on a fixed number of strands. Letters are signed generator
/// indices: +i is sigma_i (positive crossing of strands i, i+1), -i its
/// inverse, with 1 <= i <= strands-1.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  void check() const;
  /// Parses whitespace-separated signed integers, e.g. "-1 -2 -1 -2".
  static BraidWord from_text(int strands, const std::string& text);
  std::string to_text() const;
  /// Mirror image: every letter negated.
  BraidWord mirrored() const;
  int writhe() const;

  bool operator==(const BraidWord&) const = default;
};

/// Two-term complex of one crossing on n strands:
/// positive:  q^1 I_n (hdeg 0) -> q^2 e_i (hdeg 1);
/// negative:  q^-2 e_i (hdeg -1) -> q^-1 I_n (hdeg 0);
/// differential the saddle.
Complex crossing_complex(int n, int i, int sign);

/// Tensor of the letters' crossing complexes, first letter at the bottom.
/// The empty word gives the one-object identity complex.
Complex braid_complex(const BraidWord& w);

/// Left-handed fractional twist: k repetitions of sigma_{n-1}^-1 ... sigma_1^-1
/// (the rightmost strand passes under the other n-1), k(n-1) letters total.
BraidWord torus_braid(int n, int k);

/// Left-handed Jucys-Murphy braid sigma_{n-1}^-1...sigma_1^-1 sigma_1^-1...sigma_{n-1}^-1.
BraidWord jm_braid(int n);

/// Kauffman bracket of the round closure of the word, computed in the
/// Temperley-Lieb algebra with circle value q + 1/q, under the same grading
/// conventions as the crossing complexes (so it equals the graded Euler
/// characteristic of the closed complex).
Laurent kauffman_bracket(const BraidWord& w);

/// Number of circles in the round closure of a crossingless (n,n) diagram
/// (carried circles included).
int closure_circles(const FlatTangle& t);

/// One building step of a decorated tangle word.
struct TangleToken {
  enum Kind { crossing, cup, cap };
  Kind kind = crossing;
  /// crossing: signed generator index (as in BraidWord letters, against the
  /// current width); cup: insertion position 0..width; cap: left position of
  /// the adjacent pair 0..width-2 joined by the cap.
  int value = 0;

  bool operator==(const TangleToken&) const = default;
};

/// A tangle presented as a word of elementary slices read bottom to top:
/// crossings, cup insertions ("u<p>": two new adjacent endpoints at position
/// p) and caps ("n<p>": joins the strands at positions p, p+1). The strand
/// count starts at `bottom` and is tracked through the word.
struct TangleWord {
  int bottom = 2;
  std::vector<TangleToken> tokens;

  /// Validates every slice against the running width; throws
  /// std::invalid_argument on the first bad token.
  void check() const;
  /// Number of top endpoints after the last slice.
  int top() const;
  /// Parses whitespace-separated tokens: signed integers for crossings,
  /// "u<p>" for cups, "n<p>" for caps, e.g. "u2 -2 -1 3 2 n0".
  static TangleWord from_text(const std::string& text, int bottom = 2);
  std::string to_text() const;

  bool operator==(const TangleWord&) const = default;
};

/// Khovanov-type complex of the tangle word: the slices' complexes stacked
/// bottom to top (cups and caps contribute single objects with no shift).
/// With simplified set, the complex is delooped and Gauss-reduced after
/// every slice, keeping intermediate sizes small.
Complex tangle_complex(const TangleWord& w, bool simplified = true);

}  // namespace tlkh
