#pragma once

#include <compare>
#include <string>
#include <vector>

namespace tlkh {

/// A crossingless (m,n)-tangle diagram: a fixed-point-free noncrossing
/// involution on the m+n boundary points, plus a count of closed circle
/// components carried along with the diagram.
///
/// Boundary labels are 0-based and follow one cyclic order around the
/// diagram: bottom points 0..m-1 left to right, then top points m..m+n-1
/// right to left. Noncrossing means no two chords interleave in that order.
/// Closed circles are anonymous: only their number is recorded; morphisms
/// refer to them by index in the canonical gluing order (see frobcob).
struct FlatTangle {
  int bottom = 0;          ///< number of bottom boundary points (m)
  int top = 0;             ///< number of top boundary points (n)
  std::vector<int> mate;   ///< involution on [0, m+n)
  int circles = 0;         ///< closed components carried by the diagram

  /// n vertical strands.
  static FlatTangle identity(int n);
  /// Temperley-Lieb generator e_i on n strands (1 <= i <= n-1): a bottom arc
  /// joining bottom positions i,i+1 and a top arc joining top positions i,i+1.
  static FlatTangle turnback(int n, int i);
  /// The (0,2) diagram with a single arc.
  static FlatTangle cup();
  /// The (2,0) diagram with a single arc.
  static FlatTangle cap();

  int points() const { return bottom + top; }
  int arcs() const { return points() / 2; }
  /// Number of strands running from bottom to top.
  int through_degree() const;
  /// Reflection across a horizontal line: swaps bottom and top.
  FlatTangle mirrored() const;

  /// Validates the involution/noncrossing/count invariants; throws
  /// std::invalid_argument with a specific message on violation.
  void check() const;

  /// Renders the arcs as 1-based pairs, e.g. "1-4,2-3" for identity(2).
  /// Circles are appended as " +k circles" when present.
  std::string to_text() const;
  /// Parses the to_text pair format for an (m,n) diagram (no circle suffix).
  static FlatTangle from_text(int m, int n, const std::string& text);

  bool operator==(const FlatTangle&) const = default;
  /// Lexicographic order used for canonical sorting of diagram lists.
  auto operator<=>(const FlatTangle&) const = default;
};

/// Result of stacking two flat tangles, with enough of the gluing trace
/// retained for cobordism-level constructions to attribute every composite
/// circle to the pieces it came from.
struct FlatComposition {
  FlatTangle result;
  /// Closed loops created at the interface by this composition (these come
  /// first in `result.circles` index order, sorted by their smallest
  /// interface position; then a's carried circles, then b's).
  int new_loops = 0;
  /// For each new loop, the interface positions (0-based, in [0,n)) it runs
  /// through, smallest first.
  std::vector<std::vector<int>> loop_interface;
};

/// Stacks a (bottom) then b (top); requires a.top == b.bottom.
FlatComposition compose_flat_traced(const FlatTangle& a, const FlatTangle& b);

/// Convenience form returning the composite and the number of circles created.
std::pair<FlatTangle, int> compose_flat(const FlatTangle& a, const FlatTangle& b);

/// Horizontal juxtaposition: a on the left, b on the right.
FlatTangle hjoin(const FlatTangle& a, const FlatTangle& b);

/// All crossingless (n,n) diagrams without circles, canonically ordered.
/// There are Catalan(n) of them.
std::vector<FlatTangle> enumerate_tl(int n);

/// All crossingless (bottom, top) diagrams without circles, canonically
/// ordered; bottom + top must be even. There are Catalan((bottom + top) / 2)
/// of them.
std::vector<FlatTangle> enumerate_flat(int bottom, int top);

}  // namespace tlkh
