#pragma once

#include "tlkh/complexes.hpp"

namespace tlkh {

/// Replaces every object carrying k closed circles by its 2^k circle-free
/// copies, one per choice of q-shift +1 or -1 for each circle, conjugating
/// the differential by the standard birth/death/dot isomorphism. Homology is
/// unchanged and no circles remain in the output. Pass check = false to skip
/// the constructor validation of the rebuilt complex.
Complex deloop(const Complex& c, bool check = true);

/// Repeatedly cancels a differential entry that is +-1 times an identity
/// cobordism between equal objects, applying the standard elimination
/// correction to the remaining entries. The pivot with the smallest source
/// (hdeg, qshift, object index) is cancelled first, so the output is
/// deterministic. Homology is unchanged; the object count strictly decreases
/// with each cancellation.
Complex gauss_eliminate(const Complex& c, bool check = true);

/// deloop then gauss_eliminate; the result carries no circles and has no
/// +-1 identity entries left.
Complex simplify_full(const Complex& c, bool check = true);

/// True iff Hom(b, C) has vanishing homology in every quantum degree inside
/// [q_lo, q_hi], for every crossingless diagram b with C's boundary. For a
/// closed complex this reduces to its homology vanishing in the window.
bool is_acyclic_in_window(const Complex& c, int q_lo, int q_hi);

}  // namespace tlkh
