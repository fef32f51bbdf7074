#pragma once

// Joint free cumulants Z_w of u_t and u_t^* as quasi-polynomials in
// (t, y = e^{-t/2}), by the Moebius sum over NC(n) and by recursion.

#include "fubm/moments.hpp"
#include "fubm/qpoly.hpp"

namespace fubm {

/// Largest word length accepted by z_mobius.
inline constexpr int kMaxMobiusWord = 14;

struct ZPolynomial {
  Word word;
  QuasiPoly value;
};

QuasiPoly z_mobius(const Word& w);
/// Memoized over canonical_word orbits; safe to call from several threads.
QuasiPoly z_recursive(const Word& w);
void clear_z_cache();

int switch_number(const Word& w);
/// Least word (One < Star) under rotation, reversal and 1<->* swap.
Word canonical_word(const Word& w);
/// Cumulant of a Haar unitary: signed Catalan for even alternating words.
Rational haar_cumulant(const Word& w);

/// Strictly alternating word of even length, (1*)^k or (*1)^k.
bool is_even_alternating(const Word& w);

}  // namespace fubm
