#pragma once

// Words in {1,*}, Biane's moment polynomials and the diagonal cumulants of u_t.

#include <string>
#include <string_view>
#include <vector>

#include "fubm/qpoly.hpp"

namespace fubm {

enum class Letter : unsigned char { One = 0, Star = 1 };

using Word = std::vector<Letter>;

/// Accepts "1*1", "uu*u*" (a trailing * marks an adjoint when u is used),
/// with optional spaces and commas. StructureError on empty or bad input.
Word parse_word(std::string_view text);
std::string word_to_string(const Word& w);
int count_ones(const Word& w);
int count_stars(const Word& w);
Word constant_word(Letter a, int n);
/// 1^k *^l.
Word ones_then_stars(int k, int l);
/// (1,*) repeated k times.
Word alternating_even(int k);
/// (1,*,1,...,*,1) of length 2k-1.
Word alternating_odd(int k);
Word subword(const Word& w, const std::vector<int>& positions);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

Poly biane_Q(int n);
QuasiPoly m_poly(const Word& w);
QuasiPoly diag_cumulant(int n);
Rational lambert_coeff(int n);
Rational exp_neg_sW_coeff(const Rational& s, int n);
/// Same coefficient as a polynomial in s.
Poly exp_neg_sW_poly(int n);

}  // namespace fubm
