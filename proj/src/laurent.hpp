#pragma once

#include "weyl.hpp"

#include <map>

namespace flagk {

/**
 * Sparse element of the group algebra of the weight lattice: a finite map
 * from integral weights (fundamental-weight coordinates) to exact rational
 * coefficients. Zero coefficients are never stored, so the zero element is
 * the empty map, and the lexicographic key order doubles as the display and
 * serialization order.
 */
using LaurentPoly = std::map<IVec, Rat>;

// f += c * e^mu, erasing the term if the sum vanishes.
void lp_add_term(LaurentPoly& f, const IVec& mu, const Rat& c);

LaurentPoly lp_mono(const IVec& mu, const Rat& c = Rat(1));
LaurentPoly lp_one(int rank);

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_scale(const Rat& c, const LaurentPoly& f);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);

// Sum of coefficients (the augmentation e^lambda -> 1).
Rat epsilon(const LaurentPoly& f);

// w . e^lambda = e^{w lambda}, extended linearly; a ring automorphism.
LaurentPoly weyl_act(const WeylGroup& wg, int w, const LaurentPoly& f);

/**
 * Push-pull operator for the j-th simple root, in division-free closed form.
 * On a monomial e^mu with k = <mu, alpha_j^vee>:
 *   k >=  0:  sum_{m=0..k}     e^{mu - m alpha_j}
 *   k == -1:  0
 *   k <= -2:  -sum_{m=1..-k-1} e^{mu + m alpha_j}
 * (the geometric-series expansion of (e^alpha x - s_alpha x)/(e^alpha - 1)).
 */
LaurentPoly demazure_T(const RootSystem& rs, int j, const LaurentPoly& f);

/**
 * Companion operator (x - s_alpha x)/(1 - e^{-alpha}) in closed form:
 *   k >=  1:  sum_{m=0..k-1}  e^{mu - m alpha_j}
 *   k ==  0:  0
 *   k <= -1:  -sum_{m=1..-k}  e^{mu + m alpha_j}
 * Satisfies demazure_T(x) = e^{-rho} L(e^{rho} x) identically.
 */
LaurentPoly demazure_L(const RootSystem& rs, int j, const LaurentPoly& f);

// Composite along a reduced word, left factor applied last. Rejects
// non-reduced words (the composite is then not the intended operator).
LaurentPoly demazure_T_word(const WeylGroup& wg, const std::vector<int>& word,
                            const LaurentPoly& f);

/**
 * Structure-sheaf class of the parabolic point stratum for J:
 * (|W_J| / |W|) * prod (1 - e^{-alpha}) over positive roots alpha whose
 * support is not contained in J.
 */
LaurentPoly point_class(const WeylGroup& wg, Mask J);

// Character of the irreducible with dominant highest weight lambda: the full
// Demazure-operator chain along the longest element applied to e^lambda.
// Rejects non-dominant lambda.
LaurentPoly demazure_character(const WeylGroup& wg, const IVec& lambda);

// Evaluate at a character point: e^mu -> prod_i xs[i]^{mu_i}. Exact; used by
// tests to compare the closed forms against their defining quotients.
Rat char_eval(const LaurentPoly& f, const std::vector<Rat>& xs);

}  // namespace flagk
