#pragma once

#include "weyl.hpp"

#include <map>

namespace flagk {

/**
 * Polynomial model of the cohomology ring of the flag variety.
 *
 * A class is a polynomial in the simple roots: the key is the exponent
 * vector (entry i = power of alpha_i), the value its rational coefficient.
 * Schubert classes are represented by divided-difference descent from the
 * point class, and coefficients are read back off by applying the
 * complementary operator chain and taking the constant term.
 */
using PolyClass = std::map<IVec, Rat>;

void pc_add_term(PolyClass& f, const IVec& mono, const Rat& c);
PolyClass pc_add(const PolyClass& f, const PolyClass& g);
PolyClass pc_sub(const PolyClass& f, const PolyClass& g);
PolyClass pc_mul(const PolyClass& f, const PolyClass& g);
PolyClass pc_one(int rank);

// Linear form sum_i r_i alpha_i.
PolyClass pc_linear(const RVec& r);

// Substitution alpha_i -> alpha_i - a_{ji} alpha_j (the reflection s_j).
PolyClass pc_reflect(const RootSystem& rs, int j, const PolyClass& f);

// Divided difference (f - s_j f) / alpha_j.  The numerator has no
// alpha_j-free part, so the division is an exponent shift.
PolyClass divided_difference(const RootSystem& rs, int j, const PolyClass& f);

// Operator chain along a word, left factor applied last.
PolyClass divided_difference_word(const RootSystem& rs, const std::vector<int>& word,
                                  const PolyClass& f);

// Point class (1/|W|) prod_{beta > 0} beta.
PolyClass point_rep(const RootSystem& rs, const WeylGroup& wg);

// Polynomial representative of the Schubert class indexed by w, of degree
// (number of positive roots) - length(w).
PolyClass schubert_rep(const RootSystem& rs, const WeylGroup& wg, int w);

// Coefficient of the Schubert class of v in f.
Rat schubert_coeff(const RootSystem& rs, const WeylGroup& wg, int v, const PolyClass& f);

// Coordinates of a weight in the simple-root basis (exact solve).
RVec weight_root_coords(const RootSystem& rs, const IVec& lambda);

// Cup product of the degree-one class of lambda with the Schubert class of
// w, expanded over the covers of w.  Keys are covers v with length(v) =
// length(w) - 1, values the pairing of lambda with the coroot of the wall
// crossed between v and w.
std::map<int, Rat> classical_chevalley(const RootSystem& rs, const WeylGroup& wg,
                                       const IVec& lambda, int w);

}  // namespace flagk
