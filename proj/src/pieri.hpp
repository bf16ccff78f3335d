#pragma once

#include "lspath.hpp"

namespace flagk {

/**
 * One row of the expansion bookkeeping for a restricted path: its endpoint,
 * the maximal lift of its coset chain, the initial direction, and the final
 * direction v (the last lift element). Everything an audit of the expansion
 * needs, in one place.
 */
struct ExpansionRow {
    int path_index;
    IVec endpoint;
    std::vector<int> lift;
    int iota;
    int v;
};

/**
 * The structure-sheaf expansion of e^lambda [O_{X_w}]: nonnegative integer
 * multiplicities keyed by Weyl elements, together with the per-path rows
 * that produced them.
 */
struct Expansion {
    int w;
    std::map<int, int> coeffs;
    std::vector<ExpansionRow> rows;
    int path_count() const { return static_cast<int>(rows.size()); }
};

// Indices (into pm.generate()) of paths whose initial direction lies at or
// below the coset of w.
std::vector<int> restricted_paths(const PathModel& pm, int w);

// Count final directions over the restricted paths.
Expansion expand(const PathModel& pm, int w);

/**
 * Exact operator-identity check certifying the expansion: for every probe x,
 *   e^lambda T_{w^-1}(x)  ==  sum over restricted paths eta of
 *                             T_{v(eta,w)^-1}(e^{eta(1)} x).
 * Returns false and fills *diag with the first mismatch. An empty probe list
 * is rejected.
 */
bool verify_operator_identity(const PathModel& pm, int w,
                              const std::vector<LaurentPoly>& probes,
                              std::string* diag = nullptr);

// Probe family used by the identity check: every monomial in the coordinate
// box {-box..box}^rank plus n_random random monomials.
std::vector<LaurentPoly> default_probes(int rank, Int box, int n_random,
                                        std::uint64_t seed);

/**
 * Cover-layer consistency: the multiplicities of the expansion at length
 * l(w) - 1 must be exactly the pairings <lambda, beta^vee> over the
 * length-lowering reflections w s_beta, and no other keys of that length may
 * appear. Returns false and fills *diag on the first violation.
 */
bool chevalley_cross_check(const PathModel& pm, int w, std::string* diag = nullptr);

// Push a coset of W/W_J through to the full flag setting: the longest
// representative.
int parabolic_pullback(const WeylGroup& wg, int coset, Mask J);

}  // namespace flagk
