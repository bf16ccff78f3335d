#pragma once

#include "rat.hpp"

#include <string>
#include <vector>

namespace flagk {

using Int = long long;
using IVec = std::vector<Int>;  // integer coordinate vector
using RVec = std::vector<Rat>;  // rational coordinate vector

/**
 * One positive root, carried in three coordinate systems at once:
 * its expansion in simple roots, the expansion of its coroot in simple
 * coroots, and its expression in the fundamental-weight basis.
 */
struct PosRoot {
    IVec root_coords;
    IVec coroot_coords;
    IVec omega_coords;
};

/**
 * Finite root system generated from a Cartan matrix.
 *
 * Weights live in the fundamental-weight basis throughout: the j-th
 * coordinate of a weight IS its pairing with the j-th simple coroot.
 * Cartan convention: cartan()[i][j] = <alpha_j, alpha_i^vee>, so column j
 * of the matrix is alpha_j written in fundamental weights. Bourbaki
 * numbering for every type; in G2 the first simple root is the short one.
 */
class RootSystem {
public:
    // Throws std::invalid_argument for anything outside the finite
    // classification (A1..A8, B2..B8, C2..C8, D3..D8, E6..E8, F4, G2).
    RootSystem(char cartan_type, int rank);

    char type() const { return type_; }
    int rank() const { return rank_; }

    const std::vector<std::vector<int>>& cartan() const { return cartan_; }

    // alpha_j in fundamental-weight coordinates (column j of the Cartan matrix).
    const IVec& simple_root(int j) const { return simple_omega_[j]; }

    const std::vector<PosRoot>& positive_roots() const { return positive_; }

    // rho = omega_1 + ... + omega_n.
    const IVec& rho() const { return rho_; }

    // <lam, alpha_j^vee>: a coordinate read in this basis.
    Int pairing(const IVec& lam, int j) const { return lam[j]; }

    // <lam, beta^vee> for an arbitrary positive root beta.
    Int pairing(const IVec& lam, const PosRoot& beta) const;
    Rat pairing(const RVec& lam, const PosRoot& beta) const;

    // s_j(lam) = lam - <lam, alpha_j^vee> alpha_j.
    IVec reflect(int j, const IVec& lam) const;
    RVec reflect(int j, const RVec& lam) const;

    bool is_dominant(const IVec& lam) const;

private:
    char type_;
    int rank_;
    std::vector<std::vector<int>> cartan_;
    std::vector<IVec> simple_omega_;
    std::vector<PosRoot> positive_;
    IVec rho_;

    void build_positive_roots();
};

// Dimension of the irreducible module with dominant highest weight lambda
// (product over positive roots of <lambda+rho, beta^vee>/<rho, beta^vee>).
mpz_class weyl_dim(const RootSystem& rs, const IVec& lambda);

std::string cartan_name(const RootSystem& rs);

}  // namespace flagk
