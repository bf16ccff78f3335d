#pragma once

#include "rootdata.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace flagk {

// Subsets of simple-root indices (parabolic types) as bitmasks.
using Mask = std::uint32_t;

/** Raised when a coset chain admits no lift below the given bound. */
struct NoLiftError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * The full Weyl group of a root system, generated once up front.
 *
 * Elements are identified by dense indices; index 0 is the identity.
 * Each element is stored as the integer matrix of its action in the
 * fundamental-weight basis (column i = w(omega_i)), which doubles as a
 * faithful canonical key. The stored reduced word of each element is the
 * lexicographically least one, a byproduct of breadth-first generation.
 */
class WeylGroup {
public:
    // Generates the whole group; throws std::length_error when the order
    // would exceed order_cap, std::invalid_argument on a bad cap.
    explicit WeylGroup(const RootSystem& rs, std::size_t order_cap = 51840);

    const RootSystem& root_system() const { return *rs_; }
    int rank() const { return rs_->rank(); }
    int size() const { return static_cast<int>(words_.size()); }

    int identity() const { return 0; }
    int longest() const { return longest_; }
    int simple(int j) const { return simple_[j]; }

    int length(int w) const { return static_cast<int>(words_[w].size()); }
    // Lexicographically least reduced word, 0-based generator indices.
    const std::vector<int>& word(int w) const { return words_[w]; }

    int mul(int a, int b) const;
    int inverse(int w) const { return inverse_[w]; }

    // Product of simple reflections word[0] word[1] ...; rejects out-of-range
    // generator indices. The word need not be reduced.
    int from_word(const std::vector<int>& word) const;

    // w acting on a weight in fundamental-weight coordinates.
    IVec act(int w, const IVec& lam) const;
    RVec act(int w, const RVec& lam) const;

    // Bruhat-Chevalley order (memoized descent recursion).
    bool bruhat_leq(int v, int w) const;

    // The reflection s_beta as a group element.
    int reflection(const PosRoot& beta) const;

    // Elements of the standard parabolic subgroup W_J, identity first,
    // nondecreasing length.
    const std::vector<int>& subgroup(Mask J) const;
    // Longest element of W_J.
    int longest_in(Mask J) const;

    // Unique shortest / longest element of the coset w W_J.
    int min_rep(int w, Mask J) const;
    int max_rep(int w, Mask J) const;

    // Coset order on W/W_J: compare minimal representatives.
    bool coset_leq(int v_min, int w_min, Mask J) const;

    /**
     * Maximal lift of a strictly decreasing coset chain against the bound w:
     * representatives t_i in tau_i W_J with w >= t_1 > t_2 > ... > t_r, each
     * t_i the greatest element of its coset below the previous one. Chains
     * are passed (and lifts returned) as element indices; chain entries are
     * the minimal coset representatives. Throws NoLiftError when some step
     * has no candidate, std::logic_error when a candidate set has no unique
     * greatest element.
     */
    std::vector<int> maximal_lift(const std::vector<int>& chain, int w, Mask J) const;

private:
    const RootSystem* rs_;
    std::vector<std::vector<Int>> matrices_;  // flattened rank x rank, row-major
    std::map<std::vector<Int>, int> index_;
    std::vector<std::vector<int>> words_;
    std::vector<int> inverse_;
    std::vector<int> simple_;
    int longest_ = 0;
    mutable std::map<std::pair<int, int>, bool> bruhat_memo_;
    mutable std::map<Mask, std::vector<int>> subgroup_memo_;

    std::vector<Int> mat_mul(const std::vector<Int>& a, const std::vector<Int>& b) const;
    int lookup(const std::vector<Int>& m) const;
};

}  // namespace flagk
