#pragma once

#include "laurent.hpp"

#include <array>
#include <optional>

namespace flagk {

/**
 * Piecewise-linear path from the origin, stored as (velocity, duration)
 * segments with exact rational data. Durations sum to 1. Velocities of
 * encodable paths are integral weights of the form sigma(lambda), but the
 * root operators pass through intermediate rational velocities, so the
 * segment form keeps rational coordinates.
 */
struct Segment {
    RVec vel;
    Rat dur;
    bool operator==(const Segment&) const = default;
};
using SegPath = std::vector<Segment>;

/**
 * The (tau, a) encoding of a path of shape lambda: a strictly decreasing
 * chain of parabolic cosets (as minimal-representative element indices) and
 * the rational break sequence 0 = a_0 < a_1 < ... < a_r = 1.
 */
struct LSPath {
    std::vector<int> cosets;
    std::vector<Rat> breaks;
    bool operator==(const LSPath&) const = default;
    bool operator<(const LSPath& o) const {
        if (cosets != o.cosets) return cosets < o.cosets;
        return breaks < o.breaks;
    }
};

// Merge equal adjacent velocities, drop zero-duration segments; rejects
// paths whose durations do not sum to 1.
SegPath normalize_segs(SegPath segs);

/**
 * The path family of one dominant integral shape: the straight path, the
 * lowering/raising root operators, the (tau, a) encoding against W/W_lambda,
 * and the breadth-first closure under lowering with its crystal edges.
 */
class PathModel {
public:
    // Throws std::invalid_argument unless lambda is dominant integral.
    PathModel(const WeylGroup& wg, IVec lambda);

    const WeylGroup& weyl() const { return *wg_; }
    const RootSystem& root_system() const { return wg_->root_system(); }
    const IVec& shape() const { return lambda_; }
    // Stabilizer parabolic: the simple indices where lambda vanishes.
    Mask stabilizer() const { return J_; }

    SegPath straight() const;

    // Lowering / raising operator for the j-th simple root; nullopt is the
    // null path.
    std::optional<SegPath> f_op(int j, const SegPath& segs) const;
    std::optional<SegPath> e_op(int j, const SegPath& segs) const;

    // Endpoint in fundamental-weight coordinates; throws std::logic_error if
    // it is not integral (cannot happen for paths of this family).
    IVec endpoint(const SegPath& segs) const;

    // Validates on the way out: every velocity must be sigma(lambda) for a
    // coset sigma, and the coset chain must strictly decrease.
    LSPath encode(const SegPath& segs) const;
    SegPath decode(const LSPath& path) const;

    // All paths reachable from the straight path by lowering operators,
    // in discovery order (index 0 is the straight path). Throws
    // std::length_error if the closure exceeds 10x the module dimension.
    const std::vector<SegPath>& generate() const;
    // Lowering edges (from, to, j) between indices of generate().
    const std::vector<std::array<int, 3>>& crystal_edges() const;
    // Index of an encoded path within generate().
    int index_of(const LSPath& path) const;

    // Sum of e^{endpoint} over the family.
    LaurentPoly character() const;

    // Minimal representative of the first coset of the encoding.
    int initial_direction(const SegPath& segs) const;

    // The full lowering string {pi, f pi, ..., f^m pi} for a head path
    // (one with e_j pi null); rejects non-heads.
    std::vector<SegPath> alpha_string(int j, const SegPath& head) const;

private:
    const WeylGroup* wg_;
    IVec lambda_;
    Mask J_ = 0;
    std::map<IVec, int> dir_to_coset_;
    mutable std::vector<SegPath> paths_;
    mutable std::vector<std::array<int, 3>> edges_;
    mutable std::map<LSPath, int> path_index_;
    mutable bool generated_ = false;
};

}  // namespace flagk
