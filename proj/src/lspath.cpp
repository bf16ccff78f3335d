#include "lspath.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagk {

namespace {

// Breakpoint list of a piecewise-linear function: ascending (time, value).
using PL = std::vector<std::pair<Rat, Rat>>;

void push_pt(PL& pts, const Rat& t, const Rat& v) {
    if (!pts.empty() && pts.back().first == t && pts.back().second == v) return;
    pts.push_back({t, v});
}

Rat interp(const PL& pts, const Rat& t) {
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const auto& [t0, v0] = pts[i];
        const auto& [t1, v1] = pts[i + 1];
        if (t0 <= t && t <= t1) {
            if (t0 == t1) return v0;
            return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
        }
    }
    throw std::logic_error("interpolation point out of range");
}

// Rebuild the path with velocities shifted by (sign * slope-of-disp) * alpha
// on each cell of the common refinement of the segment grid and the
// displacement function's breakpoints.
SegPath apply_displacement(const SegPath& segs, const std::vector<Rat>& times,
                           const PL& disp, const IVec& alpha, int sign) {
    std::vector<Rat> grid = times;
    for (const auto& [t, v] : disp) grid.push_back(t);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    SegPath out;
    std::size_t seg_idx = 0;
    const std::size_t n = alpha.size();
    for (std::size_t g = 0; g + 1 < grid.size(); ++g) {
        const Rat& u = grid[g];
        const Rat& v = grid[g + 1];
        while (!(times[seg_idx] <= u && v <= times[seg_idx + 1])) ++seg_idx;
        Rat slope = (interp(disp, v) - interp(disp, u)) / (v - u);
        RVec nv = segs[seg_idx].vel;
        for (std::size_t i = 0; i < n; ++i)
            nv[i] += Rat(sign) * slope * Rat(static_cast<long>(alpha[i]));
        out.push_back({std::move(nv), v - u});
    }
    return normalize_segs(std::move(out));
}

}  // namespace

SegPath normalize_segs(SegPath segs) {
    SegPath out;
    Rat total = 0;
    for (auto& s : segs) {
        if (s.dur == 0) continue;
        total += s.dur;
        if (!out.empty() && out.back().vel == s.vel) {
            out.back().dur += s.dur;
        } else {
            out.push_back(std::move(s));
        }
    }
    if (total != 1) throw std::invalid_argument("segment durations must sum to 1");
    return out;
}

PathModel::PathModel(const WeylGroup& wg, IVec lambda) : wg_(&wg), lambda_(std::move(lambda)) {
    const RootSystem& rs = wg.root_system();
    if (static_cast<int>(lambda_.size()) != rs.rank() || !rs.is_dominant(lambda_)) {
        throw std::invalid_argument("path shape must be a dominant integral weight");
    }
    for (int i = 0; i < rs.rank(); ++i)
        if (lambda_[i] == 0) J_ |= Mask(1) << i;
    for (int w = 0; w < wg.size(); ++w) {
        if (wg.min_rep(w, J_) != w) continue;
        dir_to_coset_.emplace(wg.act(w, lambda_), w);
    }
}

SegPath PathModel::straight() const {
    RVec vel(lambda_.size());
    for (std::size_t i = 0; i < lambda_.size(); ++i) vel[i] = to_rat(lambda_[i]);
    return {{std::move(vel), Rat(1)}};
}

std::optional<SegPath> PathModel::f_op(int j, const SegPath& segs) const {
    const IVec& alpha = root_system().simple_root(j);
    std::vector<Rat> times = {Rat(0)};
    std::vector<Rat> h = {Rat(0)};
    for (const auto& s : segs) {
        times.push_back(times.back() + s.dur);
        h.push_back(h.back() + s.vel[j] * s.dur);
    }
    Rat m = *std::min_element(h.begin(), h.end());
    if (h.back() - m < 1) return std::nullopt;

    // q(t) = min over [t, 1] of h, swept backward.
    PL qpts = {{times.back(), h.back()}};
    Rat qr = h.back();
    for (int i = static_cast<int>(segs.size()) - 1; i >= 0; --i) {
        const Rat& ta = times[i];
        const Rat& tb = times[i + 1];
        const Rat& a = h[i];
        const Rat& b = h[i + 1];
        if (b <= a || a >= qr) {
            push_pt(qpts, ta, qr);
        } else if (qr == b) {
            push_pt(qpts, ta, a);
            qr = a;
        } else {
            Rat ts = ta + (qr - a) / (b - a) * (tb - ta);
            push_pt(qpts, ts, qr);
            push_pt(qpts, ta, a);
            qr = a;
        }
    }
    std::reverse(qpts.begin(), qpts.end());

    // l(t) = min(1, q(t) - m), with the crossing q - m = 1 made explicit.
    PL lpts;
    for (std::size_t idx = 0; idx < qpts.size(); ++idx) {
        const auto& [t0, q0] = qpts[idx];
        Rat v0 = q0 - m;
        if (idx > 0) {
            const auto& [tp, qp] = qpts[idx - 1];
            Rat vp = qp - m;
            if (vp < 1 && 1 < v0) {
                Rat ts = tp + (Rat(1) - vp) / (v0 - vp) * (t0 - tp);
                push_pt(lpts, ts, Rat(1));
            }
        }
        push_pt(lpts, t0, std::min(Rat(1), v0));
    }
    return apply_displacement(segs, times, lpts, alpha, -1);
}

std::optional<SegPath> PathModel::e_op(int j, const SegPath& segs) const {
    const IVec& alpha = root_system().simple_root(j);
    std::vector<Rat> times = {Rat(0)};
    std::vector<Rat> h = {Rat(0)};
    for (const auto& s : segs) {
        times.push_back(times.back() + s.dur);
        h.push_back(h.back() + s.vel[j] * s.dur);
    }
    Rat m = *std::min_element(h.begin(), h.end());
    if (m > -1) return std::nullopt;

    // p(t) = min over [0, t] of h, swept forward.
    PL ppts = {{Rat(0), Rat(0)}};
    Rat pl = 0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const Rat& ta = times[i];
        const Rat& tb = times[i + 1];
        const Rat& a = h[i];
        const Rat& b = h[i + 1];
        if (b >= a || b >= pl) {
            push_pt(ppts, tb, pl);
        } else {
            if (a > pl) {
                Rat ts = ta + (a - pl) / (a - b) * (tb - ta);
                push_pt(ppts, ts, pl);
            }
            push_pt(ppts, tb, b);
            pl = b;
        }
    }

    // r(t) = 1 - min(1, p(t) - m), with the crossing p - m = 1 explicit.
    PL rpts;
    for (std::size_t idx = 0; idx < ppts.size(); ++idx) {
        const auto& [t0, p0] = ppts[idx];
        Rat v0 = p0 - m;
        if (idx > 0) {
            const auto& [tp, pp] = ppts[idx - 1];
            Rat vp = pp - m;
            if (vp > 1 && 1 > v0) {
                Rat ts = tp + (vp - Rat(1)) / (vp - v0) * (t0 - tp);
                push_pt(rpts, ts, Rat(0));
            }
        }
        push_pt(rpts, t0, Rat(1) - std::min(Rat(1), v0));
    }
    return apply_displacement(segs, times, rpts, alpha, +1);
}

IVec PathModel::endpoint(const SegPath& segs) const {
    const std::size_t n = lambda_.size();
    RVec sum(n, Rat(0));
    for (const auto& s : segs)
        for (std::size_t i = 0; i < n; ++i) sum[i] += s.vel[i] * s.dur;
    IVec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sum[i].get_den() != 1) throw std::logic_error("path endpoint is not integral");
        out[i] = static_cast<Int>(sum[i].get_num().get_si());
    }
    return out;
}

LSPath PathModel::encode(const SegPath& segs) const {
    LSPath out;
    out.breaks.push_back(Rat(0));
    for (const auto& s : segs) {
        IVec dir(s.vel.size());
        for (std::size_t i = 0; i < s.vel.size(); ++i) {
            if (s.vel[i].get_den() != 1)
                throw std::logic_error("segment direction is not an integral weight");
            dir[i] = static_cast<Int>(s.vel[i].get_num().get_si());
        }
        auto it = dir_to_coset_.find(dir);
        if (it == dir_to_coset_.end())
            throw std::logic_error("segment direction is not a coset image of the shape");
        out.cosets.push_back(it->second);
        out.breaks.push_back(out.breaks.back() + s.dur);
    }
    if (out.breaks.back() != 1) throw std::logic_error("breaks must end at 1");
    for (std::size_t i = 1; i < out.cosets.size(); ++i) {
        bool strict = out.cosets[i] != out.cosets[i - 1] &&
                      wg_->bruhat_leq(out.cosets[i], out.cosets[i - 1]);
        if (!strict) throw std::logic_error("coset chain is not strictly decreasing");
    }
    return out;
}

SegPath PathModel::decode(const LSPath& path) const {
    if (path.cosets.empty() || path.breaks.size() != path.cosets.size() + 1 ||
        path.breaks.front() != 0 || path.breaks.back() != 1) {
        throw std::invalid_argument("malformed path encoding");
    }
    SegPath segs;
    for (std::size_t i = 0; i < path.cosets.size(); ++i) {
        if (!(path.breaks[i] < path.breaks[i + 1]))
            throw std::invalid_argument("breaks must strictly increase");
        IVec dir = wg_->act(path.cosets[i], lambda_);
        RVec vel(dir.size());
        for (std::size_t k = 0; k < dir.size(); ++k) vel[k] = to_rat(dir[k]);
        segs.push_back({std::move(vel), path.breaks[i + 1] - path.breaks[i]});
    }
    return normalize_segs(std::move(segs));
}

const std::vector<SegPath>& PathModel::generate() const {
    if (generated_) return paths_;
    mpz_class cap_z = 10 * weyl_dim(root_system(), lambda_);
    std::size_t cap = cap_z.fits_ulong_p() ? cap_z.get_ui() : SIZE_MAX;
    paths_.push_back(straight());
    path_index_.emplace(encode(paths_[0]), 0);
    for (std::size_t head = 0; head < paths_.size(); ++head) {
        for (int j = 0; j < root_system().rank(); ++j) {
            auto q = f_op(j, paths_[head]);
            if (!q) continue;
            LSPath key = encode(*q);
            auto [it, fresh] = path_index_.try_emplace(key, static_cast<int>(paths_.size()));
            if (fresh) {
                if (paths_.size() >= cap)
                    throw std::length_error("path generation exceeded the iteration cap");
                paths_.push_back(std::move(*q));
            }
            edges_.push_back({static_cast<int>(head), it->second, j});
        }
    }
    generated_ = true;
    return paths_;
}

const std::vector<std::array<int, 3>>& PathModel::crystal_edges() const {
    generate();
    return edges_;
}

int PathModel::index_of(const LSPath& path) const {
    generate();
    auto it = path_index_.find(path);
    if (it == path_index_.end()) throw std::invalid_argument("path is not in the family");
    return it->second;
}

LaurentPoly PathModel::character() const {
    LaurentPoly ch;
    for (const auto& p : generate()) lp_add_term(ch, endpoint(p), Rat(1));
    return ch;
}

int PathModel::initial_direction(const SegPath& segs) const {
    return encode(segs).cosets.front();
}

std::vector<SegPath> PathModel::alpha_string(int j, const SegPath& head) const {
    if (e_op(j, head)) {
        throw std::invalid_argument("string head must be annihilated by the raising operator");
    }
    std::vector<SegPath> string = {head};
    while (auto next = f_op(j, string.back())) {
        string.push_back(std::move(*next));
    }
    return string;
}

}  // namespace flagk
