#include "weyl.hpp"

#include <algorithm>
#include <set>

namespace flagk {

WeylGroup::WeylGroup(const RootSystem& rs, std::size_t order_cap) : rs_(&rs) {
    if (order_cap == 0) throw std::invalid_argument("order cap must be positive");
    const int n = rs.rank();

    // Generator matrices: s_j fixes omega_k for k != j and sends
    // omega_j to omega_j - alpha_j.
    std::vector<std::vector<Int>> gens(n, std::vector<Int>(n * n, 0));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) gens[j][i * n + i] = 1;
        for (int i = 0; i < n; ++i) gens[j][i * n + j] -= rs.cartan()[i][j];
    }

    std::vector<Int> id(n * n, 0);
    for (int i = 0; i < n; ++i) id[i * n + i] = 1;
    matrices_.push_back(id);
    index_[id] = 0;
    words_.push_back({});

    simple_.assign(n, -1);
    for (std::size_t head = 0; head < matrices_.size(); ++head) {
        for (int j = 0; j < n; ++j) {
            std::vector<Int> m = mat_mul(matrices_[head], gens[j]);
            auto [it, fresh] = index_.try_emplace(m, static_cast<int>(matrices_.size()));
            if (!fresh) continue;
            if (matrices_.size() >= order_cap) {
                throw std::length_error("Weyl group order exceeds the cap of " +
                                        std::to_string(order_cap));
            }
            matrices_.push_back(std::move(m));
            std::vector<int> w = words_[head];
            w.push_back(j);
            words_.push_back(std::move(w));
        }
    }
    for (int j = 0; j < n; ++j) simple_[j] = lookup(gens[j]);

    longest_ = static_cast<int>(matrices_.size()) - 1;
    if (length(longest_) != static_cast<int>(rs.positive_roots().size())) {
        throw std::logic_error("longest element length disagrees with the positive-root count");
    }

    inverse_.resize(matrices_.size());
    for (std::size_t w = 0; w < matrices_.size(); ++w) {
        std::vector<int> rev(words_[w].rbegin(), words_[w].rend());
        inverse_[w] = from_word(rev);
    }
}

std::vector<Int> WeylGroup::mat_mul(const std::vector<Int>& a, const std::vector<Int>& b) const {
    const int n = rs_->rank();
    std::vector<Int> out(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Int aik = a[i * n + k];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) out[i * n + j] += aik * b[k * n + j];
        }
    return out;
}

int WeylGroup::lookup(const std::vector<Int>& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::logic_error("element matrix not in the group table");
    return it->second;
}

int WeylGroup::mul(int a, int b) const {
    return lookup(mat_mul(matrices_[a], matrices_[b]));
}

int WeylGroup::from_word(const std::vector<int>& word) const {
    int w = identity();
    for (int j : word) {
        if (j < 0 || j >= rank()) throw std::invalid_argument("generator index out of range");
        w = mul(w, simple_[j]);
    }
    return w;
}

IVec WeylGroup::act(int w, const IVec& lam) const {
    const int n = rank();
    const auto& m = matrices_[w];
    IVec out(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i] += m[i * n + j] * lam[j];
    return out;
}

RVec WeylGroup::act(int w, const RVec& lam) const {
    const int n = rank();
    const auto& m = matrices_[w];
    RVec out(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m[i * n + j] != 0) out[i] += Rat(static_cast<long>(m[i * n + j])) * lam[j];
    return out;
}

bool WeylGroup::bruhat_leq(int v, int w) const {
    if (v == w || v == identity()) return true;
    if (length(v) >= length(w)) return false;
    auto key = std::make_pair(v, w);
    auto it = bruhat_memo_.find(key);
    if (it != bruhat_memo_.end()) return it->second;
    // Descent recursion: for j with s_j w < w,
    //   v <= w  iff  (s_j v < v ? s_j v <= s_j w : v <= s_j w).
    int j = words_[w].front();
    int sw = mul(simple_[j], w);
    int sv = mul(simple_[j], v);
    bool ans = length(sv) < length(v) ? bruhat_leq(sv, sw) : bruhat_leq(v, sw);
    bruhat_memo_[key] = ans;
    return ans;
}

int WeylGroup::reflection(const PosRoot& beta) const {
    const int n = rank();
    std::vector<Int> m(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            m[i * n + k] = (i == k ? 1 : 0) - beta.omega_coords[i] * beta.coroot_coords[k];
    return lookup(m);
}

const std::vector<int>& WeylGroup::subgroup(Mask J) const {
    auto it = subgroup_memo_.find(J);
    if (it != subgroup_memo_.end()) return it->second;
    std::vector<int> elems = {identity()};
    std::set<int> seen = {identity()};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (int j = 0; j < rank(); ++j) {
            if (!(J >> j & 1)) continue;
            int next = mul(elems[head], simple_[j]);
            if (seen.insert(next).second) elems.push_back(next);
        }
    }
    std::stable_sort(elems.begin(), elems.end(),
                     [this](int a, int b) { return length(a) < length(b); });
    return subgroup_memo_.emplace(J, std::move(elems)).first->second;
}

int WeylGroup::longest_in(Mask J) const {
    const auto& sub = subgroup(J);
    return sub.back();
}

int WeylGroup::min_rep(int w, Mask J) const {
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j = 0; j < rank(); ++j) {
            if (!(J >> j & 1)) continue;
            int next = mul(w, simple_[j]);
            if (length(next) < length(w)) {
                w = next;
                moved = true;
            }
        }
    }
    return w;
}

int WeylGroup::max_rep(int w, Mask J) const {
    return mul(min_rep(w, J), longest_in(J));
}

bool WeylGroup::coset_leq(int v_min, int w_min, Mask J) const {
    return bruhat_leq(min_rep(v_min, J), min_rep(w_min, J));
}

std::vector<int> WeylGroup::maximal_lift(const std::vector<int>& chain, int w, Mask J) const {
    std::vector<int> lift;
    lift.reserve(chain.size());
    const auto& sub = subgroup(J);
    for (std::size_t i = 0; i < chain.size(); ++i) {
        int base = min_rep(chain[i], J);
        std::vector<int> candidates;
        for (int u : sub) {
            int t = mul(base, u);
            bool below = i == 0 ? bruhat_leq(t, w) : (t != lift.back() && bruhat_leq(t, lift.back()));
            if (below) candidates.push_back(t);
        }
        if (candidates.empty()) {
            throw NoLiftError("coset chain admits no lift below the bound at step " +
                              std::to_string(i + 1));
        }
        int best = -1;
        for (int c : candidates) {
            bool top = true;
            for (int d : candidates) {
                if (!bruhat_leq(d, c)) {
                    top = false;
                    break;
                }
            }
            if (top) {
                if (best != -1) throw std::logic_error("lift step has two greatest elements");
                best = c;
            }
        }
        if (best == -1) throw std::logic_error("lift step has no greatest element");
        lift.push_back(best);
    }
    return lift;
}

}  // namespace flagk
