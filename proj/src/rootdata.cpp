#include "rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace flagk {

namespace {

std::vector<std::vector<int>> build_cartan(char type, int n) {
    auto bad = [&](const std::string& why) {
        throw std::invalid_argument(std::string("invalid Cartan type ") + type +
                                    std::to_string(n) + ": " + why);
    };
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto edge = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
    switch (type) {
        case 'A':
            if (n < 1 || n > 8) bad("rank must be 1..8");
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            break;
        case 'B':
            if (n < 2 || n > 8) bad("rank must be 2..8");
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            a[n - 1][n - 2] = -2;  // last simple root short
            break;
        case 'C':
            if (n < 2 || n > 8) bad("rank must be 2..8");
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            a[n - 2][n - 1] = -2;  // last simple root long
            break;
        case 'D':
            if (n < 3 || n > 8) bad("rank must be 3..8");
            for (int i = 0; i + 1 < n - 1; ++i) edge(i, i + 1);
            edge(n - 3, n - 1);
            break;
        case 'E':
            if (n < 6 || n > 8) bad("rank must be 6..8");
            edge(0, 2); edge(2, 3); edge(3, 4); edge(4, 5); edge(1, 3);
            if (n >= 7) edge(5, 6);
            if (n == 8) edge(6, 7);
            break;
        case 'F':
            if (n != 4) bad("rank must be 4");
            edge(0, 1); edge(2, 3);
            a[1][2] = -1; a[2][1] = -2;
            break;
        case 'G':
            if (n != 2) bad("rank must be 2");
            a[0][1] = -3; a[1][0] = -1;  // alpha_1 short
            break;
        default:
            bad("type letter must be one of A B C D E F G");
    }
    return a;
}

std::size_t classified_count(char type, int n) {
    switch (type) {
        case 'A': return static_cast<std::size_t>(n) * (n + 1) / 2;
        case 'B':
        case 'C': return static_cast<std::size_t>(n) * n;
        case 'D': return static_cast<std::size_t>(n) * (n - 1);
        case 'E': return n == 6 ? 36 : (n == 7 ? 63 : 120);
        case 'F': return 24;
        case 'G': return 6;
    }
    return 0;
}

}  // namespace

RootSystem::RootSystem(char cartan_type, int rank)
    : type_(cartan_type), rank_(rank), cartan_(build_cartan(cartan_type, rank)) {
    simple_omega_.resize(rank_);
    for (int j = 0; j < rank_; ++j) {
        simple_omega_[j].resize(rank_);
        for (int i = 0; i < rank_; ++i) simple_omega_[j][i] = cartan_[i][j];
    }
    rho_.assign(rank_, 1);
    build_positive_roots();
}

void RootSystem::build_positive_roots() {
    const int n = rank_;
    // Orbit closure from the simple roots: apply simple reflections to the
    // (root, coroot) coordinate pair, keep whatever stays positive.
    std::set<IVec> seen;
    std::vector<std::pair<IVec, IVec>> queue;
    for (int j = 0; j < n; ++j) {
        IVec r(n, 0), c(n, 0);
        r[j] = 1;
        c[j] = 1;
        seen.insert(r);
        queue.emplace_back(r, c);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto [r, c] = queue[head];
        for (int k = 0; k < n; ++k) {
            Int pr = 0, pc = 0;
            for (int j = 0; j < n; ++j) pr += cartan_[k][j] * r[j];
            for (int i = 0; i < n; ++i) pc += cartan_[i][k] * c[i];
            IVec r2 = r, c2 = c;
            r2[k] -= pr;
            c2[k] -= pc;
            if (std::all_of(r2.begin(), r2.end(), [](Int x) { return x >= 0; }) &&
                seen.insert(r2).second) {
                queue.emplace_back(r2, c2);
            }
        }
    }
    if (queue.size() != classified_count(type_, n)) {
        throw std::logic_error("positive-root closure produced an unexpected count");
    }
    // Deterministic order: by height, then lexicographically.
    std::sort(queue.begin(), queue.end(), [](const auto& x, const auto& y) {
        Int hx = std::accumulate(x.first.begin(), x.first.end(), Int(0));
        Int hy = std::accumulate(y.first.begin(), y.first.end(), Int(0));
        if (hx != hy) return hx < hy;
        return x.first < y.first;
    });
    positive_.reserve(queue.size());
    for (auto& [r, c] : queue) {
        PosRoot pr;
        pr.root_coords = r;
        pr.coroot_coords = c;
        pr.omega_coords.assign(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) pr.omega_coords[i] += cartan_[i][j] * r[j];
        positive_.push_back(std::move(pr));
    }
}

Int RootSystem::pairing(const IVec& lam, const PosRoot& beta) const {
    Int s = 0;
    for (int i = 0; i < rank_; ++i) s += beta.coroot_coords[i] * lam[i];
    return s;
}

Rat RootSystem::pairing(const RVec& lam, const PosRoot& beta) const {
    Rat s = 0;
    for (int i = 0; i < rank_; ++i) s += Rat(static_cast<long>(beta.coroot_coords[i])) * lam[i];
    return s;
}

IVec RootSystem::reflect(int j, const IVec& lam) const {
    IVec out = lam;
    Int k = lam[j];
    for (int i = 0; i < rank_; ++i) out[i] -= k * cartan_[i][j];
    return out;
}

RVec RootSystem::reflect(int j, const RVec& lam) const {
    RVec out = lam;
    Rat k = lam[j];
    for (int i = 0; i < rank_; ++i) out[i] -= k * Rat(cartan_[i][j]);
    return out;
}

bool RootSystem::is_dominant(const IVec& lam) const {
    return std::all_of(lam.begin(), lam.end(), [](Int x) { return x >= 0; });
}

mpz_class weyl_dim(const RootSystem& rs, const IVec& lambda) {
    Rat dim(1);
    for (const PosRoot& beta : rs.positive_roots()) {
        Int num = rs.pairing(lambda, beta) + rs.pairing(rs.rho(), beta);
        Int den = rs.pairing(rs.rho(), beta);
        Rat factor(static_cast<long>(num), static_cast<long>(den));
        factor.canonicalize();
        dim *= factor;
    }
    if (dim.get_den() != 1) throw std::logic_error("weyl_dim: non-integral result");
    return dim.get_num();
}

std::string cartan_name(const RootSystem& rs) {
    return std::string(1, rs.type()) + std::to_string(rs.rank());
}

}  // namespace flagk
