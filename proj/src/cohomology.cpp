#include "cohomology.hpp"

#include <stdexcept>

namespace flagk {

void pc_add_term(PolyClass& f, const IVec& mono, const Rat& c) {
    if (c == 0) return;
    auto it = f.find(mono);
    if (it == f.end()) {
        f.emplace(mono, c);
    } else {
        it->second += c;
        if (it->second == 0) f.erase(it);
    }
}

PolyClass pc_add(const PolyClass& f, const PolyClass& g) {
    PolyClass out = f;
    for (const auto& [m, c] : g) pc_add_term(out, m, c);
    return out;
}

PolyClass pc_sub(const PolyClass& f, const PolyClass& g) {
    PolyClass out = f;
    for (const auto& [m, c] : g) pc_add_term(out, m, -c);
    return out;
}

PolyClass pc_mul(const PolyClass& f, const PolyClass& g) {
    PolyClass out;
    for (const auto& [m1, c1] : f)
        for (const auto& [m2, c2] : g) {
            IVec m(m1.size());
            for (size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
            pc_add_term(out, m, c1 * c2);
        }
    return out;
}

PolyClass pc_one(int rank) { return {{IVec(rank, 0), Rat(1)}}; }

PolyClass pc_linear(const RVec& r) {
    PolyClass out;
    for (size_t i = 0; i < r.size(); ++i) {
        if (r[i] == 0) continue;
        IVec m(r.size(), 0);
        m[i] = 1;
        out.emplace(m, r[i]);
    }
    return out;
}

PolyClass pc_reflect(const RootSystem& rs, int j, const PolyClass& f) {
    const int n = rs.rank();
    PolyClass out;
    for (const auto& [mono, c] : f) {
        PolyClass term = {{IVec(n, 0), c}};
        for (int i = 0; i < n; ++i) {
            if (mono[i] == 0) continue;
            PolyClass lin;
            IVec mi(n, 0);
            mi[i] = 1;
            lin.emplace(mi, Rat(1));
            if (rs.cartan()[j][i] != 0) {
                IVec mj(n, 0);
                mj[j] = 1;
                pc_add_term(lin, mj, Rat(-static_cast<long>(rs.cartan()[j][i])));
            }
            for (Int k = 0; k < mono[i]; ++k) term = pc_mul(term, lin);
        }
        out = pc_add(out, term);
    }
    return out;
}

PolyClass divided_difference(const RootSystem& rs, int j, const PolyClass& f) {
    PolyClass g = pc_sub(f, pc_reflect(rs, j, f));
    PolyClass out;
    for (const auto& [mono, c] : g) {
        if (mono[j] == 0)
            throw std::logic_error("divided difference: numerator not divisible");
        IVec m = mono;
        m[j] -= 1;
        out.emplace(m, c);
    }
    return out;
}

PolyClass divided_difference_word(const RootSystem& rs, const std::vector<int>& word,
                                  const PolyClass& f) {
    PolyClass out = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        out = divided_difference(rs, *it, out);
    return out;
}

PolyClass point_rep(const RootSystem& rs, const WeylGroup& wg) {
    PolyClass f = {{IVec(rs.rank(), 0), make_rat(1, static_cast<long>(wg.size()))}};
    for (const auto& beta : rs.positive_roots()) {
        RVec r(beta.root_coords.size());
        for (size_t i = 0; i < r.size(); ++i) r[i] = to_rat(beta.root_coords[i]);
        f = pc_mul(f, pc_linear(r));
    }
    return f;
}

PolyClass schubert_rep(const RootSystem& rs, const WeylGroup& wg, int w) {
    return divided_difference_word(rs, wg.word(wg.inverse(w)), point_rep(rs, wg));
}

Rat schubert_coeff(const RootSystem& rs, const WeylGroup& wg, int v, const PolyClass& f) {
    int u = wg.mul(wg.longest(), v);
    PolyClass g = divided_difference_word(rs, wg.word(u), f);
    auto it = g.find(IVec(rs.rank(), 0));
    return it == g.end() ? Rat(0) : it->second;
}

RVec weight_root_coords(const RootSystem& rs, const IVec& lambda) {
    const int n = rs.rank();
    // Gaussian elimination on [A | lambda]: column j of the answer weights
    // alpha_j, since alpha_j has Cartan column j as its coordinate vector.
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) M[i][j] = to_rat(rs.cartan()[i][j]);
        M[i][n] = to_rat(lambda[i]);
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (M[piv][col] == 0) ++piv;
        std::swap(M[col], M[piv]);
        Rat pv = M[col][col];
        for (int k = col; k <= n; ++k) M[col][k] /= pv;
        for (int r = 0; r < n; ++r) {
            if (r == col || M[r][col] == 0) continue;
            Rat fac = M[r][col];
            for (int k = col; k <= n; ++k) M[r][k] -= fac * M[col][k];
        }
    }
    RVec out(n);
    for (int i = 0; i < n; ++i) out[i] = M[i][n];
    return out;
}

std::map<int, Rat> classical_chevalley(const RootSystem& rs, const WeylGroup& wg,
                                       const IVec& lambda, int w) {
    PolyClass f = pc_mul(pc_linear(weight_root_coords(rs, lambda)), schubert_rep(rs, wg, w));
    std::map<int, Rat> out;
    for (int v = 0; v < wg.size(); ++v) {
        if (wg.length(v) != wg.length(w) - 1) continue;
        Rat c = schubert_coeff(rs, wg, v, f);
        if (c != 0) out.emplace(v, c);
    }
    return out;
}

}  // namespace flagk
