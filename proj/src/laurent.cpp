#include "laurent.hpp"

#include <stdexcept>

namespace flagk {

void lp_add_term(LaurentPoly& f, const IVec& mu, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = f.try_emplace(mu, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) f.erase(it);
    }
}

LaurentPoly lp_mono(const IVec& mu, const Rat& c) {
    LaurentPoly f;
    lp_add_term(f, mu, c);
    return f;
}

LaurentPoly lp_one(int rank) {
    return lp_mono(IVec(rank, 0));
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [mu, c] : b) lp_add_term(out, mu, c);
    return out;
}

LaurentPoly lp_sub(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [mu, c] : b) lp_add_term(out, mu, -c);
    return out;
}

LaurentPoly lp_scale(const Rat& c, const LaurentPoly& f) {
    LaurentPoly out;
    if (c == 0) return out;
    for (const auto& [mu, v] : f) out.emplace(mu, c * v);
    return out;
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    const int n = a.empty() ? 0 : static_cast<int>(a.begin()->first.size());
    IVec sum(n);
    for (const auto& [mu, c] : a)
        for (const auto& [nu, d] : b) {
            for (std::size_t i = 0; i < mu.size(); ++i) sum[i] = mu[i] + nu[i];
            lp_add_term(out, sum, c * d);
        }
    return out;
}

Rat epsilon(const LaurentPoly& f) {
    Rat s = 0;
    for (const auto& [mu, c] : f) s += c;
    return s;
}

LaurentPoly weyl_act(const WeylGroup& wg, int w, const LaurentPoly& f) {
    LaurentPoly out;
    for (const auto& [mu, c] : f) lp_add_term(out, wg.act(w, mu), c);
    return out;
}

LaurentPoly demazure_T(const RootSystem& rs, int j, const LaurentPoly& f) {
    const IVec& alpha = rs.simple_root(j);
    LaurentPoly out;
    for (const auto& [mu, c] : f) {
        Int k = mu[j];
        if (k >= 0) {
            IVec nu = mu;
            for (Int m = 0; m <= k; ++m) {
                lp_add_term(out, nu, c);
                for (std::size_t i = 0; i < nu.size(); ++i) nu[i] -= alpha[i];
            }
        } else if (k <= -2) {
            IVec nu = mu;
            for (Int m = 1; m <= -k - 1; ++m) {
                for (std::size_t i = 0; i < nu.size(); ++i) nu[i] += alpha[i];
                lp_add_term(out, nu, -c);
            }
        }
    }
    return out;
}

LaurentPoly demazure_L(const RootSystem& rs, int j, const LaurentPoly& f) {
    const IVec& alpha = rs.simple_root(j);
    LaurentPoly out;
    for (const auto& [mu, c] : f) {
        Int k = mu[j];
        if (k >= 1) {
            IVec nu = mu;
            for (Int m = 0; m <= k - 1; ++m) {
                lp_add_term(out, nu, c);
                for (std::size_t i = 0; i < nu.size(); ++i) nu[i] -= alpha[i];
            }
        } else if (k <= -1) {
            IVec nu = mu;
            for (Int m = 1; m <= -k; ++m) {
                for (std::size_t i = 0; i < nu.size(); ++i) nu[i] += alpha[i];
                lp_add_term(out, nu, -c);
            }
        }
    }
    return out;
}

LaurentPoly demazure_T_word(const WeylGroup& wg, const std::vector<int>& word,
                            const LaurentPoly& f) {
    if (wg.length(wg.from_word(word)) != static_cast<int>(word.size())) {
        throw std::invalid_argument("operator word is not reduced");
    }
    LaurentPoly out = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        out = demazure_T(wg.root_system(), *it, out);
    }
    return out;
}

LaurentPoly point_class(const WeylGroup& wg, Mask J) {
    const RootSystem& rs = wg.root_system();
    const int n = rs.rank();
    LaurentPoly out = lp_mono(IVec(n, 0),
                              make_rat(static_cast<long>(wg.subgroup(J).size()),
                                       static_cast<long>(wg.size())));
    for (const PosRoot& beta : rs.positive_roots()) {
        bool inside = true;
        for (int i = 0; i < n; ++i) {
            if (beta.root_coords[i] != 0 && !(J >> i & 1)) {
                inside = false;
                break;
            }
        }
        if (inside) continue;
        IVec neg(n);
        for (int i = 0; i < n; ++i) neg[i] = -beta.omega_coords[i];
        LaurentPoly factor = lp_one(n);
        lp_add_term(factor, neg, Rat(-1));
        out = lp_mul(out, factor);
    }
    return out;
}

LaurentPoly demazure_character(const WeylGroup& wg, const IVec& lambda) {
    if (!wg.root_system().is_dominant(lambda)) {
        throw std::invalid_argument("highest weight must be dominant");
    }
    return demazure_T_word(wg, wg.word(wg.longest()), lp_mono(lambda));
}

Rat char_eval(const LaurentPoly& f, const std::vector<Rat>& xs) {
    Rat s = 0;
    for (const auto& [mu, c] : f) {
        Rat term = c;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (mu[i] != 0) term *= rat_pow(xs[i], static_cast<long>(mu[i]));
        }
        s += term;
    }
    return s;
}

}  // namespace flagk
