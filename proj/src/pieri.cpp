#include "pieri.hpp"

#include <random>
#include <sstream>

namespace flagk {

namespace {

std::string word_str(const WeylGroup& wg, int w) {
    if (w == wg.identity()) return "e";
    std::string s;
    for (int j : wg.word(w)) s += std::to_string(j + 1);
    return s;
}

std::string poly_str(const LaurentPoly& f) {
    std::ostringstream os;
    if (f.empty()) return "0";
    bool first = true;
    for (const auto& [mu, c] : f) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(c) << "*e^[";
        for (std::size_t i = 0; i < mu.size(); ++i) os << (i ? "," : "") << mu[i];
        os << "]";
    }
    return os.str();
}

}  // namespace

std::vector<int> restricted_paths(const PathModel& pm, int w) {
    const WeylGroup& wg = pm.weyl();
    int wbar = wg.min_rep(w, pm.stabilizer());
    std::vector<int> out;
    const auto& paths = pm.generate();
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (wg.bruhat_leq(pm.initial_direction(paths[i]), wbar)) {
            out.push_back(static_cast<int>(i));
        }
    }
    return out;
}

Expansion expand(const PathModel& pm, int w) {
    const WeylGroup& wg = pm.weyl();
    Expansion out;
    out.w = w;
    const auto& paths = pm.generate();
    for (int idx : restricted_paths(pm, w)) {
        LSPath enc = pm.encode(paths[idx]);
        // Restriction guarantees a lift; a failure here is a real bug.
        std::vector<int> lift = wg.maximal_lift(enc.cosets, w, pm.stabilizer());
        ExpansionRow row;
        row.path_index = idx;
        row.endpoint = pm.endpoint(paths[idx]);
        row.iota = enc.cosets.front();
        row.v = lift.back();
        row.lift = std::move(lift);
        out.coeffs[row.v] += 1;
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::vector<LaurentPoly> default_probes(int rank, Int box, int n_random,
                                        std::uint64_t seed) {
    std::vector<LaurentPoly> probes;
    IVec mu(rank, -box);
    while (true) {
        probes.push_back(lp_mono(mu));
        int i = 0;
        for (; i < rank; ++i) {
            if (mu[i] < box) {
                ++mu[i];
                break;
            }
            mu[i] = -box;
        }
        if (i == rank) break;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Int> d(-6, 6);
    for (int k = 0; k < n_random; ++k) {
        IVec nu(rank);
        for (int i = 0; i < rank; ++i) nu[i] = d(rng);
        probes.push_back(lp_mono(nu));
    }
    return probes;
}

bool verify_operator_identity(const PathModel& pm, int w,
                              const std::vector<LaurentPoly>& probes,
                              std::string* diag) {
    if (probes.empty()) throw std::invalid_argument("probe list must be nonempty");
    const WeylGroup& wg = pm.weyl();
    Expansion exp = expand(pm, w);
    // Group e^{endpoint} by final direction so each probe costs one operator
    // chain per distinct v instead of one per path.
    std::map<int, LaurentPoly> grouped;
    for (const auto& row : exp.rows) lp_add_term(grouped[row.v], row.endpoint, Rat(1));

    const std::vector<int>& winv_word = wg.word(wg.inverse(w));
    LaurentPoly elam = lp_mono(pm.shape());
    for (const auto& x : probes) {
        LaurentPoly lhs = lp_mul(elam, demazure_T_word(wg, winv_word, x));
        LaurentPoly rhs;
        for (const auto& [v, g] : grouped) {
            rhs = lp_add(rhs, demazure_T_word(wg, wg.word(wg.inverse(v)), lp_mul(g, x)));
        }
        if (lhs != rhs) {
            if (diag) {
                std::ostringstream os;
                os << "operator identity fails at w=" << word_str(wg, w)
                   << " probe=" << poly_str(x) << "\n  lhs=" << poly_str(lhs)
                   << "\n  rhs=" << poly_str(rhs);
                *diag = os.str();
            }
            return false;
        }
    }
    return true;
}

bool chevalley_cross_check(const PathModel& pm, int w, std::string* diag) {
    const WeylGroup& wg = pm.weyl();
    Expansion exp = expand(pm, w);
    const int cover_len = wg.length(w) - 1;

    // Expected multiplicities on the covers w s_beta below w.
    std::map<int, Int> expected;
    for (const PosRoot& beta : wg.root_system().positive_roots()) {
        int v = wg.mul(w, wg.reflection(beta));
        if (wg.length(v) != cover_len) continue;
        Int pair = wg.root_system().pairing(pm.shape(), beta);
        if (expected.count(v)) {
            if (diag) *diag = "two reflections produce the same cover";
            return false;
        }
        if (pair != 0) expected[v] = pair;
    }

    std::map<int, Int> actual;
    for (const auto& [v, c] : exp.coeffs)
        if (wg.length(v) == cover_len) actual[v] = c;

    if (actual != expected) {
        if (diag) {
            std::ostringstream os;
            os << "cover layer disagrees at w=" << word_str(wg, w) << "; expected {";
            for (const auto& [v, c] : expected) os << " " << word_str(wg, v) << ":" << c;
            os << " } got {";
            for (const auto& [v, c] : actual) os << " " << word_str(wg, v) << ":" << c;
            os << " }";
            *diag = os.str();
        }
        return false;
    }
    return true;
}

int parabolic_pullback(const WeylGroup& wg, int coset, Mask J) {
    return wg.max_rep(coset, J);
}

}  // namespace flagk
