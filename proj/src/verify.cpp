#include "verify.hpp"

#include "cohomology.hpp"

#include <random>
#include <sstream>

namespace flagk {

namespace {

void add_check(Report& r, std::string name, bool ok, std::string detail = "") {
    r.checks.push_back({std::move(name), ok, ok ? std::string() : std::move(detail)});
}

std::string word_text(const std::vector<int>& w) {
    if (w.empty()) return "e";
    std::string s;
    for (int j : w) {
        if (!s.empty()) s += " ";
        s += "s" + std::to_string(j + 1);
    }
    return s;
}

std::string ivec_text(const IVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string case_tag(const RootSystem& rs) {
    return std::string(1, rs.type()) + std::to_string(rs.rank());
}

// The (type, lambda) sweep shared by the operator, character, cover-layer,
// and string suites: every fundamental weight plus rho.
std::vector<IVec> sweep_lambdas(const RootSystem& rs) {
    std::vector<IVec> out;
    for (int i = 0; i < rs.rank(); ++i) {
        IVec l(rs.rank(), 0);
        l[i] = 1;
        out.push_back(l);
    }
    out.push_back(IVec(rs.rank(), 1));
    return out;
}

std::vector<std::vector<int>> all_reduced_words(const WeylGroup& wg, int w) {
    if (w == wg.identity()) return {{}};
    std::vector<std::vector<int>> out;
    for (int j = 0; j < wg.root_system().rank(); ++j) {
        int ws = wg.mul(w, wg.simple(j));
        if (wg.length(ws) >= wg.length(w)) continue;
        for (auto u : all_reduced_words(wg, ws)) {
            u.push_back(j);
            out.push_back(std::move(u));
        }
    }
    return out;
}

IVec rand_ivec(std::mt19937_64& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IVec v(n);
    for (int i = 0; i < n; ++i) v[i] = d(rng);
    return v;
}

Report run_g2golden() {
    Report r{"g2golden", 0, {}};
    RootSystem rs('G', 2);
    WeylGroup wg(rs);
    PathModel pm(wg, {0, 1});
    int w = wg.from_word({0, 1, 0, 1});

    size_t family = pm.generate().size();
    add_check(r, "path family of shape omega2 has 14 members", family == 14,
              "got " + std::to_string(family));

    Expansion e = expand(pm, w);
    add_check(r, "13 paths start at or below the coset of w", e.path_count() == 13,
              "got " + std::to_string(e.path_count()));

    {
        std::map<std::vector<int>, int> got;
        for (const auto& [v, c] : e.coeffs) got[wg.word(v)] = c;
        const std::map<std::vector<int>, int> want = {
            {{0, 1, 0, 1}, 1}, {{0, 1, 0}, 1}, {{1, 0, 1}, 3}, {{1, 0}, 3},
            {{0, 1}, 2},       {{1}, 2},       {{0}, 1}};
        std::string detail;
        if (got != want) {
            std::ostringstream os;
            for (const auto& [vw, c] : got) os << word_text(vw) << ":" << c << " ";
            detail = "got " + os.str();
        }
        add_check(r, "expansion multiplicities match the golden seven", got == want,
                  detail);
    }

    {
        using Row = std::tuple<IVec, std::vector<std::vector<int>>, std::vector<int>,
                               std::vector<int>>;
        std::vector<Row> got;
        for (const auto& row : e.rows) {
            std::vector<std::vector<int>> lift;
            for (int t : row.lift) lift.push_back(wg.word(t));
            got.emplace_back(row.endpoint, lift, wg.word(row.iota),
                             wg.word(wg.inverse(row.v)));
        }
        std::vector<Row> want = {
            {{0, 1}, {{0}}, {}, {0}},
            {{3, -1}, {{1, 0}}, {1}, {0, 1}},
            {{1, 0}, {{0, 1, 0}, {1, 0}}, {0, 1}, {0, 1}},
            {{-1, 1}, {{0, 1, 0}, {1, 0}}, {0, 1}, {0, 1}},
            {{-3, 2}, {{0, 1, 0}}, {0, 1}, {0, 1, 0}},
            {{3, -2}, {{1, 0, 1}}, {1, 0, 1}, {1, 0, 1}},
            {{1, -1}, {{0, 1, 0, 1}, {1, 0, 1}}, {0, 1, 0, 1}, {1, 0, 1}},
            {{-1, 0}, {{0, 1, 0, 1}, {1, 0, 1}}, {0, 1, 0, 1}, {1, 0, 1}},
            {{-3, 1}, {{0, 1, 0, 1}}, {0, 1, 0, 1}, {1, 0, 1, 0}},
            {{2, -1}, {{1, 0, 1}, {0, 1}, {1}}, {1, 0, 1}, {1}},
            {{-2, 1}, {{0, 1, 0, 1}, {1, 0, 1}, {0, 1}}, {0, 1, 0, 1}, {1, 0}},
            {{0, 0}, {{1, 0, 1}, {0, 1}}, {1, 0, 1}, {1, 0}},
            {{0, 0}, {{0, 1, 0, 1}, {1, 0, 1}, {0, 1}, {1}}, {0, 1, 0, 1}, {1}},
        };
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        std::string detail;
        if (got != want) {
            for (size_t i = 0; i < std::min(got.size(), want.size()); ++i)
                if (got[i] != want[i]) {
                    detail = "first differing row has endpoint " +
                             ivec_text(std::get<0>(got[i]));
                    break;
                }
            if (detail.empty()) detail = "row counts differ";
        }
        add_check(r, "per-path table (endpoint, lift, initial, v^-1) matches",
                  got == want, detail);
    }
    return r;
}

Report run_thm42(std::uint64_t seed) {
    Report r{"thm42", seed, {}};
    for (auto [t, n] : {std::pair{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}}) {
        RootSystem rs(t, n);
        WeylGroup wg(rs);
        for (const IVec& lam : sweep_lambdas(rs)) {
            PathModel pm(wg, lam);
            auto probes = default_probes(n, n <= 2 ? 2 : 1, 6, seed);
            bool ok = true;
            std::string detail;
            for (int w = 0; w < wg.size() && ok; ++w) {
                std::string diag;
                if (!verify_operator_identity(pm, w, probes, &diag)) {
                    ok = false;
                    detail = "w = " + word_text(wg.word(w)) + ": " + diag;
                }
            }
            add_check(r, "operator identity " + case_tag(rs) + " lambda=" +
                             ivec_text(lam) + " over all w",
                      ok, detail);
        }
    }
    return r;
}

Report run_character() {
    Report r{"character", 0, {}};
    for (auto [t, n] : {std::pair{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}}) {
        RootSystem rs(t, n);
        WeylGroup wg(rs);
        for (const IVec& lam : sweep_lambdas(rs)) {
            PathModel pm(wg, lam);
            LaurentPoly pc = pm.character();
            LaurentPoly dc = demazure_character(wg, lam);
            add_check(r, "path char equals operator char " + case_tag(rs) +
                             " lambda=" + ivec_text(lam),
                      pc == dc);
            Rat dim = Rat(weyl_dim(rs, lam));
            add_check(r, "char dimension matches the product formula " +
                             case_tag(rs) + " lambda=" + ivec_text(lam),
                      epsilon(pc) == dim && epsilon(dc) == dim,
                      "eps=" + rat_str(epsilon(pc)) + " dim=" + rat_str(dim));
        }
    }
    {
        RootSystem rs('G', 2);
        WeylGroup wg(rs);
        PathModel pm(wg, {0, 1});
        add_check(r, "G2 second fundamental module has dimension 14",
                  epsilon(pm.character()) == 14);
    }
    return r;
}

Report run_identities31(std::uint64_t seed) {
    Report r{"identities31", seed, {}};
    for (auto [t, n] : {std::pair{'A', 2}, {'B', 2}, {'C', 2}, {'G', 2}}) {
        RootSystem rs(t, n);
        WeylGroup wg(rs);
        std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(t) << 32));
        int bad_inv = 0, bad_fix = 0, bad_idem = 0, bad_comm = 0;
        std::string detail;
        const int pairs_per_j = 500;
        for (int trial = 0; trial < pairs_per_j; ++trial)
            for (int j = 0; j < n; ++j) {
                IVec lam = rand_ivec(rng, n, -4, 4);
                LaurentPoly x = lp_mono(rand_ivec(rng, n, -4, 4));
                LaurentPoly h = lp_mono(rand_ivec(rng, n, -3, 3));
                LaurentPoly tx = demazure_T(rs, j, x);
                // invariant factors pull out
                LaurentPoly g = lp_add(x, weyl_act(wg, wg.simple(j), x));
                if (demazure_T(rs, j, lp_mul(g, h)) != lp_mul(g, demazure_T(rs, j, h)))
                    ++bad_inv;
                // image is reflection-fixed
                if (weyl_act(wg, wg.simple(j), tx) != tx) ++bad_fix;
                // idempotent
                if (demazure_T(rs, j, tx) != tx) ++bad_idem;
                // commutation through e^lambda
                LaurentPoly lhs = lp_mul(lp_mono(lam), tx);
                LaurentPoly rhs =
                    lp_add(demazure_T(rs, j, lp_mul(lp_mono(rs.reflect(j, lam)), x)),
                           lp_mul(demazure_L(rs, j, lp_mono(lam)), x));
                if (lhs != rhs) ++bad_comm;
                if ((bad_inv | bad_fix | bad_idem | bad_comm) && detail.empty())
                    detail = "first failure at lambda=" + ivec_text(lam) + " x=e^" +
                             ivec_text(x.begin()->first) + " j=" + std::to_string(j + 1);
            }
        int total = pairs_per_j * n;
        std::string tag = case_tag(rs) + " on " + std::to_string(total) + " random pairs";
        add_check(r, "invariant factors pull out, " + tag, bad_inv == 0, detail);
        add_check(r, "operator image is reflection-fixed, " + tag, bad_fix == 0, detail);
        add_check(r, "operator is idempotent, " + tag, bad_idem == 0, detail);
        add_check(r, "weight commutation rule, " + tag, bad_comm == 0, detail);
    }
    for (auto [t, n] : {std::pair{'A', 2}, {'B', 2}, {'G', 2}}) {
        RootSystem rs(t, n);
        WeylGroup wg(rs);
        std::mt19937_64 rng(seed + 7);
        auto words = all_reduced_words(wg, wg.longest());
        bool ok = words.size() >= 2;
        std::string detail = ok ? "" : "expected at least two reduced words";
        for (int trial = 0; trial < 50 && ok; ++trial) {
            LaurentPoly x = lp_mono(rand_ivec(rng, n, -4, 4));
            LaurentPoly ref = demazure_T_word(wg, words[0], x);
            for (size_t i = 1; i < words.size(); ++i)
                if (demazure_T_word(wg, words[i], x) != ref) {
                    ok = false;
                    detail = "words disagree on e^" + ivec_text(x.begin()->first);
                    break;
                }
        }
        add_check(r, "all reduced words of the longest element agree, " + case_tag(rs),
                  ok, detail);
    }
    return r;
}

Report run_chevalley() {
    Report r{"chevalley", 0, {}};
    for (auto [t, n] : {std::pair{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}}) {
        RootSystem rs(t, n);
        WeylGroup wg(rs);
        for (const IVec& lam : sweep_lambdas(rs)) {
            PathModel pm(wg, lam);
            bool layer_ok = true, classical_ok = true;
            std::string layer_detail, classical_detail;
            for (int w = 0; w < wg.size(); ++w) {
                std::string diag;
                if (layer_ok && !chevalley_cross_check(pm, w, &diag)) {
                    layer_ok = false;
                    layer_detail = diag;
                }
                std::map<int, Rat> expect;
                for (const auto& beta : rs.positive_roots()) {
                    int v = wg.mul(w, wg.reflection(beta));
                    if (wg.length(v) != wg.length(w) - 1) continue;
                    Int pair = rs.pairing(lam, beta);
                    if (pair != 0) expect.emplace(v, to_rat(pair));
                }
                if (classical_ok &&
                    classical_chevalley(rs, wg, lam, w) != expect) {
                    classical_ok = false;
                    classical_detail = "w = " + word_text(wg.word(w));
                }
            }
            std::string tag = case_tag(rs) + " lambda=" + ivec_text(lam);
            add_check(r, "expansion cover layer equals the pairing rule, " + tag,
                      layer_ok, layer_detail);
            add_check(r, "polynomial product equals the pairing rule, " + tag,
                      classical_ok, classical_detail);
        }
    }
    return r;
}

Report run_pointclasses() {
    Report r{"pointclasses", 0, {}};
    for (auto [t, n] : {std::pair{'A', 1}, {'A', 2}, {'B', 2}, {'C', 2}, {'G', 2},
                        {'A', 3}, {'B', 3}, {'C', 3}, {'D', 3}}) {
        RootSystem rs(t, n);
        WeylGroup wg(rs);
        bool ok = true;
        std::string detail;
        for (Mask J = 0; J < (Mask{1} << n); ++J) {
            LaurentPoly lhs = demazure_T_word(
                wg, wg.word(wg.inverse(wg.longest_in(J))), point_class(wg, 0));
            if (lhs != point_class(wg, J)) {
                ok = false;
                detail = "J mask " + std::to_string(J);
                break;
            }
        }
        add_check(r, "operator chain carries the point class to every parabolic class, " +
                         case_tag(rs),
                  ok, detail);
    }
    return r;
}

Report run_strings() {
    Report r{"strings", 0, {}};
    for (auto [t, n] : {std::pair{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}}) {
        RootSystem rs(t, n);
        WeylGroup wg(rs);
        for (const IVec& lam : sweep_lambdas(rs)) {
            PathModel pm(wg, lam);
            const auto& paths = pm.generate();
            bool inverse_ok = true, endpoint_ok = true, head_ok = true,
                 dicho_ok = true, end_ok = true;
            std::string detail;
            auto note = [&](const std::string& what, int j) {
                if (detail.empty())
                    detail = what + " at j=" + std::to_string(j + 1);
            };
            for (const SegPath& p : paths)
                for (int j = 0; j < n; ++j) {
                    if (auto q = pm.f_op(j, p)) {
                        auto back = pm.e_op(j, *q);
                        if (!back || *back != p) {
                            inverse_ok = false;
                            note("e(f(pi)) != pi", j);
                        }
                    }
                    if (auto q = pm.e_op(j, p)) {
                        auto back = pm.f_op(j, *q);
                        if (!back || *back != p) {
                            inverse_ok = false;
                            note("f(e(pi)) != pi", j);
                        }
                    }
                }
            for (const SegPath& head : paths)
                for (int j = 0; j < n; ++j) {
                    if (pm.e_op(j, head)) continue;
                    auto string = pm.alpha_string(j, head);
                    int m = static_cast<int>(string.size()) - 1;
                    IVec ep0 = pm.endpoint(head);
                    int i0 = pm.initial_direction(head);
                    int si0 = wg.min_rep(wg.mul(wg.simple(j), i0), pm.stabilizer());
                    int iota1 = -1;
                    for (int k = 0; k <= m; ++k) {
                        IVec ep = pm.endpoint(string[k]);
                        for (int i = 0; i < n; ++i)
                            if (ep[i] != ep0[i] - k * rs.simple_root(j)[i]) {
                                endpoint_ok = false;
                                note("string endpoint off the root ladder", j);
                            }
                        if (k == 0) continue;
                        int iota = pm.initial_direction(string[k]);
                        if (k == 1) {
                            iota1 = iota;
                            if (iota != i0 && iota != si0) {
                                head_ok = false;
                                note("tail direction outside the two candidates", j);
                            }
                            if (iota == si0 && si0 != i0 && !wg.bruhat_leq(i0, si0)) {
                                head_ok = false;
                                note("switched tail direction did not move up", j);
                            }
                        } else if (iota != iota1) {
                            head_ok = false;
                            note("tail direction not constant", j);
                        }
                    }
                    if (m == 0) continue;
                    for (int w = 0; w < wg.size(); ++w) {
                        int wbar = wg.min_rep(w, pm.stabilizer());
                        std::vector<bool> inset;
                        bool all = true, any = false;
                        for (const SegPath& q : string) {
                            bool in = wg.bruhat_leq(pm.initial_direction(q), wbar);
                            inset.push_back(in);
                            all = all && in;
                            any = any || in;
                        }
                        bool head_only = inset[0];
                        for (size_t k = 1; k < inset.size(); ++k)
                            head_only = head_only && !inset[k];
                        if (!(all || !any || head_only)) {
                            dicho_ok = false;
                            note("restriction split the string interior", j);
                        }
                        // final directions along a fully restricted string,
                        // for w with the matching left descent
                        if (!all) continue;
                        if (wg.length(wg.mul(wg.simple(j), w)) > wg.length(w)) continue;
                        std::vector<int> vs;
                        for (const SegPath& q : string) {
                            auto lift = wg.maximal_lift(pm.encode(q).cosets, w,
                                                        pm.stabilizer());
                            vs.push_back(lift.back());
                        }
                        for (int k = 1; k < m; ++k)
                            if (vs[k] != vs[0]) {
                                end_ok = false;
                                note("interior final direction drifted", j);
                            }
                        int sv = wg.mul(wg.simple(j), vs[0]);
                        int pred = wg.length(sv) > wg.length(vs[0]) ? sv : vs[0];
                        if (vs[m] != pred) {
                            end_ok = false;
                            note("string end final direction wrong", j);
                        }
                    }
                }
            std::string tag = case_tag(rs) + " lambda=" + ivec_text(lam);
            add_check(r, "raising and lowering are mutually inverse, " + tag,
                      inverse_ok, detail);
            add_check(r, "string endpoints descend by the simple root, " + tag,
                      endpoint_ok, detail);
            add_check(r, "tail initial direction constant and adjacent to the head, " + tag,
                      head_ok, detail);
            add_check(r, "restriction cuts strings whole or at the head, " + tag,
                      dicho_ok, detail);
            add_check(r, "final directions constant inside, reflected at the end, " + tag,
                      end_ok, detail);
        }
    }
    // expansion bookkeeping invariants on the same sweep
    for (auto [t, n] : {std::pair{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}}) {
        RootSystem rs(t, n);
        WeylGroup wg(rs);
        bool ok = true;
        std::string detail;
        for (const IVec& lam : sweep_lambdas(rs)) {
            PathModel pm(wg, lam);
            for (int w = 0; w < wg.size() && ok; ++w) {
                Expansion e = expand(pm, w);
                int total = 0;
                for (const auto& [v, c] : e.coeffs) {
                    total += c;
                    if (c <= 0 || !wg.bruhat_leq(v, w)) {
                        ok = false;
                        detail = "bad key at w = " + word_text(wg.word(w));
                    }
                }
                if (total != e.path_count()) {
                    ok = false;
                    detail = "multiplicity sum mismatch at w = " + word_text(wg.word(w));
                }
                if (w == wg.identity() &&
                    e.coeffs != std::map<int, int>{{wg.identity(), 1}}) {
                    ok = false;
                    detail = "identity expansion not absorbed";
                }
            }
        }
        add_check(r, "expansion bookkeeping (sum, Bruhat bound, absorption), " +
                         case_tag(rs),
                  ok, detail);
    }
    return r;
}

Report run_cohomology(std::uint64_t seed) {
    Report r{"cohomology", seed, {}};
    for (auto [t, n] : {std::pair{'A', 1}, {'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}}) {
        RootSystem rs(t, n);
        WeylGroup wg(rs);
        std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(t) * 1000003 + n));
        bool sq_ok = true;
        std::uniform_int_distribution<int> expo(0, 2), coef(-4, 4);
        for (int trial = 0; trial < 10 && sq_ok; ++trial) {
            PolyClass f;
            for (int term = 0; term < 3; ++term) {
                IVec m(n);
                for (int i = 0; i < n; ++i) m[i] = expo(rng);
                pc_add_term(f, m, to_rat(coef(rng)));
            }
            for (int j = 0; j < n; ++j)
                if (!divided_difference(rs, j, divided_difference(rs, j, f)).empty())
                    sq_ok = false;
        }
        add_check(r, "divided difference squares to zero, " + case_tag(rs), sq_ok);

        const int N = static_cast<int>(rs.positive_roots().size());
        std::vector<PolyClass> reps(wg.size());
        for (int w = 0; w < wg.size(); ++w) reps[w] = schubert_rep(rs, wg, w);
        add_check(r, "top chain lands on the unit class, " + case_tag(rs),
                  reps[wg.longest()] == pc_one(n));
        bool deg_ok = true;
        for (int w = 0; w < wg.size(); ++w)
            for (const auto& [m, c] : reps[w]) {
                Int deg = 0;
                for (Int e : m) deg += e;
                if (deg != N - wg.length(w)) deg_ok = false;
            }
        add_check(r, "representative degree is codimension, " + case_tag(rs), deg_ok);
        bool rt_ok = true;
        std::string detail;
        for (int v = 0; v < wg.size() && rt_ok; ++v)
            for (int w = 0; w < wg.size(); ++w)
                if (schubert_coeff(rs, wg, w, reps[v]) != (v == w ? 1 : 0)) {
                    rt_ok = false;
                    detail = "v = " + word_text(wg.word(v)) + ", w = " +
                             word_text(wg.word(w));
                    break;
                }
        add_check(r, "basis extraction round-trip, " + case_tag(rs), rt_ok, detail);
    }
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "g2golden", "thm42",   "character", "identities31", "chevalley",
        "pointclasses", "strings", "cohomology", "all"};
    return names;
}

Report run_suite(const std::string& name, std::uint64_t seed) {
    auto stamped = [seed](Report r) {
        r.seed = seed;
        return r;
    };
    if (name == "g2golden") return stamped(run_g2golden());
    if (name == "thm42") return run_thm42(seed);
    if (name == "character") return stamped(run_character());
    if (name == "identities31") return run_identities31(seed);
    if (name == "chevalley") return stamped(run_chevalley());
    if (name == "pointclasses") return stamped(run_pointclasses());
    if (name == "strings") return stamped(run_strings());
    if (name == "cohomology") return run_cohomology(seed);
    if (name == "all") {
        Report all{"all", seed, {}};
        for (const std::string& s : suite_names()) {
            if (s == "all") continue;
            Report r = run_suite(s, seed);
            for (auto& c : r.checks) {
                c.name = s + ": " + c.name;
                all.checks.push_back(std::move(c));
            }
        }
        return all;
    }
    throw std::invalid_argument("unknown verify suite: " + name +
                                " (expected one of g2golden, thm42, character, "
                                "identities31, chevalley, pointclasses, strings, "
                                "cohomology, all)");
}

Json report_to_json(const Report& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json row{{"name", c.name}, {"ok", c.ok}};
        if (!c.ok) row["detail"] = c.detail;
        checks.push_back(row);
    }
    return Json{{"suite", r.suite},
                {"seed", r.seed},
                {"ok", r.ok()},
                {"checks", checks}};
}

}  // namespace flagk
