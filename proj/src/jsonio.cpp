#include "jsonio.hpp"

#include <sstream>
#include <stdexcept>

namespace flagk {

namespace {

Json word_out(const std::vector<int>& word) {
    Json a = Json::array();
    for (int j : word) a.push_back(j + 1);
    return a;
}

std::vector<int> word_in(const Json& a, int rank) {
    if (!a.is_array()) throw std::invalid_argument("word must be an array");
    std::vector<int> out;
    for (const auto& x : a) {
        if (!x.is_number_integer())
            throw std::invalid_argument("word entries must be integers");
        long long j = x.get<long long>();
        if (j < 1 || j > rank)
            throw std::invalid_argument("word index out of range");
        out.push_back(static_cast<int>(j - 1));
    }
    return out;
}

IVec ivec_in(const Json& a) {
    if (!a.is_array()) throw std::invalid_argument("expected an integer array");
    IVec out;
    for (const auto& x : a) {
        if (!x.is_number_integer())
            throw std::invalid_argument("expected an integer array");
        out.push_back(x.get<Int>());
    }
    return out;
}

Json dim_out(const Rat& d) {
    mpq_class q(d);
    q.canonicalize();
    if (q.get_den() != 1) throw std::logic_error("dimension not integral");
    mpz_class n = q.get_num();
    if (n.fits_slong_p()) return Json(n.get_si());
    return Json(n.get_str());
}

}  // namespace

Json laurent_to_json(const LaurentPoly& f) {
    Json a = Json::array();
    for (const auto& [mu, c] : f)
        a.push_back(Json{{"weight", mu}, {"coeff", rat_str(c)}});
    return a;
}

LaurentPoly laurent_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be an array");
    LaurentPoly f;
    size_t rank = 0;
    for (const auto& term : j) {
        IVec mu = ivec_in(term.at("weight"));
        if (f.empty() && rank == 0) rank = mu.size();
        if (mu.size() != rank) throw std::invalid_argument("mixed weight lengths");
        lp_add_term(f, mu, rat_parse(term.at("coeff").get<std::string>()));
    }
    return f;
}

Json lspath_to_json(const PathModel& pm, const LSPath& p) {
    const WeylGroup& wg = pm.weyl();
    Json cosets = Json::array();
    for (int t : p.cosets) cosets.push_back(word_out(wg.word(t)));
    Json breaks = Json::array();
    for (const Rat& b : p.breaks) breaks.push_back(rat_str(b));
    return Json{{"shape", pm.shape()}, {"cosets", cosets}, {"breaks", breaks}};
}

LSPath lspath_from_json(const PathModel& pm, const Json& j) {
    if (ivec_in(j.at("shape")) != pm.shape())
        throw std::invalid_argument("path shape does not match the model");
    const WeylGroup& wg = pm.weyl();
    LSPath p;
    for (const auto& cw : j.at("cosets"))
        p.cosets.push_back(wg.from_word(word_in(cw, wg.root_system().rank())));
    for (const auto& b : j.at("breaks"))
        p.breaks.push_back(rat_parse(b.get<std::string>()));
    pm.decode(p);
    return p;
}

Json expansion_to_json(const PathModel& pm, int w, const Expansion& e) {
    const WeylGroup& wg = pm.weyl();
    const RootSystem& rs = pm.root_system();
    std::vector<std::pair<std::vector<int>, int>> rows;
    for (const auto& [v, c] : e.coeffs) rows.emplace_back(wg.word(v), c);
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    Json coeffs = Json::array();
    for (const auto& [vw, c] : rows)
        coeffs.push_back(Json{{"v_word", word_out(vw)}, {"mult", c}});
    return Json{{"type", std::string(1, rs.type())}, {"rank", rs.rank()},
                {"lambda", pm.shape()},              {"word", word_out(wg.word(w))},
                {"paths", e.path_count()},           {"coeffs", coeffs}};
}

ExpansionRecord expansion_from_json(const WeylGroup& wg, const Json& j) {
    ExpansionRecord rec;
    std::string t = j.at("type").get<std::string>();
    if (t.size() != 1) throw std::invalid_argument("type must be a single letter");
    rec.type = t[0];
    rec.rank = j.at("rank").get<int>();
    rec.lambda = ivec_in(j.at("lambda"));
    rec.word = word_in(j.at("word"), rec.rank);
    rec.paths = j.at("paths").get<int>();
    for (const auto& row : j.at("coeffs")) {
        std::vector<int> vw = word_in(row.at("v_word"), rec.rank);
        int mult = row.at("mult").get<int>();
        if (mult <= 0) throw std::invalid_argument("multiplicities must be positive");
        if (!rec.coeffs.emplace(vw, mult).second)
            throw std::invalid_argument("duplicate v_word");
        wg.from_word(vw);
    }
    return rec;
}

Json roots_json(const RootSystem& rs) {
    Json roots = Json::array();
    for (const auto& b : rs.positive_roots())
        roots.push_back(Json{{"root", b.root_coords},
                             {"coroot", b.coroot_coords},
                             {"omega", b.omega_coords}});
    return Json{{"type", std::string(1, rs.type())},
                {"rank", rs.rank()},
                {"cartan", rs.cartan()},
                {"rho", rs.rho()},
                {"positive_roots", roots}};
}

Json weyl_group_json(const WeylGroup& wg) {
    const RootSystem& rs = wg.root_system();
    return Json{{"type", std::string(1, rs.type())},
                {"rank", rs.rank()},
                {"order", wg.size()},
                {"longest_length", wg.length(wg.longest())},
                {"longest_word", word_out(wg.word(wg.longest()))}};
}

Json weyl_element_json(const WeylGroup& wg, const std::vector<int>& word) {
    const RootSystem& rs = wg.root_system();
    int w = wg.from_word(word);
    return Json{{"type", std::string(1, rs.type())},
                {"rank", rs.rank()},
                {"input_word", word_out(word)},
                {"canonical_word", word_out(wg.word(w))},
                {"length", wg.length(w)},
                {"reduced", static_cast<int>(word.size()) == wg.length(w)},
                {"inverse_word", word_out(wg.word(wg.inverse(w)))}};
}

Json character_json(const PathModel& pm) {
    const RootSystem& rs = pm.root_system();
    LaurentPoly ch = pm.character();
    return Json{{"type", std::string(1, rs.type())},
                {"rank", rs.rank()},
                {"lambda", pm.shape()},
                {"dimension", dim_out(epsilon(ch))},
                {"character", laurent_to_json(ch)}};
}

Json paths_json(const PathModel& pm) {
    const RootSystem& rs = pm.root_system();
    Json paths = Json::array();
    for (const SegPath& p : pm.generate()) paths.push_back(lspath_to_json(pm, pm.encode(p)));
    Json edges = Json::array();
    for (const auto& [from, to, j] : pm.crystal_edges())
        edges.push_back(Json{{"from", from}, {"to", to}, {"j", j + 1}});
    return Json{{"type", std::string(1, rs.type())},
                {"rank", rs.rank()},
                {"lambda", pm.shape()},
                {"count", pm.generate().size()},
                {"paths", paths},
                {"edges", edges}};
}

Json expand_json(const PathModel& pm, const std::vector<int>& word) {
    int w = pm.weyl().from_word(word);
    return expansion_to_json(pm, w, expand(pm, w));
}

std::string crystal_dot(const PathModel& pm) {
    std::ostringstream os;
    os << "digraph crystal {\n  rankdir=TB;\n";
    const auto& paths = pm.generate();
    for (size_t i = 0; i < paths.size(); ++i) {
        IVec ep = pm.endpoint(paths[i]);
        os << "  p" << i << " [label=\"" << i << ": (";
        for (size_t k = 0; k < ep.size(); ++k) os << (k ? "," : "") << ep[k];
        os << ")\"];\n";
    }
    for (const auto& [from, to, j] : pm.crystal_edges())
        os << "  p" << from << " -> p" << to << " [label=\"" << j + 1 << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace flagk
