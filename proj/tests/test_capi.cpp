#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <flagk.h>

#include "verify.hpp"

#include <cstring>
#include <string>

namespace {

// Run a C-API call that fills a string, wrap it for RAII.
struct Out {
    char* p = nullptr;
    ~Out() { flagk_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
    flagk::Json json() const { return flagk::Json::parse(str()); }
};

struct Ctx {
    flagk_ctx* c = nullptr;
    Ctx(const char* t, int rank) { REQUIRE(flagk_ctx_new(t, rank, &c) == FLAGK_OK); }
    ~Ctx() { flagk_ctx_free(c); }
};

}  // namespace

TEST_CASE("context lifecycle and argument errors") {
    CHECK(std::strlen(flagk_version()) > 0);

    flagk_ctx* c = nullptr;
    CHECK(flagk_ctx_new("Q", 2, &c) == FLAGK_ERR_ARGUMENT);
    CHECK(std::strlen(flagk_last_error()) > 0);
    CHECK(flagk_ctx_new("G", 3, &c) == FLAGK_ERR_ARGUMENT);
    CHECK(flagk_ctx_new("G2", 2, &c) == FLAGK_ERR_ARGUMENT);
    CHECK(flagk_ctx_new(nullptr, 2, &c) == FLAGK_ERR_ARGUMENT);
    CHECK(flagk_ctx_new("G", 2, nullptr) == FLAGK_ERR_ARGUMENT);

    REQUIRE(flagk_ctx_new("G", 2, &c) == FLAGK_OK);
    REQUIRE(c != nullptr);
    flagk_ctx_free(c);
    flagk_ctx_free(nullptr);
    flagk_string_free(nullptr);
}

TEST_CASE("root and group payloads") {
    Ctx g2("G", 2);
    Out roots;
    REQUIRE(flagk_roots_json(g2.c, &roots.p) == FLAGK_OK);
    auto rj = roots.json();
    CHECK(rj.at("type") == "G");
    CHECK(rj.at("rank") == 2);
    CHECK(rj.at("positive_roots").size() == 6);
    CHECK(rj.at("cartan") == flagk::Json({{2, -3}, {-1, 2}}));

    Out weyl;
    REQUIRE(flagk_weyl_json(g2.c, &weyl.p) == FLAGK_OK);
    CHECK(weyl.json().at("order") == 12);
    CHECK(weyl.json().at("longest_length") == 6);
}

TEST_CASE("element payloads") {
    Ctx g2("G", 2);
    const int word[] = {1, 2, 1, 2};
    Out el;
    REQUIRE(flagk_element_json(g2.c, word, 4, &el.p) == FLAGK_OK);
    auto ej = el.json();
    CHECK(ej.at("length") == 4);
    CHECK(ej.at("reduced") == true);
    CHECK(ej.at("canonical_word") == flagk::Json({1, 2, 1, 2}));
    CHECK(ej.at("inverse_word") == flagk::Json({2, 1, 2, 1}));

    const int square[] = {1, 1};
    Out sq;
    REQUIRE(flagk_element_json(g2.c, square, 2, &sq.p) == FLAGK_OK);
    CHECK(sq.json().at("length") == 0);
    CHECK(sq.json().at("reduced") == false);

    const int bad[] = {3};
    Out b;
    CHECK(flagk_element_json(g2.c, bad, 1, &b.p) == FLAGK_ERR_ARGUMENT);
}

TEST_CASE("character payloads") {
    Ctx a1("A", 1);
    const long long lam[] = {1};
    Out ch;
    REQUIRE(flagk_character_json(a1.c, lam, 1, &ch.p) == FLAGK_OK);
    auto cj = ch.json();
    CHECK(cj.at("dimension") == 2);
    REQUIRE(cj.at("character").size() == 2);
    CHECK(cj.at("character")[0] == flagk::Json({{"weight", {-1}}, {"coeff", "1"}}));

    const long long bad[] = {-1};
    Out b;
    CHECK(flagk_character_json(a1.c, bad, 1, &b.p) == FLAGK_ERR_ARGUMENT);
    const long long wrong_len[] = {1, 0};
    CHECK(flagk_character_json(a1.c, wrong_len, 2, &b.p) == FLAGK_ERR_ARGUMENT);
}

TEST_CASE("path payloads") {
    Ctx g2("G", 2);
    const long long lam[] = {0, 1};
    Out pj;
    REQUIRE(flagk_paths_json(g2.c, lam, 2, &pj.p) == FLAGK_OK);
    CHECK(pj.json().at("count") == 14);
    CHECK(pj.json().at("paths").size() == 14);
    CHECK(pj.json().at("paths")[0] ==
          flagk::Json({{"shape", {0, 1}},
                       {"cosets", flagk::Json::array({flagk::Json::array()})},
                       {"breaks", {"0", "1"}}}));

    Out dot;
    REQUIRE(flagk_paths_dot(g2.c, lam, 2, &dot.p) == FLAGK_OK);
    CHECK(dot.str().find("digraph") != std::string::npos);
    CHECK(dot.str().find("label=\"2\"") != std::string::npos);
}

TEST_CASE("expansion payload reproduces the golden case") {
    Ctx g2("G", 2);
    const long long lam[] = {0, 1};
    const int word[] = {1, 2, 1, 2};
    Out ex;
    REQUIRE(flagk_expand_json(g2.c, lam, 2, word, 4, &ex.p) == FLAGK_OK);
    auto j = ex.json();
    CHECK(j.at("paths") == 13);
    REQUIRE(j.at("coeffs").size() == 7);
    // ordered by length then lex word
    CHECK(j.at("coeffs")[0] ==
          flagk::Json({{"v_word", {1}}, {"mult", 1}}));
    CHECK(j.at("coeffs")[1] ==
          flagk::Json({{"v_word", {2}}, {"mult", 2}}));
    CHECK(j.at("coeffs")[3] ==
          flagk::Json({{"v_word", {2, 1}}, {"mult", 3}}));
    CHECK(j.at("coeffs")[5] ==
          flagk::Json({{"v_word", {2, 1, 2}}, {"mult", 3}}));
    CHECK(j.at("coeffs")[6] ==
          flagk::Json({{"v_word", {1, 2, 1, 2}}, {"mult", 1}}));
}

TEST_CASE("verify reports") {
    Out ok;
    REQUIRE(flagk_verify_json("g2golden", 0, &ok.p) == FLAGK_OK);
    CHECK(ok.json().at("ok") == true);
    CHECK(ok.json().at("checks").size() == 4);

    Out unknown;
    CHECK(flagk_verify_json("nope", 0, &unknown.p) == FLAGK_ERR_ARGUMENT);
    CHECK(unknown.p == nullptr);
    CHECK(std::string(flagk_last_error()).find("nope") != std::string::npos);
}

TEST_CASE("serialized forms parse back to equal values") {
    using namespace flagk;
    SUBCASE("group algebra elements") {
        RootSystem rs('G', 2);
        WeylGroup wg(rs);
        LaurentPoly ch = demazure_character(wg, {1, 0});
        CHECK(laurent_from_json(laurent_to_json(ch)) == ch);
        LaurentPoly pc = point_class(wg, 0);
        CHECK(laurent_from_json(laurent_to_json(pc)) == pc);
        CHECK(laurent_from_json(Json::array()).empty());
        CHECK_THROWS_AS(
            laurent_from_json(Json::parse(R"([{"weight":[1],"coeff":"1"},
                                              {"weight":[1,2],"coeff":"1"}])")),
            std::invalid_argument);
    }
    SUBCASE("paths") {
        RootSystem rs('B', 2);
        WeylGroup wg(rs);
        PathModel pm(wg, {1, 1});
        for (const SegPath& p : pm.generate()) {
            LSPath enc = pm.encode(p);
            CHECK(lspath_from_json(pm, lspath_to_json(pm, enc)) == enc);
        }
        PathModel other(wg, {1, 0});
        Json j = lspath_to_json(pm, pm.encode(pm.straight()));
        CHECK_THROWS_AS(lspath_from_json(other, j), std::invalid_argument);
    }
    SUBCASE("expansions") {
        RootSystem rs('G', 2);
        WeylGroup wg(rs);
        PathModel pm(wg, {0, 1});
        int w = wg.from_word({0, 1, 0, 1});
        Expansion e = expand(pm, w);
        ExpansionRecord rec = expansion_from_json(wg, expansion_to_json(pm, w, e));
        CHECK(rec.type == 'G');
        CHECK(rec.rank == 2);
        CHECK(rec.lambda == IVec{0, 1});
        CHECK(rec.word == std::vector<int>{0, 1, 0, 1});
        CHECK(rec.paths == e.path_count());
        std::map<std::vector<int>, int> expect;
        for (const auto& [v, c] : e.coeffs) expect[wg.word(v)] = c;
        CHECK(rec.coeffs == expect);
    }
}
