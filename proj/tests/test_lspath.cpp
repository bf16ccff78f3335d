#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lspath.hpp"

using namespace flagk;

namespace {

int count_endpoint(const PathModel& pm, const IVec& target) {
    int hits = 0;
    for (const auto& p : pm.generate())
        if (pm.endpoint(p) == target) ++hits;
    return hits;
}

}  // namespace

TEST_CASE("straight path") {
    RootSystem rs('G', 2);
    WeylGroup wg(rs);
    PathModel pm(wg, {0, 1});
    SegPath s = pm.straight();
    CHECK(pm.endpoint(s) == IVec{0, 1});
    LSPath enc = pm.encode(s);
    CHECK(enc.cosets == std::vector<int>{wg.identity()});
    CHECK(enc.breaks == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK(pm.initial_direction(s) == wg.identity());
    CHECK(pm.stabilizer() == 1);  // lambda vanishes on the first simple root
}

TEST_CASE("shape validation") {
    RootSystem rs('A', 2);
    WeylGroup wg(rs);
    CHECK_THROWS_AS(PathModel(wg, {-1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(PathModel(wg, {1}), std::invalid_argument);
}

TEST_CASE("rank-one lowering by hand") {
    RootSystem rs('A', 1);
    WeylGroup wg(rs);
    PathModel pm(wg, {1});
    SegPath p = pm.straight();
    auto q = pm.f_op(0, p);
    REQUIRE(q.has_value());
    CHECK(pm.endpoint(*q) == IVec{-1});
    LSPath enc = pm.encode(*q);
    CHECK(enc.cosets == std::vector<int>{wg.simple(0)});
    CHECK_FALSE(pm.f_op(0, *q).has_value());
    SUBCASE("raising undoes lowering") {
        auto back = pm.e_op(0, *q);
        REQUIRE(back.has_value());
        CHECK(pm.encode(*back) == pm.encode(p));
    }
    SUBCASE("raising the dominant straight path gives null") {
        CHECK_FALSE(pm.e_op(0, p).has_value());
    }
    CHECK(pm.generate().size() == 2);
}

TEST_CASE("zero shape") {
    RootSystem rs('B', 2);
    WeylGroup wg(rs);
    PathModel pm(wg, {0, 0});
    CHECK(pm.generate().size() == 1);
    CHECK(pm.character() == lp_one(2));
}

TEST_CASE("family sizes and endpoint multiplicities") {
    SUBCASE("14 paths for the G2 adjoint shape, two ending at zero") {
        RootSystem rs('G', 2);
        WeylGroup wg(rs);
        PathModel pm(wg, {0, 1});
        CHECK(pm.generate().size() == 14);
        CHECK(count_endpoint(pm, {0, 0}) == 2);
    }
    SUBCASE("counts match the dimension formula") {
        for (auto [t, n] : {std::pair{'A', 2}, {'B', 2}, {'G', 2}}) {
            RootSystem rs(t, n);
            WeylGroup wg(rs);
            for (IVec lam : {IVec{1, 0}, IVec{0, 1}, IVec{1, 1}}) {
                PathModel pm(wg, lam);
                CHECK(mpz_class(static_cast<long>(pm.generate().size())) ==
                      weyl_dim(rs, lam));
            }
        }
    }
}

TEST_CASE("path character equals the operator character") {
    for (auto [t, n] : {std::pair{'A', 2}, {'B', 2}, {'G', 2}}) {
        RootSystem rs(t, n);
        WeylGroup wg(rs);
        for (IVec lam : {IVec{1, 0}, IVec{0, 1}, IVec{1, 1}}) {
            PathModel pm(wg, lam);
            CHECK(pm.character() == demazure_character(wg, lam));
        }
    }
    RootSystem a3('A', 3);
    WeylGroup wg3(a3);
    PathModel pm3(wg3, {0, 1, 0});
    CHECK(pm3.character() == demazure_character(wg3, {0, 1, 0}));
}

TEST_CASE("lowering and raising are mutually inverse") {
    for (auto [t, n, lam] : {std::tuple{'B', 2, IVec{1, 1}}, {'G', 2, IVec{0, 1}},
                             {'A', 2, IVec{2, 1}}}) {
        RootSystem rs(t, n);
        WeylGroup wg(rs);
        PathModel pm(wg, lam);
        for (const auto& p : pm.generate()) {
            for (int j = 0; j < n; ++j) {
                if (auto q = pm.f_op(j, p)) {
                    auto back = pm.e_op(j, *q);
                    REQUIRE(back.has_value());
                    CHECK(pm.encode(*back) == pm.encode(p));
                }
                if (auto q = pm.e_op(j, p)) {
                    auto fwd = pm.f_op(j, *q);
                    REQUIRE(fwd.has_value());
                    CHECK(pm.encode(*fwd) == pm.encode(p));
                }
            }
        }
    }
}

TEST_CASE("every generated path encodes and decodes cleanly") {
    RootSystem rs('B', 2);
    WeylGroup wg(rs);
    PathModel pm(wg, {1, 1});
    for (const auto& p : pm.generate()) {
        LSPath enc = pm.encode(p);  // validates chain decrease and integrality
        CHECK(pm.decode(enc) == p);
        CHECK(enc.breaks.front() == 0);
        CHECK(enc.breaks.back() == 1);
    }
}

TEST_CASE("decode rejects malformed encodings") {
    RootSystem rs('A', 2);
    WeylGroup wg(rs);
    PathModel pm(wg, {1, 1});
    CHECK_THROWS_AS(pm.decode(LSPath{{}, {Rat(0), Rat(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(pm.decode(LSPath{{0}, {Rat(0), make_rat(1, 2)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(pm.decode(LSPath{{0, 0}, {Rat(0), make_rat(1, 2), make_rat(1, 2)}}),
                    std::invalid_argument);
}

TEST_CASE("crystal edges are consistent") {
    RootSystem rs('G', 2);
    WeylGroup wg(rs);
    PathModel pm(wg, {1, 0});
    const auto& paths = pm.generate();
    for (const auto& [from, to, j] : pm.crystal_edges()) {
        auto q = pm.f_op(j, paths[from]);
        REQUIRE(q.has_value());
        CHECK(pm.index_of(pm.encode(*q)) == to);
    }
}

TEST_CASE("string endpoints walk down by the root") {
    RootSystem rs('G', 2);
    WeylGroup wg(rs);
    PathModel pm(wg, {0, 1});
    for (const auto& p : pm.generate()) {
        for (int j = 0; j < 2; ++j) {
            if (pm.e_op(j, p)) continue;
            auto string = pm.alpha_string(j, p);
            IVec start = pm.endpoint(string.front());
            for (std::size_t k = 1; k < string.size(); ++k) {
                IVec expect = start;
                for (int i = 0; i < 2; ++i)
                    expect[i] -= static_cast<Int>(k) * rs.simple_root(j)[i];
                CHECK(pm.endpoint(string[k]) == expect);
            }
        }
    }
}

TEST_CASE("string heads are required") {
    RootSystem rs('A', 1);
    WeylGroup wg(rs);
    PathModel pm(wg, {1});
    auto low = pm.f_op(0, pm.straight());
    REQUIRE(low.has_value());
    CHECK_THROWS_AS(pm.alpha_string(0, *low), std::invalid_argument);
}
