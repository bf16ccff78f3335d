#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weyl.hpp"

#include <map>
#include <set>

using namespace flagk;

namespace {

// Independent Bruhat oracle: transitive closure of the cover relation
// v -> v s_beta over positive-root reflections raising length by one.
std::set<std::pair<int, int>> cover_closure(const WeylGroup& wg) {
    const auto& roots = wg.root_system().positive_roots();
    std::map<int, std::set<int>> below;  // w -> {v : v <= w}
    std::vector<int> order(wg.size());
    for (int w = 0; w < wg.size(); ++w) order[w] = w;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return wg.length(a) < wg.length(b); });
    for (int w : order) {
        below[w].insert(w);
        for (const auto& beta : roots) {
            int v = wg.mul(w, wg.reflection(beta));
            if (wg.length(v) == wg.length(w) - 1) {
                below[w].insert(below[v].begin(), below[v].end());
            }
        }
    }
    std::set<std::pair<int, int>> pairs;
    for (const auto& [w, vs] : below)
        for (int v : vs) pairs.emplace(v, w);
    return pairs;
}

}  // namespace

TEST_CASE("group orders and longest lengths") {
    for (auto [t, n, order, l0] :
         {std::tuple{'A', 1, 2, 1}, {'A', 2, 6, 3}, {'B', 2, 8, 4},
          {'G', 2, 12, 6}, {'A', 3, 24, 6}, {'B', 3, 48, 9}}) {
        RootSystem rs(t, n);
        WeylGroup wg(rs);
        CHECK(wg.size() == order);
        CHECK(wg.length(wg.longest()) == l0);
    }
}

TEST_CASE("order cap is enforced and named") {
    RootSystem rs('A', 3);
    CHECK_THROWS_WITH_AS(WeylGroup(rs, 10),
                         "Weyl group order exceeds the cap of 10", std::length_error);
}

TEST_CASE("stored words are reduced and evaluate back") {
    RootSystem rs('B', 2);
    WeylGroup wg(rs);
    for (int w = 0; w < wg.size(); ++w) {
        CHECK(wg.from_word(wg.word(w)) == w);
        CHECK(static_cast<int>(wg.word(w).size()) == wg.length(w));
    }
    CHECK(wg.word(wg.identity()).empty());
}

TEST_CASE("length counts inverted positive roots") {
    RootSystem rs('G', 2);
    WeylGroup wg(rs);
    for (int w = 0; w < wg.size(); ++w) {
        int inverted = 0;
        for (const auto& beta : rs.positive_roots()) {
            IVec image = wg.act(w, beta.omega_coords);
            for (const auto& gamma : rs.positive_roots()) {
                bool match = true;
                for (int i = 0; i < rs.rank(); ++i)
                    if (image[i] != -gamma.omega_coords[i]) { match = false; break; }
                if (match) { ++inverted; break; }
            }
        }
        CHECK(inverted == wg.length(w));
    }
}

TEST_CASE("multiplication is length-compatible with generators") {
    RootSystem rs('A', 3);
    WeylGroup wg(rs);
    for (int w = 0; w < wg.size(); ++w)
        for (int j = 0; j < rs.rank(); ++j) {
            int d = wg.length(wg.mul(w, wg.simple(j))) - wg.length(w);
            CHECK((d == 1 || d == -1));
        }
}

TEST_CASE("inverse") {
    RootSystem rs('B', 2);
    WeylGroup wg(rs);
    for (int w = 0; w < wg.size(); ++w) {
        CHECK(wg.mul(w, wg.inverse(w)) == wg.identity());
        CHECK(wg.length(wg.inverse(w)) == wg.length(w));
    }
}

TEST_CASE("Bruhat order agrees with the cover-closure oracle") {
    for (auto [t, n] : {std::pair{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}}) {
        RootSystem rs(t, n);
        WeylGroup wg(rs);
        auto oracle = cover_closure(wg);
        for (int v = 0; v < wg.size(); ++v)
            for (int w = 0; w < wg.size(); ++w)
                CHECK(wg.bruhat_leq(v, w) == (oracle.count({v, w}) == 1));
    }
}

TEST_CASE("Bruhat basics") {
    RootSystem rs('G', 2);
    WeylGroup wg(rs);
    int w0 = wg.longest();
    int s1 = wg.simple(0);
    for (int w = 0; w < wg.size(); ++w) {
        CHECK(wg.bruhat_leq(wg.identity(), w));
        CHECK(wg.bruhat_leq(w, w0));
    }
    CHECK(wg.bruhat_leq(s1, wg.from_word({0, 1, 0, 1})));
    CHECK_FALSE(wg.bruhat_leq(w0, s1));
}

TEST_CASE("reflections recover simple generators") {
    RootSystem rs('B', 3);
    WeylGroup wg(rs);
    for (int j = 0; j < rs.rank(); ++j) {
        // the j-th simple root appears among the positive roots
        for (const auto& beta : rs.positive_roots()) {
            if (beta.omega_coords == rs.simple_root(j))
                CHECK(wg.reflection(beta) == wg.simple(j));
        }
    }
    for (const auto& beta : rs.positive_roots()) {
        int r = wg.reflection(beta);
        CHECK(wg.mul(r, r) == wg.identity());
        CHECK(wg.length(r) % 2 == 1);
    }
}

TEST_CASE("parabolic subgroups and coset representatives") {
    RootSystem rs('G', 2);
    WeylGroup wg(rs);
    SUBCASE("orders multiply") {
        for (Mask J = 0; J < 4; ++J) {
            std::set<int> mins;
            for (int w = 0; w < wg.size(); ++w) mins.insert(wg.min_rep(w, J));
            CHECK(mins.size() * wg.subgroup(J).size() ==
                  static_cast<std::size_t>(wg.size()));
        }
    }
    SUBCASE("min and max representatives, J = {1}") {
        Mask J = 1;  // first simple index
        int s2s1 = wg.from_word({1, 0});
        CHECK(wg.min_rep(s2s1, J) == wg.simple(1));
        CHECK(wg.max_rep(s2s1, J) == s2s1);
        CHECK(wg.min_rep(wg.identity(), J) == wg.identity());
        CHECK(wg.max_rep(wg.identity(), J) == wg.longest_in(J));
        CHECK(wg.max_rep(wg.longest(), J) == wg.longest());
    }
    SUBCASE("max rep adds the subgroup longest length") {
        for (Mask J = 0; J < 4; ++J)
            for (int w = 0; w < wg.size(); ++w) {
                int mn = wg.min_rep(w, J), mx = wg.max_rep(w, J);
                CHECK(wg.length(mx) == wg.length(mn) + wg.length(wg.longest_in(J)));
                CHECK(wg.min_rep(mx, J) == mn);
            }
    }
}

TEST_CASE("coset order") {
    RootSystem rs('G', 2);
    WeylGroup wg(rs);
    Mask J = 1;
    int s2 = wg.simple(1);
    int s1s2 = wg.from_word({0, 1});
    CHECK(wg.coset_leq(wg.identity(), s2, J));
    CHECK(wg.coset_leq(s2, s1s2, J));
    CHECK_FALSE(wg.coset_leq(wg.min_rep(wg.longest(), J), s2, J));
}

TEST_CASE("maximal lift") {
    RootSystem rs('G', 2);
    WeylGroup wg(rs);
    Mask J = 1;
    int w = wg.from_word({0, 1, 0, 1});  // s1 s2 s1 s2
    SUBCASE("three-step chain") {
        std::vector<int> chain = {wg.from_word({1, 0, 1}), wg.from_word({0, 1}),
                                  wg.from_word({1})};
        // chain entries are coset representatives; minimize them on input
        for (int& c : chain) c = wg.min_rep(c, J);
        auto lift = wg.maximal_lift(chain, w, J);
        std::vector<int> expect = {wg.from_word({1, 0, 1}), wg.from_word({0, 1}),
                                   wg.from_word({1})};
        CHECK(lift == expect);
    }
    SUBCASE("four-step chain") {
        std::vector<int> chain = {wg.min_rep(wg.from_word({0, 1, 0, 1}), J),
                                  wg.min_rep(wg.from_word({1, 0, 1}), J),
                                  wg.min_rep(wg.from_word({0, 1}), J),
                                  wg.min_rep(wg.from_word({1}), J)};
        auto lift = wg.maximal_lift(chain, w, J);
        std::vector<int> expect = {wg.from_word({0, 1, 0, 1}), wg.from_word({1, 0, 1}),
                                   wg.from_word({0, 1}), wg.from_word({1})};
        CHECK(lift == expect);
    }
    SUBCASE("identity chain against a large bound") {
        auto lift = wg.maximal_lift({wg.identity()}, w, J);
        CHECK(lift == std::vector<int>{wg.longest_in(J)});
    }
    SUBCASE("no lift") {
        std::vector<int> chain = {wg.min_rep(wg.longest(), J)};
        CHECK_THROWS_AS(wg.maximal_lift(chain, wg.simple(0), J), NoLiftError);
    }
    SUBCASE("lift projects back and decreases") {
        std::vector<int> chain = {wg.min_rep(wg.from_word({1, 0, 1}), J),
                                  wg.min_rep(wg.from_word({0, 1}), J),
                                  wg.min_rep(wg.from_word({1}), J)};
        auto lift = wg.maximal_lift(chain, w, J);
        REQUIRE(lift.size() == chain.size());
        CHECK(wg.bruhat_leq(lift[0], w));
        for (std::size_t i = 0; i < lift.size(); ++i)
            CHECK(wg.min_rep(lift[i], J) == chain[i]);
        for (std::size_t i = 1; i < lift.size(); ++i) {
            CHECK(lift[i] != lift[i - 1]);
            CHECK(wg.bruhat_leq(lift[i], lift[i - 1]));
        }
    }
}

TEST_CASE("identity-chain lift against identity bound") {
    RootSystem rs('G', 2);
    WeylGroup wg(rs);
    auto lift = wg.maximal_lift({wg.identity()}, wg.identity(), 1);
    CHECK(lift == std::vector<int>{wg.identity()});
}
