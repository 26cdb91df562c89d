#include <doctest.h>
#include <iwasym/sympower.hpp>

using namespace iwasym;

TEST_CASE("context derivation") {
    SymPowerContext c1 = build_context(5, 2, 2, -1);
    CHECK(c1.r == 1);
    CHECK(c1.r_tilde == 1);
    CHECK(c1.weights == std::vector<long>{3});

    SymPowerContext c2 = build_context(5, 2, 3, -1, AlphaChoice::nonreal);
    CHECK(c2.r == 1);
    CHECK(c2.r_tilde == 2);
    CHECK(c2.weights == std::vector<long>{4, 2});

    // hypothesis: (p+1) | (m-2i)(k-1) kills it: p=3, k=3, m=2: (2)(2)=4 = p+1
    CHECK(!build_context(3, 3, 2, -1).hypothesis);
    CHECK(build_context(5, 3, 2, -1).hypothesis);

    CHECK_THROWS_AS(build_context(5, 2, 3, -1), std::invalid_argument);
    CHECK_THROWS_AS(build_context(4, 2, 2, -1), std::invalid_argument);
    // real alpha choice needs odd k (and eps = -1)
    CHECK_THROWS_AS(build_context(5, 2, 3, -1, AlphaChoice::plus_real), std::invalid_argument);
    CHECK_NOTHROW(build_context(5, 3, 3, -1, AlphaChoice::plus_real));
}

TEST_CASE("d^+ and d^-") {
    auto d2 = d_pm(build_context(5, 2, 2, -1));
    CHECK(d2 == std::pair<long, long>{1, 2});
    auto d4 = d_pm(build_context(5, 2, 4, -1));
    CHECK(d4 == std::pair<long, long>{3, 2});
    auto d3 = d_pm(build_context(5, 2, 3, -1, AlphaChoice::nonreal));
    CHECK(d3 == std::pair<long, long>{2, 2});
    for (long m = 2; m <= 50; ++m) {
        auto ctx = build_context(5, 2, m, -1,
                                 m % 2 ? std::optional<AlphaChoice>(AlphaChoice::nonreal) : std::nullopt);
        auto [dp, dm] = d_pm(ctx);
        CHECK(dp + dm == m + 1);
    }
}

TEST_CASE("Hodge polygon: closed form vs cumulative-sum oracle") {
    for (long m = 2; m <= 20; ++m) {
        for (long k = 2; k <= 6; ++k) {
            auto ctx = build_context(7, k, m, -1,
                                     m % 2 ? std::optional<AlphaChoice>(AlphaChoice::nonreal) : std::nullopt);
            PolygonDescriptor a = hodge_polygon(ctx);
            PolygonDescriptor b = hodge_polygon_cumsum(ctx);
            REQUIRE(a.vertices.size() == b.vertices.size());
            for (size_t i = 0; i < a.vertices.size(); ++i) {
                CHECK(a.vertices[i].first == b.vertices[i].first);
                CHECK(a.vertices[i].second == b.vertices[i].second);
            }
        }
    }
    // m=2, k=2: heights (0,-1,-1,0)
    PolygonDescriptor h = hodge_polygon(build_context(5, 2, 2, -1));
    CHECK(h.vertices[1].second == Rat(-1));
    CHECK(h.vertices[2].second == Rat(-1));
    CHECK(h.vertices[3].second == Rat(0));
    // first slope -r(k-1)
    SymPowerContext c6 = build_context(5, 3, 6, -1);
    CHECK(hodge_polygon(c6).vertices[1].second == Rat(-c6.r * (c6.k - 1)));
}

TEST_CASE("Newton polygon and Frobenius eigenvalues") {
    SymPowerContext even = build_context(5, 2, 2, -1);
    PolygonDescriptor pn = newton_polygon(even);
    CHECK(pn.vertices.back() == std::pair<long, Rat>{3, Rat(0)});
    auto ev = frobenius_eigenvalues(even);
    REQUIRE(ev.size() == 3);
    CHECK((ev[0].sign == 1 && !ev[0].has_alpha));
    CHECK(ev[1].sign == -1);
    CHECK(ev[2].sign == -1);

    auto ev4 = frobenius_eigenvalues(build_context(5, 2, 4, -1));
    long plus = 0, minus = 0;
    for (auto& e : ev4) (e.sign > 0 ? plus : minus)++;
    CHECK(plus == 3);
    CHECK(minus == 2);

    SymPowerContext odd = build_context(5, 3, 3, -1, AlphaChoice::plus_real);
    PolygonDescriptor po = newton_polygon(odd);
    CHECK(po.vertices.back() == std::pair<long, Rat>{4, Rat(4)});
    auto evo = frobenius_eigenvalues(odd);
    REQUIRE(evo.size() == 4);
    for (auto& e : evo) CHECK(e.has_alpha);

    // Newton slopes = valuations of the eigenvalue multiset
    for (long m : {2L, 3L, 4L, 5L, 6L}) {
        for (long k : {2L, 3L, 4L}) {
            auto ctx = build_context(5, k, m, -1,
                                     m % 2 ? std::optional<AlphaChoice>(AlphaChoice::nonreal) : std::nullopt);
            auto evs = frobenius_eigenvalues(ctx);
            Rat total(0);
            for (auto& e : evs) total += e.valuation;
            PolygonDescriptor np = newton_polygon(ctx);
            CHECK(total == np.vertices.back().second);
            // straight line: every eigenvalue has the same valuation = slope
            Rat slope = np.vertices.back().second / Rat(m + 1);
            for (auto& e : evs) CHECK(e.valuation == slope);
        }
    }
}

TEST_CASE("filtration jumps carry the displayed generator tags") {
    SymPowerContext even = build_context(5, 2, 2, -1);
    auto fj = filtration_jumps(even);
    REQUIRE(fj.size() == 3);
    CHECK(fj[0].generator == "v_0");   // j = -1
    CHECK(fj[1].generator == "v");     // j = 0
    CHECK(fj[2].generator == "v_0 + vbar_0");  // j = 1

    SymPowerContext odd = build_context(5, 3, 3, -1, AlphaChoice::plus_real);
    auto fo = filtration_jumps(odd);
    REQUIRE(fo.size() == 4);  // j = -1..2
    CHECK(fo[1].generator == "v_1");  // j = 0 arm is v_{r+j}
}

TEST_CASE("Hasse invariant: closed form equals the polygon gap") {
    CHECK(hasse_invariant(build_context(5, 2, 2, -1)).closed_form == Rat(1));
    CHECK(hasse_invariant(build_context(5, 2, 4, -1)).closed_form == Rat(3));
    CHECK(hasse_invariant(build_context(3, 3, 3, -1, AlphaChoice::plus_real)).closed_form == Rat(4));
    for (long m = 2; m <= 20; ++m) {
        for (long k = 2; k <= 12; ++k) {
            auto ctx = build_context(5, k, m, -1,
                                     m % 2 ? std::optional<AlphaChoice>(AlphaChoice::nonreal) : std::nullopt);
            HasseInvariant h = hasse_invariant(ctx);
            CHECK(h.consistent());
        }
    }
}

TEST_CASE("weak admissibility: Newton on or above Hodge, equal endpoints for even m") {
    for (long m : {2L, 4L, 6L, 8L}) {
        for (long k : {2L, 3L, 5L}) {
            auto ctx = build_context(5, k, m, -1);
            auto pn = newton_polygon(ctx);
            auto ph = hodge_polygon(ctx);
            for (long x = 0; x <= m + 1; ++x) CHECK(pn.at(x) >= ph.at(x));
            CHECK(pn.at(m + 1) == ph.at(m + 1));
        }
    }
}

TEST_CASE("critical twists") {
    // m=2, k=2, theta trivial: j = 0 and j = 1 are both critical
    SymPowerContext c22 = build_context(5, 2, 2, -1);
    CHECK(is_critical(c22, 1, 0));
    CHECK(is_critical(c22, 1, 1));
    CHECK(!is_critical(c22, 1, 2));
    // for even r, (1, j) not critical at j = 0, 1
    SymPowerContext c42 = build_context(5, 2, 4, -1);
    CHECK(!is_critical(c42, 1, 0));
    CHECK(!is_critical(c42, 1, 1));
    CHECK(is_critical(c42, -1, 1));
    // m odd: 1 <= j <= k-1, any parity
    SymPowerContext c33 = build_context(5, 3, 3, -1, AlphaChoice::plus_real);
    for (int par : {1, -1}) {
        CHECK(!is_critical(c33, par, 0));
        CHECK(is_critical(c33, par, 1));
        CHECK(is_critical(c33, par, 2));
        CHECK(!is_critical(c33, par, 3));
    }
}
