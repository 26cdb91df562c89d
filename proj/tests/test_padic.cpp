#include <doctest.h>
#include <iwasym/padic.hpp>

#include <random>

using namespace iwasym;

TEST_CASE("teichmuller fixed values") {
    // omega(2) mod 25: iterate x -> x^5 to the fixed point by hand: 7
    PadicScalar w = teichmuller(2, 5, 2);
    CHECK(w.val() == 0);
    CHECK(w.unit() == 7);
    CHECK(w.pow(4).equal_at(PadicScalar::one(5, 2), 2));

    // identity and omega(-1) = -1
    for (long p : {3L, 5L, 7L}) {
        CHECK(teichmuller(1, p, 10).equal_at(PadicScalar::one(p, 10), 10));
        PadicScalar m1 = teichmuller(p - 1, p, 10);
        CHECK(m1.equal_at(-PadicScalar::one(p, 10), 10));
    }
    CHECK_THROWS_AS(teichmuller(0, 5, 4), std::domain_error);
}

TEST_CASE("teichmuller multiplicativity and (p-1)-st roots") {
    long p = 7, N = 12;
    for (long a = 1; a < p; ++a) {
        PadicScalar wa = teichmuller(a, p, N);
        CHECK(wa.pow(p - 1).equal_at(PadicScalar::one(p, N), N));
        for (long b = 1; b < p; ++b) {
            PadicScalar prod = teichmuller((a * b) % p, p, N);
            CHECK((wa * teichmuller(b, p, N)).equal_at(prod, N));
        }
    }
}

TEST_CASE("valuation basics") {
    CHECK(PadicScalar::from_int(5, 50, 8).val() == 2);
    CHECK(PadicScalar::from_int(7, 3, 8).val() == 0);
    // exhausted precision is distinct from the exact zero
    PadicScalar z = PadicScalar::from_int(5, 625, 2);  // 5^4 at 2 relative digits ... still a unit*5^4
    CHECK(z.val() == 4);
    PadicScalar e = PadicScalar::from_int(5, 25, 8) - PadicScalar::from_int(5, 25, 8);
    CHECK(e.is_eps());
    CHECK(e.abs_prec() == 10);  // O(5^10): val 2 + 8 digits
    CHECK(!e.is_exact_zero());
    CHECK(PadicScalar::zero(5).is_exact_zero());
    CHECK(PadicScalar::zero(5).val() == LONG_MAX);
}

TEST_CASE("valuation is multiplicative and ultrametric on random scalars") {
    std::mt19937_64 rng(20240811);
    long p = 5, N = 14;
    for (int it = 0; it < 200; ++it) {
        long x = static_cast<long>(rng() % 100000) + 1;
        long y = static_cast<long>(rng() % 100000) + 1;
        PadicScalar a = PadicScalar::from_int(p, x, N);
        PadicScalar b = PadicScalar::from_int(p, y, N);
        CHECK((a * b).val() == a.val() + b.val());
        PadicScalar s = a + b;
        if (!s.is_zeroish()) CHECK(s.val() >= std::min(a.val(), b.val()));
    }
}

TEST_CASE("rationals, division, precision propagation") {
    long p = 3, N = 10;
    PadicScalar q = PadicScalar::from_rational(p, Rat(1, 6), N);  // 1/6 = 3^-1 * 1/2
    CHECK(q.val() == -1);
    PadicScalar six = PadicScalar::from_int(p, 6, N);
    CHECK((q * six).equal_at(PadicScalar::one(p, N), N - 1));
    // precision never silently gains
    PadicScalar lo = PadicScalar::from_int(p, 2, 3);
    PadicScalar hi = PadicScalar::from_int(p, 5, 12);
    CHECK((lo * hi).prec() == 3);
    CHECK((lo + hi).abs_prec() == 3);
}

TEST_CASE("padic log of 1-units") {
    long p = 5, N = 12;
    PadicScalar u = PadicScalar::from_int(p, 1 + p, N + 4);
    PadicScalar lg = padic_log_1unit(u, N);
    CHECK(lg.val() == 1);  // v(log(1+p)) = 1
    // log(u^2) = 2 log(u)
    PadicScalar lg2 = padic_log_1unit(u * u, N);
    CHECK(lg2.equal_at(lg + lg, N));
    CHECK_THROWS_AS(padic_log_1unit(PadicScalar::from_int(p, 2, N), N), std::domain_error);
}
