#include <doctest.h>
#include <iwasym/cyclotomic.hpp>

using namespace iwasym;

namespace {
// Phi_{p^c}(x) evaluated in the ring itself: sum_{i<p} x^(i*p^(c-1))
CyclotomicScalar eval_cyclo_poly(const CyclotomicScalar& x, long p, long c) {
    long step = 1;
    for (long i = 1; i < c; ++i) step *= p;
    CyclotomicScalar acc = CyclotomicScalar::zero(p, x.level());
    for (long i = 0; i < p; ++i) acc = acc + x.pow(i * step);
    return acc;
}
} // namespace

TEST_CASE("primitive root satisfies its defining relation") {
    for (long p : {3L, 5L}) {
        for (long c : {1L, 2L}) {
            long N = 10;
            CyclotomicScalar z = CyclotomicScalar::zeta(p, c, N);
            // Phi_{p^c}(zeta) = 0
            CHECK(eval_cyclo_poly(z, p, c).zero_at(N));
            // zeta^(p^c) = 1
            long pc = 1;
            for (long i = 0; i < c; ++i) pc *= p;
            CHECK(z.pow(pc).equal_at(CyclotomicScalar::one(p, c, N), N));
            // minimal-polynomial relation: sum of zeta^(i p^(c-1)) over i < p vanishes
            CHECK(eval_cyclo_poly(z, p, c).zero_at(N));
        }
    }
}

TEST_CASE("Phi_{p^c}(1) = p") {
    // norm-style check via the one-element
    for (long p : {3L, 5L, 7L}) {
        long c = 2, N = 8;
        CyclotomicScalar one = CyclotomicScalar::one(p, c, N);
        CyclotomicScalar v = eval_cyclo_poly(one, p, c);
        CHECK(v.equal_at(CyclotomicScalar::from_scalar(c, PadicScalar::from_int(p, p, N)), N));
    }
}

TEST_CASE("ring arithmetic: associativity and embedding") {
    long p = 5, N = 8;
    CyclotomicScalar z = CyclotomicScalar::zeta(p, 2, N);
    CyclotomicScalar a = z + z.pow(3);
    CyclotomicScalar b = z.pow(7) - z.pow(2);
    CyclotomicScalar c = z.pow(11) + CyclotomicScalar::one(p, 2, N);
    CHECK(((a * b) * c).equal_at(a * (b * c), N));
    // zeta_5 embedded into level 2 is zeta_25^5
    CyclotomicScalar z5 = CyclotomicScalar::zeta(p, 1, N);
    CHECK(z5.embed(2).equal_at(z.pow(5), N));
    // embedding is a ring hom on a sample product
    CyclotomicScalar x = z5 + z5.pow(2);
    CyclotomicScalar y = z5.pow(3) - z5;
    CHECK((x * y).embed(2).equal_at(x.embed(2) * y.embed(2), N));
}

TEST_CASE("valuation floor of zeta - 1") {
    long p = 5, N = 8;
    CyclotomicScalar z = CyclotomicScalar::zeta(p, 1, N);
    CyclotomicScalar t = z - CyclotomicScalar::one(p, 1, N);
    // v(zeta_5 - 1) = 1/4: floor 0, but t^4 / 5 is a unit
    CHECK(t.floor_val() == 0);
    CHECK(t.pow(4).floor_val() == 1);
    CHECK((t.pow(4) / PadicScalar::from_int(p, p, N)).floor_val() == 0);
}
