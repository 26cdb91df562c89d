#include <doctest.h>
#include <iwasym/iwasawa.hpp>

#include <random>

using namespace iwasym;

namespace {
IwasawaElement random_lambda_element(const AlgebraConfig& cfg, std::mt19937_64& rng, long deg = -1) {
    IwasawaElement h(cfg);
    if (deg < 0) deg = cfg.M;
    Int mod = pow_int(cfg.p, static_cast<unsigned long>(cfg.N));
    for (long a = 0; a < cfg.branches(); ++a)
        for (long n = 0; n < deg; ++n) {
            Int r = Int(static_cast<unsigned long>(rng())) % mod;
            h.set_coeff(a, n, PadicScalar::from_int(cfg.p, r, cfg.N));
        }
    return h;
}
} // namespace

TEST_CASE("multiplication basics") {
    AlgebraConfig cfg(5, 12, 16);
    IwasawaElement T = IwasawaElement::T(cfg);
    IwasawaElement T2 = T * T;
    for (long a = 0; a < 4; ++a) {
        CHECK(T2.coeff(a, 2).equal_at(PadicScalar::one(5, 12), 12));
        CHECK(T2.coeff(a, 1).is_zeroish());
        CHECK(T2.coeff(a, 0).is_zeroish());
    }
    // (1+T)(1-T) = 1-T^2
    IwasawaElement one = IwasawaElement::one(cfg);
    IwasawaElement lhs = (one + T) * (one - T);
    IwasawaElement rhs = one - T2;
    CHECK(lhs.diff_val(rhs) >= 12);
}

TEST_CASE("orthogonal idempotent projections") {
    AlgebraConfig cfg(5, 10, 8);
    std::mt19937_64 rng(1);
    IwasawaElement h = random_lambda_element(cfg, rng);
    // pi_a pi_b = 0 for a != b; pi_a idempotent; partition of unity
    IwasawaElement p0 = h.project(0), p1 = h.project(1);
    CHECK((p0 * p1).is_zero_at(10));
    CHECK(p0.project(0).diff_val(p0) >= 10);
    IwasawaElement sum = h.project(0);
    for (long a = 1; a < cfg.branches(); ++a) sum = sum + h.project(a);
    CHECK(sum.diff_val(h) >= 10);
}

TEST_CASE("delta eigenvector identity: pi_a delta = omega^a(delta) pi_a") {
    AlgebraConfig cfg(7, 10, 6);
    IwasawaElement one = IwasawaElement::one(cfg);
    IwasawaElement d = IwasawaElement::delta(cfg, 3);
    for (long a = 0; a < cfg.branches(); ++a) {
        IwasawaElement lhs = (one.project(a)) * d;
        IwasawaElement rhs = one.project(a) * teichmuller(3, 7, 10).pow(a);
        CHECK(lhs.diff_val(rhs) >= 10);
    }
}

TEST_CASE("twist: Tw_1(T) = p + (1+p)T for chi(gamma0) = 1+p") {
    AlgebraConfig cfg(5, 12, 16);
    IwasawaElement T = IwasawaElement::T(cfg);
    IwasawaElement tw = T.twist(1);
    for (long a = 0; a < cfg.branches(); ++a) {
        CHECK(tw.coeff(a, 0).equal_at(PadicScalar::from_int(5, 5, 12), 10));
        CHECK(tw.coeff(a, 1).equal_at(PadicScalar::from_int(5, 6, 12), 10));
        for (long n = 2; n < 5; ++n) CHECK(tw.coeff(a, n).is_zeroish());
    }
}

TEST_CASE("twist is a ring automorphism with inverse Tw_{-n}") {
    AlgebraConfig cfg(5, 14, 12);
    std::mt19937_64 rng(7);
    IwasawaElement h1 = random_lambda_element(cfg, rng, 6);
    IwasawaElement h2 = random_lambda_element(cfg, rng, 6);
    // high T-coefficients of a twisted truncation are honestly uncertain,
    // so compare at the joint certified precision and insist the low window
    // is still known to 8 digits
    long check_prec = 8;
    IwasawaElement lhs = (h1 * h2).twist(2);
    IwasawaElement rhs = h1.twist(2) * h2.twist(2);
    CHECK(lhs.agrees_at_certified(rhs));
    CHECK(lhs.diff_val_upto(rhs, cfg.M - check_prec) >= check_prec);
    IwasawaElement back = h1.twist(3).twist(-3);
    CHECK(back.agrees_at_certified(h1));
    CHECK(back.diff_val_upto(h1, cfg.M - check_prec) >= check_prec);
    CHECK(h1.twist(0).diff_val(h1) >= cfg.N);
}

TEST_CASE("involution: gamma0 -> (1+T)^{-1}, ord 2, delta -> delta^{-1}") {
    AlgebraConfig cfg(5, 12, 12);
    IwasawaElement g = IwasawaElement::gamma0_pow(cfg, 1);
    IwasawaElement gi = g.involution();
    // geometric series 1 - T + T^2 - ...
    for (long n = 0; n < 6; ++n) {
        PadicScalar expect = PadicScalar::from_int(5, n % 2 == 0 ? 1 : -1, 12);
        CHECK(gi.coeff(0, n).equal_at(expect, 10));
    }
    std::mt19937_64 rng(9);
    IwasawaElement h = random_lambda_element(cfg, rng, 6);
    CHECK(h.involution().involution().diff_val(h) >= 10);
    IwasawaElement d = IwasawaElement::delta(cfg, 2);
    IwasawaElement dinv = IwasawaElement::delta(cfg, 3);  // 2*3=6=1 mod 5
    CHECK(d.involution().diff_val(dinv) >= 12);
}

TEST_CASE("evaluation: chi^1(gamma0 - 1) = p and homomorphism property") {
    AlgebraConfig cfg(5, 12, 20);
    IwasawaElement T = IwasawaElement::T(cfg);
    PadicCharacter chi1 = PadicCharacter::tame(0, 1);
    EvalResult r = T.evaluate(chi1);
    CHECK(r.scalar_value().equal_at(PadicScalar::from_int(5, 5, 12), 10));

    std::mt19937_64 rng(11);
    IwasawaElement h1 = random_lambda_element(cfg, rng, 8);
    IwasawaElement h2 = random_lambda_element(cfg, rng, 8);
    for (const PadicCharacter& lam : {PadicCharacter::tame(1, 2), PadicCharacter::wild(2, 1, 0, 1)}) {
        EvalResult a = h1.evaluate(lam);
        EvalResult b = h2.evaluate(lam);
        EvalResult ab = (h1 * h2).evaluate(lam);
        long A = std::min(ab.trunc_floor, std::min(a.trunc_floor, b.trunc_floor));
        A = std::min(A, static_cast<long>(8));
        CHECK(ab.num.equal_at(a.num * b.num, A));
    }
}

TEST_CASE("evaluate kills wrong branches; twisting commutes with evaluation") {
    AlgebraConfig cfg(5, 12, 20);
    std::mt19937_64 rng(13);
    IwasawaElement h = random_lambda_element(cfg, rng, 8);
    PadicCharacter lam = PadicCharacter::tame(2, 1);  // branch 3
    EvalResult full = h.evaluate(lam);
    EvalResult proj = h.project(3).evaluate(lam);
    CHECK(full.num.equal_at(proj.num, 10));
    EvalResult other = h.project(1).evaluate(lam);
    CHECK(other.num.zero_at(10));

    // evaluate(Tw_n h, lam) = evaluate(h, lam * chi^n)
    IwasawaElement tw = h.twist(2);
    EvalResult lhs = tw.evaluate(lam);
    EvalResult rhs = h.evaluate(lam.times_chi(2));
    CHECK(lhs.num.equal_at(rhs.num, 6));
}

TEST_CASE("involution/evaluation compatibility") {
    AlgebraConfig cfg(5, 14, 24);
    std::mt19937_64 rng(17);
    IwasawaElement h = random_lambda_element(cfg, rng, 8);
    PadicCharacter lam = PadicCharacter::wild(2, 2, 1, 0);
    EvalResult lhs = h.involution().evaluate(lam);
    EvalResult rhs = h.evaluate(lam.inverted());
    CHECK(lhs.num.equal_at(rhs.num, 5));
}

TEST_CASE("wild evaluation: gamma0^p - 1 dies at a conductor p^2 character") {
    AlgebraConfig cfg(5, 12, 24);
    IwasawaElement g = IwasawaElement::gamma0_pow(cfg, 5);
    IwasawaElement h = g - IwasawaElement::one(cfg);
    // theta(gamma0) = zeta_5, j = 0: gamma0^5 evaluates to zeta_5^5 * u^0 = 1
    PadicCharacter lam = PadicCharacter::wild(2, 1, 0, 0);
    EvalResult r = h.evaluate(lam);
    CHECK(r.num.zero_at(std::min(r.trunc_floor, static_cast<long>(4))));
}

TEST_CASE("order_at counts linear factors") {
    AlgebraConfig cfg(5, 14, 16);
    IwasawaElement lin = IwasawaElement::gamma0_minus(cfg, cfg.u_scalar());  // gamma0 - chi(gamma0)
    CHECK(lin.order_at(0, 1) == 1);
    CHECK((lin * lin).order_at(2, 1) == 2);
    CHECK(IwasawaElement::one(cfg).order_at(0, 1) == 0);
    CHECK(IwasawaElement::one(cfg).order_at(0, 0) == 0);
    IwasawaElement z(cfg);
    CHECK_THROWS_AS(z.order_at(0, 0), indeterminate_order);
}
