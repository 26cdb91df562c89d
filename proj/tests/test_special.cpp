#include <doctest.h>
#include <iwasym/special.hpp>

#include <cmath>

using namespace iwasym;

TEST_CASE("log^+_0 is the empty product") {
    AlgebraConfig cfg(5, 10, 8);
    IwasawaElement l0 = pollack_log(+1, 0, cfg);
    CHECK(l0.diff_val(IwasawaElement::one(cfg)) >= 10);
}

TEST_CASE("constant term of the level-1 factor") {
    // Phi_{p}(u^{-1} gamma0)/p at T=0 equals ((1+p)^{-p} - 1)/(p((1+p)^{-1} - 1))
    AlgebraConfig cfg(5, 12, 8);
    IwasawaElement f = pollack_log_factor(1, 1, cfg);
    PadicScalar u = cfg.u_scalar(16);
    PadicScalar num = u.pow(-5) - PadicScalar::one(5, 16);
    PadicScalar den = (u.pow(-1) - PadicScalar::one(5, 16)) * PadicScalar::from_int(5, 5, 16);
    CHECK(f.coeff(0, 0).equal_at(num / den, 10));
}

TEST_CASE("zero locus of log^{+-}_b") {
    AlgebraConfig cfg(3, 10, 128);
    IwasawaElement lp = pollack_log(+1, 1, cfg);
    IwasawaElement lm = pollack_log(-1, 1, cfg);
    PadicCharacter cond9 = PadicCharacter::wild(2, 1, 0, 1);   // conductor p^2, j=1
    PadicCharacter cond27 = PadicCharacter::wild(3, 1, 0, 1);  // conductor p^3, j=1

    CHECK(verify_zero(lm, cond9).kind == ZeroVerdict::Kind::zero_at_precision);
    CHECK(verify_zero(lp, cond27).kind == ZeroVerdict::Kind::zero_at_precision);
    CHECK(verify_zero(lm, cond27).kind == ZeroVerdict::Kind::nonzero);
    CHECK(verify_zero(lp, cond9).kind == ZeroVerdict::Kind::nonzero);
    // trivial theta never appears in the zero lists
    CHECK(verify_zero(lp, PadicCharacter::tame(0, 1)).kind == ZeroVerdict::Kind::nonzero);
    CHECK(verify_zero(lm, PadicCharacter::tame(0, 1)).kind == ZeroVerdict::Kind::nonzero);
}

TEST_CASE("coefficient growth respects the n^{b/2} envelope on the window") {
    AlgebraConfig cfg(3, 10, 96);
    for (long b : {1L, 2L}) {
        for (int sign : {+1, -1}) {
            IwasawaElement lg = pollack_log(sign, b, cfg);
            // fit C = max(-v(c_n) - (b/2) log_p n), then every coefficient obeys it
            double r = b / 2.0, C = 0.0;
            for (long n = 1; n < cfg.M; ++n) {
                const PadicScalar& c = lg.coeff(0, n);
                if (c.is_zeroish()) continue;
                C = std::max(C, -double(c.val()) - r * std::log(double(n)) / std::log(3.0));
            }
            CHECK(C <= 2.0);  // small fitted constant: H_{b/2} growth on the window
            for (long n = 1; n < cfg.M; ++n) {
                const PadicScalar& c = lg.coeff(0, n);
                if (c.is_zeroish()) continue;
                CHECK(double(-c.val()) <= C + r * std::log(double(n)) / std::log(3.0) + 1e-9);
            }
        }
    }
}

TEST_CASE("padic_log_gamma0: standard series and twisted constant term") {
    AlgebraConfig cfg(5, 12, 16);
    IwasawaElement l0 = padic_log_gamma0(0, cfg);
    CHECK(l0.coeff(0, 0).is_zeroish());
    CHECK(l0.coeff(0, 1).equal_at(PadicScalar::one(5, 12), 10));
    CHECK(l0.coeff(0, 2).equal_at(PadicScalar::from_rational(5, Rat(-1, 2), 12), 10));
    IwasawaElement l3 = padic_log_gamma0(3, cfg);
    PadicScalar expect = padic_log_1unit(cfg.u_scalar(16), 12) * PadicScalar::from_int(5, -3, 12);
    CHECK(l3.coeff(0, 0).equal_at(expect, 10));
    // evaluation at chi^j kills it: it is log_p of 1
    EvalResult r = l3.evaluate(PadicCharacter::tame(0, 3));
    CHECK(r.num.zero_at(std::min(r.trunc_floor, static_cast<long>(8))));
}

TEST_CASE("determinant identity") {
    SUBCASE("k=2, p=5: log_p(gamma0) = log^+ log^- (gamma0 - 1), exactly") {
        AlgebraConfig cfg(5, 12, 24);
        auto rep = det_identity_check(2, cfg, 4);
        CHECK(rep.pass);
        CHECK(rep.residual_val >= cfg.N - 4);
    }
    SUBCASE("k=3, p=3") {
        AlgebraConfig cfg(3, 12, 24);
        auto rep = det_identity_check(3, cfg, 6);
        CHECK(rep.pass);
    }
}

TEST_CASE("little_l elements") {
    AlgebraConfig cfg(5, 10, 8);
    // k=2, a=0: l^+ is the empty product
    CHECK(little_l(2, -1, 0, +1, cfg).diff_val(IwasawaElement::one(cfg)) >= 10);
    // k=2, eps=-1, a=0: l^- = gamma0 - 1
    IwasawaElement lm = little_l(2, -1, 0, -1, cfg);
    CHECK(lm.diff_val(IwasawaElement::T(cfg)) >= 10);
    // k odd: l^- = 1 always
    for (long a = 0; a < 4; ++a)
        CHECK(little_l(3, -1, a, -1, cfg).diff_val(IwasawaElement::one(cfg)) >= 10);
    // wrong residue class: l^- = 1
    CHECK(little_l(2, -1, 1, -1, cfg).diff_val(IwasawaElement::one(cfg)) >= 10);
}

TEST_CASE("image membership") {
    long k = 3;
    int eps = -1;
    AlgebraConfig cfg(5, 14, 20);

    SUBCASE("(0, 1) is rejected through the linear relation") {
        auto rep = image_membership(IwasawaElement::zero(cfg), IwasawaElement::one(cfg), k, eps);
        CHECK(!rep.accepted);
    }
    SUBCASE("F = 1 fails the conductor-p vanishing") {
        auto rep = image_membership(IwasawaElement::one(cfg), IwasawaElement::one(cfg), k, eps);
        CHECK(!rep.accepted);
    }
    SUBCASE("explicitly interpolated pair is accepted") {
        long q = cfg.p - 1;
        // F: branch c carries l^+_{f,c}, which vanishes on exactly the required set
        IwasawaElement F(cfg);
        for (long c = 0; c < q; ++c) {
            IwasawaElement lc = little_l(k, eps, c, +1, cfg);
            F = F + lc.project(c);
        }
        // G: per branch, Lagrange interpolation through (u^j - 1, co_j/rco * chi^j(F))
        IwasawaElement G(cfg);
        Rat rco = Rat(1) - Rat(1, cfg.p);
        for (long c = 0; c < q; ++c) {
            std::vector<std::pair<PadicScalar, PadicScalar>> pts;
            for (long j = 0; j <= k - 2; ++j) {
                if (((j - c) % q + q) % q != 0) continue;
                Rat co = Rat(eps) * Rat(1, pow_int(cfg.p, static_cast<unsigned long>(k - 1 - j))) +
                         Rat(1, pow_int(cfg.p, static_cast<unsigned long>(j + 1)));
                PadicScalar x = cfg.u_pow(j, cfg.N + 8) - PadicScalar::one(cfg.p, cfg.N + 8);
                PadicScalar y = F.evaluate(PadicCharacter::tame(0, j)).scalar_value() *
                                PadicScalar::from_rational(cfg.p, co / rco, cfg.N + 8);
                pts.push_back({x, y});
            }
            // Lagrange in T on this branch
            for (size_t i = 0; i < pts.size(); ++i) {
                // numerator polynomial Prod_{l != i} (T - x_l), scaled
                std::vector<PadicScalar> poly{PadicScalar::one(cfg.p, cfg.N + 8)};
                PadicScalar denom = PadicScalar::one(cfg.p, cfg.N + 8);
                for (size_t l = 0; l < pts.size(); ++l) {
                    if (l == i) continue;
                    std::vector<PadicScalar> next(poly.size() + 1, PadicScalar::zero(cfg.p));
                    for (size_t d = 0; d < poly.size(); ++d) {
                        next[d + 1] = next[d + 1] + poly[d];
                        next[d] = next[d] - poly[d] * pts[l].first;
                    }
                    poly = next;
                    denom = denom * (pts[i].first - pts[l].first);
                }
                PadicScalar scale = pts[i].second / denom;
                for (size_t d = 0; d < poly.size(); ++d) {
                    PadicScalar cur = G.coeff(c, static_cast<long>(d));
                    G.set_coeff(c, static_cast<long>(d), cur + poly[d] * scale);
                }
            }
        }
        auto rep = image_membership(F, G, k, eps, 8);
        CHECK(rep.accepted);
    }
    SUBCASE("k even, eps=-1: the central coefficient vanishes, forcing chi^{k/2-1}(G) = 0") {
        AlgebraConfig cfg4(5, 14, 20);
        auto rep = image_membership(IwasawaElement::zero(cfg4), IwasawaElement::zero(cfg4), 4, -1);
        CHECK(rep.central_relation_degenerate);
        CHECK(rep.accepted);  // 0 is in the image
    }
}
