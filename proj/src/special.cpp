#include <iwasym/special.hpp>

#include <sstream>

namespace iwasym {

IwasawaElement pollack_log_factor(long t, long a, const AlgebraConfig& cfg) {
    // (1/p) sum_{i=0}^{p-1} u^{-a i p^(t-1)} (1+T)^(i p^(t-1)) mod T^M
    IwasawaElement r(cfg);
    long wp = cfg.N + 16;
    // binomials binom(i p^(t-1), m) need m! removed, so work with extra slack
    long Bq = wp + cfg.M / (cfg.p - 1) + 8;
    Int modB = pow_int(cfg.p, static_cast<unsigned long>(Bq));
    Int mod = pow_int(cfg.p, static_cast<unsigned long>(wp));
    Int order = (mod / cfg.p) * (cfg.p - 1);  // |(Z/p^wp)^x|
    PadicScalar pinv = PadicScalar::from_int(cfg.p, cfg.p, wp).inverse();

    // m! as padic scalars, precomputed
    std::vector<PadicScalar> fact_inv(static_cast<size_t>(cfg.M));
    {
        Int f(1);
        fact_inv[0] = PadicScalar::one(cfg.p, Bq);
        for (long m = 1; m < cfg.M; ++m) {
            f *= m;
            fact_inv[static_cast<size_t>(m)] = PadicScalar::from_int(cfg.p, f, Bq).inverse();
        }
    }

    Int step = pow_int(cfg.p, static_cast<unsigned long>(t - 1));
    std::vector<PadicScalar> ser(static_cast<size_t>(cfg.M), PadicScalar::zero(cfg.p));
    for (long i = 0; i < cfg.p; ++i) {
        Int e = step * i;
        Int ee = (Int(-a) * e) % order;
        if (ee < 0) ee += order;
        Int uu;
        mpz_powm(uu.get_mpz_t(), cfg.u.get_mpz_t(), ee.get_mpz_t(), mod.get_mpz_t());
        PadicScalar coef = PadicScalar::make_unit(cfg.p, 0, uu, wp);
        // running falling factorial e(e-1)...(e-m+1) mod p^Bq
        Int run(1);
        for (long m = 0; m < cfg.M; ++m) {
            if (m > 0) {
                Int fac = (e - (m - 1)) % modB;
                if (fac < 0) fac += modB;
                run = run * fac % modB;
            }
            if (Int(m) > e) break;  // binomial is zero beyond e
            PadicScalar binom = PadicScalar::from_int(cfg.p, run, Bq) * fact_inv[static_cast<size_t>(m)];
            ser[static_cast<size_t>(m)] = ser[static_cast<size_t>(m)] + coef * binom;
        }
    }
    for (long m = 0; m < cfg.M; ++m) r.set_coeff(0, m, ser[static_cast<size_t>(m)] * pinv);
    for (long b = 1; b < cfg.branches(); ++b) r.branch_mut(b) = r.branch(0);
    return r;
}

namespace {

bool factor_is_one(const IwasawaElement& f, long prec) {
    const AlgebraConfig& cfg = f.config();
    PadicScalar one = PadicScalar::one(cfg.p, cfg.N);
    for (long n = 0; n < cfg.M; ++n) {
        PadicScalar c = f.coeff(0, n);
        PadicScalar d = n == 0 ? c - one : c;
        if (!d.is_exact_zero() && d.val() < prec) return false;
    }
    return true;
}

} // namespace

IwasawaElement pollack_log(int sign, long b, const AlgebraConfig& cfg, long a_start,
                           long n_max, LogBuildInfo* info) {
    if (b < 0) throw std::domain_error("pollack_log: b >= 0");
    IwasawaElement acc = IwasawaElement::one(cfg);
    long stab = 0, used = 0;
    for (long a = a_start; a < a_start + b; ++a) {
        for (long n = 1;; ++n) {
            long t = sign > 0 ? 2 * n : 2 * n - 1;
            if (t > n_max) {
                std::ostringstream os;
                os << "pollack_log: factor level " << t << " exceeded n_max=" << n_max
                   << " before stabilizing";
                throw std::runtime_error(os.str());
            }
            IwasawaElement f = pollack_log_factor(t, a, cfg);
            if (factor_is_one(f, cfg.N)) {
                stab = std::max(stab, t - 2);
                break;
            }
            acc = acc * f;
            ++used;
        }
    }
    acc.set_growth_r(static_cast<double>(b) / 2.0);
    if (info) {
        info->stabilization_index = stab;
        info->factors_used = used;
    }
    return acc;
}

IwasawaElement padic_log_gamma0(long j, const AlgebraConfig& cfg) {
    IwasawaElement r(cfg);
    PadicScalar logu = padic_log_1unit(cfg.u_scalar(cfg.N + 8), cfg.N + 4);
    PadicScalar c0 = logu * PadicScalar::from_int(cfg.p, -j, cfg.N + 8);
    for (long a = 0; a < cfg.branches(); ++a) {
        r.set_coeff(a, 0, c0);
        for (long m = 1; m < cfg.M; ++m) {
            Rat cm(m % 2 == 1 ? 1 : -1, m);
            r.set_coeff(a, m, PadicScalar::from_rational(cfg.p, cm, cfg.N + 8));
        }
    }
    return r;
}

ZeroVerdict verify_zero(const IwasawaElement& elt, const PadicCharacter& lam, long ring_level) {
    EvalResult ev = elt.evaluate(lam, ring_level);
    ZeroVerdict v;
    v.floor = std::min(ev.trunc_floor, ev.num.abs_prec());
    v.value_val = ev.num.floor_val();
    v.value = ev.num.str();
    if (v.floor <= 0) {
        v.kind = ZeroVerdict::Kind::indeterminate;
    } else if (ev.num.zero_at(v.floor)) {
        v.kind = ZeroVerdict::Kind::zero_at_precision;
    } else {
        v.kind = ZeroVerdict::Kind::nonzero;
    }
    return v;
}

namespace {

// Pi_{j in S} (u^{-j} gamma0 - 1)
IwasawaElement linear_product(const std::vector<long>& js, const AlgebraConfig& cfg) {
    IwasawaElement acc = IwasawaElement::one(cfg);
    for (long j : js) {
        IwasawaElement lin(cfg);
        PadicScalar uj = cfg.u_pow(-j, cfg.N + 8);
        PadicScalar one = PadicScalar::one(cfg.p, cfg.N + 8);
        for (long a = 0; a < cfg.branches(); ++a) {
            lin.set_coeff(a, 0, uj - one);
            lin.set_coeff(a, 1, uj);
        }
        acc = acc * lin;
    }
    return acc;
}

} // namespace

DetIdentityReport det_identity_check(long k, const AlgebraConfig& cfg, long slack) {
    if (k < 2) throw std::domain_error("det_identity_check: k >= 2");
    IwasawaElement lhs = IwasawaElement::one(cfg);
    for (long j = 0; j <= k - 2; ++j) lhs = lhs * padic_log_gamma0(j, cfg);

    IwasawaElement logplus = pollack_log(+1, k - 1, cfg, /*a_start=*/0);
    IwasawaElement logminus = pollack_log(-1, k - 1, cfg, /*a_start=*/0);
    std::vector<long> js;
    for (long j = 0; j <= k - 2; ++j) js.push_back(j);
    IwasawaElement rhs = logplus * logminus * linear_product(js, cfg);

    DetIdentityReport rep;
    rep.slack = slack;
    rep.compared_at = cfg.N - slack;
    rep.window = cfg.M;
    rep.residual_val = lhs.diff_val(rhs);
    rep.pass = rep.residual_val >= rep.compared_at;
    return rep;
}

IwasawaElement little_l(long k, int eps_p, long a, int sign, const AlgebraConfig& cfg) {
    long q = cfg.p - 1;
    if (sign > 0) {
        std::vector<long> js;
        for (long j = 0; j <= k - 2; ++j)
            if (((j - a) % q + q) % q != 0) js.push_back(j);
        return linear_product(js, cfg);
    }
    bool special = eps_p == -1 && k % 2 == 0 && ((a - (k / 2 - 1)) % q + q) % q == 0;
    if (!special) return IwasawaElement::one(cfg);
    return linear_product({k / 2 - 1}, cfg);
}

MembershipReport image_membership(const IwasawaElement& F, const IwasawaElement& G, long k,
                                  int eps_p, long digits) {
    const AlgebraConfig& cfg = F.config();
    long p = cfg.p;
    MembershipReport rep;
    rep.accepted = true;
    if (digits < 0) digits = cfg.N - 4;
    for (long j = 0; j <= k - 2; ++j) {
        // (eps^{-1} p^{1+j-k} + p^{-j-1}) chi^j(F) = (1 - p^{-1}) chi^j(G)
        Rat co = Rat(eps_p) * Rat(1, pow_int(p, static_cast<unsigned long>(k - 1 - j))) +
                 Rat(1, pow_int(p, static_cast<unsigned long>(j + 1)));
        Rat rco = Rat(1) - Rat(1, p);
        PadicCharacter chij = PadicCharacter::tame(0, j);
        PadicScalar fv = F.evaluate(chij).scalar_value();
        PadicScalar gv = G.evaluate(chij).scalar_value();
        PadicScalar lhsv = fv * PadicScalar::from_rational(p, co, cfg.N + 8);
        PadicScalar rhsv = gv * PadicScalar::from_rational(p, rco, cfg.N + 8);
        PadicScalar d = lhsv - rhsv;
        long A = std::min(digits, std::min(lhsv.abs_prec(), rhsv.abs_prec()));
        MembershipCondition c;
        std::ostringstream os;
        os << "linear relation at j=" << j;
        if (co == 0) {
            os << " (coefficient vanishes: forces chi^" << j << "(G) = 0)";
            rep.central_relation_degenerate = true;
        }
        c.what = os.str();
        c.status = A <= 0 ? -1 : (d.is_exact_zero() || d.val() >= A ? 1 : 0);
        if (c.status != 1) rep.accepted = false;
        rep.conditions.push_back(c);
        // vanishing at every theta of conductor exactly p (tame, complete)
        for (long b = 1; b < p - 1 + 1 - 1; ++b) {
            PadicCharacter tb = PadicCharacter::tame(b, j);
            EvalResult e = F.evaluate(tb);
            long floor = std::min({digits, e.trunc_floor, e.num.abs_prec()});
            MembershipCondition z;
            std::ostringstream zs;
            zs << "theta chi^" << j << "(F) = 0 at theta = omega^" << b;
            z.what = zs.str();
            z.status = floor <= 0 ? -1 : (e.num.zero_at(floor) ? 1 : 0);
            if (z.status != 1) rep.accepted = false;
            rep.conditions.push_back(z);
        }
    }
    return rep;
}

} // namespace iwasym
