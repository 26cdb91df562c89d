#include <iwasym/stickelberger.hpp>
#include <iwasym/parallel.hpp>

#include <sstream>

namespace iwasym {

GroupAlgebraElement::GroupAlgebraElement(long p, long level) : p_(p), level_(level) {
    if (level < 1) throw std::invalid_argument("GroupAlgebraElement: level >= 1");
    pn_ = 1;
    for (long i = 0; i < level; ++i) pn_ *= p;
    coeff_.assign(static_cast<size_t>(pn_), Rat(0));
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
    if (p_ != o.p_ || level_ != o.level_) throw std::invalid_argument("GroupAlgebraElement: level mismatch");
    GroupAlgebraElement r = *this;
    for (size_t i = 0; i < coeff_.size(); ++i) r.coeff_[i] += o.coeff_[i];
    return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
    if (p_ != o.p_ || level_ != o.level_) throw std::invalid_argument("GroupAlgebraElement: level mismatch");
    GroupAlgebraElement r = *this;
    for (size_t i = 0; i < coeff_.size(); ++i) r.coeff_[i] -= o.coeff_[i];
    return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const Rat& s) const {
    GroupAlgebraElement r = *this;
    for (auto& c : r.coeff_) c *= s;
    return r;
}

GroupAlgebraElement GroupAlgebraElement::times_group(const Int& g) const {
    GroupAlgebraElement r(p_, level_);
    Int gm = g % pn_;
    if (gm < 0) gm += pn_;
    long gl = static_cast<long>(gm.get_si());
    for (long a = 0; a < pn_; ++a) {
        if (coeff_[static_cast<size_t>(a)] == 0) continue;
        long target = static_cast<long>((static_cast<unsigned long long>(gl) * a) % pn_);
        r.coeff_[static_cast<size_t>(target)] += coeff_[static_cast<size_t>(a)];
    }
    return r;
}

GroupAlgebraElement GroupAlgebraElement::restrict_to(long smaller_level) const {
    if (smaller_level > level_) throw std::invalid_argument("restrict_to: larger level");
    GroupAlgebraElement r(p_, smaller_level);
    for (long a = 0; a < pn_; ++a) {
        if (coeff_[static_cast<size_t>(a)] == 0) continue;
        r.coeff_[static_cast<size_t>(a % r.pn_)] += coeff_[static_cast<size_t>(a)];
    }
    return r;
}

long GroupAlgebraElement::max_den_val() const {
    long v = 0;
    for (const auto& c : coeff_) {
        if (c == 0) continue;
        v = std::max(v, valuation_int(c.get_den(), p_));
    }
    return v;
}

namespace {

// Gamma-coordinate lookup for the full unit group (Z/p^n)^x: a = omega(a) u^t.
std::vector<long> gamma_coordinate_table(long p, long level, const Int& u) {
    long pn = 1;
    for (long i = 0; i < level; ++i) pn *= p;
    long order = pn / p;  // p^(level-1)
    Int PN(pn);
    std::vector<long> table(static_cast<size_t>(pn), -1);
    Int expn = pow_int(p, static_cast<unsigned long>(level + 2));
    for (long a0 = 1; a0 < p; ++a0) {
        // omega(a0) mod p^n, then walk the coset omega(a0) * u^t
        Int w;
        Int base(a0);
        mpz_powm(w.get_mpz_t(), base.get_mpz_t(), expn.get_mpz_t(), PN.get_mpz_t());
        Int a = w;
        for (long t = 0; t < order; ++t) {
            table[static_cast<size_t>(mpz_get_ui(a.get_mpz_t()))] = t;
            a = a * u % PN;
        }
    }
    return table;
}

} // namespace

std::vector<PadicScalar> GroupAlgebraElement::branch_series(long b, const AlgebraConfig& cfg) const {
    long p = p_;
    long gamma_order = pn_ / p;  // p^(level-1)
    if (cfg.M > gamma_order) {
        std::ostringstream os;
        os << "branch_series: truncation degree M=" << cfg.M << " exceeds the level-" << level_
           << " Gamma-order " << gamma_order << "; raise the Stickelberger level to >= "
           << level_ + 1;
        throw precision_shortfall(os.str());
    }
    long work_prec = cfg.N + level_ + 10;
    // collect d_t = sum over slots with Gamma-coordinate t of c_a * omega(a)^b
    std::vector<long> tcoord = gamma_coordinate_table(p, level_, cfg.u);
    std::vector<PadicScalar> d(static_cast<size_t>(gamma_order), PadicScalar::zero(p));
    std::vector<PadicScalar> wpow(static_cast<size_t>(p));
    for (long x = 1; x < p; ++x) wpow[static_cast<size_t>(x)] = teichmuller(x, p, work_prec).pow(b);
    for (long a = 0; a < pn_; ++a) {
        const Rat& c = coeff_[static_cast<size_t>(a)];
        if (c == 0) continue;
        if (a % p == 0) throw std::logic_error("branch_series: support not in the unit group");
        long t = tcoord[static_cast<size_t>(a)];
        PadicScalar cp = PadicScalar::from_rational(p, c, work_prec);
        d[static_cast<size_t>(t)] = d[static_cast<size_t>(t)] + cp * wpow[static_cast<size_t>(a % p)];
    }
    // S(T) = sum_t d_t (1+T)^t: stream Pascal rows, coefficient m gets binom(t, m)
    Int big = pow_int(p, static_cast<unsigned long>(work_prec + level_ + 4));
    std::vector<Int> row(static_cast<size_t>(cfg.M), 0);
    row[0] = 1;
    std::vector<PadicScalar> out(static_cast<size_t>(cfg.M), PadicScalar::zero(p));
    for (long t = 0; t < gamma_order; ++t) {
        if (t > 0) {
            // binom(t, m) from binom(t-1, *): descend so the update is in place
            for (long m = std::min<long>(t, cfg.M - 1); m >= 1; --m)
                row[static_cast<size_t>(m)] = (row[static_cast<size_t>(m)] + row[static_cast<size_t>(m - 1)]) % big;
        }
        const PadicScalar& dt = d[static_cast<size_t>(t)];
        if (dt.is_exact_zero()) continue;
        for (long m = 0; m <= std::min<long>(t, cfg.M - 1); ++m) {
            if (row[static_cast<size_t>(m)] == 0) continue;
            out[static_cast<size_t>(m)] =
                out[static_cast<size_t>(m)] + dt * PadicScalar::from_int(p, row[static_cast<size_t>(m)], work_prec);
        }
    }
    return out;
}

namespace {

GroupAlgebraElement stickelberger_impl(const DirichletCharacter& eta, long level,
                                       const AlgebraConfig& cfg, bool parallel) {
    long p = cfg.p;
    long f = eta.modulus();
    if (f % p == 0 && f != 1)
        throw std::domain_error("stickelberger: eta must have conductor prime to p");
    GroupAlgebraElement theta(p, level);
    long pn = theta.group_modulus();
    long F = f * pn;
    // inverse table mod p^n, shared by all f repetitions of each residue
    std::vector<long> inv_table(static_cast<size_t>(pn), 0);
    for (long a = 1; a < pn; ++a) {
        if (a % p == 0) continue;
        if (inv_table[static_cast<size_t>(a)] != 0) continue;
        long ai = static_cast<long>(mod_inverse(Int(a), Int(pn)).get_si());
        inv_table[static_cast<size_t>(a)] = ai;
        inv_table[static_cast<size_t>(ai)] = a;
    }
    // eta^{-1} value table mod f
    DirichletCharacter eta_inv = eta.inverted();
    std::vector<int> eval_table(static_cast<size_t>(f));
    for (long a = 0; a < f; ++a) eval_table[static_cast<size_t>(a)] = eta_inv.value(a);
    // per-slot integer accumulators: coeff[a'] = -(sum over A with A^{-1} = a') A eta^{-1}(A) / (f p^n)
    std::vector<Int> acc(static_cast<size_t>(pn), Int(0));
    auto work = [&](std::size_t beg, std::size_t end, std::vector<Int>& local) {
        for (std::size_t Au = beg; Au < end; ++Au) {
            long A = static_cast<long>(Au);
            if (A % p == 0) continue;
            int ev = eval_table[static_cast<size_t>(A % f)];
            if (ev == 0) continue;
            long ainv = inv_table[static_cast<size_t>(A % pn)];
            local[static_cast<size_t>(ainv)] += ev > 0 ? Int(A) : Int(-A);
        }
    };
    if (parallel) {
        int nt = omp_get_max_threads();
        std::vector<std::vector<Int>> locals(static_cast<size_t>(nt),
                                             std::vector<Int>(static_cast<size_t>(pn), Int(0)));
#pragma omp parallel
        {
            int tid = omp_get_thread_num();
            std::size_t chunk = (static_cast<std::size_t>(F) + nt) / nt + 1;
            std::size_t beg = 1 + static_cast<std::size_t>(tid) * chunk;
            std::size_t end = std::min<std::size_t>(beg + chunk, static_cast<std::size_t>(F) + 1);
            if (beg <= static_cast<std::size_t>(F)) work(beg, end, locals[static_cast<size_t>(tid)]);
        }
        for (const auto& loc : locals)
            for (long a = 0; a < pn; ++a) acc[static_cast<size_t>(a)] += loc[static_cast<size_t>(a)];
    } else {
        work(1, static_cast<std::size_t>(F) + 1, acc);
    }
    Rat scale(-1, F);
    for (long a = 0; a < pn; ++a)
        if (acc[static_cast<size_t>(a)] != 0) theta.at(a) = Rat(acc[static_cast<size_t>(a)]) * scale;
    return theta;
}

} // namespace

GroupAlgebraElement stickelberger(const DirichletCharacter& eta, long level, const AlgebraConfig& cfg) {
    return stickelberger_impl(eta, level, cfg, true);
}

GroupAlgebraElement stickelberger_serial(const DirichletCharacter& eta, long level, const AlgebraConfig& cfg) {
    return stickelberger_impl(eta, level, cfg, false);
}

namespace {

// multiply a series by the divisor polynomial T(T - (u-1)) = (g0-1)(g0-u)
std::vector<PadicScalar> times_divisor(const std::vector<PadicScalar>& s, const AlgebraConfig& cfg) {
    long M = static_cast<long>(s.size());
    PadicScalar um1 = cfg.u_scalar(cfg.N + 8) - PadicScalar::one(cfg.p, cfg.N + 8);
    std::vector<PadicScalar> r(s.size(), PadicScalar::zero(cfg.p));
    for (long m = 0; m < M; ++m) {
        PadicScalar v = PadicScalar::zero(cfg.p);
        if (m >= 2) v = v + s[static_cast<size_t>(m - 2)];
        if (m >= 1) v = v - um1 * s[static_cast<size_t>(m - 1)];
        r[static_cast<size_t>(m)] = v;
    }
    return r;
}

// multiply a series by (1+T)^2 / u
std::vector<PadicScalar> times_one_plus_T_sq_over_u(const std::vector<PadicScalar>& s,
                                                    const AlgebraConfig& cfg) {
    long M = static_cast<long>(s.size());
    PadicScalar uinv = cfg.u_scalar(cfg.N + 8).inverse();
    PadicScalar two = PadicScalar::from_int(cfg.p, 2, cfg.N + 8);
    std::vector<PadicScalar> r(s.size(), PadicScalar::zero(cfg.p));
    for (long m = 0; m < M; ++m) {
        PadicScalar v = s[static_cast<size_t>(m)];
        if (m >= 1) v = v + two * s[static_cast<size_t>(m - 1)];
        if (m >= 2) v = v + s[static_cast<size_t>(m - 2)];
        r[static_cast<size_t>(m)] = v * uinv;
    }
    return r;
}

IwasawaElement kl_build(const DirichletCharacter& eta, const AlgebraConfig& cfg, long level) {
    long p = cfg.p;
    bool triv = eta.is_trivial();
    DirichletCharacter eta_inv = eta.inverted();
    GroupAlgebraElement theta_raw = stickelberger(eta_inv, level, cfg);

    IwasawaElement L(cfg);
    int eta_sign = eta.parity();

    if (!triv) {
        for (long a = 0; a < cfg.branches(); ++a) {
            bool minus_arm = ((a % 2 == 0) ? 1 : -1) == -eta_sign;
            if (minus_arm) {
                L.branch_mut(a) = theta_raw.branch_series(a, cfg);
            } else {
                // reflected arm: branch_{1-a} of the Stickelberger family,
                // composed with gamma0 -> chi(gamma0)/gamma0
                std::vector<PadicScalar> src = theta_raw.branch_series(1 - a, cfg);
                L.branch_mut(a) = substitute_series(src, cfg, cfg.u_scalar(cfg.N + 8), true);
            }
        }
        return L;
    }

    // trivial eta: store the numerator (g0-1)(g0-u) L_triv.  The drift-free
    // divisor-multiplied element (sigma_u - 1)(sigma_u - u) Theta is exactly
    // norm-compatible; raw branches away from 0 converge as well.
    Int u = cfg.u;
    GroupAlgebraElement theta_div = theta_raw.times_group(u * u % theta_raw.group_modulus()) -
                                    theta_raw.times_group(u) * Rat(Int(1) + u) +
                                    theta_raw * Rat(u);
    for (long a = 0; a < cfg.branches(); ++a) {
        bool minus_arm = ((a % 2 == 0) ? 1 : -1) == -1;  // eta_sign = +1
        if (minus_arm) {
            L.branch_mut(a) = theta_div.branch_series(a, cfg);
        } else if (a == 0) {
            // reflection of the pole-carrying branch 1: numerator transforms to
            // (1+T)^2 N_1(u/(1+T) - 1) / u
            std::vector<PadicScalar> n1 = theta_div.branch_series(1, cfg);
            std::vector<PadicScalar> refl = substitute_series(n1, cfg, cfg.u_scalar(cfg.N + 8), true);
            L.branch_mut(a) = times_one_plus_T_sq_over_u(refl, cfg);
        } else {
            // pole-free even branch: reflect the raw odd branch 1-a, then
            // re-attach the divisor so the whole element is numerator-form
            std::vector<PadicScalar> src = theta_raw.branch_series(1 - a, cfg);
            std::vector<PadicScalar> refl = substitute_series(src, cfg, cfg.u_scalar(cfg.N + 8), true);
            L.branch_mut(a) = times_divisor(refl, cfg);
        }
    }
    L.set_pole(PoleDivisor::g0_minus_1_times_g0_minus_chi);
    return L;
}

} // namespace

IwasawaElement kl_element(const DirichletCharacter& eta, const AlgebraConfig& cfg,
                          const KLOptions& opt, KLInfo* info) {
    IwasawaElement L = kl_build(eta, cfg, opt.level);
    long measured = LONG_MAX;
    if (opt.certify) {
        // certify against the next level: the remaining error of the level-n
        // element is dominated by the first omitted correction, which is what
        // the level-(n+1) build measures
        IwasawaElement L_next = kl_build(eta, cfg, opt.level + 1);
        for (long a = 0; a < cfg.branches(); ++a) {
            auto& cur = L.branch_mut(a);
            const auto& next = L_next.branch(a);
            for (size_t n = 0; n < cur.size(); ++n) {
                PadicScalar d = cur[n] - next[n];
                if (d.is_exact_zero()) continue;
                measured = std::min(measured, d.val());
                cur[n] = cur[n].cap_abs_prec(d.val());
            }
        }
    }
    if (info) {
        info->level = opt.level;
        info->measured_agreement = measured;
        info->certified_digits = std::min<long>(cfg.N, measured);
    }
    return L;
}

InterpolationCheck verify_interpolation(const IwasawaElement& L, const DirichletCharacter& eta,
                                        const PadicCharacter& theta, long j,
                                        long compare_digits, long ring_level) {
    const AlgebraConfig& cfg = L.config();
    long p = cfg.p;
    if (j > 0) throw std::domain_error("verify_interpolation: the algebraic side is j <= 0");
    PadicCharacter lam = theta.times_chi(j);
    // parity hypothesis of the theorem: theta chi^j(-1) = -eta(-1)
    if (lam.parity() != -eta.parity())
        throw std::domain_error("verify_interpolation: parity hypothesis violated");

    long n = theta.conductor_exp(p);
    InterpolationCheck res;
    // (p^j / eta(p))^n and the Euler factor (1 - (eta theta^{-1})(p) p^{-j})
    Rat pj = j >= 0 ? Rat(pow_int(p, static_cast<unsigned long>(j)))
                    : Rat(1, pow_int(p, static_cast<unsigned long>(-j)));
    Rat eta_p(eta.value(p));
    res.prefactor = Rat(1);
    for (long i = 0; i < n; ++i) res.prefactor *= pj / eta_p;
    res.inv_omega = Rat(1) / res.prefactor;
    res.euler = n >= 1 ? Rat(1) : Rat(1) - eta_p / pj;

    long level = std::max<long>({ring_level, theta.min_ring_level(), 1});
    EvalResult lhs = L.evaluate(lam, level);
    CyclotomicScalar oracle = dirichlet_L_nonpos_padic(eta, theta, j, cfg, level);
    CyclotomicScalar rhs = oracle * PadicScalar::from_rational(p, res.euler, cfg.N + 8);

    long A = std::min<long>(lhs.trunc_floor, std::min(lhs.num.abs_prec(), rhs.abs_prec()));
    if (compare_digits >= 0) A = std::min(A, compare_digits);
    res.compare_digits = A;
    res.pass = lhs.matches(rhs, A);
    res.agree_digits = lhs.has_den ? (lhs.num - rhs * lhs.den).floor_val() : (lhs.num - rhs).floor_val();
    res.lhs = lhs.num.str();
    res.rhs = rhs.str();
    return res;
}

} // namespace iwasym
