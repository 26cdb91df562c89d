#include <iwasym/lfactory.hpp>
#include <iwasym/parallel.hpp>

#include <sstream>

namespace iwasym {

// ------------------------------------------------------------------ signs

std::vector<SignVector> enumerate_signs(long r_tilde) {
    if (r_tilde < 1) throw std::invalid_argument("enumerate_signs: r_tilde >= 1");
    std::vector<SignVector> out;
    long n = 1L << r_tilde;
    for (long idx = 0; idx < n; ++idx) {
        SignVector s(static_cast<size_t>(r_tilde));
        for (long i = 0; i < r_tilde; ++i) s[static_cast<size_t>(i)] = (idx >> i) & 1 ? -1 : +1;
        out.push_back(std::move(s));
    }
    return out;
}

long plus_count(const SignVector& s) {
    long c = 0;
    for (int v : s) c += v > 0;
    return c;
}

long minus_count(const SignVector& s) { return static_cast<long>(s.size()) - plus_count(s); }

std::string sign_str(const SignVector& s) {
    std::string r;
    for (int v : s) r += v > 0 ? '+' : '-';
    return r;
}

SignMatrix SignMatrix::build(long r_tilde) {
    SignMatrix m;
    m.r_tilde_ = r_tilde;
    auto signs = enumerate_signs(r_tilde);
    long n = static_cast<long>(signs.size());
    m.a_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            long b = 0;
            for (long t = 0; t < r_tilde; ++t)
                if (signs[static_cast<size_t>(i)][static_cast<size_t>(t)] < 0 &&
                    signs[static_cast<size_t>(j)][static_cast<size_t>(t)] < 0)
                    ++b;
            m.a_[static_cast<size_t>(i)][static_cast<size_t>(j)] = b % 2 ? -1 : 1;
        }
    return m;
}

bool SignMatrix::is_symmetric() const {
    long n = dim();
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool SignMatrix::square_is_identity_multiple_serial() const {
    long n = dim();
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            long acc = 0;
            for (long k = 0; k < n; ++k) acc += static_cast<long>(at(i, k)) * at(k, j);
            if (acc != (i == j ? n : 0)) return false;
        }
    return true;
}

bool SignMatrix::square_is_identity_multiple() const {
    long n = dim();
    bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            long acc = 0;
            for (long k = 0; k < n; ++k) acc += static_cast<long>(at(i, k)) * at(k, j);
            if (acc != (i == j ? n : 0)) ok = false;
        }
    }
    return ok;
}

bool SignMatrix::counting_identity() const {
    long n = dim();
    bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
    for (long t = 0; t < n; ++t) {
        for (long u = 0; u < n; ++u) {
            if (t == u) continue;
            long agree = 0;
            for (long s = 0; s < n; ++s) agree += at(s, t) == at(s, u);
            if (agree != n / 2) ok = false;
        }
    }
    return ok;
}

// --------------------------------------------------------- Q(alpha) values

QAlpha QAlpha::inverse() const {
    Rat nrm = x * x - y * y * alpha_sq;
    if (nrm == 0) throw std::domain_error("QAlpha: not invertible");
    return {x / nrm, -y / nrm, alpha_sq};
}

QAlpha QAlpha::pow(long e) const {
    QAlpha base = e < 0 ? inverse() : *this;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    QAlpha acc = of(Rat(1), alpha_sq);
    while (n) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return acc;
}

std::string QAlpha::str() const {
    std::ostringstream os;
    if (y == 0) {
        os << x.get_str();
    } else {
        os << x.get_str() << " + (" << y.get_str() << ")*alpha";
    }
    return os.str();
}

// ------------------------------------------------------------- e-factors

EFactor EFactor::one(const Rat& alpha_sq) {
    EFactor e;
    e.q = QAlpha::of(Rat(1), alpha_sq);
    return e;
}

EFactor EFactor::times(const EFactor& o) const {
    EFactor r;
    r.zero_factors = zero_factors + o.zero_factors;
    r.desc = desc.empty() ? o.desc : (o.desc.empty() ? desc : desc + " * " + o.desc);
    if (exact && o.exact) {
        r.exact = true;
        r.q = q * o.q;
        return r;
    }
    // promote to the p-adic pair form at a common level
    auto as_pair = [](const EFactor& e, long level, long p, long N) {
        std::pair<CyclotomicScalar, CyclotomicScalar> pr{CyclotomicScalar::one(p, level, N),
                                                         CyclotomicScalar::one(p, level, N)};
        if (e.exact) {
            if (e.q.y != 0) throw std::domain_error("EFactor: alpha-token value cannot be promoted p-adically");
            pr.first = pr.first * PadicScalar::from_rational(p, e.q.x, N);
        } else {
            pr.first = e.num.level() < level ? e.num.embed(level) : e.num;
            pr.second = e.den.level() < level ? e.den.embed(level) : e.den;
        }
        return pr;
    };
    const EFactor& pd = exact ? o : *this;
    long p = pd.num.prime();
    long level = std::max<long>({1, exact ? 1 : num.level(), o.exact ? 1 : o.num.level()});
    long N = 48;
    auto a = as_pair(*this, level, p, N);
    auto b = as_pair(o, level, p, N);
    r.exact = false;
    r.num = a.first * b.first;
    r.den = a.second * b.second;
    return r;
}

const IwasawaElement& LogCache::get(int sign, long b) {
    auto key = std::make_pair(sign, b);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, pollack_log(sign, b, cfg_)).first;
    return it->second;
}

EFactor e_av(const QAlpha& alpha, long kprime, long p, const PadicCharacter& theta, long j) {
    if (j < 1 || j > kprime - 1) throw std::domain_error("e_av: j out of the critical range [1, k'-1]");
    long n = theta.conductor_exp(p);
    bool theta_p = n == 0;  // theta(p) = 1 if trivial else 0
    Rat asq = alpha.alpha_sq;
    QAlpha pj = QAlpha::of(Rat(pow_int(p, static_cast<unsigned long>(j))), asq);
    QAlpha pref = (pj * alpha.inverse()).pow(n);
    QAlpha one = QAlpha::of(Rat(1), asq);
    QAlpha f1 = one, f2 = one;
    if (theta_p) {
        // abar = -alpha
        QAlpha pmj = QAlpha::of(make_rat(Int(1), pow_int(p, static_cast<unsigned long>(j))), asq);
        f1 = one - (QAlpha::of(Rat(-1), asq) * alpha) * pmj;
        QAlpha pj1 = QAlpha::of(Rat(pow_int(p, static_cast<unsigned long>(j - 1))), asq);
        f2 = one - pj1 * alpha.inverse();
    }
    EFactor e;
    e.exact = true;
    e.q = pref * f1 * f2;
    e.zero_factors = (f1.is_zero() ? 1 : 0) + (f2.is_zero() ? 1 : 0);
    std::ostringstream os;
    os << "e_AV(k'=" << kprime << ", n=" << n << ", j=" << j << ")";
    e.desc = os.str();
    return e;
}

EFactor e_pm(int sign, long kprime, int eps_p, const PadicCharacter& theta, long j, LogCache& logs) {
    const AlgebraConfig& cfg = logs.config();
    long p = cfg.p;
    if (j < 1 || j > kprime - 1) throw std::domain_error("e_pm: j out of the critical range [1, k'-1]");
    long n = theta.conductor_exp(p);
    EFactor e;
    e.exact = true;
    e.q = QAlpha::of(Rat(0), Rat(0));
    std::ostringstream os;
    os << "e_" << (sign > 0 ? "plus" : "minus") << "(k'=" << kprime << ", n=" << n << ", j=" << j << ")";
    e.desc = os.str();

    if (sign > 0) {
        if (n == 1) {
            e.zero_factors = 1;  // literal 0
            return e;
        }
        if (n % 2 != 0) throw std::domain_error("e_pm: odd conductor class n >= 3 is inadmissible for e^+");
        Rat numr = n == 0 ? Rat(1) - make_rat(1, p) : Rat(1);
        // (-eps(p))^(n/2)
        Rat denr = (eps_p < 0 || (n / 2) % 2 == 0) ? Rat(1) : Rat(-1);
        // p^(n((k'-1)/2 - j)): n even makes n(k'-1)/2 integral
        long pe = n * (kprime - 1) / 2 - n * j;
        Rat ppow = pe >= 0 ? Rat(pow_int(p, static_cast<unsigned long>(pe)))
                           : make_rat(Int(1), pow_int(p, static_cast<unsigned long>(-pe)));
        EvalResult lv = logs.get(+1, kprime - 1).evaluate(theta.times_chi(j));
        e.exact = false;
        long level = lv.num.level();
        e.num = CyclotomicScalar::one(p, level, cfg.N) *
                PadicScalar::from_rational(p, numr / (denr * ppow), cfg.N + 8);
        e.den = lv.num;
        return e;
    }
    // minus side
    if (n >= 2 && n % 2 == 0) throw std::domain_error("e_pm: even conductor class n >= 2 is inadmissible for e^-");
    Rat numr(1);
    long pe;
    Rat denr(1);
    if (n == 0) {
        // (p^{-j} + eps^{-1} p^{j-k}) / chi^j(log^-)
        Rat t1 = make_rat(Int(1), pow_int(p, static_cast<unsigned long>(j)));
        Rat t2 = Rat(eps_p);
        long e2 = j - kprime;
        t2 *= e2 >= 0 ? Rat(pow_int(p, static_cast<unsigned long>(e2)))
                      : make_rat(Int(1), pow_int(p, static_cast<unsigned long>(-e2)));
        numr = t1 + t2;
        pe = 0;
        if (numr == 0) {
            e.zero_factors = 1;
            e.q = QAlpha::of(Rat(0), Rat(0));
            return e;
        }
    } else {
        // 1 / ((-eps)^((n+1)/2) p^(n((k'-1)/2 - j) + (k'-1)/2) theta chi^j(log^-))
        long half = (n + 1) / 2;
        denr = (eps_p < 0 || half % 2 == 0) ? Rat(1) : Rat(-1);
        pe = (n + 1) * (kprime - 1) / 2 - n * j;
        numr = Rat(1);
    }
    Rat ppow = pe >= 0 ? Rat(pow_int(p, static_cast<unsigned long>(pe)))
                       : make_rat(Int(1), pow_int(p, static_cast<unsigned long>(-pe)));
    EvalResult lv = logs.get(-1, kprime - 1).evaluate(theta.times_chi(j));
    e.exact = false;
    long level = lv.num.level();
    e.num = CyclotomicScalar::one(p, level, cfg.N) *
            PadicScalar::from_rational(p, numr / (denr * ppow), cfg.N + 8);
    e.den = lv.num;
    return e;
}

EFactor e_kl_sign(int eta_parity, int eta_at_p, long p, const PadicCharacter& theta, long j) {
    long n = theta.conductor_exp(p);
    int lam_parity = theta.times_chi(j).parity();
    Rat eta_p(eta_at_p);
    Rat pj = j >= 0 ? Rat(pow_int(p, static_cast<unsigned long>(j)))
                    : make_rat(Int(1), pow_int(p, static_cast<unsigned long>(-j)));
    EFactor e;
    e.exact = true;
    Rat pref(1);
    for (long i = 0; i < n; ++i) pref *= pj / eta_p;
    Rat euler(1);
    if (lam_parity == eta_parity) {
        if (j < 1) throw std::domain_error("e_kl: same-parity arm needs j >= 1");
        if (n == 0) euler = Rat(1) - eta_p * Rat(pow_int(p, static_cast<unsigned long>(j - 1)));
    } else {
        if (j > 0) throw std::domain_error("e_kl: opposite-parity arm needs j <= 0");
        if (n == 0) euler = Rat(1) - eta_p * Rat(pow_int(p, static_cast<unsigned long>(-j)));
    }
    e.q = QAlpha::of(pref * euler, Rat(0));
    e.zero_factors = euler == 0 ? 1 : 0;
    std::ostringstream os;
    os << "e_KL(n=" << n << ", j=" << j << ")";
    e.desc = os.str();
    return e;
}

EFactor e_kl(const DirichletCharacter& eta, long p, const PadicCharacter& theta, long j) {
    return e_kl_sign(eta.parity(), eta.value(p), p, theta, j);
}

bool is_s_critical(const SymPowerContext& ctx, const SignVector& s, const PadicCharacter& theta, long j) {
    if (!is_critical(ctx, theta.theta_parity(), j)) return false;
    long n = theta.conductor_exp(ctx.p);
    if (minus_count(s) == 0) return n == 1 || n % 2 == 0;
    if (plus_count(s) == 0) return n == 0 || n % 2 == 1;
    return n == 0 || n == 1;
}

EFactor e_mixed(const SymPowerContext& ctx, const SignVector& s, const PadicCharacter& theta, long j,
                LogCache& logs) {
    if (static_cast<long>(s.size()) != ctx.r_tilde) throw std::invalid_argument("e_mixed: sign length");
    if (!is_critical(ctx, theta.theta_parity(), j))
        throw std::domain_error("e_mixed: (theta, j) is not a critical twist of V_m");
    if (!is_s_critical(ctx, s, theta, j)) {
        std::ostringstream os;
        long n = theta.conductor_exp(ctx.p);
        os << "e_mixed: conductor class n=" << n << " violates the s-critical gate for s=" << sign_str(s)
           << " (need " << (minus_count(s) == 0 ? "n=1 or even" : plus_count(s) == 0 ? "n=0 or odd" : "n=0 or 1")
           << ")";
        throw std::domain_error(os.str());
    }
    int eps_i = ctx.m % 2 == 0 ? -1 : ctx.eps_p;
    EFactor acc = EFactor::one(Rat(0));
    for (long i = 0; i < ctx.r_tilde; ++i) {
        long jp = j + (ctx.r - i) * (ctx.k - 1);
        acc = acc.times(e_pm(s[static_cast<size_t>(i)], ctx.weights[static_cast<size_t>(i)], eps_i,
                             theta, jp, logs));
    }
    if (ctx.m % 2 == 0) {
        // eps_K^r: trivial for even r, else the odd quadratic eps_K with
        // eps_K(p) = -1 (p inert); only the parity and the value at p enter
        int par = ctx.r % 2 == 0 ? 1 : -1;
        acc = acc.times(e_kl_sign(par, par, ctx.p, theta, j));
    }
    return acc;
}

QAlpha alpha_token(const SymPowerContext& ctx, long i, int sign) {
    Rat asq = alpha_square(ctx);
    Rat P(pow_int(ctx.p, static_cast<unsigned long>((ctx.r - i) * (ctx.k - 1))));
    if (ctx.m % 2 == 0) return QAlpha::of(Rat(sign) * P, asq);
    if (ctx.alpha_is_real() && ctx.alpha &&
        (*ctx.alpha == AlphaChoice::plus_real || *ctx.alpha == AlphaChoice::minus_real)) {
        Rat av(pow_int(ctx.p, static_cast<unsigned long>((ctx.k - 1) / 2)));
        if (*ctx.alpha == AlphaChoice::minus_real) av = -av;
        return QAlpha::of(Rat(sign) * P * av, asq);
    }
    return {Rat(0), Rat(sign) * P, asq};
}

Rat alpha_square(const SymPowerContext& ctx) {
    return Rat(-ctx.eps_p) * Rat(pow_int(ctx.p, static_cast<unsigned long>(ctx.k - 1)));
}

AlphaToken alpha_series_token(const SymPowerContext& ctx, long i, int sign) {
    AlphaToken t;
    t.sign = sign;
    t.p_exponent = (ctx.r - i) * (ctx.k - 1);
    t.symbolic = ctx.m % 2 == 1;
    t.alpha_sq = alpha_square(ctx);
    return t;
}

std::pair<EFactor, EFactor> e_admissible(const SymPowerContext& ctx, const SignVector& s,
                                         const PadicCharacter& theta, long j) {
    if (!is_critical(ctx, theta.theta_parity(), j))
        throw std::domain_error("e_admissible: (theta, j) not in C_m");
    long p = ctx.p;
    long n = theta.conductor_exp(p);
    Rat asq = alpha_square(ctx);

    EFactor prod = EFactor::one(asq);
    for (long i = 0; i < ctx.r_tilde; ++i) {
        long jp = j + (ctx.r - i) * (ctx.k - 1);
        prod = prod.times(e_av(alpha_token(ctx, i, s[static_cast<size_t>(i)]),
                               ctx.weights[static_cast<size_t>(i)], p, theta, jp));
    }
    if (ctx.m % 2 == 0) {
        int par = ctx.r % 2 == 0 ? 1 : -1;
        prod = prod.times(e_kl_sign(par, par, p, theta, j));
    }

    // closed form, with the power of p the display drops restored:
    // prefactor prod_i (p^(j_i')/alpha_{i,s_i})^n = ((-1)^(s^-) p^(j r~) / A)^n,
    // A = alpha^(r~) for odd m and 1 for even m (the p-parts cancel)
    EFactor closed;
    closed.exact = true;
    bool theta_p = n == 0;
    QAlpha one = QAlpha::of(Rat(1), asq);
    Rat pmj = j >= 0 ? make_rat(Int(1), pow_int(p, static_cast<unsigned long>(j)))
                     : Rat(pow_int(p, static_cast<unsigned long>(-j)));
    Rat pj1 = j - 1 >= 0 ? Rat(pow_int(p, static_cast<unsigned long>(j - 1)))
                         : make_rat(Int(1), pow_int(p, static_cast<unsigned long>(1 - j)));
    QAlpha bm1, bm2, bp1, bp2;
    if (ctx.m % 2 == 0) {
        bm1 = one - QAlpha::of(theta_p ? pmj : Rat(0), asq);
        bm2 = one + QAlpha::of(theta_p ? pj1 : Rat(0), asq);
        bp1 = one + QAlpha::of(theta_p ? pmj : Rat(0), asq);
        bp2 = one - QAlpha::of(theta_p ? pj1 : Rat(0), asq);
    } else {
        QAlpha al = alpha_token(ctx, ctx.r, +1);  // p_exponent 0: the bare alpha
        bm1 = one - al * QAlpha::of(theta_p ? pmj : Rat(0), asq);
        bm2 = one + al.inverse() * QAlpha::of(theta_p ? pj1 : Rat(0), asq);
        bp1 = one + al * QAlpha::of(theta_p ? pmj : Rat(0), asq);
        bp2 = one - al.inverse() * QAlpha::of(theta_p ? pj1 : Rat(0), asq);
    }
    long sm = minus_count(s), sp = plus_count(s);
    QAlpha pref = one;
    {
        // ((+-1)^n per minus sign) and (p^j / A)^(n r~)
        QAlpha base = ctx.m % 2 == 0
                          ? QAlpha::of(j >= 0 ? Rat(pow_int(p, static_cast<unsigned long>(j)))
                                              : make_rat(Int(1), pow_int(p, static_cast<unsigned long>(-j))),
                                       asq)
                          : QAlpha::of(j >= 0 ? Rat(pow_int(p, static_cast<unsigned long>(j)))
                                              : make_rat(Int(1), pow_int(p, static_cast<unsigned long>(-j))),
                                       asq) *
                                alpha_token(ctx, ctx.r, +1).inverse();
        pref = base.pow(n * ctx.r_tilde);
        if ((n * sm) % 2) pref = QAlpha::of(Rat(-1), asq) * pref;
    }
    closed.q = pref * bm1.pow(sm) * bm2.pow(sm) * bp1.pow(sp) * bp2.pow(sp);
    closed.zero_factors = sm * ((bm1.is_zero() ? 1 : 0) + (bm2.is_zero() ? 1 : 0)) +
                          sp * ((bp1.is_zero() ? 1 : 0) + (bp2.is_zero() ? 1 : 0));
    if (ctx.m % 2 == 0) {
        int par = ctx.r % 2 == 0 ? 1 : -1;
        EFactor kl = e_kl_sign(par, par, p, theta, j);
        closed.q = closed.q * kl.q;
        closed.zero_factors += kl.zero_factors;
    }
    closed.desc = "closed form";
    return {prod, closed};
}

// --------------------------------------------------------- series assembly

AlphaSeries AlphaSeries::plain(const IwasawaElement& e, const Rat& asq) {
    return {e, IwasawaElement::zero(e.config()), asq};
}

AlphaSeries AlphaSeries::operator+(const AlphaSeries& o) const {
    return {x + o.x, y + o.y, alpha_sq};
}

AlphaSeries AlphaSeries::operator-(const AlphaSeries& o) const {
    return {x - o.x, y - o.y, alpha_sq};
}

AlphaSeries AlphaSeries::operator*(const AlphaSeries& o) const {
    const AlgebraConfig& cfg = x.config();
    PadicScalar asq_s = PadicScalar::from_rational(cfg.p, alpha_sq, cfg.N + 8);
    IwasawaElement nx = x * o.x + (y * o.y) * asq_s;
    IwasawaElement ny = x * o.y + y * o.x;
    return {nx, ny, alpha_sq};
}

AlphaSeries AlphaSeries::twist(long n) const { return {x.twist(n), y.twist(n), alpha_sq}; }

long AlphaSeries::diff_val(const AlphaSeries& o) const {
    return std::min(x.diff_val(o.x), y.diff_val(o.y));
}

AlphaSeries pollack_combine(const IwasawaElement& Lplus, const IwasawaElement& Lminus,
                            const AlphaToken& alpha, long kprime, LogCache& logs) {
    const AlgebraConfig& cfg = logs.config();
    IwasawaElement xp = Lplus * logs.get(+1, kprime - 1);
    IwasawaElement xm = Lminus * logs.get(-1, kprime - 1);
    PadicScalar scale = PadicScalar::from_int(cfg.p, alpha.sign, cfg.N + 8) *
                        PadicScalar::from_int(cfg.p, cfg.p, cfg.N + 8).pow(alpha.p_exponent);
    if (!alpha.symbolic) {
        return {xp + xm * scale, IwasawaElement::zero(cfg), alpha.alpha_sq};
    }
    return {xp, xm * scale, alpha.alpha_sq};
}

IwasawaElement divide_by_unit_series(const IwasawaElement& num, const IwasawaElement& den) {
    const AlgebraConfig& cfg = num.config();
    if (num.pole() != PoleDivisor::none || den.pole() != PoleDivisor::none)
        throw std::invalid_argument("divide_by_unit_series: pole divisors not supported");
    IwasawaElement inv(cfg);
    for (long a = 0; a < cfg.branches(); ++a) {
        const auto& d = den.branch(a);
        if (d[0].is_zeroish() || d[0].val() != 0)
            throw std::domain_error("divide_by_unit_series: leading coefficient not invertible");
        auto& q = inv.branch_mut(a);
        PadicScalar c0inv = d[0].inverse();
        q[0] = c0inv;
        for (long n = 1; n < cfg.M; ++n) {
            PadicScalar acc = PadicScalar::zero(cfg.p);
            for (long i = 1; i <= n; ++i) acc = acc + d[static_cast<size_t>(i)] * q[static_cast<size_t>(n - i)];
            q[static_cast<size_t>(n)] = -(c0inv * acc);
        }
    }
    return num * inv;
}

SplitResult pollack_split(const AlphaSeries& L_a, const AlphaSeries& L_abar,
                          const AlphaToken& alpha, long kprime, LogCache& logs) {
    const AlgebraConfig& cfg = logs.config();
    PadicScalar two = PadicScalar::from_int(cfg.p, 2, cfg.N + 8);
    PadicScalar spow = PadicScalar::from_int(cfg.p, alpha.sign, cfg.N + 8) *
                       PadicScalar::from_int(cfg.p, cfg.p, cfg.N + 8).pow(alpha.p_exponent);
    SplitResult r{IwasawaElement::zero(cfg), IwasawaElement::zero(cfg)};
    AlphaSeries sum = L_a + L_abar;
    AlphaSeries dif = L_a - L_abar;
    // L^+ = (L_alpha + L_abar) / (2 log^+)
    r.plus = divide_by_unit_series(sum.x * two.inverse(), logs.get(+1, kprime - 1));
    // L^- = (L_alpha - L_abar) / (2 alpha log^-)
    IwasawaElement minus_num = alpha.symbolic ? dif.y : dif.x;
    r.minus = divide_by_unit_series(minus_num * (two * spow).inverse(), logs.get(-1, kprime - 1));
    return r;
}

IwasawaElement assemble_mixed(const SymPowerContext& ctx, const ComponentLSet& comps,
                              const SignVector& s, LogCache& logs) {
    if (static_cast<long>(comps.lambda_pairs.size()) != ctx.r_tilde)
        throw std::invalid_argument("assemble_mixed: missing components");
    (void)logs;
    const AlgebraConfig& cfg = logs.config();
    IwasawaElement acc = IwasawaElement::one(cfg);
    for (long i = 0; i < ctx.r_tilde; ++i) {
        const auto& pr = comps.lambda_pairs[static_cast<size_t>(i)];
        const IwasawaElement& Li = s[static_cast<size_t>(i)] > 0 ? pr.first : pr.second;
        acc = acc * Li.twist((ctx.r - i) * (ctx.k - 1));
    }
    if (ctx.m % 2 == 0) {
        if (!comps.dirichlet) throw std::invalid_argument("assemble_mixed: missing Dirichlet component");
        acc = acc * *comps.dirichlet;
    }
    return acc;
}

AlphaSeries assemble_admissible(const SymPowerContext& ctx, const ComponentLSet& comps,
                                const SignVector& s, LogCache& logs) {
    if (static_cast<long>(comps.lambda_pairs.size()) != ctx.r_tilde)
        throw std::invalid_argument("assemble_admissible: missing components");
    const AlgebraConfig& cfg = logs.config();
    Rat asq = alpha_square(ctx);
    AlphaSeries acc = AlphaSeries::plain(IwasawaElement::one(cfg), asq);
    for (long i = 0; i < ctx.r_tilde; ++i) {
        const auto& pr = comps.lambda_pairs[static_cast<size_t>(i)];
        AlphaSeries Li = pollack_combine(pr.first, pr.second,
                                         alpha_series_token(ctx, i, s[static_cast<size_t>(i)]),
                                         ctx.weights[static_cast<size_t>(i)], logs);
        acc = acc * Li.twist((ctx.r - i) * (ctx.k - 1));
    }
    if (ctx.m % 2 == 0) {
        if (!comps.dirichlet) throw std::invalid_argument("assemble_admissible: missing Dirichlet component");
        acc = acc * AlphaSeries::plain(*comps.dirichlet, asq);
    }
    auto [dp, dm] = d_pm(ctx);
    double growth = static_cast<double>((ctx.k - 1) * dp * dm) / 2.0;
    acc.x.set_growth_r(growth);
    acc.y.set_growth_r(growth);
    return acc;
}

AlphaSeries ell_s(const SymPowerContext& ctx, const SignVector& s, LogCache& logs) {
    const AlgebraConfig& cfg = logs.config();
    Rat asq = alpha_square(ctx);
    AlphaSeries acc = AlphaSeries::plain(IwasawaElement::one(cfg), asq);
    for (long i = 0; i < ctx.r_tilde; ++i) {
        long ki = ctx.weights[static_cast<size_t>(i)];
        AlphaSeries li = AlphaSeries::plain(logs.get(+1, ki - 1), asq);
        if (s[static_cast<size_t>(i)] < 0) {
            // ell_i^- = alpha_{i,+} log^-_{k_i - 1}
            AlphaToken t = alpha_series_token(ctx, i, +1);
            PadicScalar spow = PadicScalar::from_int(cfg.p, cfg.p, cfg.N + 8).pow(t.p_exponent);
            IwasawaElement lm = logs.get(-1, ki - 1) * spow;
            li = t.symbolic ? AlphaSeries{IwasawaElement::zero(cfg), lm, asq}
                            : AlphaSeries::plain(lm, asq);
        }
        acc = acc * li.twist((ctx.r - i) * (ctx.k - 1));
    }
    return acc;
}

DecompositionReport decomposition_check(const SymPowerContext& ctx, const ComponentLSet& comps,
                                        LogCache& logs, long slack, long window) {
    const AlgebraConfig& cfg = logs.config();
    if (window < 0) window = std::min<long>(cfg.M, 20);
    DecompositionReport rep;
    rep.threshold = cfg.N - slack;
    rep.window = window;

    auto signs = enumerate_signs(ctx.r_tilde);
    long nS = static_cast<long>(signs.size());
    SignMatrix A = SignMatrix::build(ctx.r_tilde);
    Rat asq = alpha_square(ctx);

    // admissible elements L_{V_m, t} for every t
    std::vector<AlphaSeries> adm;
    adm.reserve(static_cast<size_t>(nS));
    for (long t = 0; t < nS; ++t)
        adm.push_back(assemble_admissible(ctx, comps, signs[static_cast<size_t>(t)], logs));

    // lambda-type components derived through pollack_split of the admissible
    // pairs, as the lemma's proof does
    ComponentLSet derived = comps;
    for (long i = 0; i < ctx.r_tilde; ++i) {
        const auto& pr = comps.lambda_pairs[static_cast<size_t>(i)];
        AlphaToken tok = alpha_series_token(ctx, i, +1);
        AlphaSeries La = pollack_combine(pr.first, pr.second, tok, ctx.weights[static_cast<size_t>(i)], logs);
        AlphaSeries Lab = pollack_combine(pr.first, pr.second, alpha_series_token(ctx, i, -1),
                                          ctx.weights[static_cast<size_t>(i)], logs);
        SplitResult sp = pollack_split(La, Lab, tok, ctx.weights[static_cast<size_t>(i)], logs);
        derived.lambda_pairs[static_cast<size_t>(i)] = {sp.plus, sp.minus};
    }

    PadicScalar two_r = PadicScalar::from_int(cfg.p, 1L << ctx.r_tilde, cfg.N + 8);

    // ell^s L^s, built once per s
    std::vector<AlphaSeries> terms;
    terms.reserve(static_cast<size_t>(nS));
    for (long si = 0; si < nS; ++si) {
        const SignVector& s = signs[static_cast<size_t>(si)];
        IwasawaElement Ls = assemble_mixed(ctx, derived, s, logs);
        terms.push_back(ell_s(ctx, s, logs) * AlphaSeries::plain(Ls, asq));
    }

    rep.pass = true;
    rep.expansion_residual.assign(static_cast<size_t>(nS), 0);
    rep.inversion_residual.assign(static_cast<size_t>(nS), 0);
    for (long si = 0; si < nS; ++si) {
        AlphaSeries lhs{terms[static_cast<size_t>(si)].x * two_r, terms[static_cast<size_t>(si)].y * two_r, asq};
        AlphaSeries rhs{IwasawaElement::zero(cfg), IwasawaElement::zero(cfg), asq};
        for (long t = 0; t < nS; ++t) {
            PadicScalar a = PadicScalar::from_int(cfg.p, A.at(si, t), cfg.N + 8);
            rhs = rhs + AlphaSeries{adm[static_cast<size_t>(t)].x * a, adm[static_cast<size_t>(t)].y * a, asq};
        }
        long rv = std::min(lhs.x.diff_val_upto(rhs.x, window), lhs.y.diff_val_upto(rhs.y, window));
        rep.expansion_residual[static_cast<size_t>(si)] = rv;
        if (rv < rep.threshold) rep.pass = false;
    }
    // inversion: L_{V,t} = sum_s a_{s,t} ell^s L^s
    for (long t = 0; t < nS; ++t) {
        AlphaSeries rhs{IwasawaElement::zero(cfg), IwasawaElement::zero(cfg), asq};
        for (long si = 0; si < nS; ++si) {
            PadicScalar a = PadicScalar::from_int(cfg.p, A.at(si, t), cfg.N + 8);
            rhs = rhs + AlphaSeries{terms[static_cast<size_t>(si)].x * a, terms[static_cast<size_t>(si)].y * a, asq};
        }
        long rv = std::min(adm[static_cast<size_t>(t)].x.diff_val_upto(rhs.x, window),
                           adm[static_cast<size_t>(t)].y.diff_val_upto(rhs.y, window));
        rep.inversion_residual[static_cast<size_t>(t)] = rv;
        if (rv < rep.threshold) rep.pass = false;
    }
    return rep;
}

} // namespace iwasym
