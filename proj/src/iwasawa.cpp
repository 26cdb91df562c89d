#include <iwasym/iwasawa.hpp>
#include <iwasym/parallel.hpp>

#include <cmath>
#include <sstream>

namespace iwasym {

namespace {

bool is_small_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// multiply by an exact integer, keeping enough relative slack for p | n
PadicScalar mul_by_int(const PadicScalar& x, const Int& n) {
    if (n == 0) return PadicScalar::zero(x.prime());
    return x * PadicScalar::from_int(x.prime(), n, std::max<long>(x.prec(), 1) + 16);
}

// index after the last coefficient that is not the exact zero; a value < size
// means the series is an exact polynomial (zero tail), so no truncation error
long effective_degree(const std::vector<PadicScalar>& s) {
    long d = static_cast<long>(s.size());
    while (d > 0 && s[static_cast<size_t>(d - 1)].is_exact_zero()) --d;
    return d;
}

// Pascal triangle rows 0..M-1 (exact)
const std::vector<std::vector<Int>>& pascal_rows(long M) {
    thread_local std::vector<std::vector<Int>> cache;
    if (static_cast<long>(cache.size()) < M) {
        size_t old = cache.size();
        cache.resize(static_cast<size_t>(M));
        for (size_t k = old; k < cache.size(); ++k) {
            cache[k].resize(k + 1);
            cache[k][0] = 1;
            cache[k][k] = 1;
            for (size_t i = 1; i < k; ++i) cache[k][i] = cache[k - 1][i - 1] + cache[k - 1][i];
        }
    }
    return cache;
}

} // namespace

void AlgebraConfig::validate() const {
    if (p < 3 || p % 2 == 0 || !is_small_prime(p))
        throw std::invalid_argument("AlgebraConfig: p must be an odd prime");
    if (N < 1 || M < 2) throw std::invalid_argument("AlgebraConfig: need N >= 1, M >= 2");
    if (u % p != 1) throw std::invalid_argument("AlgebraConfig: chi(gamma0) must be 1 mod p");
    if (u % (p * p) == 1) throw std::invalid_argument("AlgebraConfig: chi(gamma0) must not be 1 mod p^2");
}

void PadicCharacter::validate(long p) const {
    if (wild_c == 1 || wild_c < 0) throw std::invalid_argument("PadicCharacter: wild conductor exponent is 0 or >= 2");
    if (wild_c >= 2 && wild_sel % p == 0)
        throw std::invalid_argument("PadicCharacter: wild selector must pick a primitive root");
}

long PadicCharacter::conductor_exp(long p) const {
    if (wild_c >= 2) return wild_c;
    return (tame_b % (p - 1) + (p - 1)) % (p - 1) != 0 ? 1 : 0;
}

long PadicCharacter::branch(long p) const {
    long a = (tame_b + twist_j) % (p - 1);
    return a < 0 ? a + (p - 1) : a;
}

CyclotomicScalar PadicCharacter::lambda_gamma0(const AlgebraConfig& cfg, long level) const {
    validate(cfg.p);
    long need = min_ring_level();
    if (level < 1) level = std::max<long>(need, 1);
    if (level < need) throw std::invalid_argument("PadicCharacter: ring level too small for the wild part");
    CyclotomicScalar root = wild_c >= 2
        ? CyclotomicScalar::zeta_power(cfg.p, wild_c - 1, wild_sel, cfg.N).embed(level)
        : CyclotomicScalar::one(cfg.p, level, cfg.N);
    return root * cfg.u_pow(twist_j);
}

PadicScalar PadicCharacter::lambda_gamma0_scalar(const AlgebraConfig& cfg) const {
    if (wild_c != 0) throw std::invalid_argument("PadicCharacter: wild part present, no scalar value");
    return cfg.u_pow(twist_j);
}

PadicScalar EvalResult::scalar_value() const {
    if (has_den) throw std::domain_error("EvalResult: divisor pair, use matches()");
    for (long i = 1; i < num.degree(); ++i)
        if (!num.coeff(i).is_zeroish())
            throw std::domain_error("EvalResult: value is not a constant");
    return num.coeff(0);
}

bool EvalResult::matches(const CyclotomicScalar& expect, long A) const {
    A = std::min(A, trunc_floor);
    if (!has_den) return num.equal_at(expect, A);
    return num.equal_at(den * expect, A);
}

bool EvalResult::matches_scalar(const PadicScalar& expect, long A) const {
    return matches(CyclotomicScalar::from_scalar(num.level(), expect), A);
}

IwasawaElement::IwasawaElement(const AlgebraConfig& cfg) : cfg_(cfg) {
    cfg_.validate();
    br_.assign(static_cast<size_t>(cfg.branches()),
               std::vector<PadicScalar>(static_cast<size_t>(cfg.M), PadicScalar::zero(cfg.p)));
}

IwasawaElement IwasawaElement::one(const AlgebraConfig& cfg) {
    IwasawaElement r(cfg);
    for (long a = 0; a < cfg.branches(); ++a) r.set_coeff(a, 0, PadicScalar::one(cfg.p, cfg.N));
    return r;
}

IwasawaElement IwasawaElement::T(const AlgebraConfig& cfg) {
    IwasawaElement r(cfg);
    for (long a = 0; a < cfg.branches(); ++a) r.set_coeff(a, 1, PadicScalar::one(cfg.p, cfg.N));
    return r;
}

IwasawaElement IwasawaElement::gamma0_pow(const AlgebraConfig& cfg, long t) {
    if (t < 0) throw std::invalid_argument("gamma0_pow: t >= 0 (use involution for inverses)");
    IwasawaElement r(cfg);
    for (long n = 0; n < std::min<long>(cfg.M, t + 1); ++n) {
        Int b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(t), static_cast<unsigned long>(n));
        PadicScalar c = PadicScalar::from_int(cfg.p, b, cfg.N + 16);
        for (long a = 0; a < cfg.branches(); ++a) r.set_coeff(a, n, c);
    }
    return r;
}

IwasawaElement IwasawaElement::gamma0_minus(const AlgebraConfig& cfg, const PadicScalar& c) {
    IwasawaElement r(cfg);
    PadicScalar c0 = PadicScalar::one(cfg.p, cfg.N) - c;
    for (long a = 0; a < cfg.branches(); ++a) {
        r.set_coeff(a, 0, c0);
        r.set_coeff(a, 1, PadicScalar::one(cfg.p, cfg.N));
    }
    return r;
}

IwasawaElement IwasawaElement::delta(const AlgebraConfig& cfg, long x) {
    IwasawaElement r(cfg);
    PadicScalar w = teichmuller(x, cfg.p, cfg.N);
    for (long a = 0; a < cfg.branches(); ++a) r.set_coeff(a, 0, w.pow(a));
    return r;
}

IwasawaElement IwasawaElement::constant(const AlgebraConfig& cfg, const PadicScalar& c) {
    IwasawaElement r(cfg);
    for (long a = 0; a < cfg.branches(); ++a) r.set_coeff(a, 0, c);
    return r;
}

const std::vector<PadicScalar>& IwasawaElement::branch(long a) const {
    long q = cfg_.branches();
    a = (a % q + q) % q;
    return br_[static_cast<size_t>(a)];
}

std::vector<PadicScalar>& IwasawaElement::branch_mut(long a) {
    long q = cfg_.branches();
    a = (a % q + q) % q;
    return br_[static_cast<size_t>(a)];
}

void IwasawaElement::set_coeff(long a, long n, PadicScalar v) {
    branch_mut(a)[static_cast<size_t>(n)] = std::move(v);
}

IwasawaElement IwasawaElement::operator+(const IwasawaElement& o) const {
    if (!(cfg_ == o.cfg_)) throw std::invalid_argument("IwasawaElement: config mismatch");
    // the exact zero belongs to every divisor class
    auto exactly_zero = [](const IwasawaElement& e) {
        for (long a = 0; a < e.config().branches(); ++a)
            for (const auto& c : e.branch(a))
                if (!c.is_exact_zero()) return false;
        return true;
    };
    PoleDivisor tag = pole_;
    if (pole_ != o.pole_) {
        if (exactly_zero(*this))
            tag = o.pole_;
        else if (exactly_zero(o))
            tag = pole_;
        else
            throw std::invalid_argument("IwasawaElement: pole divisor mismatch in sum");
    }
    IwasawaElement r = *this;
    r.pole_ = tag;
    for (size_t a = 0; a < br_.size(); ++a)
        for (size_t n = 0; n < br_[a].size(); ++n) r.br_[a][n] = br_[a][n] + o.br_[a][n];
    return r;
}

IwasawaElement IwasawaElement::operator-() const {
    IwasawaElement r = *this;
    for (auto& b : r.br_)
        for (auto& c : b) c = -c;
    return r;
}

IwasawaElement IwasawaElement::operator-(const IwasawaElement& o) const { return *this + (-o); }

IwasawaElement IwasawaElement::operator*(const PadicScalar& s) const {
    IwasawaElement r = *this;
    for (auto& b : r.br_)
        for (auto& c : b) c = c * s;
    return r;
}

IwasawaElement multiply_serial(const IwasawaElement& x, const IwasawaElement& y) {
    if (!(x.config() == y.config())) throw std::invalid_argument("IwasawaElement: config mismatch");
    if (x.pole() != PoleDivisor::none && y.pole() != PoleDivisor::none)
        throw std::invalid_argument("IwasawaElement: cannot multiply two pole-carrying elements");
    const AlgebraConfig& cfg = x.config();
    IwasawaElement r(cfg);
    for (long a = 0; a < cfg.branches(); ++a) {
        const auto& xb = x.branch(a);
        const auto& yb = y.branch(a);
        auto& rb = r.branch_mut(a);
        for (long n = 0; n < cfg.M; ++n) {
            PadicScalar acc = PadicScalar::zero(cfg.p);
            for (long i = 0; i <= n; ++i) acc = acc + xb[static_cast<size_t>(i)] * yb[static_cast<size_t>(n - i)];
            rb[static_cast<size_t>(n)] = acc;
        }
    }
    if (x.pole() != PoleDivisor::none) r.set_pole(x.pole());
    if (y.pole() != PoleDivisor::none) r.set_pole(y.pole());
    return r;
}

IwasawaElement IwasawaElement::operator*(const IwasawaElement& o) const {
    if (!(cfg_ == o.cfg_)) throw std::invalid_argument("IwasawaElement: config mismatch");
    if (pole_ != PoleDivisor::none && o.pole_ != PoleDivisor::none)
        throw std::invalid_argument("IwasawaElement: cannot multiply two pole-carrying elements");
    IwasawaElement r(cfg_);
    long B = cfg_.branches(), M = cfg_.M;
#pragma omp parallel for collapse(2) schedule(dynamic, 8)
    for (long a = 0; a < B; ++a) {
        for (long n = 0; n < M; ++n) {
            const auto& xb = br_[static_cast<size_t>(a)];
            const auto& yb = o.br_[static_cast<size_t>(a)];
            PadicScalar acc = PadicScalar::zero(cfg_.p);
            for (long i = 0; i <= n; ++i) acc = acc + xb[static_cast<size_t>(i)] * yb[static_cast<size_t>(n - i)];
            r.br_[static_cast<size_t>(a)][static_cast<size_t>(n)] = acc;
        }
    }
    if (pole_ != PoleDivisor::none) r.set_pole(pole_);
    if (o.pole_ != PoleDivisor::none) r.set_pole(o.pole_);
    return r;
}

IwasawaElement IwasawaElement::pow(long e) const {
    if (e < 0) throw std::domain_error("IwasawaElement::pow: negative exponent");
    IwasawaElement result = one(cfg_);
    IwasawaElement base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

// Substitute gamma0 -> cmul * gamma0^(inv ? -1 : +1) on a single branch series.
// Route through the (1+T)-power basis: S = sum_k s_k T^k = sum_i B_i (1+T)^i
// with B_i = sum_k s_k binom(k,i) (-1)^(k-i); then map (1+T) -> cmul*(1+T)^(+-1)
// and expand back.  Exact on the stored window; the truncated tail of the true
// element feeds every output coefficient once cmul != 1, so cap the absolute
// precision of coefficient m at (M-m)*v(cmul-1) + min(0, window valuation).
std::vector<PadicScalar> substitute_series(const std::vector<PadicScalar>& s,
                                           const AlgebraConfig& cfg,
                                           const PadicScalar& cmul, bool invert,
                                           bool exact_poly) {
    long M = static_cast<long>(s.size());
    const auto& pas = pascal_rows(M + 1);
    std::vector<PadicScalar> B(static_cast<size_t>(M), PadicScalar::zero(cfg.p));
    for (long i = 0; i < M; ++i) {
        PadicScalar acc = PadicScalar::zero(cfg.p);
        for (long k = i; k < M; ++k) {
            if (s[static_cast<size_t>(k)].is_exact_zero()) continue;
            PadicScalar t = mul_by_int(s[static_cast<size_t>(k)], pas[static_cast<size_t>(k)][static_cast<size_t>(i)]);
            acc = ((k - i) % 2 == 0) ? acc + t : acc - t;
        }
        B[static_cast<size_t>(i)] = acc;
    }
    std::vector<PadicScalar> cpow(static_cast<size_t>(M));
    cpow[0] = PadicScalar::one(cfg.p, cfg.N + 16);
    for (long i = 1; i < M; ++i) cpow[static_cast<size_t>(i)] = cpow[static_cast<size_t>(i - 1)] * cmul;

    std::vector<PadicScalar> out(static_cast<size_t>(M), PadicScalar::zero(cfg.p));
    for (long m = 0; m < M; ++m) {
        PadicScalar acc = PadicScalar::zero(cfg.p);
        if (!invert) {
            for (long i = m; i < M; ++i) {
                if (B[static_cast<size_t>(i)].is_exact_zero()) continue;
                acc = acc + mul_by_int(B[static_cast<size_t>(i)] * cpow[static_cast<size_t>(i)],
                                       pas[static_cast<size_t>(i)][static_cast<size_t>(m)]);
            }
        } else {
            // (1+T)^(-i): T^m coefficient is (-1)^m binom(i+m-1, m)
            for (long i = 0; i < M; ++i) {
                if (B[static_cast<size_t>(i)].is_exact_zero()) continue;
                Int b;
                if (i == 0) {
                    if (m != 0) continue;
                    b = 1;
                } else {
                    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(i + m - 1), static_cast<unsigned long>(m));
                }
                PadicScalar t = mul_by_int(B[static_cast<size_t>(i)] * cpow[static_cast<size_t>(i)], b);
                acc = (m % 2 == 0) ? acc + t : acc - t;
            }
        }
        out[static_cast<size_t>(m)] = acc;
    }
    PadicScalar w0 = cmul - PadicScalar::one(cfg.p, cfg.N + 16);
    if (effective_degree(s) >= M && !exact_poly && !w0.is_exact_zero()) {
        long v0 = w0.is_zeroish() ? w0.abs_prec() : w0.val();
        long minval = 0;
        for (const auto& c : s)
            if (!c.is_zeroish()) minval = std::min(minval, c.val());
        for (long m = 0; m < M; ++m)
            out[static_cast<size_t>(m)] = out[static_cast<size_t>(m)].cap_abs_prec((M - m) * v0 + minval);
    }
    return out;
}

IwasawaElement IwasawaElement::gamma0_substitution(const PadicScalar& cmul, bool invert) const {
    IwasawaElement r(cfg_);
    for (long a = 0; a < cfg_.branches(); ++a)
        r.br_[static_cast<size_t>(a)] = substitute_series(br_[static_cast<size_t>(a)], cfg_, cmul, invert);
    r.pole_ = pole_;
    r.growth_r_ = growth_r_;
    return r;
}

IwasawaElement IwasawaElement::twist(long n) const {
    if (pole_ != PoleDivisor::none && n != 0)
        throw std::invalid_argument("IwasawaElement::twist: pole divisor does not commute with Tw_n");
    if (n == 0) return *this;
    IwasawaElement r(cfg_);
    PadicScalar un = cfg_.u_pow(n, cfg_.N + 16);
    for (long b = 0; b < cfg_.branches(); ++b)
        r.br_[static_cast<size_t>(b)] = substitute_series(branch(b + n), cfg_, un, false);
    r.growth_r_ = growth_r_;
    return r;
}

IwasawaElement IwasawaElement::involution() const {
    if (pole_ != PoleDivisor::none)
        throw std::invalid_argument("IwasawaElement::involution: pole divisor not supported");
    IwasawaElement r(cfg_);
    PadicScalar one_s = PadicScalar::one(cfg_.p, cfg_.N + 16);
    for (long b = 0; b < cfg_.branches(); ++b)
        r.br_[static_cast<size_t>(b)] = substitute_series(branch(-b), cfg_, one_s, true);
    r.growth_r_ = growth_r_;
    return r;
}

IwasawaElement IwasawaElement::project(long a) const {
    IwasawaElement r(cfg_);
    r.br_[static_cast<size_t>(((a % cfg_.branches()) + cfg_.branches()) % cfg_.branches())] = branch(a);
    r.pole_ = pole_;
    r.growth_r_ = growth_r_;
    return r;
}

CyclotomicScalar eval_series(const std::vector<PadicScalar>& s, const CyclotomicScalar& t) {
    long p = t.prime();
    CyclotomicScalar acc = CyclotomicScalar::zero(p, t.level());
    for (long k = static_cast<long>(s.size()) - 1; k >= 0; --k) {
        acc = acc * t;
        acc = acc + CyclotomicScalar::from_scalar(t.level(), s[static_cast<size_t>(k)]);
    }
    return acc;
}

PadicScalar eval_series_scalar(const std::vector<PadicScalar>& s, const PadicScalar& t) {
    PadicScalar acc = PadicScalar::zero(t.prime());
    for (long k = static_cast<long>(s.size()) - 1; k >= 0; --k) acc = acc * t + s[static_cast<size_t>(k)];
    return acc;
}

EvalResult IwasawaElement::evaluate(const PadicCharacter& lam, long ring_level,
                                    long required_abs_prec) const {
    lam.validate(cfg_.p);
    long level = std::max<long>({ring_level, lam.min_ring_level(), 1});
    CyclotomicScalar lg = lam.lambda_gamma0(cfg_, level);
    CyclotomicScalar t = lg - CyclotomicScalar::one(cfg_.p, level, cfg_.N);
    long a = lam.branch(cfg_.p);
    const auto& ser = branch(a);

    EvalResult res{eval_series(ser, t), CyclotomicScalar::one(cfg_.p, level, cfg_.N), false, LONG_MAX};

    // truncation-error floor: omitted terms are c_n t^n, n >= M; an exact
    // polynomial (zero tail) has no such error
    if (!t.is_zeroish() && effective_degree(ser) >= cfg_.M) {
        // exact rational valuation of t
        long vt_num, vt_den;
        if (lam.wild_c >= 2) {
            vt_num = 1;
            vt_den = CyclotomicScalar::degree_of(cfg_.p, lam.wild_c - 1);
        } else {
            PadicScalar ts = lam.lambda_gamma0_scalar(cfg_) - PadicScalar::one(cfg_.p, cfg_.N);
            vt_num = ts.is_zeroish() ? ts.abs_prec() : ts.val();
            vt_den = 1;
        }
        long minval = 0;
        for (const auto& c : ser)
            if (!c.is_zeroish()) minval = std::min(minval, c.val());
        long floor_v;
        if (growth_r_ && *growth_r_ > 0) {
            double fitC = 0.0;
            for (size_t n = 1; n < ser.size(); ++n)
                if (!ser[n].is_zeroish())
                    fitC = std::max(fitC, -static_cast<double>(ser[n].val()) -
                                              *growth_r_ * std::log(static_cast<double>(n)) / std::log(static_cast<double>(cfg_.p)));
            double f = static_cast<double>(cfg_.M) * vt_num / vt_den -
                       *growth_r_ * std::log(static_cast<double>(cfg_.M)) / std::log(static_cast<double>(cfg_.p)) - fitC;
            floor_v = static_cast<long>(std::floor(f));
        } else {
            floor_v = (cfg_.M * vt_num) / vt_den + std::min<long>(0, minval);
        }
        res.trunc_floor = floor_v;
        res.num = res.num.cap_abs_prec(floor_v);
    }
    if (pole_ == PoleDivisor::g0_minus_1_times_g0_minus_chi) {
        CyclotomicScalar um = CyclotomicScalar::from_scalar(level, cfg_.u_scalar());
        res.den = t * (lg - um);
        res.has_den = true;
    }
    long attained = std::min(res.num.abs_prec(), res.trunc_floor);
    if (required_abs_prec >= 0 && attained < required_abs_prec) {
        std::ostringstream os;
        os << "evaluate: attained absolute precision " << attained << " < required "
           << required_abs_prec << " (truncation floor " << res.trunc_floor << ", raise M or the construction level)";
        throw precision_shortfall(os.str());
    }
    return res;
}

long IwasawaElement::order_at(long a, long j) const {
    std::vector<PadicScalar> cur = branch(a);
    bool allzero = true;
    for (const auto& c : cur)
        if (!c.is_zeroish()) allzero = false;
    if (allzero) throw indeterminate_order("order_at: branch is indistinguishable from zero at working precision");
    PadicScalar c = cfg_.u_pow(j) - PadicScalar::one(cfg_.p, cfg_.N);
    long vt = c.is_zeroish() ? c.abs_prec() : c.val();
    for (long e = 0;; ++e) {
        if (e >= cfg_.M) return e;
        PadicScalar at = eval_series_scalar(cur, c);
        long floor_v = cfg_.M * vt;  // truncation floor of the evaluation
        for (const auto& x : cur)
            if (!x.is_zeroish()) floor_v = std::min(floor_v, cfg_.M * vt + x.val());
        bool zero = at.cap_abs_prec(std::min(floor_v, at.abs_prec())).is_zeroish();
        if (!zero) return e;
        // synthetic division by (T - c): q_i = s_{i+1} + c * q_{i+1}
        std::vector<PadicScalar> q(cur.size(), PadicScalar::zero(cfg_.p));
        PadicScalar carry = PadicScalar::zero(cfg_.p);
        for (long i = static_cast<long>(cur.size()) - 2; i >= 0; --i) {
            carry = cur[static_cast<size_t>(i + 1)] + c * carry;
            q[static_cast<size_t>(i)] = carry;
        }
        cur = std::move(q);
        bool zeroed = true;
        for (const auto& x : cur)
            if (!x.is_zeroish()) zeroed = false;
        if (zeroed) throw indeterminate_order("order_at: quotient vanished at working precision");
    }
}

std::vector<PadicScalar> IwasawaElement::branch_divided(long a, long j, long e) const {
    std::vector<PadicScalar> cur = branch(a);
    PadicScalar c = cfg_.u_pow(j) - PadicScalar::one(cfg_.p, cfg_.N);
    for (long t = 0; t < e; ++t) {
        std::vector<PadicScalar> q(cur.size(), PadicScalar::zero(cfg_.p));
        PadicScalar carry = PadicScalar::zero(cfg_.p);
        for (long i = static_cast<long>(cur.size()) - 2; i >= 0; --i) {
            carry = cur[static_cast<size_t>(i + 1)] + c * carry;
            q[static_cast<size_t>(i)] = carry;
        }
        cur = std::move(q);
    }
    return cur;
}

bool IwasawaElement::branch_zero_at(long a, long A) const {
    for (const auto& c : branch(a))
        if (c.val() < A) return false;
    return true;
}

bool IwasawaElement::is_zero_at(long A) const {
    for (long a = 0; a < cfg_.branches(); ++a)
        if (!branch_zero_at(a, A)) return false;
    return true;
}

long IwasawaElement::diff_val(const IwasawaElement& o) const {
    long v = LONG_MAX;
    for (long a = 0; a < cfg_.branches(); ++a) {
        const auto& x = branch(a);
        const auto& y = o.branch(a);
        for (size_t n = 0; n < x.size(); ++n) {
            PadicScalar d = x[n] - y[n];
            if (!d.is_exact_zero()) v = std::min(v, d.val());
        }
    }
    return v;
}

long IwasawaElement::diff_val_upto(const IwasawaElement& o, long nmax) const {
    long v = LONG_MAX;
    for (long a = 0; a < cfg_.branches(); ++a) {
        const auto& x = branch(a);
        const auto& y = o.branch(a);
        for (long n = 0; n < std::min<long>(nmax, static_cast<long>(x.size())); ++n) {
            PadicScalar d = x[static_cast<size_t>(n)] - y[static_cast<size_t>(n)];
            if (!d.is_exact_zero()) v = std::min(v, d.val());
        }
    }
    return v;
}

bool IwasawaElement::agrees_at_certified(const IwasawaElement& o, long cap) const {
    for (long a = 0; a < cfg_.branches(); ++a) {
        const auto& x = branch(a);
        const auto& y = o.branch(a);
        for (size_t n = 0; n < x.size(); ++n) {
            long joint = std::min({cap, x[n].abs_prec(), y[n].abs_prec()});
            PadicScalar d = x[n] - y[n];
            if (!d.is_exact_zero() && d.val() < joint) return false;
        }
    }
    return true;
}

long IwasawaElement::min_coeff_val() const {
    long v = LONG_MAX;
    for (const auto& b : br_)
        for (const auto& c : b)
            if (!c.is_zeroish()) v = std::min(v, c.val());
    return v;
}

long IwasawaElement::min_abs_prec() const {
    long v = LONG_MAX;
    for (const auto& b : br_)
        for (const auto& c : b) v = std::min(v, c.abs_prec());
    return v;
}

void IwasawaElement::cap_abs_prec(long A) {
    for (auto& b : br_)
        for (auto& c : b) c = c.cap_abs_prec(A);
}

std::string IwasawaElement::str() const {
    std::ostringstream os;
    os << "IwasawaElement(p=" << cfg_.p << ", N=" << cfg_.N << ", M=" << cfg_.M;
    if (pole_ != PoleDivisor::none) os << ", pole=(g0-1)(g0-chi(g0))";
    os << ")";
    for (long a = 0; a < cfg_.branches(); ++a) {
        os << "\n  branch " << a << ":";
        bool any = false;
        for (long n = 0; n < std::min<long>(cfg_.M, 6); ++n) {
            os << " [" << n << "] " << coeff(a, n).str();
            any = true;
        }
        if (!any) os << " 0";
    }
    return os.str();
}

} // namespace iwasym
