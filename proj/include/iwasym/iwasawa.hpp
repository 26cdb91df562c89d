#ifndef IWASYM_IWASAWA_HPP
#define IWASYM_IWASAWA_HPP

#include <iwasym/cyclotomic.hpp>

#include <optional>

namespace iwasym {

// Shared dials of the truncated algebra E[Delta][[T]], T = gamma0 - 1.
// chi(gamma0) must be a 1-unit that is not 1 mod p^2, so gamma0 generates.
struct AlgebraConfig {
    long p = 5;
    long N = 24;   // coefficient precision (p-digits)
    long M = 32;   // series truncation degree
    Int u = 6;     // chi(gamma0), default 1+p

    AlgebraConfig() = default;
    AlgebraConfig(long p_, long N_, long M_) : p(p_), N(N_), M(M_), u(p_ + 1) { validate(); }
    AlgebraConfig(long p_, long N_, long M_, Int u_) : p(p_), N(N_), M(M_), u(std::move(u_)) { validate(); }
    void validate() const;

    long branches() const { return p - 1; }
    PadicScalar u_scalar(long prec = -1) const {
        return PadicScalar::from_int(p, u, prec < 0 ? N : prec);
    }
    // u^e as an exact p-adic unit (e may be negative)
    PadicScalar u_pow(long e, long prec = -1) const { return u_scalar(prec).pow(e); }

    bool operator==(const AlgebraConfig& o) const {
        return p == o.p && N == o.N && M == o.M && u == o.u;
    }
};

// A character theta*chi^j of G_infty: tame part omega^b, wild part of
// conductor p^c sending gamma0 to a primitive p^(c-1)-th root of unity
// (selector w), and the chi^j twist.
struct PadicCharacter {
    long tame_b = 0;
    long wild_c = 0;   // 0, or >= 2 (conductor exponent of the wild part)
    long wild_sel = 1; // gcd(wild_sel, p) = 1
    long twist_j = 0;

    static PadicCharacter trivial() { return {}; }
    static PadicCharacter tame(long b, long j = 0) { return {b, 0, 1, j}; }
    static PadicCharacter wild(long c, long sel, long b = 0, long j = 0) { return {b, c, sel, j}; }

    void validate(long p) const;
    // conductor exponent n of theta: 0 iff trivial, 1 iff tame only, else c
    long conductor_exp(long p) const;
    bool theta_is_trivial(long p) const { return conductor_exp(p) == 0; }
    // branch of lambda = theta*chi^j: (b + j) mod (p-1)
    long branch(long p) const;
    // lambda(-1) = (-1)^(b+j); the wild part is always even
    int parity() const { return ((tame_b + twist_j) % 2 + 2) % 2 == 0 ? 1 : -1; }
    int theta_parity() const { return (tame_b % 2 + 2) % 2 == 0 ? 1 : -1; }
    // minimal extension level needed for the values: c-1 for c >= 2, else 0
    long min_ring_level() const { return wild_c >= 2 ? wild_c - 1 : 0; }

    PadicCharacter inverted() const { return {-tame_b, wild_c, -wild_sel, -twist_j}; }
    PadicCharacter times_chi(long n) const { return {tame_b, wild_c, wild_sel, twist_j + n}; }

    // lambda(gamma0) = theta(gamma0) * u^j in the level-`level` ring
    CyclotomicScalar lambda_gamma0(const AlgebraConfig& cfg, long level) const;
    // scalar variant, only when the wild part is trivial
    PadicScalar lambda_gamma0_scalar(const AlgebraConfig& cfg) const;
};

enum class PoleDivisor { none, g0_minus_1_times_g0_minus_chi };

// Result of evaluating an element at a character.  For elements carrying the
// declared pole divisor the value is the pair (numerator, divisor value);
// comparisons are done by cross-multiplication since general division in a
// ramified extension is not defined coefficientwise.
struct EvalResult {
    CyclotomicScalar num;
    CyclotomicScalar den;  // divisor value; exact one when no divisor declared
    bool has_den = false;
    long trunc_floor = LONG_MAX;  // absolute-precision cap induced by T-truncation

    // plain value when no divisor is involved
    const CyclotomicScalar& value() const { return num; }
    PadicScalar scalar_value() const;  // requires a constant polynomial
    bool matches(const CyclotomicScalar& expect, long A) const;
    bool matches_scalar(const PadicScalar& expect, long A) const;
};

struct indeterminate_order : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class IwasawaElement {
public:
    explicit IwasawaElement(const AlgebraConfig& cfg);

    static IwasawaElement zero(const AlgebraConfig& cfg) { return IwasawaElement(cfg); }
    static IwasawaElement one(const AlgebraConfig& cfg);
    // T = gamma0 - 1 (every branch gets the same Gamma-part series)
    static IwasawaElement T(const AlgebraConfig& cfg);
    // gamma0^t for t >= 0
    static IwasawaElement gamma0_pow(const AlgebraConfig& cfg, long t);
    // gamma0 - c (c an exact unit/scalar)
    static IwasawaElement gamma0_minus(const AlgebraConfig& cfg, const PadicScalar& c);
    // the group element delta_x in Delta, x a unit mod p (branch a gets omega(x)^a)
    static IwasawaElement delta(const AlgebraConfig& cfg, long x);
    static IwasawaElement constant(const AlgebraConfig& cfg, const PadicScalar& c);

    const AlgebraConfig& config() const { return cfg_; }
    PoleDivisor pole() const { return pole_; }
    void set_pole(PoleDivisor d) { pole_ = d; }
    std::optional<double> growth_r() const { return growth_r_; }
    void set_growth_r(double r) { growth_r_ = r; }

    const std::vector<PadicScalar>& branch(long a) const;
    std::vector<PadicScalar>& branch_mut(long a);
    const PadicScalar& coeff(long a, long n) const { return branch(a)[static_cast<size_t>(n)]; }
    void set_coeff(long a, long n, PadicScalar v);

    IwasawaElement operator+(const IwasawaElement& o) const;
    IwasawaElement operator-(const IwasawaElement& o) const;
    IwasawaElement operator-() const;
    IwasawaElement operator*(const PadicScalar& s) const;
    IwasawaElement operator*(const IwasawaElement& o) const;  // OpenMP kernel
    IwasawaElement pow(long e) const;                          // e >= 0, pole-free

    IwasawaElement twist(long n) const;       // Tw_n
    IwasawaElement involution() const;        // sigma -> sigma^{-1}
    IwasawaElement project(long a) const;     // pi_{omega^a}
    // substitution gamma0 -> cmul * gamma0^{+-1}; the workhorse behind twist,
    // involution and the reflection gamma0 -> u/gamma0 used by the KL branches
    IwasawaElement gamma0_substitution(const PadicScalar& cmul, bool invert) const;

    EvalResult evaluate(const PadicCharacter& lam, long ring_level = -1,
                        long required_abs_prec = -1) const;
    // order of the a-branch at (gamma0 - u^j); throws indeterminate_order
    long order_at(long a, long j) const;
    // quotient of the a-branch by (gamma0 - u^j)^e (synthetic division)
    std::vector<PadicScalar> branch_divided(long a, long j, long e) const;

    bool branch_zero_at(long a, long A) const;
    bool is_zero_at(long A) const;
    // min over branches/coefficients of v(this - o)
    long diff_val(const IwasawaElement& o) const;
    // same, restricted to coefficients of T^n with n < nmax
    long diff_val_upto(const IwasawaElement& o, long nmax) const;
    // coefficientwise agreement at the joint certified absolute precision
    // (each capped at `cap`); the honest "equal at working precision"
    bool agrees_at_certified(const IwasawaElement& o, long cap = LONG_MAX) const;
    long min_coeff_val() const;
    long min_abs_prec() const;
    // cap every coefficient's absolute precision (certification ledger)
    void cap_abs_prec(long A);

    std::string str() const;

private:
    AlgebraConfig cfg_;
    std::vector<std::vector<PadicScalar>> br_;
    PoleDivisor pole_ = PoleDivisor::none;
    std::optional<double> growth_r_;
};

// Serial reference twin of operator* (tests compare against the OpenMP one).
IwasawaElement multiply_serial(const IwasawaElement& x, const IwasawaElement& y);

// gamma0 -> cmul * gamma0^(invert ? -1 : +1) on a single branch series.
std::vector<PadicScalar> substitute_series(const std::vector<PadicScalar>& s,
                                           const AlgebraConfig& cfg,
                                           const PadicScalar& cmul, bool invert,
                                           bool exact_poly = false);

// Evaluate a plain coefficient series at a ring element t (Horner).
CyclotomicScalar eval_series(const std::vector<PadicScalar>& s, const CyclotomicScalar& t);
PadicScalar eval_series_scalar(const std::vector<PadicScalar>& s, const PadicScalar& t);

} // namespace iwasym

#endif
