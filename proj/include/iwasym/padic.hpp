#ifndef IWASYM_PADIC_HPP
#define IWASYM_PADIC_HPP

#include <iwasym/rational.hpp>

#include <climits>
#include <iosfwd>
#include <string>

namespace iwasym {

// Thrown when a requested precision cannot be met (CLI exit code 3).
struct precision_shortfall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact p-adic scalar in capped-relative representation: value = p^val * unit
// with unit invertible mod p^prec, known modulo p^(val+prec).  Exhausted
// precision ("O(p^A)", no digits known) is a distinct state from the exact
// zero, as is required for honest valuation reports.
class PadicScalar {
public:
    enum class Kind { exact_zero, eps, unit };

    PadicScalar() : p_(0), kind_(Kind::exact_zero), val_(0), prec_(0) {}

    static PadicScalar zero(long p) { return PadicScalar(p, Kind::exact_zero, 0, 0, 0); }
    static PadicScalar eps(long p, long abs_prec) { return PadicScalar(p, Kind::eps, abs_prec, 0, 0); }
    static PadicScalar from_int(long p, const Int& x, long prec);
    static PadicScalar from_int(long p, long x, long prec) { return from_int(p, Int(x), prec); }
    static PadicScalar from_rational(long p, const Rat& q, long prec);
    static PadicScalar one(long p, long prec) { return from_int(p, 1, prec); }
    // value = p^val * unit, unit given mod p^prec (must be a p-unit)
    static PadicScalar make_unit(long p, long val, Int unit, long prec);

    long prime() const { return p_; }
    Kind kind() const { return kind_; }
    bool is_exact_zero() const { return kind_ == Kind::exact_zero; }
    bool is_eps() const { return kind_ == Kind::eps; }
    bool is_unit_form() const { return kind_ == Kind::unit; }
    // zero at working precision (exact zero or exhausted)
    bool is_zeroish() const { return kind_ != Kind::unit; }

    // valuation; for eps this is the certified lower bound, for the exact
    // zero it is +infinity (LONG_MAX sentinel)
    long val() const { return kind_ == Kind::exact_zero ? LONG_MAX : val_; }
    long prec() const { return prec_; }
    // absolute precision: the value is known modulo p^abs_prec
    long abs_prec() const {
        if (kind_ == Kind::exact_zero) return LONG_MAX;
        if (kind_ == Kind::eps) return val_;
        return val_ + prec_;
    }
    const Int& unit() const { return unit_; }

    PadicScalar operator-() const;
    PadicScalar operator+(const PadicScalar& o) const;
    PadicScalar operator-(const PadicScalar& o) const { return *this + (-o); }
    PadicScalar operator*(const PadicScalar& o) const;
    PadicScalar operator/(const PadicScalar& o) const;
    PadicScalar inverse() const;
    PadicScalar pow(long e) const;

    // cap the absolute precision at A (used for truncation-error ledgers)
    PadicScalar cap_abs_prec(long A) const;

    // v(*this - o), as far as it can be certified
    long diff_val(const PadicScalar& o) const;
    // agree modulo p^A
    bool equal_at(const PadicScalar& o, long A) const { return diff_val(o) >= A; }

    std::string str() const;

private:
    PadicScalar(long p, Kind k, long val, Int unit, long prec)
        : p_(p), kind_(k), val_(val), prec_(prec), unit_(std::move(unit)) {}
    static PadicScalar normalized(long p, long val, Int residue, long rel_prec);

    long p_;
    Kind kind_;
    long val_;   // valuation (unit) or certified bound (eps)
    long prec_;  // relative precision
    Int unit_;
};

std::ostream& operator<<(std::ostream& os, const PadicScalar& x);

// Teichmuller lift: the unique (p-1)-st root of unity congruent to a mod p.
PadicScalar teichmuller(long a, long p, long prec);

// log_p on 1-units: x must satisfy v(x-1) >= 1.
PadicScalar padic_log_1unit(const PadicScalar& x, long prec);

} // namespace iwasym

#endif
