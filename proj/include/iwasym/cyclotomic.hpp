#ifndef IWASYM_CYCLOTOMIC_HPP
#define IWASYM_CYCLOTOMIC_HPP

#include <iwasym/padic.hpp>

#include <vector>

namespace iwasym {

// Residue in (Z/p^N)[X] / Phi_{p^level}(X), the level-th cyclotomic extension
// of Q_p.  Coefficients are PadicScalar, so negative valuations are allowed.
// The power basis is an integral basis (totally ramified extension), hence
// x = 0 mod p^A  iff  every coefficient is 0 mod p^A.
class CyclotomicScalar {
public:
    CyclotomicScalar() : p_(0), level_(1) {}

    static long degree_of(long p, long level);
    static CyclotomicScalar zero(long p, long level);
    static CyclotomicScalar one(long p, long level, long prec);
    static CyclotomicScalar from_scalar(long level, const PadicScalar& s);
    // the class of X: a primitive p^level-th root of unity
    static CyclotomicScalar zeta(long p, long level, long prec);
    // zeta^e for any integer e (reduced mod p^level)
    static CyclotomicScalar zeta_power(long p, long level, long e, long prec);

    long prime() const { return p_; }
    long level() const { return level_; }
    long degree() const { return static_cast<long>(c_.size()); }
    const std::vector<PadicScalar>& coeffs() const { return c_; }
    const PadicScalar& coeff(long i) const { return c_[static_cast<size_t>(i)]; }

    CyclotomicScalar operator-() const;
    CyclotomicScalar operator+(const CyclotomicScalar& o) const;
    CyclotomicScalar operator-(const CyclotomicScalar& o) const;
    CyclotomicScalar operator*(const CyclotomicScalar& o) const;
    CyclotomicScalar operator*(const PadicScalar& s) const;
    CyclotomicScalar operator/(const PadicScalar& s) const;
    CyclotomicScalar pow(long e) const;  // e >= 0

    // re-express in the ring of a higher level (X -> X^(p^(lvl-level)))
    CyclotomicScalar embed(long level) const;

    // cap every coefficient's absolute precision at A
    CyclotomicScalar cap_abs_prec(long A) const;

    // floor of the (fractional) valuation: largest t with x in p^t * O
    long floor_val() const;
    long abs_prec() const;
    bool is_zeroish() const;            // no nonzero digit anywhere
    bool zero_at(long A) const;         // = 0 mod p^A
    bool equal_at(const CyclotomicScalar& o, long A) const;
    long diff_floor_val(const CyclotomicScalar& o) const;

    std::string str() const;

private:
    CyclotomicScalar(long p, long level, std::vector<PadicScalar> c)
        : p_(p), level_(level), c_(std::move(c)) {}
    void require_same_ring(const CyclotomicScalar& o) const;

    long p_;
    long level_;
    std::vector<PadicScalar> c_;
};

} // namespace iwasym

#endif
