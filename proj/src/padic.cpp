#include <iwasym/padic.hpp>

#include <ostream>
#include <sstream>

namespace iwasym {

const Rat& bernoulli_number(unsigned long n) {
    static std::vector<Rat> cache = {Rat(1), Rat(-1, 2)};
    while (cache.size() <= n) {
        unsigned long m = cache.size();
        // B_m = -1/(m+1) * sum_{i<m} binom(m+1, i) B_i
        Rat s(0);
        for (unsigned long i = 0; i < m; ++i) s += Rat(binomial(m + 1, i)) * cache[i];
        s /= Rat(m + 1);
        cache.push_back(-s);
    }
    return cache[n];
}

std::vector<Rat> bernoulli_polynomial(unsigned long n) {
    std::vector<Rat> c(n + 1);
    for (unsigned long i = 0; i <= n; ++i) c[n - i] = Rat(binomial(n, i)) * bernoulli_number(i);
    return c;
}

PadicScalar PadicScalar::normalized(long p, long val, Int residue, long rel_prec) {
    if (rel_prec <= 0) return eps(p, val);
    Int mod = pow_int(p, static_cast<unsigned long>(rel_prec));
    residue = residue % mod;
    if (residue < 0) residue += mod;
    if (residue == 0) return eps(p, val + rel_prec);
    long t = valuation_int(residue, p);
    if (t >= rel_prec) return eps(p, val + rel_prec);
    if (t > 0) {
        Int pt = pow_int(p, static_cast<unsigned long>(t));
        residue /= pt;
        val += t;
        rel_prec -= t;
        residue %= pow_int(p, static_cast<unsigned long>(rel_prec));
    }
    return PadicScalar(p, Kind::unit, val, std::move(residue), rel_prec);
}

PadicScalar PadicScalar::from_int(long p, const Int& x, long prec) {
    if (x == 0) return zero(p);
    long v = valuation_int(x, p);
    Int u = x / pow_int(p, static_cast<unsigned long>(v));
    return normalized(p, v, std::move(u), prec);
}

PadicScalar PadicScalar::from_rational(long p, const Rat& q, long prec) {
    if (q == 0) return zero(p);
    Int num = q.get_num(), den = q.get_den();
    long vn = valuation_int(num, p), vd = valuation_int(den, p);
    num /= pow_int(p, static_cast<unsigned long>(vn));
    den /= pow_int(p, static_cast<unsigned long>(vd));
    Int mod = pow_int(p, static_cast<unsigned long>(prec));
    Int u = (num % mod) * mod_inverse(den, mod) % mod;
    return normalized(p, vn - vd, std::move(u), prec);
}

PadicScalar PadicScalar::make_unit(long p, long val, Int unit, long prec) {
    return normalized(p, val, std::move(unit), prec);
}

PadicScalar PadicScalar::operator-() const {
    if (kind_ != Kind::unit) return *this;
    Int mod = pow_int(p_, static_cast<unsigned long>(prec_));
    return PadicScalar(p_, Kind::unit, val_, (mod - unit_) % mod, prec_);
}

PadicScalar PadicScalar::operator+(const PadicScalar& o) const {
    if (kind_ == Kind::exact_zero) return o;
    if (o.kind_ == Kind::exact_zero) return *this;
    long A = std::min(abs_prec(), o.abs_prec());
    if (kind_ != Kind::unit && o.kind_ != Kind::unit) return eps(p_, A);
    long v = std::min(kind_ == Kind::unit ? val_ : A, o.kind_ == Kind::unit ? o.val_ : A);
    if (A <= v) return eps(p_, A);
    Int s(0);
    if (kind_ == Kind::unit) s += unit_ * pow_int(p_, static_cast<unsigned long>(val_ - v));
    if (o.kind_ == Kind::unit) s += o.unit_ * pow_int(p_, static_cast<unsigned long>(o.val_ - v));
    return normalized(p_, v, std::move(s), A - v);
}

PadicScalar PadicScalar::operator*(const PadicScalar& o) const {
    if (kind_ == Kind::exact_zero || o.kind_ == Kind::exact_zero) return zero(p_ ? p_ : o.p_);
    if (kind_ == Kind::eps || o.kind_ == Kind::eps) {
        long b1 = kind_ == Kind::unit ? val_ : val_;  // val_ is the bound for eps
        long b2 = o.kind_ == Kind::unit ? o.val_ : o.val_;
        return eps(p_, b1 + b2);
    }
    long prec = std::min(prec_, o.prec_);
    Int mod = pow_int(p_, static_cast<unsigned long>(prec));
    return PadicScalar(p_, Kind::unit, val_ + o.val_, unit_ * o.unit_ % mod, prec);
}

PadicScalar PadicScalar::inverse() const {
    if (kind_ != Kind::unit) throw std::domain_error("PadicScalar: inverse of (indistinguishable-from-)zero");
    Int mod = pow_int(p_, static_cast<unsigned long>(prec_));
    return PadicScalar(p_, Kind::unit, -val_, mod_inverse(unit_, mod), prec_);
}

PadicScalar PadicScalar::operator/(const PadicScalar& o) const {
    if (o.kind_ != Kind::unit) throw std::domain_error("PadicScalar: division by (indistinguishable-from-)zero");
    if (kind_ == Kind::exact_zero) return *this;
    if (kind_ == Kind::eps) return eps(p_, val_ - o.val_);
    return *this * o.inverse();
}

PadicScalar PadicScalar::pow(long e) const {
    if (e == 0) return one(p_, kind_ == Kind::unit ? prec_ : (prec_ > 0 ? prec_ : 1));
    PadicScalar base = e < 0 ? inverse() : *this;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    if (base.kind_ == Kind::exact_zero) return base;
    if (base.kind_ == Kind::eps) return eps(p_, base.val_ * static_cast<long>(n));
    Int mod = pow_int(p_, static_cast<unsigned long>(base.prec_));
    Int u;
    mpz_powm_ui(u.get_mpz_t(), base.unit_.get_mpz_t(), n, mod.get_mpz_t());
    return PadicScalar(p_, Kind::unit, base.val_ * static_cast<long>(n), std::move(u), base.prec_);
}

PadicScalar PadicScalar::cap_abs_prec(long A) const {
    if (abs_prec() <= A) return *this;
    if (kind_ == Kind::exact_zero) return eps(p_, A);
    if (kind_ == Kind::eps) return eps(p_, A);
    if (A <= val_) return eps(p_, A);
    Int mod = pow_int(p_, static_cast<unsigned long>(A - val_));
    return PadicScalar(p_, Kind::unit, val_, unit_ % mod, A - val_);
}

long PadicScalar::diff_val(const PadicScalar& o) const {
    PadicScalar d = *this - o;
    return d.kind_ == Kind::exact_zero ? LONG_MAX : d.val_;
}

std::string PadicScalar::str() const {
    std::ostringstream os;
    if (kind_ == Kind::exact_zero) {
        os << "0";
    } else if (kind_ == Kind::eps) {
        os << "O(" << p_ << "^" << val_ << ")";
    } else {
        os << unit_.get_str();
        if (val_ != 0) os << "*" << p_ << "^" << val_;
        os << " + O(" << p_ << "^" << val_ + prec_ << ")";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const PadicScalar& x) { return os << x.str(); }

PadicScalar teichmuller(long a, long p, long prec) {
    long r = a % p;
    if (r < 0) r += p;
    if (r == 0) throw std::domain_error("teichmuller: argument divisible by p");
    // a^(p^N) is the fixed point of x -> x^p to N digits
    Int mod = pow_int(p, static_cast<unsigned long>(prec));
    Int expn = pow_int(p, static_cast<unsigned long>(prec));
    Int u;
    Int base(r);
    mpz_powm(u.get_mpz_t(), base.get_mpz_t(), expn.get_mpz_t(), mod.get_mpz_t());
    return PadicScalar::make_unit(p, 0, std::move(u), prec);
}

PadicScalar padic_log_1unit(const PadicScalar& x, long prec) {
    long p = x.prime();
    PadicScalar one = PadicScalar::one(p, prec);
    PadicScalar z = x - one;
    if (!z.is_zeroish() && z.val() < 1) throw std::domain_error("padic_log_1unit: not a 1-unit");
    if (z.is_zeroish()) return PadicScalar::eps(p, z.abs_prec());
    // sum (-1)^(n+1) z^n / n, terms have valuation >= n*v(z) - v_p(n)
    PadicScalar acc = PadicScalar::zero(p);
    PadicScalar zn = one;
    long vz = z.val();
    for (long n = 1;; ++n) {
        zn = zn * z;
        long vn = valuation_int(Int(n), p);
        if (n * vz - vn >= prec + 2 && n > 4) break;
        PadicScalar term = zn / PadicScalar::from_int(p, n, prec + 4);
        acc = (n % 2 == 1) ? acc + term : acc - term;
    }
    return acc.cap_abs_prec(prec);
}

} // namespace iwasym
