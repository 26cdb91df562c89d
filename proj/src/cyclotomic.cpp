#include <iwasym/cyclotomic.hpp>

#include <sstream>

namespace iwasym {

long CyclotomicScalar::degree_of(long p, long level) {
    if (level < 1) throw std::invalid_argument("CyclotomicScalar: level must be >= 1");
    long d = p - 1;
    for (long i = 1; i < level; ++i) d *= p;
    return d;
}

CyclotomicScalar CyclotomicScalar::zero(long p, long level) {
    std::vector<PadicScalar> c(static_cast<size_t>(degree_of(p, level)), PadicScalar::zero(p));
    return CyclotomicScalar(p, level, std::move(c));
}

CyclotomicScalar CyclotomicScalar::one(long p, long level, long prec) {
    CyclotomicScalar r = zero(p, level);
    r.c_[0] = PadicScalar::one(p, prec);
    return r;
}

CyclotomicScalar CyclotomicScalar::from_scalar(long level, const PadicScalar& s) {
    CyclotomicScalar r = zero(s.prime(), level);
    r.c_[0] = s;
    return r;
}

CyclotomicScalar CyclotomicScalar::zeta(long p, long level, long prec) {
    return zeta_power(p, level, 1, prec);
}

CyclotomicScalar CyclotomicScalar::zeta_power(long p, long level, long e, long prec) {
    long pc = degree_of(p, level) / (p - 1) * p;  // p^level
    long d = degree_of(p, level);
    e %= pc;
    if (e < 0) e += pc;
    CyclotomicScalar r = zero(p, level);
    PadicScalar u = PadicScalar::one(p, prec);
    if (e < d) {
        r.c_[static_cast<size_t>(e)] = u;
    } else {
        // X^e = -sum_{i=0}^{p-2} X^(i*p^(level-1) + s),  e = (p-1)p^(level-1) + s
        long step = d / (p - 1);
        long s = e - d;
        for (long i = 0; i <= p - 2; ++i) r.c_[static_cast<size_t>(i * step + s)] = -u;
    }
    return r;
}

void CyclotomicScalar::require_same_ring(const CyclotomicScalar& o) const {
    if (p_ != o.p_ || level_ != o.level_)
        throw std::invalid_argument("CyclotomicScalar: ring mismatch");
}

CyclotomicScalar CyclotomicScalar::operator-() const {
    CyclotomicScalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CyclotomicScalar CyclotomicScalar::operator+(const CyclotomicScalar& o) const {
    require_same_ring(o);
    CyclotomicScalar r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

CyclotomicScalar CyclotomicScalar::operator-(const CyclotomicScalar& o) const {
    require_same_ring(o);
    CyclotomicScalar r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

CyclotomicScalar CyclotomicScalar::operator*(const CyclotomicScalar& o) const {
    require_same_ring(o);
    long d = degree();
    long step = d / (p_ - 1);  // p^(level-1)
    long pc = step * p_;       // p^level
    // accumulate into exponent buffer of size p^level, exponents already
    // folded by X^(p^level) = 1
    std::vector<PadicScalar> buf(static_cast<size_t>(pc), PadicScalar::zero(p_));
    for (long i = 0; i < d; ++i) {
        if (c_[static_cast<size_t>(i)].is_exact_zero()) continue;
        for (long j = 0; j < d; ++j) {
            if (o.c_[static_cast<size_t>(j)].is_exact_zero()) continue;
            long e = (i + j) % pc;
            buf[static_cast<size_t>(e)] = buf[static_cast<size_t>(e)] + c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
        }
    }
    // fold the top block: X^(d+s) = -sum_i X^(i*step+s) for 0 <= s < step
    CyclotomicScalar r = zero(p_, level_);
    for (long e = 0; e < d; ++e) r.c_[static_cast<size_t>(e)] = buf[static_cast<size_t>(e)];
    for (long e = d; e < pc; ++e) {
        const PadicScalar& x = buf[static_cast<size_t>(e)];
        if (x.is_exact_zero()) continue;
        long s = e - d;
        for (long i = 0; i <= p_ - 2; ++i) {
            size_t k = static_cast<size_t>(i * step + s);
            r.c_[k] = r.c_[k] - x;
        }
    }
    return r;
}

CyclotomicScalar CyclotomicScalar::operator*(const PadicScalar& s) const {
    CyclotomicScalar r = *this;
    for (auto& x : r.c_) x = x * s;
    return r;
}

CyclotomicScalar CyclotomicScalar::operator/(const PadicScalar& s) const {
    CyclotomicScalar r = *this;
    for (auto& x : r.c_) x = x / s;
    return r;
}

CyclotomicScalar CyclotomicScalar::pow(long e) const {
    if (e < 0) throw std::domain_error("CyclotomicScalar::pow: negative exponent");
    long prec = 0;
    for (const auto& x : c_) prec = std::max(prec, x.prec());
    if (prec == 0) prec = 64;
    CyclotomicScalar result = one(p_, level_, prec);
    CyclotomicScalar base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

CyclotomicScalar CyclotomicScalar::embed(long level) const {
    if (level < level_) throw std::invalid_argument("CyclotomicScalar::embed: can only embed upward");
    if (level == level_) return *this;
    long shift = 1;
    for (long i = level_; i < level; ++i) shift *= p_;  // p^(level-level_)
    CyclotomicScalar r = zero(p_, level);
    long d_new = r.degree();
    long step = d_new / (p_ - 1);
    long pc = step * p_;
    for (long i = 0; i < degree(); ++i) {
        const PadicScalar& x = c_[static_cast<size_t>(i)];
        if (x.is_exact_zero()) continue;
        long e = (i * shift) % pc;
        if (e < d_new) {
            r.c_[static_cast<size_t>(e)] = r.c_[static_cast<size_t>(e)] + x;
        } else {
            long s = e - d_new;
            for (long t = 0; t <= p_ - 2; ++t) {
                size_t k = static_cast<size_t>(t * step + s);
                r.c_[k] = r.c_[k] - x;
            }
        }
    }
    return r;
}

CyclotomicScalar CyclotomicScalar::cap_abs_prec(long A) const {
    CyclotomicScalar r = *this;
    for (auto& x : r.c_) x = x.cap_abs_prec(A);
    return r;
}

long CyclotomicScalar::floor_val() const {
    long v = LONG_MAX;
    for (const auto& x : c_) {
        long xv = x.val();
        if (xv < v) v = xv;
    }
    return v;
}

long CyclotomicScalar::abs_prec() const {
    long a = LONG_MAX;
    for (const auto& x : c_) {
        long xa = x.abs_prec();
        if (xa < a) a = xa;
    }
    return a;
}

bool CyclotomicScalar::is_zeroish() const {
    for (const auto& x : c_)
        if (!x.is_zeroish()) return false;
    return true;
}

bool CyclotomicScalar::zero_at(long A) const {
    for (const auto& x : c_)
        if (x.val() < A) return false;
    return true;
}

bool CyclotomicScalar::equal_at(const CyclotomicScalar& o, long A) const {
    return (*this - o).zero_at(A);
}

long CyclotomicScalar::diff_floor_val(const CyclotomicScalar& o) const {
    return (*this - o).floor_val();
}

std::string CyclotomicScalar::str() const {
    std::ostringstream os;
    os << "[level " << level_ << "]";
    bool any = false;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_exact_zero()) continue;
        os << (any ? " + " : " ") << "(" << c_[i].str() << ")";
        if (i) os << "*z^" << i;
        any = true;
    }
    if (!any) os << " 0";
    return os.str();
}

} // namespace iwasym
