#ifndef IWASYM_RATIONAL_HPP
#define IWASYM_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <vector>

namespace iwasym {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(n, d) does not canonicalize; this does
inline Rat make_rat(const Int& n, const Int& d) {
    Rat q(n, d);
    q.canonicalize();
    return q;
}
inline Rat make_rat(long n, long d) { return make_rat(Int(n), Int(d)); }

inline Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Int pow_int(long b, unsigned long e) { return pow_int(Int(b), e); }

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// p-adic valuation of a nonzero integer
inline long valuation_int(Int x, long p) {
    if (x == 0) throw std::invalid_argument("valuation_int: zero");
    long v = 0;
    Int q, r;
    while (true) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
        if (r != 0) break;
        x = q;
        ++v;
    }
    return v;
}

inline long valuation_rat(const Rat& q, long p) {
    if (q == 0) throw std::invalid_argument("valuation_rat: zero");
    return valuation_int(q.get_num(), p) - valuation_int(q.get_den(), p);
}

inline Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::domain_error("mod_inverse: not invertible");
    return r;
}

// Bernoulli numbers B_0, B_1=-1/2, ... via the classical recurrence, cached.
const Rat& bernoulli_number(unsigned long n);

// Coefficients of the Bernoulli polynomial B_n(x) = sum_i binom(n,i) B_i x^{n-i},
// returned as c[d] = coefficient of x^d.
std::vector<Rat> bernoulli_polynomial(unsigned long n);

} // namespace iwasym

#endif
