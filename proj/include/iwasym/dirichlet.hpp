#ifndef IWASYM_DIRICHLET_HPP
#define IWASYM_DIRICHLET_HPP

#include <iwasym/iwasawa.hpp>

namespace iwasym {

// Rational-valued Dirichlet character (trivial or quadratic), given by a
// primitive value table on (Z/f)^x.  Every eta the symmetric-power artifact
// feeds into Kubota-Leopoldt is of this shape; wild p-power twists are
// handled separately as PadicCharacter data.
class DirichletCharacter {
public:
    // trivial character (modulus 1)
    static DirichletCharacter trivial();
    // quadratic character attached to a fundamental discriminant d (Kronecker symbol)
    static DirichletCharacter quadratic(long d);

    long modulus() const { return f_; }
    long conductor() const { return f_; }
    bool is_trivial() const { return f_ == 1; }
    // eta(n) in {-1, 0, +1}
    int value(const Int& n) const;
    int value(long n) const { return value(Int(n)); }
    int parity() const { return value(-1); }  // eta(-1)
    bool is_even() const { return parity() == 1; }
    DirichletCharacter inverted() const { return *this; }  // real-valued

    // discriminant label for reports (0 for trivial)
    long label() const { return d_; }

private:
    DirichletCharacter(long f, long d) : f_(f), d_(d) {}
    long f_;
    long d_;
};

// Generalized Bernoulli number B_{n,chi} = f^{n-1} sum_{a=1}^{f} chi(a) B_n(a/f),
// exact rational arithmetic.
Rat gen_bernoulli(unsigned long n, const DirichletCharacter& chi);

// L(chi, j) for j <= 0: -B_{1-j,chi}/(1-j).
Rat dirichlet_L_nonpos(const DirichletCharacter& chi, long j);

// The same special value for the product character eta * theta^{-1} with theta
// a p-power-conductor PadicCharacter, computed p-adically in the extension
// ring that holds theta's values.  This is the oracle the Kubota-Leopoldt
// interpolation checks run against at wild and tame twisted points.
CyclotomicScalar dirichlet_L_nonpos_padic(const DirichletCharacter& eta,
                                          const PadicCharacter& theta, long j,
                                          const AlgebraConfig& cfg, long ring_level);

// theta(a) for an integer a (0 if gcd(a, p) > 1), as a unit of the extension
// ring: omega(a)^b * zeta^(sel * t(a)) with t the Gamma-coordinate of <a>.
CyclotomicScalar theta_value(const PadicCharacter& theta, const Int& a,
                             const AlgebraConfig& cfg, long ring_level);

// Discrete Gamma-coordinate: the exponent t with <a> = u^t in (1+pZ_p)/(1+p^c Z_p);
// brute force over the cyclic group, exact.
long gamma_coordinate(const Int& a, long p, long c, const Int& u);

} // namespace iwasym

#endif
