#ifndef IWASYM_STICKELBERGER_HPP
#define IWASYM_STICKELBERGER_HPP

#include <iwasym/dirichlet.hpp>

namespace iwasym {

// Finite-level element of Q[G_n], G_n = Gal(Q_p(mu_{p^n})/Q_p) = (Z/p^n)^x,
// with exact rational coefficients (denominators divide f * p^n up to the
// small unit 2(p-1) introduced by projections).
class GroupAlgebraElement {
public:
    GroupAlgebraElement(long p, long level);

    long prime() const { return p_; }
    long level() const { return level_; }
    long group_modulus() const { return pn_; }

    const Rat& at(long a) const { return coeff_[static_cast<size_t>(a % pn_)]; }
    Rat& at(long a) { return coeff_[static_cast<size_t>(a % pn_)]; }

    GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator*(const Rat& s) const;
    // left multiplication by the group element sigma_g
    GroupAlgebraElement times_group(const Int& g) const;
    // natural restriction Q[G_n] -> Q[G_m], m < n (sum over fibers)
    GroupAlgebraElement restrict_to(long smaller_level) const;
    // max denominator p-valuation over the support (diagnostic)
    long max_den_val() const;

    // omega^b-branch as a T-polynomial: sum_a c_a omega(a)^b (1+T)^(t(a)),
    // coefficients of T^m for m < cfg.M; requires cfg.M <= p^(level-1)
    std::vector<PadicScalar> branch_series(long b, const AlgebraConfig& cfg) const;

private:
    long p_, level_, pn_;
    std::vector<Rat> coeff_;
};

// The level-n twisted Stickelberger element
//   -(1/(f p^n)) sum_{(A, fp)=1, A < f p^n} A eta^{-1}(A) sigma_A^{-1}
// restricted along Gal -> G_n.  OpenMP kernel plus serial reference twin.
GroupAlgebraElement stickelberger(const DirichletCharacter& eta, long level, const AlgebraConfig& cfg);
GroupAlgebraElement stickelberger_serial(const DirichletCharacter& eta, long level, const AlgebraConfig& cfg);

struct KLOptions {
    long level = 6;          // Stickelberger level n (construction modulus f p^n)
    bool certify = true;     // also build at level-1 and cap coefficients by agreement
};

struct KLInfo {
    long level = 0;
    long measured_agreement = 0;  // min coefficient valuation of the two-level difference
    long certified_digits = 0;    // min(N, measured)
};

// The Kubota-Leopoldt element L_eta.  For eta trivial the result carries the
// declared pole divisor (gamma0-1)(gamma0-chi(gamma0)) and stores the
// numerator.  Branch assembly follows the theorem's proof: minus-parity
// branches are Stickelberger limits; plus-parity branches are the
// gamma0 -> chi(gamma0)/gamma0 reflections of the appropriate twist family.
IwasawaElement kl_element(const DirichletCharacter& eta, const AlgebraConfig& cfg,
                          const KLOptions& opt = {}, KLInfo* info = nullptr);

struct InterpolationCheck {
    bool pass = false;
    long agree_digits = 0;     // certified digits of agreement (min of compared precision)
    long compare_digits = 0;   // digits the comparison was run at
    Rat prefactor;             // (p^j / eta(p))^n, reported separately
    Rat inv_omega;             // its inverse (the algebraic 1/Omega on this side)
    Rat euler;                 // 1 - (eta theta^{-1})(p) p^{-j}
    std::string lhs, rhs;
};

// Check theta*chi^j(L_eta) = e_eta(theta, j) L(eta theta^{-1}, j) / Omega on the
// algebraic side (j <= 0; parity hypothesis enforced).  Oracle: generalized
// Bernoulli sums, exact over Q for tame-trivial theta and p-adic in the
// extension ring otherwise.
InterpolationCheck verify_interpolation(const IwasawaElement& L, const DirichletCharacter& eta,
                                        const PadicCharacter& theta, long j,
                                        long compare_digits = -1, long ring_level = -1);

} // namespace iwasym

#endif
