#include <iwasym/dirichlet.hpp>

namespace iwasym {

DirichletCharacter DirichletCharacter::trivial() { return DirichletCharacter(1, 0); }

DirichletCharacter DirichletCharacter::quadratic(long d) {
    if (d == 0 || d == 1) return trivial();
    // require a fundamental discriminant so the table is primitive
    long abs_d = d < 0 ? -d : d;
    long m4 = ((d % 4) + 4) % 4;
    bool ok = (m4 == 1) || (m4 == 0 && (((d / 4) % 4 + 4) % 4 == 2 || ((d / 4) % 4 + 4) % 4 == 3));
    if (!ok) throw std::invalid_argument("DirichletCharacter::quadratic: not a fundamental discriminant");
    return DirichletCharacter(abs_d, d);
}

int DirichletCharacter::value(const Int& n) const {
    if (f_ == 1) return 1;
    Int d(d_);
    return mpz_kronecker(d.get_mpz_t(), n.get_mpz_t());
}

Rat gen_bernoulli(unsigned long n, const DirichletCharacter& chi) {
    long f = chi.modulus();
    std::vector<Rat> Bn = bernoulli_polynomial(n);
    Rat sum(0);
    for (long a = 1; a <= f; ++a) {
        int v = chi.value(a);
        if (v == 0) continue;
        // B_n(a/f)
        Rat x = make_rat(a, f);
        Rat bx(0);
        for (long d = static_cast<long>(n); d >= 0; --d) bx = bx * x + Bn[static_cast<size_t>(d)];
        sum += Rat(v) * bx;
    }
    Rat scale(1);
    if (n >= 1) {
        Int fn = pow_int(f, n - 1);
        scale = Rat(fn);
    } else {
        scale = Rat(1, f);
    }
    return scale * sum;
}

Rat dirichlet_L_nonpos(const DirichletCharacter& chi, long j) {
    if (j > 0) throw std::domain_error("dirichlet_L_nonpos: only j <= 0");
    unsigned long n = static_cast<unsigned long>(1 - j);
    return -gen_bernoulli(n, chi) / Rat(1 - j);
}

long gamma_coordinate(const Int& a, long p, long c, const Int& u) {
    Int pc = pow_int(p, static_cast<unsigned long>(c));
    Int amod = a % pc;
    if (amod < 0) amod += pc;
    if (amod % p == 0) throw std::domain_error("gamma_coordinate: a not a unit");
    // <a> = a / omega(a) mod p^c; omega via a^(p^(c)) within Z/p^c
    Int expn = pow_int(p, static_cast<unsigned long>(c + 2));
    Int w;
    mpz_powm(w.get_mpz_t(), amod.get_mpz_t(), expn.get_mpz_t(), pc.get_mpz_t());
    Int one_unit = amod * mod_inverse(w, pc) % pc;
    // brute-force dlog in the cyclic group (1+pZ)/(1+p^cZ) of order p^(c-1)
    long order = 1;
    for (long i = 1; i < c; ++i) order *= p;
    Int x(1);
    for (long t = 0; t < order; ++t) {
        if (x == one_unit) return t;
        x = x * u % pc;
    }
    throw std::logic_error("gamma_coordinate: dlog not found (u does not generate?)");
}

CyclotomicScalar theta_value(const PadicCharacter& theta, const Int& a,
                             const AlgebraConfig& cfg, long ring_level) {
    long p = cfg.p;
    long level = std::max<long>({ring_level, theta.min_ring_level(), 1});
    Int am = a % p;
    if (am < 0) am += p;
    if (am == 0) return CyclotomicScalar::zero(p, level);
    long tame = static_cast<long>(am.get_si());
    PadicScalar w = teichmuller(tame, p, cfg.N).pow(theta.tame_b);
    CyclotomicScalar r = CyclotomicScalar::from_scalar(level, w);
    if (theta.wild_c >= 2) {
        long t = gamma_coordinate(a, p, theta.wild_c, cfg.u);
        CyclotomicScalar z =
            CyclotomicScalar::zeta_power(p, theta.wild_c - 1, theta.wild_sel * t, cfg.N).embed(level);
        r = r * z;
    }
    return r;
}

CyclotomicScalar dirichlet_L_nonpos_padic(const DirichletCharacter& eta,
                                          const PadicCharacter& theta, long j,
                                          const AlgebraConfig& cfg, long ring_level) {
    if (j > 0) throw std::domain_error("dirichlet_L_nonpos_padic: only j <= 0");
    long p = cfg.p;
    long level = std::max<long>({ring_level, theta.min_ring_level(), 1});
    unsigned long n = static_cast<unsigned long>(1 - j);
    // modulus of eta * theta^{-1}: f * p^(conductor exponent of theta)
    long nexp = theta.conductor_exp(p);
    Int F = Int(eta.modulus()) * pow_int(p, static_cast<unsigned long>(nexp));
    std::vector<Rat> Bn = bernoulli_polynomial(n);
    PadicCharacter th_inv = theta.inverted();

    CyclotomicScalar sum = CyclotomicScalar::zero(p, level);
    long Fl = static_cast<long>(F.get_si());
    for (long a = 1; a <= Fl; ++a) {
        if (Int(a) % p == 0 && nexp > 0) continue;
        int ev = eta.value(a);
        if (ev == 0) continue;
        CyclotomicScalar tv = nexp > 0 ? theta_value(th_inv, Int(a), cfg, level)
                                       : CyclotomicScalar::one(p, level, cfg.N);
        if (tv.is_zeroish() && nexp > 0 && Int(a) % p == 0) continue;
        // B_n(a/F), exact rational, then mapped p-adically
        Rat x = make_rat(a, Fl);
        Rat bx(0);
        for (long d = static_cast<long>(n); d >= 0; --d) bx = bx * x + Bn[static_cast<size_t>(d)];
        Rat term = Rat(ev) * bx;
        sum = sum + tv * PadicScalar::from_rational(p, term, cfg.N + 8);
    }
    // scale by F^(n-1)
    Rat scale = n >= 1 ? Rat(pow_int(F, n - 1)) : Rat(1);
    CyclotomicScalar Bval = sum * PadicScalar::from_rational(p, scale, cfg.N + 8);
    // L = -B/(1-j)
    return -(Bval / PadicScalar::from_int(p, 1 - j, cfg.N + 8));
}

} // namespace iwasym
