#ifndef IWASYM_LFACTORY_HPP
#define IWASYM_LFACTORY_HPP

#include <iwasym/dirichlet.hpp>
#include <iwasym/special.hpp>
#include <iwasym/sympower.hpp>

#include <map>

namespace iwasym {

// ------------------------------------------------------------------ signs

using SignVector = std::vector<int>;  // entries +-1, length r_tilde

std::vector<SignVector> enumerate_signs(long r_tilde);
long plus_count(const SignVector& s);
long minus_count(const SignVector& s);
std::string sign_str(const SignVector& s);

class SignMatrix {
public:
    static SignMatrix build(long r_tilde);
    long dim() const { return static_cast<long>(a_.size()); }
    int at(long i, long j) const { return a_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    bool is_symmetric() const;
    // A^2 = 2^r I, brute force; OpenMP kernel with serial reference twin
    bool square_is_identity_multiple() const;
    bool square_is_identity_multiple_serial() const;
    // #{s : a_{s,t} = a_{s,u}} = 2^(r-1) for all t != u
    bool counting_identity() const;

private:
    long r_tilde_ = 0;
    std::vector<std::vector<int>> a_;
};

// --------------------------------------------------------- Q(alpha) values

// x + y*alpha with alpha^2 = alpha_sq in Q; for even m everything stays in
// the y = 0 slice and alpha_sq is just along for the ride.
struct QAlpha {
    Rat x, y;
    Rat alpha_sq;

    static QAlpha of(const Rat& r, const Rat& asq) { return {r, Rat(0), asq}; }
    static QAlpha alpha(const Rat& asq) { return {Rat(0), Rat(1), asq}; }
    bool is_zero() const { return x == 0 && y == 0; }
    QAlpha operator+(const QAlpha& o) const { return {x + o.x, y + o.y, alpha_sq}; }
    QAlpha operator-(const QAlpha& o) const { return {x - o.x, y - o.y, alpha_sq}; }
    QAlpha operator*(const QAlpha& o) const {
        return {x * o.x + y * o.y * alpha_sq, x * o.y + y * o.x, alpha_sq};
    }
    QAlpha inverse() const;
    QAlpha operator/(const QAlpha& o) const { return *this * o.inverse(); }
    QAlpha pow(long e) const;
    bool operator==(const QAlpha& o) const { return x == o.x && y == o.y; }
    std::string str() const;
};

// ------------------------------------------------------------- e-factors

struct EFactor {
    bool exact = true;        // value in Q(alpha)?
    QAlpha q{Rat(0), Rat(0), Rat(0)};
    // p-adic pair num/den when a log^{+-} evaluation enters the denominator
    CyclotomicScalar num, den;
    long zero_factors = 0;    // tally of literal zero factors
    std::string desc;

    static EFactor one(const Rat& alpha_sq);
    EFactor times(const EFactor& o) const;
    bool vanishes() const { return zero_factors > 0; }
};

// Pollack log elements for one AlgebraConfig, built once per (sign, b)
class LogCache {
public:
    explicit LogCache(const AlgebraConfig& cfg) : cfg_(cfg) {}
    const IwasawaElement& get(int sign, long b);
    const AlgebraConfig& config() const { return cfg_; }

private:
    AlgebraConfig cfg_;
    std::map<std::pair<int, long>, IwasawaElement> cache_;
};

// Amice-Velu interpolation factor e_{f,alpha}(theta, j) for a form of weight
// kprime with alpha given as a QAlpha (abar = -alpha); 1 <= j <= kprime-1.
EFactor e_av(const QAlpha& alpha, long kprime, long p, const PadicCharacter& theta, long j);

// Pollack plus/minus factor e^{+-}_f(theta, j), weight kprime, with the
// theta chi^j(log^{+-}_{kprime-1}) denominator evaluated from the cache.
EFactor e_pm(int sign, long kprime, int eps_p, const PadicCharacter& theta, long j, LogCache& logs);

// Kubota-Leopoldt factor e_eta(theta, j), both parity arms, exact.
EFactor e_kl(const DirichletCharacter& eta, long p, const PadicCharacter& theta, long j);
// same, from the only data the factor needs: eta(-1) and eta(p)
EFactor e_kl_sign(int eta_parity, int eta_at_p, long p, const PadicCharacter& theta, long j);

// s-criticality gate of the mixed p-adic L-function
bool is_s_critical(const SymPowerContext& ctx, const SignVector& s, const PadicCharacter& theta, long j);

// e^s_{V_m}(theta, j): product of e^{s_i}_{f_i}(theta, j+(r-i)(k-1)) and the
// Dirichlet factor for even m.  Throws std::domain_error naming the violated
// gate when (theta, j) is not s-critical.
EFactor e_mixed(const SymPowerContext& ctx, const SignVector& s, const PadicCharacter& theta, long j,
                LogCache& logs);

// admissible interpolation factor: product form and closed form (which must
// agree exactly).  The closed form is the theorem's display with the dropped
// power p^(n * sum_i (j + (r-i)(k-1))) restored.
std::pair<EFactor, EFactor> e_admissible(const SymPowerContext& ctx, const SignVector& s,
                                         const PadicCharacter& theta, long j);

// the alpha token alpha_{i,+-} as a QAlpha: numeric whenever the chosen root
// is an exact power of p (m even, or odd k with eps(p) = -1), else symbolic
QAlpha alpha_token(const SymPowerContext& ctx, long i, int sign);
Rat alpha_square(const SymPowerContext& ctx);  // -eps(p) p^(k-1)

// alpha_{i,s} = sign * p^p_exponent * (alpha if symbolic), for series work
struct AlphaToken {
    int sign = 1;
    long p_exponent = 0;
    bool symbolic = false;
    Rat alpha_sq;
};
AlphaToken alpha_series_token(const SymPowerContext& ctx, long i, int sign);

// --------------------------------------------------------- series assembly

// x + y*alpha with IwasawaElement components
struct AlphaSeries {
    IwasawaElement x, y;
    Rat alpha_sq;

    static AlphaSeries plain(const IwasawaElement& e, const Rat& asq);
    AlphaSeries operator+(const AlphaSeries& o) const;
    AlphaSeries operator-(const AlphaSeries& o) const;
    AlphaSeries operator*(const AlphaSeries& o) const;
    AlphaSeries twist(long n) const;
    long diff_val(const AlphaSeries& o) const;
};

// one component's admissible-type pair (L_{f_i,+}, L_{f_i,-})
struct ComponentPair {
    AlphaSeries plus, minus;
};

enum class Provenance { synthetic, kubota_leopoldt };

// Inputs for the assembly of L^s_{V_m} and L_{V_m,s}
struct ComponentLSet {
    std::vector<std::pair<IwasawaElement, IwasawaElement>> lambda_pairs;  // (L^+_{f_i}, L^-_{f_i})
    std::optional<IwasawaElement> dirichlet;  // L_{eps_K^r} for even m
    Provenance provenance = Provenance::synthetic;
};

// L_{f,alpha} = L^+ log^+_{kprime-1} + alpha L^- log^-_{kprime-1}
AlphaSeries pollack_combine(const IwasawaElement& Lplus, const IwasawaElement& Lminus,
                            const AlphaToken& alpha, long kprime, LogCache& logs);

struct SplitResult {
    IwasawaElement plus, minus;
};

// exact inverse of pollack_combine on the pair (alpha, -alpha); the token is
// the one used for L_a
SplitResult pollack_split(const AlphaSeries& L_a, const AlphaSeries& L_abar,
                          const AlphaToken& alpha, long kprime, LogCache& logs);

// division by a series with unit constant term, branchwise
IwasawaElement divide_by_unit_series(const IwasawaElement& num, const IwasawaElement& den);

// mixed assembly: product of Tw_{(r-i)(k-1)}(L^{s_i}_{f_i}) times the
// Dirichlet piece for even m; pole divisor tags propagate (4 | m)
IwasawaElement assemble_mixed(const SymPowerContext& ctx, const ComponentLSet& comps,
                              const SignVector& s, LogCache& logs);

// admissible assembly from lambda-type inputs through pollack_combine
AlphaSeries assemble_admissible(const SymPowerContext& ctx, const ComponentLSet& comps,
                                const SignVector& s, LogCache& logs);

// ell^s = prod Tw_{(r-i)(k-1)}(ell_i^{s_i}), ell_i^+ = log^+_{k_i-1},
// ell_i^- = alpha_{i,+} log^-_{k_i-1}
AlphaSeries ell_s(const SymPowerContext& ctx, const SignVector& s, LogCache& logs);

struct DecompositionReport {
    bool pass = false;
    long threshold = 0;  // p-precision of the residual requirement
    long window = 0;     // T-window
    // residual valuations: one per s (expansion) and one per t (inversion)
    std::vector<long> expansion_residual;
    std::vector<long> inversion_residual;
};

// both directions of the decomposition: 2^r ell^s L^s = sum_t a_{s,t} L_{V,t}
// and L_{V,t} = sum_s a_{s,t} ell^s L^s
DecompositionReport decomposition_check(const SymPowerContext& ctx, const ComponentLSet& comps,
                                        LogCache& logs, long slack = 6, long window = -1);

} // namespace iwasym

#endif
