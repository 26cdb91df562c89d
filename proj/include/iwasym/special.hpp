#ifndef IWASYM_SPECIAL_HPP
#define IWASYM_SPECIAL_HPP

#include <iwasym/iwasawa.hpp>

namespace iwasym {

struct LogBuildInfo {
    long stabilization_index = 0;  // largest cyclotomic level whose factor was not yet 1
    long factors_used = 0;
};

// log^+_b (sign=+1) / log^-_b (sign=-1): truncated products of
// Phi_{p^(2n)}(u^{-a} gamma0)/p (resp. odd levels), a = a_start..a_start+b-1.
// The displayed normalization is a_start = 1; the appendix determinant
// identity lives at a_start = 0 (one twist over).  Factors are multiplied
// until they are 1 mod (p^N, T^M); failing that by n_max is a convergence
// error carrying the measured residual.
IwasawaElement pollack_log(int sign, long b, const AlgebraConfig& cfg, long a_start = 1,
                           long n_max = 64, LogBuildInfo* info = nullptr);

// the single factor Phi_{p^t}(u^{-a} gamma0) / p
IwasawaElement pollack_log_factor(long t, long a, const AlgebraConfig& cfg);

// log_p(chi(gamma0)^{-j} gamma0) = -j log_p(u) + log(1+T)
IwasawaElement padic_log_gamma0(long j, const AlgebraConfig& cfg);

struct ZeroVerdict {
    enum class Kind { zero_at_precision, nonzero, indeterminate } kind;
    long floor = 0;          // the working-precision floor used for the decision
    long value_val = 0;      // measured valuation floor of the value
    std::string value;
};

ZeroVerdict verify_zero(const IwasawaElement& elt, const PadicCharacter& lam, long ring_level = -1);

struct DetIdentityReport {
    bool pass = false;
    long residual_val = 0;   // min valuation of LHS - RHS over the compared window
    long compared_at = 0;    // p-precision of the comparison (N - slack)
    long window = 0;         // T-window compared
    long slack = 0;
};

// Pi_{j=0}^{k-2} log_p(u^{-j} gamma0) = [log^+ log^-]_(a=0..k-2) * Pi (u^{-j} gamma0 - 1),
// checked coefficientwise.  The displayed log^{+-}_{k-1} (a = 1..k-1) enter
// through one twist, matching the footnote normalization.
DetIdentityReport det_identity_check(long k, const AlgebraConfig& cfg, long slack = 4);

// Appendix elements l^+_{f,a}, l^-_{f,a}
IwasawaElement little_l(long k, int eps_p, long a, int sign, const AlgebraConfig& cfg);

struct MembershipCondition {
    std::string what;
    int status;  // 1 pass, 0 fail, -1 indeterminate
};

struct MembershipReport {
    bool accepted = false;
    bool central_relation_degenerate = false;  // eps_p = -1, k even: coefficient vanishes at j = k/2-1
    std::vector<MembershipCondition> conditions;
};

// Image of the double Coleman map: (eps_p^{-1} p^{1+j-k} + p^{-j-1}) chi^j(F)
// = (1-p^{-1}) chi^j(G) for 0 <= j <= k-2, and theta chi^j(F) = 0 for every
// theta of conductor exactly p (a finite, fully checked set).
MembershipReport image_membership(const IwasawaElement& F, const IwasawaElement& G, long k,
                                  int eps_p, long digits = -1);

} // namespace iwasym

#endif
