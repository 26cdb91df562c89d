#ifndef IWASYM_SYMPOWER_HPP
#define IWASYM_SYMPOWER_HPP

#include <iwasym/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace iwasym {

// alpha choice for odd m: a root of x^2 + eps(p) p^(k-1).  When eps(p) = -1
// and k is odd the real choices +-p^((k-1)/2) are exact; otherwise the token
// stays symbolic (known square and valuation, no numeric value).
enum class AlphaChoice { plus_real, minus_real, nonreal };

struct SymPowerContext {
    long p = 5;
    long k = 2;
    long m = 2;
    int eps_p = -1;
    std::optional<AlphaChoice> alpha;

    long r = 0, r_tilde = 0;
    std::vector<long> weights;  // k_i = (m-2i)(k-1)+1
    bool hypothesis = false;    // (p+1) does not divide (m-2i)(k-1) for any i

    bool alpha_is_real() const { return m % 2 == 0 || (k % 2 == 1 && eps_p == -1); }
    // ord_p(alpha_{i,+-}) = (r-i)(k-1) for m even, (k-1)/2 + (r-i)(k-1) for m odd
    Rat alpha_valuation(long i) const;
};

SymPowerContext build_context(long p, long k, long m, int eps_p,
                              std::optional<AlphaChoice> alpha = std::nullopt);

// Hodge / Newton polygons as exact vertex lists
struct PolygonDescriptor {
    std::vector<std::pair<long, Rat>> vertices;  // x strictly increasing, slopes nondecreasing
    // value at integer x by linear interpolation between vertices
    Rat at(long x) const;
};

std::pair<long, long> d_pm(const SymPowerContext& ctx);
PolygonDescriptor hodge_polygon(const SymPowerContext& ctx);
// independent oracle: cumulative sums of the Hodge slopes -(r-c)(k-1)
PolygonDescriptor hodge_polygon_cumsum(const SymPowerContext& ctx);
PolygonDescriptor newton_polygon(const SymPowerContext& ctx);

struct FrobeniusEigenvalue {
    int sign;        // +-1
    bool has_alpha;  // multiplied by the alpha token (m odd)
    Rat valuation;   // p-adic valuation
};
std::vector<FrobeniusEigenvalue> frobenius_eigenvalues(const SymPowerContext& ctx);

struct FiltrationJump {
    long degree;  // j(k-1)
    std::string generator;
};
std::vector<FiltrationJump> filtration_jumps(const SymPowerContext& ctx);

struct HasseInvariant {
    Rat closed_form;  // (k-1) d+ d- / 2
    Rat polygon_gap;  // max(P_N(d+-) - P_H(d+-))
    bool consistent() const { return closed_form == polygon_gap; }
};
HasseInvariant hasse_invariant(const SymPowerContext& ctx);

// critical twists: theta_parity = theta(-1)
bool is_critical(const SymPowerContext& ctx, int theta_parity, long j);

} // namespace iwasym

#endif
