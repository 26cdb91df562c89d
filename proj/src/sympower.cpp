#include <iwasym/sympower.hpp>

#include <sstream>

namespace iwasym {

Rat SymPowerContext::alpha_valuation(long i) const {
    Rat v((r - i) * (k - 1));
    if (m % 2 == 1) v += make_rat(k - 1, 2);
    return v;
}

SymPowerContext build_context(long p, long k, long m, int eps_p, std::optional<AlphaChoice> alpha) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("build_context: p must be odd");
    if (k < 2 || m < 2) throw std::invalid_argument("build_context: need k >= 2, m >= 2");
    if (eps_p != 1 && eps_p != -1) throw std::invalid_argument("build_context: eps(p) sign required");
    if (m % 2 == 1 && !alpha) throw std::invalid_argument("build_context: odd m requires an alpha choice");
    SymPowerContext ctx;
    ctx.p = p;
    ctx.k = k;
    ctx.m = m;
    ctx.eps_p = eps_p;
    ctx.alpha = alpha;
    ctx.r = m / 2;
    ctx.r_tilde = (m + 1) / 2;
    ctx.hypothesis = true;
    for (long i = 0; i < ctx.r_tilde; ++i) {
        ctx.weights.push_back((m - 2 * i) * (k - 1) + 1);
        if (((m - 2 * i) * (k - 1)) % (p + 1) == 0) ctx.hypothesis = false;
    }
    if (m % 2 == 1 && !ctx.alpha_is_real() &&
        (alpha == AlphaChoice::plus_real || alpha == AlphaChoice::minus_real))
        throw std::invalid_argument("build_context: real alpha needs eps(p) = -1 and odd k");
    return ctx;
}

Rat PolygonDescriptor::at(long x) const {
    for (size_t i = 0; i + 1 < vertices.size(); ++i) {
        if (x >= vertices[i].first && x <= vertices[i + 1].first) {
            long x0 = vertices[i].first, x1 = vertices[i + 1].first;
            return vertices[i].second +
                   (vertices[i + 1].second - vertices[i].second) * Rat(x - x0) / Rat(x1 - x0);
        }
    }
    throw std::out_of_range("PolygonDescriptor::at");
}

std::pair<long, long> d_pm(const SymPowerContext& ctx) {
    long r = ctx.r;
    long dplus = (ctx.m % 4 == 2) ? r : r + 1;
    long dminus = (ctx.m % 4 == 0) ? r : r + 1;
    return {dplus, dminus};
}

PolygonDescriptor hodge_polygon(const SymPowerContext& ctx) {
    PolygonDescriptor poly;
    poly.vertices.push_back({0, Rat(0)});
    for (long a = 0; a <= ctx.m; ++a)
        poly.vertices.push_back({a + 1, make_rat((ctx.k - 1) * (a + 1) * (a - 2 * ctx.r), 2)});
    return poly;
}

PolygonDescriptor hodge_polygon_cumsum(const SymPowerContext& ctx) {
    PolygonDescriptor poly;
    poly.vertices.push_back({0, Rat(0)});
    Rat acc(0);
    for (long c = 0; c <= ctx.m; ++c) {
        acc += Rat(-(ctx.r - c) * (ctx.k - 1));
        poly.vertices.push_back({c + 1, acc});
    }
    return poly;
}

PolygonDescriptor newton_polygon(const SymPowerContext& ctx) {
    PolygonDescriptor poly;
    poly.vertices.push_back({0, Rat(0)});
    if (ctx.m % 2 == 0) {
        poly.vertices.push_back({ctx.m + 1, Rat(0)});
    } else {
        poly.vertices.push_back({ctx.m + 1, make_rat((ctx.k - 1) * (ctx.m + 1), 2)});
    }
    return poly;
}

std::vector<FrobeniusEigenvalue> frobenius_eigenvalues(const SymPowerContext& ctx) {
    std::vector<FrobeniusEigenvalue> ev;
    if (ctx.m % 2 == 0) {
        auto [dp, dm] = d_pm(ctx);
        for (long i = 0; i < dp; ++i) ev.push_back({+1, false, Rat(0)});
        for (long i = 0; i < dm; ++i) ev.push_back({-1, false, Rat(0)});
    } else {
        Rat v = make_rat(ctx.k - 1, 2);
        for (long i = 0; i < ctx.r_tilde; ++i) {
            ev.push_back({+1, true, v});
            ev.push_back({-1, true, v});
        }
    }
    return ev;
}

std::vector<FiltrationJump> filtration_jumps(const SymPowerContext& ctx) {
    std::vector<FiltrationJump> out;
    for (long j = -ctx.r; j <= ctx.r_tilde; ++j) {
        if (ctx.m % 2 == 0 && j > ctx.r) continue;  // m even: j runs -r..r
        std::ostringstream os;
        if (ctx.m % 2 == 0) {
            if (j < 0)
                os << "v_" << ctx.r + j;
            else if (j == 0)
                os << "v";
            else
                os << "v_" << ctx.r_tilde - j << " + vbar_" << ctx.r_tilde - j;
        } else {
            if (j <= 0)
                os << "v_" << ctx.r + j;
            else
                os << "v_" << ctx.r_tilde - j << " + vbar_" << ctx.r_tilde - j;
        }
        out.push_back({j * (ctx.k - 1), os.str()});
    }
    return out;
}

HasseInvariant hasse_invariant(const SymPowerContext& ctx) {
    auto [dp, dm] = d_pm(ctx);
    HasseInvariant h;
    h.closed_form = make_rat((ctx.k - 1) * dp * dm, 2);
    PolygonDescriptor pn = newton_polygon(ctx);
    PolygonDescriptor ph = hodge_polygon(ctx);
    Rat g1 = pn.at(dp) - ph.at(dp);
    Rat g2 = pn.at(dm) - ph.at(dm);
    h.polygon_gap = g1 > g2 ? g1 : g2;
    return h;
}

bool is_critical(const SymPowerContext& ctx, int theta_parity, long j) {
    if (ctx.m % 2 == 1) return 1 <= j && j <= ctx.k - 1;
    if (j < -(ctx.k - 1) + 1 || j > ctx.k - 1) return false;
    int lam_parity = theta_parity * (j % 2 == 0 ? 1 : -1);
    int sgn = j >= 1 ? 1 : -1;
    int r_parity = ctx.r % 2 == 0 ? 1 : -1;
    return lam_parity == sgn * r_parity;
}

} // namespace iwasym
