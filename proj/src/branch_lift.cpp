#include "greenwalk/relation.hpp"

#include <sstream>

namespace greenwalk {

namespace {

Rat binom_rat(int n, int k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rat(b);
}

} // namespace

XiSeries extend_branch(const MPoly& rel, const XiSeries& seed, int order) {
    require(!rel.is_zero(), errc::invalid_argument, "extend_branch: zero relation");
    require(order >= 1, errc::invalid_argument, "extend_branch: order must be >= 1");
    if (seed.is_zero()) {
        // The zero branch: legal only if X divides the relation.
        require(rel.valuation(Var::X) >= 1, errc::branch_mismatch,
                "extend_branch: zero seed is not a root");
        return XiSeries(order);
    }
    require(seed.lowest_order() == 1, errc::degenerate_branch,
            "extend_branch: branch must have valuation 1");

    // Substitute X = b*u and divide by the common b power: F(u, b) with
    // F(u_0, 0) = 0 for the seed's leading coefficient u_0.
    MPoly fsub = rel.subs_x_times_b();
    fsub = fsub.shift_down(Var::B, fsub.valuation(Var::B));
    const int dx = fsub.degree(Var::X);
    require(dx >= 1, errc::invalid_argument, "extend_branch: relation does not involve X");
    const int uorder = order - 1;

    // Taylor coefficients around the current u: G_j = (1/j!) d^jF/du^j (u(b), b),
    // initialized at the constant u_0 and updated term by term as u grows.
    const XiPoly u0 = seed.coeff(1);
    std::vector<XiPoly> u0pow(dx + 1);
    u0pow[0] = XiPoly(1L);
    for (int i = 1; i <= dx; ++i) u0pow[i] = u0pow[i - 1] * u0;

    std::vector<XiSeries> g(dx + 1, XiSeries(uorder));
    for (int j = 0; j <= dx; ++j) {
        XiSeries acc(uorder);
        for (int i = j; i <= dx; ++i) {
            XiSeries slice = xiseries_from_mpoly(fsub.coeff_of(Var::X, i), uorder);
            acc += slice.scaled(u0pow[i - j] * binom_rat(i, j));
        }
        g[j] = std::move(acc);
    }

    require(g[0].coeff(0).is_zero(), errc::branch_mismatch,
            "extend_branch: seed leading coefficient is not a root of the relation");
    const XiPoly solvability = g[1].coeff(0);
    require(!solvability.is_zero(), errc::degenerate_branch,
            "extend_branch: vanishing linear solvability coefficient at order 0");

    XiSeries u(uorder);
    u.set_coeff(0, u0);
    for (int m = 1; m <= uorder; ++m) {
        const XiPoly& defect = g[0].coeff(m);
        XiPoly um;
        if (!defect.is_zero()) {
            try {
                um = (-defect).div_exact(solvability);
            } catch (const error&) {
                std::ostringstream os;
                os << "extend_branch: linear solvability coefficient does not divide the defect "
                      "at order "
                   << m;
                fail(errc::degenerate_branch, os.str());
            }
        }
        if (m + 1 <= seed.order()) {
            require(um == seed.coeff(m + 1), errc::branch_mismatch,
                    "extend_branch: seed disagrees with the relation's branch");
        }
        u.set_coeff(m, um);
        if (um.is_zero()) continue;
        // Shift the Taylor coefficients by delta = um * b^m (ascending j only
        // reads strictly higher ones, which are still unshifted).
        std::vector<XiPoly> dpow;
        dpow.push_back(um);
        for (int t = 2; t * m <= uorder; ++t) dpow.push_back(dpow.back() * um);
        for (int j = 0; j < dx; ++j) {
            for (int t = 1; j + t <= dx && t * m <= uorder; ++t)
                g[j] += g[j + t].mul_single(dpow[t - 1] * binom_rat(j + t, t), t * m);
        }
    }

    XiSeries out(order);
    for (int k = 0; k <= uorder; ++k) out.set_coeff(k + 1, u.coeff(k));
    return out;
}

} // namespace greenwalk
