#include "greenwalk/exact_algebra.hpp"

namespace greenwalk {

namespace {

// Derivative of a series with respect to b, same truncation order.
XiSeries derivative(const XiSeries& f) {
    XiSeries r(f.order());
    for (int k = 1; k <= f.order(); ++k) r.set_coeff(k - 1, f.coeff(k) * Rat(k));
    return r;
}

} // namespace

XiSeries series_compositional_inverse(const XiSeries& f) {
    require(f.order() >= 1, errc::invalid_argument, "compositional inverse: order too small");
    require(f.coeff(0).is_zero(), errc::not_invertible,
            "compositional inverse: constant term must vanish");
    const XiPoly& c1 = f.coeff(1);
    require(!c1.is_zero() && c1.degree() == 0, errc::not_invertible,
            "compositional inverse: linear coefficient must be an invertible scalar");
    const int K = f.order();
    const Rat u = Rat(1) / c1.coeff(0);

    // Newton iteration g <- g - (f(g) - b) / f'(g), doubling the precision.
    XiSeries fp = derivative(f);
    int prec = 1;
    XiSeries g = xiseries_b(1).scaled(XiPoly(u));
    while (prec < K) {
        prec = std::min(2 * prec, K);
        XiSeries gp = g.truncated(prec);
        XiSeries ft = f.truncated(prec);
        XiSeries err = ft.compose(gp) - xiseries_b(prec);
        if (err.is_zero()) {
            g = gp;
            continue;
        }
        XiSeries slope = fp.truncated(prec).compose(gp);
        g = gp - err.divided_by(slope);
    }
    return g;
}

} // namespace greenwalk
