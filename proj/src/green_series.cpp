#include "greenwalk/green_series.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace greenwalk {

XiSeries lift_branch(const AlgebraicRelation& rel, int order) {
    require(rel.letter == 'C', errc::invalid_argument, "lift_branch: expected a Cauchy relation");
    require(rel.seed.order() >= 1 && rel.seed.lowest_order() == 1 &&
                rel.seed.coeff(1) == XiPoly(1L),
            errc::invalid_argument, "lift_branch: seed must start with coefficient 1 at order 1");
    XiSeries out = extend_branch(rel.poly, rel.seed, order);
    require(annihilates(rel.poly, out), errc::internal_error,
            "lift_branch: lifted branch fails to annihilate the relation");
    return out;
}

Rat trace_xi(const XiPoly& f) {
    Rat total(0);
    for (int k = 0; k <= f.degree(); k += 2) {
        if (f.coeff(k) == 0) continue;
        Int b;
        mpz_bin_uiui(b.get_mpz_t(), k, k / 2);
        total += f.coeff(k) * Rat(b);
    }
    return total;
}

GreenSeries green_series(const WalkSpec& spec, int order) {
    require(order >= 1, errc::invalid_argument, "green_series: order must be >= 1");
    PipelineResult pr = pipeline(spec);
    XiSeries c = lift_branch(pr.p_rel, order + 1);

    GreenSeries gs{spec, order, {}, {}};
    gs.moments.reserve(order + 1);
    gs.p.reserve(order + 1);
    const Int s_size = spec.s_size();
    Int s_pow = 1;
    for (int n = 0; n <= order; ++n) {
        // tau(T^n) is the trace of the b^(n+1) coefficient of the branch.
        Rat m = trace_xi(c.coeff(n + 1));
        require(m.get_den() == 1, errc::internal_error, "green_series: non-integer moment");
        Int mi(m.get_num());
        require(mi >= 0, errc::internal_error, "green_series: negative moment");
        gs.moments.push_back(mi);
        gs.p.push_back(Rat(mi) / Rat(s_pow));
        s_pow *= s_size;
    }

    // Structural invariants of return probabilities.
    require(gs.p[0] == 1, errc::internal_error, "green_series: p_0 != 1");
    if (order >= 1)
        require(gs.p[1] == 0, errc::internal_error, "green_series: p_1 != 0");
    if (spec.all_even()) {
        for (int n = 1; n <= order; n += 2)
            require(gs.moments[n] == 0, errc::internal_error,
                    "green_series: odd moment nonzero for an all-even spec");
    }
    for (int n = 1; 2 * n <= order; ++n)
        require(gs.p[2 * n] >= gs.p[n] * gs.p[n], errc::internal_error,
                "green_series: Cauchy-Schwarz violation");
    return gs;
}

RadiusEstimate spectral_radius_estimate(const GreenSeries& gs) {
    // Square-root ratios of consecutive nonzero even-index probabilities.
    std::vector<double> seq;
    std::vector<double> xs; // 1/n abscissae for extrapolation
    for (int n = 1; 2 * n + 2 <= gs.order; ++n) {
        if (gs.p[2 * n] == 0 || gs.p[2 * n + 2] == 0) continue;
        Rat ratio = gs.p[2 * n + 2] / gs.p[2 * n];
        seq.push_back(std::sqrt(ratio.get_d()));
        xs.push_back(1.0 / static_cast<double>(n));
    }
    require(static_cast<int>(seq.size()) >= 10, errc::insufficient_data,
            "spectral_radius_estimate: need at least 10 nonzero even-index terms");

    // Richardson extrapolation to 1/n -> 0 via the Neville tableau on the
    // tail of the sequence.
    const int tail = std::min<int>(12, static_cast<int>(seq.size()));
    std::vector<double> t(seq.end() - tail, seq.end());
    std::vector<double> x(xs.end() - tail, xs.end());
    double last = t.back(), prev = t.back();
    for (int level = 1; level < tail; ++level) {
        for (int i = 0; i + level < tail; ++i)
            t[i] = (x[i] * t[i + 1] - x[i + level] * t[i]) / (x[i] - x[i + level]);
        prev = last;
        last = t[0];
    }
    RadiusEstimate est;
    est.estimate = last;
    est.uncertainty = std::abs(last - prev);
    return est;
}

} // namespace greenwalk
