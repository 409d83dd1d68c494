#pragma once

#include "greenwalk/pipeline.hpp"

namespace greenwalk {

// B-valued Cauchy branch of a Cauchy relation to order K (coefficient-by-
// coefficient linear recursion on the substituted form C = b*u).
XiSeries lift_branch(const AlgebraicRelation& rel, int order);

// Trace of a xi-polynomial: tau(xi^n) = binom(n, n/2) for n even, 0 for n odd,
// extended linearly.
Rat trace_xi(const XiPoly& f);

// Walk moments and exact return probabilities derived from the pipeline.
struct GreenSeries {
    WalkSpec spec;
    int order; // largest n with tau(T^n) computed
    std::vector<Int> moments;
    std::vector<Rat> p;
};

GreenSeries green_series(const WalkSpec& spec, int order);

struct RadiusEstimate {
    double estimate = 0.0;
    double uncertainty = 0.0;
};

// Richardson-extrapolated limit of (p_{2n+2}/p_{2n})^{1/2}; requires at least
// ten nonzero even-index terms.
RadiusEstimate spectral_radius_estimate(const GreenSeries& gs);

} // namespace greenwalk
