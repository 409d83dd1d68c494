#pragma once

#include <functional>
#include <optional>

#include "greenwalk/mpoly.hpp"
#include "greenwalk/xiseries.hpp"

namespace greenwalk {

// Sylvester resultant of f and g eliminating v, computed by fraction-free
// (Bareiss) elimination. Both inputs must have positive degree in v.
MPoly resultant(const MPoly& f, const MPoly& g, Var v);

// GCD in Z[X, b, xi] (includes the integer content), sign-normalized.
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

// Product of the distinct irreducible factors of f that involve v,
// content-normalized: f / gcd(f, df/dv).
MPoly squarefree_part(const MPoly& f, Var v);

// Compositional inverse g of f with f(g(b)) = b modulo b^(K+1).
// Requires c_0 = 0 and an invertible scalar c_1.
XiSeries series_compositional_inverse(const XiSeries& f);

struct DegreeBounds {
    int dx = 0;
    int db = 0;
    int dxi = 0;
};

// Optional callback producing the branch series at a higher order when the
// linear algebra needs more rows than the given series provides.
using SeriesExtender = std::function<XiSeries(int order)>;

// Lowest-degree (lexicographically in deg_X, then deg_b, then deg_xi) nonzero
// integer polynomial within the bounds annihilating s to its full known
// order. The kernel is located by modular rank probes and reconstructed
// exactly; the result is certified by exact substitution back into s.
MPoly minimal_relation(const XiSeries& s, const DegreeBounds& bounds,
                       const SeriesExtender& extend = nullptr);

// minimal_relation seeded with a known annihilating candidate (typically a
// resultant): when the candidate is already minimal this avoids solving for
// it again. Bounds are taken from the candidate's degrees.
MPoly strip_to_minimal(const MPoly& candidate, const XiSeries& s,
                       const SeriesExtender& extend = nullptr);

// True when poly(s) = 0 modulo b^(order+1), by exact substitution.
bool annihilates(const MPoly& poly, const XiSeries& s);

// poly(s) as a series (X substituted by s), for diagnostics and checks.
XiSeries evaluate_at_series(const MPoly& poly, const XiSeries& s);

} // namespace greenwalk
