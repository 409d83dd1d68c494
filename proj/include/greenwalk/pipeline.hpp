#pragma once

#include "greenwalk/cyclo.hpp"
#include "greenwalk/exact_algebra.hpp"
#include "greenwalk/relation.hpp"

namespace greenwalk {

// Cauchy relation -> R relation via the substitution C := b, b := b/(1+bR),
// clearing (1+bR) powers and stripping spurious factors against the branch's
// R series.
AlgebraicRelation cauchy_to_r(const AlgebraicRelation& rel);

// R series of the single factor of index n: the compositional inverse route
// R(b) = 1/K(b) - 1/b with K the inverse of the factor's Cauchy series.
XiSeries r_series_from_cauchy(int n, int order);

// Relation annihilating the sum of the branches, by iterated pairwise
// resultants Res_z(Q_a(z), Q_b(X - z)) stripped against the summed series.
AlgebraicRelation r_sum_relation(const std::vector<AlgebraicRelation>& rels,
                                 const std::vector<XiSeries>& seeds);

// R relation -> Cauchy relation via R := 1/b - 1/C, b := C.
AlgebraicRelation r_to_cauchy(const AlgebraicRelation& rel);

struct PipelineResult {
    AlgebraicRelation q_rel; // annihilates the R transform of the walk operator
    AlgebraicRelation p_rel; // annihilates the Cauchy transform
};

// Full transform pipeline for the amalgamated free product walk:
// per-factor Cauchy relation -> R relation, additive R summation, and
// conversion back to the product's Cauchy relation.
PipelineResult pipeline(const WalkSpec& spec);

// Cauchy series of the branch of a Cauchy relation (valuation 1, unit
// leading coefficient), to the given order.
XiSeries cauchy_series_of(const AlgebraicRelation& c_rel, int order);

// R series derived from a Cauchy series: R = (b - K)/(b K), K = C^<-1>.
XiSeries r_series_from_c_series(const XiSeries& c_series, int order);

// C series derived from an R series: C = K^<-1>, K = b/(1 + bR).
XiSeries c_series_from_r_series(const XiSeries& r_series, int order);

} // namespace greenwalk
