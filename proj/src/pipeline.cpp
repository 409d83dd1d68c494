#include "greenwalk/pipeline.hpp"

#include <algorithm>

namespace greenwalk {

namespace {

constexpr int kSeedOrder = 6;

XiSeries seed_prefix(const XiSeries& s, int order = kSeedOrder) {
    return s.truncated(std::min(order, s.order()));
}

// Verification / stripping order to start from, before adaptive extension.
int initial_order(const MPoly& raw) { return std::max(2 * raw.total_degree() + 6, 24); }

} // namespace

XiSeries r_series_from_c_series(const XiSeries& c_series, int order) {
    require(c_series.order() >= order + 2, errc::insufficient_data,
            "r_series_from_c_series: need two extra orders of the Cauchy series");
    XiSeries c = c_series.truncated(order + 2);
    XiSeries k = series_compositional_inverse(c);
    // R = (b - K)/(b K); both valuations cancel against b^2.
    XiSeries num = (xiseries_b(order + 2) - k).shifted_down(2);
    XiSeries den = k.shifted_down(1);
    return num.divided_by(den).truncated(order);
}

XiSeries c_series_from_r_series(const XiSeries& r_series, int order) {
    require(r_series.order() >= order, errc::insufficient_data,
            "c_series_from_r_series: R series too short");
    XiSeries r = r_series.truncated(order);
    XiSeries one_plus_br = r.shifted_up(1);
    one_plus_br.set_coeff(0, XiPoly(1L));
    // K = b/(1+bR): divide the unit part first, then shift up.
    XiSeries k = one_plus_br.inverse().shifted_up(1);
    return series_compositional_inverse(k);
}

XiSeries cauchy_series_of(const AlgebraicRelation& c_rel, int order) {
    require(c_rel.letter == 'C', errc::invalid_argument, "cauchy_series_of: not a Cauchy relation");
    return extend_branch(c_rel.poly, c_rel.seed, order);
}

XiSeries r_series_from_cauchy(int n, int order) {
    CauchyFactorization fac = factor_cauchy(n);
    return r_series_from_c_series(fac.series(order + 2), order);
}

AlgebraicRelation cauchy_to_r(const AlgebraicRelation& rel) {
    require(rel.letter == 'C', errc::invalid_argument, "cauchy_to_r: expected a Cauchy relation");
    const MPoly& f = rel.poly;
    const int db = f.degree(Var::B);

    // X_C := b, b := b/(1+bX_R); multiply through by (1+bX_R)^db.
    std::vector<MPoly> shift_pow(db + 1);
    MPoly one_plus_bx = MPoly(1L) + MPoly::monomial(Int(1), 1, 1, 0);
    shift_pow[0] = MPoly(1L);
    for (int e = 1; e <= db; ++e) shift_pow[e] = shift_pow[e - 1] * one_plus_bx;

    MPoly raw;
    for (const auto& [e, c] : f.terms()) {
        int i = e[0], j = e[1], k = e[2];
        raw += shift_pow[db - j].mul_term(c, 0, i + j, k);
    }

    // Branch data: C series from the input relation, R series derived from it.
    auto c_at = [&rel](int order) { return extend_branch(rel.poly, rel.seed, order); };
    int ord0 = initial_order(raw);
    SeriesExtender extend = [&c_at](int order) {
        return r_series_from_c_series(c_at(order + 2), order);
    };
    XiSeries r_series = extend(ord0);

    AlgebraicRelation out;
    out.poly = strip_to_minimal(raw, r_series, extend);
    out.letter = 'R';
    out.seed = seed_prefix(r_series);
    return out;
}

AlgebraicRelation r_to_cauchy(const AlgebraicRelation& rel) {
    require(rel.letter == 'R', errc::invalid_argument, "r_to_cauchy: expected an R relation");
    const MPoly& f = rel.poly;
    const int dr = f.degree(Var::X);

    // X_R := (X_C - b)/(b X_C), b := X_C; multiply through by (b X_C)^dr.
    std::vector<MPoly> diff_pow(dr + 1);
    MPoly x_minus_b = MPoly::variable(Var::X) - MPoly::variable(Var::B);
    diff_pow[0] = MPoly(1L);
    for (int e = 1; e <= dr; ++e) diff_pow[e] = diff_pow[e - 1] * x_minus_b;

    MPoly raw;
    for (const auto& [e, c] : f.terms()) {
        int i = e[0], j = e[1], k = e[2];
        // c * (X-b)^i * (bX)^(dr-i) * X^j * xi^k
        raw += diff_pow[i].mul_term(c, dr - i + j, dr - i, k);
    }

    auto r_at = [&rel](int order) { return extend_branch(rel.poly, rel.seed, order); };
    int ord0 = initial_order(raw);
    SeriesExtender extend = [&r_at](int order) {
        return c_series_from_r_series(r_at(order), order);
    };
    XiSeries c_series = extend(ord0);

    AlgebraicRelation out;
    out.poly = strip_to_minimal(raw, c_series, extend);
    out.letter = 'C';
    out.seed = seed_prefix(c_series);
    return out;
}

namespace {

// Res_z(a(z), b(X - z)) eliminating z: annihilates the sum of the branches.
MPoly sum_eliminant(const MPoly& qa, const MPoly& qb) {
    // Viewing z as the X slot of qa and shifting qb's X to X - z means the
    // Sylvester matrix mixes coefficients in (X, b, xi); build both inputs as
    // polynomials in the eliminated variable with MPoly coefficients by
    // substituting through the existing resultant on a shifted copy.
    // qb(X - z): expand each X^i as sum_t binom(i,t) X^(i-t) (-z)^t, with z
    // played by the X slot of a fresh polynomial and the original X routed
    // through a placeholder exponent.
    // To stay within three variables, run the resultant in the X slot:
    //   A(z) = qa with X renamed to z        -> A uses the X slot for z
    //   B(z) = qb with X := (X - z)          -> needs both X and z
    // The trick: compute Res_z via the Sylvester matrix directly, whose
    // entries are the z-coefficients; those live in (X, b, xi).
    const int da = qa.degree(Var::X);
    const int dbg = qb.degree(Var::X);

    // z-coefficient lists: A[t] = coeff of z^t in qa(z) (X-free),
    // B[t] = coeff of z^t in qb(X - z).
    std::vector<MPoly> A(da + 1), B(dbg + 1);
    for (const auto& [e, c] : qa.terms()) A[e[0]].add_term(exp_of(0, e[1], e[2]), c);
    {
        // binomial table
        std::vector<std::vector<Int>> binom(dbg + 1, std::vector<Int>(dbg + 1, Int(0)));
        for (int i = 0; i <= dbg; ++i) {
            binom[i][0] = 1;
            for (int t = 1; t <= i; ++t)
                binom[i][t] = binom[i - 1][t - 1] + (t <= i - 1 ? binom[i - 1][t] : Int(0));
        }
        for (const auto& [e, c] : qb.terms()) {
            int i = e[0];
            for (int t = 0; t <= i; ++t) {
                Int coeff = c * binom[i][t];
                if (t % 2) coeff = -coeff;
                B[t].add_term(exp_of(i - t, e[1], e[2]), coeff);
            }
        }
    }

    // Sylvester matrix of A (degree da) and B (degree dbg) in z.
    const int n = da + dbg;
    std::vector<std::vector<MPoly>> mat(n, std::vector<MPoly>(n));
    for (int r = 0; r < dbg; ++r)
        for (int k = 0; k <= da; ++k) mat[r][r + da - k] = A[k];
    for (int r = 0; r < da; ++r)
        for (int k = 0; k <= dbg; ++k) mat[dbg + r][r + dbg - k] = B[k];

    // Fraction-free elimination (same scheme as `resultant`).
    int sign = 1;
    MPoly prev(1L);
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (!mat[r][k].is_zero()) {
                pivot = r;
                break;
            }
        require(pivot >= 0, errc::elimination_failure, "sum_eliminant: singular Sylvester matrix");
        if (pivot != k) {
            std::swap(mat[pivot], mat[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                MPoly t = mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j];
                mat[i][j] = (k == 0) ? std::move(t) : t.div_exact(prev);
            }
            mat[i][k] = MPoly();
        }
        prev = mat[k][k];
    }
    MPoly det = mat[n - 1][n - 1];
    return sign > 0 ? det : -det;
}

} // namespace

AlgebraicRelation r_sum_relation(const std::vector<AlgebraicRelation>& rels,
                                 const std::vector<XiSeries>& seeds) {
    require(!rels.empty(), errc::invalid_argument, "r_sum_relation: need at least one relation");
    require(rels.size() == seeds.size(), errc::invalid_argument,
            "r_sum_relation: relations and series must match");
    for (const auto& r : rels)
        require(r.letter == 'R', errc::invalid_argument, "r_sum_relation: expected R relations");

    AlgebraicRelation acc = rels[0];
    // Track how to recompute the accumulated branch series at any order.
    std::vector<const AlgebraicRelation*> parts{&rels[0]};
    auto sum_at = [&parts](int order) {
        XiSeries total(order);
        for (const AlgebraicRelation* r : parts) total += extend_branch(r->poly, r->seed, order);
        return total;
    };
    for (std::size_t j = 1; j < rels.size(); ++j) {
        MPoly raw = sum_eliminant(acc.poly, rels[j].poly);
        parts.push_back(&rels[j]);
        SeriesExtender extend = sum_at;
        XiSeries summed = sum_at(initial_order(raw));
        acc.poly = strip_to_minimal(raw, summed, extend);
        acc.seed = seed_prefix(summed);
        // The accumulated relation replaces the parts for later stages.
        if (j + 1 < rels.size()) {
            parts.clear();
            parts.push_back(&acc);
        }
    }
    return acc;
}

PipelineResult pipeline(const WalkSpec& spec) {
    std::vector<AlgebraicRelation> r_rels;
    std::vector<XiSeries> r_seeds;
    r_rels.reserve(spec.factors());
    for (int mj : spec.m) {
        CauchyFactorization fac = factor_cauchy(mj);
        AlgebraicRelation c_rel;
        c_rel.poly = fac.relation().normalized();
        c_rel.letter = 'C';
        c_rel.seed = fac.series(kSeedOrder);
        AlgebraicRelation q = cauchy_to_r(c_rel);
        r_seeds.push_back(q.seed);
        r_rels.push_back(std::move(q));
    }
    PipelineResult out;
    out.q_rel = r_sum_relation(r_rels, r_seeds);
    out.p_rel = r_to_cauchy(out.q_rel);
    return out;
}

} // namespace greenwalk
