#include "greenwalk/cyclo.hpp"

#include <algorithm>

namespace greenwalk {

CycloElem CycloElem::root_power(int n, long k) {
    CycloElem e(n);
    long r = k % n;
    if (r < 0) r += n;
    e.c_[r] = 1;
    return e;
}

bool CycloElem::is_zero() const {
    for (const Int& v : c_)
        if (v != 0) return false;
    return true;
}

int CycloElem::degree_support() const {
    for (int k = n() - 1; k >= 1; --k)
        if (c_[k] != 0) return k;
    return 0;
}

Int CycloElem::integer_value() const {
    require(is_rational_integer(), errc::internal_error,
            "CycloElem: not a rational integer (Galois-invariance assertion failed)");
    return c_[0];
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
    for (int k = 0; k < n(); ++k) c_[k] += o.c_[k];
    return *this;
}

CycloElem CycloElem::operator-() const {
    CycloElem r(n());
    for (int k = 0; k < n(); ++k) r.c_[k] = -c_[k];
    return r;
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
    const int n = a.n();
    CycloElem r(n);
    for (int i = 0; i < n; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (b.c_[j] == 0) continue;
            int k = i + j;
            if (k >= n) k -= n;
            r.c_[k] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

LaurentGR LaurentGR::one(int n) {
    LaurentGR r(n);
    r.m_.emplace(0L, CycloElem::root_power(n, 0));
    return r;
}

LaurentGR LaurentGR::term(int n, long k, const CycloElem& c) {
    LaurentGR r(n);
    if (!c.is_zero()) r.m_.emplace(k, c);
    return r;
}

void LaurentGR::add(long k, const CycloElem& c) {
    if (c.is_zero()) return;
    auto it = m_.find(k);
    if (it == m_.end()) {
        m_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) m_.erase(it);
    }
}

LaurentGR& LaurentGR::operator+=(const LaurentGR& o) {
    for (const auto& [k, c] : o.m_) add(k, c);
    return *this;
}

LaurentGR operator*(const LaurentGR& a, const LaurentGR& b) {
    LaurentGR r(a.n_);
    for (const auto& [ka, ca] : a.m_)
        for (const auto& [kb, cb] : b.m_) r.add(ka + kb, ca * cb);
    return r;
}

MPoly CauchyFactorization::relation() const {
    MPoly rel;
    for (int k = 0; k < static_cast<int>(q_poly.size()); ++k)
        rel += MPoly::monomial(q_poly[k], 1, k, 0);
    rel -= MPoly::monomial(Int(1), 1, n, 1);
    for (int k = 0; k < static_cast<int>(p_poly.size()); ++k)
        rel -= MPoly::monomial(p_poly[k], 0, k + 1, 0);
    return rel;
}

XiSeries CauchyFactorization::series(int order) const {
    XiSeries num(order);
    for (int k = 0; k < static_cast<int>(p_poly.size()) && k + 1 <= order; ++k)
        num.set_coeff(k + 1, XiPoly(Rat(p_poly[k])));
    XiSeries den(order);
    for (int k = 0; k < static_cast<int>(q_poly.size()) && k <= order; ++k)
        den.set_coeff(k, XiPoly(Rat(q_poly[k])));
    if (n <= order) {
        XiPoly d = den.coeff(n);
        d -= XiPoly::xi_power(1);
        den.set_coeff(n, d);
    }
    return num.divided_by(den);
}

namespace {

// Polynomial in b with LaurentGR coefficients.
using GRPoly = std::vector<LaurentGR>;

GRPoly gr_mul(const GRPoly& a, const GRPoly& b, int n) {
    GRPoly r(a.size() + b.size() - 1, LaurentGR(n));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// 1 - (w^j lambda + w^-j lambda^-1) b
GRPoly linear_factor(int n, int j) {
    GRPoly f(2, LaurentGR(n));
    f[0] = LaurentGR::one(n);
    f[1].add(+1, -CycloElem::root_power(n, j));
    f[1].add(-1, -CycloElem::root_power(n, -j));
    return f;
}

} // namespace

CauchyFactorization factor_cauchy(int n) {
    require(n >= 2, errc::invalid_argument, "factor_cauchy: n must be >= 2");

    // Denominator: product over j of (1 - (w^j lambda + w^-j lambda^-1) b).
    std::vector<GRPoly> factors;
    factors.reserve(n);
    for (int j = 0; j < n; ++j) factors.push_back(linear_factor(n, j));

    GRPoly denom(1, LaurentGR::one(n));
    for (int j = 0; j < n; ++j) denom = gr_mul(denom, factors[j], n);

    // Numerator (before the leading b/n): sum over k of the product with the
    // k-th factor omitted.
    GRPoly numer(1, LaurentGR(n));
    numer[0] = LaurentGR(n);
    bool first = true;
    for (int k = 0; k < n; ++k) {
        GRPoly prod(1, LaurentGR::one(n));
        for (int j = 0; j < n; ++j)
            if (j != k) prod = gr_mul(prod, factors[j], n);
        if (first) {
            numer = prod;
            first = false;
        } else {
            if (prod.size() > numer.size()) numer.resize(prod.size(), LaurentGR(n));
            for (std::size_t i = 0; i < prod.size(); ++i) numer[i] += prod[i];
        }
    }

    CauchyFactorization out;
    out.n = n;

    // Extract q: every denominator coefficient must be a rational integer,
    // except the b^n term which additionally carries -(lambda^n + lambda^-n).
    require(static_cast<int>(denom.size()) <= n + 1, errc::internal_error,
            "factor_cauchy: denominator degree exceeds n");
    out.q_poly.assign(denom.size(), Int(0));
    for (int k = 0; k < static_cast<int>(denom.size()); ++k) {
        LaurentGR coeff = denom[k];
        if (k == n) {
            // remove the lambda^{+-n} part, asserting its coordinates are -1
            for (long e : {static_cast<long>(n), static_cast<long>(-n)}) {
                auto it = coeff.entries().find(e);
                require(it != coeff.entries().end(), errc::internal_error,
                        "factor_cauchy: missing lambda^n term in b^n coefficient");
                CycloElem c = it->second;
                require(c.is_rational_integer() && c.integer_value() == -1, errc::internal_error,
                        "factor_cauchy: lambda^n coefficient is not -1");
                CycloElem plus_one(n);
                plus_one += CycloElem::root_power(n, 0);
                coeff.add(e, plus_one); // cancels the -1
            }
        }
        for (const auto& [e, c] : coeff.entries()) {
            require(e == 0, errc::internal_error,
                    "factor_cauchy: denominator has unexpected lambda support");
            out.q_poly[k] = c.integer_value();
        }
    }
    while (out.q_poly.size() > 1 && out.q_poly.back() == 0) out.q_poly.pop_back();
    require(out.q_poly[0] == 1, errc::internal_error, "factor_cauchy: q(0) != 1");

    // Extract p: numerator coefficients must be rational integers divisible
    // by n with constant term n.
    require(static_cast<int>(numer.size()) <= n, errc::internal_error,
            "factor_cauchy: numerator degree exceeds n-1");
    out.p_poly.assign(numer.size(), Int(0));
    for (int k = 0; k < static_cast<int>(numer.size()); ++k) {
        for (const auto& [e, c] : numer[k].entries()) {
            require(e == 0, errc::internal_error,
                    "factor_cauchy: numerator has unexpected lambda support");
            Int v = c.integer_value();
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), Int(n).get_mpz_t());
            require(r == 0, errc::internal_error, "factor_cauchy: numerator not divisible by n");
            out.p_poly[k] = q;
        }
    }
    while (out.p_poly.size() > 1 && out.p_poly.back() == 0) out.p_poly.pop_back();
    require(out.p_poly[0] == 1, errc::internal_error, "factor_cauchy: p(0) != 1");
    return out;
}

XiPoly chebyshev_fold(int m) {
    require(m >= 0, errc::invalid_argument, "chebyshev_fold: m must be >= 0");
    XiPoly prev(Rat(2)), cur = XiPoly::xi_power(1);
    if (m == 0) return prev;
    for (int k = 2; k <= m; ++k) {
        XiPoly next = XiPoly::xi_power(1) * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

XiSeries direct_cauchy_series(int n, int order) {
    require(n >= 2 && order >= 1, errc::invalid_argument, "direct_cauchy_series: bad arguments");
    XiSeries out(order);
    out.set_coeff(1, XiPoly(1L));
    // Binomial row for walk endpoint counts: after k steps the count at
    // position d (same parity, |d| <= k) is binom(k, (k+d)/2).
    for (int k = 1; k + 1 <= order; ++k) {
        XiPoly ek;
        if (k % 2 == 0) {
            Int c;
            mpz_bin_uiui(c.get_mpz_t(), k, k / 2);
            ek += XiPoly(Rat(c));
        }
        for (int m = 1; m * n <= k; ++m) {
            if ((k + m * n) % 2 != 0) continue;
            Int c;
            mpz_bin_uiui(c.get_mpz_t(), k, (k + m * n) / 2);
            ek += chebyshev_fold(m) * Rat(c);
        }
        out.set_coeff(k + 1, std::move(ek));
    }
    return out;
}

} // namespace greenwalk
