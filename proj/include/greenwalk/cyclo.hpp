#pragma once

#include <map>
#include <vector>

#include "greenwalk/mpoly.hpp"
#include "greenwalk/xiseries.hpp"

namespace greenwalk {

// Element of Z[w] / (w^n - 1): integer coordinates on 1, w, ..., w^(n-1).
class CycloElem {
  public:
    explicit CycloElem(int n) : c_(n, Int(0)) {}
    static CycloElem root_power(int n, long k); // w^k

    int n() const { return static_cast<int>(c_.size()); }
    const Int& coord(int k) const { return c_[k]; }
    bool is_zero() const;
    // True if the element is an ordinary integer (all w-coordinates zero).
    bool is_rational_integer() const { return degree_support() == 0; }
    Int integer_value() const;

    CycloElem& operator+=(const CycloElem& o);
    CycloElem operator-() const;
    friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
    bool operator==(const CycloElem& o) const { return c_ == o.c_; }

  private:
    int degree_support() const;
    std::vector<Int> c_;
};

// Finitely supported map lambda-exponent -> CycloElem: the group ring of Z
// with coefficients in Z[w].
class LaurentGR {
  public:
    explicit LaurentGR(int n) : n_(n) {}
    static LaurentGR one(int n);
    // c * lambda^k
    static LaurentGR term(int n, long k, const CycloElem& c);

    int n() const { return n_; }
    const std::map<long, CycloElem>& entries() const { return m_; }
    void add(long k, const CycloElem& c);
    bool is_zero() const { return m_.empty(); }

    LaurentGR& operator+=(const LaurentGR& o);
    friend LaurentGR operator*(const LaurentGR& a, const LaurentGR& b);

  private:
    int n_;
    std::map<long, CycloElem> m_;
};

// n >= 2; p_poly and q_poly are the integer polynomials in b with
// p(0) = q(0) = 1, deg p <= n-1, deg q <= n, encoding the single-factor
// transform  b p(b) / (q(b) - b^n xi).
struct CauchyFactorization {
    int n;
    std::vector<Int> p_poly;
    std::vector<Int> q_poly;

    // The relation (q(b) - b^n xi) X - b p(b) annihilating the transform.
    MPoly relation() const;
    // Series expansion of the transform to the given order.
    XiSeries series(int order) const;
};

// Expand the rotation-averaged product formula and extract (p, q), asserting
// the integrality facts along the way.
CauchyFactorization factor_cauchy(int n);

// lambda^(mn) + lambda^(-mn) as a polynomial in xi = lambda^n + lambda^(-n);
// m = 0 gives the constant 2.
XiPoly chebyshev_fold(int m);

// Independent oracle: the same transform computed from binomial endpoint
// counts of the one-dimensional walk, folded into xi-polynomials.
XiSeries direct_cauchy_series(int n, int order);

} // namespace greenwalk
