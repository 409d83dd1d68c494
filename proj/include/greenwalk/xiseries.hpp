#pragma once

#include <string>
#include <vector>

#include "greenwalk/mpoly.hpp"

namespace greenwalk {

// Dense polynomial in the single variable xi over exact rationals.
// Trailing zero coefficients are never stored.
class XiPoly {
  public:
    XiPoly() = default;
    explicit XiPoly(const Rat& c) {
        if (c != 0) c_.push_back(c);
    }
    explicit XiPoly(long c) : XiPoly(Rat(c)) {}
    explicit XiPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static XiPoly xi_power(int k, const Rat& c = Rat(1));

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    Rat coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rat(0); }

    XiPoly& operator+=(const XiPoly& o);
    XiPoly& operator-=(const XiPoly& o);
    friend XiPoly operator+(XiPoly a, const XiPoly& b) { return a += b; }
    friend XiPoly operator-(XiPoly a, const XiPoly& b) { return a -= b; }
    friend XiPoly operator*(const XiPoly& a, const XiPoly& b);
    XiPoly operator-() const;
    XiPoly operator*(const Rat& s) const;
    bool operator==(const XiPoly& o) const { return c_ == o.c_; }

    // Exact division; fails with degenerate_branch if the remainder is nonzero.
    XiPoly div_exact(const XiPoly& d) const;

    bool is_integral() const;
    std::string str() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// Truncated power series in b with XiPoly coefficients: sum c_k b^k for
// k = 0..order. Arithmetic never reads beyond the order.
class XiSeries {
  public:
    XiSeries() : order_(-1) {}
    explicit XiSeries(int order) : order_(order), c_(order + 1) {
        require(order >= 0, errc::invalid_argument, "XiSeries: negative order");
    }

    int order() const { return order_; }
    const XiPoly& coeff(int k) const;
    void set_coeff(int k, XiPoly v);
    bool is_zero() const;
    // Index of the first nonzero coefficient (order+1 if the series is 0).
    int lowest_order() const;

    XiSeries truncated(int new_order) const;

    XiSeries& operator+=(const XiSeries& o);
    XiSeries& operator-=(const XiSeries& o);
    friend XiSeries operator+(XiSeries a, const XiSeries& b) { return a += b; }
    friend XiSeries operator-(XiSeries a, const XiSeries& b) { return a -= b; }
    friend XiSeries operator*(const XiSeries& a, const XiSeries& b);
    XiSeries operator-() const;
    bool operator==(const XiSeries& o) const { return order_ == o.order_ && c_ == o.c_; }

    XiSeries scaled(const XiPoly& s) const;
    // Multiply by s * b^shift, truncating at the original order.
    XiSeries mul_single(const XiPoly& s, int shift) const;
    XiSeries shifted_up(int k) const;   // multiply by b^k
    XiSeries shifted_down(int k) const; // divide by b^k; low coefficients must vanish

    // Multiplicative inverse; requires an invertible (constant-in-b) c_0.
    XiSeries inverse() const;
    // this / d.
    XiSeries divided_by(const XiSeries& d) const;
    // Composition this(g(b)); requires g.c_0 = 0.
    XiSeries compose(const XiSeries& g) const;

    std::string str() const;

  private:
    int order_;
    std::vector<XiPoly> c_;
};

// b as a series of the given order.
XiSeries xiseries_b(int order);

// Read a series out of a polynomial in (b, xi) (X-degree must be 0).
XiSeries xiseries_from_mpoly(const MPoly& p, int order);

} // namespace greenwalk
