#include "greenwalk/xiseries.hpp"

#include <sstream>

namespace greenwalk {

namespace {
const XiPoly kZeroPoly;
}

XiPoly XiPoly::xi_power(int k, const Rat& c) {
    require(k >= 0, errc::invalid_argument, "xi_power: negative exponent");
    if (c == 0) return XiPoly();
    std::vector<Rat> v(k + 1, Rat(0));
    v[k] = c;
    return XiPoly(std::move(v));
}

XiPoly& XiPoly::operator+=(const XiPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

XiPoly& XiPoly::operator-=(const XiPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

XiPoly operator*(const XiPoly& a, const XiPoly& b) {
    if (a.is_zero() || b.is_zero()) return XiPoly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            r[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return XiPoly(std::move(r));
}

XiPoly XiPoly::operator-() const {
    XiPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

XiPoly XiPoly::operator*(const Rat& s) const {
    if (s == 0) return XiPoly();
    XiPoly r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
}

XiPoly XiPoly::div_exact(const XiPoly& d) const {
    require(!d.is_zero(), errc::degenerate_branch, "XiPoly::div_exact: zero divisor");
    if (is_zero()) return XiPoly();
    if (d.degree() == 0) return *this * (Rat(1) / d.c_[0]);
    std::vector<Rat> rem = c_;
    int dd = d.degree();
    int qd = degree() - dd;
    require(qd >= 0, errc::degenerate_branch, "XiPoly::div_exact: degree too small");
    std::vector<Rat> q(qd + 1, Rat(0));
    for (int k = qd; k >= 0; --k) {
        Rat t = rem[k + dd] / d.c_[dd];
        q[k] = t;
        if (t == 0) continue;
        for (int j = 0; j <= dd; ++j) rem[k + j] -= t * d.c_[j];
    }
    for (const Rat& v : rem)
        require(v == 0, errc::degenerate_branch, "XiPoly::div_exact: inexact division");
    return XiPoly(std::move(q));
}

bool XiPoly::is_integral() const {
    for (const Rat& v : c_)
        if (v.get_den() != 1) return false;
    return true;
}

std::string XiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < static_cast<int>(c_.size()); ++k) {
        if (c_[k] == 0) continue;
        Rat a = c_[k];
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1 || k == 0) os << a.get_str();
        if (k >= 1) {
            if (a != 1) os << "*";
            os << "xi";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

const XiPoly& XiSeries::coeff(int k) const {
    require(k >= 0 && k <= order_, errc::invalid_argument, "XiSeries::coeff: index out of range");
    return c_[k];
}

void XiSeries::set_coeff(int k, XiPoly v) {
    require(k >= 0 && k <= order_, errc::invalid_argument, "XiSeries::set_coeff: index out of range");
    c_[k] = std::move(v);
}

bool XiSeries::is_zero() const {
    for (const auto& p : c_)
        if (!p.is_zero()) return false;
    return true;
}

int XiSeries::lowest_order() const {
    for (int k = 0; k <= order_; ++k)
        if (!c_[k].is_zero()) return k;
    return order_ + 1;
}

XiSeries XiSeries::truncated(int new_order) const {
    XiSeries r(new_order);
    for (int k = 0; k <= std::min(new_order, order_); ++k) r.c_[k] = c_[k];
    return r;
}

XiSeries& XiSeries::operator+=(const XiSeries& o) {
    require(order_ == o.order_, errc::invalid_argument, "XiSeries: order mismatch");
    for (int k = 0; k <= order_; ++k) c_[k] += o.c_[k];
    return *this;
}

XiSeries& XiSeries::operator-=(const XiSeries& o) {
    require(order_ == o.order_, errc::invalid_argument, "XiSeries: order mismatch");
    for (int k = 0; k <= order_; ++k) c_[k] -= o.c_[k];
    return *this;
}

XiSeries operator*(const XiSeries& a, const XiSeries& b) {
    require(a.order_ == b.order_, errc::invalid_argument, "XiSeries: order mismatch");
    XiSeries r(a.order_);
    for (int i = 0; i <= a.order_; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= a.order_; ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

XiSeries XiSeries::operator-() const {
    XiSeries r(order_);
    for (int k = 0; k <= order_; ++k) r.c_[k] = -c_[k];
    return r;
}

XiSeries XiSeries::scaled(const XiPoly& s) const {
    XiSeries r(order_);
    if (s.is_zero()) return r;
    for (int k = 0; k <= order_; ++k)
        if (!c_[k].is_zero()) r.c_[k] = c_[k] * s;
    return r;
}

XiSeries XiSeries::mul_single(const XiPoly& s, int shift) const {
    XiSeries r(order_);
    if (s.is_zero()) return r;
    for (int k = 0; k + shift <= order_; ++k)
        if (!c_[k].is_zero()) r.c_[k + shift] = c_[k] * s;
    return r;
}

XiSeries XiSeries::shifted_up(int k) const { return mul_single(XiPoly(1L), k); }

XiSeries XiSeries::shifted_down(int k) const {
    XiSeries r(order_);
    for (int j = 0; j < k && j <= order_; ++j)
        require(c_[j].is_zero(), errc::internal_error, "shifted_down: nonzero low coefficient");
    for (int j = k; j <= order_; ++j) r.c_[j - k] = c_[j];
    return r;
}

XiSeries XiSeries::inverse() const {
    require(order_ >= 0, errc::invalid_argument, "inverse of empty series");
    const XiPoly& c0 = c_[0];
    require(!c0.is_zero() && c0.degree() == 0, errc::not_invertible,
            "XiSeries::inverse: constant term not an invertible scalar");
    Rat u = Rat(1) / c0.coeff(0);
    XiSeries r(order_);
    r.c_[0] = XiPoly(u);
    for (int k = 1; k <= order_; ++k) {
        XiPoly acc;
        for (int j = 1; j <= k; ++j) {
            if (c_[j].is_zero() || r.c_[k - j].is_zero()) continue;
            acc += c_[j] * r.c_[k - j];
        }
        r.c_[k] = -acc * u;
    }
    return r;
}

XiSeries XiSeries::divided_by(const XiSeries& d) const { return *this * d.inverse(); }

XiSeries XiSeries::compose(const XiSeries& g) const {
    require(order_ == g.order_, errc::invalid_argument, "compose: order mismatch");
    require(g.order_ >= 0 && g.c_[0].is_zero(), errc::invalid_argument,
            "compose: inner series must have zero constant term");
    // Horner from the top coefficient down.
    XiSeries acc(order_);
    for (int k = order_; k >= 0; --k) {
        acc = acc * g;
        acc.c_[0] += c_[k];
    }
    return acc;
}

std::string XiSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order_; ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[k].str() << ")*b^" << k;
    }
    if (first) os << "0";
    os << " + O(b^" << order_ + 1 << ")";
    return os.str();
}

XiSeries xiseries_b(int order) {
    XiSeries r(order);
    if (order >= 1) r.set_coeff(1, XiPoly(1L));
    return r;
}

XiSeries xiseries_from_mpoly(const MPoly& p, int order) {
    require(p.degree(Var::X) == 0, errc::invalid_argument, "xiseries_from_mpoly: X-degree must be 0");
    XiSeries r(order);
    std::vector<std::vector<Rat>> acc(order + 1);
    for (const auto& [e, c] : p.terms()) {
        if (e[1] > order) continue;
        auto& row = acc[e[1]];
        if (static_cast<int>(row.size()) <= e[2]) row.resize(e[2] + 1, Rat(0));
        row[e[2]] += Rat(c);
    }
    for (int k = 0; k <= order; ++k)
        if (!acc[k].empty()) r.set_coeff(k, XiPoly(std::move(acc[k])));
    return r;
}

} // namespace greenwalk
