#include <vector>

#include "greenwalk/exact_algebra.hpp"

namespace greenwalk {

namespace {

// Polynomial in one distinguished variable with MPoly coefficients (the
// coefficients have degree zero in that variable).
struct UPoly {
    std::vector<MPoly> c; // c[k] multiplies v^k

    int deg() const {
        for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
            if (!c[k].is_zero()) return k;
        return -1;
    }
    void trim() { c.resize(deg() + 1); }
    const MPoly& lc() const { return c.back(); }
    bool is_zero() const { return deg() < 0; }
};

UPoly as_upoly(const MPoly& f, Var v) {
    UPoly u;
    u.c.resize(f.degree(v) + 1);
    for (int k = 0; k < static_cast<int>(u.c.size()); ++k) u.c[k] = f.coeff_of(v, k);
    u.trim();
    return u;
}

MPoly bareiss_determinant(std::vector<std::vector<MPoly>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return MPoly(1L);
    int sign = 1;
    MPoly prev(1L);
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r) {
            if (!m[r][k].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return MPoly(); // singular
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                MPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = (k == 0) ? std::move(t) : t.div_exact(prev);
            }
            m[i][k] = MPoly();
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// Sylvester matrix of f (degree df) and g (degree dg) in the eliminated
// variable; entries are the MPoly coefficients.
MPoly sylvester_resultant(const UPoly& f, const UPoly& g) {
    const int df = f.deg(), dg = g.deg();
    const int n = df + dg;
    std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n));
    for (int r = 0; r < dg; ++r)
        for (int k = 0; k <= df; ++k) m[r][r + df - k] = f.c[k];
    for (int r = 0; r < df; ++r)
        for (int k = 0; k <= dg; ++k) m[dg + r][r + dg - k] = g.c[k];
    return bareiss_determinant(std::move(m));
}

// Pseudo-remainder of a by b in the main variable: lc(b)^(da-db+1) * a mod b.
UPoly pseudo_rem(UPoly a, const UPoly& b) {
    const int db = b.deg();
    const MPoly& lb = b.lc();
    int da = a.deg();
    int steps = da - db + 1;
    while (a.deg() >= db && !a.is_zero()) {
        int d = a.deg();
        MPoly top = a.lc();
        for (int k = 0; k <= d; ++k) a.c[k] = a.c[k] * lb;
        for (int k = 0; k <= db; ++k) a.c[d - db + k] -= top * b.c[k];
        a.trim();
        --steps;
    }
    // Keep the classical normalization lc(b)^(da-db+1) * a mod b.
    if (steps > 0) {
        MPoly scale = lb.pow(steps);
        for (auto& c : a.c) c = c * scale;
    }
    return a;
}

MPoly upoly_content(const UPoly& u) {
    MPoly g;
    for (const auto& c : u.c) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : mpoly_gcd(g, c);
        if (g.term_count() == 1 && g.total_degree() == 0 && (g.coeff(0, 0, 0) == 1)) break;
    }
    return g;
}

UPoly upoly_div(const UPoly& u, const MPoly& d) {
    UPoly r;
    r.c.reserve(u.c.size());
    for (const auto& c : u.c) r.c.push_back(c.is_zero() ? MPoly() : c.div_exact(d));
    return r;
}

// Subresultant PRS: gcd of two primitive polynomials in the main variable v.
MPoly primitive_prs_gcd(UPoly a, UPoly b, Var v) {
    if (a.deg() < b.deg()) std::swap(a, b);
    MPoly g(1L), h(1L);
    for (;;) {
        int delta = a.deg() - b.deg();
        UPoly r = pseudo_rem(a, b);
        if (r.is_zero()) break;
        if (r.deg() == 0) {
            // coprime up to content
            UPoly one;
            one.c = {MPoly(1L)};
            b = one;
            break;
        }
        a = b;
        MPoly div = g * h.pow(delta);
        b = upoly_div(r, div);
        g = a.lc();
        if (delta > 0) h = delta == 1 ? g : g.pow(delta).div_exact(h.pow(delta - 1));
    }
    // primitive part of b
    MPoly cont = upoly_content(b);
    MPoly out;
    for (int k = b.deg(); k >= 0; --k) {
        MPoly vk = MPoly::variable(v).pow(k);
        out += b.c[k].div_exact(cont) * vk;
    }
    return out.normalized();
}

std::optional<Var> main_var(const MPoly& a, const MPoly& b) {
    for (Var v : {Var::X, Var::B, Var::Xi})
        if (a.degree(v) > 0 || b.degree(v) > 0) return v;
    return std::nullopt;
}

} // namespace

MPoly resultant(const MPoly& f, const MPoly& g, Var v) {
    require(!f.is_zero() && !g.is_zero(), errc::invalid_argument, "resultant: zero input");
    UPoly uf = as_upoly(f, v), ug = as_upoly(g, v);
    require(uf.deg() > 0 && ug.deg() > 0, errc::invalid_argument,
            "resultant: inputs must have positive degree in the eliminated variable");
    return sylvester_resultant(uf, ug);
}

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    auto v = main_var(a, b);
    if (!v) {
        Int g;
        mpz_gcd(g.get_mpz_t(), a.coeff(0, 0, 0).get_mpz_t(), b.coeff(0, 0, 0).get_mpz_t());
        return MPoly(g);
    }
    UPoly ua = as_upoly(a, *v), ub = as_upoly(b, *v);
    MPoly ca = upoly_content(ua), cb = upoly_content(ub);
    MPoly cg = mpoly_gcd(ca, cb);
    if (ua.deg() == 0 || ub.deg() == 0) return cg; // one input is v-free
    MPoly pg = primitive_prs_gcd(upoly_div(ua, ca), upoly_div(ub, cb), *v);
    return (cg * pg).normalized();
}

MPoly squarefree_part(const MPoly& f, Var v) {
    require(!f.is_zero(), errc::invalid_argument, "squarefree_part: zero input");
    if (f.degree(v) == 0) return MPoly(1L);
    MPoly d = f.derivative(v);
    MPoly g = mpoly_gcd(f, d);
    return f.div_exact(g).normalized();
}

} // namespace greenwalk
