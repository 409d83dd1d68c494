#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "greenwalk/error.hpp"

namespace greenwalk {

using Int = mpz_class;
using Rat = mpq_class;

// The three polynomial variables, in decreasing lexicographic precedence.
// X is the generic transform letter (printed as C, R or G depending on role),
// b the series variable, xi the amalgam element lambda_p + lambda_{-p}.
enum class Var : int { X = 0, B = 1, Xi = 2 };

inline constexpr int kNumVars = 3;

// Exponent triple (deg_X, deg_b, deg_xi). std::array's lexicographic order
// realises the X > b > xi term order.
using Exp = std::array<int, kNumVars>;

inline Exp exp_of(int x, int b, int xi) { return Exp{x, b, xi}; }

// Exact multivariate polynomial over arbitrary-precision integers in
// (X, b, xi). Canonical form: no zero coefficients are stored; the map keeps
// terms sorted in the X > b > xi lex order.
class MPoly {
  public:
    using TermMap = std::map<Exp, Int>;

    MPoly() = default;
    explicit MPoly(const Int& c) {
        if (c != 0) terms_[exp_of(0, 0, 0)] = c;
    }
    explicit MPoly(long c) : MPoly(Int(c)) {}

    static MPoly monomial(const Int& c, int x, int b, int xi);
    static MPoly variable(Var v);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    int degree(Var v) const;
    int total_degree() const;
    // Lowest exponent of v appearing in any term (0 for the zero polynomial).
    int valuation(Var v) const;

    const Int& coeff(int x, int b, int xi) const;
    void add_term(const Exp& e, const Int& c);

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly operator-() const;
    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

    MPoly mul_term(const Int& c, int x, int b, int xi) const;
    MPoly pow(int e) const;

    // Derivative with respect to v.
    MPoly derivative(Var v) const;

    // Coefficient of v^k, a polynomial with v-degree zero.
    MPoly coeff_of(Var v, int k) const;

    // GCD of all integer coefficients (positive; 0 for the zero polynomial).
    Int content() const;

    // Exact division by an integer; every coefficient must be divisible.
    MPoly div_int_exact(const Int& d) const;
    // Exact polynomial division; fails with internal_error if not exact.
    MPoly div_exact(const MPoly& d) const;

    // Divide out v^valuation(v).
    MPoly shift_down(Var v, int k) const;

    // Content-normalized form: integer content 1 and the canonical sign
    // convention (within the highest-X block, the lex-lowest (b, xi) term has
    // a positive coefficient).
    MPoly normalized() const;

    // Substitute X^i b^j -> X^i b^(i+j) (monomial substitution X := b*X).
    MPoly subs_x_times_b() const;

    std::string str(const std::string& xname = "X") const;

  private:
    TermMap terms_;
};

// Parse the textual form produced by MPoly::str (integer coefficients,
// variables named by xname / "b" / "xi", '^' powers, optional '*').
MPoly mpoly_parse(const std::string& text, const std::string& xname = "X");

} // namespace greenwalk
