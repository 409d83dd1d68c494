#include "greenwalk/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace greenwalk {

namespace {
const Int kZero = 0;
}

MPoly MPoly::monomial(const Int& c, int x, int b, int xi) {
    MPoly p;
    if (c != 0) p.terms_[exp_of(x, b, xi)] = c;
    return p;
}

MPoly MPoly::variable(Var v) {
    Exp e{0, 0, 0};
    e[static_cast<int>(v)] = 1;
    MPoly p;
    p.terms_[e] = 1;
    return p;
}

int MPoly::degree(Var v) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(v)]);
    return d;
}

int MPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
}

int MPoly::valuation(Var v) const {
    if (terms_.empty()) return 0;
    int m = -1;
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<int>(v)];
        m = (m < 0) ? k : std::min(m, k);
    }
    return m;
}

const Int& MPoly::coeff(int x, int b, int xi) const {
    auto it = terms_.find(exp_of(x, b, xi));
    return it == terms_.end() ? kZero : it->second;
}

void MPoly::add_term(const Exp& e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    Int tmp;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            tmp = ca * cb;
            r.add_term(e, tmp);
        }
    }
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MPoly MPoly::mul_term(const Int& c, int x, int b, int xi) const {
    MPoly r;
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[exp_of(e[0] + x, e[1] + b, e[2] + xi)] = v * c;
    return r;
}

MPoly MPoly::pow(int e) const {
    require(e >= 0, errc::invalid_argument, "MPoly::pow: negative exponent");
    MPoly r{Int(1)};
    MPoly base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

MPoly MPoly::derivative(Var v) const {
    int iv = static_cast<int>(v);
    MPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[iv] == 0) continue;
        Exp d = e;
        d[iv] -= 1;
        r.add_term(d, c * e[iv]);
    }
    return r;
}

MPoly MPoly::coeff_of(Var v, int k) const {
    int iv = static_cast<int>(v);
    MPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[iv] != k) continue;
        Exp d = e;
        d[iv] = 0;
        r.terms_[d] = c;
    }
    return r;
}

Int MPoly::content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

MPoly MPoly::div_int_exact(const Int& d) const {
    require(d != 0, errc::internal_error, "div_int_exact: zero divisor");
    MPoly r;
    for (const auto& [e, c] : terms_) {
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        require(rem == 0, errc::internal_error, "div_int_exact: inexact division");
        r.terms_[e] = q;
    }
    return r;
}

MPoly MPoly::div_exact(const MPoly& d) const {
    require(!d.is_zero(), errc::internal_error, "div_exact: zero divisor");
    MPoly rem = *this;
    MPoly quot;
    const auto& dl = *d.terms_.rbegin(); // leading term in lex order
    while (!rem.is_zero()) {
        const auto& rl = *rem.terms_.rbegin();
        Exp e{rl.first[0] - dl.first[0], rl.first[1] - dl.first[1], rl.first[2] - dl.first[2]};
        require(e[0] >= 0 && e[1] >= 0 && e[2] >= 0, errc::internal_error,
                "div_exact: monomial not divisible");
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rl.second.get_mpz_t(), dl.second.get_mpz_t());
        require(r == 0, errc::internal_error, "div_exact: coefficient not divisible");
        quot.add_term(e, q);
        rem -= d.mul_term(q, e[0], e[1], e[2]);
    }
    return quot;
}

MPoly MPoly::shift_down(Var v, int k) const {
    if (k == 0) return *this;
    int iv = static_cast<int>(v);
    MPoly r;
    for (const auto& [e, c] : terms_) {
        require(e[iv] >= k, errc::internal_error, "shift_down: valuation too small");
        Exp d = e;
        d[iv] -= k;
        r.terms_[d] = c;
    }
    return r;
}

MPoly MPoly::normalized() const {
    if (is_zero()) return *this;
    Int g = content();
    MPoly r = (g == 1) ? *this : div_int_exact(g);
    // Sign convention: within the block of highest X-degree, the term with the
    // lex-smallest (b, xi) exponents must have a positive coefficient. This
    // matches the customary way these relations are written (leading X-block
    // starts with a positive low-order coefficient).
    int dx = r.degree(Var::X);
    const Int* pivot = nullptr;
    for (const auto& [e, c] : r.terms_) {
        if (e[0] == dx) {
            pivot = &c;
            break; // map order: first hit has lex-smallest (b, xi)
        }
    }
    if (pivot && *pivot < 0) r = -r;
    return r;
}

MPoly MPoly::subs_x_times_b() const {
    MPoly r;
    for (const auto& [e, c] : terms_) r.terms_[exp_of(e[0], e[1] + e[0], e[2])] = c;
    return r;
}

std::string MPoly::str(const std::string& xname) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print from the leading term down.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int a = c;
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
        bool has_var = e[0] || e[1] || e[2];
        bool coeff_shown = (a != 1) || !has_var;
        if (coeff_shown) os << a.get_str();
        const char* names[3] = {xname.c_str(), "b", "xi"};
        bool prev = coeff_shown;
        for (int v = 0; v < kNumVars; ++v) {
            if (!e[v]) continue;
            if (prev) os << "*";
            os << names[v];
            if (e[v] > 1) os << "^" << e[v];
            prev = true;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    const std::string& xname;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    // variable name or empty
    int match_var() {
        skip_ws();
        if (s.compare(i, xname.size(), xname) == 0) {
            i += xname.size();
            return 0;
        }
        if (i + 1 < s.size() && s.compare(i, 2, "xi") == 0) {
            i += 2;
            return 2;
        }
        if (i < s.size() && s[i] == 'b') {
            i += 1;
            return 1;
        }
        return -1;
    }

    Int parse_int() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        require(i > start, errc::invalid_argument, "mpoly_parse: expected integer at '" + s.substr(start, 8) + "'");
        return Int(s.substr(start, i - start));
    }

    int parse_exponent() {
        if (!eat('^')) return 1;
        Int e = parse_int();
        return static_cast<int>(e.get_si());
    }

    // term := [int] { '*'? var ['^' int] }*
    MPoly parse_term() {
        skip_ws();
        Int coeff = 1;
        Exp e{0, 0, 0};
        bool any = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff = parse_int();
            any = true;
        }
        for (;;) {
            std::size_t save = i;
            bool star = eat('*');
            int v = match_var();
            if (v < 0) {
                require(!star, errc::invalid_argument, "mpoly_parse: dangling '*'");
                i = save;
                break;
            }
            e[v] += parse_exponent();
            any = true;
        }
        require(any, errc::invalid_argument, "mpoly_parse: empty term");
        return MPoly::monomial(coeff, e[0], e[1], e[2]);
    }

    MPoly parse() {
        MPoly total;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        for (;;) {
            MPoly t = parse_term();
            total += neg ? -t : t;
            skip_ws();
            if (i >= s.size()) break;
            if (eat('-'))
                neg = true;
            else if (eat('+'))
                neg = false;
            else
                fail(errc::invalid_argument, "mpoly_parse: unexpected character '" + s.substr(i, 8) + "'");
        }
        return total;
    }
};

} // namespace

MPoly mpoly_parse(const std::string& text, const std::string& xname) {
    Parser p{text, xname};
    return p.parse();
}

} // namespace greenwalk
