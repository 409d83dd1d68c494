#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <tuple>
#include <vector>

#include "greenwalk/exact_algebra.hpp"

namespace greenwalk {

XiSeries evaluate_at_series(const MPoly& poly, const XiSeries& s) {
    const int order = s.order();
    const int dx = poly.degree(Var::X);
    XiSeries acc(order);
    for (int i = dx; i >= 0; --i) {
        acc = acc * s;
        acc += xiseries_from_mpoly(poly.coeff_of(Var::X, i), order);
    }
    return acc;
}

bool annihilates(const MPoly& poly, const XiSeries& s) {
    return evaluate_at_series(poly, s).is_zero();
}

namespace {

// Word-size primes for rank probes and kernel reconstruction. Wrong modular
// results can only cost retries: every returned relation is certified by
// exact substitution, and "kernel empty mod p" is already rigorous over Q.
constexpr std::uint64_t kPrimes[] = {2147483647ULL, 2147483629ULL, 2147483587ULL,
                                     2147483579ULL, 2147483563ULL, 2147483549ULL};
constexpr int kNumPrimes = 6;
constexpr int kRowMargin = 48;
constexpr int kMaxOrder = 420;

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

// num/den mod p; false if den vanishes mod p.
bool rat_mod(const Rat& q, std::uint64_t p, std::uint64_t& out) {
    Int num = q.get_num(), den = q.get_den();
    std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p);
    if (d == 0) return false;
    std::uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), p);
    out = n * mod_inv(d, p) % p;
    return true;
}

struct ColumnSet {
    DegreeBounds b;
    std::vector<std::array<int, 3>> cols; // (i, j, k) lex ascending

    explicit ColumnSet(const DegreeBounds& bounds) : b(bounds) {
        for (int i = 0; i <= b.dx; ++i)
            for (int j = 0; j <= b.db; ++j)
                for (int k = 0; k <= b.dxi; ++k) cols.push_back({i, j, k});
    }
    int size() const { return static_cast<int>(cols.size()); }
};

// Exact powers of the branch series, extended on demand.
struct PowerTable {
    XiSeries s;
    std::vector<XiSeries> pw; // pw[i] = s^i

    explicit PowerTable(XiSeries series) : s(std::move(series)) {
        XiSeries one(s.order());
        one.set_coeff(0, XiPoly(1L));
        pw.push_back(std::move(one));
    }

    void ensure_power(int dmax) {
        while (static_cast<int>(pw.size()) <= dmax) pw.push_back(pw.back() * s);
    }

    void reset_series(XiSeries series) {
        int dmax = static_cast<int>(pw.size()) - 1;
        s = std::move(series);
        pw.clear();
        XiSeries one(s.order());
        one.set_coeff(0, XiPoly(1L));
        pw.push_back(std::move(one));
        ensure_power(dmax);
    }

    // Largest xi-degree among coefficients of s^i (i <= dmax) at orders <= m.
    int width_at(int dmax, int m) const {
        int w = 0;
        for (int i = 0; i <= dmax; ++i)
            for (int mm = 0; mm <= m; ++mm) w = std::max(w, pw[i].coeff(mm).degree());
        return w;
    }
};

// Mod-p image of the power table.
struct ModPowers {
    std::uint64_t p = 0;
    // mp[i][m] = xi-coefficient residues of (s^i)[b^m]
    std::vector<std::vector<std::vector<std::uint64_t>>> mp;

    bool build(const PowerTable& pt, std::uint64_t prime) {
        p = prime;
        mp.assign(pt.pw.size(), {});
        for (std::size_t i = 0; i < pt.pw.size(); ++i) {
            const XiSeries& s = pt.pw[i];
            mp[i].resize(s.order() + 1);
            for (int m = 0; m <= s.order(); ++m) {
                const auto& cs = s.coeff(m).coeffs();
                mp[i][m].resize(cs.size());
                for (std::size_t l = 0; l < cs.size(); ++l)
                    if (!rat_mod(cs[l], p, mp[i][m][l])) return false;
            }
        }
        return true;
    }

    std::uint64_t entry(int i, int m, int l) const {
        if (m < 0 || m >= static_cast<int>(mp[i].size())) return 0;
        const auto& row = mp[i][m];
        if (l < 0 || l >= static_cast<int>(row.size())) return 0;
        return row[l];
    }
};

struct ElimResult {
    int rank = 0;
    std::vector<int> pivot_col;                  // pivot column of each pivot row
    std::vector<std::vector<std::uint64_t>> rr;  // rows after elimination
};

// Gaussian elimination mod p; optionally back-substitutes to RREF so the
// kernel can be read off.
ElimResult eliminate(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p, bool rref) {
    ElimResult res;
    const int ncols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    int r = 0;
    for (int c = 0; c < ncols && r < static_cast<int>(rows.size()); ++c) {
        int pivot = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][c] % p != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[r], rows[pivot]);
        std::uint64_t inv = mod_inv(rows[r][c] % p, p);
        for (int j = c; j < ncols; ++j) rows[r][j] = rows[r][j] % p * inv % p;
        for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
            std::uint64_t f = rows[i][c] % p;
            if (!f) continue;
            std::uint64_t neg = p - f;
            for (int j = c; j < ncols; ++j) rows[i][j] = (rows[i][j] + neg * rows[r][j]) % p;
        }
        res.pivot_col.push_back(c);
        ++r;
    }
    res.rank = r;
    if (rref) {
        for (int i = r - 1; i >= 0; --i) {
            int pc = res.pivot_col[i];
            for (int k = 0; k < i; ++k) {
                std::uint64_t f = rows[k][pc] % p;
                if (!f) continue;
                std::uint64_t neg = p - f;
                for (int j = pc; j < ncols; ++j) rows[k][j] = (rows[k][j] + neg * rows[i][j]) % p;
            }
        }
        rows.resize(r);
        res.rr = std::move(rows);
    }
    return res;
}

// Rational reconstruction of r mod M with |num|, den <= sqrt(M/2).
bool rat_recon(const Int& r, const Int& M, Rat& out) {
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(M / 2).get_mpz_t());
    Int r0 = M, r1 = r % M, t0 = 0, t1 = 1;
    if (r1 < 0) r1 += M;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (t1 == 0) return false;
    Int num = r1, den = t1;
    if (den < 0) {
        den = -den;
        num = -num;
    }
    if (den > bound) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) return false;
    out = Rat(num) / Rat(den);
    return true;
}

class RelationSearch {
  public:
    RelationSearch(const XiSeries& s, const SeriesExtender& extend)
        : pt_(s), extend_(extend) {}

    // Ensure rows are sufficient for a probe with `cols` columns and that the
    // series order covers the verification target.
    void ensure_capacity(int dmax, int cols, int verify_order) {
        pt_.ensure_power(dmax);
        for (;;) {
            int have = available_rows(dmax);
            if (pt_.s.order() >= verify_order && have >= cols + kRowMargin) return;
            if (!extend_) {
                require(have >= cols + 8, errc::insufficient_data,
                        "minimal_relation: series too short for the requested degree bounds");
                return;
            }
            int target = std::max(verify_order, pt_.s.order() + pt_.s.order() / 2 + 8);
            require(target <= kMaxOrder, errc::insufficient_data,
                    "minimal_relation: series extension limit reached");
            pt_.reset_series(extend_(target));
            mods_.clear();
            probe_cache_.clear();
        }
    }

    int available_rows(int dmax) {
        pt_.ensure_power(dmax);
        int rows = 0;
        for (int m = 0; m <= pt_.s.order(); ++m) rows += 1 + pt_.width_at(dmax, m);
        return rows;
    }

    int nullity(const DegreeBounds& b, int prime_idx) {
        auto key = std::make_tuple(b.dx, b.db, b.dxi, prime_idx);
        auto it = probe_cache_.find(key);
        if (it != probe_cache_.end()) return it->second;
        ColumnSet cs(b);
        auto rows = build_rows(cs, prime_idx, cs.size() + kRowMargin);
        int null = cs.size() - eliminate(std::move(rows), kPrimes[prime_idx], false).rank;
        probe_cache_[key] = null;
        return null;
    }

    // Reconstruct the one-dimensional kernel at the given bounds; empty
    // optional if reconstruction fails (caller falls back).
    std::optional<MPoly> reconstruct(const DegreeBounds& b, int first_prime) {
        ColumnSet cs(b);
        std::vector<std::vector<Int>> residues; // per used prime, per column
        std::vector<Int> prime_vals;
        int anchor = -1;
        for (int pi = first_prime; pi < kNumPrimes; ++pi) {
            auto kv = kernel_vector(cs, pi);
            if (!kv) continue;
            if (anchor < 0) {
                for (anchor = cs.size() - 1; anchor >= 0; --anchor)
                    if ((*kv)[anchor] != 0) break;
                if (anchor < 0) return std::nullopt;
            }
            if ((*kv)[anchor] == 0) continue; // unlucky prime
            std::uint64_t p = kPrimes[pi];
            std::uint64_t inv = mod_inv((*kv)[anchor], p);
            std::vector<Int> res(cs.size());
            for (int c = 0; c < cs.size(); ++c) res[c] = Int(((*kv)[c] * inv) % p);
            residues.push_back(std::move(res));
            prime_vals.push_back(Int(static_cast<unsigned long>(p)));
            if (residues.size() >= 3) {
                auto poly = crt_and_lift(cs, residues, prime_vals);
                if (poly && annihilates(*poly, pt_.s)) return poly;
            }
        }
        if (!residues.empty()) {
            auto poly = crt_and_lift(cs, residues, prime_vals);
            if (poly && annihilates(*poly, pt_.s)) return poly;
        }
        return std::nullopt;
    }

    // Exact rational kernel basis at the given bounds (small systems only).
    std::vector<MPoly> rational_kernel(const DegreeBounds& b) {
        ColumnSet cs(b);
        auto rows = build_exact_rows(cs, cs.size() + kRowMargin);
        // Gauss-Jordan over Q.
        int ncols = cs.size();
        int r = 0;
        std::vector<int> pivot_col;
        for (int c = 0; c < ncols && r < static_cast<int>(rows.size()); ++c) {
            int pivot = -1;
            for (int i = r; i < static_cast<int>(rows.size()); ++i)
                if (rows[i][c] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) continue;
            std::swap(rows[r], rows[pivot]);
            Rat inv = Rat(1) / rows[r][c];
            for (int j = c; j < ncols; ++j) rows[r][j] *= inv;
            for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
                if (i == r || rows[i][c] == 0) continue;
                Rat f = rows[i][c];
                for (int j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
            }
            pivot_col.push_back(c);
            ++r;
        }
        std::vector<bool> is_pivot(ncols, false);
        for (int c : pivot_col) is_pivot[c] = true;
        std::vector<MPoly> basis;
        for (int fc = 0; fc < ncols; ++fc) {
            if (is_pivot[fc]) continue;
            std::vector<Rat> v(ncols, Rat(0));
            v[fc] = 1;
            for (int i = 0; i < r; ++i) v[pivot_col[i]] = -rows[i][fc];
            basis.push_back(vector_to_poly(cs, v));
        }
        return basis;
    }

    const XiSeries& series() const { return pt_.s; }

  private:
    PowerTable pt_;
    SeriesExtender extend_;
    std::vector<std::pair<int, ModPowers>> mods_; // (prime index, image)
    std::map<std::tuple<int, int, int, int>, int> probe_cache_;

    const ModPowers& mod_powers(int prime_idx) {
        for (auto& [pi, mp] : mods_)
            if (pi == prime_idx && mp.mp.size() == pt_.pw.size()) return mp;
        ModPowers mp;
        require(mp.build(pt_, kPrimes[prime_idx]), errc::internal_error,
                "relation search: denominator vanishes modulo probe prime");
        for (auto& [pi, old] : mods_) {
            if (pi == prime_idx) {
                old = std::move(mp);
                return old;
            }
        }
        mods_.emplace_back(prime_idx, std::move(mp));
        return mods_.back().second;
    }

    std::vector<std::vector<std::uint64_t>> build_rows(const ColumnSet& cs, int prime_idx,
                                                       int row_cap) {
        const ModPowers& mp = mod_powers(prime_idx);
        std::vector<std::vector<std::uint64_t>> rows;
        for (int m = 0; m <= pt_.s.order() && static_cast<int>(rows.size()) < row_cap; ++m) {
            int lmax = cs.b.dxi + pt_.width_at(cs.b.dx, m);
            for (int l = 0; l <= lmax && static_cast<int>(rows.size()) < row_cap; ++l) {
                std::vector<std::uint64_t> row(cs.size());
                bool nonzero = false;
                for (int c = 0; c < cs.size(); ++c) {
                    auto [i, j, k] = std::tuple(cs.cols[c][0], cs.cols[c][1], cs.cols[c][2]);
                    std::uint64_t v = mp.entry(i, m - j, l - k);
                    row[c] = v;
                    nonzero |= (v != 0);
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
        return rows;
    }

    std::vector<std::vector<Rat>> build_exact_rows(const ColumnSet& cs, int row_cap) {
        std::vector<std::vector<Rat>> rows;
        for (int m = 0; m <= pt_.s.order() && static_cast<int>(rows.size()) < row_cap; ++m) {
            int lmax = cs.b.dxi + pt_.width_at(cs.b.dx, m);
            for (int l = 0; l <= lmax && static_cast<int>(rows.size()) < row_cap; ++l) {
                std::vector<Rat> row(cs.size());
                bool nonzero = false;
                for (int c = 0; c < cs.size(); ++c) {
                    const auto& col = cs.cols[c];
                    int i = col[0], j = col[1], k = col[2];
                    Rat v(0);
                    if (m - j >= 0 && m - j <= pt_.s.order() && l - k >= 0)
                        v = pt_.pw[i].coeff(m - j).coeff(l - k);
                    nonzero |= (v != 0);
                    row[c] = std::move(v);
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
        return rows;
    }

    std::optional<std::vector<std::uint64_t>> kernel_vector(const ColumnSet& cs, int prime_idx) {
        auto rows = build_rows(cs, prime_idx, cs.size() + kRowMargin);
        auto res = eliminate(std::move(rows), kPrimes[prime_idx], true);
        int null = cs.size() - res.rank;
        if (null != 1) return std::nullopt;
        std::vector<bool> is_pivot(cs.size(), false);
        for (int c : res.pivot_col) is_pivot[c] = true;
        int fc = -1;
        for (int c = 0; c < cs.size(); ++c)
            if (!is_pivot[c]) fc = c;
        std::vector<std::uint64_t> v(cs.size(), 0);
        v[fc] = 1;
        std::uint64_t p = kPrimes[prime_idx];
        for (int i = 0; i < res.rank; ++i) v[res.pivot_col[i]] = (p - res.rr[i][fc] % p) % p;
        return v;
    }

    std::optional<MPoly> crt_and_lift(const ColumnSet& cs, const std::vector<std::vector<Int>>& residues,
                                      const std::vector<Int>& primes) {
        Int M = 1;
        for (const Int& p : primes) M *= p;
        std::vector<Rat> vals(cs.size());
        for (int c = 0; c < cs.size(); ++c) {
            // CRT combine
            Int x = 0, mod = 1;
            for (std::size_t t = 0; t < primes.size(); ++t) {
                const Int& p = primes[t];
                Int cur = x % p;
                if (cur < 0) cur += p;
                Int delta = (residues[t][c] - cur) % p;
                if (delta < 0) delta += p;
                Int inv;
                mpz_invert(inv.get_mpz_t(), Int(mod % p).get_mpz_t(), p.get_mpz_t());
                x += mod * ((delta * inv) % p);
                mod *= p;
            }
            if (!rat_recon(x, M, vals[c])) return std::nullopt;
        }
        return vector_to_poly(cs, vals);
    }

    MPoly vector_to_poly(const ColumnSet& cs, const std::vector<Rat>& v) {
        Int lcm = 1;
        for (const Rat& q : v)
            if (q != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        MPoly poly;
        for (int c = 0; c < cs.size(); ++c) {
            if (v[c] == 0) continue;
            Rat scaled = v[c] * Rat(lcm);
            poly.add_term(exp_of(cs.cols[c][0], cs.cols[c][1], cs.cols[c][2]), Int(scaled.get_num()));
        }
        return poly.normalized();
    }
};

MPoly relation_from_search(RelationSearch& search, const DegreeBounds& bounds,
                           const MPoly* candidate = nullptr) {
    for (int dx = 1; dx <= bounds.dx; ++dx) {
        DegreeBounds full{dx, bounds.db, bounds.dxi};
        search.ensure_capacity(dx, (dx + 1) * (bounds.db + 1) * (bounds.dxi + 1),
                               2 * (dx + bounds.db + bounds.dxi) + 6);
        for (int prime = 0; prime + 1 < kNumPrimes; ++prime) {
            if (search.nullity(full, prime) == 0) break; // rigorous: empty over Q
            // locate the lexicographically minimal bounds
            DegreeBounds at = full;
            for (at.db = 0; at.db <= bounds.db; ++at.db)
                if (search.nullity({dx, at.db, bounds.dxi}, prime) > 0) break;
            for (at.dxi = 0; at.dxi <= bounds.dxi; ++at.dxi)
                if (search.nullity(at, prime) > 0) break;
            if (search.nullity(at, prime) == 1) {
                // A verified candidate whose degrees sit exactly at the
                // located minimal bounds spans the kernel already.
                if (candidate && candidate->degree(Var::X) == at.dx &&
                    candidate->degree(Var::B) == at.db && candidate->degree(Var::Xi) == at.dxi)
                    return *candidate;
                auto poly = search.reconstruct(at, prime);
                if (poly) return *poly;
            }
            // Modular evidence was inconclusive (several kernel vectors, or
            // reconstruction failed): settle it over Q.
            auto basis = search.rational_kernel(at);
            std::vector<MPoly> verified;
            for (auto& p : basis)
                if (annihilates(p, search.series())) verified.push_back(std::move(p));
            if (verified.size() == 1) return verified[0].normalized();
            if (verified.size() > 1)
                fail(errc::ambiguous_relation,
                     "minimal_relation: multiple independent minimal relations: [" +
                         verified[0].str() + "] and [" + verified[1].str() + "]");
            // spurious modular kernel; try the next prime
        }
    }
    fail(errc::bounds_too_small, "minimal_relation: no annihilating polynomial within bounds");
}

} // namespace

MPoly minimal_relation(const XiSeries& s, const DegreeBounds& bounds, const SeriesExtender& extend) {
    require(bounds.dx >= 1 && bounds.db >= 0 && bounds.dxi >= 0, errc::invalid_argument,
            "minimal_relation: bounds must allow X-degree >= 1");
    if (s.is_zero()) return MPoly::variable(Var::X);
    RelationSearch search(s, extend);
    return relation_from_search(search, bounds);
}

MPoly strip_to_minimal(const MPoly& candidate, const XiSeries& s, const SeriesExtender& extend) {
    require(!candidate.is_zero(), errc::elimination_failure, "strip_to_minimal: zero candidate");
    if (s.is_zero()) {
        require(candidate.valuation(Var::X) >= 1, errc::elimination_failure,
                "strip_to_minimal: candidate does not annihilate the zero branch");
        return MPoly::variable(Var::X);
    }
    MPoly raw = candidate;
    // b^k and X^k factors never annihilate a nonzero branch; drop them.
    raw = raw.shift_down(Var::B, raw.valuation(Var::B));
    raw = raw.shift_down(Var::X, raw.valuation(Var::X));
    raw = raw.normalized();
    require(raw.degree(Var::X) >= 1, errc::elimination_failure,
            "strip_to_minimal: eliminant is independent of the branch variable");

    RelationSearch search(s, extend);
    DegreeBounds bounds{raw.degree(Var::X), raw.degree(Var::B), raw.degree(Var::Xi)};
    search.ensure_capacity(1, 16, 30);
    require(annihilates(raw, search.series()), errc::elimination_failure,
            "strip_to_minimal: candidate does not annihilate the branch series");
    return relation_from_search(search, bounds, &raw);
}

} // namespace greenwalk
