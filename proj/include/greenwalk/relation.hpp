#pragma once

#include <string>
#include <vector>

#include "greenwalk/mpoly.hpp"
#include "greenwalk/xiseries.hpp"

namespace greenwalk {

// Walk specification: the amalgamation indices (m_1, ..., m_N), each >= 2.
// The generating set has size |S| = 2N.
struct WalkSpec {
    std::vector<int> m;

    explicit WalkSpec(std::vector<int> indices) : m(std::move(indices)) {
        require(!m.empty(), errc::invalid_argument, "WalkSpec: need at least one factor");
        for (int v : m)
            require(v >= 2, errc::invalid_argument, "WalkSpec: every index must be >= 2");
    }

    int factors() const { return static_cast<int>(m.size()); }
    int s_size() const { return 2 * factors(); }
    bool all_even() const {
        for (int v : m)
            if (v % 2) return false;
        return true;
    }
    bool all_two() const {
        for (int v : m)
            if (v != 2) return false;
        return true;
    }
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
        return s;
    }
};

// An annihilating polynomial together with the branch it annihilates: the
// variable tag says which transform letter plays X, and the seed holds the
// first orders of the intended root.
struct AlgebraicRelation {
    MPoly poly;
    char letter = 'C'; // 'C' or 'R'
    XiSeries seed;

    std::string poly_str() const { return poly.str(std::string(1, letter)); }
};

// Extends a valuation-1 branch of rel to the given order by linear
// coefficient recursion on the substituted form X = b*u: each new
// coefficient of u is solved from the linear term of the relation.
// The seed must contain at least the first nonzero coefficient; known seed
// orders are checked against the recursion.
XiSeries extend_branch(const MPoly& rel, const XiSeries& seed, int order);

} // namespace greenwalk
