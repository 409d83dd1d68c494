#pragma once

#include <stdexcept>
#include <string>

namespace greenwalk {

// Error taxonomy. "user" errors come from bad inputs or resource limits and
// map to CLI exit code 1; "internal" errors mean a proven invariant failed
// (integrality, annihilation, elimination) and map to exit code 2.
enum class errc {
    invalid_argument,
    domain_error,
    not_invertible,
    bounds_too_small,
    ambiguous_relation,
    branch_mismatch,
    elimination_failure,
    degenerate_branch,
    insufficient_data,
    resource_limit,
    internal_error,
};

class error : public std::runtime_error {
  public:
    error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    errc kind() const { return kind_; }

    bool is_user_error() const {
        switch (kind_) {
            case errc::invalid_argument:
            case errc::domain_error:
            case errc::insufficient_data:
            case errc::resource_limit:
                return true;
            default:
                return false;
        }
    }

  private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

inline void require(bool cond, errc kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

} // namespace greenwalk
