#pragma once

#include <stdexcept>
#include <string>

namespace ppmat {

/// Input violates a structural invariant (malformed partition, negative entry, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Well-formed input that lies outside the domain of an operation
/// (e.g. a plane partition with too many rows for the requested Phi).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

namespace detail {

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw InvalidArgument(msg);
}

inline void require_domain(bool cond, const std::string& msg) {
    if (!cond) throw DomainError(msg);
}

}  // namespace detail
}  // namespace ppmat
