#pragma once

#include <stdexcept>
#include <string>

namespace korenblum {

/// Argument outside the domain where a formula is defined.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An infinite product did not reach its truncation target within the term cap.
class nonconvergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A denominator factor vanished or went negative where a square root is taken.
class singularity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The criterion denominator is (numerically) zero, so no constant can be certified.
class degenerate_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Search bracket does not straddle the pass/fail boundary.
class bracket_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Pass/fail was observed to be non-monotone along a scan in c.
class monotonicity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent evaluations of the same quantity disagree beyond their stated tolerance.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool condition, const std::string& what) {
    if (!condition) throw domain_error(what);
}

}  // namespace detail
}  // namespace korenblum
