#ifndef TPX_ERRORS_HPP
#define TPX_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace tpx {

/// Problem instance violates its basic contract (fewer than three clients,
/// cost vector of the wrong length, negative costs, ...).
class InvalidProblemError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Client index outside [1, N].
class InvalidClientError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// An exhaustive enumeration would exceed its configured budget.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Multiplicative inverse of zero.
class DivisionByZeroError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Linear system is rank-deficient or inconsistent.
class NoUniqueSolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A receiving pattern admits no transversal. Carries one deficient row set:
/// the rows collectively touch fewer columns than their count.
class HallViolationError : public std::runtime_error {
public:
    HallViolationError(const std::string& msg, std::vector<int> rows)
        : std::runtime_error(msg), rows_(std::move(rows)) {}

    const std::vector<int>& deficient_rows() const noexcept { return rows_; }

private:
    std::vector<int> rows_;
};

/// Verified code construction exhausted its retry budget.
class ConstructionError : public std::runtime_error {
public:
    ConstructionError(const std::string& msg, int attempts)
        : std::runtime_error(msg), attempts_(attempts) {}

    int attempts() const noexcept { return attempts_; }

private:
    int attempts_ = 0;
};

} // namespace tpx

#endif // TPX_ERRORS_HPP
