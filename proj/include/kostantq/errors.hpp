#pragma once

#include <stdexcept>
#include <string>

#include "kostantq/bigint.hpp"

namespace kostantq {

/// Rank outside the legal range for the requested family.
class InvalidRank : public std::invalid_argument {
public:
    explicit InvalidRank(const std::string& what) : std::invalid_argument(what) {}
};

class UnsupportedVariant : public std::invalid_argument {
public:
    explicit UnsupportedVariant(const std::string& what) : std::invalid_argument(what) {}
};

class DivisionByZero : public std::domain_error {
public:
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// An exact value that was expected to collapse to a polynomial did not.
/// Carries a rendering of the offending non-polynomial residue. When thrown
/// from the closed-form evaluator this indicates an internal inconsistency,
/// not a user error.
class NotPolynomial : public std::logic_error {
public:
    explicit NotPolynomial(const std::string& residue)
        : std::logic_error("value is not a polynomial: " + residue), residue_(residue) {}
    const std::string& residue() const noexcept { return residue_; }

private:
    std::string residue_;
};

/// Enumeration would produce more partitions than the caller's limit.
/// Carries the exact count so callers can report it.
class LimitExceeded : public std::runtime_error {
public:
    LimitExceeded(BigInt count, std::uint64_t limit)
        : std::runtime_error("enumeration limit " + std::to_string(limit) +
                             " exceeded: exact count is " + count.str()),
          count_(std::move(count)) {}
    const BigInt& count() const noexcept { return count_; }

private:
    BigInt count_;
};

}  // namespace kostantq
