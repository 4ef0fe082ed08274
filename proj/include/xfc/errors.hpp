#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace xfc {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Instance exceeds a hard size cap of an exact algorithm.
class InstanceTooLarge : public Error {
public:
    explicit InstanceTooLarge(const std::string& what) : Error(what) {}
};

/// An enumeration or search exceeded its caller-supplied budget.
/// Carries the partial count produced before the budget was hit.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t partial)
        : Error(what), partial_count(partial) {}
    std::uint64_t partial_count;
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

/// A maximization problem violates its approximation guarantee
/// (some objective value exceeds f*). Message names the witness.
class GuaranteeViolation : public Error {
public:
    explicit GuaranteeViolation(const std::string& what) : Error(what) {}
};

/// A constructed identity failed to verify; signals a bug, not bad input.
class IdentityViolation : public Error {
public:
    explicit IdentityViolation(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace xfc
