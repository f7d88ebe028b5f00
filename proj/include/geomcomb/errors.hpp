#pragma once

#include <stdexcept>
#include <string>

namespace geomcomb {

/// beta = 0 makes the explicit Stirling formula undefined (division by beta^k).
struct BetaZeroError : std::domain_error {
    BetaZeroError() : std::domain_error("beta = 0: explicit route undefined, use the recurrence") {}
};

/// Operations on T_n^{lambda,x} require lambda >= 1.
struct LambdaZeroError : std::domain_error {
    LambdaZeroError() : std::domain_error("lambda = 0: higher-order polynomial requires lambda >= 1") {}
};

/// alpha = 0 has no binomial-series branch; callers must switch to the exponential branch.
struct AlphaZeroError : std::domain_error {
    AlphaZeroError() : std::domain_error("alpha = 0: use the exponential series branch") {}
};

/// (1-u)^{-lambda} expansion needs u with zero constant term.
struct NonzeroConstantTermError : std::domain_error {
    NonzeroConstantTermError() : std::domain_error("series has nonzero constant term") {}
};

/// Brute-force enumeration refused above the configured cap.
struct CapExceededError : std::length_error {
    explicit CapExceededError(unsigned n, unsigned cap)
        : std::length_error("enumeration size " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap)) {}
};

/// Partition sum W(n,j) is defined only for j < n.
struct IndexOutOfRangeError : std::out_of_range {
    explicit IndexOutOfRangeError(const std::string& what) : std::out_of_range(what) {}
};

/// Closed-form W requested outside its validity range.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A falling-factorial denominator of the truncated expansion vanished.
struct PoleError : std::domain_error {
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace geomcomb
