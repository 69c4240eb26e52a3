#pragma once

#include <stdexcept>
#include <string>

namespace madlat {

struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what)
        : std::runtime_error("precision exhausted: " + what) {}
};

struct DegenerateTarget : std::runtime_error {
    explicit DegenerateTarget(const std::string& what)
        : std::runtime_error("degenerate target: " + what) {}
};

struct InsufficientData : std::runtime_error {
    explicit InsufficientData(const std::string& what)
        : std::runtime_error("insufficient data: " + what) {}
};

struct BracketFailure : std::runtime_error {
    explicit BracketFailure(const std::string& what)
        : std::runtime_error("bracket failure: " + what) {}
};

struct OutOfDomain : std::runtime_error {
    explicit OutOfDomain(const std::string& what)
        : std::runtime_error("out of domain: " + what) {}
};

struct ConventionViolation : std::runtime_error {
    explicit ConventionViolation(const std::string& what)
        : std::runtime_error("convention violation: " + what) {}
};

struct RankDeficient : std::runtime_error {
    explicit RankDeficient(const std::string& what)
        : std::runtime_error("rank deficient: " + what) {}
};

struct DichotomyViolation : std::runtime_error {
    explicit DichotomyViolation(const std::string& what)
        : std::runtime_error("dichotomy violation: " + what) {}
};

struct Extinction : std::runtime_error {
    explicit Extinction(const std::string& what)
        : std::runtime_error("extinction: " + what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what)
        : std::runtime_error("budget exceeded: " + what) {}
};

struct CharacteristicExceeded : std::runtime_error {
    explicit CharacteristicExceeded(const std::string& what)
        : std::runtime_error("characteristic exceeded: " + what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what)
        : std::runtime_error("parse error: " + what) {}
};

}  // namespace madlat
