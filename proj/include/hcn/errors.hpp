#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hcn {

// A layout that cannot be evaluated: coincident nodes, links shorter than the
// minimum link distance, or dimensions that disagree with the parameters.
class InvalidScenario : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent configuration input.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The exhaustive search refuses instances whose enumeration size exceeds the
// evaluation budget. Never carries partial results.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(double required, std::uint64_t budget);

    double required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    double required_;
    std::uint64_t budget_;
};

}  // namespace hcn
