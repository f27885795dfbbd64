#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace galepoly {

struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct InstanceTooLarge : std::runtime_error {
    explicit InstanceTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct NonGenericTheta : std::runtime_error {
    explicit NonGenericTheta(const std::string& what) : std::runtime_error(what) {}
};

struct CrossCheckFailure : std::runtime_error {
    explicit CrossCheckFailure(const std::string& what) : std::runtime_error(what) {}
};

// Knobs shared by every enumeration-backed operation. The budget counts
// nodes of the support-enumeration tree; exceeding it raises BudgetExceeded.
struct EnumOptions {
    std::uint64_t budget = UINT64_C(1) << 30;
    int jobs = 1;
};

}  // namespace galepoly
