#pragma once

#include <cstdint>

namespace pfglm::field_ops {

/// Per-thread tally of scalar field operations performed by Ball arithmetic.
struct Counts {
    std::uint64_t add = 0;
    std::uint64_t mul = 0;
    std::uint64_t inv = 0;

    std::uint64_t total() const noexcept { return add + mul + inv; }

    Counts operator-(const Counts& o) const noexcept { return {add - o.add, mul - o.mul, inv - o.inv}; }
    Counts& operator+=(const Counts& o) noexcept {
        add += o.add;
        mul += o.mul;
        inv += o.inv;
        return *this;
    }
};

/// The calling thread's running tally.
Counts& local() noexcept;

/// Measures the operations performed on this thread between construction and
/// `elapsed()`.
class Scope {
public:
    Scope() noexcept : start_(local()) {}
    Counts elapsed() const noexcept { return local() - start_; }

private:
    Counts start_;
};

}  // namespace pfglm::field_ops
