#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "faulhaber/exact_arith.hpp"

namespace faulhaber {

/*
 * B_0..B_max with the B_1 = -1/2 convention. Construction checks the
 * structural values: B_0 = 1, B_1 = -1/2 and B_m = 0 for odd m >= 3.
 */
class BernoulliTable {
public:
    explicit BernoulliTable(std::vector<Rational> values);

    std::size_t size() const { return values_.size(); }
    /// Largest index held.
    unsigned long max_k() const { return static_cast<unsigned long>(values_.size()) - 1; }

    const Rational& operator[](std::size_t m) const { return values_.at(m); }
    std::span<const Rational> values() const { return values_; }

    friend bool operator==(const BernoulliTable&, const BernoulliTable&) = default;

private:
    std::vector<Rational> values_;
};

}  // namespace faulhaber
