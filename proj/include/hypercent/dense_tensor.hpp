#pragma once

#include <span>
#include <vector>

namespace hypercent {

/// Fully materialized order-m component array, N^m doubles in row-major
/// layout. Construction rejects N^m > 10^7.
class DenseTensor {
  public:
    DenseTensor(int order, int node_count);

    int order() const { return order_; }
    int node_count() const { return n_; }

    double at(std::span<const int> index) const { return values_[offset(index)]; }
    double& at(std::span<const int> index) { return values_[offset(index)]; }

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    bool operator==(const DenseTensor&) const = default;

  private:
    std::size_t offset(std::span<const int> index) const;

    int order_ = 0;
    int n_ = 0;
    std::vector<double> values_;
};

/// Odometer step over index tuples in row-major order; returns false
/// after the last tuple wraps back to all zeros.
bool advance_index(std::span<int> index, int node_count);

}  // namespace hypercent
