#include "hypercent/dense_tensor.hpp"

#include <string>

#include "hypercent/errors.hpp"

namespace hypercent {

DenseTensor::DenseTensor(int order, int node_count) : order_(order), n_(node_count) {
    if (order < 1 || node_count < 1) fail(errc::too_large, "tensor needs order >= 1 and N >= 1");
    std::size_t total = 1;
    for (int i = 0; i < order; ++i) {
        total *= static_cast<std::size_t>(node_count);
        if (total > 10'000'000)
            fail(errc::too_large, "N^m exceeds the dense cap (N=" + std::to_string(node_count) +
                                      ", m=" + std::to_string(order) + ")");
    }
    values_.assign(total, 0.0);
}

std::size_t DenseTensor::offset(std::span<const int> index) const {
    if (static_cast<int>(index.size()) != order_) fail(errc::wrong_arity, "index arity != order");
    std::size_t off = 0;
    for (int v : index) {
        if (v < 0 || v >= n_) fail(errc::index_out_of_range, "index " + std::to_string(v));
        off = off * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }
    return off;
}

bool advance_index(std::span<int> index, int node_count) {
    for (std::size_t pos = index.size(); pos-- > 0;) {
        if (++index[pos] < node_count) return true;
        index[pos] = 0;
    }
    return false;
}

}  // namespace hypercent
