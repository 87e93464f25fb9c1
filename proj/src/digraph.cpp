#include "hypercent/digraph.hpp"

#include <string>

#include "hypercent/errors.hpp"

namespace hypercent {

Digraph::Digraph(int node_count) : n_(node_count) {
    if (node_count < 0) fail(errc::index_out_of_range, "negative node count");
}

void Digraph::add_arc(int from, int to, double weight) {
    if (from < 0 || from >= n_ || to < 0 || to >= n_)
        fail(errc::index_out_of_range,
             "arc (" + std::to_string(from) + ", " + std::to_string(to) + ") outside 0.." +
                 std::to_string(n_ - 1));
    if (!(weight > 0.0)) fail(errc::non_positive_weight, "arc weight must be > 0");
    weights_[{from, to}] += weight;
}

double Digraph::weight(int from, int to) const {
    auto it = weights_.find({from, to});
    return it == weights_.end() ? 0.0 : it->second;
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(weights_.size());
    for (const auto& [key, w] : weights_) out.push_back({key.first, key.second, w});
    return out;
}

Digraph Digraph::transposed() const {
    Digraph t(n_);
    for (const auto& [key, w] : weights_) t.weights_[{key.second, key.first}] += w;
    return t;
}

std::vector<double> Digraph::multiply(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != n_) fail(errc::length_mismatch, "vector length != N");
    std::vector<double> y(n_, 0.0);
    for (const auto& [key, w] : weights_) y[key.first] += w * x[key.second];
    return y;
}

std::vector<double> Digraph::multiply_transposed(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != n_) fail(errc::length_mismatch, "vector length != N");
    std::vector<double> y(n_, 0.0);
    for (const auto& [key, w] : weights_) y[key.second] += w * x[key.first];
    return y;
}

std::vector<std::vector<int>> Digraph::out_neighbors() const {
    std::vector<std::vector<int>> adj(n_);
    for (const auto& [key, w] : weights_)
        if (w > 0.0) adj[key.first].push_back(key.second);
    return adj;
}

}  // namespace hypercent
