// time_grid.hpp - uniform sampling grid starting at t = 0

#pragma once

#include <cstddef>
#include <vector>

#include "chancap/errors.hpp"

namespace chancap {

class TimeGrid {
public:
    TimeGrid(double t_max, std::size_t nodes) : t_max_(t_max), nodes_(nodes) {
        if (nodes < 2) throw DomainError("TimeGrid: need at least 2 nodes");
        if (!(t_max > 0.0)) throw DomainError("TimeGrid: t_max must be positive");
    }

    double t_max() const noexcept { return t_max_; }
    std::size_t size() const noexcept { return nodes_; }
    double step() const noexcept { return t_max_ / static_cast<double>(nodes_ - 1); }
    double operator[](std::size_t k) const noexcept {
        return k + 1 == nodes_ ? t_max_ : static_cast<double>(k) * step();
    }

    std::vector<double> times() const {
        std::vector<double> t(nodes_);
        for (std::size_t k = 0; k < nodes_; ++k) t[k] = (*this)[k];
        return t;
    }

    // Same horizon, step halved: 2n - 1 nodes; every old node is kept.
    TimeGrid refined() const { return {t_max_, 2 * nodes_ - 1}; }
    // Same step, horizon scaled by an integer factor.
    TimeGrid extended(std::size_t factor) const {
        return {t_max_ * static_cast<double>(factor), (nodes_ - 1) * factor + 1};
    }

    bool operator==(const TimeGrid&) const = default;

private:
    double t_max_;
    std::size_t nodes_;
};

// Real-valued series sampled on a TimeGrid (capacity curves, rates, |G|^2).
struct SampledCurve {
    TimeGrid grid;
    std::vector<double> values;
};

} // namespace chancap
