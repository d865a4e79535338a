#pragma once

#include "simplexsum/errors.hpp"
#include "simplexsum/scalar.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace simplexsum {

template <Scalar S>
using Point = std::vector<S>;

/// Ordered list of n+2 points in R^n over one scalar realization.
template <Scalar S>
class Configuration {
public:
    Configuration(std::size_t dimension, std::vector<Point<S>> points)
        : dimension_(dimension), points_(std::move(points)) {
        if (dimension_ < 1) {
            throw DimensionMismatchError("dimension must be at least 1");
        }
        if (points_.size() != dimension_ + 2) {
            throw DimensionMismatchError("expected " + std::to_string(dimension_ + 2) +
                                         " points, got " + std::to_string(points_.size()));
        }
        for (const auto& p : points_) {
            if (p.size() != dimension_) {
                throw DimensionMismatchError("point length " + std::to_string(p.size()) +
                                             " does not match dimension " + std::to_string(dimension_));
            }
        }
    }

    std::size_t dimension() const { return dimension_; }
    std::size_t point_count() const { return points_.size(); }
    const Point<S>& point(std::size_t i) const { return points_.at(i); }
    const std::vector<Point<S>>& points() const { return points_; }

    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a.dimension_ == b.dimension_ && a.points_ == b.points_;
    }

private:
    std::size_t dimension_;
    std::vector<Point<S>> points_;
};

template <Scalar S>
Configuration<S> translated(const Configuration<S>& cfg, const Point<S>& offset) {
    if (offset.size() != cfg.dimension()) {
        throw DimensionMismatchError("translation vector length does not match dimension");
    }
    std::vector<Point<S>> pts = cfg.points();
    for (auto& p : pts) {
        for (std::size_t k = 0; k < p.size(); ++k) p[k] += offset[k];
    }
    return Configuration<S>(cfg.dimension(), std::move(pts));
}

template <Scalar S>
Configuration<S> scaled(const Configuration<S>& cfg, const S& factor) {
    std::vector<Point<S>> pts = cfg.points();
    for (auto& p : pts) {
        for (auto& c : p) c *= factor;
    }
    return Configuration<S>(cfg.dimension(), std::move(pts));
}

/// Relabels (A_0, ..., A_{n+1}) as (A_1, ..., A_{n+1}, A_0).
template <Scalar S>
Configuration<S> cyclic_shifted(const Configuration<S>& cfg) {
    std::vector<Point<S>> pts;
    pts.reserve(cfg.point_count());
    for (std::size_t i = 1; i < cfg.point_count(); ++i) pts.push_back(cfg.point(i));
    pts.push_back(cfg.point(0));
    return Configuration<S>(cfg.dimension(), std::move(pts));
}

inline Configuration<double> to_float(const Configuration<Rational>& cfg) {
    std::vector<Point<double>> pts;
    pts.reserve(cfg.point_count());
    for (const auto& p : cfg.points()) {
        Point<double> q;
        q.reserve(p.size());
        for (const auto& c : p) q.push_back(c.to_double());
        pts.push_back(std::move(q));
    }
    return Configuration<double>(cfg.dimension(), std::move(pts));
}

inline Configuration<Rational> rationalized(const Configuration<double>& cfg) {
    std::vector<Point<Rational>> pts;
    pts.reserve(cfg.point_count());
    for (const auto& p : cfg.points()) {
        Point<Rational> q;
        q.reserve(p.size());
        for (double c : p) q.push_back(Rational::from_double(c));
        pts.push_back(std::move(q));
    }
    return Configuration<Rational>(cfg.dimension(), std::move(pts));
}

} // namespace simplexsum
