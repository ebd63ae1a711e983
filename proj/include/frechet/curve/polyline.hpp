#ifndef FRECHET_CURVE_POLYLINE_HPP
#define FRECHET_CURVE_POLYLINE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "frechet/error.hpp"

namespace frechet {

/// A point of R^d with finite coordinates.
class Point {
public:
    Point() = default;

    explicit Point(std::vector<double> coords) : coords_(std::move(coords)) {
        if (coords_.empty())
            throw InvalidArgument("a point needs at least one coordinate");
        for (double c : coords_)
            if (!std::isfinite(c))
                throw NonFiniteValue("point coordinate is not finite");
    }

    Point(std::initializer_list<double> coords)
        : Point(std::vector<double>(coords)) {}

    std::size_t dim() const noexcept { return coords_.size(); }
    double operator[](std::size_t k) const { return coords_[k]; }
    std::span<const double> coords() const noexcept { return coords_; }

    friend bool operator==(const Point&, const Point&) = default;

private:
    std::vector<double> coords_;
};

namespace detail {

inline double squared_distance(std::span<const double> a,
                               std::span<const double> b) noexcept {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        double d = a[k] - b[k];
        s += d * d;
    }
    return s;
}

inline double distance(std::span<const double> a,
                       std::span<const double> b) noexcept {
    return std::sqrt(squared_distance(a, b));
}

}  // namespace detail

/// Ordered vertex list in R^d. Coordinates are stored contiguously; runs of
/// identical consecutive vertices are collapsed on construction, so a curve
/// reduced to a single point has exactly one vertex.
class Polyline {
public:
    Polyline() = default;

    explicit Polyline(const std::vector<Point>& vertices) {
        if (vertices.empty())
            throw EmptyInput("a polyline needs at least one vertex");
        dim_ = vertices.front().dim();
        for (const auto& v : vertices) {
            if (v.dim() != dim_)
                throw DimensionMismatch("polyline vertices have mixed dimensions");
            push(v.coords());
        }
    }

    Polyline(std::initializer_list<Point> vertices)
        : Polyline(std::vector<Point>(vertices)) {}

    /// Builds from a flat row-major coordinate buffer.
    Polyline(std::size_t dim, std::span<const double> flat) : dim_(dim) {
        if (dim == 0)
            throw InvalidArgument("polyline dimension must be positive");
        if (flat.empty() || flat.size() % dim != 0)
            throw InvalidArgument("flat coordinate buffer is not a multiple of the dimension");
        for (std::size_t i = 0; i < flat.size(); i += dim) {
            for (std::size_t k = 0; k < dim; ++k)
                if (!std::isfinite(flat[i + k]))
                    throw NonFiniteValue("polyline coordinate is not finite");
            push(flat.subspan(i, dim));
        }
    }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return dim_ == 0 ? 0 : data_.size() / dim_; }
    std::size_t edges() const noexcept { return size() == 0 ? 0 : size() - 1; }
    bool empty() const noexcept { return data_.empty(); }

    std::span<const double> operator[](std::size_t i) const noexcept {
        return std::span<const double>(data_).subspan(i * dim_, dim_);
    }
    std::span<const double> front() const noexcept { return (*this)[0]; }
    std::span<const double> back() const noexcept { return (*this)[size() - 1]; }

    Point vertex(std::size_t i) const {
        auto v = (*this)[i];
        return Point(std::vector<double>(v.begin(), v.end()));
    }

    std::span<const double> flat() const noexcept { return data_; }

    /// Point at parameter `s` in [0,1] along edge `i`.
    std::vector<double> point_on_edge(std::size_t i, double s) const {
        auto a = (*this)[i];
        auto b = (*this)[i + 1];
        std::vector<double> out(dim_);
        for (std::size_t k = 0; k < dim_; ++k)
            out[k] = a[k] + s * (b[k] - a[k]);
        return out;
    }

    double edge_length(std::size_t i) const noexcept {
        return detail::distance((*this)[i], (*this)[i + 1]);
    }

    double length() const noexcept {
        double total = 0.0;
        for (std::size_t i = 0; i < edges(); ++i)
            total += edge_length(i);
        return total;
    }

    bool is_closed() const noexcept {
        return size() >= 2 && std::ranges::equal(front(), back());
    }

    friend bool operator==(const Polyline&, const Polyline&) = default;

private:
    void push(std::span<const double> v) {
        if (!data_.empty() && std::ranges::equal(back(), v))
            return;
        data_.insert(data_.end(), v.begin(), v.end());
    }

    std::size_t dim_ = 0;
    std::vector<double> data_;
};

inline void require_same_dimension(const Polyline& p, const Polyline& q) {
    if (p.empty() || q.empty())
        throw EmptyInput("polyline is empty");
    if (p.dim() != q.dim())
        throw DimensionMismatch("polylines have dimensions " +
                                std::to_string(p.dim()) + " and " +
                                std::to_string(q.dim()));
}

/// Splits every edge into `k` equal pieces. The traced curve is unchanged.
inline Polyline subdivide(const Polyline& p, std::size_t k) {
    if (k == 0)
        throw InvalidArgument("subdivision factor must be positive");
    std::vector<double> flat;
    flat.reserve((p.edges() * k + 1) * p.dim());
    for (std::size_t i = 0; i < p.edges(); ++i)
        for (std::size_t s = 0; s < k; ++s) {
            auto v = p.point_on_edge(i, static_cast<double>(s) / static_cast<double>(k));
            flat.insert(flat.end(), v.begin(), v.end());
        }
    auto last = p.back();
    flat.insert(flat.end(), last.begin(), last.end());
    return Polyline(p.dim(), flat);
}

/// Returns a copy whose last vertex is snapped onto the first when the two
/// agree within `rel_tol` of the curve's extent. Used to accept closed curves
/// read back from text with round-off in the repeated vertex.
inline Polyline normalize_closure(const Polyline& p, double rel_tol = 1e-9) {
    if (p.size() < 2)
        return p;
    double extent = 0.0;
    for (double c : p.flat())
        extent = std::max(extent, std::abs(c));
    if (detail::distance(p.front(), p.back()) > rel_tol * std::max(1.0, extent))
        return p;
    std::vector<double> flat(p.flat().begin(), p.flat().end());
    std::copy(p.front().begin(), p.front().end(), flat.end() - static_cast<std::ptrdiff_t>(p.dim()));
    return Polyline(p.dim(), flat);
}

}  // namespace frechet

#endif  // FRECHET_CURVE_POLYLINE_HPP
