#ifndef FRECHET_CURVE_FREE_SPACE_HPP
#define FRECHET_CURVE_FREE_SPACE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "frechet/curve/polyline.hpp"
#include "frechet/error.hpp"

namespace frechet {

/// Closed parameter interval [lo, hi]; empty when lo > hi.
struct Interval {
    double lo = 1.0;
    double hi = 0.0;

    static constexpr Interval none() noexcept { return {}; }
    static constexpr Interval unit() noexcept { return {0.0, 1.0}; }

    bool empty() const noexcept { return lo > hi; }
    bool contains(double x) const noexcept { return !empty() && lo <= x && x <= hi; }
    bool covers_start() const noexcept { return !empty() && lo <= 0.0; }
    bool covers_end() const noexcept { return !empty() && hi >= 1.0; }

    /// Part of this interval at or after `from`.
    Interval clipped_from(double from) const noexcept {
        if (empty())
            return none();
        Interval r{std::max(lo, from), hi};
        return r.empty() ? none() : r;
    }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Endpoints of a directed segment; a view into polyline storage.
struct Segment {
    std::span<const double> a;
    std::span<const double> b;
};

/// Free boundary intervals of one cell of the free-space diagram. The cell
/// is spanned by s (along the P edge, horizontal) and t (along the Q edge,
/// vertical); left/right are intervals in t, bottom/top intervals in s.
struct FreeSpaceCell {
    Interval left;
    Interval right;
    Interval bottom;
    Interval top;
};

namespace detail {

inline constexpr double degenerate_quadratic = 1e-15;
inline constexpr double tangent_widening = 1e-12;

/// Parameters t in [0,1] with |u + t (v - u) - c| <= eps.
inline Interval ball_segment_interval(std::span<const double> c,
                                      std::span<const double> u,
                                      std::span<const double> v, double eps) {
    double a = 0.0, b = 0.0, k = -eps * eps;
    for (std::size_t i = 0; i < c.size(); ++i) {
        double d = v[i] - u[i];
        double w = u[i] - c[i];
        a += d * d;
        b += 2.0 * w * d;
        k += w * w;
    }

    double lo, hi;
    if (std::abs(a) < degenerate_quadratic) {
        // Linear or constant in t.
        if (std::abs(b) < degenerate_quadratic) {
            if (k > 0.0)
                return Interval::none();
            lo = 0.0;
            hi = 1.0;
        } else {
            double root = -k / b;
            if (b > 0.0) {
                lo = -1.0;
                hi = root;
            } else {
                lo = root;
                hi = 2.0;
            }
        }
    } else {
        double disc = b * b - 4.0 * a * k;
        if (disc < 0.0) {
            if (disc < -1e-12 * (b * b + std::abs(4.0 * a * k)))
                return Interval::none();
            disc = 0.0;
        }
        double sq = std::sqrt(disc);
        // Stable pair of roots.
        double q = -0.5 * (b + std::copysign(sq, b));
        double r1, r2;
        if (q == 0.0) {
            r1 = r2 = 0.0;
        } else {
            r1 = q / a;
            r2 = k / q;
        }
        lo = std::min(r1, r2);
        hi = std::max(r1, r2);
    }

    lo = std::max(0.0, lo - tangent_widening);
    hi = std::min(1.0, hi + tangent_widening);
    if (lo > hi)
        return Interval::none();
    return {lo, hi};
}

}  // namespace detail

/// Free intervals on the four sides of the cell spanned by `edge_p` (s axis)
/// and `edge_q` (t axis) at distance threshold `epsilon`.
inline FreeSpaceCell free_space_cell(const Segment& edge_p, const Segment& edge_q,
                                     double epsilon) {
    if (edge_p.a.size() != edge_q.a.size() || edge_p.a.size() != edge_p.b.size() ||
        edge_q.a.size() != edge_q.b.size())
        throw DimensionMismatch("free-space cell segments differ in dimension");
    if (!(epsilon >= 0.0))
        throw InvalidArgument("epsilon must be nonnegative");
    using detail::ball_segment_interval;
    return FreeSpaceCell{
        ball_segment_interval(edge_p.a, edge_q.a, edge_q.b, epsilon),
        ball_segment_interval(edge_p.b, edge_q.a, edge_q.b, epsilon),
        ball_segment_interval(edge_q.a, edge_p.a, edge_p.b, epsilon),
        ball_segment_interval(edge_q.b, edge_p.a, edge_p.b, epsilon),
    };
}

inline Segment edge(const Polyline& p, std::size_t i) noexcept {
    return {p[i], p[i + 1]};
}

namespace detail {

inline double max_vertex_distance(std::span<const double> c, const Polyline& q) {
    double best = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j)
        best = std::max(best, distance(c, q[j]));
    return best;
}

}  // namespace detail

/// Reachability sweep over the free-space diagram of P (columns) and Q
/// (rows). Only cells that receive reachable boundary from the left or from
/// below are visited; for each one `on_cell(i, j, left, bottom, top, right)`
/// is called with the reachable parts of its four sides. Returns whether the
/// corner (m, n) is reachable. Both curves must have at least one edge.
template <typename OnCell>
bool sweep_reachable(const Polyline& p, const Polyline& q, double epsilon,
                     OnCell&& on_cell) {
    const std::size_t m = p.edges();
    const std::size_t n = q.edges();
    if (detail::distance(p.front(), q.front()) > epsilon ||
        detail::distance(p.back(), q.back()) > epsilon) {
        return false;
    }

    std::vector<Interval> bottom(m), next(m);
    std::size_t span_lo = m, span_hi = 0;  // nonempty entries of `bottom`

    // Row 0 bottom boundary: reachable by walking along t = 0.
    {
        bool alive = true;
        for (std::size_t i = 0; i < m && alive; ++i) {
            Interval f = detail::ball_segment_interval(q.front(), p[i], p[i + 1], epsilon);
            if (!f.covers_start())
                break;
            bottom[i] = f;
            span_lo = std::min(span_lo, i);
            span_hi = i;
            alive = f.covers_end();
        }
    }

    bool column_alive = true;
    bool corner = false;
    for (std::size_t j = 0; j < n; ++j) {
        auto qa = q[j];
        auto qb = q[j + 1];

        Interval left = Interval::none();
        if (column_alive) {
            Interval f = detail::ball_segment_interval(p.front(), qa, qb, epsilon);
            if (f.covers_start())
                left = f;
            column_alive = left.covers_end();
        }

        std::size_t start = left.empty() ? span_lo : 0;
        if (start >= m)
            return false;

        std::size_t next_lo = m, next_hi = 0;
        for (std::size_t i = start; i < m; ++i) {
            Interval b = (i >= span_lo && i <= span_hi) ? bottom[i] : Interval::none();
            if (b.empty() && left.empty()) {
                if (i >= span_hi)
                    break;
                continue;
            }
            auto pa = p[i];
            auto pb = p[i + 1];
            Interval free_top = detail::ball_segment_interval(qb, pa, pb, epsilon);
            Interval free_right = detail::ball_segment_interval(pb, qa, qb, epsilon);

            // Any point of the top is reachable from a reachable left point,
            // but only the part right of b.lo from the bottom; symmetrically
            // for the right side.
            Interval top = left.empty() ? free_top.clipped_from(b.lo) : free_top;
            Interval right = b.empty() ? free_right.clipped_from(left.lo) : free_right;

            on_cell(i, j, left, b, top, right);

            if (!top.empty()) {
                next[i] = top;
                next_lo = std::min(next_lo, i);
                next_hi = i;
            }
            if (i + 1 == m && j + 1 == n)
                corner = top.covers_end() || right.covers_end();
            left = right;
        }

        for (std::size_t i = span_lo; i <= span_hi && i < m; ++i)
            bottom[i] = Interval::none();
        std::swap(bottom, next);
        span_lo = next_lo;
        span_hi = next_hi;
        if (span_lo >= m && !column_alive)
            return corner;
    }
    return corner;
}

/// True iff a bimonotone path joins (0,0) to (m,n) inside the free space at
/// `epsilon`, i.e. the Fréchet distance of P and Q is at most `epsilon`.
inline bool frechet_decision(const Polyline& p, const Polyline& q, double epsilon) {
    require_same_dimension(p, q);
    if (!(epsilon >= 0.0))
        throw InvalidArgument("epsilon must be nonnegative");
    if (p.size() == 1)
        return detail::max_vertex_distance(p.front(), q) <= epsilon;
    if (q.size() == 1)
        return detail::max_vertex_distance(q.front(), p) <= epsilon;
    return sweep_reachable(p, q, epsilon, [](auto&&...) {});
}

/// Dense free-space diagram: free intervals of every cell plus reachable
/// intervals on every left and bottom cell boundary. Memory is O(mn); meant
/// for inspection and rendering of moderate grids.
class FreeSpaceDiagram {
public:
    FreeSpaceDiagram(const Polyline& p, const Polyline& q, double epsilon)
        : epsilon_(epsilon), m_(p.edges()), n_(q.edges()) {
        require_same_dimension(p, q);
        if (!(epsilon >= 0.0))
            throw InvalidArgument("epsilon must be nonnegative");
        cells_.resize(m_ * n_);
        reach_left_.assign(m_ * n_, Interval::none());
        reach_bottom_.assign(m_ * n_, Interval::none());
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t i = 0; i < m_; ++i)
                cells_[j * m_ + i] = free_space_cell(edge(p, i), edge(q, j), epsilon);
        if (m_ == 0 || n_ == 0) {
            end_reachable_ = frechet_decision(p, q, epsilon);
            return;
        }
        end_reachable_ = sweep_reachable(
            p, q, epsilon,
            [this](std::size_t i, std::size_t j, const Interval& left,
                   const Interval& bottom, const Interval&, const Interval&) {
                reach_left_[j * m_ + i] = left;
                reach_bottom_[j * m_ + i] = bottom;
            });
    }

    double epsilon() const noexcept { return epsilon_; }
    std::size_t columns() const noexcept { return m_; }
    std::size_t rows() const noexcept { return n_; }

    const FreeSpaceCell& cell(std::size_t i, std::size_t j) const { return cells_.at(j * m_ + i); }
    const Interval& reachable_left(std::size_t i, std::size_t j) const { return reach_left_.at(j * m_ + i); }
    const Interval& reachable_bottom(std::size_t i, std::size_t j) const { return reach_bottom_.at(j * m_ + i); }
    bool end_reachable() const noexcept { return end_reachable_; }

private:
    double epsilon_;
    std::size_t m_, n_;
    std::vector<FreeSpaceCell> cells_;
    std::vector<Interval> reach_left_, reach_bottom_;
    bool end_reachable_ = false;
};

}  // namespace frechet

#endif  // FRECHET_CURVE_FREE_SPACE_HPP
