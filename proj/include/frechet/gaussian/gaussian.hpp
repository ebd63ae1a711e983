#ifndef FRECHET_GAUSSIAN_GAUSSIAN_HPP
#define FRECHET_GAUSSIAN_GAUSSIAN_HPP

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "frechet/divergence/discrete_law.hpp"
#include "frechet/error.hpp"

namespace frechet {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Relative asymmetry tolerated (and removed) in covariance inputs.
inline constexpr double symmetry_tolerance = 1e-10;

/// Eigenvalues down to -psd_tolerance * |M| are round-off and clamped to 0;
/// anything more negative means the input is not PSD.
inline constexpr double psd_tolerance = 1e-8;

namespace detail {

inline void require_finite(const Matrix& m, const char* what) {
    if (!m.allFinite())
        throw NonFiniteValue(std::string(what) + " has non-finite entries");
}

inline Matrix symmetrized(const Matrix& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("matrix is not square");
    require_finite(m, "matrix");
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > symmetry_tolerance * scale)
        throw NotSymmetric("matrix is not symmetric");
    return 0.5 * (m + m.transpose());
}

/// Eigendecomposition of a symmetric PSD matrix with round-off negative
/// eigenvalues clamped to zero.
inline Eigen::SelfAdjointEigenSolver<Matrix> psd_eigen(const Matrix& sym) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
    if (es.info() != Eigen::Success)
        throw NonConvergence("symmetric eigendecomposition failed");
    return es;
}

inline Vector clamped_eigenvalues(const Eigen::SelfAdjointEigenSolver<Matrix>& es) {
    const Vector& ev = es.eigenvalues();
    double norm = ev.size() ? ev.cwiseAbs().maxCoeff() : 0.0;
    if (ev.size() && ev.minCoeff() < -psd_tolerance * norm)
        throw NotPositiveSemidefinite("matrix has a negative eigenvalue beyond round-off");
    return ev.cwiseMax(0.0);
}

/// `sym` itself when PSD, otherwise its reconstruction with clamped
/// eigenvalues.
inline Matrix psd_project(const Matrix& sym) {
    auto es = psd_eigen(sym);
    Vector ev = clamped_eigenvalues(es);
    if (ev == es.eigenvalues())
        return sym;
    Matrix r = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
    return 0.5 * (r + r.transpose());
}

}  // namespace detail

/// Gaussian law N(mean, cov). The covariance is symmetrized and its
/// round-off negative eigenvalues are clamped to zero.
class GaussianLaw {
public:
    GaussianLaw(Vector mean, const Matrix& cov) : mean_(std::move(mean)) {
        if (mean_.size() == 0)
            throw EmptyInput("Gaussian law needs dimension >= 1");
        if (cov.rows() != mean_.size() || cov.cols() != mean_.size())
            throw DimensionMismatch("mean and covariance dimensions differ");
        detail::require_finite(mean_, "mean");
        cov_ = detail::psd_project(detail::symmetrized(cov));
    }

    /// One-dimensional N(m, sigma^2).
    static GaussianLaw scalar(double m, double sigma) {
        if (!(sigma >= 0.0))
            throw InvalidArgument("standard deviation must be nonnegative");
        return GaussianLaw(Vector::Constant(1, m), Matrix::Constant(1, 1, sigma * sigma));
    }

    Eigen::Index dim() const noexcept { return mean_.size(); }
    const Vector& mean() const noexcept { return mean_; }
    const Matrix& cov() const noexcept { return cov_; }

private:
    Vector mean_;
    Matrix cov_;
};

/// Symmetric PSD square root S with S S = M, via eigendecomposition.
inline Matrix sym_sqrt(const Matrix& m) {
    auto es = detail::psd_eigen(detail::symmetrized(m));
    Vector root = detail::clamped_eigenvalues(es).cwiseSqrt();
    Matrix s = es.eigenvectors() * root.asDiagonal() * es.eigenvectors().transpose();
    return 0.5 * (s + s.transpose());
}

/// Bures term Tr(S1 + S2 - 2 (S1^1/2 S2 S1^1/2)^1/2) of two PSD matrices.
/// Round-off negatives are clamped to 0.
inline double bures(const Matrix& s1, const Matrix& s2) {
    if (s1.rows() != s2.rows() || s1.cols() != s2.cols())
        throw DimensionMismatch("covariances differ in dimension");
    Matrix a = detail::symmetrized(s1);
    Matrix b = detail::symmetrized(s2);
    if (a == b)
        return 0.0;  // Tr(2A - 2A): exact, and spares the round-off
    Matrix r = sym_sqrt(a);
    Matrix inner = r * b * r;
    auto es = detail::psd_eigen(0.5 * (inner + inner.transpose()));
    double cross = detail::clamped_eigenvalues(es).cwiseSqrt().sum();
    double value = a.trace() + b.trace() - 2.0 * cross;
    double scale = std::max(1.0, a.trace() + b.trace());
    if (value < -1e-9 * scale)
        throw NotPositiveSemidefinite("Bures term is negative beyond round-off");
    return std::max(0.0, value);
}

/// Smallest quadratic transport cost between laws with the given means and
/// covariances: |m1 - m2|^2 + bures(S1, S2). Attained by the Gaussians.
inline double gelbrich_bound(const Vector& m1, const Matrix& s1, const Vector& m2, const Matrix& s2) {
    if (m1.size() != m2.size() || s1.rows() != m1.size() || s2.rows() != m2.size())
        throw DimensionMismatch("moments differ in dimension");
    return (m1 - m2).squaredNorm() + bures(s1, s2);
}

/// Quadratic Wasserstein distance between Gaussians (the square root of the
/// Gelbrich expression).
inline double gaussian_w2(const GaussianLaw& g1, const GaussianLaw& g2) {
    if (g1.dim() != g2.dim())
        throw DimensionMismatch("Gaussian laws differ in dimension");
    return std::sqrt(gelbrich_bound(g1.mean(), g1.cov(), g2.mean(), g2.cov()));
}

/// Feature batch: one sample per row, at least two rows.
class SampleBatch {
public:
    explicit SampleBatch(Matrix rows) : rows_(std::move(rows)) {
        if (rows_.rows() < 2)
            throw InvalidArgument("a sample batch needs at least 2 rows");
        if (rows_.cols() < 1)
            throw EmptyInput("samples need at least one feature");
        detail::require_finite(rows_, "sample batch");
    }

    Eigen::Index size() const noexcept { return rows_.rows(); }
    Eigen::Index dim() const noexcept { return rows_.cols(); }
    const Matrix& rows() const noexcept { return rows_; }

private:
    Matrix rows_;
};

/// Sample mean and unbiased (n - 1) sample covariance.
inline GaussianLaw estimate_gaussian(const SampleBatch& b) {
    Vector mean = b.rows().colwise().mean().transpose();
    Matrix centered = b.rows().rowwise() - mean.transpose();
    Matrix cov = centered.transpose() * centered / static_cast<double>(b.size() - 1);
    return GaussianLaw(std::move(mean), 0.5 * (cov + cov.transpose()));
}

/// Frechet inception distance in its usual squared form: gaussian_w2^2 of
/// the Gaussians fitted to the two batches.
inline double fid(const SampleBatch& a, const SampleBatch& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("batches differ in feature dimension");
    auto ga = estimate_gaussian(a);
    auto gb = estimate_gaussian(b);
    return gelbrich_bound(ga.mean(), ga.cov(), gb.mean(), gb.cov());
}

/// Mean and population covariance of a discrete law (weights, not n - 1).
struct MomentPair {
    Vector mean;
    Matrix cov;
};

inline MomentPair law_moments(const DiscreteLawD& law) {
    const auto d = static_cast<Eigen::Index>(law.dim());
    MomentPair m{Vector::Zero(d), Matrix::Zero(d, d)};
    for (std::size_t i = 0; i < law.size(); ++i)
        m.mean += law.weight(i) * Eigen::Map<const Vector>(law.point(i).data(), d);
    for (std::size_t i = 0; i < law.size(); ++i) {
        Vector c = Eigen::Map<const Vector>(law.point(i).data(), d) - m.mean;
        m.cov += law.weight(i) * c * c.transpose();
    }
    m.cov = 0.5 * (m.cov + m.cov.transpose());
    return m;
}

}  // namespace frechet

#endif  // FRECHET_GAUSSIAN_GAUSSIAN_HPP
