#ifndef FRECHET_GAUSSIAN_IO_HPP
#define FRECHET_GAUSSIAN_IO_HPP

#include <istream>
#include <sstream>
#include <string>

#include "frechet/detail/csv.hpp"
#include "frechet/detail/json_io.hpp"
#include "frechet/gaussian/gaussian.hpp"

namespace frechet {

/// Sample batch CSV: one row per sample, an optional header row.
inline SampleBatch read_sample_batch(std::istream& in) {
    auto table = detail::read_numeric_table(in, true);
    if (table.rows.empty())
        throw EmptyInput("batch file has no samples");
    Matrix m(static_cast<Eigen::Index>(table.rows.size()), static_cast<Eigen::Index>(table.columns));
    for (std::size_t i = 0; i < table.rows.size(); ++i)
        for (std::size_t k = 0; k < table.columns; ++k)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = table.rows[i][k];
    return SampleBatch(std::move(m));
}

inline SampleBatch parse_sample_batch(const std::string& text) {
    std::istringstream in(text);
    return read_sample_batch(in);
}

/// Gaussian law JSON: {"mean": [...], "cov": [[...], ...]}.
inline GaussianLaw parse_gaussian(const std::string& text) {
    auto doc = detail::parse_json(text);
    auto mean = detail::to_numbers(detail::require_member(doc, "mean"));
    auto cov = detail::to_matrix(detail::require_member(doc, "cov"));
    const auto d = static_cast<Eigen::Index>(mean.size());
    if (static_cast<Eigen::Index>(cov.size()) != d)
        throw DimensionMismatch("covariance rows do not match the mean");
    Matrix c(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        if (static_cast<Eigen::Index>(cov[static_cast<std::size_t>(i)].size()) != d)
            throw DimensionMismatch("covariance is not square");
        for (Eigen::Index j = 0; j < d; ++j)
            c(i, j) = cov[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return GaussianLaw(Eigen::Map<const Vector>(mean.data(), d), c);
}

}  // namespace frechet

#endif  // FRECHET_GAUSSIAN_IO_HPP
