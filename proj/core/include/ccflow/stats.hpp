#pragma once

#include <cstddef>
#include <optional>
#include <span>

namespace ccflow {

/// Sample Pearson correlation; nullopt when n < 2 or either variance is 0.
/// Throws std::invalid_argument on length mismatch.
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);

struct CorrelationTest {
  double r;
  double t;            // r * sqrt((n-2) / (1-r^2))
  double p_two_sided;  // Student t, n-2 dof
  std::size_t n;
};

/// Pearson correlation with the standard two-sided t-test p-value.
/// nullopt under the same conditions as pearson() or when n < 3.
std::optional<CorrelationTest> pearson_test(std::span<const double> x,
                                            std::span<const double> y);

/// Cosine similarity; nullopt when either vector has zero norm.
std::optional<double> cosine_similarity(std::span<const double> x,
                                        std::span<const double> y);

struct MeanSe {
  double mean;
  double se;  // sample standard error, 0 when n < 2
  std::size_t n;
};

MeanSe mean_with_se(std::span<const double> values);

/// Regularized incomplete beta function I_x(a, b).
double incomplete_beta(double a, double b, double x);

/// Two-sided p-value for a Student t statistic with the given dof.
double student_t_two_sided_p(double t, double dof);

} // namespace ccflow
