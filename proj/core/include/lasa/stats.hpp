#pragma once

#include <cstdint>
#include <span>

namespace lasa {

// Regularized incomplete beta function I_x(a, b) via the Lentz continued
// fraction.
double regularized_incomplete_beta(double a, double b, double x);

// Lower-tail CDF of Student's t with `dof` degrees of freedom.
double student_t_cdf(double t, double dof);

// Pearson correlation; NaN when either argument has zero variance.
double pearson_correlation(std::span<const double> a, std::span<const double> b);

}  // namespace lasa
