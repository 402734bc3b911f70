#pragma once

#include <cstdint>
#include <vector>

#include "sudler/convergents.hpp"

namespace sudler {

/// C_r = lim q_k ||q_k alpha|| and D_r = lim q_{k-1} ||q_k alpha|| along
/// k = k0 + r + m p, where k0 is the preperiod length and p the period.
struct LimitConstants {
  double C = 0.0;
  double D = 0.0;
  std::size_t r = 0;
  std::size_t p = 0;
  std::uint64_t a_r = 0;       // a_{k0+r}
  std::uint64_t a_next = 0;    // a_{k0+r+1}
};

LimitConstants limit_constants(const AlphaSpec& alpha, std::size_t r);

/// |2 sin(pi x)| |1 + (C-D)/(x+1)| |1 + C/x| |1 + D/(x-1)| exp(C (log(a/2pi) - psi(2+x))),
/// with the removable singularities at -1, 0, 1 cancelled analytically.
double limit_main_term(double C, double D, double a, double x);

/// The main term for alpha = [0; (a)].
double g_alpha(std::uint64_t a, double x);

/// The main term of the r-th limit function of a quadratic irrational.
double g_alpha_r(const AlphaSpec& alpha, std::size_t r, double x);

/// P_{q_k}(alpha, (-1)^k x / q_k) sampled on a grid.
std::vector<double> empirical_limit(const ConvergentTable& table, std::size_t k,
                                    const std::vector<double>& grid,
                                    std::uint64_t budget = 10'000'000);

/// Residue r in 1..p with k = k0 + r (mod p), for periodic alpha and k > k0.
std::size_t residue_of_index(const AlphaSpec& alpha, std::size_t k);

/// Abscissas in [lo, hi] where the sampled curve crosses `level`, by linear
/// interpolation between grid points.
std::vector<double> crossings(const std::vector<double>& grid, const std::vector<double>& values,
                              double level);

}  // namespace sudler
