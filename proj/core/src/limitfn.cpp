#include "sudler/limitfn.hpp"

#include <cmath>

#include <mpfr.h>

#include "sudler/cotangent.hpp"
#include "sudler/phase.hpp"
#include "sudler/surd.hpp"

namespace sudler {

LimitConstants limit_constants(const AlphaSpec& alpha, std::size_t r) {
  if (!alpha.is_periodic()) throw Error(ErrorKind::NotPeriodic, "limit constants need a periodic alpha");
  const std::size_t p = alpha.period.size();
  if (r < 1 || r > p) throw Error(ErrorKind::OutOfRange, "residue r must lie in 1..p");
  std::vector<BigInt> rot;
  for (std::size_t i = 0; i < p; ++i) rot.push_back(alpha.period[(r + i) % p]);
  // beta = [a_{k+1}; a_{k+2}, ...] is purely periodic; the reversed tail
  // [0; a_k, a_{k-1}, ...] tends to -conj(beta).
  Surd beta = periodic_surd(rot);
  const unsigned bits = 128;
  Real root = make_real(beta.d, bits);
  mpfr_sqrt(root.backend().data(), root.backend().data(), MPFR_RNDN);
  Real two_root = root * 2;
  LimitConstants out;
  out.C = (make_real(beta.v, bits) / two_root).convert_to<double>();
  out.D = ((root - make_real(beta.u, bits)) / two_root).convert_to<double>();
  out.r = r;
  out.p = p;
  out.a_r = to_u64(alpha.period[r - 1], "a_r");
  out.a_next = to_u64(alpha.period[r % p], "a_{r+1}");
  return out;
}

double limit_main_term(double C, double D, double a, double x) {
  double m = std::nearbyint(x);
  if (m < -1) m = -1;
  if (m > 1) m = 1;
  const double t = x - m;
  const double sinc = t == 0.0 ? M_PI : std::abs(std::sin(M_PI * t) / t);
  // |2 sin(pi x)| / |x - m| = 2 |sin(pi t) / t|
  double value = 2.0 * sinc;
  const double shifts[3] = {C - D, C, D};  // paired with the zeros -1, 0, 1
  for (int z = -1; z <= 1; ++z) {
    const double num = std::abs(x - z + shifts[z + 1]);
    value *= num;
    if (z != static_cast<int>(m)) value /= std::abs(x - z);
  }
  return value * std::exp(C * (std::log(a / (2.0 * M_PI)) - digamma(2.0 + x)));
}

double g_alpha(std::uint64_t a, double x) {
  const double ad = static_cast<double>(a);
  const double s = std::sqrt(ad * ad + 4.0);
  return limit_main_term(1.0 / s, (s - ad) / (2.0 * s), ad, x);
}

double g_alpha_r(const AlphaSpec& alpha, std::size_t r, double x) {
  LimitConstants lc = limit_constants(alpha, r);
  return limit_main_term(lc.C, lc.D, static_cast<double>(lc.a_r), x);
}

std::size_t residue_of_index(const AlphaSpec& alpha, std::size_t k) {
  if (!alpha.is_periodic()) throw Error(ErrorKind::NotPeriodic, "residues need a periodic alpha");
  const std::size_t k0 = alpha.preperiod.size();
  if (k <= k0) throw Error(ErrorKind::OutOfRange, "index inside the preperiod");
  return (k - k0 - 1) % alpha.period.size() + 1;
}

std::vector<double> empirical_limit(const ConvergentTable& table, std::size_t k,
                                    const std::vector<double>& grid, std::uint64_t budget) {
  if (k > table.K_max) throw Error(ErrorKind::OutOfRange, "k beyond the convergent table");
  if (table.q[k] > budget)
    throw Error(ErrorKind::Budget, "q_" + std::to_string(k) + " = " + table.q[k].str() +
                                       " exceeds the budget of " + std::to_string(budget));
  const std::uint64_t q = table.q_u64(k);
  const double qd = static_cast<double>(q);
  const double s = k % 2 == 0 ? 1.0 : -1.0;
  const std::size_t G = grid.size();
  std::vector<double> sb(G), cb(G);
  for (std::size_t j = 0; j < G; ++j) {
    const double b = M_PI * s * grid[j] / qd;
    sb[j] = std::sin(b);
    cb[j] = std::cos(b);
  }
  std::vector<ProductState> st(G);
  Phase ph = 0;
  for (std::uint64_t n = 1; n <= q; ++n) {
    ph += table.phase;
    // signed representative of the phase in (-1/2, 1/2]
    const double t = ph >> 127 ? -phase_to_double(-ph) : phase_to_double(ph);
    const double sa = std::sin(M_PI * t), ca = std::cos(M_PI * t);
    for (std::size_t j = 0; j < G; ++j) st[j].mul(std::abs(2.0 * (sa * cb[j] + ca * sb[j])));
  }
  std::vector<double> out(G);
  for (std::size_t j = 0; j < G; ++j) out[j] = st[j].zero ? 0.0 : std::exp(st[j].log_value());
  return out;
}

std::vector<double> crossings(const std::vector<double>& grid, const std::vector<double>& values,
                              double level) {
  std::vector<double> out;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double f0 = values[i - 1] - level, f1 = values[i] - level;
    if (f0 == 0.0) out.push_back(grid[i - 1]);
    if ((f0 < 0.0 && f1 > 0.0) || (f0 > 0.0 && f1 < 0.0))
      out.push_back(grid[i - 1] + (grid[i] - grid[i - 1]) * f0 / (f0 - f1));
  }
  if (!values.empty() && values.back() == level) out.push_back(grid.back());
  return out;
}

}  // namespace sudler
