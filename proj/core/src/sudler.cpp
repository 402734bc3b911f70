#include "sudler/sudler.hpp"

#include <cmath>
#include <numeric>

namespace sudler {

namespace {

constexpr double kMaxDirectTerms = 0x1p56;

std::int64_t checked_q(const BigInt& q) {
  if (bit_length(q) > 52) throw Error(ErrorKind::Budget, "denominator too large for the rational kernel");
  return q.convert_to<std::int64_t>();
}

std::int64_t mod_positive(std::int64_t a, std::int64_t q) {
  std::int64_t r = a % q;
  return r < 0 ? r + q : r;
}

// |2 sin(pi (r + X + e)/q)| for integer 0 <= r < q and X + e = q x split as
// the rounded product plus its exact error term.
double rational_factor(std::int64_t r, std::int64_t q, double X, double e, bool& zero) {
  double t = static_cast<double>(r) + X;
  double m = static_cast<double>(q) * std::nearbyint(t / static_cast<double>(q));
  double head = static_cast<double>(r) - m;
  if (head + X == 0.0 && -head == X && e == 0.0) {
    zero = true;
    return 0.0;
  }
  double num = (head + X) + e;
  return std::abs(two_sin_pi(num / static_cast<double>(q)));
}

}  // namespace

const char* to_string(Method m) {
  switch (m) {
    case Method::Direct: return "direct";
    case Method::Decomposed: return "decomposed";
    case Method::RationalClosedForm: return "rational-closed-form";
  }
  return "unknown";
}

LogProduct log_sudler(const ConvergentTable& table, const BigInt& N) {
  if (N < 0 || N >= table.q.back())
    throw Error(ErrorKind::OutOfRange, "log_sudler requires 0 <= N < q_{K_max+1}");
  if (N.convert_to<double>() > kMaxDirectTerms)
    throw Error(ErrorKind::Precision, "N too large for the 128-bit phase kernel");
  LogProduct out;
  out.n_terms = N.convert_to<std::uint64_t>();
  ProductState st;
  accumulate_phases(st, 0, table.phase, out.n_terms);
  out.zero = st.zero;
  out.log_value = st.zero ? 0.0 : st.log_value();
  return out;
}

LogProduct log_sudler_shifted_phase(const ConvergentTable& table, std::uint64_t M,
                                    Phase shift) {
  if (static_cast<double>(M) > kMaxDirectTerms)
    throw Error(ErrorKind::Precision, "M too large for the 128-bit phase kernel");
  LogProduct out;
  out.n_terms = M;
  ProductState st;
  accumulate_phases(st, shift, table.phase, M);
  out.zero = st.zero;
  out.log_value = st.zero ? 0.0 : st.log_value();
  return out;
}

LogProduct log_sudler_shifted(const ConvergentTable& table, std::uint64_t M, double x,
                              int sign) {
  Phase ph = phase_of_double(x);
  if (sign < 0) ph = -ph;
  return log_sudler_shifted_phase(table, M, ph);
}

LogProduct log_sudler_rational(std::int64_t p, std::int64_t q, std::uint64_t N, double x) {
  if (q < 1 || q >= (std::int64_t(1) << 53))
    throw Error(ErrorKind::OutOfRange, "rational kernel needs 1 <= q < 2^53");
  if (std::gcd(p, q) != 1) throw Error(ErrorKind::OutOfRange, "p/q must be reduced");
  if (N >= static_cast<std::uint64_t>(q)) throw Error(ErrorKind::OutOfRange, "N must be below q");
  const double qd = static_cast<double>(q);
  const double X = qd * x;
  const double e = std::fma(qd, x, -X);
  const std::int64_t step = mod_positive(p, q);
  LogProduct out;
  out.n_terms = N;
  ProductState st;
  std::int64_t r = 0;
  for (std::uint64_t n = 1; n <= N; ++n) {
    r += step;
    if (r >= q) r -= q;
    bool zero = false;
    double f = rational_factor(r, q, X, e, zero);
    if (zero) {
      out.zero = true;
      return out;
    }
    st.mul(f);
  }
  out.log_value = st.log_value();
  return out;
}

LogProduct log_sudler_rational_closed_form(std::int64_t q, double x) {
  if (q < 1) throw Error(ErrorKind::OutOfRange, "q must be positive");
  LogProduct out;
  out.n_terms = static_cast<std::uint64_t>(q - 1);
  out.method = Method::RationalClosedForm;
  if (x == std::nearbyint(x)) {
    out.log_value = std::log(static_cast<double>(q));
    return out;
  }
  const double qd = static_cast<double>(q);
  const double X = qd * x;
  const double e = std::fma(qd, x, -X);
  const double fq = (X - std::nearbyint(X)) + e;
  if (fq == 0.0) {
    out.zero = true;
    return out;
  }
  const double fx = x - std::nearbyint(x);
  out.log_value = std::log(std::abs(std::sin(M_PI * fq))) - std::log(std::abs(std::sin(M_PI * fx)));
  return out;
}

Decomposition decompose(const ConvergentTable& table, const OstrowskiDigits& digits) {
  EpsilonProfile eps = epsilon_profile(table, digits);
  const unsigned wb = table.bits();
  Decomposition out;
  CompensatedSum total;
  for (std::size_t k = 0; k < digits.K(); ++k) {
    if (digits.b[k] == 0) continue;
    const std::uint64_t qk = table.q_u64(k);
    const Real qk_r = make_real(table.q[k], wb);
    for (std::uint64_t b = 0; b < digits.b[k]; ++b) {
      Real t = table.delta[k] * make_real(static_cast<long>(b), wb) + *eps.eps[k];
      if (!(t > -1 && t < 1))
        throw Error(ErrorKind::Internal,
                    "decomposition shift outside (-1, 1) at k=" + std::to_string(k));
      Real x = t / qk_r;
      if (k % 2 == 1) x = -x;
      LogProduct f = log_sudler_shifted_phase(table, qk, phase_of_real(x));
      if (f.zero) throw Error(ErrorKind::Pole, "vanishing block in the decomposition");
      DecompositionFactor fac;
      fac.k = k;
      fac.b = b;
      fac.shift = t.convert_to<double>();
      fac.log_value = f.log_value;
      total.add(f.log_value);
      out.factors.push_back(fac);
    }
  }
  out.total = total.value();
  return out;
}

double b_transfer(const ConvergentTable& table, std::size_t k, std::uint64_t M, double x) {
  if (k < 1 || k > table.K_max) throw Error(ErrorKind::OutOfRange, "b_transfer needs 1 <= k <= K_max");
  const std::int64_t q = checked_q(table.q[k]);
  if (M >= static_cast<std::uint64_t>(q)) throw Error(ErrorKind::OutOfRange, "b_transfer needs M < q_k");
  if (!(x > -1.0 && x < 1.0)) throw Error(ErrorKind::OutOfRange, "b_transfer needs |x| < 1");
  if (M == 0) return 0.0;
  const int s = k % 2 == 0 ? 1 : -1;
  const BigInt pk = table.p[k] % table.q[k];
  const std::int64_t p = mod_positive(pk.convert_to<std::int64_t>(), q);

  const unsigned wb = table.bits();
  Real shift = make_real_double(x, wb) / make_real(table.q[k], wb);
  if (s < 0) shift = -shift;
  LogProduct irr = log_sudler_shifted_phase(table, M, phase_of_real(shift));

  const double theta = table.theta_d(k);
  const double qd = static_cast<double>(q);
  const double sx = s * x;
  ProductState rat;
  CompensatedSum cot_sum;
  std::int64_t r = 0;   // n p mod q
  std::int64_t rs = 0;  // n s p mod q
  const std::int64_t sp = mod_positive(s * p, q);
  for (std::uint64_t n = 1; n <= M; ++n) {
    r += p;
    if (r >= q) r -= q;
    rs += sp;
    if (rs >= q) rs -= q;
    // |2 sin(pi (r + s x)/q)|
    double head = r + sx > qd / 2 ? static_cast<double>(r) - qd : static_cast<double>(r);
    double num = head + sx;
    if (num == 0.0) throw Error(ErrorKind::Pole, "zero factor in the rational product");
    rat.mul(std::abs(two_sin_pi(num / qd)));
    double centred = rs > q / 2 ? static_cast<double>(rs - q) : static_cast<double>(rs);
    double y = M_PI * (centred + x) / qd;
    cot_sum.add(std::sin(M_PI * static_cast<double>(n) * theta / qd) * std::cos(y) / std::sin(y));
  }
  if (irr.zero) throw Error(ErrorKind::Pole, "zero factor in the irrational product");
  return irr.log_value - rat.log_value() - cot_sum.value();
}

}  // namespace sudler
