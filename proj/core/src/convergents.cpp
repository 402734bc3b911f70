#include "sudler/convergents.hpp"

#include <algorithm>
#include <optional>

#include <mpfr.h>

#include "sudler/surd.hpp"

namespace sudler {

namespace {

// Forward tails beta_j = [a_j; a_{j+1}, ...] for j = 1..last, rounded to
// `bits`. Entry j is left empty (infinite) for j past the end of a rational.
std::vector<std::optional<Real>> forward_tails(const AlphaSpec& alpha, std::size_t last,
                                const PrecisionConfig& cfg, unsigned bits) {
  std::vector<std::optional<Real>> beta(last + 1);
  if (alpha.is_periodic()) {
    const std::size_t L = alpha.preperiod.size();
    const std::size_t P = alpha.period.size();
    std::vector<Surd> rotations;
    for (std::size_t r = 0; r < P; ++r) {
      std::vector<BigInt> rot;
      for (std::size_t i = 0; i < P; ++i) rot.push_back(alpha.period[(r + i) % P]);
      rotations.push_back(periodic_surd(rot));
    }
    for (std::size_t j = L + 1; j <= last; ++j)
      beta[j] = surd_to_real(rotations[(j - L - 1) % P], bits);
    if (L >= 1) {
      Surd s = rotations[0];
      for (std::size_t j = L; j >= 1; --j) {
        s = surd_prepend(alpha.preperiod[j - 1], s);
        if (j <= last) beta[j] = surd_to_real(s, bits);
      }
    }
    return beta;
  }
  if (alpha.has_rule()) {
    const std::size_t D = cfg.tail_depth;
    for (std::size_t j = 1; j <= last; ++j) {
      // convergents h/k of [a_j; ..., a_{j+D-1}]
      BigInt h_prev = 1, k_prev = 0;
      BigInt h = alpha.partial_quotient(j), k = 1;
      for (std::size_t i = 1; i < D; ++i) {
        BigInt c = alpha.partial_quotient(j + i);
        BigInt hn = c * h + h_prev, kn = c * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = hn;
        k = kn;
      }
      // |beta - h/k| < 1/k^2
      if (2 * bit_length(k) < cfg.working_bits / 2 + 2)
        throw Error(ErrorKind::Precision,
                    "tail_depth too small for rule '" + alpha.rule + "' at working_bits=" +
                        std::to_string(cfg.working_bits));
      beta[j] = make_real(h, bits) / make_real(k, bits);
    }
    return beta;
  }
  const std::size_t n = *alpha.finite_length();
  for (std::size_t j = 1; j <= last && j <= n; ++j) {
    BigInt h_prev = 1, k_prev = 0;
    BigInt h = alpha.preperiod[j - 1], k = 1;
    for (std::size_t i = j + 1; i <= n; ++i) {
      const BigInt& c = alpha.preperiod[i - 1];
      BigInt hn = c * h + h_prev, kn = c * k + k_prev;
      h_prev = h;
      k_prev = k;
      h = hn;
      k = kn;
    }
    beta[j] = make_real(h, bits) / make_real(k, bits);
  }
  return beta;
}

Real rounded(const Real& x, unsigned bits) {
  Real r = make_real(0L, bits);
  mpfr_set(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

}  // namespace

std::uint64_t ConvergentTable::a_u64(std::size_t k) const { return to_u64(a.at(k), "a_k"); }
std::uint64_t ConvergentTable::q_u64(std::size_t k) const { return to_u64(q.at(k), "q_k"); }

ConvergentTable build_table(const AlphaSpec& alpha, std::size_t K_max,
                            const PrecisionConfig& cfg) {
  cfg.validate();
  if (K_max < 1) throw Error(ErrorKind::OutOfRange, "K_max must be at least 1");
  if (alpha.is_rational()) {
    const std::size_t n = *alpha.finite_length();
    if (K_max + 1 > n)
      throw Error(ErrorKind::RationalExhausted,
                  "rational alpha " + render(alpha) + " has only " + std::to_string(n) +
                      " partial quotients; K_max must be at most " +
                      std::to_string(n == 0 ? 0 : n - 1));
  }
  Real::default_precision(cfg.digits10());

  ConvergentTable t;
  t.alpha = alpha;
  t.cfg = cfg;
  t.K_max = K_max;
  const std::size_t top = K_max + 1;

  for (std::size_t k = 0; k <= top; ++k) t.a.push_back(alpha.partial_quotient(k));
  t.q = {BigInt(1), t.a[1]};
  t.p = {t.a[0], t.a[0] * t.a[1] + 1};
  for (std::size_t k = 2; k <= top; ++k) {
    t.q.push_back(t.a[k] * t.q[k - 1] + t.q[k - 2]);
    t.p.push_back(t.a[k] * t.p[k - 1] + t.p[k - 2]);
  }

  const unsigned wb = cfg.working_bits;
  // the 128-bit phase needs about 200 correct bits whatever working_bits is
  const unsigned guard = std::max(wb, 256u) + 64;
  std::size_t tail_last = top + 1;
  if (alpha.is_rational()) tail_last = std::min(tail_last, *alpha.finite_length());
  std::vector<std::optional<Real>> beta = forward_tails(alpha, tail_last, cfg, guard);

  // theta_k for k = 0..top
  std::vector<Real> theta_g(top + 1);
  for (std::size_t k = 1; k <= top; ++k) {
    if (k + 1 >= beta.size() || !beta[k + 1]) {
      theta_g[k] = make_real(0L, guard);  // rational: q_n alpha is an integer
      continue;
    }
    Real qk = make_real(t.q[k], guard);
    Real inv_delta = *beta[k + 1] + make_real(t.q[k - 1], guard) / qk;
    theta_g[k] = 1 / (inv_delta * qk);
  }
  if (t.a[1] > 1) {
    theta_g[0] = 1 / *beta[1];
  } else {
    theta_g[0] = theta_g[1];
  }

  for (std::size_t k = 0; k <= K_max; ++k) {
    Real qk = make_real(t.q[k], guard);
    t.theta.push_back(rounded(theta_g[k], wb));
    t.delta.push_back(rounded(theta_g[k] * qk, wb));
    t.eta.push_back(rounded(theta_g[k + 1] * qk, wb));
  }

  Real frac = 1 / *beta[1];
  t.alpha_value = rounded(make_real(t.a[0], guard) + frac, wb);

  Real scaled = frac;
  mpfr_mul_2ui(scaled.backend().data(), scaled.backend().data(), 128, MPFR_RNDN);
  BigInt ph = 0;
  mpfr_get_z(ph.backend().data(), scaled.backend().data(), MPFR_RNDD);
  unsigned __int128 phase = 0;
  for (int limb = 3; limb >= 0; --limb) {
    BigInt part = (ph >> (32 * limb)) & BigInt(0xffffffffu);
    phase = (phase << 32) | part.convert_to<std::uint32_t>();
  }
  t.phase = phase;
  return t;
}

std::size_t index_covering(const ConvergentTable& table, const BigInt& n) {
  for (std::size_t k = 0; k < table.q.size(); ++k)
    if (table.q[k] > n) return k;
  throw Error(ErrorKind::OutOfRange, "N beyond the convergent table");
}

Real frac_part(const ConvergentTable& table, const BigInt& n) {
  if (n < 0 || n >= table.q[table.K_max])
    throw Error(ErrorKind::OutOfRange, "frac_part requires 0 <= n < q_{K_max}");
  const unsigned wb = table.bits();
  if (wb <= bit_length(n) + 64)
    throw Error(ErrorKind::Precision, "working_bits too small for n of " +
                                          std::to_string(bit_length(n)) + " bits");
  Real x = make_real(n, wb) * table.alpha_value;
  Real fl = x;
  mpfr_floor(fl.backend().data(), x.backend().data());
  return x - fl;
}

}  // namespace sudler
