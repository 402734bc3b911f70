#include "sudler/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "sudler/phase.hpp"

namespace sudler {

namespace {

constexpr std::uint64_t kChunk = std::uint64_t(1) << 16;

struct LogSumExp {
  double m = -std::numeric_limits<double>::infinity();
  double s = 0.0;

  void add(double v) {
    if (v > m) {
      s = s * std::exp(m - v) + 1.0;
      m = v;
    } else {
      s += std::exp(v - m);
    }
  }
  void merge(const LogSumExp& o) {
    if (o.s == 0.0) return;
    if (s == 0.0) {
      *this = o;
      return;
    }
    if (o.m > m) {
      s = s * std::exp(m - o.m) + o.s;
      m = o.m;
    } else {
      s += o.s * std::exp(o.m - m);
    }
  }
  double value() const { return m + std::log(s); }
};

struct ChunkResult {
  ProductState seed;       // product over factors before this chunk
  ProductState local;      // product over this chunk's factors
  std::vector<LogSumExp> sums;
  double max_log = -std::numeric_limits<double>::infinity();
  std::uint64_t argmax = 0;
  std::vector<std::pair<std::uint64_t, double>> top;
  std::uint64_t zeros = 0;
};

bool better(const std::pair<std::uint64_t, double>& x, const std::pair<std::uint64_t, double>& y) {
  if (x.second != y.second) return x.second > y.second;
  return x.first < y.first;
}

void trim_top(std::vector<std::pair<std::uint64_t, double>>& top, std::size_t m) {
  std::sort(top.begin(), top.end(), better);
  if (top.size() > m) top.resize(m);
}

template <class F>
void run_parallel(std::size_t jobs, unsigned parallelism, F&& body) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t j = next.fetch_add(1);
      if (j >= jobs) return;
      body(j);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(parallelism, static_cast<unsigned>(jobs)));
  std::vector<std::thread> threads;
  for (unsigned i = 1; i < n; ++i) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
}

}  // namespace

ScanResult scan(const ConvergentTable& table, std::size_t K, const ScanOptions& opts) {
  if (K < 1 || K > table.K_max + 1)
    throw Error(ErrorKind::OutOfRange, "scan index K outside the convergent table");
  if (table.q[K] > opts.budget)
    throw Error(ErrorKind::Budget, "q_K = " + table.q[K].str() + " exceeds the scan budget of " +
                                       std::to_string(opts.budget));
  for (double c : opts.c_list)
    if (!(c > 0.0)) throw Error(ErrorKind::OutOfRange, "scan exponents c must be positive");

  const std::uint64_t count = table.q_u64(K);
  const std::size_t chunks = (count + kChunk - 1) / kChunk;
  const Phase step = table.phase;
  std::vector<ChunkResult> res(chunks);
  const bool keep = count <= opts.keep_values_limit;
  ScanResult out;
  out.K = K;
  out.count = count;
  if (keep) out.values.assign(count, 0.0);

  // Pass 1: product of the factors n in [lo+1, hi] per chunk (N runs over [lo, hi)).
  run_parallel(chunks, opts.parallelism, [&](std::size_t j) {
    const std::uint64_t lo = j * kChunk;
    const std::uint64_t hi = std::min(count, lo + kChunk);
    ProductState st;
    accumulate_phases(st, step * static_cast<Phase>(lo), step, hi - lo);
    st.normalize();
    res[j].local = st;
  });

  ProductState running;
  for (std::size_t j = 0; j < chunks; ++j) {
    res[j].seed = running;
    running.mul(res[j].local);
  }

  // Pass 2: stream log P_N inside each chunk from its seed.
  run_parallel(chunks, opts.parallelism, [&](std::size_t j) {
    ChunkResult& r = res[j];
    r.sums.assign(opts.c_list.size(), LogSumExp{});
    const std::uint64_t lo = j * kChunk;
    const std::uint64_t hi = std::min(count, lo + kChunk);
    ProductState st = r.seed;
    Phase ph = step * static_cast<Phase>(lo);
    for (std::uint64_t N = lo; N < hi; ++N) {
      if (N > lo) {
        ph += step;
        st.mul(two_sin_pi(phase_distance(ph)));
      }
      if (st.zero) {
        ++r.zeros;
        if (keep) out.values[N] = -std::numeric_limits<double>::infinity();
        continue;
      }
      const double L = st.log_value();
      if (keep) out.values[N] = L;
      if (L > r.max_log) {
        r.max_log = L;
        r.argmax = N;
      }
      for (std::size_t i = 0; i < opts.c_list.size(); ++i) r.sums[i].add(opts.c_list[i] * L);
      if (opts.top_m > 0) {
        r.top.emplace_back(N, L);
        if (r.top.size() >= 4 * opts.top_m) trim_top(r.top, opts.top_m);
      }
    }
    trim_top(r.top, opts.top_m);
  });

  std::vector<LogSumExp> sums(opts.c_list.size());
  out.max_log = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < chunks; ++j) {
    const ChunkResult& r = res[j];
    for (std::size_t i = 0; i < sums.size(); ++i) sums[i].merge(r.sums[i]);
    if (r.max_log > out.max_log) {
      out.max_log = r.max_log;
      out.argmax_N = r.argmax;
    }
    out.top.insert(out.top.end(), r.top.begin(), r.top.end());
    out.zero_count += r.zeros;
  }
  trim_top(out.top, opts.top_m);
  for (std::size_t i = 0; i < sums.size(); ++i)
    out.sums.push_back(ScanSum{opts.c_list[i], sums[i].value()});
  return out;
}

}  // namespace sudler
