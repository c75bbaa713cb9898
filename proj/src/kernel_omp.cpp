#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "prm/kernel.hpp"

namespace prm::kernel {
namespace {

constexpr std::size_t kLane = 32;

// Generator rows in byte form, padded to a multiple of kLane. Padding columns
// are 1 in the start codeword and 0 in every row, so they never count as zeros.
struct Prepared {
  const Field* field;
  std::size_t k, n, width;
  std::uint32_t p, e;
  std::vector<std::uint64_t> block_offset;  // k+1 entries
  std::vector<std::uint8_t> rows;           // k rows
  std::vector<std::uint8_t> scaled;         // (t*e+s) -> t^s * row t
};

Prepared prepare(const GeneratorView& g) {
  if (g.field->q() > 256) throw Error(Errc::DomainViolation, "enumeration kernels need q <= 256");
  if (g.rows == 0) throw Error(Errc::InvalidArgument, "empty generator");
  Prepared P;
  P.field = g.field;
  P.k = g.rows;
  P.n = g.cols;
  P.width = (g.cols + kLane - 1) / kLane * kLane;
  P.p = g.field->p();
  P.e = g.field->e();
  P.rows.assign(P.k * P.width, 0);
  P.scaled.assign(P.k * P.e * P.width, 0);
  for (std::size_t t = 0; t < P.k; ++t) {
    for (std::size_t c = 0; c < P.n; ++c) P.rows[t * P.width + c] = static_cast<std::uint8_t>(g.data[t * P.n + c]);
    for (std::uint32_t s = 0; s < P.e; ++s) {
      const Elem b = g.field->basis_element(s);
      for (std::size_t c = 0; c < P.n; ++c)
        P.scaled[(t * P.e + s) * P.width + c] = static_cast<std::uint8_t>(g.field->mul(b, g.data[t * P.n + c]));
    }
  }
  P.block_offset.assign(P.k + 1, 0);
  for (std::size_t j = 0; j < P.k; ++j)
    P.block_offset[j + 1] = P.block_offset[j] + (canonical_count(g.field->q(), P.k - j) -
                                                  canonical_count(g.field->q(), P.k - 1 - j));
  return P;
}

struct XorAdd {
  explicit XorAdd(const Prepared&) {}
  void operator()(std::uint8_t* __restrict cw, const std::uint8_t* __restrict r, std::size_t w) const {
    for (std::size_t c = 0; c < w; ++c) cw[c] ^= r[c];
  }
};

struct ModAdd {
  std::uint8_t p;
  explicit ModAdd(const Prepared& P) : p(static_cast<std::uint8_t>(P.p)) {}
  void operator()(std::uint8_t* __restrict cw, const std::uint8_t* __restrict r, std::size_t w) const {
    for (std::size_t c = 0; c < w; ++c) {
      const std::uint8_t s = static_cast<std::uint8_t>(cw[c] + r[c]);
      const std::uint8_t t = static_cast<std::uint8_t>(s - p);
      cw[c] = s < t ? s : t;
    }
  }
};

struct TableAdd {
  const Field* f;
  explicit TableAdd(const Prepared& P) : f(P.field) {}
  void operator()(std::uint8_t* __restrict cw, const std::uint8_t* __restrict r, std::size_t w) const {
    for (std::size_t c = 0; c < w; ++c) cw[c] = static_cast<std::uint8_t>(f->add(cw[c], r[c]));
  }
};

inline std::uint32_t count_zeros(const std::uint8_t* __restrict cw, std::size_t w) {
  std::uint32_t z = 0;
  for (std::size_t base = 0; base < w; base += kLane) {
    std::uint8_t acc = 0;
    for (std::size_t c = 0; c < kLane; ++c) acc = static_cast<std::uint8_t>(acc + (cw[base + c] == 0));
    z += acc;
  }
  return z;
}

// Local indices [n0, n1) of block j; `global` is the global index of n0.
template <class Add>
void run_block(const Prepared& P, const Add& add, std::size_t j, std::uint64_t n0, std::uint64_t n1,
               std::uint64_t global, const TallyOptions& opts, ZeroTally& out) {
  const std::size_t digits = (P.k - 1 - j) * P.e;
  const std::size_t w = P.width;
  std::vector<std::uint8_t> buffer(w, 1);
  std::uint8_t* cw = buffer.data();
  for (std::size_t c = 0; c < P.n; ++c) cw[c] = P.rows[j * w + c];

  std::vector<std::uint32_t> dig(digits + 1, 0);
  {
    std::uint64_t v = n0;
    for (std::size_t i = 0; i < digits; ++i) {
      dig[i] = static_cast<std::uint32_t>(v % P.p);
      v /= P.p;
    }
  }
  auto row_of_digit = [&](std::size_t i) {
    const std::size_t t = P.k - 1 - i / P.e;
    return P.scaled.data() + (t * P.e + i % P.e) * w;
  };
  for (std::size_t i = 0; i < digits; ++i) {
    const std::uint32_t g = (dig[i] + P.p - dig[i + 1]) % P.p;
    for (std::uint32_t rep = 0; rep < g; ++rep) add(cw, row_of_digit(i), w);
  }

  const std::uint32_t cmin = opts.collect_min, cmax = opts.collect_max;
  std::uint64_t* tally = out.tally.data();
  std::uint64_t* first = out.first_index.data();
  const std::uint32_t pm1 = P.p - 1;
  for (std::uint64_t n = n0;; ++n, ++global) {
    const std::uint32_t z = count_zeros(cw, w);
    ++tally[z];
    if (first[z] == kNone) first[z] = global;
    if (z >= cmin && z <= cmax) [[unlikely]] {
      if (out.collected.size() >= opts.collect_cap)
        throw Error(Errc::BudgetExceeded, "collected message list exceeds its cap");
      out.collected.emplace_back(global, z);
    }
    if (n + 1 == n1) break;
    std::size_t i = 0;
    while (dig[i] == pm1) dig[i++] = 0;
    ++dig[i];
    add(cw, row_of_digit(i), w);
  }
  out.messages += n1 - n0;
}

template <class Add>
ZeroTally run_range(const Prepared& P, std::uint64_t a, std::uint64_t b, const TallyOptions& opts) {
  const Add add(P);
  ZeroTally out(P.n);
  for (std::size_t j = 0; j < P.k && a < b; ++j) {
    const std::uint64_t lo = P.block_offset[j], hi = P.block_offset[j + 1];
    if (a >= hi) continue;
    const std::uint64_t stop = std::min(b, hi);
    run_block(P, add, j, a - lo, stop - lo, a, opts, out);
    a = stop;
  }
  return out;
}

ZeroTally dispatch(const Prepared& P, std::uint64_t a, std::uint64_t b, const TallyOptions& opts) {
  if (P.p == 2) return run_range<XorAdd>(P, a, b, opts);
  if (P.e == 1) return run_range<ModAdd>(P, a, b, opts);
  return run_range<TableAdd>(P, a, b, opts);
}

}  // namespace

ZeroTally tally_incremental(const GeneratorView& g, const TallyOptions& opts) {
  const Prepared P = prepare(g);
  const std::uint64_t end = std::min(opts.end, P.block_offset.back());
  if (opts.begin >= end) return ZeroTally(P.n);
  return dispatch(P, opts.begin, end, opts);
}

ZeroTally tally_parallel(const GeneratorView& g, const TallyOptions& opts, int workers) {
  const Prepared P = prepare(g);
  const std::uint64_t begin = opts.begin;
  const std::uint64_t end = std::min(opts.end, P.block_offset.back());
  ZeroTally merged(P.n);
  if (begin >= end) return merged;
  const std::uint64_t chunk = std::max<std::uint64_t>(opts.chunk, 1);
  const std::uint64_t chunks = (end - begin + chunk - 1) / chunk;
#ifdef _OPENMP
  if (workers <= 0) workers = omp_get_max_threads();
#else
  workers = 1;
#endif
  std::vector<ZeroTally> parts(static_cast<std::size_t>(chunks));
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::atomic<bool> failed{false};

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      const std::uint64_t a = begin + static_cast<std::uint64_t>(c) * chunk;
      parts[static_cast<std::size_t>(c)] = dispatch(P, a, std::min(end, a + chunk), opts);
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      failed = true;
    }
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& part : parts) {
    merged.merge(part);
    part = ZeroTally();
    if (merged.collected.size() > opts.collect_cap)
      throw Error(Errc::BudgetExceeded, "collected message list exceeds its cap");
  }
  return merged;
}

}  // namespace prm::kernel
