#include <algorithm>

#include "prm/kernel.hpp"

namespace prm::kernel {

std::uint64_t canonical_count(std::uint64_t q, std::size_t k) {
  unsigned __int128 total = 0, block = 1;
  for (std::size_t j = 0; j < k; ++j) {
    total += block;
    if (total > kNone - 1) return kNone;
    block *= q;
    if (block > kNone) block = static_cast<unsigned __int128>(kNone) + 1;
  }
  return static_cast<std::uint64_t>(total);
}

std::vector<Elem> canonical_message(const Field& field, std::size_t k, std::uint64_t index) {
  const std::uint64_t q = field.q();
  const std::uint32_t p = field.p();
  const std::uint32_t e = field.e();
  std::vector<Elem> msg(k, 0);
  for (std::size_t j = 0; j < k; ++j) {
    const std::uint64_t size = canonical_count(q, k - j) - canonical_count(q, k - 1 - j);
    if (index >= size) {
      index -= size;
      continue;
    }
    msg[j] = 1;
    const std::size_t digits = (k - 1 - j) * e;
    std::vector<std::uint32_t> n(digits + 1, 0);
    for (std::size_t i = 0; i < digits; ++i) {
      n[i] = static_cast<std::uint32_t>(index % p);
      index /= p;
    }
    for (std::size_t i = 0; i < digits; ++i) {
      const std::uint32_t g = (n[i] + p - n[i + 1]) % p;
      const std::size_t t = k - 1 - i / e;
      msg[t] += g * field.basis_element(static_cast<std::uint32_t>(i % e));
    }
    return msg;
  }
  throw Error(Errc::BadIndex, "canonical index out of range");
}

ZeroTally::ZeroTally(std::size_t cols) : tally(cols + 1, 0), first_index(cols + 1, kNone) {}

void ZeroTally::merge(const ZeroTally& later) {
  if (tally.size() < later.tally.size()) {
    tally.resize(later.tally.size(), 0);
    first_index.resize(later.first_index.size(), kNone);
  }
  for (std::size_t z = 0; z < later.tally.size(); ++z) {
    tally[z] += later.tally[z];
    first_index[z] = std::min(first_index[z], later.first_index[z]);
  }
  collected.insert(collected.end(), later.collected.begin(), later.collected.end());
  messages += later.messages;
}

std::vector<Elem> encode(const GeneratorView& g, std::span<const Elem> message) {
  if (message.size() != g.rows) throw Error(Errc::LengthMismatch, "message length differs from dimension");
  const Field& f = *g.field;
  std::vector<Elem> cw(g.cols, 0);
  for (std::size_t r = 0; r < g.rows; ++r) {
    if (message[r] == 0) continue;
    for (std::size_t c = 0; c < g.cols; ++c) cw[c] = f.add(cw[c], f.mul(message[r], g.data[r * g.cols + c]));
  }
  return cw;
}

ZeroTally tally_reference(const GeneratorView& g, const TallyOptions& opts) {
  const std::uint64_t total = canonical_count(g.field->q(), g.rows);
  const std::uint64_t end = std::min(opts.end, total);
  ZeroTally out(g.cols);
  for (std::uint64_t idx = opts.begin; idx < end; ++idx) {
    const auto cw = encode(g, canonical_message(*g.field, g.rows, idx));
    const auto z = static_cast<std::uint32_t>(std::count(cw.begin(), cw.end(), Elem{0}));
    ++out.tally[z];
    out.first_index[z] = std::min(out.first_index[z], idx);
    if (z >= opts.collect_min && z <= opts.collect_max) {
      if (out.collected.size() >= opts.collect_cap)
        throw Error(Errc::BudgetExceeded, "collected message list exceeds its cap");
      out.collected.emplace_back(idx, z);
    }
    ++out.messages;
  }
  return out;
}

}  // namespace prm::kernel
