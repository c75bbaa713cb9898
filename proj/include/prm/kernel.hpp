#pragma once

// Exhaustive zero-count enumeration over the canonical message space of a
// generator matrix.
//
// Canonical messages have first nonzero entry 1. They are indexed by a global
// position: block j (leading entry at position j) holds q^{k-1-j} messages,
// blocks are laid out in order of j, and inside a block the trailing entries
// follow a modular p-ary Gray code over their GF(p) digits, so that
// consecutive messages differ by adding t^s times one generator row.
//
// Three implementations share that index map:
//   tally_reference   serial, recomputes every codeword by a full product
//   tally_incremental serial, one row addition per message
//   tally_parallel    OpenMP over fixed-size chunks of the index range
// Results are identical for all three and do not depend on worker count.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "prm/gf.hpp"

namespace prm::kernel {

inline constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

struct GeneratorView {
  const Field* field;
  std::size_t rows;
  std::size_t cols;
  std::span<const Elem> data;  // rows x cols, row-major
};

/// (q^k - 1)/(q - 1), saturating at kNone.
std::uint64_t canonical_count(std::uint64_t q, std::size_t k);

/// Message at a global canonical index.
std::vector<Elem> canonical_message(const Field& field, std::size_t k, std::uint64_t index);

struct TallyOptions {
  std::uint64_t begin = 0;
  std::uint64_t end = kNone;  // clamped to canonical_count
  // Messages whose zero count lies in [collect_min, collect_max] are recorded.
  std::uint32_t collect_min = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t collect_max = std::numeric_limits<std::uint32_t>::max();
  std::size_t collect_cap = std::size_t{1} << 24;
  std::uint64_t chunk = std::uint64_t{1} << 20;  // parallel work unit
};

struct ZeroTally {
  std::vector<std::uint64_t> tally;        // tally[z] = messages with z zeros
  std::vector<std::uint64_t> first_index;  // smallest index with z zeros, or kNone
  std::vector<std::pair<std::uint64_t, std::uint32_t>> collected;  // (index, zeros), ascending index
  std::uint64_t messages = 0;

  explicit ZeroTally(std::size_t cols = 0);
  /// Adds a tally covering a later index range.
  void merge(const ZeroTally& later);
};

ZeroTally tally_reference(const GeneratorView& g, const TallyOptions& opts = {});
ZeroTally tally_incremental(const GeneratorView& g, const TallyOptions& opts = {});
ZeroTally tally_parallel(const GeneratorView& g, const TallyOptions& opts = {}, int workers = 0);

/// Codeword of a message by direct product.
std::vector<Elem> encode(const GeneratorView& g, std::span<const Elem> message);

}  // namespace prm::kernel
