#pragma once

// Generalized (affine) and projective Reed-Muller codes as evaluation codes.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prm/kernel.hpp"
#include "prm/poly.hpp"

namespace prm {

enum class CodeKind { GRM, PRM };

std::string to_string(CodeKind kind);

struct Code {
  CodeKind kind;
  FieldPtr field;
  int d;
  int m;
  std::size_t n;
  std::size_t k;
  // True when row i is the evaluation of basis monomial i. False only for
  // d = q codes whose monomial images were dependent and got row-reduced.
  bool monomial_rows;
  std::vector<Elem> generator;  // k x n, row-major, columns in frozen point order

  std::span<const Elem> row(std::size_t i) const { return {generator.data() + i * n, n}; }
  kernel::GeneratorView view() const { return {field.get(), k, n, generator}; }
};

/// Throws DegreeOutOfRange unless 1 <= d <= q-1, or d = q with allow_degree_q.
Code build_code(CodeKind kind, FieldPtr field, int d, int m, bool allow_degree_q = false);

std::vector<Elem> encode(const Code& code, std::span<const Elem> message);
std::uint64_t codeword_weight(const Code& code, std::span<const Elem> message);
/// The polynomial whose evaluation is the message's codeword (monomial_rows only).
Form message_form(const Code& code, std::span<const Elem> message);

enum class SpectrumMode { ExhaustiveUpToScalar, ExhaustiveFull, Sampled };

std::string to_string(SpectrumMode mode);

struct SpectrumOptions {
  SpectrumMode mode = SpectrumMode::ExhaustiveUpToScalar;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0xC0DE;
  std::uint64_t budget = 10'000'000'000ull;
  int workers = 0;
};

struct WeightSpectrum {
  SpectrumMode mode;
  std::map<std::uint64_t, std::uint64_t> counts;  // weight -> number of codewords
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

WeightSpectrum weight_spectrum(const Code& code, const SpectrumOptions& opts = {});

/// Ascending nonzero weights with their counts, at most top_k of them.
std::vector<std::pair<std::uint64_t, std::uint64_t>> distinct_weights(const WeightSpectrum& spectrum,
                                                                      std::size_t top_k);

}  // namespace prm
