#include "prm/codes.hpp"

#include <algorithm>

#include "prm/rng.hpp"

namespace prm {
namespace {

Elem monomial_value(const Field& field, const Monomial& mono, std::span<const Elem> point) {
  Elem v = 1;
  for (std::size_t i = 0; i < point.size(); ++i)
    if (mono.exps[i] > 0) v = field.mul(v, field.pow(point[i], static_cast<std::uint64_t>(mono.exps[i])));
  return v;
}

// Reduced row echelon form with zero rows dropped.
std::vector<std::vector<Elem>> independent_rows(const Field& field, std::vector<std::vector<Elem>> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Elem inv = field.inv(rows[r][c]);
    for (auto& x : rows[r]) x = field.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Elem f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = field.sub(rows[i][j], field.mul(f, rows[r][j]));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

}  // namespace

std::string to_string(CodeKind kind) { return kind == CodeKind::GRM ? "GRM" : "PRM"; }

std::string to_string(SpectrumMode mode) {
  switch (mode) {
    case SpectrumMode::ExhaustiveUpToScalar: return "exhaustive";
    case SpectrumMode::ExhaustiveFull: return "exhaustive-full";
    case SpectrumMode::Sampled: return "sampled";
  }
  return "unknown";
}

Code build_code(CodeKind kind, FieldPtr field, int d, int m, bool allow_degree_q) {
  const int q = static_cast<int>(field->q());
  if (d < 1) throw Error(Errc::DegreeOutOfRange, "degree must be >= 1");
  if (d > q || (d == q && !allow_degree_q))
    throw Error(Errc::DegreeOutOfRange, "degree must be <= q-1 (or q when explicitly allowed)");
  if (m < 1) throw Error(Errc::InvalidArgument, "dimension must be >= 1");

  const bool projective = kind == CodeKind::PRM;
  const auto& basis = monomial_basis(projective ? m + 1 : m, d, projective);
  std::vector<std::vector<Elem>> points;
  if (projective) {
    for (const auto& pt : cached_projective_points(*field, m)) points.push_back(pt.coords);
  } else {
    for (const auto& pt : cached_affine_points(*field, m)) points.push_back(pt.coords);
  }

  std::vector<std::vector<Elem>> rows(basis.size(), std::vector<Elem>(points.size()));
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (std::size_t c = 0; c < points.size(); ++c) rows[b][c] = monomial_value(*field, basis[b], points[c]);

  Code code{kind, field, d, m, points.size(), basis.size(), true, {}};
  if (rank(*field, rows) < rows.size()) {
    rows = independent_rows(*field, std::move(rows));
    code.k = rows.size();
    code.monomial_rows = false;
  }
  code.generator.reserve(code.k * code.n);
  for (const auto& row : rows) code.generator.insert(code.generator.end(), row.begin(), row.end());
  return code;
}

std::vector<Elem> encode(const Code& code, std::span<const Elem> message) {
  return kernel::encode(code.view(), message);
}

std::uint64_t codeword_weight(const Code& code, std::span<const Elem> message) {
  const auto cw = encode(code, message);
  return static_cast<std::uint64_t>(std::count_if(cw.begin(), cw.end(), [](Elem v) { return v != 0; }));
}

Form message_form(const Code& code, std::span<const Elem> message) {
  if (!code.monomial_rows) throw Error(Errc::InvalidArgument, "code rows are not monomial evaluations");
  if (message.size() != code.k) throw Error(Errc::LengthMismatch, "message length differs from dimension");
  const bool projective = code.kind == CodeKind::PRM;
  return Form(code.field, projective ? code.m + 1 : code.m, code.d, projective,
              std::vector<Elem>(message.begin(), message.end()));
}

WeightSpectrum weight_spectrum(const Code& code, const SpectrumOptions& opts) {
  WeightSpectrum out{opts.mode, {}, 0, 0};
  const std::uint64_t space = kernel::canonical_count(code.field->q(), code.k);
  if (opts.mode == SpectrumMode::Sampled) {
    out.samples = opts.samples;
    out.seed = opts.seed;
    std::vector<std::uint32_t> zeros(opts.samples);
    const auto view = code.view();
#pragma omp parallel for schedule(static) num_threads(opts.workers > 0 ? opts.workers : 1)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(opts.samples); ++i) {
      auto rng = SplitMix64::at(opts.seed, static_cast<std::uint64_t>(i));
      const auto cw = kernel::encode(view, kernel::canonical_message(*code.field, code.k, rng.below(space)));
      zeros[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(std::count(cw.begin(), cw.end(), Elem{0}));
    }
    for (auto z : zeros) ++out.counts[code.n - z];
    return out;
  }

  if (space > opts.budget)
    throw Error(Errc::BudgetExceeded, std::to_string(space) + " messages exceed budget " + std::to_string(opts.budget));
  const auto tally = kernel::tally_parallel(code.view(), {}, opts.workers);
  const std::uint64_t scale = opts.mode == SpectrumMode::ExhaustiveFull ? code.field->q() - 1 : 1;
  for (std::size_t z = 0; z < tally.tally.size(); ++z)
    if (tally.tally[z] > 0) out.counts[code.n - z] += tally.tally[z] * scale;
  if (opts.mode == SpectrumMode::ExhaustiveFull) out.counts[0] += 1;
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> distinct_weights(const WeightSpectrum& spectrum,
                                                                      std::size_t top_k) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& [w, c] : spectrum.counts) {
    if (w == 0 || c == 0) continue;
    if (out.size() == top_k) break;
    out.emplace_back(w, c);
  }
  return out;
}

}  // namespace prm
