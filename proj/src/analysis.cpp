#include "prm/analysis.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>

#include "prm/codes.hpp"
#include "prm/error.hpp"
#include "prm/rng.hpp"

namespace prm {
namespace {

std::vector<std::vector<Elem>> coefficient_rows(const LinearFactorization& lf) {
  std::vector<std::vector<Elem>> rows;
  for (const auto& [h, mult] : lf.linear_part) rows.push_back(h.coeffs);
  return rows;
}

bool squarefree_linear(const LinearFactorization& lf) {
  return std::all_of(lf.linear_part.begin(), lf.linear_part.end(), [](const auto& e) { return e.second == 1; });
}

CConditions c_conditions_from(const Form& form, const LinearFactorization& lf) {
  CConditions c;
  const Field& field = form.field();
  const int d = form.degree();
  const int s = lf.s();
  const auto q = static_cast<std::int64_t>(field.q());
  c.applicable = s >= 1;
  c.c1 = d - s >= 2 && d - s <= d - 1;
  std::vector<ProjectivePoint> residual_zeros;
  if (d - s >= 1) {
    residual_zeros = zero_set(lf.residual);
    c.c2 = static_cast<std::int64_t>(residual_zeros.size()) == (d - s - 1) * q + 1;
  }
  c.c3 = s >= 1 && squarefree_linear(lf) && rank(field, coefficient_rows(lf)) <= 2;
  c.c4 = true;
  for (const auto& P : residual_zeros)
    for (const auto& [h, mult] : lf.linear_part)
      if (contains(field, h, P)) c.c4 = false;
  return c;
}

CurveClassification classify_with(const Form& form, const LinearFactorization& lf, std::uint64_t points) {
  CurveClassification c;
  c.d = form.degree();
  c.points = points;
  c.s = lf.s();
  c.linefree_degree = c.d - c.s;
  if (c.linefree_degree == 0)
    c.tags.insert(ClassTag::IsUnionOfLines);
  else if (c.s > 0)
    c.tags.insert(ClassTag::ContainsHyperplane);
  else
    c.tags.insert(ClassTag::LineFree);

  const Field& field = form.field();
  if (form.nvars() == 3) {
    c.c_conditions = c_conditions_from(form, lf);
    const auto lines = coefficient_rows(lf);
    if (c.linefree_degree == 0 && squarefree_linear(lf) && c.d >= 2) {
      if (rank(field, lines) == 2) {
        c.tags.insert(ClassTag::Pencil);
      } else if (c.d >= 3) {
        for (std::size_t skip = 0; skip < lines.size(); ++skip) {
          auto rest = lines;
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(skip));
          if (rank(field, rest) == 2) {
            c.tags.insert(ClassTag::NearPencil);
            break;
          }
        }
      }
    }
  }
  return c;
}

// Point indices of every hyperplane, in frozen orders.
std::vector<std::vector<std::uint32_t>> incidence(const Field& field, int m) {
  const auto& points = cached_projective_points(field, m);
  const auto& planes = cached_hyperplanes(field, m);
  std::vector<std::vector<std::uint32_t>> out(planes.size());
  for (std::size_t h = 0; h < planes.size(); ++h)
    for (std::size_t i = 0; i < points.size(); ++i)
      if (contains(field, planes[h], points[i])) out[h].push_back(static_cast<std::uint32_t>(i));
  return out;
}

ZanellaResult zanella_from_codeword(const std::vector<std::vector<std::uint32_t>>& inc, std::span<const Elem> cw,
                                    std::int64_t q) {
  ZanellaResult r;
  std::uint64_t size = 0;
  for (std::size_t i = 0; i < cw.size(); ++i) size += cw[i] == 0;
  for (const auto& line : inc) {
    std::uint64_t hit = 0;
    for (auto i : line) hit += cw[i] == 0;
    r.a = std::max(r.a, hit);
  }
  r.bound = bounds::zanella_bound(static_cast<std::int64_t>(r.a), q);
  r.holds = static_cast<std::int64_t>(size) <= r.bound;
  return r;
}

std::string attainer_note(std::uint64_t tally, std::int64_t formula, int d) {
  if (formula <= 0 || tally == 0) return {};
  const auto t = static_cast<std::int64_t>(tally);
  if (t == formula) return "formula matches tally";
  if (formula % t == 0) {
    std::string note = "formula is " + std::to_string(formula / t) + "x tally";
    if (d == 3) note += "; a triangle has three choices of distinguished vertex";
    return note;
  }
  return "formula differs from tally";
}

// Bound checks shared by the exhaustive and sampled censuses.
class Checker {
 public:
  Checker(const Field& field, int d, int m) : d_(d), m_(m), q_(static_cast<std::int64_t>(field.q())) {
    const auto serre = bounds::serre_bound(q_, d, m);
    serre_ = add("serre", serre.value, serre.valid, "");
    const auto second = bounds::second_max_points(q_, d, m);
    second_ = add("second_max", second.value, second.valid,
                  second.part ? std::string("part ") + second.part : std::string());
    if (m == 2) {
      if (d >= 3 && d <= q_) {
        const auto third = bounds::third_weight_curve(q_, d, static_cast<int>(field.e()));
        third_ = add("third_weight", third.value, true, bounds::to_string(third.status));
      }
      const auto hk = bounds::hk_linefree(q_, d);
      const bool exceptional = d == 4 && q_ == 4;
      linefree_ = add("hk_linefree", hk.value, d >= 2 && d <= q_, exceptional ? "allowlist: 14 points at (4,4)" : "");
      not_union_ = add("not_union_of_lines", (d - 1) * q_ + 2, d >= 2 && d <= q_, "");
      threshold_ = static_cast<std::uint64_t>(std::max<std::int64_t>(0, (d - 1) * q_ + 2));
    } else {
      const auto hk = bounds::hk_elementary(q_, d, m);
      elementary_ = add("hk_elementary", hk.value, hk.valid, "");
      threshold_ = static_cast<std::uint64_t>(hk.value + 1);
      const auto improved = bounds::improved_elementary(q_, d, m);
      improved_ = add("improved_elementary", improved.value, improved.valid,
                      improved.exceptions.empty() ? "" : improved.exceptions.front());
      if (improved.valid) threshold_ = std::min(threshold_, static_cast<std::uint64_t>(improved.value + 1));
    }
    zanella_ = add("zanella", std::numeric_limits<std::int64_t>::max(), true, "value: smallest slack a q + 1 - |S|");
  }

  // Forms with at least this many points are classified.
  std::uint64_t threshold() const { return threshold_; }

  void count_only(std::uint64_t points, std::uint64_t forms) {
    const auto p = static_cast<std::int64_t>(points);
    record(serre_, forms, p > checks_[serre_].value);
    record(second_, forms, p < checks_[serre_].value && p > checks_[second_].value);
    if (third_ != kAbsent) record(third_, forms, p < checks_[second_].value && p > checks_[third_].value);
  }

  void examined(const CurveClassification& c) {
    const auto p = static_cast<std::int64_t>(c.points);
    if (m_ == 2) {
      const bool allow = d_ == 4 && q_ == 4 && p == 14;
      record(linefree_, 1, c.has(ClassTag::LineFree) && p > checks_[linefree_].value && !allow);
      record(not_union_, 1, !c.has(ClassTag::IsUnionOfLines) && p > checks_[not_union_].value);
    } else {
      const bool free = c.s == 0;
      record(elementary_, 1, free && p > checks_[elementary_].value);
      record(improved_, 1, free && p > checks_[improved_].value);
    }
  }

  void zanella(const ZanellaResult& z, std::uint64_t size) {
    auto& check = checks_[zanella_];
    check.value = std::min(check.value, z.bound - static_cast<std::int64_t>(size));
    record(zanella_, 1, !z.holds);
  }

  std::vector<BoundCheck> finish() {
    if (checks_[zanella_].examined == 0) checks_[zanella_].value = 0;
    for (auto& c : checks_) c.ok = !c.valid || c.violations == 0;
    checks_[zanella_].ok = checks_[zanella_].violations == 0;
    return checks_;
  }

 private:
  static constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();

  std::size_t add(std::string name, std::int64_t value, bool valid, std::string note) {
    BoundCheck c;
    c.bound = std::move(name);
    c.value = value;
    c.valid = valid;
    c.note = std::move(note);
    checks_.push_back(std::move(c));
    return checks_.size() - 1;
  }

  void record(std::size_t i, std::uint64_t forms, bool violated) {
    if (i == kAbsent) return;
    checks_[i].examined += forms;
    if (violated) checks_[i].violations += forms;
  }

  int d_, m_;
  std::int64_t q_;
  std::vector<BoundCheck> checks_;
  std::size_t serre_ = kAbsent, second_ = kAbsent, third_ = kAbsent, linefree_ = kAbsent, not_union_ = kAbsent,
              elementary_ = kAbsent, improved_ = kAbsent, zanella_ = kAbsent;
  std::uint64_t threshold_ = 0;
};

void validate_census_args(const Field& field, int d, int m) {
  if (m < 2) throw Error(Errc::InvalidArgument, "census needs m >= 2");
  if (d < 1 || static_cast<std::uint64_t>(d) > field.q())
    throw Error(Errc::DegreeOutOfRange, "census needs 1 <= d <= q");
}

}  // namespace

std::string to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::IsUnionOfLines: return "IsUnionOfLines";
    case ClassTag::Pencil: return "Pencil";
    case ClassTag::NearPencil: return "NearPencil";
    case ClassTag::ContainsHyperplane: return "ContainsHyperplane";
    case ClassTag::LineFree: return "LineFree";
  }
  return "unknown";
}

std::string to_string(CensusMode mode) { return mode == CensusMode::Exhaustive ? "exhaustive" : "sampled"; }

std::string CurveClassification::key() const {
  std::string k;
  for (auto t : tags) {
    if (!k.empty()) k += '+';
    k += to_string(t);
  }
  return k + ";s=" + std::to_string(s);
}

bool CensusReport::all_ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.ok; });
}

CurveClassification classify(const Form& form) {
  if (!form.homogeneous()) throw Error(Errc::InvalidArgument, "classification needs a homogeneous form");
  if (form.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot classify the zero form");
  return classify_with(form, linear_factors(form), zero_count(form, Space::Projective));
}

CConditions c_conditions_check(const Form& form) {
  if (!form.homogeneous() || form.nvars() != 3)
    throw Error(Errc::InvalidArgument, "conditions apply to plane curves only");
  if (form.is_zero()) throw Error(Errc::ZeroPolynomial, "zero form");
  return c_conditions_from(form, linear_factors(form));
}

ZanellaResult zanella_check(const Field& field, int m, const std::vector<ProjectivePoint>& points) {
  ZanellaResult r;
  if (!points.empty()) {
    for (const auto& h : cached_hyperplanes(field, m)) {
      std::uint64_t hit = 0;
      for (const auto& P : points) hit += contains(field, h, P);
      r.a = std::max(r.a, hit);
    }
  }
  r.bound = bounds::zanella_bound(static_cast<std::int64_t>(r.a), static_cast<std::int64_t>(field.q()));
  r.holds = static_cast<std::int64_t>(points.size()) <= r.bound;
  return r;
}

std::uint64_t passant_profile(const Form& conic, const ProjectivePoint& P) {
  if (!conic.homogeneous() || conic.nvars() != 3 || conic.degree() != 2)
    throw Error(Errc::InvalidArgument, "expected a plane conic");
  const Field& field = conic.field();
  const auto points = zero_set(conic);
  if (points.size() != field.q() + 1 || linear_factors(conic).s() != 0)
    throw Error(Errc::DomainViolation, "conic is not nonsingular");
  if (evaluate(conic, P.coords) == 0) throw Error(Errc::PointOnConic, "point lies on the conic");
  std::uint64_t passants = 0;
  for (const auto& h : cached_hyperplanes(field, 2)) {
    if (!contains(field, h, P)) continue;
    passants += std::none_of(points.begin(), points.end(), [&](const auto& X) { return contains(field, h, X); });
  }
  return passants;
}

AttainerSummary attainer_census(FieldPtr field, int d, int m, std::uint64_t target, std::uint64_t budget,
                                int workers) {
  validate_census_args(*field, d, m);
  const Code code = build_code(CodeKind::PRM, field, d, m, true);
  const auto space = kernel::canonical_count(field->q(), code.k);
  if (space > budget)
    throw Error(Errc::BudgetExceeded, std::to_string(space) + " forms exceed budget " + std::to_string(budget));
  kernel::TallyOptions t;
  t.collect_min = t.collect_max = static_cast<std::uint32_t>(target);
  const auto tally = kernel::tally_parallel(code.view(), t, workers);

  AttainerSummary out;
  out.target = target;
  for (const auto& [index, z] : tally.collected) {
    ++out.tally;
    const Form f = message_form(code, kernel::canonical_message(*field, code.k, index));
    ++out.histogram[classify_with(f, linear_factors(f), z).key()];
  }
  const auto q = static_cast<std::int64_t>(field->q());
  if (m == 2 && static_cast<std::int64_t>(target) == d * q - d + 3) {
    out.formula = bounds::near_pencil_formula_count(q, d);
    out.note = attainer_note(out.tally, out.formula, d);
  }
  return out;
}

CensusReport census(FieldPtr field, int d, int m, const CensusOptions& opts) {
  validate_census_args(*field, d, m);
  const Code code = build_code(CodeKind::PRM, field, d, m, true);
  const auto q = static_cast<std::int64_t>(field->q());
  const auto space = kernel::canonical_count(field->q(), code.k);
  const auto inc = incidence(*field, m);

  CensusReport report;
  report.q = q;
  report.d = d;
  report.m = m;
  report.mode = opts.mode;
  Checker checker(*field, d, m);

  auto examine = [&](const Form& f, std::uint64_t points) {
    const auto c = classify_with(f, linear_factors(f), points);
    checker.examined(c);
    return c;
  };
  auto examine_zanella = [&](const Form& f) {
    const auto cw = encode(code, f.coeffs());
    const auto z = zanella_from_codeword(inc, cw, q);
    checker.zanella(z, static_cast<std::uint64_t>(std::count(cw.begin(), cw.end(), Elem{0})));
  };

  std::map<std::uint64_t, std::uint64_t> first;  // points -> index of witness message
  if (opts.mode == CensusMode::Exhaustive) {
    if (space > opts.budget)
      throw Error(Errc::BudgetExceeded, std::to_string(space) + " forms exceed budget " + std::to_string(opts.budget));
    kernel::TallyOptions t;
    t.collect_min = static_cast<std::uint32_t>(std::min<std::uint64_t>(checker.threshold(), code.n + 1));
    t.collect_max = static_cast<std::uint32_t>(code.n);
    const auto tally = kernel::tally_parallel(code.view(), t, opts.workers);
    report.forms = tally.messages;
    for (std::size_t z = 0; z < tally.tally.size(); ++z) {
      if (tally.tally[z] == 0) continue;
      report.histogram[z] = tally.tally[z];
      first[z] = tally.first_index[z];
    }

    const auto second = bounds::second_max_points(q, d, m);
    const bool track_second = m == 2 && d >= 3 && d <= q;
    AttainerSummary attainers;
    attainers.target = static_cast<std::uint64_t>(second.value);
    for (const auto& [index, z] : tally.collected) {
      const Form f = message_form(code, kernel::canonical_message(*field, code.k, index));
      const auto c = examine(f, z);
      examine_zanella(f);
      if (track_second && z == attainers.target) {
        ++attainers.tally;
        ++attainers.histogram[c.key()];
      }
    }
    if (track_second) {
      attainers.formula = bounds::near_pencil_formula_count(q, d);
      attainers.note = attainer_note(attainers.tally, attainers.formula, d);
      report.second = std::move(attainers);
    }
  } else {
    if (opts.samples > opts.budget)
      throw Error(Errc::BudgetExceeded, "sample count exceeds budget " + std::to_string(opts.budget));
    report.seed = opts.seed;
    report.forms = opts.samples;
    const auto view = code.view();
    std::vector<std::uint64_t> indices(opts.samples);
    std::vector<std::uint32_t> zeros(opts.samples);
    std::vector<ZanellaResult> zan(opts.samples);
#pragma omp parallel for schedule(static) num_threads(opts.workers > 0 ? opts.workers : omp_get_max_threads())
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(opts.samples); ++i) {
      const auto s = static_cast<std::size_t>(i);
      auto rng = SplitMix64::at(opts.seed, static_cast<std::uint64_t>(i));
      indices[s] = rng.below(space);
      const auto cw = kernel::encode(view, kernel::canonical_message(*field, code.k, indices[s]));
      zeros[s] = static_cast<std::uint32_t>(std::count(cw.begin(), cw.end(), Elem{0}));
      zan[s] = zanella_from_codeword(inc, cw, q);
    }
    for (std::size_t s = 0; s < opts.samples; ++s) {
      ++report.histogram[zeros[s]];
      first.emplace(zeros[s], indices[s]);
      checker.zanella(zan[s], zeros[s]);
      if (zeros[s] >= checker.threshold())
        examine(message_form(code, kernel::canonical_message(*field, code.k, indices[s])), zeros[s]);
    }
  }

  for (const auto& [points, forms] : report.histogram) checker.count_only(points, forms);
  for (auto it = report.histogram.rbegin(); it != report.histogram.rend() && report.top.size() < opts.top_k; ++it) {
    const Form w = message_form(code, kernel::canonical_message(*field, code.k, first.at(it->first)));
    if (opts.mode == CensusMode::Exhaustive) examine_zanella(w);
    report.top.push_back(CensusEntry{it->first, it->second, w});
  }
  report.checks = checker.finish();
  return report;
}

}  // namespace prm
