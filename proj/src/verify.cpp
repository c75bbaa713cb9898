#include "prm/verify.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

#include "prm/analysis.hpp"
#include "prm/bounds.hpp"
#include "prm/codes.hpp"
#include "prm/error.hpp"
#include "prm/extremal.hpp"
#include "prm/rng.hpp"

namespace prm {
namespace {

using Clock = std::chrono::steady_clock;
using Key = std::tuple<int, int, int>;  // (q, d, m)

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string key_text(const Key& k) {
  return "(" + std::to_string(std::get<0>(k)) + "," + std::to_string(std::get<1>(k)) + "," +
         std::to_string(std::get<2>(k)) + ")";
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(s < 10 ? 2 : 0);
  out << std::fixed << s << "s";
  return out.str();
}

Form random_form(const FieldPtr& field, int nvars, int degree, bool homogeneous, SplitMix64& rng) {
  const auto size = monomial_basis(nvars, degree, homogeneous).size();
  for (;;) {
    std::vector<Elem> c(size);
    for (auto& x : c) x = static_cast<Elem>(rng.below(field->q()));
    Form f(field, nvars, degree, homogeneous, std::move(c));
    if (!f.is_zero()) return f;
  }
}

LinearForm random_line(const Field& field, int m, SplitMix64& rng) {
  const auto& H = cached_hyperplanes(field, m);
  return H[rng.below(H.size())];
}

struct CensusRun {
  CensusReport report;
  double seconds = 0;
};

class Runner {
 public:
  Runner(Level level, int workers, const ProgressFn& progress) : level_(level), workers_(workers), progress_(progress) {
    plane_.push_back({3, 3, 2});
    plane_.push_back({4, 3, 2});
    if (level_ >= Level::Full) {
      plane_.push_back({5, 3, 2});
      plane_.push_back({5, 4, 2});
    }
    if (level_ >= Level::Long) plane_.push_back({4, 4, 2});
  }

  std::vector<CriterionResult> run() {
    step(1, "top plane-curve count is dq + 1", [&] { return serre_top(); });
    step(2, "second-highest count is dq - d + 3", [&] { return second_top(); });
    step(3, "second-count attainers are near-pencils", [&] { return attainer_shapes(); });
    step(4, "second-count attainer tally vs closed form", [&] { return attainer_count(); });
    step(5, "third-highest plane-curve counts", [&] { return third_top(); });
    step(6, "GRM top zero counts", [&] { return grm_weights(); });
    step(7, "extremal constructions", [&] { return constructions(); });
    step(8, "bound inequality grid", [&] { return inequality_grid(); });
    step(9, "property suites", [&] { return properties(); });
    step(10, "sampled censuses respect valid bounds", [&] { return sampled(); });
    return results_;
  }

 private:
  using Outcome = std::pair<bool, std::string>;

  template <class Fn>
  void step(int id, std::string name, Fn fn) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    const auto t0 = Clock::now();
    try {
      std::tie(r.passed, r.detail) = fn();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = since(t0);
    if (progress_) progress_(r);
    results_.push_back(std::move(r));
  }

  const CensusRun& plane_census(const Key& k) {
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    const auto [q, d, m] = k;
    CensusOptions opts;
    opts.top_k = 3;
    opts.workers = workers_;
    const auto t0 = Clock::now();
    CensusRun run{census(make_field_of_order(static_cast<std::uint32_t>(q)), d, m, opts), 0};
    run.seconds = since(t0);
    return cache_.emplace(k, std::move(run)).first->second;
  }

  static double time_limit(const Key& k) {
    static const std::map<Key, double> limits{
        {{3, 3, 2}, 1.0}, {{4, 3, 2}, 5.0}, {{5, 3, 2}, 30.0}, {{4, 4, 2}, 3600.0}, {{5, 4, 2}, 3600.0}};
    return limits.at(k);
  }

  std::uint64_t top_count(const CensusReport& r, std::size_t i) const { return i < r.top.size() ? r.top[i].count : 0; }

  Outcome serre_top() {
    bool ok = true;
    std::string detail;
    for (const auto& k : plane_) {
      const auto& run = plane_census(k);
      const auto [q, d, m] = k;
      const auto expected = static_cast<std::uint64_t>(d * q + 1);
      const bool good = top_count(run.report, 0) == expected && run.seconds < time_limit(k);
      ok = ok && good;
      detail += key_text(k) + " max " + std::to_string(top_count(run.report, 0)) + "/" + std::to_string(expected) +
                " in " + fmt_seconds(run.seconds) + "; ";
    }
    return {ok, detail};
  }

  Outcome second_top() {
    bool ok = true;
    std::string detail;
    for (const auto& k : plane_) {
      const auto& r = plane_census(k).report;
      const auto [q, d, m] = k;
      const auto expected = static_cast<std::uint64_t>(d * q - d + 3);
      ok = ok && top_count(r, 1) == expected;
      detail += key_text(k) + " " + std::to_string(top_count(r, 1)) + "/" + std::to_string(expected) + "; ";
    }
    return {ok, detail};
  }

  Outcome attainer_shapes() {
    bool ok = true;
    std::string detail;
    for (const auto& k : plane_) {
      const auto& r = plane_census(k).report;
      if (!r.second) return {false, key_text(k) + " has no attainer summary"};
      std::uint64_t near = 0;
      for (const auto& [key, n] : r.second->histogram)
        if (key.find("NearPencil") != std::string::npos) near += n;
      ok = ok && near == r.second->tally && r.second->tally > 0;
      detail += key_text(k) + " " + std::to_string(near) + "/" + std::to_string(r.second->tally) + " near-pencils; ";
    }
    return {ok, detail};
  }

  Outcome attainer_count() {
    const auto& small = plane_census({3, 3, 2}).report;
    bool ok = small.second && small.second->tally == 234 && small.second->formula == 702 &&
              small.second->note.find("3x") != std::string::npos;
    std::string detail = "(3,3,2) tally " + std::to_string(small.second ? small.second->tally : 0) + ", formula " +
                         std::to_string(small.second ? small.second->formula : 0) + " (" +
                         (small.second ? small.second->note : "") + ")";
    if (level_ >= Level::Long) {
      const auto& big = plane_census({4, 4, 2}).report;
      const bool good = big.second && big.second->tally == 3360 && big.second->formula == 3360;
      ok = ok && good;
      detail += "; (4,4,2) tally " + std::to_string(big.second ? big.second->tally : 0) + ", formula " +
                std::to_string(big.second ? big.second->formula : 0);
    }
    return {ok, detail};
  }

  Outcome third_top() {
    static const std::map<Key, std::uint64_t> expected{
        {{3, 3, 2}, 8}, {{4, 3, 2}, 10}, {{5, 3, 2}, 12}, {{4, 4, 2}, 14}, {{5, 4, 2}, 18}};
    bool ok = true;
    std::string detail;
    for (const auto& k : plane_) {
      const auto it = expected.find(k);
      if (it == expected.end()) continue;
      const auto got = top_count(plane_census(k).report, 2);
      ok = ok && got == it->second;
      detail += key_text(k) + " " + std::to_string(got) + "/" + std::to_string(it->second) + "; ";
    }
    return {ok, detail};
  }

  Outcome grm_weights() {
    bool ok = true;
    std::string detail;
    const std::vector<std::tuple<int, int, int>> cases{{3, 2, 2}, {4, 2, 2}, {4, 2, 3}, {5, 2, 2}, {5, 2, 3}};
    for (const auto& [q, m, d] : cases) {
      const auto t0 = Clock::now();
      const Code code = build_code(CodeKind::GRM, make_field_of_order(static_cast<std::uint32_t>(q)), d, m);
      SpectrumOptions opts;
      opts.workers = workers_;
      const auto low = distinct_weights(weight_spectrum(code, opts), 2);
      const double secs = since(t0);
      const auto first = static_cast<std::uint64_t>(bounds::ore_bound(q, d, m).value);
      const auto second = static_cast<std::uint64_t>(bounds::geil_second(q, d, m).value);
      const bool good =
          low.size() == 2 && code.n - low[0].first == first && code.n - low[1].first == second && secs < 10.0;
      ok = ok && good;
      detail += "(" + std::to_string(q) + "," + std::to_string(m) + "," + std::to_string(d) + ") zeros " +
                (low.size() == 2 ? std::to_string(code.n - low[0].first) + "," + std::to_string(code.n - low[1].first)
                                 : std::string("?")) +
                "; ";
    }
    return {ok, detail};
  }

  Outcome constructions() {
    std::uint64_t built = 0, failed = 0;
    std::string first_failure;
    auto attempt = [&](const std::string& what, auto&& make) {
      ++built;
      try {
        const Construction c = make();
        if (c.measured_count != c.predicted_count) throw Error(Errc::Internal, "count mismatch");
        if (c.form.homogeneous() &&
            !zanella_check(c.form.field(), c.form.nvars() - 1, zero_set(c.form)).holds)
          throw Error(Errc::Internal, "zero set breaks the section bound");
      } catch (const std::exception& e) {
        ++failed;
        if (first_failure.empty()) first_failure = what + ": " + e.what();
      }
    };
    for (int q : {3, 4, 5, 7, 8, 9}) {
      const auto field = make_field_of_order(static_cast<std::uint32_t>(q));
      const std::string tag = "q=" + std::to_string(q);
      for (int m : {2, 3})
        for (int d = 1; d <= q; ++d)
          attempt(tag + " pencil d=" + std::to_string(d) + " m=" + std::to_string(m),
                  [&] { return pencil_of_lines(field, d, m); });
      for (int d = 3; d <= q; ++d)
        attempt(tag + " near pencil d=" + std::to_string(d), [&] { return near_pencil(field, d); });
      for (int m : {2, 3})
        for (int d = 2; d < q; ++d) {
          attempt(tag + " type I", [&] { return affine_type1(field, d, m); });
          attempt(tag + " type II", [&] { return affine_type2(field, d, m); });
        }
      for (int d = 2; d <= q + 1; ++d)
        attempt(tag + " doubled line d=" + std::to_string(d), [&] { return pencil_with_double_line(field, d); });
      attempt(tag + " hyperbolic quadric", [&] {
        auto c = hyperbolic_quadric(field, 3);
        if (c.measured_count != (q + 1) * (q + 1)) throw Error(Errc::Internal, "quadric is not (q+1)^2");
        return c;
      });
      attempt(tag + " line plus conic", [&] { return line_plus_conic(field); });
      if (q >= 4) attempt(tag + " four lines", [&] { return four_lines_general_position(field); });
      if (q == 4 || q == 9) {
        attempt(tag + " hermitian", [&] { return hermitian_curve(field); });
        attempt(tag + " hermitian surface", [&] {
          auto c = hermitian_surface_cone(field, 3);
          if (q == 4 && c.measured_count != 45) throw Error(Errc::Internal, "surface is not 45 points");
          return c;
        });
      }
    }
    return {failed == 0, std::to_string(built - failed) + "/" + std::to_string(built) + " constructions match" +
                             (first_failure.empty() ? "" : "; first failure " + first_failure)};
  }

  Outcome inequality_grid() {
    std::uint64_t checked = 0, bad = 0;
    for (std::int64_t q : {3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64, 81}) {
      for (int m = 3; m <= 6; ++m) {
        for (int d = 3; 2 * d <= q + 3; ++d) {
          const auto a = bounds::second_max_points(q, d, m);
          const auto hk = bounds::hk_elementary(q, d, m).value;
          const auto improved = bounds::improved_elementary(q, d, m).value;
          const auto gap = bounds::ipow(q, m - 2) * (q + 3 - 2 * d);
          checked += 3;
          bad += a.part != 'a';
          bad += !(hk <= a.value && (hk == a.value) == (2 * d == q + 3) && a.value - hk == gap);
          bad += !(improved < a.value);
        }
        std::int64_t prev_serre = 0, prev_hk = 0;
        for (int d = 1; d <= q; ++d) {
          const auto serre = bounds::serre_bound(q, d, m).value;
          const auto hk = bounds::hk_elementary(q, d, m).value;
          checked += 2;
          bad += serre < prev_serre;
          bad += hk < prev_hk;
          prev_serre = serre;
          prev_hk = hk;
        }
      }
      for (int d = 3; d <= q; ++d) {
        checked += 3;
        bad += (d * q - d + 3) - ((d - 1) * q + 1) != q - d + 2 || q - d + 2 <= 0;
        bad += (d * q - d + 3) - ((d - 1) * q + 2) != q - d + 1 || q - d + 1 <= 0;
        bad += (d * q + 1 - 2 * (d - 3) >= (d - 1) * q + 2) != (2 * d <= q + 5);
      }
    }
    return {bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) + " inequalities hold"};
  }

  Outcome properties() {
    const bool small = level_ == Level::Quick;
    SplitMix64 rng(0xC0DE);
    std::uint64_t zanella_sets = 0, zanella_bad = 0, split = 0, split_bad = 0, factor = 0, factor_bad = 0, pass = 0,
                  pass_bad = 0;
    auto zanella = [&](const Field& field, int m, const std::vector<ProjectivePoint>& pts) {
      ++zanella_sets;
      zanella_bad += !zanella_check(field, m, pts).holds;
    };

    const std::vector<Key> configs{{3, 3, 2}, {4, 3, 2}, {5, 4, 2}, {7, 3, 2}, {3, 2, 3}, {4, 3, 3}};
    const int per_config = small ? 40 : 200;
    for (const auto& [q, d, m] : configs) {
      const auto field = make_field_of_order(static_cast<std::uint32_t>(q));
      for (int i = 0; i < per_config; ++i) {
        const Form f = random_form(field, m + 1, d, true, rng);
        const LinearForm h = random_line(*field, m, rng);
        const auto zs = zero_set(f);
        zanella(*field, m, zs);
        const auto on_h = hyperplane_section(*field, zs, h).size();
        try {
          const auto off_h = zero_count(dehomogenize(f, h), Space::Affine);
          ++split;
          split_bad += zs.size() != on_h + off_h;
        } catch (const Error& e) {
          if (e.code() != Errc::ZeroForm) throw;
        }
      }
    }

    const int factor_total = small ? 1000 : 10000;
    const std::vector<Key> factor_configs{{3, 3, 2}, {4, 4, 2}, {5, 3, 2}, {7, 3, 2}, {3, 3, 3}, {4, 2, 3}};
    for (int i = 0; i < factor_total; ++i) {
      const auto [q, d, m] = factor_configs[static_cast<std::size_t>(i) % factor_configs.size()];
      const auto field = make_field_of_order(static_cast<std::uint32_t>(q));
      const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(d) + 1));
      Form f = Form::constant(field, m + 1, static_cast<Elem>(1 + rng.below(field->q() - 1)), true);
      for (int j = 0; j < k; ++j) f = multiply(f, Form::linear(field, random_line(*field, m, rng)));
      if (k < d) f = multiply(f, random_form(field, m + 1, d - k, true, rng));
      const auto lf = linear_factors(f);
      ++factor;
      factor_bad += !(reconstruct(lf) == f) || lf.s() < k;
    }

    for (int q : {3, 5, 7}) {
      const auto field = make_field_of_order(static_cast<std::uint32_t>(q));
      const Form conic = standard_conic(field);
      for (const auto& P : cached_projective_points(*field, 2)) {
        if (evaluate(conic, P.coords) == 0) continue;
        ++pass;
        pass_bad += passant_profile(conic, P) > static_cast<std::uint64_t>((q + 1) / 2);
      }
      zanella(*field, 2, zero_set(conic));
    }

    const bool ok = zanella_bad == 0 && split_bad == 0 && factor_bad == 0 && pass_bad == 0;
    return {ok, "zanella " + std::to_string(zanella_sets - zanella_bad) + "/" + std::to_string(zanella_sets) +
                    ", splitting " + std::to_string(split - split_bad) + "/" + std::to_string(split) +
                    ", factorizations " + std::to_string(factor - factor_bad) + "/" + std::to_string(factor) +
                    ", passant points " + std::to_string(pass - pass_bad) + "/" + std::to_string(pass)};
  }

  Outcome sampled() {
    const std::vector<Key> configs{{7, 3, 2}, {7, 4, 2}, {8, 3, 2}, {9, 3, 2}, {3, 3, 3}, {4, 3, 3}};
    bool ok = true;
    std::string detail;
    for (const auto& k : configs) {
      const auto [q, d, m] = k;
      CensusOptions opts;
      opts.mode = CensusMode::Sampled;
      opts.samples = level_ == Level::Quick ? 10000 : 100000;
      opts.workers = workers_;
      const auto r = census(make_field_of_order(static_cast<std::uint32_t>(q)), d, m, opts);
      std::uint64_t violations = 0;
      for (const auto& c : r.checks)
        if (c.valid || c.bound == "zanella") violations += c.violations;
      ok = ok && violations == 0 && r.all_ok();
      detail += key_text(k) + " " + std::to_string(violations) + " violations; ";
    }
    return {ok, detail};
  }

  Level level_;
  int workers_;
  ProgressFn progress_;
  std::vector<Key> plane_;
  std::map<Key, CensusRun> cache_;
  std::vector<CriterionResult> results_;
};

}  // namespace

std::optional<Level> level_from_string(std::string_view name) {
  if (name == "quick") return Level::Quick;
  if (name == "full") return Level::Full;
  if (name == "long") return Level::Long;
  return std::nullopt;
}

std::string to_string(Level level) {
  switch (level) {
    case Level::Quick: return "quick";
    case Level::Full: return "full";
    case Level::Long: return "long";
  }
  return "unknown";
}

std::vector<CriterionResult> run_acceptance(Level level, int workers, const ProgressFn& progress) {
  return Runner(level, workers, progress).run();
}

}  // namespace prm
