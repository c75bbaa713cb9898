#include "prm/report.hpp"

#include <sstream>

namespace prm {
namespace {

using nlohmann::json;

json bound_json(const bounds::BoundResult& r) {
  json j{{"value", r.value}, {"valid", r.valid}, {"status", bounds::to_string(r.status)}, {"note", r.domain_note}};
  if (!r.exceptions.empty()) j["exceptions"] = r.exceptions;
  if (r.part) j["part"] = std::string(1, r.part);
  return j;
}

json witness_json(const Form& f) { return json{{"text", form_text(f)}, {"coeffs", f.coeffs()}}; }

}  // namespace

std::string form_text(const Form& f) {
  const auto& basis = f.basis();
  std::string out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Elem c = f.coeffs()[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t v = 0; v < basis[i].exps.size(); ++v) {
      const int e = basis[i].exps[v];
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += 'x' + std::to_string(v);
      if (e > 1) mono += '^' + std::to_string(e);
    }
    if (mono.empty())
      out += std::to_string(c);
    else if (c == 1)
      out += mono;
    else
      out += std::to_string(c) + '*' + mono;
  }
  return out.empty() ? "0" : out;
}

json field_json(const Field& field) {
  json elements = json::array();
  for (Elem x : field.elements()) {
    json row{{"elem", x}, {"neg", field.neg(x)}};
    row["inv"] = x == 0 ? json(nullptr) : json(field.inv(x));
    elements.push_back(row);
  }
  return json{{"p", field.p()},
              {"e", field.e()},
              {"q", field.q()},
              {"modulus", field.modulus()},
              {"primitive", field.primitive()},
              {"elements", elements}};
}

json code_json(const Code& code) {
  return json{{"kind", to_string(code.kind)}, {"q", code.field->q()}, {"d", code.d},
              {"m", code.m},                  {"n", code.n},          {"k", code.k},
              {"monomial_rows", code.monomial_rows}};
}

json spectrum_json(const Code& code, const WeightSpectrum& spectrum, std::size_t top_k) {
  json j{{"code", code_json(code)}, {"mode", to_string(spectrum.mode)}};
  if (spectrum.mode == SpectrumMode::Sampled) {
    j["samples"] = spectrum.samples;
    j["seed"] = spectrum.seed;
  }
  json rows = json::array();
  for (const auto& [w, c] : spectrum.counts) rows.push_back(json::array({w, c}));
  j["spectrum"] = rows;
  json low = json::array();
  for (const auto& [w, c] : distinct_weights(spectrum, top_k))
    low.push_back(json{{"weight", w}, {"count", c}, {"zeros", code.n - w}});
  j["lowest_weights"] = low;
  return j;
}

std::string spectrum_csv(const WeightSpectrum& spectrum) {
  std::ostringstream out;
  out << "weight,count\n";
  for (const auto& [w, c] : spectrum.counts) out << w << ',' << c << '\n';
  return out.str();
}

json bounds_json(std::int64_t q, int e, int d, int m) {
  json b;
  b["ore"] = bound_json(bounds::ore_bound(q, d, m));
  b["geil_second"] = bound_json(bounds::geil_second(q, d, m));
  b["serre"] = bound_json(bounds::serre_bound(q, d, m));
  b["second"] = bound_json(bounds::second_max_points(q, d, m));
  if (m == 2) {
    b["hk_linefree"] = bound_json(bounds::hk_linefree(q, d));
    if (d >= 3 && d <= q) b["third"] = bound_json(bounds::third_weight_curve(q, d, e));
    json lines = json::array();
    // The third value is only a statement about arrangements of five or more lines.
    const int known = d >= 5 ? 3 : d >= 3 ? 2 : 1;
    for (int i = 1; i <= known; ++i) lines.push_back(bounds::line_union_top_count(q, d, i));
    b["line_unions"] = lines;
  } else {
    b["hk_elementary"] = bound_json(bounds::hk_elementary(q, d, m));
    b["improved_elementary"] = bound_json(bounds::improved_elementary(q, d, m));
  }
  return json{{"q", q}, {"d", d}, {"m", m}, {"bounds", b}};
}

json construction_json(const Construction& c) {
  return json{{"config", to_string(c.tag)},
              {"q", c.form.field().q()},
              {"degree", c.form.degree()},
              {"nvars", c.form.nvars()},
              {"homogeneous", c.form.homogeneous()},
              {"predicted", c.predicted_count},
              {"measured", c.measured_count},
              {"form", witness_json(c.form)}};
}

json classification_json(const CurveClassification& c) {
  json tags = json::array();
  for (auto t : c.tags) tags.push_back(to_string(t));
  json j{{"d", c.d}, {"points", c.points}, {"s", c.s}, {"linefree_degree", c.linefree_degree}, {"tags", tags}};
  if (c.c_conditions) {
    const auto& k = *c.c_conditions;
    j["c_conditions"] = k.applicable ? json{{"c1", k.c1}, {"c2", k.c2}, {"c3", k.c3}, {"c4", k.c4}}
                                     : json("not_applicable");
  }
  return j;
}

json attainers_json(const AttainerSummary& s) {
  json j{{"target", s.target}, {"tally", s.tally}, {"histogram", s.histogram}};
  if (s.formula > 0) {
    j["formula"] = s.formula;
    j["note"] = s.note;
  }
  return j;
}

json census_json(const CensusReport& r) {
  json top = json::array();
  for (const auto& e : r.top) top.push_back(json{{"count", e.count}, {"tally", e.tally}, {"witness", witness_json(e.witness)}});
  json checks = json::array();
  for (const auto& c : r.checks) {
    json row{{"bound", c.bound}, {"value", c.value},       {"ok", c.ok},
             {"valid", c.valid}, {"examined", c.examined}, {"violations", c.violations}};
    if (!c.note.empty()) row["note"] = c.note;
    checks.push_back(row);
  }
  json j{{"q", r.q}, {"d", r.d}, {"m", r.m}, {"mode", to_string(r.mode)}, {"forms", r.forms}, {"top", top},
         {"checks", checks}};
  if (r.mode == CensusMode::Sampled) j["seed"] = r.seed;
  if (r.second) j["second_attainers"] = attainers_json(*r.second);
  return j;
}

std::string census_csv(const CensusReport& report) {
  std::ostringstream out;
  out << "count,tally\n";
  for (const auto& [points, forms] : report.histogram) out << points << ',' << forms << '\n';
  return out.str();
}

}  // namespace prm
