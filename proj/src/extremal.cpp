#include "prm/extremal.hpp"

#include <array>

#include "prm/bounds.hpp"

namespace prm {
namespace {

constexpr std::array<std::pair<ConfigTag, std::string_view>, 11> kTagNames{{
    {ConfigTag::Pencil, "pencil"},
    {ConfigTag::NearPencil, "near_pencil"},
    {ConfigTag::TypeI, "type1"},
    {ConfigTag::TypeII, "type2"},
    {ConfigTag::PencilDoubleLine, "pencil_double_line"},
    {ConfigTag::Hermitian, "hermitian"},
    {ConfigTag::HermitianSurfaceCone, "hermitian_surface_cone"},
    {ConfigTag::HyperbolicQuadric, "hyperbolic_quadric"},
    {ConfigTag::LinePlusConic, "line_plus_conic"},
    {ConfigTag::FourLinesGeneral, "four_lines_general"},
    {ConfigTag::SerreHyperplanes, "serre_hyperplanes"},
}};

Construction finish(Form form, std::int64_t predicted, ConfigTag tag) {
  const auto measured =
      static_cast<std::int64_t>(zero_count(form, form.homogeneous() ? Space::Projective : Space::Affine));
  if (measured != predicted)
    throw Error(Errc::Internal, to_string(tag) + ": measured " + std::to_string(measured) + " points, predicted " +
                                    std::to_string(predicted));
  return {std::move(form), predicted, measured, tag};
}

Form product(const FieldPtr& field, const std::vector<LinearForm>& lines) {
  Form acc = Form::constant(field, static_cast<int>(lines.front().coeffs.size()), 1, true);
  for (const auto& h : lines) acc = multiply(acc, Form::linear(field, h));
  return acc;
}

// Lines (or hyperplanes) through the flat of the first two frozen hyperplanes.
std::vector<LinearForm> anchor_pencil(const Field& field, int m) {
  const auto& H = cached_hyperplanes(field, m);
  return pencil(field, H[0], H[1]);
}

ProjectivePoint anchor_point(const Field& field) {
  const auto& H = cached_hyperplanes(field, 2);
  return flat_points(field, 2, H[0], H[1]).front();
}

Form power_sum(const FieldPtr& field, int nvars, int terms, int exponent) {
  Form f(field, nvars, exponent, true);
  for (int i = 0; i < terms; ++i) {
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    exps[static_cast<std::size_t>(i)] = exponent;
    f.set_coeff(exps, 1);
  }
  return f;
}

std::int64_t q_of(const FieldPtr& field) { return static_cast<std::int64_t>(field->q()); }

}  // namespace

std::string to_string(ConfigTag tag) {
  for (const auto& [t, name] : kTagNames)
    if (t == tag) return std::string(name);
  return "unknown";
}

std::optional<ConfigTag> config_tag_from_string(std::string_view name) {
  for (const auto& [t, n] : kTagNames)
    if (n == name) return t;
  return std::nullopt;
}

Construction pencil_of_lines(FieldPtr field, int d, int m) {
  if (d < 1 || m < 2) throw Error(Errc::DomainViolation, "pencil needs d >= 1 and m >= 2");
  const auto members = anchor_pencil(*field, m);
  if (static_cast<std::size_t>(d) > members.size())
    throw Error(Errc::TooManyHyperplanes, "a pencil has only q+1 members");
  std::vector<LinearForm> chosen(members.begin(), members.begin() + d);
  const auto predicted = bounds::serre_bound(q_of(field), d, m).value;
  return finish(product(field, chosen), predicted, m == 2 ? ConfigTag::Pencil : ConfigTag::SerreHyperplanes);
}

Construction near_pencil(FieldPtr field, int d) {
  const auto q = q_of(field);
  if (d < 3 || d > q) throw Error(Errc::DomainViolation, "near pencil needs 3 <= d <= q");
  const auto members = anchor_pencil(*field, 2);
  std::vector<LinearForm> chosen(members.begin(), members.begin() + (d - 1));
  const auto P = anchor_point(*field);
  for (const auto& h : cached_hyperplanes(*field, 2)) {
    if (!contains(*field, h, P)) {
      chosen.push_back(h);
      break;
    }
  }
  return finish(product(field, chosen), d * q - d + 3, ConfigTag::NearPencil);
}

Construction affine_type1(FieldPtr field, int d, int m) {
  const auto q = q_of(field);
  if (m < 2 || d < 2 || d >= q) throw Error(Errc::DomainViolation, "type I needs m >= 2 and 2 <= d < q");
  const auto M = static_cast<std::size_t>(m);
  Form acc = Form::constant(field, m, 1, false);
  // x_2, then x_1 + c x_2 for c in encoding order: all contain {x_1 = x_2 = 0}.
  std::vector<Elem> a(M, 0);
  a[1] = 1;
  acc = multiply(acc, Form::affine_linear(field, a, 0));
  for (Elem c = 0; c + 1 < static_cast<Elem>(d); ++c) {
    std::vector<Elem> b(M, 0);
    b[0] = 1;
    b[1] = c;
    acc = multiply(acc, Form::affine_linear(field, b, 0));
  }
  return finish(std::move(acc), bounds::geil_second(q, d, m).value, ConfigTag::TypeI);
}

Construction affine_type2(FieldPtr field, int d, int m) {
  const auto q = q_of(field);
  if (m < 2 || d < 2 || d >= q) throw Error(Errc::DomainViolation, "type II needs m >= 2 and 2 <= d < q");
  const auto M = static_cast<std::size_t>(m);
  Form acc = Form::constant(field, m, 1, false);
  // x_1 - c for the first d-1 elements c, then x_2.
  for (Elem c = 0; c + 1 < static_cast<Elem>(d); ++c) {
    std::vector<Elem> a(M, 0);
    a[0] = 1;
    acc = multiply(acc, Form::affine_linear(field, a, field->neg(c)));
  }
  std::vector<Elem> b(M, 0);
  b[1] = 1;
  acc = multiply(acc, Form::affine_linear(field, b, 0));
  return finish(std::move(acc), bounds::geil_second(q, d, m).value, ConfigTag::TypeII);
}

Construction pencil_with_double_line(FieldPtr field, int d) {
  const auto q = q_of(field);
  if (d < 2 || d > q + 2) throw Error(Errc::DomainViolation, "doubled-line pencil needs 2 <= d <= q+2");
  const auto members = anchor_pencil(*field, 2);
  std::vector<LinearForm> chosen(members.begin(), members.begin() + (d - 1));
  chosen.push_back(members.front());
  return finish(product(field, chosen), (d - 1) * q + 1, ConfigTag::PencilDoubleLine);
}

Construction hermitian_curve(FieldPtr field) {
  const auto r = field->sqrt_order();
  if (!r) throw Error(Errc::NonSquareOrder, "Hermitian curve needs a square field order");
  const auto q = q_of(field);
  return finish(power_sum(field, 3, 3, static_cast<int>(*r) + 1), q * static_cast<std::int64_t>(*r) + 1,
                ConfigTag::Hermitian);
}

Construction hermitian_surface_cone(FieldPtr field, int m) {
  const auto r = field->sqrt_order();
  if (!r) throw Error(Errc::NonSquareOrder, "Hermitian surface needs a square field order");
  if (m < 3) throw Error(Errc::DomainViolation, "Hermitian surface cone needs m >= 3");
  const int d = static_cast<int>(*r) + 1;
  return finish(power_sum(field, m + 1, 4, d), bounds::hk_elementary(q_of(field), d, m).value,
                ConfigTag::HermitianSurfaceCone);
}

Construction hyperbolic_quadric(FieldPtr field, int m) {
  if (m < 3) throw Error(Errc::DomainViolation, "hyperbolic quadric cone needs m >= 3");
  Form f(field, m + 1, 2, true);
  std::vector<int> e02(static_cast<std::size_t>(m + 1), 0), e13(static_cast<std::size_t>(m + 1), 0);
  e02[0] = e02[2] = 1;
  e13[1] = e13[3] = 1;
  f.set_coeff(e02, 1);
  f.set_coeff(e13, 1);
  return finish(std::move(f), bounds::hk_elementary(q_of(field), 2, m).value, ConfigTag::HyperbolicQuadric);
}

Form standard_conic(FieldPtr field) {
  Form f(field, 3, 2, true);
  f.set_coeff(std::vector<int>{1, 0, 1}, 1);
  f.set_coeff(std::vector<int>{0, 2, 0}, field->neg(1));
  return f;
}

Construction line_plus_conic(FieldPtr field) {
  const auto q = q_of(field);
  if (q < 3) throw Error(Errc::DomainViolation, "line plus conic needs q >= 3");
  const Form conic = standard_conic(field);
  const auto points = zero_set(conic);
  for (const auto& h : cached_hyperplanes(*field, 2)) {
    if (!hyperplane_section(*field, points, h).empty()) continue;
    return finish(multiply(conic, Form::linear(field, h)), 2 * q + 2, ConfigTag::LinePlusConic);
  }
  throw Error(Errc::NoPassantFound, "no line misses the conic's rational points");
}

Construction four_lines_general_position(FieldPtr field) {
  const auto q = q_of(field);
  if (q < 4) throw Error(Errc::DomainViolation, "four lines in general position need q >= 4");
  const auto& H = cached_hyperplanes(*field, 2);
  std::vector<LinearForm> chosen;
  std::vector<ProjectivePoint> crossings;
  for (const auto& h : H) {
    bool ok = true;
    for (const auto& P : crossings) ok = ok && !contains(*field, h, P);
    if (!ok) continue;
    for (const auto& g : chosen) crossings.push_back(flat_points(*field, 2, g, h).front());
    chosen.push_back(h);
    if (chosen.size() == 4) break;
  }
  return finish(product(field, chosen), 4 * q - 2, ConfigTag::FourLinesGeneral);
}

Construction build_construction(ConfigTag tag, FieldPtr field, int d, int m) {
  switch (tag) {
    case ConfigTag::Pencil: return pencil_of_lines(field, d, 2);
    case ConfigTag::SerreHyperplanes: return pencil_of_lines(field, d, m);
    case ConfigTag::NearPencil: return near_pencil(field, d);
    case ConfigTag::TypeI: return affine_type1(field, d, m);
    case ConfigTag::TypeII: return affine_type2(field, d, m);
    case ConfigTag::PencilDoubleLine: return pencil_with_double_line(field, d);
    case ConfigTag::Hermitian: return hermitian_curve(field);
    case ConfigTag::HermitianSurfaceCone: return hermitian_surface_cone(field, m);
    case ConfigTag::HyperbolicQuadric: return hyperbolic_quadric(field, m);
    case ConfigTag::LinePlusConic: return line_plus_conic(field);
    case ConfigTag::FourLinesGeneral: return four_lines_general_position(field);
  }
  throw Error(Errc::InvalidArgument, "unknown configuration");
}

}  // namespace prm
