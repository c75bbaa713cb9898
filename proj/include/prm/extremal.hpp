#pragma once

// Explicit hypersurfaces that attain the extremal point counts.
//
// Every constructor measures the zero count of the form it builds and throws
// Internal if it differs from the predicted count. Choices are deterministic:
// pencils are anchored at the flat cut out by the first two hyperplanes in
// frozen order, and auxiliary lines are the first suitable ones in that order.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "prm/poly.hpp"

namespace prm {

enum class ConfigTag {
  Pencil,
  NearPencil,
  TypeI,
  TypeII,
  PencilDoubleLine,
  Hermitian,
  HermitianSurfaceCone,
  HyperbolicQuadric,
  LinePlusConic,
  FourLinesGeneral,
  SerreHyperplanes,
};

std::string to_string(ConfigTag tag);
std::optional<ConfigTag> config_tag_from_string(std::string_view name);

struct Construction {
  Form form;
  std::int64_t predicted_count;
  std::int64_t measured_count;
  ConfigTag tag;
};

/// d distinct hyperplanes through a codimension-2 flat of P^m (1 <= d <= q+1).
Construction pencil_of_lines(FieldPtr field, int d, int m);
/// d-1 concurrent lines and a transversal missing their common point (3 <= d <= q).
Construction near_pencil(FieldPtr field, int d);
/// d affine hyperplanes through a common codimension-2 affine subspace of A^m.
Construction affine_type1(FieldPtr field, int d, int m);
/// d-1 parallel affine hyperplanes and one hyperplane crossing them all.
Construction affine_type2(FieldPtr field, int d, int m);
/// d-1 concurrent lines with the first one doubled (2 <= d <= q+2).
Construction pencil_with_double_line(FieldPtr field, int d);
/// x0^{r+1} + x1^{r+1} + x2^{r+1}, r = sqrt(q).
Construction hermitian_curve(FieldPtr field);
/// x0^{r+1} + ... + x3^{r+1} read in P^m, m >= 3.
Construction hermitian_surface_cone(FieldPtr field, int m);
/// x0 x2 + x1 x3 read in P^m, m >= 3.
Construction hyperbolic_quadric(FieldPtr field, int m);
/// The conic x0 x2 - x1^2 times the first line missing its rational points.
Construction line_plus_conic(FieldPtr field);
/// Four lines with six distinct pairwise intersections (q >= 4).
Construction four_lines_general_position(FieldPtr field);

/// The conic x0 x2 - x1^2 in P^2.
Form standard_conic(FieldPtr field);

/// Dispatch by tag; d and m are ignored by constructors that fix them.
Construction build_construction(ConfigTag tag, FieldPtr field, int d, int m);

}  // namespace prm
