#pragma once

// Point sets, hyperplanes and pencils of P^m(F_q) and A^m(F_q).
//
// Projective points and linear forms are stored as normalized tuples (first
// nonzero entry equal to 1). Every list returned here is in lexicographic
// order of those tuples, compared by element encoding; that order is frozen
// and defines generator-matrix columns.

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "prm/gf.hpp"

namespace prm {

struct ProjectivePoint {
  std::vector<Elem> coords;
  auto operator<=>(const ProjectivePoint&) const = default;
};

struct AffinePoint {
  std::vector<Elem> coords;
  auto operator<=>(const AffinePoint&) const = default;
};

struct LinearForm {
  std::vector<Elem> coeffs;
  auto operator<=>(const LinearForm&) const = default;
};

/// Scales v so its first nonzero entry is 1. Throws InvalidArgument on the zero vector.
std::vector<Elem> normalize(const Field& field, std::vector<Elem> v);

std::vector<ProjectivePoint> projective_points(const Field& field, int m);
std::vector<AffinePoint> affine_points(const Field& field, int m);
std::vector<LinearForm> hyperplanes(const Field& field, int m);

/// Shared, immutable copies of the lists above, built once per (p, e, m).
const std::vector<ProjectivePoint>& cached_projective_points(const Field& field, int m);
const std::vector<AffinePoint>& cached_affine_points(const Field& field, int m);
const std::vector<LinearForm>& cached_hyperplanes(const Field& field, int m);

Elem apply(const Field& field, const LinearForm& h, std::span<const Elem> x);

inline bool contains(const Field& field, const LinearForm& h, const ProjectivePoint& pt) {
  return apply(field, h, pt.coords) == 0;
}

/// The q+1 hyperplanes containing the codimension-2 flat {a = 0} ∩ {b = 0},
/// in frozen order. Throws DependentForms if a and b are proportional.
std::vector<LinearForm> pencil(const Field& field, const LinearForm& a, const LinearForm& b);

/// Points of the codimension-2 flat cut out by a and b.
std::vector<ProjectivePoint> flat_points(const Field& field, int m, const LinearForm& a, const LinearForm& b);

std::vector<ProjectivePoint> hyperplane_section(const Field& field, std::span<const ProjectivePoint> points,
                                                const LinearForm& h);

/// Rank over the field of the given row vectors.
std::size_t rank(const Field& field, std::vector<std::vector<Elem>> rows);

}  // namespace prm
