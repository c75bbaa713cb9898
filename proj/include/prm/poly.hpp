#pragma once

// Dense multivariate polynomials over GF(q).
//
// A Form stores one coefficient per monomial of a fixed graded-lex basis:
// homogeneous forms of degree d in n variables use the degree-d monomials,
// affine polynomials of degree <= d use all monomials up to degree d in
// ascending degree. Within a degree, x_0^d sorts first (descending exponent
// tuples). Variables of affine polynomials are x_1..x_m in the paper sense but
// are indexed from 0 here.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "prm/geometry.hpp"
#include "prm/gf.hpp"

namespace prm {

struct Monomial {
  std::vector<int> exps;
  auto operator<=>(const Monomial&) const = default;
};

/// Graded-lex basis; the returned reference stays valid for the program's lifetime.
const std::vector<Monomial>& monomial_basis(int nvars, int degree, bool homogeneous);

/// Position of `exps` in the basis, or throws BadIndex.
std::size_t monomial_index(int nvars, int degree, bool homogeneous, std::span<const int> exps);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

class Form {
 public:
  /// The zero polynomial.
  Form(FieldPtr field, int nvars, int degree, bool homogeneous);
  Form(FieldPtr field, int nvars, int degree, bool homogeneous, std::vector<Elem> coeffs);

  static Form variable(FieldPtr field, int nvars, int index);
  /// Homogeneous linear form with the given coefficient vector.
  static Form linear(FieldPtr field, const LinearForm& h);
  /// Affine polynomial c_0 + sum_i a_i x_i (degree <= 1) in a.size() variables.
  static Form affine_linear(FieldPtr field, std::span<const Elem> a, Elem c0);
  static Form constant(FieldPtr field, int nvars, Elem c, bool homogeneous);

  const FieldPtr& field_ptr() const noexcept { return field_; }
  const Field& field() const noexcept { return *field_; }
  int nvars() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }
  bool homogeneous() const noexcept { return homogeneous_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  const std::vector<Monomial>& basis() const { return monomial_basis(nvars_, degree_, homogeneous_); }

  bool is_zero() const noexcept;
  Elem coeff(std::span<const int> exps) const;
  void set_coeff(std::span<const int> exps, Elem value);

  /// First nonzero coefficient in basis order (0 for the zero polynomial).
  Elem leading() const noexcept;
  /// Scaled copy whose first nonzero coefficient is 1.
  Form normalized() const;
  Form scaled(Elem c) const;

  bool operator==(const Form& other) const;

 private:
  FieldPtr field_;
  int nvars_;
  int degree_;
  bool homogeneous_;
  std::vector<Elem> coeffs_;
};

enum class Space { Projective, Affine };

Elem evaluate(const Form& f, std::span<const Elem> point);

/// Zeros over P^{n-1}(F_q) for homogeneous f, over A^n(F_q) for affine f
/// (n = number of variables). Throws ZeroPolynomial on the zero form.
std::uint64_t zero_count(const Form& f, Space space);
std::uint64_t zero_count(const Form& f, std::span<const ProjectivePoint> points);

/// Normalized points of P^m where f vanishes.
std::vector<ProjectivePoint> zero_set(const Form& f);

Form add(const Form& f, const Form& g);
Form multiply(const Form& f, const Form& g);
Form power(const Form& f, int k);

/// Quotient g with f = L·g, or nullopt when L does not divide f.
std::optional<Form> divide_by_linear(const Form& f, const LinearForm& L);

struct LinearFactorization {
  std::vector<std::pair<LinearForm, int>> linear_part;  // normalized forms with multiplicity
  Form residual;                                        // normalized, no linear factor over F_q
  Elem unit;

  int s() const noexcept;
};

LinearFactorization linear_factors(const Form& f);
Form reconstruct(const LinearFactorization& lf);

/// Substitutes x_i = sum_j A[i][j] y_j.
Form substitute_linear(const Form& f, const std::vector<std::vector<Elem>>& A);

/// Moves h to the hyperplane y_0 = 0 and sets y_0 = 1. The remaining affine
/// variables are the original ones minus the pivot of h, in order. Throws
/// ZeroForm when f is a scalar multiple of h^d (nothing remains off h).
Form dehomogenize(const Form& f, const LinearForm& h);

nlohmann::json to_json(const Form& f);
Form form_from_json(const nlohmann::json& j);

}  // namespace prm
