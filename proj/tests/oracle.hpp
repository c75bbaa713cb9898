#pragma once

// Brute-force references used only by the tests. Nothing here calls the
// library's evaluation, point lists or normalization; it works on raw
// coordinate vectors and polynomial residues.

#include <cstdint>
#include <map>
#include <vector>

#include "prm/gf.hpp"
#include "prm/poly.hpp"

namespace oracle {

using prm::Elem;

// Residue arithmetic on digit vectors, reducing by the field's modulus.
inline std::vector<std::uint32_t> digits(const prm::Field& f, Elem a) {
  std::vector<std::uint32_t> d(f.e());
  for (auto& x : d) {
    x = a % f.p();
    a /= f.p();
  }
  return d;
}

inline Elem encode(const prm::Field& f, const std::vector<std::uint32_t>& d) {
  Elem a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * f.p() + d[i];
  return a;
}

inline Elem add(const prm::Field& f, Elem a, Elem b) {
  auto x = digits(f, a), y = digits(f, b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % f.p();
  return encode(f, x);
}

inline Elem mul(const prm::Field& f, Elem a, Elem b) {
  const auto x = digits(f, a), y = digits(f, b);
  const std::uint32_t p = f.p(), e = f.e();
  std::vector<std::uint32_t> prod(2 * e, 0);
  for (std::uint32_t i = 0; i < e; ++i)
    for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  const auto& mod = f.modulus();
  for (std::uint32_t k = 2 * e - 1; k >= e; --k) {
    const std::uint32_t c = prod[k];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i <= e; ++i) prod[k - e + i] = (prod[k - e + i] + (p - c) * mod[i] % p) % p;
  }
  prod.resize(e);
  return encode(f, prod);
}

inline Elem power(const prm::Field& f, Elem a, std::uint64_t k) {
  Elem r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = mul(f, r, a);
  return r;
}

// Value of a form at a raw coordinate vector, monomial by monomial.
inline Elem value(const prm::Form& g, const std::vector<Elem>& x) {
  const auto& f = g.field();
  Elem total = 0;
  const auto& basis = g.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (g.coeffs()[i] == 0) continue;
    Elem term = g.coeffs()[i];
    for (std::size_t v = 0; v < x.size(); ++v) term = mul(f, term, power(f, x[v], basis[i].exps[v]));
    total = add(f, total, term);
  }
  return total;
}

// Calls fn on every vector of F_q^n.
template <class Fn>
void for_each_vector(std::uint32_t q, int n, Fn fn) {
  std::vector<Elem> x(static_cast<std::size_t>(n), 0);
  for (;;) {
    fn(x);
    int i = n - 1;
    while (i >= 0 && ++x[static_cast<std::size_t>(i)] == q) x[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return;
  }
}

// Projective zeros: nonzero vectors with f = 0, divided by q - 1.
inline std::uint64_t projective_zeros(const prm::Form& g) {
  std::uint64_t hits = 0;
  for_each_vector(g.field().q(), g.nvars(), [&](const std::vector<Elem>& x) {
    bool nonzero = false;
    for (auto c : x) nonzero = nonzero || c != 0;
    if (nonzero && value(g, x) == 0) ++hits;
  });
  return hits / (g.field().q() - 1);
}

inline std::uint64_t affine_zeros(const prm::Form& g) {
  std::uint64_t hits = 0;
  for_each_vector(g.field().q(), g.nvars(), [&](const std::vector<Elem>& x) { hits += value(g, x) == 0; });
  return hits;
}

inline std::uint64_t ipow(std::uint64_t b, int k) {
  std::uint64_t r = 1;
  while (k-- > 0) r *= b;
  return r;
}

}  // namespace oracle
