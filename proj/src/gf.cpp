#include "prm/gf.hpp"

#include <string>

namespace prm {
namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients over GF(p), low-degree-first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // p is prime and small, Fermat is plenty.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t k = p - 2; k > 0; k >>= 1) {
    if (k & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over GF(p); b must be nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  trim(out);
  return out;
}

// Monic polynomial of degree `deg` whose lower coefficients are the base-p
// digits of `index`, most significant digit mapped to the constant term.
Poly monic_from_index(std::uint64_t index, std::uint32_t deg, std::uint32_t p) {
  Poly f(deg + 1, 0);
  f[deg] = 1;
  for (std::uint32_t i = 0; i < deg; ++i) {
    f[deg - 1 - i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return f;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t k) {
  std::uint64_t r = 1;
  while (k-- > 0) r *= base;
  return r;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t dg = 1; dg <= deg / 2; ++dg) {
    const std::uint64_t count = ipow(p, dg);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (poly_mod(f, monic_from_index(idx, dg, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Elem Field::add_digits(Elem a, Elem b) const noexcept {
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    const Elem s = (a % p_ + b % p_) % p_;
    out += s * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  const std::uint32_t order = q_ - 1;
  return exp_[(order - log_[a]) % order];
}

Elem Field::pow(Elem a, std::uint64_t k) const noexcept {
  if (k == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = q_ - 1;
  return exp_[static_cast<std::size_t>((static_cast<std::uint64_t>(log_[a]) * (k % order)) % order)];
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(q_);
  for (Elem v = 0; v < q_; ++v) out[v] = v;
  return out;
}

Elem Field::basis_element(std::uint32_t s) const noexcept {
  return static_cast<Elem>(ipow(p_, s));
}

std::optional<std::uint32_t> Field::sqrt_order() const noexcept {
  if (e_ % 2 != 0) return std::nullopt;
  return static_cast<std::uint32_t>(ipow(p_, e_ / 2));
}

Elem Field::mul_polynomial(Elem a, Elem b) const {
  auto decode = [this](Elem v) {
    Poly f(e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
      f[i] = v % p_;
      v /= p_;
    }
    trim(f);
    return f;
  };
  Poly r = poly_mod(poly_mul(decode(a), decode(b), p_), modulus_, p_);
  Elem out = 0, scale = 1;
  for (std::uint32_t c : r) {
    out += c * scale;
    scale *= p_;
  }
  return out;
}

FieldPtr make_field(std::uint32_t p, std::uint32_t e, std::uint32_t cap) {
  if (!is_prime(p)) throw Error(Errc::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (e < 1) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > cap) throw Error(Errc::OrderExceedsCap, "p^e exceeds cap " + std::to_string(cap));
  }

  auto field = std::shared_ptr<Field>(new Field());
  field->p_ = p;
  field->e_ = e;
  field->q_ = static_cast<std::uint32_t>(q);

  const std::uint64_t candidates = ipow(p, e);
  for (std::uint64_t idx = 0; idx < candidates; ++idx) {
    Poly f = monic_from_index(idx, e, p);
    if (is_irreducible(f, p)) {
      field->modulus_ = std::move(f);
      break;
    }
  }
  if (field->modulus_.empty()) throw Error(Errc::Internal, "no irreducible polynomial found");

  const std::uint32_t order = field->q_ - 1;
  field->exp_.assign(2 * static_cast<std::size_t>(order) + 1, 0);
  field->log_.assign(field->q_, 0);
  for (Elem g = 1; g < field->q_; ++g) {
    Elem x = 1;
    std::uint32_t k = 0;
    do {
      field->exp_[k] = x;
      x = field->mul_polynomial(x, g);
      ++k;
    } while (x != 1 && k <= order);
    if (k == order) {
      field->primitive_ = g;
      break;
    }
  }
  for (std::uint32_t k = 0; k < order; ++k) {
    field->exp_[k + order] = field->exp_[k];
    field->log_[field->exp_[k]] = k;
  }

  field->neg_.resize(field->q_);
  for (Elem a = 0; a < field->q_; ++a) {
    Elem out = 0, scale = 1, v = a;
    for (std::uint32_t i = 0; i < e; ++i) {
      out += ((p - v % p) % p) * scale;
      v /= p;
      scale *= p;
    }
    field->neg_[a] = out;
  }

  if (p != 2 && e > 1 && field->q_ <= 256) {
    field->add_table_.resize(static_cast<std::size_t>(field->q_) * field->q_);
    for (Elem a = 0; a < field->q_; ++a)
      for (Elem b = 0; b < field->q_; ++b) field->add_table_[a * field->q_ + b] = field->add_digits(a, b);
  }
  return field;
}

FieldPtr make_field_of_order(std::uint32_t q, std::uint32_t cap) {
  if (q < 2) throw Error(Errc::NonPrimeCharacteristic, "field order must be >= 2");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw Error(Errc::NonPrimeCharacteristic, std::to_string(q) + " is not a prime power");
  return make_field(p, e, cap);
}

}  // namespace prm
