#pragma once

// Finite fields GF(p^e) with exp/log tables.
//
// An element is encoded as the integer sum c_0 + c_1 p + ... + c_{e-1} p^{e-1},
// where c_0 + c_1 t + ... + c_{e-1} t^{e-1} is its residue modulo the field's
// defining polynomial. Encoding 0 is zero, encoding 1 is one, and addition is
// digitwise addition mod p.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "prm/error.hpp"

namespace prm {

using Elem = std::uint32_t;

class Field {
 public:
  static constexpr std::uint32_t kDefaultCap = 1u << 16;

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t e() const noexcept { return e_; }
  std::uint32_t q() const noexcept { return q_; }

  /// Monic defining polynomial, coefficients low-degree-first (length e+1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  /// Smallest encoding that generates the multiplicative group.
  Elem primitive() const noexcept { return primitive_; }

  Elem add(Elem a, Elem b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (e_ == 1) {
      Elem s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_digits(a, b);
  }

  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg_[b]); }

  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const noexcept;

  /// All q elements in encoding order.
  std::vector<Elem> elements() const;

  /// Encoding of t^s, the s-th additive basis element over GF(p).
  Elem basis_element(std::uint32_t s) const noexcept;

  /// sqrt(q) when q is a perfect square (e even).
  std::optional<std::uint32_t> sqrt_order() const noexcept;

  bool same_as(const Field& other) const noexcept {
    return p_ == other.p_ && e_ == other.e_;
  }

  /// Product of residues computed by polynomial arithmetic, bypassing the tables.
  Elem mul_polynomial(Elem a, Elem b) const;

  friend std::shared_ptr<const Field> make_field(std::uint32_t, std::uint32_t, std::uint32_t);

 private:
  Field() = default;
  Elem add_digits(Elem a, Elem b) const noexcept;

  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Elem primitive_ = 1;
  std::vector<Elem> exp_;            // length 2(q-1)
  std::vector<std::uint32_t> log_;   // length q, log_[0] unused
  std::vector<Elem> neg_;
  std::vector<Elem> add_table_;      // q*q, only for odd p, e > 1, q <= 256
};

using FieldPtr = std::shared_ptr<const Field>;

/// Builds GF(p^e) with the lexicographically smallest monic irreducible modulus
/// (coefficients compared low-degree-first). Throws NonPrimeCharacteristic or
/// OrderExceedsCap.
FieldPtr make_field(std::uint32_t p, std::uint32_t e, std::uint32_t cap = Field::kDefaultCap);

/// Builds GF(q) from the order alone; throws NonPrimeCharacteristic when q is
/// not a prime power.
FieldPtr make_field_of_order(std::uint32_t q, std::uint32_t cap = Field::kDefaultCap);

bool is_prime(std::uint64_t n) noexcept;

}  // namespace prm
