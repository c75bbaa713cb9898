#include "prm/bounds.hpp"

#include <cmath>

#include "prm/error.hpp"

namespace prm::bounds {
namespace {

bool is_square(std::int64_t q, std::int64_t* root) {
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(q))));
  while (r * r > q) --r;
  while ((r + 1) * (r + 1) <= q) ++r;
  if (root) *root = r;
  return r * r == q;
}

}  // namespace

std::string to_string(Status s) { return s == Status::Exact ? "exact" : "upper"; }

std::int64_t ipow(std::int64_t base, int k) {
  if (k < 0) throw Error(Errc::InvalidArgument, "negative exponent");
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

std::int64_t pm(std::int64_t q, int m) {
  if (m < -1) throw Error(Errc::InvalidArgument, "p_m needs m >= -1");
  std::int64_t total = 0;
  for (int i = 0; i <= m; ++i) total += ipow(q, i);
  return total;
}

BoundResult ore_bound(std::int64_t q, int d, int m) {
  BoundResult r;
  r.value = d * ipow(q, m - 1);
  r.valid = d < q && d >= 1 && m >= 1;
  r.domain_note = "d < q";
  return r;
}

BoundResult geil_second(std::int64_t q, int d, int m) {
  BoundResult r;
  r.value = d * ipow(q, m - 1) - (d - 1) * (m >= 2 ? ipow(q, m - 2) : 0);
  r.valid = m >= 2 && d >= 2 && d < q;
  r.domain_note = "m >= 2, 2 <= d < q, hypersurface below d q^{m-1} zeros";
  return r;
}

BoundResult serre_bound(std::int64_t q, int d, int m) {
  BoundResult r;
  r.value = d * ipow(q, m - 1) + pm(q, m - 2);
  r.valid = d >= 1 && d <= q && m >= 1;
  r.domain_note = "1 <= d <= q";
  return r;
}

BoundResult hk_linefree(std::int64_t q, int d) {
  BoundResult r;
  r.value = (d - 1) * q + 1;
  r.domain_note = "plane curve with no F_q-line, 2 <= d <= q, (d,q) != (4,4)";
  const bool exceptional = d == 4 && q == 4;
  if (exceptional) r.exceptions.push_back("(d,q) = (4,4)");
  r.valid = d >= 2 && d <= q && !exceptional;
  return r;
}

BoundResult hk_elementary(std::int64_t q, int d, int m) {
  BoundResult r;
  if (m >= 2) r.value = (d - 1) * ipow(q, m - 1) + d * ipow(q, m - 2) + pm(q, m - 3);
  r.valid = m >= 3 && d >= 1;
  r.domain_note = "hypersurface with no F_q-hyperplane, m >= 3";
  return r;
}

BoundResult improved_elementary(std::int64_t q, int d, int m) {
  BoundResult r = hk_elementary(q, d, m);
  if (m >= 3) r.value -= (d - 2) * ipow(q, m - 3);
  std::int64_t root = 0;
  const bool hermitian_degree = is_square(q, &root) && d == root + 1;
  if (hermitian_degree) r.exceptions.push_back("d = sqrt(q) + 1");
  r.valid = m >= 3 && d >= 3 && d <= q && !hermitian_degree;
  r.domain_note = "hypersurface with no F_q-hyperplane, m >= 3, 3 <= d <= q, d != sqrt(q)+1";
  return r;
}

BoundResult second_max_points(std::int64_t q, int d, int m) {
  BoundResult r;
  if (m == 2) {
    r.value = d * q - d + 3;
    r.valid = d >= 3 && d <= q;
    r.domain_note = "plane curves below d q + 1 points, 3 <= d <= q";
    return r;
  }
  if (m < 2) {
    r.domain_note = "needs m >= 2";
    return r;
  }
  if (2 * d <= q + 3) {
    r.value = d * ipow(q, m - 1) + pm(q, m - 2) - (d - 2) * ipow(q, m - 2);
    r.part = 'a';
    r.valid = q >= 3 && d >= 3;
    r.domain_note = "m >= 3, 3 <= d <= (q+3)/2, hypersurfaces below d q^{m-1} + p_{m-2} points";
  } else {
    r.value = (d - 1) * ipow(q, m - 1) + d * ipow(q, m - 2) + pm(q, m - 3) - (d - 2) * ipow(q, m - 3);
    r.part = 'b';
    r.valid = q >= 3 && d <= q;
    r.domain_note = "m >= 3, (q+3)/2 < d <= q, hypersurfaces below d q^{m-1} + p_{m-2} points";
  }
  return r;
}

BoundResult third_weight_curve(std::int64_t q, int d, int e) {
  if (d < 3 || d > q) throw Error(Errc::DomainViolation, "third weight table needs 3 <= d <= q");
  BoundResult r;
  r.valid = true;
  if (d == 3) {
    r.value = 2 * q + 2;
    r.status = Status::Exact;
    r.domain_note = "cubics: line plus conic with no common rational point";
  } else if (d == 4) {
    r.value = 4 * q - 2;
    r.status = Status::Exact;
    r.domain_note = "quartics: four lines, no three concurrent";
  } else if (2 * d <= q + 5) {
    r.value = d * q + 1 - 2 * (d - 3);
    r.status = Status::Exact;
    r.domain_note = "5 <= d <= (q+5)/2";
  } else if ((e == 1 || e == 2) && d <= q - 1) {
    r.value = (d - 1) * q + 1;
    r.status = Status::Exact;
    r.domain_note = "d >= (q+6)/2, q = p or p^2, d <= q-1";
  } else {
    r.value = (d - 1) * q + 2;
    r.status = Status::Upper;
    r.domain_note = "d >= (q+6)/2";
  }
  return r;
}

std::int64_t line_union_top_count(std::int64_t q, int d, int i) {
  switch (i) {
    case 1: return d * q + 1;
    case 2: return d * q - d + 3;
    case 3: return d * q + 1 - 2 * (d - 3);
    default: throw Error(Errc::BadIndex, "line arrangement index must be 1, 2 or 3");
  }
}

std::int64_t zanella_bound(std::int64_t a, std::int64_t q) { return a * q + 1; }

std::int64_t near_pencil_formula_count(std::int64_t q, int d) {
  std::int64_t c = 1;  // C(q+1, d-1)
  const std::int64_t n = q + 1, k = d - 1;
  if (k < 0 || k > n) return 0;
  for (std::int64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return (q * q + q + 1) * q * q * c;
}

}  // namespace prm::bounds
