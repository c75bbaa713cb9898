#pragma once

// Closed-form point-count bounds for hypersurfaces over F_q.
//
// Every function evaluates its formula for any input and reports through
// `valid` whether (q, d, m) lies inside the hypotheses under which the bound
// is a theorem. Nothing here throws for out-of-domain parameters except the
// few operations whose inputs are meaningless (bad index, d outside [3, q]
// for the third-weight table).

#include <cstdint>
#include <string>
#include <vector>

namespace prm::bounds {

enum class Status { Exact, Upper };

std::string to_string(Status s);

struct BoundResult {
  std::int64_t value = 0;
  bool valid = false;
  std::string domain_note;
  std::vector<std::string> exceptions;
  Status status = Status::Upper;
  char part = 0;  // 'a' or 'b' for the split second-weight statement in P^m, m >= 3
};

/// q^m + ... + q + 1, with p_{-1} = 0.
std::int64_t pm(std::int64_t q, int m);
std::int64_t ipow(std::int64_t base, int k);

/// Affine zeros of a degree-d polynomial in m variables: d q^{m-1} (d < q).
BoundResult ore_bound(std::int64_t q, int d, int m);
/// Second-highest affine zero count: d q^{m-1} - (d-1) q^{m-2} (m >= 2, 2 <= d < q).
BoundResult geil_second(std::int64_t q, int d, int m);
/// Projective hypersurface points: d q^{m-1} + p_{m-2} (1 <= d <= q).
BoundResult serre_bound(std::int64_t q, int d, int m);
/// Line-free plane curves: (d-1) q + 1 (2 <= d <= q, (d,q) != (4,4)).
BoundResult hk_linefree(std::int64_t q, int d);
/// Hyperplane-free hypersurfaces: (d-1) q^{m-1} + d q^{m-2} + p_{m-3} (m >= 3).
BoundResult hk_elementary(std::int64_t q, int d, int m);
/// hk_elementary - (d-2) q^{m-3} (m >= 3, 3 <= d <= q, d != sqrt(q)+1).
BoundResult improved_elementary(std::int64_t q, int d, int m);
/// Second-highest point count: d q - d + 3 for m = 2; the split statement for m >= 3.
BoundResult second_max_points(std::int64_t q, int d, int m);
/// Third-highest point count of plane curves (3 <= d <= q), with Exact/Upper status.
/// `e` is the extension degree of q; throws DomainViolation outside [3, q].
BoundResult third_weight_curve(std::int64_t q, int d, int e);
/// i-th highest point count among unions of d distinct lines, i in {1,2,3}.
std::int64_t line_union_top_count(std::int64_t q, int d, int i);
/// a q + 1 for a point set whose largest hyperplane section has a points.
std::int64_t zanella_bound(std::int64_t a, std::int64_t q);
/// (q^2+q+1) q^2 C(q+1, d-1): the closed-form number of curves with d q - d + 3 points.
std::int64_t near_pencil_formula_count(std::int64_t q, int d);

}  // namespace prm::bounds
