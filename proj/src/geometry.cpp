#include "prm/geometry.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace prm {
namespace {

// Odometer over F_q^len, last coordinate fastest; returns false after the last tuple.
bool next_tuple(std::vector<Elem>& v, std::size_t from, std::uint32_t q) {
  for (std::size_t i = v.size(); i-- > from;) {
    if (++v[i] < q) return true;
    v[i] = 0;
  }
  return false;
}

std::vector<std::vector<Elem>> normalized_tuples(const Field& field, int m) {
  if (m < 0) throw Error(Errc::InvalidArgument, "dimension must be >= 0");
  const std::size_t len = static_cast<std::size_t>(m) + 1;
  std::vector<std::vector<Elem>> out;
  // Leading 1 at position `lead`; more leading zeros sorts first.
  for (std::size_t lead = len; lead-- > 0;) {
    std::vector<Elem> v(len, 0);
    v[lead] = 1;
    do {
      out.push_back(v);
    } while (next_tuple(v, lead + 1, field.q()));
  }
  return out;
}

using CacheKey = std::tuple<std::uint32_t, std::uint32_t, int>;

template <class T, class Build>
const std::vector<T>& cached(std::map<CacheKey, std::vector<T>>& cache, std::mutex& mu, const Field& field, int m,
                             Build build) {
  std::lock_guard lock(mu);
  CacheKey key{field.p(), field.e(), m};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build(field, m)).first;
  return it->second;
}

}  // namespace

std::vector<Elem> normalize(const Field& field, std::vector<Elem> v) {
  auto lead = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
  if (lead == v.end()) throw Error(Errc::InvalidArgument, "cannot normalize the zero vector");
  const Elem scale = field.inv(*lead);
  for (auto it = lead; it != v.end(); ++it) *it = field.mul(*it, scale);
  return v;
}

std::vector<ProjectivePoint> projective_points(const Field& field, int m) {
  if (m < 1) throw Error(Errc::InvalidArgument, "projective dimension must be >= 1");
  std::vector<ProjectivePoint> out;
  for (auto& v : normalized_tuples(field, m)) out.push_back({std::move(v)});
  return out;
}

std::vector<AffinePoint> affine_points(const Field& field, int m) {
  if (m < 1) throw Error(Errc::InvalidArgument, "affine dimension must be >= 1");
  std::vector<AffinePoint> out;
  std::vector<Elem> v(static_cast<std::size_t>(m), 0);
  do {
    out.push_back({v});
  } while (next_tuple(v, 0, field.q()));
  return out;
}

std::vector<LinearForm> hyperplanes(const Field& field, int m) {
  if (m < 1) throw Error(Errc::InvalidArgument, "projective dimension must be >= 1");
  std::vector<LinearForm> out;
  for (auto& v : normalized_tuples(field, m)) out.push_back({std::move(v)});
  return out;
}

const std::vector<ProjectivePoint>& cached_projective_points(const Field& field, int m) {
  static std::map<CacheKey, std::vector<ProjectivePoint>> cache;
  static std::mutex mu;
  return cached(cache, mu, field, m, projective_points);
}

const std::vector<AffinePoint>& cached_affine_points(const Field& field, int m) {
  static std::map<CacheKey, std::vector<AffinePoint>> cache;
  static std::mutex mu;
  return cached(cache, mu, field, m, affine_points);
}

const std::vector<LinearForm>& cached_hyperplanes(const Field& field, int m) {
  static std::map<CacheKey, std::vector<LinearForm>> cache;
  static std::mutex mu;
  return cached(cache, mu, field, m, hyperplanes);
}

Elem apply(const Field& field, const LinearForm& h, std::span<const Elem> x) {
  if (x.size() != h.coeffs.size()) throw Error(Errc::DimensionMismatch, "point and form dimensions differ");
  Elem acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc = field.add(acc, field.mul(h.coeffs[i], x[i]));
  return acc;
}

std::vector<LinearForm> pencil(const Field& field, const LinearForm& a, const LinearForm& b) {
  if (a.coeffs.size() != b.coeffs.size()) throw Error(Errc::DimensionMismatch, "pencil forms differ in length");
  if (rank(field, {a.coeffs, b.coeffs}) != 2) throw Error(Errc::DependentForms, "pencil needs independent forms");
  std::vector<LinearForm> out;
  out.push_back({normalize(field, b.coeffs)});
  for (Elem t = 0; t < field.q(); ++t) {
    std::vector<Elem> v(a.coeffs.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field.add(a.coeffs[i], field.mul(t, b.coeffs[i]));
    out.push_back({normalize(field, std::move(v))});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ProjectivePoint> flat_points(const Field& field, int m, const LinearForm& a, const LinearForm& b) {
  std::vector<ProjectivePoint> out;
  for (const auto& pt : cached_projective_points(field, m))
    if (contains(field, a, pt) && contains(field, b, pt)) out.push_back(pt);
  return out;
}

std::vector<ProjectivePoint> hyperplane_section(const Field& field, std::span<const ProjectivePoint> points,
                                                const LinearForm& h) {
  std::vector<ProjectivePoint> out;
  for (const auto& pt : points)
    if (contains(field, h, pt)) out.push_back(pt);
  return out;
}

std::size_t rank(const Field& field, std::vector<std::vector<Elem>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Elem inv = field.inv(rows[r][c]);
    for (auto& x : rows[r]) x = field.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Elem f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = field.sub(rows[i][j], field.mul(f, rows[r][j]));
    }
    ++r;
  }
  return r;
}

}  // namespace prm
