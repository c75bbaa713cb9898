#include "prm/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace prm {
namespace {

struct BasisEntry {
  std::vector<Monomial> monomials;
  std::map<std::vector<int>, std::size_t> index;
};

void append_homogeneous(int nvars, int degree, std::vector<int>& prefix, std::vector<Monomial>& out) {
  const int used = std::accumulate(prefix.begin(), prefix.end(), 0);
  if (static_cast<int>(prefix.size()) == nvars - 1) {
    prefix.push_back(degree - used);
    out.push_back({prefix});
    prefix.pop_back();
    return;
  }
  for (int a = degree - used; a >= 0; --a) {
    prefix.push_back(a);
    append_homogeneous(nvars, degree, prefix, out);
    prefix.pop_back();
  }
}

const BasisEntry& basis_entry(int nvars, int degree, bool homogeneous) {
  if (nvars < 1) throw Error(Errc::InvalidArgument, "polynomials need at least one variable");
  if (degree < 0) throw Error(Errc::DegreeOutOfRange, "negative degree");
  static std::map<std::tuple<int, int, bool>, BasisEntry> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(nvars, degree, homogeneous);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  BasisEntry entry;
  std::vector<int> prefix;
  for (int dg = homogeneous ? degree : 0; dg <= degree; ++dg) append_homogeneous(nvars, dg, prefix, entry.monomials);
  for (std::size_t i = 0; i < entry.monomials.size(); ++i) entry.index.emplace(entry.monomials[i].exps, i);
  return cache.emplace(key, std::move(entry)).first->second;
}

using Sparse = std::map<std::vector<int>, Elem>;

Sparse to_sparse(const Form& f) {
  Sparse out;
  const auto& basis = f.basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (f.coeffs()[i] != 0) out.emplace(basis[i].exps, f.coeffs()[i]);
  return out;
}

void accumulate(const Field& field, Sparse& s, const std::vector<int>& exps, Elem c) {
  if (c == 0) return;
  auto [it, inserted] = s.emplace(exps, c);
  if (!inserted) {
    it->second = field.add(it->second, c);
    if (it->second == 0) s.erase(it);
  }
}

void require_same_field(const Form& f, const Form& g) {
  if (!f.field().same_as(g.field())) throw Error(Errc::FieldMismatch, "operands live in different fields");
  if (f.nvars() != g.nvars()) throw Error(Errc::DimensionMismatch, "operands have different variable counts");
}

}  // namespace

const std::vector<Monomial>& monomial_basis(int nvars, int degree, bool homogeneous) {
  return basis_entry(nvars, degree, homogeneous).monomials;
}

std::size_t monomial_index(int nvars, int degree, bool homogeneous, std::span<const int> exps) {
  const auto& entry = basis_entry(nvars, degree, homogeneous);
  auto it = entry.index.find(std::vector<int>(exps.begin(), exps.end()));
  if (it == entry.index.end()) throw Error(Errc::BadIndex, "monomial not in basis");
  return it->second;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Form::Form(FieldPtr field, int nvars, int degree, bool homogeneous)
    : field_(std::move(field)), nvars_(nvars), degree_(degree), homogeneous_(homogeneous) {
  coeffs_.assign(monomial_basis(nvars_, degree_, homogeneous_).size(), 0);
}

Form::Form(FieldPtr field, int nvars, int degree, bool homogeneous, std::vector<Elem> coeffs)
    : field_(std::move(field)), nvars_(nvars), degree_(degree), homogeneous_(homogeneous), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != monomial_basis(nvars_, degree_, homogeneous_).size())
    throw Error(Errc::LengthMismatch, "coefficient vector does not match basis size");
  for (Elem c : coeffs_)
    if (c >= field_->q()) throw Error(Errc::InvalidArgument, "coefficient outside the field");
}

Form Form::variable(FieldPtr field, int nvars, int index) {
  Form f(std::move(field), nvars, 1, true);
  f.coeffs_[static_cast<std::size_t>(index)] = 1;
  return f;
}

Form Form::linear(FieldPtr field, const LinearForm& h) {
  return Form(std::move(field), static_cast<int>(h.coeffs.size()), 1, true, h.coeffs);
}

Form Form::affine_linear(FieldPtr field, std::span<const Elem> a, Elem c0) {
  std::vector<Elem> coeffs;
  coeffs.push_back(c0);
  coeffs.insert(coeffs.end(), a.begin(), a.end());
  return Form(std::move(field), static_cast<int>(a.size()), 1, false, std::move(coeffs));
}

Form Form::constant(FieldPtr field, int nvars, Elem c, bool homogeneous) {
  return Form(std::move(field), nvars, 0, homogeneous, {c});
}

bool Form::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Elem c) { return c == 0; });
}

Elem Form::coeff(std::span<const int> exps) const {
  return coeffs_[monomial_index(nvars_, degree_, homogeneous_, exps)];
}

void Form::set_coeff(std::span<const int> exps, Elem value) {
  coeffs_[monomial_index(nvars_, degree_, homogeneous_, exps)] = value;
}

Elem Form::leading() const noexcept {
  for (Elem c : coeffs_)
    if (c != 0) return c;
  return 0;
}

Form Form::normalized() const {
  const Elem lead = leading();
  if (lead == 0) throw Error(Errc::ZeroPolynomial, "cannot normalize the zero polynomial");
  return scaled(field_->inv(lead));
}

Form Form::scaled(Elem c) const {
  Form out = *this;
  for (auto& x : out.coeffs_) x = field_->mul(x, c);
  return out;
}

bool Form::operator==(const Form& other) const {
  return field_->same_as(*other.field_) && nvars_ == other.nvars_ && degree_ == other.degree_ &&
         homogeneous_ == other.homogeneous_ && coeffs_ == other.coeffs_;
}

Elem evaluate(const Form& f, std::span<const Elem> point) {
  if (static_cast<int>(point.size()) != f.nvars())
    throw Error(Errc::DimensionMismatch, "point has the wrong number of coordinates");
  const Field& field = f.field();
  const int d = f.degree();
  std::vector<Elem> powers(point.size() * static_cast<std::size_t>(d + 1));
  for (std::size_t i = 0; i < point.size(); ++i) {
    Elem acc = 1;
    for (int k = 0; k <= d; ++k) {
      powers[i * (d + 1) + k] = acc;
      acc = field.mul(acc, point[i]);
    }
  }
  const auto& basis = f.basis();
  Elem total = 0;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    Elem c = f.coeffs()[b];
    if (c == 0) continue;
    for (std::size_t i = 0; i < point.size(); ++i) c = field.mul(c, powers[i * (d + 1) + basis[b].exps[i]]);
    total = field.add(total, c);
  }
  return total;
}

std::uint64_t zero_count(const Form& f, std::span<const ProjectivePoint> points) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "zero count of the zero polynomial");
  std::uint64_t n = 0;
  for (const auto& pt : points) n += evaluate(f, pt.coords) == 0;
  return n;
}

std::uint64_t zero_count(const Form& f, Space space) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "zero count of the zero polynomial");
  if (space == Space::Projective) {
    if (!f.homogeneous()) throw Error(Errc::InvalidArgument, "projective zero count needs a homogeneous form");
    return zero_count(f, cached_projective_points(f.field(), f.nvars() - 1));
  }
  std::uint64_t n = 0;
  for (const auto& pt : cached_affine_points(f.field(), f.nvars())) n += evaluate(f, pt.coords) == 0;
  return n;
}

std::vector<ProjectivePoint> zero_set(const Form& f) {
  std::vector<ProjectivePoint> out;
  for (const auto& pt : cached_projective_points(f.field(), f.nvars() - 1))
    if (evaluate(f, pt.coords) == 0) out.push_back(pt);
  return out;
}

Form add(const Form& f, const Form& g) {
  require_same_field(f, g);
  if (f.degree() != g.degree() || f.homogeneous() != g.homogeneous())
    throw Error(Errc::InvalidArgument, "added forms must share degree and kind");
  std::vector<Elem> c(f.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.field().add(f.coeffs()[i], g.coeffs()[i]);
  return Form(f.field_ptr(), f.nvars(), f.degree(), f.homogeneous(), std::move(c));
}

Form multiply(const Form& f, const Form& g) {
  require_same_field(f, g);
  if (f.homogeneous() != g.homogeneous()) throw Error(Errc::InvalidArgument, "cannot mix homogeneous and affine");
  const Field& field = f.field();
  Form out(f.field_ptr(), f.nvars(), f.degree() + g.degree(), f.homogeneous());
  std::vector<Elem> coeffs(out.coeffs().size(), 0);
  const auto& bf = f.basis();
  const auto& bg = g.basis();
  std::vector<int> exps(static_cast<std::size_t>(f.nvars()));
  for (std::size_t i = 0; i < bf.size(); ++i) {
    if (f.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < bg.size(); ++j) {
      if (g.coeffs()[j] == 0) continue;
      for (std::size_t v = 0; v < exps.size(); ++v) exps[v] = bf[i].exps[v] + bg[j].exps[v];
      const std::size_t idx = monomial_index(out.nvars(), out.degree(), out.homogeneous(), exps);
      coeffs[idx] = field.add(coeffs[idx], field.mul(f.coeffs()[i], g.coeffs()[j]));
    }
  }
  return Form(f.field_ptr(), f.nvars(), out.degree(), f.homogeneous(), std::move(coeffs));
}

Form power(const Form& f, int k) {
  Form acc = Form::constant(f.field_ptr(), f.nvars(), 1, f.homogeneous());
  for (int i = 0; i < k; ++i) acc = multiply(acc, f);
  return acc;
}

std::optional<Form> divide_by_linear(const Form& f, const LinearForm& L) {
  if (!f.homogeneous()) throw Error(Errc::InvalidArgument, "division needs a homogeneous form");
  if (static_cast<int>(L.coeffs.size()) != f.nvars()) throw Error(Errc::DimensionMismatch, "linear form size");
  const Field& field = f.field();
  const LinearForm h{normalize(field, L.coeffs)};
  const std::size_t pivot = static_cast<std::size_t>(
      std::find_if(h.coeffs.begin(), h.coeffs.end(), [](Elem c) { return c != 0; }) - h.coeffs.begin());
  if (f.degree() == 0) return std::nullopt;

  // Long division in the pivot variable; h is monic in it.
  Sparse work = to_sparse(f);
  Sparse quotient;
  while (true) {
    auto top = work.end();
    for (auto it = work.begin(); it != work.end(); ++it)
      if (it->first[pivot] > 0 && (top == work.end() || it->first[pivot] > top->first[pivot])) top = it;
    if (top == work.end()) break;
    std::vector<int> reduced = top->first;
    reduced[pivot] -= 1;
    const Elem c = top->second;
    accumulate(field, quotient, reduced, c);
    for (std::size_t i = 0; i < h.coeffs.size(); ++i) {
      if (h.coeffs[i] == 0) continue;
      std::vector<int> e = reduced;
      e[i] += 1;
      accumulate(field, work, e, field.neg(field.mul(c, h.coeffs[i])));
    }
  }
  if (!work.empty()) return std::nullopt;

  Form q(f.field_ptr(), f.nvars(), f.degree() - 1, true);
  for (const auto& [exps, c] : quotient) q.set_coeff(exps, c);
  // Account for the normalization of L.
  const Elem lead = *std::find_if(L.coeffs.begin(), L.coeffs.end(), [](Elem c) { return c != 0; });
  return q.scaled(field.inv(lead));
}

int LinearFactorization::s() const noexcept {
  int total = 0;
  for (const auto& [form, mult] : linear_part) total += mult;
  return total;
}

LinearFactorization linear_factors(const Form& f) {
  if (!f.homogeneous()) throw Error(Errc::InvalidArgument, "linear factors need a homogeneous form");
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot factor the zero polynomial");
  LinearFactorization out{{}, f, 1};
  Form current = f;
  for (const auto& h : cached_hyperplanes(f.field(), f.nvars() - 1)) {
    if (current.degree() == 0) break;
    int mult = 0;
    while (current.degree() > 0) {
      auto q = divide_by_linear(current, h);
      if (!q) break;
      current = std::move(*q);
      ++mult;
    }
    if (mult > 0) out.linear_part.emplace_back(h, mult);
  }
  out.unit = current.leading();
  out.residual = current.normalized();
  return out;
}

Form reconstruct(const LinearFactorization& lf) {
  Form acc = lf.residual.scaled(lf.unit);
  for (const auto& [h, mult] : lf.linear_part) acc = multiply(acc, power(Form::linear(lf.residual.field_ptr(), h), mult));
  return acc;
}

Form substitute_linear(const Form& f, const std::vector<std::vector<Elem>>& A) {
  if (!f.homogeneous()) throw Error(Errc::InvalidArgument, "substitution needs a homogeneous form");
  if (static_cast<int>(A.size()) != f.nvars()) throw Error(Errc::DimensionMismatch, "matrix rows != variables");
  const int new_vars = static_cast<int>(A.front().size());
  std::vector<std::vector<Form>> powers;  // powers[i][k] = (row i)^k
  for (const auto& row : A) {
    std::vector<Form> pw{Form::constant(f.field_ptr(), new_vars, 1, true)};
    const Form lin = Form::linear(f.field_ptr(), LinearForm{row});
    for (int k = 1; k <= f.degree(); ++k) pw.push_back(multiply(pw.back(), lin));
    powers.push_back(std::move(pw));
  }
  Form out(f.field_ptr(), new_vars, f.degree(), true);
  const auto& basis = f.basis();
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (f.coeffs()[b] == 0) continue;
    Form term = Form::constant(f.field_ptr(), new_vars, f.coeffs()[b], true);
    for (std::size_t i = 0; i < A.size(); ++i) term = multiply(term, powers[i][basis[b].exps[i]]);
    out = add(out, term);
  }
  return out;
}

Form dehomogenize(const Form& f, const LinearForm& h) {
  if (!f.homogeneous()) throw Error(Errc::InvalidArgument, "dehomogenize needs a homogeneous form");
  const Field& field = f.field();
  const LinearForm hn{normalize(field, h.coeffs)};
  const std::size_t n = hn.coeffs.size();
  if (static_cast<int>(n) != f.nvars()) throw Error(Errc::DimensionMismatch, "hyperplane size");
  const std::size_t pivot = static_cast<std::size_t>(
      std::find_if(hn.coeffs.begin(), hn.coeffs.end(), [](Elem c) { return c != 0; }) - hn.coeffs.begin());

  // New coordinates: y_0 = h(x), then the non-pivot x's in order.
  auto pos = [pivot](std::size_t i) { return i < pivot ? i + 1 : i; };
  std::vector<std::vector<Elem>> A(n, std::vector<Elem>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (i == pivot) continue;
    A[i][pos(i)] = 1;
    A[pivot][pos(i)] = field.neg(hn.coeffs[i]);
  }
  A[pivot][0] = 1;
  const Form g = substitute_linear(f, A);

  const int m = static_cast<int>(n) - 1;
  Form out(f.field_ptr(), m, f.degree(), false);
  std::vector<Elem> coeffs(out.coeffs().size(), 0);
  const auto& basis = g.basis();
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (g.coeffs()[b] == 0) continue;
    std::vector<int> rest(basis[b].exps.begin() + 1, basis[b].exps.end());
    const std::size_t idx = monomial_index(m, f.degree(), false, rest);
    coeffs[idx] = field.add(coeffs[idx], g.coeffs()[b]);
  }
  if (std::all_of(coeffs.begin() + 1, coeffs.end(), [](Elem c) { return c == 0; }))
    throw Error(Errc::ZeroForm, "form is a multiple of a power of the removed hyperplane");
  return Form(f.field_ptr(), m, f.degree(), false, std::move(coeffs));
}

nlohmann::json to_json(const Form& f) {
  return {{"field", {{"p", f.field().p()}, {"e", f.field().e()}}},
          {"nvars", f.nvars()},
          {"degree", f.degree()},
          {"homogeneous", f.homogeneous()},
          {"coeffs", f.coeffs()}};
}

Form form_from_json(const nlohmann::json& j) {
  try {
    auto field = make_field(j.at("field").at("p").get<std::uint32_t>(), j.at("field").at("e").get<std::uint32_t>());
    return Form(field, j.at("nvars").get<int>(), j.at("degree").get<int>(), j.at("homogeneous").get<bool>(),
                j.at("coeffs").get<std::vector<Elem>>());
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::InvalidArgument, std::string("malformed form JSON: ") + ex.what());
  }
}

}  // namespace prm
