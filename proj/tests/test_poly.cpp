#include <gtest/gtest.h>

#include "oracle.hpp"
#include "prm/poly.hpp"
#include "prm/rng.hpp"

using prm::Elem;
using prm::Form;
using prm::LinearForm;

namespace {

Form random_form(const prm::FieldPtr& f, int nvars, int d, bool homogeneous, prm::SplitMix64& rng) {
  const auto size = prm::monomial_basis(nvars, d, homogeneous).size();
  for (;;) {
    std::vector<Elem> c(size);
    for (auto& x : c) x = static_cast<Elem>(rng.below(f->q()));
    Form g(f, nvars, d, homogeneous, c);
    if (!g.is_zero()) return g;
  }
}

Form lin(const prm::FieldPtr& f, std::vector<Elem> c) { return Form::linear(f, LinearForm{std::move(c)}); }

Form mono(const prm::FieldPtr& f, std::vector<int> exps, Elem c = 1) {
  int d = 0;
  for (int e : exps) d += e;
  Form g(f, static_cast<int>(exps.size()), d, true);
  g.set_coeff(exps, c);
  return g;
}

}  // namespace

TEST(Poly, BasisSizesAndOrder) {
  EXPECT_EQ(prm::monomial_basis(3, 3, true).size(), 10u);
  EXPECT_EQ(prm::monomial_basis(2, 2, false).size(), 6u);
  EXPECT_EQ(prm::monomial_basis(4, 2, true).size(), 10u);
  for (int n = 1; n <= 5; ++n)
    for (int d = 0; d <= 5; ++d) {
      EXPECT_EQ(prm::monomial_basis(n, d, true).size(), prm::binomial(d + n - 1, n - 1));
      EXPECT_EQ(prm::monomial_basis(n, d, false).size(), prm::binomial(d + n, n));
    }
  const auto& b = prm::monomial_basis(3, 2, true);
  EXPECT_EQ(b.front().exps, (std::vector<int>{2, 0, 0}));
  EXPECT_EQ(b.back().exps, (std::vector<int>{0, 0, 2}));
  const auto& a = prm::monomial_basis(2, 2, false);
  EXPECT_EQ(a.front().exps, (std::vector<int>{0, 0}));
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(prm::monomial_index(3, 2, true, b[i].exps), i);
}

TEST(Poly, EvaluateExamples) {
  const auto f2 = prm::make_field_of_order(2);
  const Form g = add(mono(f2, {1, 1, 0}), mono(f2, {0, 0, 2}));
  EXPECT_EQ(prm::evaluate(g, std::vector<Elem>{1, 1, 1}), 0u);
  const auto f3 = prm::make_field_of_order(3);
  EXPECT_EQ(prm::evaluate(Form::variable(f3, 3, 0), std::vector<Elem>{0, 1, 0}), 0u);
  const auto f4 = prm::make_field_of_order(4);
  const Form cubes = add(add(mono(f4, {3, 0, 0}), mono(f4, {0, 3, 0})), mono(f4, {0, 0, 3}));
  EXPECT_EQ(prm::evaluate(cubes, std::vector<Elem>{1, 1, 0}), 0u);
  EXPECT_THROW(prm::evaluate(cubes, std::vector<Elem>{1, 1}), prm::Error);
}

TEST(Poly, ZeroCountExamples) {
  const auto f3 = prm::make_field_of_order(3);
  const Form pencil = multiply(multiply(lin(f3, {1, 0, 0}), lin(f3, {0, 1, 0})), lin(f3, {1, 1, 0}));
  EXPECT_EQ(prm::zero_count(pencil, prm::Space::Projective), 10u);
  const Form triangle = multiply(multiply(lin(f3, {1, 0, 0}), lin(f3, {0, 1, 0})), lin(f3, {0, 0, 1}));
  EXPECT_EQ(prm::zero_count(triangle, prm::Space::Projective), 9u);
  // x (x - 1) on A^2.
  const Form x = Form::affine_linear(f3, std::vector<Elem>{1, 0}, 0);
  const Form x1 = Form::affine_linear(f3, std::vector<Elem>{1, 0}, f3->neg(1));
  EXPECT_EQ(prm::zero_count(multiply(x, x1), prm::Space::Affine), 6u);
  EXPECT_THROW(prm::zero_count(Form(f3, 3, 2, true), prm::Space::Projective), prm::Error);
}

TEST(Poly, ZeroCountMatchesBruteForce) {
  prm::SplitMix64 rng(7);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto f = prm::make_field_of_order(q);
    for (int m = 1; m <= 3; ++m) {
      if (oracle::ipow(q, m + 1) > 5000) continue;
      for (int d = 1; d <= 4; ++d)
        for (int i = 0; i < 5; ++i) {
          const Form g = random_form(f, m + 1, d, true, rng);
          EXPECT_EQ(prm::zero_count(g, prm::Space::Projective), oracle::projective_zeros(g));
          EXPECT_EQ(prm::zero_set(g).size(), oracle::projective_zeros(g));
          const Form a = random_form(f, m, d, false, rng);
          EXPECT_EQ(prm::zero_count(a, prm::Space::Affine), oracle::affine_zeros(a));
        }
    }
  }
}

TEST(Poly, MultiplyExamples) {
  const auto f3 = prm::make_field_of_order(3);
  EXPECT_EQ(multiply(Form::variable(f3, 3, 0), Form::variable(f3, 3, 1)), mono(f3, {1, 1, 0}));
  const auto f2 = prm::make_field_of_order(2);
  const Form s = lin(f2, {1, 1});
  EXPECT_EQ(multiply(s, s), add(mono(f2, {2, 0}), mono(f2, {0, 2})));
  EXPECT_EQ(prm::power(s, 2), multiply(s, s));
  EXPECT_THROW(multiply(s, Form::variable(f3, 2, 0)), prm::Error);
}

TEST(Poly, MultiplyMatchesPointwiseProduct) {
  prm::SplitMix64 rng(11);
  for (std::uint32_t q : {3u, 4u, 5u}) {
    const auto f = prm::make_field_of_order(q);
    for (int i = 0; i < 20; ++i) {
      const Form a = random_form(f, 3, 2, true, rng), b = random_form(f, 3, 3, true, rng);
      const Form ab = multiply(a, b);
      oracle::for_each_vector(q, 3, [&](const std::vector<Elem>& x) {
        ASSERT_EQ(oracle::value(ab, x), oracle::mul(*f, oracle::value(a, x), oracle::value(b, x)));
      });
    }
  }
}

TEST(Poly, DivideByLinear) {
  const auto f3 = prm::make_field_of_order(3);
  const auto q1 = prm::divide_by_linear(mono(f3, {1, 1}), LinearForm{{1, 0}});
  ASSERT_TRUE(q1.has_value());
  EXPECT_EQ(*q1, Form::variable(f3, 2, 1));
  EXPECT_FALSE(prm::divide_by_linear(add(mono(f3, {2, 0}), mono(f3, {0, 2})), LinearForm{{1, 1}}).has_value());
  const auto f2 = prm::make_field_of_order(2);
  const auto q2 = prm::divide_by_linear(add(mono(f2, {2, 0}), mono(f2, {0, 2})), LinearForm{{1, 1}});
  ASSERT_TRUE(q2.has_value());
  EXPECT_EQ(*q2, lin(f2, {1, 1}));

  prm::SplitMix64 rng(3);
  const auto f5 = prm::make_field_of_order(5);
  const auto& H = prm::cached_hyperplanes(*f5, 2);
  for (int i = 0; i < 200; ++i) {
    const LinearForm& h = H[rng.below(H.size())];
    const Form g = random_form(f5, 3, 3, true, rng);
    const auto back = prm::divide_by_linear(multiply(Form::linear(f5, h), g), h);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, g);
  }
}

TEST(Poly, LinearFactorExamples) {
  const auto f3 = prm::make_field_of_order(3);
  const auto tri = prm::linear_factors(mono(f3, {1, 1, 1}));
  EXPECT_EQ(tri.s(), 3);
  EXPECT_EQ(tri.linear_part.size(), 3u);
  EXPECT_EQ(tri.residual.degree(), 0);

  const auto doubled = prm::linear_factors(mono(f3, {2, 1, 0}));
  EXPECT_EQ(doubled.s(), 3);
  ASSERT_EQ(doubled.linear_part.size(), 2u);
  std::map<std::vector<Elem>, int> mult;
  for (const auto& [h, k] : doubled.linear_part) mult[h.coeffs] = k;
  EXPECT_EQ((mult[{1, 0, 0}]), 2);
  EXPECT_EQ((mult[{0, 1, 0}]), 1);

  const auto f4 = prm::make_field_of_order(4);
  const Form herm = add(add(mono(f4, {3, 0, 0}), mono(f4, {0, 3, 0})), mono(f4, {0, 0, 3}));
  const auto hl = prm::linear_factors(herm);
  EXPECT_TRUE(hl.linear_part.empty());
  EXPECT_EQ(hl.residual.degree(), 3);
}

TEST(Poly, LinearFactorsReconstruct) {
  prm::SplitMix64 rng(5);
  const std::vector<std::tuple<std::uint32_t, int, int>> cases{{2, 3, 2}, {3, 3, 2}, {4, 4, 2}, {5, 3, 2},
                                                               {7, 3, 2}, {3, 2, 3}, {4, 3, 3}};
  for (const auto& [q, d, m] : cases) {
    const auto f = prm::make_field_of_order(q);
    const auto& H = prm::cached_hyperplanes(*f, m);
    for (int i = 0; i < 1500; ++i) {
      const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(d) + 1));
      Form g = Form::constant(f, m + 1, static_cast<Elem>(1 + rng.below(q - 1)), true);
      for (int j = 0; j < k; ++j) g = multiply(g, Form::linear(f, H[rng.below(H.size())]));
      if (k < d) g = multiply(g, random_form(f, m + 1, d - k, true, rng));
      const auto lf = prm::linear_factors(g);
      ASSERT_EQ(prm::reconstruct(lf), g);
      ASSERT_GE(lf.s(), k);
      if (i % 50 == 0 && lf.residual.degree() > 0)
        for (const auto& h : H) ASSERT_FALSE(prm::divide_by_linear(lf.residual, h).has_value());
    }
  }
}

TEST(Poly, DehomogenizeExamples) {
  const auto f3 = prm::make_field_of_order(3);
  const Form a = prm::dehomogenize(mono(f3, {1, 1, 0}), LinearForm{{1, 0, 0}});
  EXPECT_EQ(prm::zero_count(a, prm::Space::Affine), 3u);
  Form expected(f3, 2, 2, false);
  expected.set_coeff(std::vector<int>{1, 0}, 1);
  EXPECT_EQ(a, expected);
  const Form b = prm::dehomogenize(Form::variable(f3, 3, 1), LinearForm{{1, 0, 0}});
  EXPECT_EQ(prm::zero_count(b, prm::Space::Affine), 3u);
  try {
    prm::dehomogenize(Form::variable(f3, 3, 0), LinearForm{{1, 0, 0}});
    ADD_FAILURE() << "expected ZeroForm";
  } catch (const prm::Error& e) {
    EXPECT_EQ(e.code(), prm::Errc::ZeroForm);
  }
}

TEST(Poly, SplittingIdentity) {
  prm::SplitMix64 rng(17);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto f = prm::make_field_of_order(q);
    for (int m = 2; m <= 3; ++m) {
      const auto& H = prm::cached_hyperplanes(*f, m);
      const int forms = 200;
      for (int i = 0; i < forms; ++i) {
        const int d = 1 + static_cast<int>(rng.below(3));
        const Form g = random_form(f, m + 1, d, true, rng);
        const auto zs = prm::zero_set(g);
        for (const auto& h : H) {
          const auto on = prm::hyperplane_section(*f, zs, h).size();
          try {
            const auto off = prm::zero_count(prm::dehomogenize(g, h), prm::Space::Affine);
            ASSERT_EQ(zs.size(), on + off);
          } catch (const prm::Error& e) {
            ASSERT_EQ(e.code(), prm::Errc::ZeroForm);
            ASSERT_EQ(zs.size(), on);
          }
        }
      }
    }
  }
}

TEST(Poly, CoordinateChangeInvariance) {
  prm::SplitMix64 rng(23);
  for (std::uint32_t q : {3u, 4u, 5u}) {
    const auto f = prm::make_field_of_order(q);
    for (int i = 0; i < 100; ++i) {
      std::vector<std::vector<Elem>> A;
      do {
        A.assign(3, std::vector<Elem>(3));
        for (auto& row : A)
          for (auto& x : row) x = static_cast<Elem>(rng.below(q));
      } while (prm::rank(*f, A) < 3);
      const Form g = random_form(f, 3, 3, true, rng);
      EXPECT_EQ(prm::zero_count(prm::substitute_linear(g, A), prm::Space::Projective),
                prm::zero_count(g, prm::Space::Projective));
    }
  }
}

TEST(Poly, NormalizedAndJson) {
  const auto f5 = prm::make_field_of_order(5);
  Form g(f5, 3, 2, true, {0, 3, 1, 0, 2, 4});
  EXPECT_EQ(g.leading(), 3u);
  const Form n = g.normalized();
  EXPECT_EQ(n.leading(), 1u);
  EXPECT_EQ(n.scaled(3), g);
  EXPECT_EQ(prm::form_from_json(prm::to_json(g)), g);
  EXPECT_THROW(prm::form_from_json(nlohmann::json{{"nvars", 3}}), prm::Error);
  const auto f9 = prm::make_field_of_order(9);
  Form h(f9, 3, 1, true, {0, 5, 8});
  EXPECT_EQ(prm::form_from_json(prm::to_json(h)), h);
}
