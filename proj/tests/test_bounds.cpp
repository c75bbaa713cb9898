#include <gtest/gtest.h>

#include "prm/bounds.hpp"
#include "prm/error.hpp"

namespace b = prm::bounds;

namespace {

const std::vector<std::int64_t> kGridQ{3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64, 81};

int extension_degree(std::int64_t q) {
  int e = 0;
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  for (std::int64_t x = q; x > 1; x /= p) ++e;
  return e;
}

}  // namespace

TEST(Bounds, SpecExamples) {
  EXPECT_EQ(b::pm(3, 2), 13);
  EXPECT_EQ(b::pm(7, -1), 0);
  EXPECT_EQ(b::pm(4, 3), 85);

  EXPECT_EQ(b::ore_bound(3, 2, 2).value, 6);
  EXPECT_TRUE(b::ore_bound(3, 2, 2).valid);
  EXPECT_EQ(b::ore_bound(3, 3, 2).value, 9);
  EXPECT_FALSE(b::ore_bound(3, 3, 2).valid);
  EXPECT_EQ(b::ore_bound(5, 4, 3).value, 100);

  EXPECT_EQ(b::geil_second(3, 2, 2).value, 5);
  EXPECT_EQ(b::geil_second(5, 4, 2).value, 17);
  EXPECT_EQ(b::geil_second(4, 2, 3).value, 28);

  EXPECT_EQ(b::serre_bound(3, 3, 2).value, 10);
  EXPECT_EQ(b::serre_bound(4, 2, 3).value, 37);
  EXPECT_EQ(b::serre_bound(2, 1, 2).value, 3);

  EXPECT_EQ(b::hk_linefree(4, 3).value, 9);
  EXPECT_TRUE(b::hk_linefree(4, 3).valid);
  EXPECT_FALSE(b::hk_linefree(4, 4).valid);
  EXPECT_FALSE(b::hk_linefree(4, 4).exceptions.empty());
  EXPECT_EQ(b::hk_linefree(7, 2).value, 8);

  EXPECT_EQ(b::hk_elementary(4, 2, 3).value, 25);
  EXPECT_EQ(b::hk_elementary(4, 3, 3).value, 45);
  EXPECT_EQ(b::hk_elementary(3, 3, 3).value, 28);

  EXPECT_EQ(b::improved_elementary(5, 3, 3).value, 65);
  EXPECT_TRUE(b::improved_elementary(5, 3, 3).valid);
  EXPECT_FALSE(b::improved_elementary(9, 4, 3).valid);
  // hk_elementary(4,3,4) = 128 + 48 + 5 = 181, less (d-2) q^{m-3} = 4.
  EXPECT_EQ(b::improved_elementary(4, 3, 4).value, 177);
  EXPECT_FALSE(b::improved_elementary(4, 3, 4).valid);  // d = sqrt(q) + 1

  EXPECT_EQ(b::second_max_points(3, 3, 2).value, 9);
  EXPECT_EQ(b::second_max_points(5, 4, 2).value, 19);
  const auto s533 = b::second_max_points(5, 3, 3);
  EXPECT_EQ(s533.value, 76);
  EXPECT_EQ(s533.part, 'a');
  EXPECT_EQ(b::second_max_points(5, 5, 3).part, 'b');

  const auto t53 = b::third_weight_curve(5, 3, 1);
  EXPECT_EQ(t53.value, 12);
  EXPECT_EQ(t53.status, b::Status::Exact);
  EXPECT_EQ(b::third_weight_curve(4, 4, 2).value, 14);
  const auto t77 = b::third_weight_curve(7, 7, 1);
  EXPECT_EQ(t77.value, 44);
  EXPECT_EQ(t77.status, b::Status::Upper);
  // d = 6 <= (q+5)/2 at q = 7, so the line-arrangement value applies.
  EXPECT_EQ(b::third_weight_curve(7, 6, 1).value, 37);
  EXPECT_EQ(b::third_weight_curve(7, 6, 1).status, b::Status::Exact);
  const auto t11 = b::third_weight_curve(11, 9, 1);
  EXPECT_EQ(t11.value, 89);
  EXPECT_EQ(t11.status, b::Status::Exact);
  EXPECT_EQ(b::third_weight_curve(8, 7, 3).status, b::Status::Upper);
  EXPECT_THROW(b::third_weight_curve(5, 2, 1), prm::Error);
  EXPECT_THROW(b::third_weight_curve(5, 6, 1), prm::Error);

  EXPECT_EQ(b::line_union_top_count(7, 5, 1), 36);
  EXPECT_EQ(b::line_union_top_count(7, 5, 2), 33);
  EXPECT_EQ(b::line_union_top_count(7, 5, 3), 32);
  EXPECT_THROW(b::line_union_top_count(7, 5, 4), prm::Error);

  EXPECT_EQ(b::zanella_bound(4, 3), 13);
  EXPECT_EQ(b::zanella_bound(0, 9), 1);
  EXPECT_EQ(b::zanella_bound(7, 5), 36);

  EXPECT_EQ(b::near_pencil_formula_count(3, 3), 702);
  EXPECT_EQ(b::near_pencil_formula_count(4, 4), 3360);
}

TEST(Bounds, ElementaryVersusSecondWeight) {
  for (auto q : kGridQ)
    for (int m = 3; m <= 6; ++m)
      for (int d = 3; 2 * d <= q + 3; ++d) {
        const auto a = b::second_max_points(q, d, m);
        ASSERT_EQ(a.part, 'a');
        const auto hk = b::hk_elementary(q, d, m).value;
        EXPECT_EQ(a.value - hk, b::ipow(q, m - 2) * (q + 3 - 2 * d));
        EXPECT_EQ(hk == a.value, 2 * d == q + 3);
        EXPECT_LT(b::improved_elementary(q, d, m).value, a.value);
      }
}

TEST(Bounds, PlaneCurveGaps) {
  for (auto q : kGridQ)
    for (int d = 3; d <= q; ++d) {
      const auto second = b::second_max_points(q, d, 2).value;
      EXPECT_EQ(second - ((d - 1) * q + 1), q - d + 2);
      EXPECT_EQ(second - ((d - 1) * q + 2), q - d + 1);
      EXPECT_GT(q - d + 1, 0);
      EXPECT_EQ(d * q + 1 - 2 * (d - 3) >= (d - 1) * q + 2, 2 * d <= q + 5);
      const auto third = b::third_weight_curve(q, d, extension_degree(q));
      EXPECT_LT(third.value, second);
    }
}

TEST(Bounds, MonotoneInDegree) {
  for (auto q : kGridQ)
    for (int m = 2; m <= 6; ++m)
      for (int d = 2; d <= q; ++d) {
        EXPECT_GE(b::serre_bound(q, d, m).value, b::serre_bound(q, d - 1, m).value);
        EXPECT_GE(b::hk_elementary(q, d, m).value, b::hk_elementary(q, d - 1, m).value);
        if (d < q) EXPECT_GE(b::ore_bound(q, d, m).value, b::ore_bound(q, d - 1, m).value);
        if (m == 2 && d >= 4) EXPECT_GE(b::second_max_points(q, d, 2).value, b::second_max_points(q, d - 1, 2).value);
      }
}

TEST(Bounds, ValidityDomains) {
  EXPECT_FALSE(b::serre_bound(3, 4, 2).valid);
  EXPECT_FALSE(b::hk_elementary(3, 2, 2).valid);
  EXPECT_FALSE(b::geil_second(3, 1, 2).valid);
  EXPECT_FALSE(b::geil_second(3, 2, 1).valid);
  EXPECT_FALSE(b::improved_elementary(5, 2, 3).valid);
  EXPECT_FALSE(b::second_max_points(3, 2, 2).valid);
  EXPECT_EQ(b::serre_bound(3, 4, 2).value, 13);  // evaluated even outside the domain
}
