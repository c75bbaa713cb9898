#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "prm/geometry.hpp"

using prm::Elem;

namespace {

std::uint64_t pm(std::uint64_t q, int m) {
  std::uint64_t s = 0;
  for (int i = 0; i <= m; ++i) s += oracle::ipow(q, i);
  return s;
}

// Nonzero vectors of F_q^{m+1} up to scalars, by brute force.
std::set<std::vector<Elem>> brute_points(const prm::Field& f, int m) {
  std::set<std::vector<Elem>> out;
  oracle::for_each_vector(f.q(), m + 1, [&](const std::vector<Elem>& x) {
    std::size_t lead = 0;
    while (lead < x.size() && x[lead] == 0) ++lead;
    if (lead == x.size()) return;
    // Divide by the lead entry by searching for its inverse.
    Elem inv = 1;
    while (oracle::mul(f, inv, x[lead]) != 1) ++inv;
    std::vector<Elem> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = oracle::mul(f, inv, x[i]);
    out.insert(y);
  });
  return out;
}

}  // namespace

TEST(Geometry, Counts) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto f = prm::make_field_of_order(q);
    for (int m = 1; m <= 4; ++m) {
      if (oracle::ipow(q, m) > 10000) continue;
      EXPECT_EQ(prm::projective_points(*f, m).size(), pm(q, m));
      EXPECT_EQ(prm::hyperplanes(*f, m).size(), pm(q, m));
      EXPECT_EQ(prm::affine_points(*f, m).size(), oracle::ipow(q, m));
    }
  }
  EXPECT_EQ(prm::projective_points(*prm::make_field_of_order(2), 1).size(), 3u);
  EXPECT_EQ(prm::projective_points(*prm::make_field_of_order(4), 3).size(), 85u);
  EXPECT_EQ(prm::affine_points(*prm::make_field_of_order(2), 3).size(), 8u);
}

TEST(Geometry, PointsMatchBruteForceAndAreSorted) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto f = prm::make_field_of_order(q);
    for (int m = 1; m <= 3; ++m) {
      const auto pts = prm::projective_points(*f, m);
      std::vector<std::vector<Elem>> coords;
      for (const auto& p : pts) coords.push_back(p.coords);
      const auto brute = brute_points(*f, m);
      EXPECT_EQ(std::vector<std::vector<Elem>>(brute.begin(), brute.end()), coords);
      EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
      EXPECT_EQ(&prm::cached_projective_points(*f, m), &prm::cached_projective_points(*f, m));
    }
  }
}

TEST(Geometry, IncidenceDoubleCount) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto f = prm::make_field_of_order(q);
    for (int m = 2; m <= 3; ++m) {
      const auto pts = prm::projective_points(*f, m);
      std::uint64_t total = 0;
      for (const auto& h : prm::hyperplanes(*f, m)) {
        const auto section = prm::hyperplane_section(*f, pts, h);
        EXPECT_EQ(section.size(), pm(q, m - 1));
        total += section.size();
      }
      EXPECT_EQ(total, pm(q, m) * pm(q, m - 1));
    }
  }
}

TEST(Geometry, Pencils) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto f = prm::make_field_of_order(q);
    for (int m = 2; m <= 3; ++m) {
      const auto& H = prm::cached_hyperplanes(*f, m);
      for (std::size_t i = 0; i < std::min<std::size_t>(H.size() / 2, 6); ++i) {
        const auto& a = H[i];
        const auto& b = H[H.size() - 1 - i];
        const auto members = prm::pencil(*f, a, b);
        EXPECT_EQ(members.size(), q + 1);
        EXPECT_TRUE(std::is_sorted(members.begin(), members.end()));
        const auto flat = prm::flat_points(*f, m, a, b);
        EXPECT_EQ(flat.size(), pm(q, m - 2));
        for (const auto& h : members)
          for (const auto& P : flat) EXPECT_TRUE(prm::contains(*f, h, P));
      }
      try {
        prm::pencil(*f, H[0], H[0]);
        ADD_FAILURE() << "expected DependentForms";
      } catch (const prm::Error& e) {
        EXPECT_EQ(e.code(), prm::Errc::DependentForms);
      }
    }
  }
}

TEST(Geometry, SectionExamples) {
  const auto f3 = prm::make_field_of_order(3);
  const auto plane = prm::projective_points(*f3, 2);
  EXPECT_EQ(prm::hyperplane_section(*f3, plane, prm::hyperplanes(*f3, 2)[5]).size(), 4u);
  EXPECT_TRUE(prm::hyperplane_section(*f3, std::vector<prm::ProjectivePoint>{}, prm::hyperplanes(*f3, 2)[0]).empty());

  // Conic x0 x2 = x1^2 over GF(5) has a tangent line.
  const auto f5 = prm::make_field_of_order(5);
  std::vector<prm::ProjectivePoint> conic;
  for (const auto& P : prm::projective_points(*f5, 2))
    if (f5->mul(P.coords[0], P.coords[2]) == f5->mul(P.coords[1], P.coords[1])) conic.push_back(P);
  ASSERT_EQ(conic.size(), 6u);
  bool tangent = false;
  for (const auto& h : prm::hyperplanes(*f5, 2)) tangent = tangent || prm::hyperplane_section(*f5, conic, h).size() == 1;
  EXPECT_TRUE(tangent);

  EXPECT_EQ(prm::hyperplanes(*prm::make_field_of_order(2), 2).size(), 7u);
  EXPECT_EQ(prm::hyperplanes(*prm::make_field_of_order(4), 2).size(), 21u);
}

TEST(Geometry, RankAndNormalize) {
  const auto f = prm::make_field_of_order(5);
  EXPECT_EQ(prm::normalize(*f, {0, 3, 1}), (std::vector<Elem>{0, 1, 2}));
  EXPECT_THROW(prm::normalize(*f, {0, 0, 0}), prm::Error);
  EXPECT_EQ(prm::rank(*f, {{1, 2, 3}, {2, 4, 1}, {0, 0, 0}}), 1u);
  EXPECT_EQ(prm::rank(*f, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 3u);
}
