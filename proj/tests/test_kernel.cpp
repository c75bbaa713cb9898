#include <gtest/gtest.h>

#include <set>

#include "prm/codes.hpp"
#include "prm/kernel.hpp"

using prm::Elem;
namespace kernel = prm::kernel;

namespace {

struct Case {
  prm::CodeKind kind;
  std::uint32_t q;
  int d, m;
};

const std::vector<Case> kCases{
    {prm::CodeKind::PRM, 2, 2, 2}, {prm::CodeKind::PRM, 3, 2, 2}, {prm::CodeKind::PRM, 3, 3, 2},
    {prm::CodeKind::PRM, 4, 2, 2}, {prm::CodeKind::PRM, 5, 2, 2}, {prm::CodeKind::PRM, 9, 1, 2},
    {prm::CodeKind::PRM, 8, 1, 3}, {prm::CodeKind::GRM, 3, 2, 2}, {prm::CodeKind::GRM, 4, 3, 2},
    {prm::CodeKind::PRM, 2, 1, 4}, {prm::CodeKind::PRM, 3, 2, 3},
};

void expect_same(const kernel::ZeroTally& a, const kernel::ZeroTally& b) {
  EXPECT_EQ(a.tally, b.tally);
  EXPECT_EQ(a.first_index, b.first_index);
  EXPECT_EQ(a.collected, b.collected);
  EXPECT_EQ(a.messages, b.messages);
}

}  // namespace

TEST(Kernel, CanonicalCount) {
  EXPECT_EQ(kernel::canonical_count(3, 10), 29524u);
  EXPECT_EQ(kernel::canonical_count(4, 10), 349525u);
  EXPECT_EQ(kernel::canonical_count(2, 3), 7u);
  EXPECT_EQ(kernel::canonical_count(81, 40), kernel::kNone);
}

TEST(Kernel, CanonicalMessagesAreDistinctAndNormalized) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
    const auto f = prm::make_field_of_order(q);
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto count = kernel::canonical_count(q, k);
      std::set<std::vector<Elem>> seen;
      std::size_t last_lead = 0;
      for (std::uint64_t i = 0; i < count; ++i) {
        const auto msg = kernel::canonical_message(*f, k, i);
        std::size_t lead = 0;
        while (msg[lead] == 0) ++lead;
        ASSERT_EQ(msg[lead], 1u);
        ASSERT_GE(lead, last_lead);  // blocks are laid out by leading position
        last_lead = lead;
        seen.insert(msg);
      }
      EXPECT_EQ(seen.size(), count);
    }
  }
}

TEST(Kernel, ImplementationsAgree) {
  for (const auto& c : kCases) {
    const auto code = prm::build_code(c.kind, prm::make_field_of_order(c.q), c.d, c.m, true);
    const auto view = code.view();
    kernel::TallyOptions opts;
    opts.collect_min = static_cast<std::uint32_t>(code.n / 3);
    opts.collect_max = static_cast<std::uint32_t>(code.n);
    const auto ref = kernel::tally_reference(view, opts);
    expect_same(ref, kernel::tally_incremental(view, opts));
    for (int workers : {1, 2, 3, 4}) {
      auto small = opts;
      small.chunk = 37;
      expect_same(ref, kernel::tally_parallel(view, small, workers));
      expect_same(ref, kernel::tally_parallel(view, opts, workers));
    }
    std::uint64_t total = 0;
    for (auto t : ref.tally) total += t;
    EXPECT_EQ(total, kernel::canonical_count(c.q, code.k));
    EXPECT_EQ(ref.messages, total);
  }
}

TEST(Kernel, SubrangesMerge) {
  const auto code = prm::build_code(prm::CodeKind::PRM, prm::make_field_of_order(5), 2, 2);
  const auto view = code.view();
  kernel::TallyOptions all;
  all.collect_min = 9;
  all.collect_max = 31;
  const auto whole = kernel::tally_reference(view, all);
  const std::uint64_t total = kernel::canonical_count(5, code.k);
  for (std::uint64_t cut : {std::uint64_t{1}, std::uint64_t{125}, std::uint64_t{777}, total - 1}) {
    auto lo = all, hi = all;
    lo.end = cut;
    hi.begin = cut;
    auto merged = kernel::tally_incremental(view, lo);
    merged.merge(kernel::tally_parallel(view, hi, 2));
    expect_same(whole, merged);
  }
}

TEST(Kernel, CollectedIndicesDecodeToTheirCounts) {
  const auto code = prm::build_code(prm::CodeKind::PRM, prm::make_field_of_order(4), 3, 2, false);
  kernel::TallyOptions opts;
  opts.collect_min = 12;
  opts.collect_max = 21;
  const auto t = kernel::tally_parallel(code.view(), opts, 3);
  ASSERT_FALSE(t.collected.empty());
  EXPECT_TRUE(std::is_sorted(t.collected.begin(), t.collected.end()));
  for (const auto& [index, zeros] : t.collected) {
    const auto cw = kernel::encode(code.view(), kernel::canonical_message(*code.field, code.k, index));
    ASSERT_EQ(static_cast<std::uint32_t>(std::count(cw.begin(), cw.end(), Elem{0})), zeros);
  }
  for (std::size_t z = 0; z < t.tally.size(); ++z) {
    if (t.tally[z] == 0) {
      EXPECT_EQ(t.first_index[z], kernel::kNone);
      continue;
    }
    const auto cw = kernel::encode(code.view(), kernel::canonical_message(*code.field, code.k, t.first_index[z]));
    EXPECT_EQ(static_cast<std::size_t>(std::count(cw.begin(), cw.end(), Elem{0})), z);
  }
}

TEST(Kernel, CollectCapThrows) {
  const auto code = prm::build_code(prm::CodeKind::PRM, prm::make_field_of_order(3), 2, 2);
  kernel::TallyOptions opts;
  opts.collect_min = 0;
  opts.collect_max = 13;
  opts.collect_cap = 10;
  EXPECT_THROW(kernel::tally_parallel(code.view(), opts, 2), prm::Error);
}
