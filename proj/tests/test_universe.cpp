#include "helpers.hpp"

#include "scalekit/error.hpp"
#include "scalekit/universe.hpp"

#include <gtest/gtest.h>

#include <set>

namespace scalekit {
namespace {

using test::rank_spec;
using test::set_spec;

std::vector<std::string> texts(const Universe& u) {
  std::vector<std::string> out;
  for (const auto& e : u.elements()) out.push_back(e.text());
  return out;
}

TEST(Universe, RankBasedBinaryIsLexicographic) {
  const auto u = enumerate_universe(rank_spec(2));
  EXPECT_EQ(texts(u), (std::vector<std::string>{"00", "01", "10", "11"}));
}

TEST(Universe, SetBasedBinaryAscendsByRelevantCount) {
  const auto u = enumerate_universe(set_spec(2));
  EXPECT_EQ(texts(u), (std::vector<std::string>{"00", "10", "11"}));
}

TEST(Universe, SizesMatchClosedForm) {
  for (int n = 1; n <= 6; ++n) {
    for (int g = 1; g <= 3; ++g) {
      for (auto mode : {Mode::rank_based, Mode::set_based}) {
        UniverseSpec spec{.n = n, .g_max = g, .mode = mode, .recall_base = std::nullopt};
        const auto u = enumerate_universe(spec);
        ASSERT_TRUE(spec.closed_form_size().has_value());
        EXPECT_EQ(u.size(), *spec.closed_form_size()) << "n=" << n << " g=" << g;
      }
    }
  }
}

TEST(Universe, SetBasedGradedSize) {
  // C(N+g, g) multisets: N=3, g=2 gives 10.
  EXPECT_EQ(enumerate_universe(set_spec(3, std::nullopt, 2)).size(), 10u);
}

TEST(Universe, ElementsAreDistinctAndIndexed) {
  const auto u = enumerate_universe(rank_spec(4, 2));
  std::set<std::string> seen;
  for (std::size_t i = 0; i < u.size(); ++i) {
    EXPECT_TRUE(seen.insert(u[i].text()).second);
    EXPECT_EQ(u.index_of(u[i]), i);
    EXPECT_EQ(u.index_of(u[i].text()), i);
  }
}

TEST(Universe, SetBasedLookupCanonicalizes) {
  const auto u = enumerate_universe(set_spec(2));
  EXPECT_EQ(u.index_of("01"), u.index_of("10"));
  EXPECT_EQ(u.index_of("01"), std::optional<std::size_t>(1));
}

TEST(Universe, RankBasedLookupDoesNotCanonicalize) {
  const auto u = enumerate_universe(rank_spec(2));
  EXPECT_NE(u.index_of("01"), u.index_of("10"));
}

TEST(Universe, UnknownTextIsAbsent) {
  const auto u = enumerate_universe(rank_spec(2));
  EXPECT_FALSE(u.index_of("000").has_value());
}

TEST(Universe, SingleElementUniverse) {
  const auto u = enumerate_universe(rank_spec(1));
  EXPECT_EQ(u.size(), 2u);
}

TEST(Universe, CapExceededThrows) {
  EXPECT_THROW(enumerate_universe(rank_spec(12), 1000), CapExceeded);
  EXPECT_NO_THROW(enumerate_universe(rank_spec(10), 1024));
}

TEST(Universe, InvalidSpecsThrow) {
  EXPECT_THROW(enumerate_universe(rank_spec(0)), InvalidSpec);
  EXPECT_THROW(enumerate_universe(rank_spec(2, 0)), InvalidSpec);
  EXPECT_THROW(enumerate_universe(rank_spec(2, 10)), InvalidSpec);
  EXPECT_THROW(enumerate_universe(set_spec(3, 2)), InvalidSpec);
  EXPECT_THROW(enumerate_universe(set_spec(3, 0)), InvalidSpec);
}

TEST(Element, ParseRejectsBadCharacters) {
  EXPECT_THROW(Element::parse("0x", Mode::rank_based, 1), OrderingError);
  EXPECT_THROW(Element::parse("02", Mode::rank_based, 1), OrderingError);
  EXPECT_NO_THROW(Element::parse("02", Mode::rank_based, 2));
}

TEST(Element, SetBasedIsSortedDescending) {
  const auto e = Element::parse("0121", Mode::set_based, 2);
  EXPECT_EQ(e.text(), "2110");
  EXPECT_EQ(e.relevant_count(), 3);
  EXPECT_EQ(e.grade_sum(), 4);
  EXPECT_EQ(canonicalize(Element::parse("01", Mode::rank_based, 1)).text(), "01");
}

TEST(Mode, ParseRoundTrip) {
  EXPECT_EQ(parse_mode("rank"), Mode::rank_based);
  EXPECT_EQ(parse_mode("set"), Mode::set_based);
  EXPECT_EQ(to_string(Mode::set_based), "set");
  EXPECT_THROW(parse_mode("graph"), InvalidSpec);
}

}  // namespace
}  // namespace scalekit
