#include "helpers.hpp"

#include "scalekit/error.hpp"
#include "scalekit/orderings.hpp"
#include "scalekit/search.hpp"

#include <gtest/gtest.h>

namespace scalekit {
namespace {

using test::config;
using test::q;
using test::rank_spec;
using test::rbp_config;
using test::set_spec;

TEST(WeakOrder, RejectsGapsInClassIndices) {
  EXPECT_THROW(WeakOrder(set_spec(2), {0, 2, 2}), OrderingError);
  EXPECT_NO_THROW(WeakOrder(set_spec(2), {1, 0, 1}));
}

TEST(WeakOrder, FromClassesDetectsDuplicatesAndMissing) {
  EXPECT_THROW(WeakOrder::from_classes(set_spec(2), 3, {{0, 1}, {1, 2}}), OrderingError);
  EXPECT_THROW(WeakOrder::from_classes(set_spec(2), 3, {{0}, {1}}), OrderingError);
  const auto o = WeakOrder::from_classes(set_spec(2), 3, {{1}, {0, 2}});
  EXPECT_TRUE(o.less(1, 0));
  EXPECT_TRUE(o.tied(0, 2));
  EXPECT_EQ(o.kind(), OrderKind::weak);
}

TEST(Orderings, CounterexampleOrder) {
  const auto o = paper_counterexample_order();
  const auto u = enumerate_universe(set_spec(2));
  EXPECT_EQ(o.kind(), OrderKind::strict_total);
  EXPECT_EQ(render(o, u), "10\n00\n11\n");
}

TEST(Orderings, SbtoGroupsByRelevantCount) {
  const auto u = enumerate_universe(set_spec(4));
  const auto o = sbto(u);
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) {
      EXPECT_EQ(o.leq(i, j), u[i].relevant_count() <= u[j].relevant_count());
    }
  }
  EXPECT_THROW(sbto(enumerate_universe(rank_spec(2))), InvalidSpec);
}

TEST(Orderings, RbtoIsBinaryFractionOrder) {
  const auto u = enumerate_universe(rank_spec(3));
  const auto o = rbto(u);
  EXPECT_EQ(o.kind(), OrderKind::strict_total);
  // Lexicographic enumeration coincides with binary-fraction order.
  for (std::size_t i = 0; i < u.size(); ++i) EXPECT_EQ(o.class_of(i), i);
  EXPECT_THROW(rbto(enumerate_universe(set_spec(2))), InvalidSpec);
  EXPECT_THROW(rbto(enumerate_universe(rank_spec(2, 2))), InvalidSpec);
}

TEST(Orderings, InducedOrderTiesEqualValues) {
  const auto u = enumerate_universe(rank_spec(2));
  const auto o = order_from_measure(evaluate_all(config(MeasureKind::precision), u));
  EXPECT_EQ(o.class_count(), 3u);
  EXPECT_TRUE(o.tied(*u.index_of("01"), *u.index_of("10")));
  EXPECT_EQ(o.name(), "induced(precision)");
}

TEST(Orderings, InducedOrderRespectsEpsilon) {
  const auto u = enumerate_universe(rank_spec(2));
  const MeasureValues v("near", u.spec(), {Value(Real("0")), Value(Real("1e-12")), Value(Real("0.5")),
                                           Value(Real("0.5000000000001"))});
  EXPECT_EQ(order_from_measure(v, Comparator(1e-9)).class_count(), 2u);
  EXPECT_EQ(order_from_measure(v, Comparator(1e-15)).class_count(), 4u);
}

TEST(Parse, ClassPerLineFormat) {
  const auto u = enumerate_universe(set_spec(2));
  const auto o = parse_ordering("# comment\n01\n\n00, 11\n", u);
  const auto& w = std::get<WeakOrder>(o);
  EXPECT_TRUE(w.less(*u.index_of("10"), *u.index_of("00")));
  EXPECT_TRUE(w.tied(*u.index_of("00"), *u.index_of("11")));
}

TEST(Parse, PartialFormat) {
  const auto u = enumerate_universe(rank_spec(2));
  const auto o = parse_ordering("partial\n00 < 01\n00 < 10\n01 < 11\n10 < 11\n", u);
  const auto& p = std::get<PartialOrder>(o);
  EXPECT_TRUE(p.less(0, 3));
  EXPECT_FALSE(p.comparable(1, 2));
  EXPECT_FALSE(p.is_total());
}

TEST(Parse, Errors) {
  const auto u = enumerate_universe(set_spec(2));
  EXPECT_THROW(parse_ordering("00\n12\n11\n", u), OrderingError);
  EXPECT_THROW(parse_ordering("00\n10\n00\n11\n", u), OrderingError);
  EXPECT_THROW(parse_ordering("00\n10\n", u), OrderingError);
  EXPECT_THROW(parse_ordering("partial\n00 < 10\n10 < 00\n", u), OrderingError);
  EXPECT_THROW(parse_ordering("partial\n00 ~ 10\n", u), OrderingError);
}

TEST(Parse, CycleThroughTiesIsRejected) {
  const auto u = enumerate_universe(set_spec(2));
  EXPECT_THROW(parse_ordering("partial\n00 < 10\n10 < 11\n11 = 00\n", u), OrderingError);
}

TEST(Parse, RenderRoundTripsWeakOrders) {
  const auto u = enumerate_universe(rank_spec(2));
  for (const auto& o : enumerate_weak_orders(u)) {
    const auto back = parse_ordering(render(o, u), u);
    ASSERT_TRUE(std::holds_alternative<WeakOrder>(back));
    EXPECT_EQ(std::get<WeakOrder>(back), o);
  }
}

TEST(Parse, RenderRoundTripsPartialOrders) {
  const auto u = enumerate_universe(rank_spec(2));
  const auto p = PartialOrder::from_relations(u.spec(), u.size(), {{0, 1}, {0, 2}, {1, 3}}, {{2, 3}});
  const auto back = parse_ordering(render(p, u), u);
  ASSERT_TRUE(std::holds_alternative<PartialOrder>(back));
  EXPECT_EQ(std::get<PartialOrder>(back), p);
}

TEST(Validate, ReportsCarrierMismatch) {
  const auto u = enumerate_universe(set_spec(3));
  EXPECT_FALSE(validate(paper_counterexample_order(), u).empty());
  EXPECT_TRUE(validate(sbto(u), u).empty());
}

}  // namespace
}  // namespace scalekit
