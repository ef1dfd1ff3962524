// Randomized invariants. Generators are seeded, so failures reproduce.

#include "helpers.hpp"

#include "scalekit/scalecheck.hpp"
#include "scalekit/search.hpp"

#include <gtest/gtest.h>

#include <random>

namespace scalekit {
namespace {

using test::config;
using test::q;
using test::rank_spec;
using test::rbp_config;
using test::set_spec;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  Rational rational(long long lo, long long hi, long long den) {
    return Rational(lo + static_cast<long long>(below(static_cast<std::size_t>(hi - lo + 1))), den);
  }

  /// Measure values over a random binary universe; small value pool so ties occur.
  MeasureValues values(const Universe& u) {
    std::vector<Value> v;
    const std::size_t pool = 1 + below(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) v.emplace_back(Rational(static_cast<long long>(below(pool)), 4));
    return MeasureValues("random", u.spec(), std::move(v));
  }

  WeakOrder order(const Universe& u) {
    return sample_orders(u.spec(), u.size(), OrderSpace::weak, rng_(), 1).front();
  }

  Universe universe() {
    if (below(2) == 0) return enumerate_universe(rank_spec(1 + static_cast<int>(below(3))));
    return enumerate_universe(set_spec(1 + static_cast<int>(below(7))));
  }

 private:
  std::mt19937_64 rng_;
};

bool full_rescan_ok(const MeasureValues& f, const WeakOrder& o) {
  const Comparator cmp;
  for (std::size_t x = 0; x < f.size(); ++x)
    for (std::size_t y = 0; y < f.size(); ++y)
      if (o.leq(x, y) != cmp.less_equal(f[x], f[y])) return false;
  return true;
}

TEST(Properties, OrdinalVerdictIsBiconditional) {
  Gen gen(1);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto u = gen.universe();
    const auto f = gen.values(u);
    // Half the trials use the induced order so ordinal verdicts are common.
    const auto o = trial % 2 == 0 ? order_from_measure(f) : gen.order(u);
    const bool ordinal = check_ordinal(f, o).verdict == OrdinalVerdict::ordinal;
    ASSERT_EQ(ordinal, full_rescan_ok(f, o)) << "trial " << trial;
  }
}

TEST(Properties, IntervalImpliesOrdinal) {
  Gen gen(2);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto u = gen.universe();
    const auto f = gen.values(u);
    const auto o = trial % 2 == 0 ? order_from_measure(f) : gen.order(u);
    const auto report = check_interval(f, o);
    if (report.verdict != IntervalVerdict::not_ordinal) {
      ASSERT_EQ(check_ordinal(f, o).verdict, OrdinalVerdict::ordinal);
    }
  }
}

TEST(Properties, CensusFastPathAgreesWithCheckOrdinal) {
  Gen gen(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto u = enumerate_universe(set_spec(1 + static_cast<int>(gen.below(4))));
    const auto f = gen.values(u);
    SearchOptions opts;
    opts.order_space = OrderSpace::weak;
    const auto c = census(f, opts);
    std::uint64_t ordinal = 0;
    std::uint64_t interval = 0;
    for_each_weak_order(u.spec(), u.size(), [&](const WeakOrder& o) {
      ordinal += check_ordinal(f, o).verdict == OrdinalVerdict::ordinal;
      interval += check_interval(f, o).verdict == IntervalVerdict::interval;
    });
    ASSERT_EQ(c.ordinal_count(), ordinal);
    ASSERT_EQ(c.interval_count, interval);
  }
}

TEST(Properties, UniquenessCoherence) {
  Gen gen(4);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto u = gen.universe();
    const auto o = gen.order(u);
    const auto f = trial % 3 == 0 ? affine_transform(canonical_interval_scale(o), gen.rational(-4, 4, 3),
                                                     gen.rational(-5, 5, 2))
                                  : gen.values(u);
    const bool interval = check_interval(f, o).verdict == IntervalVerdict::interval;
    const auto fit = affine_relate(f, canonical_interval_scale(o));
    const bool affine = fit && Comparator().less(Value(0LL), fit->a);
    ASSERT_EQ(interval, affine) << "trial " << trial;
  }
}

TEST(Properties, PositiveAffineInvariance) {
  Gen gen(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto u = gen.universe();
    const auto o = gen.order(u);
    const auto f = affine_transform(canonical_interval_scale(o), gen.rational(1, 9, 4), gen.rational(-3, 3, 5));
    const auto base = check_interval(f, o);
    ASSERT_EQ(base.verdict, IntervalVerdict::interval);
    const Rational c = gen.rational(1, 20, 7);
    const Rational d = gen.rational(-20, 20, 3);
    const auto moved = check_interval(affine_transform(f, c, d), o);
    ASSERT_EQ(moved.verdict, IntervalVerdict::interval);
    if (base.spacing) ASSERT_EQ(moved.spacing->exact(), c * base.spacing->exact());
  }
}

TEST(Properties, VerdictInvariantUnderPositiveAffineMaps) {
  Gen gen(6);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto u = gen.universe();
    const auto f = gen.values(u);
    const auto o = trial % 2 == 0 ? order_from_measure(f) : gen.order(u);
    const auto g = affine_transform(f, gen.rational(1, 10, 3), gen.rational(-10, 10, 7));
    ASSERT_EQ(check_interval(f, o).verdict, check_interval(g, o).verdict);
  }
}

TEST(Properties, RbtoIsInducedByRbpAtMostHalf) {
  for (int n = 1; n <= 10; ++n) {
    const auto u = enumerate_universe(rank_spec(n));
    const auto order = rbto(u);
    for (const auto& p : {q(1, 2), q(1, 3), q(1, 4), q(1, 10)}) {
      EXPECT_EQ(order_from_measure(evaluate_all(rbp_config(p), u)), order) << "n=" << n;
    }
  }
}

TEST(Properties, SbtoIsInducedByPrecision) {
  for (int n = 1; n <= 12; ++n) {
    const auto u = enumerate_universe(set_spec(n));
    EXPECT_EQ(order_from_measure(evaluate_all(config(MeasureKind::precision), u)), sbto(u));
  }
}

TEST(Properties, UniverseSizesAndDeterminism) {
  for (int n = 1; n <= 12; ++n) {
    const auto r = enumerate_universe(rank_spec(n));
    const auto s = enumerate_universe(set_spec(n));
    EXPECT_EQ(r.size(), std::size_t{1} << n);
    EXPECT_EQ(s.size(), static_cast<std::size_t>(n + 1));
    const auto again = enumerate_universe(rank_spec(n));
    EXPECT_TRUE(std::equal(r.elements().begin(), r.elements().end(), again.elements().begin()));
  }
}

TEST(Properties, CanonicalizeIsIdempotent) {
  Gen gen(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Grade> g(1 + gen.below(6));
    for (auto& x : g) x = Grade(static_cast<std::uint8_t>(gen.below(4)));
    const Element rank(g, Mode::rank_based);
    const Element set(g, Mode::set_based);
    EXPECT_EQ(canonicalize(rank), rank);
    EXPECT_EQ(canonicalize(canonicalize(set)), canonicalize(set));
    EXPECT_EQ(set.grade_sum(), rank.grade_sum());
    EXPECT_EQ(set.relevant_count(), rank.relevant_count());
  }
}

TEST(Properties, FlippingAGradeUpNeverDecreases) {
  for (int n = 1; n <= 5; ++n) {
    const auto u = enumerate_universe(rank_spec(n));
    std::vector<MeasureValues> all;
    for (auto kind : {MeasureKind::precision, MeasureKind::recall, MeasureKind::f_measure,
                      MeasureKind::average_precision, MeasureKind::dcg, MeasureKind::err}) {
      all.push_back(evaluate_all(config(kind), u));
    }
    all.push_back(evaluate_all(rbp_config(q(3, 4)), u));
    for (std::size_t i = 0; i < u.size(); ++i) {
      const std::string text = u[i].text();
      for (std::size_t pos = 0; pos < text.size(); ++pos) {
        if (text[pos] != '0') continue;
        std::string up = text;
        up[pos] = '1';
        const auto j = *u.index_of(up);
        for (const auto& f : all) {
          EXPECT_TRUE(Comparator().less_equal(f[i], f[j])) << f.name() << " " << text << " -> " << up;
        }
      }
    }
  }
}

TEST(Properties, RbpAllOnesPrefixClosedForm) {
  for (int n = 1; n <= 8; ++n) {
    const auto u = enumerate_universe(rank_spec(n));
    for (const auto& p : {q(1, 4), q(1, 3), q(2, 3), q(9, 10)}) {
      const auto f = evaluate_all(rbp_config(p), u);
      for (int k = 0; k <= n; ++k) {
        const std::string text = std::string(static_cast<std::size_t>(k), '1') + std::string(n - k, '0');
        Rational pk(1);
        for (int i = 0; i < k; ++i) pk *= p;
        EXPECT_EQ(f[*u.index_of(text)].exact(), Rational(1) - pk);
      }
    }
  }
}

TEST(Properties, EvaluationIsExactlyRepeatable) {
  const auto u = enumerate_universe(rank_spec(6));
  for (auto kind : {MeasureKind::average_precision, MeasureKind::err, MeasureKind::rbp, MeasureKind::dcg}) {
    const auto a = evaluate_all(config(kind), u);
    const auto b = evaluate_all(config(kind), u);
    for (std::size_t i = 0; i < u.size(); ++i) EXPECT_EQ(a[i], b[i]);
  }
}

TEST(Properties, ParseRenderIdentityOnRandomOrders) {
  Gen gen(8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto u = gen.universe();
    const auto o = gen.order(u);
    const auto back = parse_ordering(render(o, u), u);
    ASSERT_EQ(std::get<WeakOrder>(back), o);
    ASSERT_EQ(render(std::get<WeakOrder>(back), u), render(o, u));
  }
}

TEST(Properties, OrderDependenceOfPrecision) {
  const auto u = enumerate_universe(set_spec(2));
  const auto p = evaluate_all(config(MeasureKind::precision), u);
  EXPECT_EQ(check_interval(p, sbto(u)).verdict, IntervalVerdict::interval);
  EXPECT_EQ(check_ordinal(p, paper_counterexample_order()).verdict, OrdinalVerdict::not_ordinal);
}

}  // namespace
}  // namespace scalekit
