#include "scalekit/repro.hpp"

#include "scalekit/measures.hpp"
#include "scalekit/orderings.hpp"
#include "scalekit/scalecheck.hpp"
#include "scalekit/search.hpp"
#include "scalekit/universe.hpp"

#include <random>
#include <sstream>

namespace scalekit {

namespace {

UniverseSpec set_spec(int n, std::optional<int> rb = std::nullopt) {
  return UniverseSpec{.n = n, .g_max = 1, .mode = Mode::set_based, .recall_base = rb};
}

UniverseSpec rank_spec(int n) {
  return UniverseSpec{.n = n, .g_max = 1, .mode = Mode::rank_based, .recall_base = std::nullopt};
}

MeasureConfig measure(MeasureKind kind) {
  MeasureConfig c;
  c.kind = kind;
  return c;
}

MeasureConfig rbp_config(const Rational& p) {
  MeasureConfig c;
  c.kind = MeasureKind::rbp;
  c.p = p;
  return c;
}

/// Collects failures; a claim passes when none were recorded.
class Tracker {
 public:
  void fail(const std::string& what) {
    if (failures_ < kMaxDetail) detail_ << (failures_ == 0 ? "" : "; ") << what;
    ++failures_;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  ReproLine finish(std::string id, std::string claim, const std::string& success_detail) const {
    ReproLine line{std::move(id), std::move(claim), failures_ == 0, {}};
    if (failures_ == 0) {
      line.detail = success_detail;
    } else {
      line.detail = detail_.str();
      if (failures_ > kMaxDetail) line.detail += "; +" + std::to_string(failures_ - kMaxDetail) + " more";
    }
    return line;
  }

 private:
  static constexpr int kMaxDetail = 4;
  int failures_ = 0;
  std::ostringstream detail_;
};

ReproLine counterexample() {
  Tracker t;
  const auto universe = enumerate_universe(set_spec(2, 2));
  const auto order = paper_counterexample_order();
  for (auto kind : {MeasureKind::precision, MeasureKind::recall, MeasureKind::f_measure}) {
    const auto values = evaluate_all(measure(kind), universe);
    const auto report = check_ordinal(values, order);
    const std::string name(to_string(kind));
    t.expect(report.verdict == OrdinalVerdict::not_ordinal, name + " should be not-ordinal");
    t.expect(!report.witnesses.empty() && universe[report.witnesses[0].x].text() == "00" &&
                 universe[report.witnesses[0].y].text() == "10",
             name + " witness should be ({0,0},{0,1})");
  }
  return t.finish("1", "P, R and F are not ordinal on {0,1} < {0,0} < {1,1}",
                  "P(00)=0 < P(01)=1/2 although {0,1} precedes {0,0}");
}

ReproLine set_based_total_order() {
  Tracker t;
  for (int n = 1; n <= 10; ++n) {
    const auto universe = enumerate_universe(set_spec(n));
    const auto order = sbto(universe);
    const std::pair<MeasureKind, Rational> expected[] = {
        {MeasureKind::precision, Rational(1, n)},
        {MeasureKind::recall, Rational(1, n)},
        {MeasureKind::f_measure, Rational(2, 2 * n)},
    };
    for (const auto& [kind, spacing] : expected) {
      const auto report = check_interval(evaluate_all(measure(kind), universe), order);
      const std::string where = std::string(to_string(kind)) + " N=" + std::to_string(n);
      t.expect(report.verdict == IntervalVerdict::interval, where + " not interval");
      t.expect(report.spacing && report.spacing->is_exact() && report.spacing->exact() == spacing,
               where + " spacing differs from " + format_rational(spacing));
    }
  }
  return t.finish("2", "P, R, F are interval on sbto(N), N=1..10, spacings 1/N, 1/RB, 2/(N+RB)",
                  "30 of 30 (measure, N) checks interval with the exact spacing");
}

std::vector<ReproLine> rank_based_total_order() {
  Tracker half;
  Tracker other_p;
  Tracker low_p;
  Tracker high_p;
  Tracker others;
  const Rational quarter(1, 4);
  const Rational third(1, 3);
  const Rational three_quarters(3, 4);
  for (int n = 2; n <= 10; ++n) {
    const auto universe = enumerate_universe(rank_spec(n));
    const auto order = rbto(universe);
    const std::string at = " N=" + std::to_string(n);

    const auto r_half = check_interval(evaluate_all(rbp_config(Rational(1, 2)), universe), order);
    const Rational step = Rational(1, 1) / Rational(boost::multiprecision::cpp_int(1) << n);
    half.expect(r_half.verdict == IntervalVerdict::interval && r_half.spacing && r_half.spacing->is_exact() &&
                    r_half.spacing->exact() == step,
                "rbp(1/2)" + at + " is " + std::string(to_string(r_half.verdict)));

    for (const Rational& p : {quarter, third, three_quarters}) {
      const auto v = check_interval(evaluate_all(rbp_config(p), universe), order).verdict;
      const std::string name = "rbp(" + format_rational(p) + ")" + at;
      other_p.expect(v != IntervalVerdict::interval, name + " is interval");
      if (p < Rational(1, 2)) {
        low_p.expect(v == IntervalVerdict::ordinal_not_interval, name + " is " + std::string(to_string(v)));
      } else {
        high_p.expect(v == IntervalVerdict::not_ordinal, name + " is " + std::string(to_string(v)));
      }
    }

    for (auto kind : {MeasureKind::average_precision, MeasureKind::err, MeasureKind::dcg}) {
      const auto v = check_interval(evaluate_all(measure(kind), universe), order, CheckOptions{Comparator(1e-9), 5})
                         .verdict;
      others.expect(v != IntervalVerdict::interval, std::string(to_string(kind)) + at + " is interval");
    }
  }
  return {
      half.finish("3a", "RBP(1/2) is interval on rbto(N), N=2..10, spacing 2^-N", "9 of 9"),
      other_p.finish("3b", "RBP(p) is not interval on rbto(N) for p in {1/4, 1/3, 3/4}", "27 of 27"),
      low_p.finish("3c", "RBP(p) is ordinal-not-interval on rbto(N) for p in {1/4, 1/3}", "18 of 18"),
      high_p.finish("3d", "RBP(3/4) is not-ordinal on rbto(N), N=2..10", "9 of 9"),
      others.finish("3e", "AP, ERR (exact) and DCG (eps 1e-9) are not interval on rbto(N), N=2..10", "27 of 27"),
  };
}

ReproLine order_dependence() {
  Tracker t;
  const auto universe = enumerate_universe(set_spec(2));
  const auto values = evaluate_all(measure(MeasureKind::precision), universe);
  SearchOptions strict;
  strict.order_space = OrderSpace::strict_total;
  const auto cs = census(values, strict);
  SearchOptions weak;
  weak.order_space = OrderSpace::weak;
  const auto cw = census(values, weak);
  t.expect(cs.examined == 6 && cs.ordinal_count() == 1,
           "strict: ordinal on " + std::to_string(cs.ordinal_count()) + " of " + std::to_string(cs.examined));
  t.expect(cw.examined == 13 && cw.interval_count == 1,
           "weak: interval on " + std::to_string(cw.interval_count) + " of " + std::to_string(cw.examined));
  const auto on_sbto = check_interval(values, sbto(universe)).verdict;
  const auto on_counter = check_ordinal(values, paper_counterexample_order()).verdict;
  t.expect(on_sbto == IntervalVerdict::interval && on_counter == OrdinalVerdict::not_ordinal,
           "precision should be interval on sbto and not ordinal on the counterexample order");
  return t.finish("4", "Precision on N=2 set-based: ordinal on 1 of 6 strict orders, interval on 1 of 13 weak orders",
                  "scale type depends on the ordering: interval on sbto, not ordinal on the counterexample");
}

ReproLine difference_structures() {
  Tracker t;
  std::uint64_t checked = 0;
  for (int n = 1; n <= 7; ++n) {
    const auto universe = enumerate_universe(set_spec(n));
    for_each_strict_order(universe.spec(), universe.size(), [&](const WeakOrder& order) {
      ++checked;
      const auto report = check_difference_structure(order);
      if (!report.verdict) t.fail("m=" + std::to_string(universe.size()) + " fails " + report.failed_axiom);
    });
  }
  // Negative control: break sign reversal on the m=3 step-count structure.
  const auto universe = enumerate_universe(set_spec(2));
  const auto order = sbto(universe);
  const auto base = DifferenceRelation::step_count(order);
  BitMatrix broken = base.relation();
  broken.set(base.pair_id(0, 1), base.pair_id(1, 2), false);
  broken.set(base.pair_id(1, 2), base.pair_id(0, 1), false);
  const auto negative = check_difference_axioms(DifferenceRelation(order, broken));
  t.expect(!negative.verdict && !negative.witness.empty(), "injected relation was not rejected");
  return t.finish("5", "Step-count difference structure holds for every strict total order, m <= 8",
                  std::to_string(checked) + " orders pass; injected relation fails " + negative.failed_axiom);
}

ReproLine uniqueness_coherence() {
  Tracker t;
  std::mt19937_64 rng(20240501);
  std::vector<MeasureValues> pool;
  for (int n = 1; n <= 3; ++n) {
    const auto universe = enumerate_universe(rank_spec(n));
    for (auto kind : {MeasureKind::precision, MeasureKind::recall, MeasureKind::f_measure,
                      MeasureKind::average_precision, MeasureKind::dcg, MeasureKind::err}) {
      pool.push_back(evaluate_all(measure(kind), universe));
    }
    for (const Rational& p : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
      pool.push_back(evaluate_all(rbp_config(p), universe));
    }
  }
  for (int n = 1; n <= 7; ++n) {
    const auto universe = enumerate_universe(set_spec(n));
    for (auto kind : {MeasureKind::precision, MeasureKind::recall, MeasureKind::f_measure}) {
      pool.push_back(evaluate_all(measure(kind), universe));
    }
  }
  int intervals = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& base = pool[rng() % pool.size()];
    WeakOrder order = order_from_measure(base);
    const auto choice = rng() % 3;
    if (choice == 0) {
      order = sample_orders(base.spec(), base.size(), OrderSpace::weak, rng(), 1).front();
    }
    MeasureValues f = base;
    if (choice == 2) {
      f = affine_transform(canonical_interval_scale(order), Rational(static_cast<long long>(rng() % 5) + 1, 3),
                           Rational(static_cast<long long>(rng() % 7) - 3, 2));
    }
    const CheckOptions opts{Comparator(1e-9), 5};
    const bool via_check = check_interval(f, order, opts).verdict == IntervalVerdict::interval;
    const auto fit = affine_relate(f, canonical_interval_scale(order), opts.cmp);
    const bool via_affine = fit && opts.cmp.less(Value(0LL), fit->a);
    if (via_check) ++intervals;
    t.expect(via_check == via_affine, "disagreement on " + f.name() + " trial " + std::to_string(trial));
  }
  return t.finish("6", "check_interval agrees with affine_relate to the canonical scale (a > 0)",
                  "1000 of 1000 sampled (measure, weak order) pairs agree; " + std::to_string(intervals) +
                      " interval");
}

ReproLine induced_order_equivalence() {
  Tracker t;
  int compared = 0;
  for (int n = 1; n <= 3; ++n) {
    const auto universe = enumerate_universe(rank_spec(n));
    std::vector<MeasureConfig> configs;
    for (auto kind : {MeasureKind::precision, MeasureKind::recall, MeasureKind::f_measure,
                      MeasureKind::average_precision, MeasureKind::dcg, MeasureKind::err}) {
      configs.push_back(measure(kind));
    }
    for (const Rational& p : {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(3, 4)}) {
      configs.push_back(rbp_config(p));
    }
    SearchOptions weak;
    weak.order_space = OrderSpace::weak;
    weak.max_witnesses = 0;
    weak.cmp = Comparator(1e-9);
    for (const auto& config : configs) {
      const auto values = evaluate_all(config, universe);
      const bool induced =
          interval_on_induced_order(values, CheckOptions{weak.cmp, 5}).verdict == IntervalVerdict::interval;
      const bool exhaustive = census(values, weak).interval_count > 0;
      ++compared;
      t.expect(induced == exhaustive, values.name() + " N=" + std::to_string(n));
    }
  }
  return t.finish("7", "Interval on the induced order iff interval on some weak order (rank-based N <= 3)",
                  std::to_string(compared) + " of " + std::to_string(compared) + " measure configurations agree");
}

}  // namespace

std::vector<ReproLine> run_reproduction() {
  std::vector<ReproLine> lines;
  lines.push_back(counterexample());
  lines.push_back(set_based_total_order());
  for (auto& line : rank_based_total_order()) lines.push_back(std::move(line));
  lines.push_back(order_dependence());
  lines.push_back(difference_structures());
  lines.push_back(uniqueness_coherence());
  lines.push_back(induced_order_equivalence());
  return lines;
}

std::string render_reproduction(const std::vector<ReproLine>& lines) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& line : lines) {
    os << (line.passed ? "PASS " : "FAIL ") << line.id << "  " << line.claim << "\n";
    if (!line.detail.empty()) os << "       " << line.detail << "\n";
    if (line.passed) ++passed;
  }
  os << passed << "/" << lines.size() << " claims reproduced\n";
  os << "note: sbto and rbto are reconstructions (relevant-count order and binary-fraction order)\n";
  return os.str();
}

}  // namespace scalekit
