#include "scalekit/scalecheck.hpp"

#include "scalekit/error.hpp"

#include <algorithm>
#include <numeric>

namespace scalekit {

namespace {

void require_same_universe(const MeasureValues& values, const UniverseSpec& spec, std::size_t size) {
  if (!same_carrier(values.spec(), spec) || values.size() != size) {
    throw UniverseMismatch("measure '" + values.name() + "' has " + std::to_string(values.size()) +
                           " values but the ordering covers " + std::to_string(size) + " elements");
  }
}

PairWitness make_witness(const MeasureValues& values, std::size_t i, std::size_t j,
                         const std::vector<std::uint32_t>& rank, std::string kind) {
  // Orient so that f(x) <= f(y); tie-splits keep index order.
  if (kind != "tie-split" && rank[i] > rank[j]) std::swap(i, j);
  return PairWitness{i, j, values[i], values[j], std::move(kind)};
}

}  // namespace

std::string_view to_string(OrdinalVerdict v) {
  switch (v) {
    case OrdinalVerdict::ordinal: return "ordinal";
    case OrdinalVerdict::not_ordinal: return "not-ordinal";
    case OrdinalVerdict::weakly_represents: return "weakly-represents";
  }
  return "unknown";
}

std::string_view to_string(IntervalVerdict v) {
  switch (v) {
    case IntervalVerdict::interval: return "interval";
    case IntervalVerdict::ordinal_not_interval: return "ordinal-not-interval";
    case IntervalVerdict::not_ordinal: return "not-ordinal";
  }
  return "unknown";
}

std::vector<std::uint32_t> dense_ranks(const MeasureValues& values, const Comparator& cmp) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return cmp.less(values[a], values[b]); });
  std::vector<std::uint32_t> rank(values.size(), 0);
  std::uint32_t current = 0;
  for (std::size_t k = 1; k < idx.size(); ++k) {
    if (!cmp.equal(values[idx[k - 1]], values[idx[k]])) ++current;
    rank[idx[k]] = current;
  }
  return rank;
}

OrdinalReport check_ordinal(const MeasureValues& values, const WeakOrder& order, const CheckOptions& opts) {
  require_same_universe(values, order.spec(), order.universe_size());
  OrdinalReport report;
  report.order_kind = order.kind();
  const auto rank = dense_ranks(values, opts.cmp);
  const std::size_t m = order.universe_size();
  bool violated = false;
  const auto saturated = [&] { return violated && report.witnesses.size() >= opts.max_witnesses; };
  for (std::size_t i = 0; i < m && !saturated(); ++i) {
    for (std::size_t j = i + 1; j < m && !saturated(); ++j) {
      const auto ci = order.class_of(i);
      const auto cj = order.class_of(j);
      const auto ri = rank[i];
      const auto rj = rank[j];
      // Both directions of the biconditional: same class iff same rank, and
      // otherwise the same direction.
      const bool ok = (ci == cj) ? (ri == rj) : (ri != rj && ((ci < cj) == (ri < rj)));
      if (ok) continue;
      violated = true;
      if (report.witnesses.size() >= opts.max_witnesses) break;
      std::string kind = ci == cj ? "tie-split" : (ri == rj ? "strict-tied" : "order-reversed");
      report.witnesses.push_back(make_witness(values, i, j, rank, std::move(kind)));
    }
  }
  report.verdict = violated ? OrdinalVerdict::not_ordinal : OrdinalVerdict::ordinal;
  return report;
}

OrdinalReport check_ordinal(const MeasureValues& values, const PartialOrder& order, const CheckOptions& opts) {
  require_same_universe(values, order.spec(), order.universe_size());
  OrdinalReport report;
  report.order_kind = OrderKind::partial;
  const auto rank = dense_ranks(values, opts.cmp);
  const std::size_t m = order.universe_size();
  bool violated = false;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool ij = order.leq(i, j);
      const bool ji = order.leq(j, i);
      if (!ij && !ji) {
        ++report.incomparable_pairs;
        continue;
      }
      const auto ri = rank[i];
      const auto rj = rank[j];
      std::string kind;
      if (ij && ji) {
        if (ri != rj) kind = "tie-split";
      } else if (ij) {
        if (ri >= rj) kind = ri == rj ? "strict-tied" : "order-reversed";
      } else {
        if (rj >= ri) kind = ri == rj ? "strict-tied" : "order-reversed";
      }
      if (kind.empty()) continue;
      violated = true;
      if (report.witnesses.size() < opts.max_witnesses) {
        report.witnesses.push_back(make_witness(values, i, j, rank, std::move(kind)));
      }
    }
  }
  if (violated) {
    report.verdict = OrdinalVerdict::not_ordinal;
  } else {
    report.verdict = report.incomparable_pairs > 0 ? OrdinalVerdict::weakly_represents : OrdinalVerdict::ordinal;
  }
  return report;
}

OrdinalReport check_ordinal(const MeasureValues& values, const Ordering& order, const CheckOptions& opts) {
  return std::visit([&](const auto& o) { return check_ordinal(values, o, opts); }, order);
}

MeasureValues canonical_interval_scale(const WeakOrder& order) {
  std::vector<Value> values;
  values.reserve(order.universe_size());
  for (auto c : order.class_indices()) values.emplace_back(static_cast<long long>(c));
  return MeasureValues("canonical(" + (order.name().empty() ? std::string("order") : order.name()) + ")",
                       order.spec(), std::move(values));
}

MeasureValues canonical_interval_scale(const Ordering& order) {
  if (const auto* weak = std::get_if<WeakOrder>(&order)) return canonical_interval_scale(*weak);
  throw OrderingError("no canonical interval scale is constructed for a partial order");
}

std::optional<Affine> affine_relate(const MeasureValues& f, const MeasureValues& g, const Comparator& cmp) {
  if (!same_carrier(f.spec(), g.spec()) || f.size() != g.size()) {
    throw UniverseMismatch("affine_relate needs two mappings over the same universe");
  }
  if (f.size() == 0) return Affine{Value(1LL), Value(0LL)};
  std::size_t pivot = f.size();
  for (std::size_t k = 1; k < g.size(); ++k) {
    if (!cmp.equal(g[k], g[0])) {
      pivot = k;
      break;
    }
  }
  Affine fit;
  if (pivot == f.size()) {
    fit = Affine{Value(1LL), f[0] - g[0]};
  } else {
    const Value a = (f[pivot] - f[0]) / (g[pivot] - g[0]);
    fit = Affine{a, f[0] - a * g[0]};
  }
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (!cmp.equal(f[k], fit.a * g[k] + fit.b)) return std::nullopt;
  }
  return fit;
}

IntervalReport check_interval(const MeasureValues& values, const WeakOrder& order, const CheckOptions& opts) {
  IntervalReport report;
  report.order_kind = order.kind();
  auto ordinal = check_ordinal(values, order, opts);
  if (ordinal.verdict != OrdinalVerdict::ordinal) {
    report.verdict = IntervalVerdict::not_ordinal;
    report.ordinal_witnesses = std::move(ordinal.witnesses);
    return report;
  }

  // Ordinality makes each class constant, so one representative per class suffices.
  std::vector<std::size_t> rep(order.class_count(), order.universe_size());
  for (std::size_t e = 0; e < order.universe_size(); ++e) {
    auto& r = rep[order.class_of(e)];
    if (r == order.universe_size()) r = e;
  }
  if (rep.size() <= 1) {
    report.verdict = IntervalVerdict::interval;
    if (!rep.empty()) report.affine = Affine{Value(1LL), values[rep[0]]};
    return report;
  }

  const Value spacing = values[rep[1]] - values[rep[0]];
  bool equispaced = true;
  for (std::size_t k = 2; k < rep.size(); ++k) {
    const Value gap = values[rep[k]] - values[rep[k - 1]];
    if (opts.cmp.equal(gap, spacing)) continue;
    equispaced = false;
    if (report.gap_witnesses.size() < opts.max_witnesses) {
      GapWitness w;
      w.elements = {rep[0], rep[1], rep[k - 1], rep[k]};
      w.values = {values[rep[0]], values[rep[1]], values[rep[k - 1]], values[rep[k]]};
      w.step = k;
      report.gap_witnesses.push_back(std::move(w));
    }
  }
  if (!equispaced) {
    report.verdict = IntervalVerdict::ordinal_not_interval;
    return report;
  }
  report.verdict = IntervalVerdict::interval;
  report.spacing = spacing;
  report.affine = Affine{spacing, values[rep[0]]};
  return report;
}

IntervalReport check_interval(const MeasureValues& values, const Ordering& order, const CheckOptions& opts) {
  if (const auto* weak = std::get_if<WeakOrder>(&order)) return check_interval(values, *weak, opts);
  throw OrderingError(
      "interval check needs a total order with ties; for partial orders run the ordinal check only");
}

// Difference structures ------------------------------------------------------

DifferenceRelation::DifferenceRelation(WeakOrder order, BitMatrix relation)
    : order_(std::move(order)), relation_(std::move(relation)) {
  const std::size_t m = order_.universe_size();
  if (relation_.size() != m * m) {
    throw InvalidSpec("difference relation must be indexed by the " + std::to_string(m * m) + " element pairs");
  }
}

DifferenceRelation DifferenceRelation::step_count(const WeakOrder& order) {
  const std::size_t m = order.universe_size();
  const std::size_t pairs = m * m;
  const auto k = static_cast<long>(order.class_count());
  auto diff = [&](std::size_t x, std::size_t y) {
    return static_cast<long>(order.class_of(y)) - static_cast<long>(order.class_of(x));
  };
  // at_least[d + k - 1]: every pair whose step difference is >= d.
  std::vector<std::vector<std::uint64_t>> masks(static_cast<std::size_t>(2 * std::max(k, 1L) - 1),
                                                std::vector<std::uint64_t>((pairs + 63) / 64, 0));
  for (std::size_t z = 0; z < m; ++z) {
    for (std::size_t w = 0; w < m; ++w) {
      const long d = diff(z, w);
      const std::size_t q = z * m + w;
      for (long lo = -(k - 1); lo <= d; ++lo) {
        masks[static_cast<std::size_t>(lo + k - 1)][q / 64] |= std::uint64_t{1} << (q % 64);
      }
    }
  }
  BitMatrix relation(pairs);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const auto& mask = masks[static_cast<std::size_t>(diff(x, y) + k - 1)];
      std::copy(mask.begin(), mask.end(), relation.row(x * m + y));
    }
  }
  return DifferenceRelation(order, std::move(relation));
}

namespace {

DiffStructureReport fail(DiffStructureReport report, std::string axiom, std::vector<std::size_t> witness) {
  report.verdict = false;
  report.failed_axiom = std::move(axiom);
  report.witness = std::move(witness);
  return report;
}

}  // namespace

DiffStructureReport check_difference_axioms(const DifferenceRelation& rel) {
  DiffStructureReport report;
  report.note = "archimedean: vacuous on a finite set (every strictly bounded standard sequence is finite)";
  const std::size_t m = rel.element_count();
  const std::size_t pairs = m * m;
  const BitMatrix& r = rel.relation();
  const BitMatrix rt = r.transposed();
  const WeakOrder& order = rel.order();
  const auto split = [m](std::size_t p) { return std::pair{p / m, p % m}; };

  // Completeness: every two pairs are comparable.
  report.axioms_checked.emplace_back("completeness");
  for (std::size_t p = 0; p < pairs; ++p) {
    const std::uint64_t* a = r.row(p);
    const std::uint64_t* b = rt.row(p);
    for (std::size_t w = 0; w < r.words_per_row(); ++w) {
      const std::size_t base = w * 64;
      const std::size_t len = std::min<std::size_t>(64, pairs - base);
      const std::uint64_t full = len == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
      const std::uint64_t missing = ~(a[w] | b[w]) & full;
      if (missing != 0) {
        const std::size_t q = base + static_cast<std::size_t>(__builtin_ctzll(missing));
        auto [x, y] = split(p);
        auto [z, t] = split(q);
        return fail(std::move(report), "completeness", {x, y, z, t});
      }
    }
  }

  // Transitivity: p <= q implies row(q) is a subset of row(p).
  report.axioms_checked.emplace_back("transitivity");
  for (std::size_t p = 0; p < pairs; ++p) {
    const std::uint64_t* row = r.row(p);
    for (std::size_t w = 0; w < r.words_per_row(); ++w) {
      for (std::uint64_t bits = row[w]; bits != 0; bits &= bits - 1) {
        const std::size_t q = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        if (r.row_subset(q, p)) continue;
        for (std::size_t s = 0; s < pairs; ++s) {
          if (r.test(q, s) && !r.test(p, s)) {
            auto [x, y] = split(p);
            auto [z, t] = split(q);
            auto [u, v] = split(s);
            return fail(std::move(report), "transitivity", {x, y, z, t, u, v});
          }
        }
      }
    }
  }

  // (x,x) <= (x,y) exactly when x precedes or ties y.
  report.axioms_checked.emplace_back("order-consistency");
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (rel.holds(x, x, x, y) != order.leq(x, y)) {
        return fail(std::move(report), "order-consistency", {x, x, x, y});
      }
    }
  }

  // (x,y) <= (z,w) implies (w,z) <= (y,x).
  report.axioms_checked.emplace_back("sign-reversal");
  for (std::size_t p = 0; p < pairs; ++p) {
    const auto [x, y] = split(p);
    const std::size_t yx = rel.pair_id(y, x);
    const std::uint64_t* row = r.row(p);
    for (std::size_t w = 0; w < r.words_per_row(); ++w) {
      for (std::uint64_t bits = row[w]; bits != 0; bits &= bits - 1) {
        const std::size_t q = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        const auto [z, t] = split(q);
        if (!r.test(rel.pair_id(t, z), yx)) return fail(std::move(report), "sign-reversal", {x, y, z, t});
      }
    }
  }

  // (a,b) <= (a',b') and (b,c) <= (b',c') imply (a,c) <= (a',c').
  // block(x, x2) packs r((x,c),(x2,c')) at bit c*m + c', so the axiom reads:
  // (a,b) <= (a',b') implies block(b, b') is a subset of block(a, a').
  report.axioms_checked.emplace_back("weak-monotonicity");
  {
    const std::size_t words = (m * m + 63) / 64;
    std::vector<std::uint64_t> block(m * m * words, 0);
    const auto block_of = [&](std::size_t x, std::size_t x2) { return block.data() + (x * m + x2) * words; };
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t x2 = 0; x2 < m; ++x2) {
        std::uint64_t* out = block_of(x, x2);
        for (std::size_t c = 0; c < m; ++c) {
          const std::uint64_t seg = r.segment(rel.pair_id(x, c), x2 * m, m);
          const std::size_t offset = c * m;
          const std::size_t shift = offset % 64;
          out[offset / 64] |= seg << shift;
          if (shift != 0 && shift + m > 64) out[offset / 64 + 1] |= seg >> (64 - shift);
        }
      }
    }
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t a2 = 0; a2 < m; ++a2) {
          const std::uint64_t* conclusion = block_of(a, a2);
          for (std::uint64_t b2s = r.segment(rel.pair_id(a, b), a2 * m, m); b2s != 0; b2s &= b2s - 1) {
            const auto b2 = static_cast<std::size_t>(__builtin_ctzll(b2s));
            const std::uint64_t* premise = block_of(b, b2);
            for (std::size_t w = 0; w < words; ++w) {
              const std::uint64_t bad = premise[w] & ~conclusion[w];
              if (bad == 0) continue;
              const std::size_t bit = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bad));
              return fail(std::move(report), "weak-monotonicity", {a, b, bit / m, a2, b2, bit % m});
            }
          }
        }
      }
    }
  }

  // Finite solvability: (a,a) <= (c,d) <= (a,b) implies some d1 with
  // (a,d1) ~ (c,d) and some d2 with (d2,b) ~ (c,d).
  report.axioms_checked.emplace_back("solvability");
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t d = 0; d < m; ++d) {
      const std::size_t cd = rel.pair_id(c, d);
      // eq_from[x]: bit y set when (x,y) ~ (c,d). ends: b with some (x,b) ~ (c,d).
      std::uint64_t ends = 0;
      std::vector<std::uint64_t> eq_from(m);
      for (std::size_t x = 0; x < m; ++x) {
        eq_from[x] = r.segment(cd, x * m, m) & rt.segment(cd, x * m, m);
        ends |= eq_from[x];
      }
      for (std::size_t a = 0; a < m; ++a) {
        if (!rt.test(cd, rel.pair_id(a, a))) continue;
        const std::uint64_t above = r.segment(cd, a * m, m);
        const std::uint64_t bad = eq_from[a] == 0 ? above : above & ~ends;
        if (bad != 0) {
          const auto b = static_cast<std::size_t>(__builtin_ctzll(bad));
          return fail(std::move(report), "solvability", {a, b, c, d});
        }
      }
    }
  }

  // Adjacent-class steps are all equivalent, and tied pairs are null intervals.
  report.axioms_checked.emplace_back("equal-spacing");
  {
    const auto classes = order.classes();
    for (const auto& cls : classes) {
      for (std::size_t x : cls) {
        for (std::size_t y : cls) {
          if (!(rel.holds(x, y, x, x) && rel.holds(x, x, x, y))) {
            return fail(std::move(report), "equal-spacing", {x, y, x, x});
          }
        }
      }
    }
    if (classes.size() >= 2) {
      const std::size_t u = classes[0].front();
      const std::size_t v = classes[1].front();
      for (std::size_t k = 1; k < classes.size(); ++k) {
        for (std::size_t x : classes[k - 1]) {
          for (std::size_t y : classes[k]) {
            if (!(rel.holds(x, y, u, v) && rel.holds(u, v, x, y))) {
              return fail(std::move(report), "equal-spacing", {x, y, u, v});
            }
          }
        }
      }
    }
  }
  return report;
}

DiffStructureReport check_difference_structure(const WeakOrder& order, std::size_t max_elements) {
  if (order.universe_size() > max_elements) {
    throw CapExceeded("difference-structure check is capped at " + std::to_string(max_elements) +
                      " elements (universe has " + std::to_string(order.universe_size()) + ")");
  }
  return check_difference_axioms(DifferenceRelation::step_count(order));
}

}  // namespace scalekit
