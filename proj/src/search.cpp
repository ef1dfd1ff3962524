#include "scalekit/search.hpp"

#include "scalekit/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

namespace scalekit {

namespace {

constexpr auto kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return b > kSaturated - a ? kSaturated : a + b;
}

/// Unbiased draw in [0, bound) by rejection; std::uniform_int_distribution
/// is implementation-defined and would break cross-platform reproducibility.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = kSaturated - kSaturated % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

WeakOrder from_permutation(const UniverseSpec& spec, const std::vector<std::size_t>& perm) {
  std::vector<std::uint32_t> class_index(perm.size());
  for (std::size_t pos = 0; pos < perm.size(); ++pos) class_index[perm[pos]] = static_cast<std::uint32_t>(pos);
  return WeakOrder(spec, std::move(class_index));
}

}  // namespace

std::string_view to_string(OrderSpace space) {
  return space == OrderSpace::strict_total ? "strict-total" : "weak";
}

OrderSpace parse_order_space(std::string_view text) {
  if (text == "strict" || text == "strict-total") return OrderSpace::strict_total;
  if (text == "weak") return OrderSpace::weak;
  throw InvalidSpec("unknown order space '" + std::string(text) + "' (expected strict or weak)");
}

std::uint64_t count_strict_orders(std::size_t m) {
  std::uint64_t out = 1;
  for (std::size_t k = 2; k <= m; ++k) out = saturating_mul(out, k);
  return out;
}

std::uint64_t count_weak_orders(std::size_t m) {
  // a(n) = sum_{k=1..n} C(n,k) a(n-k), a(0) = 1.
  std::vector<std::uint64_t> a(m + 1, 0);
  std::vector<std::uint64_t> pascal{1};
  a[0] = 1;
  for (std::size_t n = 1; n <= m; ++n) {
    std::vector<std::uint64_t> next(n + 1, 1);
    for (std::size_t k = 1; k < n; ++k) next[k] = saturating_add(pascal[k - 1], pascal[k]);
    pascal = std::move(next);
    std::uint64_t sum = 0;
    for (std::size_t k = 1; k <= n; ++k) sum = saturating_add(sum, saturating_mul(pascal[k], a[n - k]));
    a[n] = sum;
  }
  return a[m];
}

void for_each_strict_order(const UniverseSpec& spec, std::size_t m, const OrderVisitor& visit,
                           std::uint64_t max_orders) {
  const auto total = count_strict_orders(m);
  if (total > max_orders) {
    throw CapExceeded(std::to_string(m) + "! strict orders exceed the cap of " + std::to_string(max_orders));
  }
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    visit(from_permutation(spec, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

void for_each_weak_order(const UniverseSpec& spec, std::size_t m, const OrderVisitor& visit,
                         std::uint64_t max_orders) {
  const auto total = count_weak_orders(m);
  if (total > max_orders) {
    throw CapExceeded("Fubini(" + std::to_string(m) + ") = " + std::to_string(total) +
                      " weak orders exceed the cap of " + std::to_string(max_orders));
  }
  if (m == 0) {
    visit(WeakOrder(spec, {}));
    return;
  }
  // Restricted growth string: block[0] = 0, block[i] <= 1 + max(block[0..i-1]).
  std::vector<std::size_t> block(m, 0);
  std::vector<std::size_t> prefix_max(m, 0);
  std::vector<std::uint32_t> class_index(m);
  while (true) {
    const std::size_t k = prefix_max[m - 1] + 1;
    std::vector<std::uint32_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0U);
    do {
      for (std::size_t e = 0; e < m; ++e) class_index[e] = perm[block[e]];
      visit(WeakOrder(spec, class_index));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::size_t i = m - 1;
    while (i > 0 && block[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++block[i];
    prefix_max[i] = std::max(prefix_max[i - 1], block[i]);
    for (std::size_t j = i + 1; j < m; ++j) {
      block[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::vector<WeakOrder> enumerate_strict_orders(const Universe& universe, std::uint64_t max_orders) {
  std::vector<WeakOrder> out;
  for_each_strict_order(universe.spec(), universe.size(), [&](const WeakOrder& o) { out.push_back(o); },
                        max_orders);
  return out;
}

std::vector<WeakOrder> enumerate_weak_orders(const Universe& universe, std::uint64_t max_orders) {
  std::vector<WeakOrder> out;
  for_each_weak_order(universe.spec(), universe.size(), [&](const WeakOrder& o) { out.push_back(o); },
                      max_orders);
  return out;
}

std::vector<WeakOrder> sample_orders(const UniverseSpec& spec, std::size_t m, OrderSpace space,
                                     std::uint64_t seed, std::uint64_t count) {
  std::mt19937_64 rng(seed);
  std::vector<WeakOrder> out;
  out.reserve(count);
  std::vector<std::size_t> perm(m);
  for (std::uint64_t s = 0; s < count; ++s) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = m; i > 1; --i) {
      std::swap(perm[i - 1], perm[bounded(rng, i)]);
    }
    if (space == OrderSpace::strict_total) {
      out.push_back(from_permutation(spec, perm));
      continue;
    }
    std::vector<std::uint32_t> class_index(m, 0);
    std::uint32_t cls = 0;
    for (std::size_t pos = 0; pos < m; ++pos) {
      if (pos > 0 && (rng() >> 63) != 0) ++cls;
      class_index[perm[pos]] = cls;
    }
    out.emplace_back(spec, std::move(class_index));
  }
  return out;
}

Census census(const MeasureValues& values, const SearchOptions& options) {
  Census result;
  result.measure = values.name();
  result.order_space = options.order_space;
  result.sampling = options.sampling;
  const std::size_t m = values.size();
  const auto rank = dense_ranks(values, options.cmp);
  const CheckOptions check_opts{options.cmp, options.max_witnesses};
  std::size_t witnessed[3] = {0, 0, 0};
  std::vector<std::int64_t> class_rank;

  const auto tally = [&](const WeakOrder& order) {
    ++result.examined;
    // Ordinal iff every class maps to one rank and ranks rise strictly with
    // the class index.
    class_rank.assign(order.class_count(), -1);
    bool ordinal = true;
    for (std::size_t e = 0; e < m && ordinal; ++e) {
      auto& slot = class_rank[order.class_of(e)];
      if (slot < 0) {
        slot = rank[e];
      } else if (slot != rank[e]) {
        ordinal = false;
      }
    }
    for (std::size_t c = 1; c < class_rank.size() && ordinal; ++c) ordinal = class_rank[c - 1] < class_rank[c];

    IntervalVerdict verdict = IntervalVerdict::not_ordinal;
    if (ordinal) verdict = check_interval(values, order, check_opts).verdict;
    switch (verdict) {
      case IntervalVerdict::interval: ++result.interval_count; break;
      case IntervalVerdict::ordinal_not_interval: ++result.ordinal_not_interval_count; break;
      case IntervalVerdict::not_ordinal: ++result.not_ordinal_count; break;
    }
    auto& seen = witnessed[static_cast<std::size_t>(verdict)];
    if (seen < options.max_witnesses) {
      ++seen;
      result.witnesses.push_back(CensusWitness{verdict, order});
    }
  };

  if (options.sampling) {
    for (const auto& order : sample_orders(values.spec(), m, options.order_space, options.sampling->seed,
                                           options.sampling->count)) {
      tally(order);
    }
  } else if (options.order_space == OrderSpace::strict_total) {
    for_each_strict_order(values.spec(), m, tally, options.max_orders);
  } else {
    for_each_weak_order(values.spec(), m, tally, options.max_orders);
  }
  // Group witnesses by verdict, keeping enumeration order within each group.
  std::stable_sort(result.witnesses.begin(), result.witnesses.end(),
                   [](const CensusWitness& a, const CensusWitness& b) { return a.verdict < b.verdict; });
  return result;
}

std::vector<Census> census(const Universe& universe, const SearchSpec& spec) {
  std::vector<Census> out;
  out.reserve(spec.measures.size());
  for (const auto& config : spec.measures) {
    out.push_back(census(evaluate_all(config, universe), spec.options));
  }
  return out;
}

IntervalReport interval_on_induced_order(const MeasureValues& values, const CheckOptions& opts) {
  return check_interval(values, order_from_measure(values, opts.cmp), opts);
}

}  // namespace scalekit
