#pragma once

#include "scalekit/measures.hpp"
#include "scalekit/orderings.hpp"
#include "scalekit/scalecheck.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scalekit {

enum class OrderSpace { strict_total, weak };

std::string_view to_string(OrderSpace space);
OrderSpace parse_order_space(std::string_view text);

inline constexpr std::uint64_t kDefaultMaxOrders = 1'000'000;

/// m!, saturating at UINT64_MAX.
std::uint64_t count_strict_orders(std::size_t m);
/// Fubini (ordered Bell) number of m, saturating at UINT64_MAX.
std::uint64_t count_weak_orders(std::size_t m);

using OrderVisitor = std::function<void(const WeakOrder&)>;

/// Every strict total order on m elements, in lexicographic order of the
/// permutation listing elements from least to greatest. Throws CapExceeded
/// when m! > max_orders.
void for_each_strict_order(const UniverseSpec& spec, std::size_t m, const OrderVisitor& visit,
                           std::uint64_t max_orders = kDefaultMaxOrders);

/// Every ordered set partition of m elements: set partitions in
/// restricted-growth-string order, and for each, the block orders in
/// lexicographic permutation order. Throws CapExceeded when Fubini(m) >
/// max_orders.
void for_each_weak_order(const UniverseSpec& spec, std::size_t m, const OrderVisitor& visit,
                         std::uint64_t max_orders = kDefaultMaxOrders);

std::vector<WeakOrder> enumerate_strict_orders(const Universe& universe,
                                               std::uint64_t max_orders = kDefaultMaxOrders);
std::vector<WeakOrder> enumerate_weak_orders(const Universe& universe,
                                             std::uint64_t max_orders = kDefaultMaxOrders);

/// Seeded pseudo-random orders. Strict: uniform permutations (Fisher-Yates).
/// Weak: a uniform permutation cut into classes at each gap with
/// probability 1/2. Bit-reproducible across platforms for a given seed.
std::vector<WeakOrder> sample_orders(const UniverseSpec& spec, std::size_t m, OrderSpace space,
                                     std::uint64_t seed, std::uint64_t count);

struct SamplingPlan {
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
};

struct SearchOptions {
  OrderSpace order_space = OrderSpace::strict_total;
  /// Unset means exhaustive enumeration.
  std::optional<SamplingPlan> sampling;
  std::size_t max_witnesses = 5;
  std::uint64_t max_orders = kDefaultMaxOrders;
  Comparator cmp;
};

struct SearchSpec {
  std::vector<MeasureConfig> measures;
  SearchOptions options;
};

struct CensusWitness {
  IntervalVerdict verdict;
  WeakOrder order;
};

/// Tally of interval-scale verdicts of one measure over a space of orderings.
struct Census {
  std::string measure;
  OrderSpace order_space = OrderSpace::strict_total;
  std::optional<SamplingPlan> sampling;
  std::uint64_t examined = 0;
  std::uint64_t interval_count = 0;
  std::uint64_t ordinal_not_interval_count = 0;
  std::uint64_t not_ordinal_count = 0;
  /// First few orders of each verdict, in enumeration order.
  std::vector<CensusWitness> witnesses;

  /// Orders on which the measure is ordinal (interval ones included).
  [[nodiscard]] std::uint64_t ordinal_count() const { return interval_count + ordinal_not_interval_count; }
};

Census census(const MeasureValues& values, const SearchOptions& options);
std::vector<Census> census(const Universe& universe, const SearchSpec& spec);

/// check_interval against the measure's own induced order: the best verdict
/// any weak order can give this measure.
IntervalReport interval_on_induced_order(const MeasureValues& values, const CheckOptions& opts = {});

}  // namespace scalekit
