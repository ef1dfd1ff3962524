#pragma once

#include "scalekit/bit_matrix.hpp"
#include "scalekit/measures.hpp"
#include "scalekit/universe.hpp"
#include "scalekit/value.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace scalekit {

enum class OrderKind { strict_total, weak, partial };

std::string_view to_string(OrderKind kind);

/// A total order with ties: an ordered partition of the universe into
/// tie-classes. Earlier classes precede later ones.
///
/// Stored as a class index per element, which makes membership and
/// comparison O(1) and keeps enumerated orders cheap to build.
class WeakOrder {
 public:
  /// Builds from per-element class indices. The indices must cover
  /// 0..k-1 with every class nonempty; throws OrderingError otherwise.
  WeakOrder(UniverseSpec spec, std::vector<std::uint32_t> class_index);

  /// Builds from explicit classes of element indices. Throws OrderingError
  /// unless the classes partition 0..universe_size-1.
  static WeakOrder from_classes(UniverseSpec spec, std::size_t universe_size,
                                const std::vector<std::vector<std::size_t>>& classes);

  [[nodiscard]] const UniverseSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] std::size_t universe_size() const noexcept { return class_index_.size(); }
  [[nodiscard]] std::size_t class_count() const noexcept { return class_count_; }
  [[nodiscard]] std::uint32_t class_of(std::size_t element) const { return class_index_.at(element); }
  [[nodiscard]] std::span<const std::uint32_t> class_indices() const noexcept { return class_index_; }
  /// Classes in ascending order, members in ascending element index.
  [[nodiscard]] std::vector<std::vector<std::size_t>> classes() const;

  [[nodiscard]] bool leq(std::size_t x, std::size_t y) const { return class_index_[x] <= class_index_[y]; }
  [[nodiscard]] bool less(std::size_t x, std::size_t y) const { return class_index_[x] < class_index_[y]; }
  [[nodiscard]] bool tied(std::size_t x, std::size_t y) const { return class_index_[x] == class_index_[y]; }

  [[nodiscard]] OrderKind kind() const noexcept {
    return class_count_ == class_index_.size() ? OrderKind::strict_total : OrderKind::weak;
  }

  /// Display name used in reports, e.g. "sbto".
  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  /// Free-form provenance note carried into reports.
  [[nodiscard]] const std::string& note() const noexcept { return note_; }
  WeakOrder& set_name(std::string name, std::string note = {});

  friend bool operator==(const WeakOrder& a, const WeakOrder& b) {
    return same_carrier(a.spec_, b.spec_) && a.class_index_ == b.class_index_;
  }

 private:
  UniverseSpec spec_;
  std::vector<std::uint32_t> class_index_;
  std::size_t class_count_ = 0;
  std::string name_;
  std::string note_;
};

/// A preorder whose strict part is acyclic, stored reflexively and
/// transitively closed. Tied elements (x <= y and y <= x) were declared
/// with '='.
class PartialOrder {
 public:
  /// Closes the declared relations and rejects cycles through any strict pair.
  static PartialOrder from_relations(UniverseSpec spec, std::size_t universe_size,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& strict,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& ties);

  [[nodiscard]] const UniverseSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] std::size_t universe_size() const noexcept { return leq_.size(); }
  [[nodiscard]] bool leq(std::size_t x, std::size_t y) const { return leq_.test(x, y); }
  [[nodiscard]] bool less(std::size_t x, std::size_t y) const { return leq(x, y) && !leq(y, x); }
  [[nodiscard]] bool tied(std::size_t x, std::size_t y) const { return leq(x, y) && leq(y, x); }
  [[nodiscard]] bool comparable(std::size_t x, std::size_t y) const { return leq(x, y) || leq(y, x); }
  /// True when no pair is incomparable.
  [[nodiscard]] bool is_total() const;
  [[nodiscard]] const BitMatrix& relation() const noexcept { return leq_; }
  [[nodiscard]] static constexpr OrderKind kind() noexcept { return OrderKind::partial; }

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  PartialOrder& set_name(std::string name) {
    name_ = std::move(name);
    return *this;
  }

  friend bool operator==(const PartialOrder& a, const PartialOrder& b) {
    return same_carrier(a.spec_, b.spec_) && a.leq_ == b.leq_;
  }

 private:
  PartialOrder(UniverseSpec spec, BitMatrix leq) : spec_(std::move(spec)), leq_(std::move(leq)) {}

  UniverseSpec spec_;
  BitMatrix leq_;
  std::string name_;
};

using Ordering = std::variant<WeakOrder, PartialOrder>;

/// Groups elements by equal value (exact, or within the comparator's eps for
/// real-valued measures) and orders the groups ascending.
WeakOrder order_from_measure(const MeasureValues& values, const Comparator& cmp = Comparator());

/// Set-based total order by ascending relevant count (reconstruction).
WeakOrder sbto(const Universe& universe);

/// Rank-based strict total order by the binary fraction sum_i r_i 2^-i
/// (reconstruction).
WeakOrder rbto(const Universe& universe);

/// {0,1} < {0,0} < {1,1} on the N=2 binary set-based universe.
WeakOrder paper_counterexample_order();

/// Parses the ordering text format. Weak orders: one tie-class per line in
/// ascending order, comma-separated elements. Partial orders: a `partial`
/// header then `A < B` or `A = B` per line. Blank lines and `#` comments are
/// skipped.
Ordering parse_ordering(std::string_view text, const Universe& universe);

/// Inverse of parse_ordering.
std::string render(const WeakOrder& order, const Universe& universe);
std::string render(const PartialOrder& order, const Universe& universe);
std::string render(const Ordering& order, const Universe& universe);

/// Lists every structural violation; empty means valid.
std::vector<std::string> validate(const WeakOrder& order, const Universe& universe);
std::vector<std::string> validate(const PartialOrder& order, const Universe& universe);
std::vector<std::string> validate(const Ordering& order, const Universe& universe);

}  // namespace scalekit
