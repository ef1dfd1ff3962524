#pragma once

#include "scalekit/measures.hpp"
#include "scalekit/orderings.hpp"
#include "scalekit/value.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scalekit {

enum class OrdinalVerdict { ordinal, not_ordinal, weakly_represents };
enum class IntervalVerdict { interval, ordinal_not_interval, not_ordinal };

std::string_view to_string(OrdinalVerdict v);
std::string_view to_string(IntervalVerdict v);

/// A pair on which the measure disagrees with the ordering. Oriented so that
/// f(x) <= f(y) unless the kind is "tie-split".
struct PairWitness {
  std::size_t x = 0;
  std::size_t y = 0;
  Value fx;
  Value fy;
  /// "order-reversed": the ordering and the values disagree in direction.
  /// "tie-split":      x and y are tied but f(x) != f(y).
  /// "strict-tied":    one strictly precedes the other but f(x) == f(y).
  std::string kind;
};

/// Two adjacent-class steps whose value gaps differ: f(b)-f(a) != f(d)-f(c).
struct GapWitness {
  std::array<std::size_t, 4> elements{};
  std::array<Value, 4> values;
  std::size_t step = 0;  // class index of elements[1]
};

struct Affine {
  Value a;
  Value b;
};

struct OrdinalReport {
  OrdinalVerdict verdict = OrdinalVerdict::ordinal;
  OrderKind order_kind = OrderKind::weak;
  std::vector<PairWitness> witnesses;
  /// Unordered incomparable pairs; always 0 for weak orders.
  std::size_t incomparable_pairs = 0;
};

struct IntervalReport {
  IntervalVerdict verdict = IntervalVerdict::interval;
  OrderKind order_kind = OrderKind::weak;
  /// Constant gap between consecutive classes; unset for single-class orders
  /// and for non-interval verdicts.
  std::optional<Value> spacing;
  /// f = a * class_index + b; set only for the interval verdict.
  std::optional<Affine> affine;
  std::vector<PairWitness> ordinal_witnesses;
  std::vector<GapWitness> gap_witnesses;
};

struct CheckOptions {
  Comparator cmp;
  std::size_t max_witnesses = 5;
};

/// Full biconditional x <= y iff f(x) <= f(y) over all pairs.
OrdinalReport check_ordinal(const MeasureValues& values, const WeakOrder& order, const CheckOptions& opts = {});

/// Weak representation: x <= y implies f(x) <= f(y) and x < y implies
/// f(x) < f(y). Reports weakly_represents when that holds but some pair is
/// incomparable.
OrdinalReport check_ordinal(const MeasureValues& values, const PartialOrder& order, const CheckOptions& opts = {});
OrdinalReport check_ordinal(const MeasureValues& values, const Ordering& order, const CheckOptions& opts = {});

/// element -> 0-based index of its tie-class.
MeasureValues canonical_interval_scale(const WeakOrder& order);
/// Throws OrderingError for partial orders.
MeasureValues canonical_interval_scale(const Ordering& order);

/// (a, b) with f = a*g + b on every element, if one exists. `a` may have any
/// sign. When g is constant and f is too, returns a = 1.
std::optional<Affine> affine_relate(const MeasureValues& f, const MeasureValues& g,
                                    const Comparator& cmp = Comparator());

/// Interval iff ordinal and the class values are equispaced.
IntervalReport check_interval(const MeasureValues& values, const WeakOrder& order, const CheckOptions& opts = {});
/// Throws OrderingError for partial orders.
IntervalReport check_interval(const MeasureValues& values, const Ordering& order, const CheckOptions& opts = {});

/// Dense rank of each value (0 = smallest); values equal under `cmp` share a rank.
std::vector<std::uint32_t> dense_ranks(const MeasureValues& values, const Comparator& cmp);

// Difference structures ------------------------------------------------------

/// A relation on ordered pairs of elements: holds(x, y, z, w) means the
/// interval from x to y is no larger than the interval from z to w.
class DifferenceRelation {
 public:
  /// Step-count structure: idx(y) - idx(x) <= idx(w) - idx(z) over class indices.
  static DifferenceRelation step_count(const WeakOrder& order);

  /// Arbitrary relation, e.g. a deliberately broken one for negative tests.
  /// `relation` is indexed by pair id x * m + y.
  DifferenceRelation(WeakOrder order, BitMatrix relation);

  [[nodiscard]] const WeakOrder& order() const noexcept { return order_; }
  [[nodiscard]] const BitMatrix& relation() const noexcept { return relation_; }
  [[nodiscard]] std::size_t element_count() const noexcept { return order_.universe_size(); }
  [[nodiscard]] std::size_t pair_id(std::size_t x, std::size_t y) const { return x * element_count() + y; }
  [[nodiscard]] bool holds(std::size_t x, std::size_t y, std::size_t z, std::size_t w) const {
    return relation_.test(pair_id(x, y), pair_id(z, w));
  }

 private:
  WeakOrder order_;
  BitMatrix relation_;
};

struct DiffStructureReport {
  bool verdict = true;
  /// Name of the first failing axiom, empty when verdict is true.
  std::string failed_axiom;
  /// Element indices of the witness, in the order the axiom names them.
  std::vector<std::size_t> witness;
  std::vector<std::string> axioms_checked;
  std::string note;
};

inline constexpr std::size_t kDefaultDiffStructureCap = 64;

/// Axioms checked, in order: weak-order (completeness, transitivity),
/// order-consistency, sign-reversal, weak-monotonicity, solvability,
/// equal-spacing. The Archimedean axiom holds vacuously on finite sets.
DiffStructureReport check_difference_axioms(const DifferenceRelation& relation);

/// Builds the step-count structure for `order` and checks it. Throws
/// CapExceeded when the universe is larger than `max_elements`.
DiffStructureReport check_difference_structure(const WeakOrder& order,
                                               std::size_t max_elements = kDefaultDiffStructureCap);

}  // namespace scalekit
