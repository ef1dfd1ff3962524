#pragma once

#include "scalekit/universe.hpp"
#include "scalekit/value.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scalekit {

enum class MeasureKind { precision, recall, f_measure, average_precision, dcg, err, rbp };
enum class Gain { linear, exponential };

std::string_view to_string(MeasureKind kind);
MeasureKind parse_measure_kind(std::string_view text);
std::string_view to_string(Gain gain);
Gain parse_gain(std::string_view text);

struct MeasureConfig {
  MeasureKind kind = MeasureKind::precision;
  /// RBP persistence, in (0, 1).
  Rational p{1, 2};
  /// F-measure weight, > 0.
  Rational beta{1};
  /// DCG logarithm base, >= 2.
  int discount_base = 2;
  Gain gain = Gain::linear;

  /// Throws InvalidSpec for bad parameters and UnsupportedMeasure when the
  /// measure is not defined on the universe's mode or grade alphabet.
  void validate(const UniverseSpec& spec) const;

  /// Short label including the parameters that matter for this kind,
  /// e.g. "precision", "rbp(p=1/2)", "dcg(b=2,linear)".
  [[nodiscard]] std::string label() const;
};

// Per-element definitions. Each validates its own preconditions.

Rational precision(const Element& e, const UniverseSpec& spec);
Rational recall(const Element& e, const UniverseSpec& spec);
/// (1+b^2)PR / (b^2 P + R), with 0/0 defined as 0.
Rational f_measure(const Element& e, const UniverseSpec& spec, const Rational& beta = Rational(1));
/// (1/RB) * sum over relevant ranks i of P@i.
Rational average_precision(const Element& e, const UniverseSpec& spec);
/// sum_i gain(g_i) / log_b(i+1).
Real dcg(const Element& e, const UniverseSpec& spec, int discount_base = 2, Gain gain = Gain::linear);
/// Cascade model with R_i = (2^g_i - 1) / 2^g_max.
Rational err(const Element& e, const UniverseSpec& spec);
/// (1-p) * sum_i p^(i-1) * g_i / g_max.
Rational rbp(const Element& e, const UniverseSpec& spec, const Rational& p);

Value evaluate(const MeasureConfig& config, const Element& e, const UniverseSpec& spec);

/// Largest value DCG can take on a universe: sum_i gain(g_max) / log_b(i+1).
Real dcg_upper_bound(const UniverseSpec& spec, int discount_base, Gain gain);

/// A real-valued mapping over a universe, indexed by element position in the
/// universe's enumeration order.
class MeasureValues {
 public:
  MeasureValues(std::string name, UniverseSpec spec, std::vector<Value> values,
                std::optional<MeasureConfig> config = std::nullopt);

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] const UniverseSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] const std::optional<MeasureConfig>& config() const noexcept { return config_; }
  [[nodiscard]] std::span<const Value> values() const noexcept { return values_; }
  [[nodiscard]] const Value& operator[](std::size_t i) const { return values_.at(i); }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  /// True when every value is an exact rational.
  [[nodiscard]] bool exact() const;

 private:
  std::string name_;
  UniverseSpec spec_;
  std::vector<Value> values_;
  std::optional<MeasureConfig> config_;
};

MeasureValues evaluate_all(const MeasureConfig& config, const Universe& universe);

/// c * f + d, elementwise.
MeasureValues affine_transform(const MeasureValues& values, const Rational& c, const Rational& d);

/// True when both specs describe the same carrier set (recall base ignored).
bool same_carrier(const UniverseSpec& a, const UniverseSpec& b);

}  // namespace scalekit
