#include "scalekit/measures.hpp"

#include "scalekit/error.hpp"

#include <boost/multiprecision/number.hpp>

namespace scalekit {

namespace {

void require_binary(const UniverseSpec& spec, std::string_view measure) {
  if (!spec.binary()) {
    throw UnsupportedMeasure(std::string(measure) + " requires binary relevance (g_max = 1)");
  }
}

void require_rank_based(const UniverseSpec& spec, std::string_view measure) {
  if (spec.mode != Mode::rank_based) {
    throw UnsupportedMeasure(std::string(measure) + " is only defined on rank-based universes");
  }
}

void require_shape(const Element& e, const UniverseSpec& spec) {
  if (e.size() != static_cast<std::size_t>(spec.n) || e.mode() != spec.mode) {
    throw UniverseMismatch("element '" + e.text() + "' does not belong to the universe");
  }
  for (Grade g : e.grades()) {
    if (g.value() > spec.g_max) {
      throw InvalidSpec("grade above g_max in element '" + e.text() + "'");
    }
  }
}

}  // namespace

std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::precision: return "precision";
    case MeasureKind::recall: return "recall";
    case MeasureKind::f_measure: return "f";
    case MeasureKind::average_precision: return "ap";
    case MeasureKind::dcg: return "dcg";
    case MeasureKind::err: return "err";
    case MeasureKind::rbp: return "rbp";
  }
  return "unknown";
}

MeasureKind parse_measure_kind(std::string_view text) {
  if (text == "precision" || text == "p") return MeasureKind::precision;
  if (text == "recall" || text == "r") return MeasureKind::recall;
  if (text == "f" || text == "f-measure" || text == "fmeasure") return MeasureKind::f_measure;
  if (text == "ap" || text == "average-precision") return MeasureKind::average_precision;
  if (text == "dcg") return MeasureKind::dcg;
  if (text == "err") return MeasureKind::err;
  if (text == "rbp") return MeasureKind::rbp;
  throw InvalidSpec("unknown measure '" + std::string(text) + "'");
}

std::string_view to_string(Gain gain) {
  return gain == Gain::linear ? "linear" : "exponential";
}

Gain parse_gain(std::string_view text) {
  if (text == "linear") return Gain::linear;
  if (text == "exponential" || text == "exp") return Gain::exponential;
  throw InvalidSpec("unknown gain '" + std::string(text) + "'");
}

void MeasureConfig::validate(const UniverseSpec& spec) const {
  spec.validate();
  switch (kind) {
    case MeasureKind::precision:
    case MeasureKind::recall:
    case MeasureKind::f_measure:
      require_binary(spec, to_string(kind));
      if (kind == MeasureKind::f_measure && beta <= 0) throw InvalidSpec("beta must be positive");
      break;
    case MeasureKind::average_precision:
      require_rank_based(spec, "ap");
      require_binary(spec, "ap");
      break;
    case MeasureKind::dcg:
      require_rank_based(spec, "dcg");
      if (discount_base < 2) throw InvalidSpec("DCG discount base must be >= 2");
      break;
    case MeasureKind::err:
      require_rank_based(spec, "err");
      break;
    case MeasureKind::rbp:
      require_rank_based(spec, "rbp");
      if (p <= 0 || p >= 1) throw InvalidSpec("RBP persistence p must lie in (0, 1)");
      break;
  }
}

std::string MeasureConfig::label() const {
  switch (kind) {
    case MeasureKind::f_measure:
      return "f(beta=" + format_rational(beta) + ")";
    case MeasureKind::dcg:
      return "dcg(b=" + std::to_string(discount_base) + "," + std::string(to_string(gain)) + ")";
    case MeasureKind::rbp:
      return "rbp(p=" + format_rational(p) + ")";
    default:
      return std::string(to_string(kind));
  }
}

Rational precision(const Element& e, const UniverseSpec& spec) {
  require_binary(spec, "precision");
  require_shape(e, spec);
  return Rational(e.relevant_count(), spec.n);
}

Rational recall(const Element& e, const UniverseSpec& spec) {
  require_binary(spec, "recall");
  require_shape(e, spec);
  const int rb = spec.effective_recall_base();
  if (rb <= 0) throw InvalidSpec("recall base must be positive");
  return Rational(e.relevant_count(), rb);
}

Rational f_measure(const Element& e, const UniverseSpec& spec, const Rational& beta) {
  if (beta <= 0) throw InvalidSpec("beta must be positive");
  const Rational p = precision(e, spec);
  const Rational r = recall(e, spec);
  const Rational b2 = beta * beta;
  const Rational denom = b2 * p + r;
  if (denom == 0) return Rational(0);
  return (1 + b2) * p * r / denom;
}

Rational average_precision(const Element& e, const UniverseSpec& spec) {
  require_rank_based(spec, "ap");
  require_binary(spec, "ap");
  require_shape(e, spec);
  const int rb = spec.effective_recall_base();
  if (rb <= 0) throw InvalidSpec("recall base must be positive");
  Rational sum(0);
  int seen = 0;
  int rank = 0;
  for (Grade g : e.grades()) {
    ++rank;
    if (g.value() > 0) {
      ++seen;
      sum += Rational(seen, rank);
    }
  }
  return sum / rb;
}

Real dcg(const Element& e, const UniverseSpec& spec, int discount_base, Gain gain) {
  require_rank_based(spec, "dcg");
  require_shape(e, spec);
  if (discount_base < 2) throw InvalidSpec("DCG discount base must be >= 2");
  const Real log_base = log(Real(discount_base));
  Real sum = 0;
  int rank = 0;
  for (Grade g : e.grades()) {
    ++rank;
    if (g.value() == 0) continue;
    const Real gained = gain == Gain::linear ? Real(g.value()) : Real((1 << g.value()) - 1);
    sum += gained * log_base / log(Real(rank + 1));
  }
  return sum;
}

Real dcg_upper_bound(const UniverseSpec& spec, int discount_base, Gain gain) {
  const Real log_base = log(Real(discount_base));
  const Real top = gain == Gain::linear ? Real(spec.g_max) : Real((1 << spec.g_max) - 1);
  Real sum = 0;
  for (int rank = 1; rank <= spec.n; ++rank) sum += top * log_base / log(Real(rank + 1));
  return sum;
}

Rational err(const Element& e, const UniverseSpec& spec) {
  require_rank_based(spec, "err");
  require_shape(e, spec);
  const Rational scale(1 << spec.g_max);
  Rational sum(0);
  Rational not_stopped(1);
  int rank = 0;
  for (Grade g : e.grades()) {
    ++rank;
    const Rational stop = Rational((1 << g.value()) - 1) / scale;
    sum += not_stopped * stop / rank;
    not_stopped *= 1 - stop;
  }
  return sum;
}

Rational rbp(const Element& e, const UniverseSpec& spec, const Rational& p) {
  require_rank_based(spec, "rbp");
  require_shape(e, spec);
  if (p <= 0 || p >= 1) throw InvalidSpec("RBP persistence p must lie in (0, 1)");
  Rational sum(0);
  Rational weight(1);
  for (Grade g : e.grades()) {
    if (g.value() > 0) sum += weight * Rational(g.value(), spec.g_max);
    weight *= p;
  }
  return (1 - p) * sum;
}

Value evaluate(const MeasureConfig& config, const Element& e, const UniverseSpec& spec) {
  switch (config.kind) {
    case MeasureKind::precision: return precision(e, spec);
    case MeasureKind::recall: return recall(e, spec);
    case MeasureKind::f_measure: return f_measure(e, spec, config.beta);
    case MeasureKind::average_precision: return average_precision(e, spec);
    case MeasureKind::dcg: return dcg(e, spec, config.discount_base, config.gain);
    case MeasureKind::err: return err(e, spec);
    case MeasureKind::rbp: return rbp(e, spec, config.p);
  }
  throw InvalidSpec("unknown measure kind");
}

MeasureValues::MeasureValues(std::string name, UniverseSpec spec, std::vector<Value> values,
                             std::optional<MeasureConfig> config)
    : name_(std::move(name)), spec_(std::move(spec)), values_(std::move(values)), config_(std::move(config)) {}

bool MeasureValues::exact() const {
  for (const auto& v : values_) {
    if (!v.is_exact()) return false;
  }
  return true;
}

MeasureValues evaluate_all(const MeasureConfig& config, const Universe& universe) {
  config.validate(universe.spec());
  std::vector<Value> values;
  values.reserve(universe.size());
  for (const auto& e : universe.elements()) {
    values.push_back(evaluate(config, e, universe.spec()));
  }
  return MeasureValues(config.label(), universe.spec(), std::move(values), config);
}

MeasureValues affine_transform(const MeasureValues& values, const Rational& c, const Rational& d) {
  std::vector<Value> out;
  out.reserve(values.size());
  for (const auto& v : values.values()) out.push_back(Value(c) * v + Value(d));
  return MeasureValues(values.name() + "*" + format_rational(c) + "+" + format_rational(d), values.spec(),
                       std::move(out));
}

bool same_carrier(const UniverseSpec& a, const UniverseSpec& b) {
  return a.n == b.n && a.g_max == b.g_max && a.mode == b.mode;
}

}  // namespace scalekit
