#pragma once

#include "scalekit/measures.hpp"
#include "scalekit/universe.hpp"

#include <optional>

namespace scalekit::test {

inline UniverseSpec set_spec(int n, std::optional<int> rb = std::nullopt, int g_max = 1) {
  return UniverseSpec{.n = n, .g_max = g_max, .mode = Mode::set_based, .recall_base = rb};
}

inline UniverseSpec rank_spec(int n, int g_max = 1) {
  return UniverseSpec{.n = n, .g_max = g_max, .mode = Mode::rank_based, .recall_base = std::nullopt};
}

inline MeasureConfig config(MeasureKind kind) {
  MeasureConfig c;
  c.kind = kind;
  return c;
}

inline MeasureConfig rbp_config(Rational p) {
  MeasureConfig c;
  c.kind = MeasureKind::rbp;
  c.p = std::move(p);
  return c;
}

inline Rational q(long long num, long long den = 1) { return Rational(num, den); }

}  // namespace scalekit::test
