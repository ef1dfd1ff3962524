#pragma once

#include "scalekit/measures.hpp"
#include "scalekit/orderings.hpp"
#include "scalekit/scalecheck.hpp"
#include "scalekit/search.hpp"
#include "scalekit/universe.hpp"

#include <json.hpp>

#include <string>

namespace scalekit {

using Json = nlohmann::ordered_json;

/// Shortest decimal that parses back to the same double.
std::string round_trip_decimal(double x);

Json universe_json(const Universe& universe);

/// {measure, values: [{element, value_exact, value_float}]}
Json measure_json(const MeasureValues& values, const Universe& universe);
/// Header `element,value_exact,value_float`; value_exact is empty for reals.
std::string measure_csv(const MeasureValues& values, const Universe& universe);

/// {measure, ordering, kind, verdict, spacing, affine, witnesses, note}
Json check_json(const MeasureValues& values, const WeakOrder& order, const IntervalReport& report,
                const Universe& universe);
/// Same layout for partial orders; spacing and affine are null and
/// incomparable_pairs is appended.
Json check_json(const MeasureValues& values, const PartialOrder& order, const OrdinalReport& report,
                const Universe& universe);

Json diffstruct_json(const WeakOrder& order, const DiffStructureReport& report, const Universe& universe);

/// {measure, order_space, examined, ordinal_count, interval_count, neither_count, sampling, witnesses}
Json census_json(const Census& census, const Universe& universe);

/// Multi-line text rendering of a check, for --format text.
std::string check_text(const MeasureValues& values, const WeakOrder& order, const IntervalReport& report,
                       const Universe& universe);
std::string check_text(const MeasureValues& values, const PartialOrder& order, const OrdinalReport& report,
                       const Universe& universe);

}  // namespace scalekit
