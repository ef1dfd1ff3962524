#include "scalekit/report.hpp"

#include <array>
#include <charconv>
#include <sstream>

namespace scalekit {

namespace {

Json pair_witness_json(const PairWitness& w, const Universe& universe) {
  Json j;
  j["type"] = "pair";
  j["kind"] = w.kind;
  j["x"] = universe[w.x].text();
  j["y"] = universe[w.y].text();
  j["fx"] = w.fx.str();
  j["fy"] = w.fy.str();
  return j;
}

Json gap_witness_json(const GapWitness& w, const Universe& universe) {
  Json j;
  j["type"] = "gap";
  j["step"] = w.step;
  j["elements"] = Json::array();
  j["values"] = Json::array();
  for (std::size_t k = 0; k < 4; ++k) {
    j["elements"].push_back(universe[w.elements[k]].text());
    j["values"].push_back(w.values[k].str());
  }
  return j;
}

std::string ordering_label(const std::string& name) {
  return name.empty() ? std::string("custom") : name;
}

std::string describe_pair(const PairWitness& w, const Universe& universe) {
  std::ostringstream os;
  os << w.kind << ": " << universe[w.x].text() << " (" << w.fx.str() << ") vs " << universe[w.y].text() << " ("
     << w.fy.str() << ")";
  return os.str();
}

}  // namespace

std::string round_trip_decimal(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

Json universe_json(const Universe& universe) {
  Json j;
  j["mode"] = std::string(to_string(universe.spec().mode));
  j["n"] = universe.spec().n;
  j["g_max"] = universe.spec().g_max;
  j["size"] = universe.size();
  j["elements"] = Json::array();
  for (const auto& e : universe.elements()) j["elements"].push_back(e.text());
  return j;
}

Json measure_json(const MeasureValues& values, const Universe& universe) {
  Json j;
  j["measure"] = values.name();
  j["values"] = Json::array();
  for (std::size_t i = 0; i < values.size(); ++i) {
    Json row;
    row["element"] = universe[i].text();
    row["value_exact"] = values[i].is_exact() ? Json(values[i].str()) : Json(nullptr);
    row["value_float"] = round_trip_decimal(values[i].to_double());
    j["values"].push_back(std::move(row));
  }
  return j;
}

std::string measure_csv(const MeasureValues& values, const Universe& universe) {
  std::string out = "element,value_exact,value_float\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += universe[i].text();
    out += ',';
    if (values[i].is_exact()) out += values[i].str();
    out += ',';
    out += round_trip_decimal(values[i].to_double());
    out += '\n';
  }
  return out;
}

Json check_json(const MeasureValues& values, const WeakOrder& order, const IntervalReport& report,
                const Universe& universe) {
  Json j;
  j["measure"] = values.name();
  j["ordering"] = ordering_label(order.name());
  j["kind"] = std::string(to_string(report.order_kind));
  j["verdict"] = std::string(to_string(report.verdict));
  j["spacing"] = report.spacing ? Json(report.spacing->str()) : Json(nullptr);
  if (report.affine) {
    j["affine"] = Json{{"a", report.affine->a.str()}, {"b", report.affine->b.str()}};
  } else {
    j["affine"] = nullptr;
  }
  j["witnesses"] = Json::array();
  for (const auto& w : report.ordinal_witnesses) j["witnesses"].push_back(pair_witness_json(w, universe));
  for (const auto& w : report.gap_witnesses) j["witnesses"].push_back(gap_witness_json(w, universe));
  j["note"] = order.note();
  return j;
}

Json check_json(const MeasureValues& values, const PartialOrder& order, const OrdinalReport& report,
                const Universe& universe) {
  Json j;
  j["measure"] = values.name();
  j["ordering"] = ordering_label(order.name());
  j["kind"] = std::string(to_string(OrderKind::partial));
  j["verdict"] = std::string(to_string(report.verdict));
  j["spacing"] = nullptr;
  j["affine"] = nullptr;
  j["witnesses"] = Json::array();
  for (const auto& w : report.witnesses) j["witnesses"].push_back(pair_witness_json(w, universe));
  j["note"] = report.verdict == OrdinalVerdict::weakly_represents
                  ? "weak representation only: incomparable pairs cannot satisfy the biconditional"
                  : "";
  j["incomparable_pairs"] = report.incomparable_pairs;
  return j;
}

Json diffstruct_json(const WeakOrder& order, const DiffStructureReport& report, const Universe& universe) {
  Json j;
  j["ordering"] = ordering_label(order.name());
  j["kind"] = std::string(to_string(order.kind()));
  j["verdict"] = report.verdict;
  j["failed_axiom"] = report.verdict ? Json(nullptr) : Json(report.failed_axiom);
  j["witness"] = Json::array();
  for (auto e : report.witness) j["witness"].push_back(universe[e].text());
  j["axioms_checked"] = report.axioms_checked;
  j["note"] = report.note;
  return j;
}

Json census_json(const Census& census, const Universe& universe) {
  Json j;
  j["measure"] = census.measure;
  j["order_space"] = std::string(to_string(census.order_space));
  j["examined"] = census.examined;
  j["ordinal_count"] = census.ordinal_count();
  j["interval_count"] = census.interval_count;
  j["neither_count"] = census.not_ordinal_count;
  if (census.sampling) {
    j["sampling"] = Json{{"seed", census.sampling->seed}, {"count", census.sampling->count}};
  } else {
    j["sampling"] = nullptr;
  }
  j["witnesses"] = Json::array();
  for (const auto& w : census.witnesses) {
    j["witnesses"].push_back(
        Json{{"verdict", std::string(to_string(w.verdict))}, {"ordering", render(w.order, universe)}});
  }
  return j;
}

std::string check_text(const MeasureValues& values, const WeakOrder& order, const IntervalReport& report,
                       const Universe& universe) {
  std::ostringstream os;
  os << "measure:  " << values.name() << "\n";
  os << "ordering: " << ordering_label(order.name());
  if (!order.note().empty()) os << " (" << order.note() << ")";
  os << "\nkind:     " << to_string(report.order_kind) << "\n";
  os << "verdict:  " << to_string(report.verdict) << "\n";
  if (report.spacing) os << "spacing:  " << report.spacing->str() << "\n";
  if (report.affine) os << "affine:   a=" << report.affine->a.str() << " b=" << report.affine->b.str() << "\n";
  for (const auto& w : report.ordinal_witnesses) os << "witness:  " << describe_pair(w, universe) << "\n";
  for (const auto& w : report.gap_witnesses) {
    os << "witness:  gap " << universe[w.elements[0]].text() << "->" << universe[w.elements[1]].text() << " = "
       << (w.values[1] - w.values[0]).str() << " but " << universe[w.elements[2]].text() << "->"
       << universe[w.elements[3]].text() << " = " << (w.values[3] - w.values[2]).str() << "\n";
  }
  return os.str();
}

std::string check_text(const MeasureValues& values, const PartialOrder& order, const OrdinalReport& report,
                       const Universe& universe) {
  std::ostringstream os;
  os << "measure:  " << values.name() << "\n";
  os << "ordering: " << ordering_label(order.name()) << "\n";
  os << "kind:     partial\n";
  os << "verdict:  " << to_string(report.verdict) << "\n";
  os << "incomparable pairs: " << report.incomparable_pairs << "\n";
  for (const auto& w : report.witnesses) os << "witness:  " << describe_pair(w, universe) << "\n";
  return os.str();
}

}  // namespace scalekit
