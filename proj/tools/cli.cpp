#include "cli.hpp"

#include "scalekit/error.hpp"
#include "scalekit/measures.hpp"
#include "scalekit/orderings.hpp"
#include "scalekit/report.hpp"
#include "scalekit/repro.hpp"
#include "scalekit/scalecheck.hpp"
#include "scalekit/search.hpp"
#include "scalekit/universe.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace scalekit::cli {

namespace {

struct RunConfig {
  std::string mode = "rank";
  int n = 1;
  int g_max = 1;
  std::optional<int> recall_base;
  std::string measure = "precision";
  std::string p = "1/2";
  std::string beta = "1";
  int discount_base = 2;
  std::string gain = "linear";
  std::string ordering;
  std::string format;
  double eps = Comparator::kDefaultEps;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> samples;
  std::string order_space = "strict";
  std::size_t max_witnesses = 5;
  std::uint64_t max_orders = kDefaultMaxOrders;
  std::size_t diff_cap = kDefaultDiffStructureCap;
};

std::uint64_t max_elements_from_env() {
  const char* raw = std::getenv("SCALEKIT_MAX_ELEMENTS");
  if (raw == nullptr || *raw == '\0') return Universe::kDefaultMaxElements;
  const std::string_view text(raw);
  std::uint64_t value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || value == 0) {
    throw InvalidSpec("SCALEKIT_MAX_ELEMENTS must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

UniverseSpec universe_spec(const RunConfig& cfg) {
  UniverseSpec spec;
  spec.mode = parse_mode(cfg.mode);
  spec.n = cfg.n;
  spec.g_max = cfg.g_max;
  spec.recall_base = cfg.recall_base;
  spec.validate();
  return spec;
}

MeasureConfig measure_config(const RunConfig& cfg) {
  MeasureConfig m;
  m.kind = parse_measure_kind(cfg.measure);
  m.p = parse_rational(cfg.p);
  m.beta = parse_rational(cfg.beta);
  m.discount_base = cfg.discount_base;
  m.gain = parse_gain(cfg.gain);
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidSpec("cannot read ordering file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Ordering load_ordering(const RunConfig& cfg, const Universe& universe, const MeasureValues* values) {
  const auto& source = cfg.ordering;
  if (source.empty()) throw InvalidSpec("--ordering is required");
  if (source == "sbto") return sbto(universe);
  if (source == "rbto") return rbto(universe);
  if (source == "paper-counterexample") {
    auto order = paper_counterexample_order();
    if (!same_carrier(order.spec(), universe.spec())) {
      throw UniverseMismatch("paper-counterexample is defined on the binary set-based N=2 universe");
    }
    return order;
  }
  if (source == "induced") {
    if (values == nullptr) throw InvalidSpec("--ordering induced needs a measure");
    return order_from_measure(*values, Comparator(cfg.eps));
  }
  auto order = parse_ordering(read_file(source), universe);
  std::visit([&](auto& o) { o.set_name(source); }, order);
  return order;
}

std::string resolved_format(const RunConfig& cfg, const std::string& fallback,
                            std::initializer_list<std::string_view> allowed) {
  const std::string format = cfg.format.empty() ? fallback : cfg.format;
  if (std::find(allowed.begin(), allowed.end(), format) == allowed.end()) {
    throw InvalidSpec("format '" + format + "' is not available for this subcommand");
  }
  return format;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void cmd_universe(const RunConfig& cfg, std::ostream& out) {
  const auto universe = enumerate_universe(universe_spec(cfg), max_elements_from_env());
  const auto format = resolved_format(cfg, "json", {"json", "csv", "text"});
  if (format == "json") {
    emit(out, universe_json(universe));
    return;
  }
  if (format == "csv") out << "element\n";
  for (const auto& e : universe.elements()) out << e.text() << "\n";
}

void cmd_measure(const RunConfig& cfg, std::ostream& out) {
  const auto universe = enumerate_universe(universe_spec(cfg), max_elements_from_env());
  const auto values = evaluate_all(measure_config(cfg), universe);
  const auto format = resolved_format(cfg, "json", {"json", "csv", "text"});
  if (format == "json") {
    emit(out, measure_json(values, universe));
  } else if (format == "csv") {
    out << measure_csv(values, universe);
  } else {
    out << "measure: " << values.name() << "\n";
    for (std::size_t i = 0; i < values.size(); ++i) out << universe[i].text() << "  " << values[i].str() << "\n";
  }
}

void cmd_check(const RunConfig& cfg, std::ostream& out) {
  const auto universe = enumerate_universe(universe_spec(cfg), max_elements_from_env());
  const auto values = evaluate_all(measure_config(cfg), universe);
  const auto format = resolved_format(cfg, "json", {"json", "text"});
  const auto ordering = load_ordering(cfg, universe, &values);
  const CheckOptions opts{Comparator(cfg.eps), cfg.max_witnesses};
  if (const auto* weak = std::get_if<WeakOrder>(&ordering)) {
    const auto report = check_interval(values, *weak, opts);
    if (format == "json") {
      emit(out, check_json(values, *weak, report, universe));
    } else {
      out << check_text(values, *weak, report, universe);
    }
    return;
  }
  const auto& partial = std::get<PartialOrder>(ordering);
  const auto report = check_ordinal(values, partial, opts);
  if (format == "json") {
    emit(out, check_json(values, partial, report, universe));
  } else {
    out << check_text(values, partial, report, universe);
  }
}

void cmd_diffstruct(const RunConfig& cfg, std::ostream& out) {
  const auto universe = enumerate_universe(universe_spec(cfg), max_elements_from_env());
  const auto format = resolved_format(cfg, "json", {"json", "text"});
  std::optional<MeasureValues> values;
  if (cfg.ordering == "induced") values = evaluate_all(measure_config(cfg), universe);
  const auto ordering = load_ordering(cfg, universe, values ? &*values : nullptr);
  const auto* weak = std::get_if<WeakOrder>(&ordering);
  if (weak == nullptr) throw OrderingError("difference structures need a weak order; got a partial order");
  const auto report = check_difference_structure(*weak, cfg.diff_cap);
  if (format == "json") {
    emit(out, diffstruct_json(*weak, report, universe));
    return;
  }
  out << "ordering: " << (weak->name().empty() ? "custom" : weak->name()) << "\n";
  out << "verdict:  " << (report.verdict ? "difference-structure" : "fails") << "\n";
  if (!report.verdict) {
    out << "axiom:    " << report.failed_axiom << "\nwitness: ";
    for (auto e : report.witness) out << " " << universe[e].text();
    out << "\n";
  }
  if (!report.note.empty()) out << "note:     " << report.note << "\n";
}

void cmd_census(const RunConfig& cfg, std::ostream& out) {
  const auto universe = enumerate_universe(universe_spec(cfg), max_elements_from_env());
  const auto values = evaluate_all(measure_config(cfg), universe);
  const auto format = resolved_format(cfg, "json", {"json", "text"});
  SearchOptions opts;
  opts.order_space = parse_order_space(cfg.order_space);
  opts.max_witnesses = cfg.max_witnesses;
  opts.max_orders = cfg.max_orders;
  opts.cmp = Comparator(cfg.eps);
  if (cfg.samples) opts.sampling = SamplingPlan{cfg.seed, *cfg.samples};
  const auto result = census(values, opts);
  if (format == "json") {
    emit(out, census_json(result, universe));
    return;
  }
  out << "measure:     " << result.measure << "\n";
  out << "order space: " << to_string(result.order_space) << "\n";
  if (result.sampling) out << "sampling:    seed=" << result.sampling->seed << " count=" << result.sampling->count << "\n";
  out << "examined:    " << result.examined << "\n";
  out << "ordinal:     " << result.ordinal_count() << "\n";
  out << "interval:    " << result.interval_count << "\n";
  out << "neither:     " << result.not_ordinal_count << "\n";
  for (const auto& w : result.witnesses) {
    out << "-- " << to_string(w.verdict) << "\n" << render(w.order, universe);
  }
}

void cmd_repro(const RunConfig& cfg, std::ostream& out) {
  const auto format = resolved_format(cfg, "text", {"json", "text"});
  const auto lines = run_reproduction();
  if (format == "text") {
    out << render_reproduction(lines);
    return;
  }
  Json j = Json::array();
  for (const auto& line : lines) {
    j.push_back(Json{{"id", line.id}, {"claim", line.claim}, {"passed", line.passed}, {"detail", line.detail}});
  }
  emit(out, j);
}

void add_universe_flags(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--mode", cfg.mode, "rank or set")->capture_default_str();
  sub.add_option("--n", cfg.n, "list length / set size")->capture_default_str();
  sub.add_option("--gmax", cfg.g_max, "maximum relevance grade (1..9)")->capture_default_str();
  sub.add_option("--rb", cfg.recall_base, "recall base (defaults to N)");
  sub.add_option("--format", cfg.format, "json, csv or text");
}

void add_measure_flags(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--measure", cfg.measure, "precision, recall, f, ap, dcg, err or rbp")->capture_default_str();
  sub.add_option("--p", cfg.p, "RBP persistence as num/den")->capture_default_str();
  sub.add_option("--beta", cfg.beta, "F-measure beta as num/den")->capture_default_str();
  sub.add_option("--discount-base", cfg.discount_base, "DCG log base")->capture_default_str();
  sub.add_option("--gain", cfg.gain, "DCG gain: linear or exponential")->capture_default_str();
  sub.add_option("--eps", cfg.eps, "tolerance for real-valued comparisons")->capture_default_str();
  sub.add_option("--max-witnesses", cfg.max_witnesses, "witness bound")->capture_default_str();
}

void add_ordering_flag(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--ordering", cfg.ordering, "sbto, rbto, paper-counterexample, induced, or a file path");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Scale-type checker for IR evaluation measures over finite universes", "scalekit"};
  app.require_subcommand(1);

  auto* universe = app.add_subcommand("universe", "list the universe of assessed lists");
  add_universe_flags(*universe, cfg);

  auto* measure = app.add_subcommand("measure", "evaluate a measure on every element");
  add_universe_flags(*measure, cfg);
  add_measure_flags(*measure, cfg);

  auto* check = app.add_subcommand("check", "check ordinal and interval scale against an ordering");
  add_universe_flags(*check, cfg);
  add_measure_flags(*check, cfg);
  add_ordering_flag(*check, cfg);

  auto* diffstruct = app.add_subcommand("diffstruct", "verify difference-structure axioms for an ordering");
  add_universe_flags(*diffstruct, cfg);
  add_measure_flags(*diffstruct, cfg);
  add_ordering_flag(*diffstruct, cfg);
  diffstruct->add_option("--diff-cap", cfg.diff_cap, "largest universe checked")->capture_default_str();

  auto* census_cmd = app.add_subcommand("census", "tally verdicts over all orderings of a universe");
  add_universe_flags(*census_cmd, cfg);
  add_measure_flags(*census_cmd, cfg);
  census_cmd->add_option("--order-space", cfg.order_space, "strict or weak")->capture_default_str();
  census_cmd->add_option("--max-orders", cfg.max_orders, "exhaustive enumeration cap")->capture_default_str();
  census_cmd->add_option("--samples", cfg.samples, "sample this many orders instead of enumerating");
  census_cmd->add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();

  auto* repro = app.add_subcommand("repro-paper", "run the fixed reproduction suite");
  repro->add_option("--format", cfg.format, "text or json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (universe->parsed()) cmd_universe(cfg, out);
    else if (measure->parsed()) cmd_measure(cfg, out);
    else if (check->parsed()) cmd_check(cfg, out);
    else if (diffstruct->parsed()) cmd_diffstruct(cfg, out);
    else if (census_cmd->parsed()) cmd_census(cfg, out);
    else if (repro->parsed()) cmd_repro(cfg, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    if (census_cmd->parsed()) err << "hint: pass --samples N (and --seed S) to sample orders instead\n";
    return kExitCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}

}  // namespace scalekit::cli
