#include "scalekit/orderings.hpp"

#include "scalekit/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace scalekit {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.push_back(line);
    start = end + 1;
  }
  return out;
}

std::size_t lookup(std::string_view token, const Universe& universe, std::size_t line_no) {
  const auto element = trim(token);
  if (element.empty()) {
    throw OrderingError("line " + std::to_string(line_no) + ": empty element");
  }
  const auto idx = universe.index_of(element);
  if (!idx) {
    throw OrderingError("line " + std::to_string(line_no) + ": unknown element '" + std::string(element) + "'");
  }
  return *idx;
}

std::vector<std::string> diagnose_class_index(std::span<const std::uint32_t> class_index) {
  std::vector<std::string> problems;
  if (class_index.empty()) return problems;
  const std::uint32_t top = *std::max_element(class_index.begin(), class_index.end());
  std::vector<bool> used(static_cast<std::size_t>(top) + 1, false);
  for (auto c : class_index) used[c] = true;
  for (std::size_t c = 0; c < used.size(); ++c) {
    if (!used[c]) problems.push_back("tie-class " + std::to_string(c) + " is empty");
  }
  return problems;
}

WeakOrder parse_weak(const std::vector<std::string_view>& lines, const Universe& universe) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> seen_on(universe.size(), 0);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::vector<std::size_t> members;
    std::string_view rest = lines[li];
    while (true) {
      const auto comma = rest.find(',');
      const auto idx = lookup(rest.substr(0, comma), universe, li + 1);
      if (seen_on[idx] != 0) {
        throw OrderingError("line " + std::to_string(li + 1) + ": duplicate element '" + universe[idx].text() +
                            "' (first on line " + std::to_string(seen_on[idx]) + ")");
      }
      seen_on[idx] = li + 1;
      members.push_back(idx);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    classes.push_back(std::move(members));
  }
  return WeakOrder::from_classes(universe.spec(), universe.size(), classes);
}

PartialOrder parse_partial(const std::vector<std::string_view>& lines, const Universe& universe) {
  std::vector<std::pair<std::size_t, std::size_t>> strict;
  std::vector<std::pair<std::size_t, std::size_t>> ties;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto line = lines[li];
    const auto op = line.find_first_of("<=");
    if (op == std::string_view::npos) {
      throw OrderingError("line " + std::to_string(li + 1) + ": expected 'A < B' or 'A = B'");
    }
    const auto lhs = lookup(line.substr(0, op), universe, li + 1);
    const auto rhs = lookup(line.substr(op + 1), universe, li + 1);
    (line[op] == '<' ? strict : ties).emplace_back(lhs, rhs);
  }
  return PartialOrder::from_relations(universe.spec(), universe.size(), strict, ties);
}

}  // namespace

std::string_view to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::strict_total: return "strict-total";
    case OrderKind::weak: return "weak";
    case OrderKind::partial: return "partial";
  }
  return "unknown";
}

WeakOrder::WeakOrder(UniverseSpec spec, std::vector<std::uint32_t> class_index)
    : spec_(std::move(spec)), class_index_(std::move(class_index)) {
  if (auto problems = diagnose_class_index(class_index_); !problems.empty()) {
    throw OrderingError("not an ordered partition: " + problems.front());
  }
  class_count_ = class_index_.empty()
                     ? 0
                     : static_cast<std::size_t>(*std::max_element(class_index_.begin(), class_index_.end())) + 1;
}

WeakOrder WeakOrder::from_classes(UniverseSpec spec, std::size_t universe_size,
                                  const std::vector<std::vector<std::size_t>>& classes) {
  constexpr auto kUnassigned = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> class_index(universe_size, kUnassigned);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw OrderingError("tie-class " + std::to_string(c) + " is empty");
    for (auto e : classes[c]) {
      if (e >= universe_size) throw OrderingError("element index " + std::to_string(e) + " out of range");
      if (class_index[e] != kUnassigned) {
        throw OrderingError("element index " + std::to_string(e) + " appears in more than one class");
      }
      class_index[e] = static_cast<std::uint32_t>(c);
    }
  }
  for (std::size_t e = 0; e < universe_size; ++e) {
    if (class_index[e] == kUnassigned) {
      throw OrderingError("not a partition: element index " + std::to_string(e) + " is missing");
    }
  }
  return WeakOrder(std::move(spec), std::move(class_index));
}

std::vector<std::vector<std::size_t>> WeakOrder::classes() const {
  std::vector<std::vector<std::size_t>> out(class_count_);
  for (std::size_t e = 0; e < class_index_.size(); ++e) out[class_index_[e]].push_back(e);
  return out;
}

WeakOrder& WeakOrder::set_name(std::string name, std::string note) {
  name_ = std::move(name);
  note_ = std::move(note);
  return *this;
}

PartialOrder PartialOrder::from_relations(UniverseSpec spec, std::size_t universe_size,
                                          const std::vector<std::pair<std::size_t, std::size_t>>& strict,
                                          const std::vector<std::pair<std::size_t, std::size_t>>& ties) {
  BitMatrix leq(universe_size);
  for (std::size_t i = 0; i < universe_size; ++i) leq.set(i, i);
  for (auto [a, b] : strict) {
    if (a >= universe_size || b >= universe_size) throw OrderingError("element index out of range");
    leq.set(a, b);
  }
  for (auto [a, b] : ties) {
    if (a >= universe_size || b >= universe_size) throw OrderingError("element index out of range");
    leq.set(a, b);
    leq.set(b, a);
  }
  leq.close_transitively();
  for (auto [a, b] : strict) {
    if (leq.test(b, a)) {
      throw OrderingError("cycle detected: declared " + std::to_string(a) + " < " + std::to_string(b) +
                          " but the closure also gives the reverse");
    }
  }
  return PartialOrder(std::move(spec), std::move(leq));
}

bool PartialOrder::is_total() const {
  for (std::size_t i = 0; i < universe_size(); ++i) {
    for (std::size_t j = i + 1; j < universe_size(); ++j) {
      if (!comparable(i, j)) return false;
    }
  }
  return true;
}

WeakOrder order_from_measure(const MeasureValues& values, const Comparator& cmp) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return cmp.less(values[a], values[b]); });
  std::vector<std::uint32_t> class_index(values.size(), 0);
  std::uint32_t current = 0;
  for (std::size_t k = 1; k < idx.size(); ++k) {
    // Ties chain through neighbours, so a run of values each within eps of the
    // next collapses into one class.
    if (!cmp.equal(values[idx[k - 1]], values[idx[k]])) ++current;
    class_index[idx[k]] = current;
  }
  WeakOrder order(values.spec(), std::move(class_index));
  order.set_name("induced(" + values.name() + ")");
  return order;
}

WeakOrder sbto(const Universe& universe) {
  const auto& spec = universe.spec();
  if (spec.mode != Mode::set_based || !spec.binary()) {
    throw InvalidSpec("sbto requires a binary set-based universe");
  }
  std::vector<std::uint32_t> class_index;
  class_index.reserve(universe.size());
  for (const auto& e : universe.elements()) class_index.push_back(static_cast<std::uint32_t>(e.relevant_count()));
  WeakOrder order(spec, std::move(class_index));
  order.set_name("sbto", "reconstruction: ascending relevant count");
  return order;
}

WeakOrder rbto(const Universe& universe) {
  const auto& spec = universe.spec();
  if (spec.mode != Mode::rank_based || !spec.binary()) {
    throw InvalidSpec("rbto requires a binary rank-based universe");
  }
  if (spec.n > 31) throw CapExceeded("rbto supports N <= 31");
  // Integer numerator of sum_i r_i 2^-i over the common denominator 2^N.
  std::vector<std::uint32_t> class_index;
  class_index.reserve(universe.size());
  for (const auto& e : universe.elements()) {
    std::uint32_t key = 0;
    for (Grade g : e.grades()) key = (key << 1) | g.value();
    class_index.push_back(key);
  }
  WeakOrder order(spec, std::move(class_index));
  order.set_name("rbto", "reconstruction: binary-fraction order");
  return order;
}

WeakOrder paper_counterexample_order() {
  const UniverseSpec spec{.n = 2, .g_max = 1, .mode = Mode::set_based, .recall_base = std::nullopt};
  const auto universe = enumerate_universe(spec);
  const auto idx = [&](std::string_view text) { return *universe.index_of(text); };
  auto order = WeakOrder::from_classes(spec, universe.size(), {{idx("01")}, {idx("00")}, {idx("11")}});
  order.set_name("paper-counterexample", "{0,1} < {0,0} < {1,1}");
  return order;
}

Ordering parse_ordering(std::string_view text, const Universe& universe) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw OrderingError("empty ordering");
  if (lines.front() == "partial") return parse_partial(lines, universe);
  return parse_weak(lines, universe);
}

std::string render(const WeakOrder& order, const Universe& universe) {
  std::string out;
  for (const auto& cls : order.classes()) {
    for (std::size_t k = 0; k < cls.size(); ++k) {
      if (k > 0) out += ',';
      out += universe[cls[k]].text();
    }
    out += '\n';
  }
  return out;
}

std::string render(const PartialOrder& order, const Universe& universe) {
  const std::size_t m = order.universe_size();
  // Tie-class representative: lowest index in the class.
  std::vector<std::size_t> rep(m);
  for (std::size_t i = 0; i < m; ++i) {
    rep[i] = i;
    for (std::size_t j = 0; j < i; ++j) {
      if (order.tied(i, j)) {
        rep[i] = j;
        break;
      }
    }
  }
  std::string out = "partial\n";
  for (std::size_t i = 0; i < m; ++i) {
    if (rep[i] != i) out += universe[rep[i]].text() + " = " + universe[i].text() + "\n";
  }
  // Covering pairs between representatives; the closure on load restores the rest.
  for (std::size_t a = 0; a < m; ++a) {
    if (rep[a] != a) continue;
    for (std::size_t b = 0; b < m; ++b) {
      if (rep[b] != b || !order.less(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < m && covered; ++c) {
        if (rep[c] == c && order.less(a, c) && order.less(c, b)) covered = false;
      }
      if (covered) out += universe[a].text() + " < " + universe[b].text() + "\n";
    }
  }
  return out;
}

std::string render(const Ordering& order, const Universe& universe) {
  return std::visit([&](const auto& o) { return render(o, universe); }, order);
}

std::vector<std::string> validate(const WeakOrder& order, const Universe& universe) {
  std::vector<std::string> problems;
  if (!same_carrier(order.spec(), universe.spec()) || order.universe_size() != universe.size()) {
    problems.push_back("ordering covers " + std::to_string(order.universe_size()) +
                       " elements but the universe has " + std::to_string(universe.size()));
    return problems;
  }
  auto more = diagnose_class_index(order.class_indices());
  problems.insert(problems.end(), more.begin(), more.end());
  return problems;
}

std::vector<std::string> validate(const PartialOrder& order, const Universe& universe) {
  std::vector<std::string> problems;
  if (!same_carrier(order.spec(), universe.spec()) || order.universe_size() != universe.size()) {
    problems.push_back("ordering covers " + std::to_string(order.universe_size()) +
                       " elements but the universe has " + std::to_string(universe.size()));
    return problems;
  }
  const std::size_t m = order.universe_size();
  for (std::size_t i = 0; i < m; ++i) {
    if (!order.leq(i, i)) problems.push_back("not reflexive at '" + universe[i].text() + "'");
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!order.leq(i, j)) continue;
      if (!order.relation().row_subset(j, i)) {
        problems.push_back("not transitive through '" + universe[i].text() + "' <= '" + universe[j].text() + "'");
      }
    }
  }
  return problems;
}

std::vector<std::string> validate(const Ordering& order, const Universe& universe) {
  return std::visit([&](const auto& o) { return validate(o, universe); }, order);
}

}  // namespace scalekit
