#include "scalekit/universe.hpp"

#include "scalekit/error.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

namespace scalekit {

std::string_view to_string(Mode mode) {
  return mode == Mode::rank_based ? "rank" : "set";
}

Mode parse_mode(std::string_view text) {
  if (text == "rank" || text == "rank-based") return Mode::rank_based;
  if (text == "set" || text == "set-based") return Mode::set_based;
  throw InvalidSpec("unknown mode '" + std::string(text) + "' (expected rank or set)");
}

void UniverseSpec::validate() const {
  if (n < 1) throw InvalidSpec("list length N must be >= 1");
  if (g_max < 1 || g_max > kMaxGrade) {
    throw InvalidSpec("g_max must be in [1, " + std::to_string(kMaxGrade) + "]");
  }
  if (recall_base) {
    if (*recall_base <= 0) throw InvalidSpec("recall base must be positive");
    if (*recall_base < n) {
      throw InvalidSpec("recall base " + std::to_string(*recall_base) +
                        " is below the largest relevant count " + std::to_string(n));
    }
  }
}

std::optional<std::uint64_t> UniverseSpec::closed_form_size() const {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (mode == Mode::rank_based) {
    std::uint64_t size = 1;
    const auto base = static_cast<std::uint64_t>(g_max) + 1;
    for (int i = 0; i < n; ++i) {
      if (size > kMax / base) return std::nullopt;
      size *= base;
    }
    return size;
  }
  // Multisets of size n over g_max + 1 grades: C(n + g_max, g_max).
  std::uint64_t size = 1;
  for (int k = 1; k <= g_max; ++k) {
    const auto factor = static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(k);
    if (size > kMax / factor) return std::nullopt;
    size = size * factor / static_cast<std::uint64_t>(k);
  }
  return size;
}

Element::Element(std::vector<Grade> grades, Mode mode) : grades_(std::move(grades)), mode_(mode) {
  if (mode_ == Mode::set_based) {
    std::sort(grades_.begin(), grades_.end(), std::greater<>());
  }
}

Element Element::parse(std::string_view text, Mode mode, int g_max) {
  if (text.empty()) throw OrderingError("empty element string");
  std::vector<Grade> grades;
  grades.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '0' + g_max) {
      throw OrderingError("invalid grade '" + std::string(1, c) + "' in element '" +
                          std::string(text) + "'");
    }
    grades.emplace_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Element(std::move(grades), mode);
}

int Element::relevant_count() const {
  return static_cast<int>(std::count_if(grades_.begin(), grades_.end(),
                                        [](Grade g) { return g.value() > 0; }));
}

int Element::grade_sum() const {
  return std::accumulate(grades_.begin(), grades_.end(), 0,
                         [](int acc, Grade g) { return acc + g.value(); });
}

std::string Element::text() const {
  std::string out;
  out.reserve(grades_.size());
  for (Grade g : grades_) out.push_back(static_cast<char>('0' + g.value()));
  return out;
}

Element canonicalize(const Element& element) {
  return Element(std::vector<Grade>(element.grades().begin(), element.grades().end()), element.mode());
}

Universe::Universe(UniverseSpec spec, std::vector<Element> elements)
    : spec_(std::move(spec)), elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    index_.emplace(elements_[i].text(), i);
  }
}

std::optional<std::size_t> Universe::index_of(const Element& element) const {
  if (element.mode() != spec_.mode || element.size() != static_cast<std::size_t>(spec_.n)) {
    return std::nullopt;
  }
  return index_of(element.text());
}

std::optional<std::size_t> Universe::index_of(std::string_view text) const {
  std::string key(text);
  if (spec_.mode == Mode::set_based) {
    std::sort(key.begin(), key.end(), std::greater<>());
  }
  const auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Universe enumerate_universe(const UniverseSpec& spec, std::uint64_t max_elements) {
  spec.validate();
  const auto size = spec.closed_form_size();
  if (!size || *size > max_elements) {
    throw CapExceeded("universe for N=" + std::to_string(spec.n) + ", g_max=" +
                      std::to_string(spec.g_max) + " exceeds the cap of " +
                      std::to_string(max_elements) + " elements");
  }

  std::vector<Element> elements;
  elements.reserve(*size);
  const auto n = static_cast<std::size_t>(spec.n);
  const auto top = static_cast<std::uint8_t>(spec.g_max);

  if (spec.mode == Mode::rank_based) {
    // Odometer over grade strings, rightmost position fastest.
    std::vector<Grade> grades(n);
    while (true) {
      elements.emplace_back(grades, Mode::rank_based);
      std::size_t pos = n;
      while (pos > 0 && grades[pos - 1].value() == top) {
        grades[pos - 1] = Grade(0);
        --pos;
      }
      if (pos == 0) break;
      grades[pos - 1] = Grade(static_cast<std::uint8_t>(grades[pos - 1].value() + 1));
    }
  } else {
    // Non-increasing sequences, generated then ordered by (sum, text).
    std::vector<Grade> grades(n);
    std::function<void(std::size_t, std::uint8_t)> fill = [&](std::size_t pos, std::uint8_t bound) {
      if (pos == n) {
        elements.emplace_back(grades, Mode::set_based);
        return;
      }
      for (int g = 0; g <= bound; ++g) {
        grades[pos] = Grade(static_cast<std::uint8_t>(g));
        fill(pos + 1, static_cast<std::uint8_t>(g));
      }
    };
    fill(0, top);
    std::sort(elements.begin(), elements.end(), [](const Element& a, const Element& b) {
      const int sa = a.grade_sum();
      const int sb = b.grade_sum();
      if (sa != sb) return sa < sb;
      return a.text() < b.text();
    });
  }
  return Universe(spec, std::move(elements));
}

}  // namespace scalekit
