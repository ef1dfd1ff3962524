#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace scalekit {

enum class Mode { rank_based, set_based };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// Relevance grade of one document. Binary relevance is g_max == 1.
class Grade {
 public:
  constexpr Grade() = default;
  constexpr explicit Grade(std::uint8_t value) : value_(value) {}
  [[nodiscard]] constexpr std::uint8_t value() const noexcept { return value_; }
  friend constexpr auto operator<=>(Grade, Grade) = default;

 private:
  std::uint8_t value_ = 0;
};

/// Parameters of a finite universe of assessed lists of fixed length.
struct UniverseSpec {
  static constexpr int kMaxGrade = 9;

  int n = 1;
  int g_max = 1;
  Mode mode = Mode::rank_based;
  /// Recall base; defaults to n when unset.
  std::optional<int> recall_base;

  [[nodiscard]] int effective_recall_base() const { return recall_base.value_or(n); }
  [[nodiscard]] bool binary() const noexcept { return g_max == 1; }

  /// Throws InvalidSpec on n < 1, g_max outside [1, 9], or a recall base below
  /// the largest possible relevant count.
  void validate() const;

  /// Closed-form universe cardinality, or nullopt if it does not fit in 64 bits.
  [[nodiscard]] std::optional<std::uint64_t> closed_form_size() const;

  friend bool operator==(const UniverseSpec&, const UniverseSpec&) = default;
};

/// One assessed document list. Set-based elements are kept sorted descending,
/// so equal grade multisets are structurally equal.
class Element {
 public:
  Element(std::vector<Grade> grades, Mode mode);

  /// Parses the one-character-per-grade text encoding, rank 1 leftmost.
  /// Set-based input may be in any order; it is canonicalized.
  static Element parse(std::string_view text, Mode mode, int g_max);

  [[nodiscard]] std::span<const Grade> grades() const noexcept { return grades_; }
  [[nodiscard]] Mode mode() const noexcept { return mode_; }
  [[nodiscard]] std::size_t size() const noexcept { return grades_.size(); }
  [[nodiscard]] int relevant_count() const;
  [[nodiscard]] int grade_sum() const;
  [[nodiscard]] std::string text() const;

  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::vector<Grade> grades_;
  Mode mode_;
};

/// Identity for rank-based elements; sorts grades descending for set-based.
Element canonicalize(const Element& element);

/// The carrier set of an empirical relational system: every distinct list for
/// a spec, in canonical enumeration order.
class Universe {
 public:
  static constexpr std::uint64_t kDefaultMaxElements = std::uint64_t{1} << 20;

  [[nodiscard]] const UniverseSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] std::span<const Element> elements() const noexcept { return elements_; }
  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] const Element& operator[](std::size_t i) const { return elements_.at(i); }

  [[nodiscard]] std::optional<std::size_t> index_of(const Element& element) const;
  /// Looks up an element by its text encoding (canonicalized first).
  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view text) const;

 private:
  friend Universe enumerate_universe(const UniverseSpec&, std::uint64_t);
  Universe(UniverseSpec spec, std::vector<Element> elements);

  UniverseSpec spec_;
  std::vector<Element> elements_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Rank-based: lexicographic by grade string. Set-based: ascending grade sum,
/// then lexicographic by canonical text. Throws CapExceeded past max_elements.
Universe enumerate_universe(const UniverseSpec& spec,
                            std::uint64_t max_elements = Universe::kDefaultMaxElements);

}  // namespace scalekit
