#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace scalekit {

/// Square boolean matrix with rows packed into 64-bit words. Used for order
/// relations, where transitivity and inclusion tests reduce to word ops.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] std::size_t words_per_row() const noexcept { return words_; }

  [[nodiscard]] bool test(std::size_t i, std::size_t j) const {
    assert(i < n_ && j < n_);
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value = true) {
    assert(i < n_ && j < n_);
    auto& w = bits_[i * words_ + j / 64];
    const std::uint64_t mask = std::uint64_t{1} << (j % 64);
    w = value ? (w | mask) : (w & ~mask);
  }

  [[nodiscard]] const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }
  [[nodiscard]] std::uint64_t* row(std::size_t i) { return bits_.data() + i * words_; }

  /// Bits [offset, offset + len) of row i, len <= 64, packed low-first.
  [[nodiscard]] std::uint64_t segment(std::size_t i, std::size_t offset, std::size_t len) const {
    assert(len <= 64 && offset + len <= n_);
    if (len == 0) return 0;
    const std::uint64_t* r = row(i);
    const std::size_t w = offset / 64;
    const std::size_t shift = offset % 64;
    std::uint64_t out = r[w] >> shift;
    if (shift != 0 && w + 1 < words_) out |= r[w + 1] << (64 - shift);
    return len == 64 ? out : out & ((std::uint64_t{1} << len) - 1);
  }

  /// True when row `sub` is a subset of row `super`.
  [[nodiscard]] bool row_subset(std::size_t sub, std::size_t super) const {
    const std::uint64_t* a = row(sub);
    const std::uint64_t* b = row(super);
    for (std::size_t w = 0; w < words_; ++w) {
      if ((a[w] & ~b[w]) != 0) return false;
    }
    return true;
  }

  void or_row_into(std::size_t src, std::size_t dst) {
    const std::uint64_t* a = row(src);
    std::uint64_t* b = row(dst);
    for (std::size_t w = 0; w < words_; ++w) b[w] |= a[w];
  }

  /// Transitive closure (Warshall, row-parallel).
  void close_transitively() {
    for (std::size_t k = 0; k < n_; ++k) {
      for (std::size_t i = 0; i < n_; ++i) {
        if (test(i, k)) or_row_into(k, i);
      }
    }
  }

  [[nodiscard]] BitMatrix transposed() const {
    BitMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      const std::uint64_t* r = row(i);
      for (std::size_t w = 0; w < words_; ++w) {
        for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
          t.set(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)), i);
        }
      }
    }
    return t;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace scalekit
