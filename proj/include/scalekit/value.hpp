#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>
#include <variant>

namespace scalekit {

using Rational = boost::multiprecision::cpp_rational;

/// Extended-precision real used where a measure is inherently irrational
/// (DCG). 113-bit significand: 60 bits beyond an IEEE double.
using Real = boost::multiprecision::cpp_bin_float_quad;

/// Parses "num/den" or a bare integer. Throws InvalidSpec on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "num/den", including integers ("2/1", "0/1").
std::string format_rational(const Rational& r);

std::string format_real(const Real& r);

/// A measure value: exact when every ingredient is rational, extended-precision
/// real otherwise. Arithmetic between an exact and a real value yields a real.
class Value {
 public:
  Value() : repr_(Rational(0)) {}
  Value(Rational r) : repr_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Value(Real r) : repr_(std::move(r)) {}      // NOLINT(google-explicit-constructor)
  Value(long long n) : repr_(Rational(n)) {}  // NOLINT(google-explicit-constructor)

  [[nodiscard]] bool is_exact() const noexcept { return std::holds_alternative<Rational>(repr_); }
  [[nodiscard]] const Rational& exact() const { return std::get<Rational>(repr_); }
  [[nodiscard]] Real real() const;
  [[nodiscard]] double to_double() const;

  /// "num/den" for exact values, decimal otherwise.
  [[nodiscard]] std::string str() const;

  friend Value operator+(const Value& a, const Value& b);
  friend Value operator-(const Value& a, const Value& b);
  friend Value operator*(const Value& a, const Value& b);
  friend Value operator/(const Value& a, const Value& b);

  /// Structural equality: same representation and same number.
  friend bool operator==(const Value& a, const Value& b) { return a.repr_ == b.repr_; }

 private:
  std::variant<Rational, Real> repr_;
};

/// Three-way comparison policy. Two exact values compare exactly; if either
/// side is a real, values within `eps` of each other compare equal.
class Comparator {
 public:
  static constexpr double kDefaultEps = 1e-9;

  Comparator() = default;
  explicit Comparator(double eps) : eps_(eps) {}

  [[nodiscard]] std::strong_ordering compare(const Value& a, const Value& b) const;
  [[nodiscard]] bool equal(const Value& a, const Value& b) const { return compare(a, b) == 0; }
  [[nodiscard]] bool less(const Value& a, const Value& b) const { return compare(a, b) < 0; }
  [[nodiscard]] bool less_equal(const Value& a, const Value& b) const { return compare(a, b) <= 0; }
  [[nodiscard]] double eps() const noexcept { return eps_; }

 private:
  double eps_ = kDefaultEps;
};

}  // namespace scalekit
