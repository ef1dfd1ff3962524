#include "scalekit/value.hpp"

#include "scalekit/error.hpp"

#include <boost/multiprecision/number.hpp>

#include <cctype>
#include <iomanip>
#include <sstream>

namespace scalekit {

namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw InvalidSpec("malformed rational '" + std::string(whole) + "'");
  }
  boost::multiprecision::cpp_int value = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw InvalidSpec("malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (text[pos] - '0');
  }
  return negative ? -value : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  const auto num = parse_integer(text.substr(0, slash), text);
  const auto den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw InvalidSpec("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

std::string format_real(const Real& r) {
  std::ostringstream os;
  os << std::setprecision(36) << r;
  return os.str();
}

Real Value::real() const {
  if (is_exact()) {
    const auto& q = std::get<Rational>(repr_);
    return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
  }
  return std::get<Real>(repr_);
}

double Value::to_double() const {
  if (is_exact()) {
    return std::get<Rational>(repr_).convert_to<double>();
  }
  return std::get<Real>(repr_).convert_to<double>();
}

std::string Value::str() const {
  return is_exact() ? format_rational(exact()) : format_real(std::get<Real>(repr_));
}

Value operator+(const Value& a, const Value& b) {
  if (a.is_exact() && b.is_exact()) return Value(Rational(a.exact() + b.exact()));
  return Value(Real(a.real() + b.real()));
}

Value operator-(const Value& a, const Value& b) {
  if (a.is_exact() && b.is_exact()) return Value(Rational(a.exact() - b.exact()));
  return Value(Real(a.real() - b.real()));
}

Value operator*(const Value& a, const Value& b) {
  if (a.is_exact() && b.is_exact()) return Value(Rational(a.exact() * b.exact()));
  return Value(Real(a.real() * b.real()));
}

Value operator/(const Value& a, const Value& b) {
  if (a.is_exact() && b.is_exact()) {
    if (b.exact() == 0) throw std::domain_error("division by zero");
    return Value(Rational(a.exact() / b.exact()));
  }
  return Value(Real(a.real() / b.real()));
}

std::strong_ordering Comparator::compare(const Value& a, const Value& b) const {
  if (a.is_exact() && b.is_exact()) {
    const auto& x = a.exact();
    const auto& y = b.exact();
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  const Real diff = a.real() - b.real();
  if (abs(diff) <= Real(eps_)) return std::strong_ordering::equal;
  return diff < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace scalekit
