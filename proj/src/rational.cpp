#include "ocreason/rational.hpp"

#include <charconv>

#include "ocreason/errors.hpp"

namespace ocreason {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw InputError("not a rational number: \"" + std::string(whole) + "\"");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  std::int64_t num = parse_int(text.substr(0, slash), text);
  std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace ocreason
