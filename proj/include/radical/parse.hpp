#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "radical/polynomial.hpp"

namespace radical {

namespace detail {

/// Hand-rolled scanner shared by the coefficient-list and expression forms.
/// Positions in errors are 0-based character offsets into the original text.
class PolynomialScanner {
 public:
  PolynomialScanner(std::string_view text, std::size_t base)
      : text_(text), base_(base) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::size_t offset() const { return base_ + pos_; }

  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(message, offset());
  }

  /// +1/-1 accumulated over any run of leading sign characters.
  double read_signs() {
    double sign = 1.0;
    while (true) {
      if (consume('+')) continue;
      if (consume('-')) {
        sign = -sign;
        continue;
      }
      return sign;
    }
  }

  bool next_is_digit_or_dot() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }

  double read_number() {
    skip_ws();
    double value = 0.0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) {
      fail("expected a number");
    }
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  std::size_t read_exponent() {
    skip_ws();
    std::size_t value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) {
      fail("expected a nonnegative integer exponent");
    }
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  /// number['i'] | 'i' with an optional sign run; one additive atom of a
  /// complex scalar.
  Complex read_signed_atom() {
    const double sign = read_signs();
    if (peek() == 'i') {
      ++pos_;
      return Complex(0.0, sign);
    }
    const double magnitude = read_number();
    if (peek() == 'i') {
      ++pos_;
      return Complex(0.0, sign * magnitude);
    }
    return Complex(sign * magnitude, 0.0);
  }

  /// Sum of signed atoms: "3", "3+2i", "-i", "1.5e-3 - 2i".
  Complex read_complex_scalar() {
    Complex value = read_signed_atom();
    while (true) {
      const char c = peek();
      if (c != '+' && c != '-') return value;
      value += read_signed_atom();
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t base_ = 0;
};

inline Polynomial parse_coefficient_list(std::string_view text) {
  std::vector<Complex> coeffs;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t len =
        (comma == std::string_view::npos) ? text.size() - start : comma - start;
    PolynomialScanner scan(text.substr(start, len), start);
    if (scan.at_end()) scan.fail("empty coefficient entry");
    coeffs.push_back(scan.read_complex_scalar());
    if (!scan.at_end()) scan.fail("trailing characters in coefficient entry");
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Polynomial(std::move(coeffs));
}

inline Polynomial parse_expression(std::string_view text) {
  PolynomialScanner scan(text, 0);
  if (scan.at_end()) scan.fail("empty polynomial");

  std::vector<Complex> coeffs;
  char variable = '\0';
  const auto add_term = [&](std::size_t exponent, Complex value) {
    if (exponent > kMaxDegree) {
      throw ParseError("exponent exceeds the supported maximum " +
                           std::to_string(kMaxDegree),
                       scan.offset());
    }
    if (coeffs.size() <= exponent) coeffs.resize(exponent + 1);
    coeffs[exponent] += value;
  };

  while (!scan.at_end()) {
    const double sign = scan.read_signs();
    Complex coefficient(1.0, 0.0);
    bool have_coefficient = false;

    if (scan.consume('(')) {
      coefficient = scan.read_complex_scalar();
      if (!scan.consume(')')) scan.fail("expected ')'");
      have_coefficient = true;
    } else if (scan.next_is_digit_or_dot()) {
      const double magnitude = scan.read_number();
      if (scan.peek() == 'i') {
        scan.consume('i');
        coefficient = Complex(0.0, magnitude);
      } else {
        coefficient = Complex(magnitude, 0.0);
      }
      have_coefficient = true;
    } else if (scan.peek() == 'i') {
      scan.consume('i');
      coefficient = Complex(0.0, 1.0);
      have_coefficient = true;
    }
    coefficient *= sign;

    scan.consume('*');

    std::size_t exponent = 0;
    const char c = scan.peek();
    if (std::isalpha(static_cast<unsigned char>(c)) && c != 'i') {
      if (variable == '\0') variable = c;
      if (c != variable) {
        scan.fail(std::string("unexpected symbol '") + c +
                  "', polynomial already uses variable '" + variable + "'");
      }
      scan.consume(c);
      exponent = scan.consume('^') ? scan.read_exponent() : 1;
    } else if (!have_coefficient) {
      scan.fail("expected a coefficient or a variable");
    }

    add_term(exponent, coefficient);

    const char next = scan.peek();
    if (next != '\0' && next != '+' && next != '-') {
      scan.fail(std::string("unexpected character '") + next + "'");
    }
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace detail

/// Parse either a comma-separated constant-first coefficient list
/// ("4,-6,0,1") or a one-variable expression ("x^3 - 6x + 4",
/// "x^2 + (1+1i)x"). Complex literals read as "3+2i".
inline Polynomial parse_polynomial(std::string_view text) {
  if (text.find(',') != std::string_view::npos) {
    return detail::parse_coefficient_list(text);
  }
  return detail::parse_expression(text);
}

}  // namespace radical
