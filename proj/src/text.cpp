#include "qpoly/text.hpp"

#include <cctype>
#include <charconv>
#include <map>

#include "qpoly/report_json.hpp"

namespace qpoly {

namespace {

class PolynomialParser {
public:
  explicit PolynomialParser(std::string_view text) : text_{text} {}

  UnilateralPolynomial parse() {
    std::map<std::size_t, Quaternion> terms;
    std::map<std::size_t, std::size_t> term_pos;
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end())
        break;
      const std::size_t start = pos_;
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1.0 : 1.0;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      first = false;
      const auto [coeff, power] = term();
      terms[power] += sign * coeff;
      if (!term_pos.contains(power))
        term_pos[power] = start;
    }
    if (terms.empty())
      throw ParseError("empty polynomial", pos_);
    const std::size_t degree = terms.rbegin()->first;
    if (degree == 0)
      throw ParseError("polynomial must contain a power of q", term_pos[0]);
    if (!(terms.rbegin()->second == Quaternion{1.0}))
      throw ParseError("leading coefficient must be 1 (monic polynomial)", term_pos[degree]);
    std::vector<Quaternion> human(degree);
    for (const auto& [power, c] : terms)
      if (power < degree)
        human[power] = c;
    return UnilateralPolynomial::from_human(human);
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::pair<Quaternion, std::size_t> term() {
    Quaternion coeff{1.0};
    bool has_coeff = false;
    if (!at_end() && peek() == '(') {
      const std::size_t open = pos_;
      const std::size_t close = text_.find(')', open);
      if (close == std::string_view::npos)
        fail("unbalanced parenthesis");
      try {
        coeff = parse_quaternion(text_.substr(open + 1, close - open - 1));
      } catch (const ParseError& e) {
        throw ParseError("malformed coefficient", open + 1 + e.position());
      }
      pos_ = close + 1;
      has_coeff = true;
    } else if (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' ||
                             peek() == 'i' || peek() == 'j' || peek() == 'k')) {
      const std::size_t begin = pos_;
      if (peek() != 'i' && peek() != 'j' && peek() != 'k') {
        double value = 0.0;
        auto [next, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc{})
          fail("malformed number");
        pos_ = static_cast<std::size_t>(next - text_.data());
        skip_ws();
      }
      if (!at_end() && (peek() == 'i' || peek() == 'j' || peek() == 'k'))
        ++pos_;
      coeff = parse_quaternion(text_.substr(begin, pos_ - begin));
      has_coeff = true;
    }
    skip_ws();
    if (has_coeff && !at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      if (at_end() || peek() != 'q')
        fail("expected 'q' after '*'");
    }
    std::size_t power = 0;
    if (!at_end() && peek() == 'q') {
      ++pos_;
      skip_ws();
      power = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        const bool paren = !at_end() && peek() == '(';
        if (paren)
          ++pos_;
        auto [next, ec] =
            std::from_chars(text_.data() + pos_, text_.data() + text_.size(), power);
        if (ec != std::errc{})
          fail("expected a non-negative integer exponent");
        pos_ = static_cast<std::size_t>(next - text_.data());
        if (paren) {
          if (at_end() || peek() != ')')
            fail("expected ')'");
          ++pos_;
        }
      }
    } else if (!has_coeff) {
      fail("expected a coefficient or q");
    }
    skip_ws();
    if (!at_end() && peek() != '+' && peek() != '-')
      fail("unexpected character (coefficients must stand left of q)");
    return {coeff, power};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int nonzero_parts(const Quaternion& q) {
  return (q.w != 0.0) + (q.x != 0.0) + (q.y != 0.0) + (q.z != 0.0);
}

double single_value(const Quaternion& q) {
  return q.w != 0.0 ? q.w : (q.x != 0.0 ? q.x : (q.y != 0.0 ? q.y : q.z));
}

}  // namespace

UnilateralPolynomial parse_polynomial(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{')
    return polynomial_from_json_text(text);
  return PolynomialParser{text}.parse();
}

std::string format_polynomial(const UnilateralPolynomial& poly, int precision) {
  const std::size_t n = poly.degree();
  std::string out = n == 1 ? "q" : "q^" + std::to_string(n);
  for (std::size_t s = n; s-- > 0;) {
    const Quaternion c = -poly[s];
    if (c == Quaternion{})
      continue;
    std::string literal;
    if (nonzero_parts(c) == 1) {
      out += single_value(c) < 0.0 ? " - " : " + ";
      literal = single_value(c) < 0.0 ? to_string(-c, precision) : to_string(c, precision);
      if (s > 0 && literal == "1")
        literal.clear();
    } else {
      out += " + ";
      literal = "(" + to_string(c, precision) + ")";
    }
    out += literal;
    if (s > 0) {
      if (!literal.empty())
        out += ' ';
      out += s == 1 ? "q" : "q^" + std::to_string(s);
    }
  }
  return out;
}

}  // namespace qpoly
