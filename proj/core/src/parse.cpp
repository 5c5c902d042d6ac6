#include "binform/parse.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <utility>

#include "binform/families.hpp"

namespace binform {
namespace {

// Bivariate polynomial keyed by (power of X, power of Y).
using Poly = std::map<std::pair<int, int>, Rational>;

Poly constant(const Rational& c) {
  Poly p;
  if (c != Rational(0)) p[{0, 0}] = c;
  return p;
}

void prune(Poly& p) {
  std::erase_if(p, [](const auto& kv) { return kv.second == Rational(0); });
}

Poly add(Poly p, const Poly& q, int sign) {
  for (const auto& [k, v] : q) {
    if (sign > 0) p[k] += v;
    else p[k] -= v;
  }
  prune(p);
  return p;
}

Poly mul(const Poly& p, const Poly& q) {
  Poly out;
  for (const auto& [kp, vp] : p)
    for (const auto& [kq, vq] : q) out[{kp.first + kq.first, kp.second + kq.second}] += vp * vq;
  prune(out);
  return out;
}

Poly from_form(const BinaryForm& form) {
  const int n = form.degree();
  const auto& a = form.exact_coeffs();
  Poly p;
  for (int j = 0; j <= n; ++j) p[{n - j, j}] = a[j];
  prune(p);
  return p;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BinaryForm run() {
    skip_space();
    Poly p;
    if (peek() == '[') p = coefficient_list();
    else p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return to_form(p);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool starts_primary() {
    skip_space();
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  Rational number() {
    skip_space();
    const std::size_t start = pos_;
    std::string digits;
    int frac_digits = 0;
    bool seen_dot = false;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        if (seen_dot) ++frac_digits;
      } else if (c == '.' && !seen_dot) {
        seen_dot = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (digits.empty()) {
      pos_ = start;
      fail("expected a number");
    }
    long exponent = -frac_digits;
    if (peek() == 'e' || peek() == 'E') {
      ++pos_;
      int sign = 1;
      if (peek() == '+' || peek() == '-') sign = text_[pos_++] == '-' ? -1 : 1;
      std::string exp_digits;
      while (std::isdigit(static_cast<unsigned char>(peek()))) exp_digits += text_[pos_++];
      if (exp_digits.empty()) fail("malformed exponent");
      exponent += sign * std::stol(exp_digits);
    }
    Rational value{mpz_class(digits, 10)};
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    if (exponent >= 0) value *= ten_pow;
    else value /= ten_pow;
    value.canonicalize();
    return value;
  }

  long small_integer() {
    skip_space();
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
    if (digits.empty() || digits.size() > 6) fail("expected a small non-negative integer");
    return std::stol(digits);
  }

  Rational signed_rational() {
    int sign = 1;
    while (true) {
      if (accept('-')) sign = -sign;
      else if (!accept('+')) break;
    }
    Rational q = number();
    if (accept('/')) {
      const Rational den = number();
      if (den == 0) fail("division by zero");
      q /= den;
    }
    return sign * q;
  }

  Poly coefficient_list() {
    expect('[');
    std::vector<Rational> coeffs;
    if (!accept(']')) {
      do {
        coeffs.push_back(signed_rational());
      } while (accept(','));
      expect(']');
    }
    if (coeffs.size() < 2) fail("coefficient list needs at least two entries");
    const int n = static_cast<int>(coeffs.size()) - 1;
    Poly p;
    for (int j = 0; j <= n; ++j) p[{n - j, j}] = (coeffs[j]);
    prune(p);
    if (p.empty()) fail("zero form");
    // Keep the declared degree even when leading coefficients vanish.
    declared_degree_ = n;
    return p;
  }

  Poly expr() {
    skip_space();
    Poly acc;
    int sign = 1;
    if (accept('-')) sign = -1;
    else accept('+');
    acc = add(Poly{}, term(), sign);
    while (true) {
      if (accept('+')) acc = add(acc, term(), 1);
      else if (accept('-')) acc = add(acc, term(), -1);
      else break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = power();
    while (true) {
      if (accept('*')) {
        acc = mul(acc, power());
      } else if (accept('/')) {
        const Poly div = power();
        if (div.size() != 1 || div.begin()->first != std::pair<int, int>{0, 0})
          fail("division is only allowed by a nonzero constant");
        const Rational inv = Rational(1) / div.begin()->second;
        for (auto& [k, v] : acc) v *= inv;
      } else if (starts_primary()) {
        acc = mul(acc, power());
      } else {
        break;
      }
    }
    return acc;
  }

  Poly power() {
    Poly base = primary();
    if (accept('^')) {
      const long e = small_integer();
      if (e > 512) fail("exponent too large");
      Poly out = constant(Rational(1));
      for (long i = 0; i < e; ++i) out = mul(out, base);
      return out;
    }
    return base;
  }

  Poly primary() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return constant(number());
    if (c == 'X' || c == 'x') {
      ++pos_;
      return Poly{{{1, 0}, Rational(1)}};
    }
    if (c == 'Y' || c == 'y') {
      ++pos_;
      return Poly{{{0, 1}, Rational(1)}};
    }
    if (match_word("FSTAR")) return family(true);
    if (c == 'P' || c == 'p') {
      ++pos_;
      return family(false);
    }
    fail("expected X, Y, a number, '(' or a P(k)/FSTAR(n) shorthand");
  }

  bool match_word(std::string_view word) {
    if (text_.size() - pos_ < word.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i)
      if (std::toupper(static_cast<unsigned char>(text_[pos_ + i])) != word[i]) return false;
    pos_ += word.size();
    return true;
  }

  Poly family(bool fstar) {
    expect('(');
    const long k = small_integer();
    expect(')');
    try {
      if (k > 64) fail(fstar ? "FSTAR(n) needs n <= 64" : "P(k) needs k <= 64");
      return from_form(fstar ? make_fstar(static_cast<int>(k)) : make_pk(static_cast<int>(k)));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError) throw;
      fail(e.what());
    }
  }

  BinaryForm to_form(const Poly& p) {
    if (p.empty()) fail("zero form");
    int degree = -1;
    for (const auto& [k, v] : p) {
      const int d = k.first + k.second;
      if (degree < 0) degree = d;
      else if (d != degree) fail("form is not homogeneous");
    }
    if (declared_degree_ >= 0) degree = declared_degree_;
    if (degree < 1) fail("form must have degree at least 1");
    std::vector<Rational> coeffs(degree + 1, Rational(0));
    for (const auto& [k, v] : p) coeffs[k.second] = v;
    return BinaryForm::exact(std::move(coeffs));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int declared_degree_ = -1;
};

}  // namespace

BinaryForm parse_form(std::string_view text) {
  return Parser(text).run();
}

std::string format_rational(const Rational& q) { return q.get_str(); }

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

std::string format_form(const BinaryForm& form) {
  std::string out = "[";
  if (form.is_exact()) {
    const auto& a = form.exact_coeffs();
    for (std::size_t i = 0; i < a.size(); ++i) out += (i ? ", " : "") + format_rational(a[i]);
  } else {
    const auto a = form.complex_coeffs();
    for (std::size_t i = 0; i < a.size(); ++i) {
      out += i ? ", " : "";
      out += format_double(a[i].real());
      if (a[i].imag() != 0.0)
        out += (a[i].imag() > 0 ? "+" : "") + format_double(a[i].imag()) + "i";
    }
  }
  return out + "]";
}

}  // namespace binform
