#include "montes/parse.hpp"

#include <cctype>

#include "montes/error.hpp"

namespace montes {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  IntPolynomial run() {
    IntPolynomial r = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    std::string msg = what + " at byte " + std::to_string(pos_);
    if (pos_ < s_.size()) msg += " ('" + std::string(1, s_[pos_]) + "')";
    fail(Errc::ParseError, msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  IntPolynomial expr() {
    bool neg = false;
    if (peek('+') || peek('-')) neg = s_[pos_++] == '-';
    IntPolynomial r = term();
    if (neg) r = -r;
    while (peek('+') || peek('-')) {
      bool minus = s_[pos_++] == '-';
      IntPolynomial t = term();
      if (minus)
        r -= t;
      else
        r += t;
    }
    return r;
  }

  IntPolynomial term() {
    IntPolynomial r = factor();
    while (peek('*')) {
      ++pos_;
      IntPolynomial t = factor();
      if (r.degree() + t.degree() > kMaxParsedDegree) error("degree too large");
      r = r * t;
    }
    return r;
  }

  IntPolynomial factor() {
    IntPolynomial b = base();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      unsigned long n = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        n = n * 10 + static_cast<unsigned long>(s_[pos_] - '0');
        if (n > kMaxExponent) error("exponent too large");
        ++pos_;
      }
      if (pos_ == start) error("expected exponent");
      if (b.degree() > 0 && static_cast<long>(n) > kMaxParsedDegree / b.degree()) error("degree too large");
      return pow(b, n);
    }
    return b;
  }

  IntPolynomial base() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    char c = s_[pos_];
    if (c == 'x') {
      ++pos_;
      return IntPolynomial::x();
    }
    if (c == '(') {
      ++pos_;
      IntPolynomial r = expr();
      if (!peek(')')) error("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return IntPolynomial::constant(Integer(std::string(s_.substr(start, pos_ - start))));
    }
    error("expected 'x', an integer or '('");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_poly(std::string_view text) { return Parser(text).run(); }

IntPolynomial parse_coeffs(std::string_view text) {
  std::vector<Integer> desc;
  std::size_t pos = 0, line_start = 0;
  while (pos <= text.size()) {
    if (pos == text.size() || text[pos] == '\n') {
      std::string_view line = text.substr(line_start, pos - line_start);
      if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
      std::size_t a = 0, b = line.size();
      while (a < b && std::isspace(static_cast<unsigned char>(line[a]))) ++a;
      while (b > a && std::isspace(static_cast<unsigned char>(line[b - 1]))) --b;
      if (a < b) {
        std::string tok(line.substr(a, b - a));
        std::size_t k = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
        if (k == tok.size()) fail(Errc::ParseError, "bad coefficient at byte " + std::to_string(line_start + a));
        for (std::size_t i = k; i < tok.size(); ++i)
          if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            fail(Errc::ParseError, "bad coefficient at byte " + std::to_string(line_start + a + i));
        if (tok[0] == '+') tok.erase(0, 1);
        desc.emplace_back(tok);
      }
      line_start = pos + 1;
    }
    ++pos;
  }
  if (desc.empty()) fail(Errc::ParseError, "no coefficients at byte 0");
  return IntPolynomial(std::vector<Integer>(desc.rbegin(), desc.rend()));
}

std::string format_coeffs(const IntPolynomial& p) {
  std::string out;
  if (p.is_zero()) return "0\n";
  for (long i = p.degree(); i >= 0; --i) out += p[static_cast<std::size_t>(i)].get_str() + "\n";
  return out;
}

}  // namespace montes
