#include "sgspec/numbers.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace sgspec {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DUPLICATE_EDGE: return "DUPLICATE_EDGE";
    case Errc::LOOP: return "LOOP";
    case Errc::INDEX_OUT_OF_RANGE: return "INDEX_OUT_OF_RANGE";
    case Errc::INVALID_COLORING: return "INVALID_COLORING";
    case Errc::NON_INTEGER_ENTRIES: return "NON_INTEGER_ENTRIES";
    case Errc::NOT_SYMMETRIC: return "NOT_SYMMETRIC";
    case Errc::REDUCIBLE_MINPOLY: return "REDUCIBLE_MINPOLY";
    case Errc::UNSUPPORTED_DEGREE: return "UNSUPPORTED_DEGREE";
    case Errc::LIMIT_EXCEEDED: return "LIMIT_EXCEEDED";
    case Errc::UNKNOWN_NAME: return "UNKNOWN_NAME";
    case Errc::BAD_PARAMS: return "BAD_PARAMS";
    case Errc::VERIFICATION_FAILED: return "VERIFICATION_FAILED";
    case Errc::DIVISION_BY_ZERO: return "DIVISION_BY_ZERO";
    case Errc::NOT_TOP_EIGENVALUE: return "NOT_TOP_EIGENVALUE";
    case Errc::DIMENSION_TOO_SMALL: return "DIMENSION_TOO_SMALL";
    case Errc::NOT_UNIT: return "NOT_UNIT";
    case Errc::AMBIGUOUS_PRODUCT: return "AMBIGUOUS_PRODUCT";
    case Errc::NUMERIC_FAILURE: return "NUMERIC_FAILURE";
    case Errc::FIELD_MISMATCH: return "FIELD_MISMATCH";
    case Errc::PARSE_ERROR: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw Error(Errc::PARSE_ERROR, "empty rational");
  Rational r;
  if (r.set_str(text, 10) != 0) throw Error(Errc::PARSE_ERROR, "bad rational '" + text + "'");
  if (sgn(r.get_den()) == 0) throw Error(Errc::DIVISION_BY_ZERO, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

BigInt rational_floor(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

bool is_square_free(long m) {
  if (m < 0) return false;
  if (m < 2) return true;
  for (long d = 2; d * d <= m; ++d) {
    if (m % (d * d) == 0) return false;
  }
  return true;
}

Quad::Quad(Rational a, Rational b, long m) : a_(std::move(a)), b_(std::move(b)), m_(m) {
  if (m_ < 0) throw Error(Errc::BAD_PARAMS, "negative radicand");
  if (!is_square_free(m_)) throw Error(Errc::BAD_PARAMS, "radicand " + std::to_string(m_) + " is not square-free");
  normalize();
}

void Quad::normalize() {
  a_.canonicalize();
  b_.canonicalize();
  if (m_ <= 1) {
    // sqrt(0) = 0, sqrt(1) = 1: fold into the rational part.
    if (m_ == 1) a_ += b_;
    b_ = 0;
    m_ = 0;
  }
  if (sgn(b_) == 0) m_ = 0;
}

int Quad::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against m*b^2; the larger magnitude wins.
  Rational a2 = a_ * a_;
  Rational mb2 = b_ * b_ * Rational(m_);
  const int c = cmp(a2, mb2);
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

long Quad::join_field(const Quad& l, const Quad& r) {
  if (l.m_ == 0) return r.m_;
  if (r.m_ == 0 || l.m_ == r.m_) return l.m_;
  throw Error(Errc::FIELD_MISMATCH,
              "sqrt(" + std::to_string(l.m_) + ") vs sqrt(" + std::to_string(r.m_) + ")");
}

Quad Quad::operator-() const {
  Quad q = *this;
  q.a_ = -q.a_;
  q.b_ = -q.b_;
  return q;
}

Quad& Quad::operator+=(const Quad& o) {
  m_ = join_field(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

Quad& Quad::operator-=(const Quad& o) {
  m_ = join_field(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

Quad& Quad::operator*=(const Quad& o) {
  const long m = join_field(*this, o);
  Rational a = a_ * o.a_ + Rational(m) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  m_ = m;
  normalize();
  return *this;
}

Quad& Quad::operator/=(const Quad& o) {
  if (o.is_zero()) throw Error(Errc::DIVISION_BY_ZERO, "quadratic division by zero");
  const long m = join_field(*this, o);
  // 1/(a + b sqrt m) = (a - b sqrt m) / (a^2 - m b^2)
  Rational denom = o.a_ * o.a_ - Rational(o.m_) * o.b_ * o.b_;
  Quad inv(o.a_ / denom, -o.b_ / denom, o.m_ == 0 ? m : o.m_);
  return *this *= inv;
}

Quad Quad::conjugate() const {
  Quad q = *this;
  q.b_ = -q.b_;
  return q;
}

double Quad::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(m_));
}

BigInt Quad::floor() const {
  if (is_rational()) return rational_floor(a_);
  // Start from the float estimate, then fix up exactly.
  BigInt k(static_cast<long>(std::floor(to_double())));
  while (*this < Quad(Rational(k))) k -= 1;
  while (*this >= Quad(Rational(k + 1))) k += 1;
  return k;
}

namespace {

// Minimal recursive-descent parser for the lambda/alpha/beta grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)* ('/' integer)?
//   factor := rational | 'sqrt' '(' integer ')' | '(' expr ')'
struct QuadParser {
  const std::string& s;
  size_t i = 0;

  explicit QuadParser(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::PARSE_ERROR, msg + " in '" + s + "' at offset " + std::to_string(i));
  }

  std::string number_token() {
    skip();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected number");
    return s.substr(start, i - start);
  }

  Quad factor() {
    skip();
    if (eat('(')) {
      Quad v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (s.compare(i, 4, "sqrt") == 0) {
      i += 4;
      if (!eat('(')) fail("expected '(' after sqrt");
      std::string num = number_token();
      if (!eat(')')) fail("expected ')' after sqrt radicand");
      long m = std::strtol(num.c_str(), nullptr, 10);
      return Quad::sqrt_of(m);
    }
    return Quad(rational_from_string(number_token()));
  }

  Quad term() {
    Quad v = factor();
    for (;;) {
      skip();
      if (eat('*')) {
        v *= factor();
      } else if (i < s.size() && s[i] == '/') {
        ++i;
        Quad d = factor();
        if (!d.is_rational()) fail("division by a non-rational");
        v /= d;
      } else {
        break;
      }
    }
    return v;
  }

  Quad expr() {
    skip();
    bool neg = eat('-');
    Quad v = term();
    if (neg) v = -v;
    for (;;) {
      skip();
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        break;
      }
    }
    return v;
  }
};

}  // namespace

Quad quad_from_string(const std::string& text) {
  QuadParser p(text);
  Quad v = p.expr();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return v;
}

std::string quad_to_string(const Quad& q) {
  if (q.is_rational()) return rational_to_string(q.a());
  std::string out = rational_to_string(q.a());
  if (sgn(q.b()) >= 0) out += "+";
  out += rational_to_string(q.b()) + "*sqrt(" + std::to_string(q.m()) + ")";
  return out;
}

}  // namespace sgspec
