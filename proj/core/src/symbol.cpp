#include "hardycomp/symbol.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

namespace hardycomp {

// ---------------------------------------------------------------------------
// RationalFn

Complex RationalFn::eval(Complex z) const {
  const Complex p = poly_eval(num, z);
  const Complex q = poly_eval(den, z);
  if (std::abs(q) == 0.0) throw NumericError("rational evaluation hit a denominator zero");
  return p / q;
}

int RationalFn::degree() const {
  return std::max(poly_degree(num), poly_degree(den));
}

void RationalFn::normalize() {
  poly_trim(num);
  poly_trim(den);
  // Scale so the largest denominator coefficient is 1.
  const double m = poly_max_mag(den);
  if (m > 0.0 && std::abs(m - 1.0) > 1e-3) {
    for (auto& c : num) c /= m;
    for (auto& c : den) c /= m;
  }
}

RationalFn RationalFn::compose(const RationalFn& outer, const RationalFn& inner) {
  const int d = std::max(poly_degree(outer.num), poly_degree(outer.den));
  // Powers of inner.num and inner.den up to d.
  std::vector<Poly> np(d + 1), dp(d + 1);
  np[0] = {Complex(1.0)};
  dp[0] = {Complex(1.0)};
  for (int k = 1; k <= d; ++k) {
    np[k] = poly_mul(np[k - 1], inner.num);
    dp[k] = poly_mul(dp[k - 1], inner.den);
  }
  RationalFn out;
  out.num = {Complex(0.0)};
  out.den = {Complex(0.0)};
  for (int k = 0; k <= d; ++k) {
    const Poly basis = poly_mul(np[k], dp[d - k]);
    if (k < static_cast<int>(outer.num.size()) && outer.num[k] != Complex(0.0)) {
      out.num = poly_add(out.num, poly_scale(basis, outer.num[k]));
    }
    if (k < static_cast<int>(outer.den.size()) && outer.den[k] != Complex(0.0)) {
      out.den = poly_add(out.den, poly_scale(basis, outer.den[k]));
    }
  }
  out.normalize();
  return out;
}

// ---------------------------------------------------------------------------
// Formatting

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_complex(Complex c) {
  if (c.imag() == 0.0) return format_real(c.real());
  std::string s = format_real(c.real());
  s += (c.imag() < 0.0) ? "-" : "+";
  s += format_real(std::abs(c.imag()));
  s += "i";
  return s;
}

namespace {

std::string join_complex(const std::vector<Complex>& cs) {
  std::string s;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) s += ",";
    s += format_complex(cs[i]);
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Factories

Symbol Symbol::identity() {
  Symbol s;
  s.text_ = "identity";
  s.rat_.num = {Complex(0.0), Complex(1.0)};
  s.finalize();
  return s;
}

Symbol Symbol::half_plus() {
  Symbol s;
  s.text_ = "half_plus";
  s.rat_.num = {Complex(0.5), Complex(0.5)};
  s.finalize();
  return s;
}

Symbol Symbol::power(int n) {
  if (n < 1) throw DomainError("power exponent must be a positive integer");
  if (n > 2048) throw DomainError("power exponent exceeds the degree cap");
  Symbol s;
  s.text_ = "power(" + std::to_string(n) + ")";
  s.rat_.num.assign(n + 1, Complex(0.0));
  s.rat_.num[n] = 1.0;
  s.finalize();
  return s;
}

Symbol Symbol::dilation(double r) {
  if (std::abs(r) > 1.0) throw DomainError("dilation factor must satisfy |r| <= 1");
  Symbol s;
  s.text_ = "dilation(" + format_real(r) + ")";
  if (r == 0.0) {
    s.rat_.num = {Complex(0.0)};
    s.constant_ = true;
    s.constant_value_ = 0.0;
  } else {
    s.rat_.num = {Complex(0.0), Complex(r)};
  }
  s.finalize();
  return s;
}

Symbol Symbol::rotation(double theta) {
  Symbol s;
  s.text_ = "rot(" + format_real(theta) + ")";
  s.rat_.num = {Complex(0.0), unit_at(theta)};
  s.finalize();
  return s;
}

Symbol Symbol::constant(Complex c) {
  if (std::abs(c) >= 1.0) {
    throw DomainError("constant symbol must map into the open disk (|c| < 1)");
  }
  Symbol s;
  s.text_ = "const(" + format_complex(c) + ")";
  s.rat_.num = {c};
  s.constant_ = true;
  s.constant_value_ = c;
  s.finalize();
  return s;
}

Symbol Symbol::poly(std::vector<Complex> coeffs) {
  if (coeffs.empty()) throw DomainError("poly needs at least one coefficient");
  Symbol s;
  s.text_ = "poly(" + join_complex(coeffs) + ")";
  s.rat_.num = std::move(coeffs);
  poly_trim(s.rat_.num, 0.0);
  if (poly_degree(s.rat_.num) == 0) {
    s.constant_ = true;
    s.constant_value_ = s.rat_.num.empty() ? Complex(0.0) : s.rat_.num[0];
    if (std::abs(s.constant_value_) >= 1.0) {
      throw DomainError("constant symbol must map into the open disk (|c| < 1)");
    }
  }
  s.finalize();
  return s;
}

Symbol Symbol::mobius(Complex a) {
  if (std::abs(a) >= 1.0) throw DomainError("mobius parameter must satisfy |a| < 1");
  Symbol s;
  s.text_ = "mobius(" + format_complex(a) + ")";
  s.rat_.num = {a, Complex(-1.0)};
  s.rat_.den = {Complex(1.0), -std::conj(a)};
  s.finalize();
  return s;
}

Symbol Symbol::blaschke(std::vector<Complex> zeros) {
  if (zeros.empty()) throw DomainError("blaschke needs at least one zero");
  for (const auto& a : zeros) {
    if (std::abs(a) >= 1.0) throw DomainError("blaschke parameters must satisfy |a| < 1");
  }
  Symbol s;
  s.text_ = "blaschke(" + join_complex(zeros) + ")";
  s.rat_.num = {Complex(1.0)};
  s.rat_.den = {Complex(1.0)};
  for (const auto& a : zeros) {
    const Poly fn{a, Complex(-1.0)};
    const Poly fd{Complex(1.0), -std::conj(a)};
    s.rat_.num = poly_mul(s.rat_.num, fn);
    s.rat_.den = poly_mul(s.rat_.den, fd);
  }
  s.finalize();
  return s;
}

Symbol Symbol::compose(const Symbol& outer, const Symbol& inner) {
  Symbol s;
  s.text_ = "compose(" + outer.text_ + "," + inner.text_ + ")";
  if (outer.degree() * std::max(1, inner.degree()) > 2048) {
    throw DomainError("composed degree exceeds the degree cap");
  }
  if (inner.constant_) {
    s.constant_ = true;
    s.constant_value_ = outer.eval(inner.constant_value_);
    s.rat_.num = {s.constant_value_};
  } else if (outer.constant_) {
    s.constant_ = true;
    s.constant_value_ = outer.constant_value_;
    s.rat_.num = {s.constant_value_};
  } else {
    s.rat_ = RationalFn::compose(outer.rat_, inner.rat_);
  }
  s.closed_disk_ = outer.closed_disk_ && inner.closed_disk_;
  s.finalize();
  return s;
}

// ---------------------------------------------------------------------------
// Validation and evaluation

void Symbol::finalize() {
  rat_.normalize();
  if (constant_ && std::abs(constant_value_) >= 1.0) {
    throw DomainError("constant symbol must map into the open disk (|c| < 1)");
  }
  double max_mod = 0.0;
  for (int j = 0; j < kValidationNodes; ++j) {
    const double theta = kTwoPi * j / kValidationNodes;
    max_mod = std::max(max_mod, std::abs(rat_.eval(unit_at(theta))));
    if (!std::isfinite(max_mod)) break;
  }
  validation_max_ = max_mod;
  if (!std::isfinite(max_mod) || max_mod > 1.0 + kSelfMapTol) {
    throw DomainError("self-map violation: boundary modulus reaches " +
                      format_real(max_mod) + " for " + text_);
  }
}

Complex Symbol::eval(Complex z) const {
  const double r = std::abs(z);
  if (r > 1.0 + kSelfMapTol) {
    throw DomainError("evaluation point lies outside the closed disk");
  }
  if (!closed_disk_ && r >= 1.0 - 1e-14) {
    throw DomainError("boundary trace required: map not declared holomorphic on the closed disk");
  }
  if (constant_) return constant_value_;
  return rat_.eval(z);
}

Complex Symbol::boundary_trace(double theta) const {
  if (closed_disk_) return rat_.eval(unit_at(theta));
  throw DomainError("boundary trace requires a radius ladder for this map");
}

Complex Symbol::boundary_trace(double theta, std::span<const double> ladder,
                               double tol) const {
  if (closed_disk_) return rat_.eval(unit_at(theta));
  if (ladder.size() < 2) throw DomainError("radius ladder needs at least two rungs");
  const Complex dir = unit_at(theta);
  Complex prev = rat_.eval(ladder[0] * dir);
  for (std::size_t k = 1; k < ladder.size(); ++k) {
    if (!(ladder[k] > ladder[k - 1]) || ladder[k] >= 1.0) {
      throw DomainError("radius ladder must increase strictly below 1");
    }
    const Complex cur = rat_.eval(ladder[k] * dir);
    if (std::abs(cur - prev) < tol) return cur;
    prev = cur;
  }
  throw NumericError("radial limit undetected at theta=" + format_real(theta));
}

Complex Symbol::constant_value() const {
  if (!constant_) throw DomainError("symbol is not constant");
  return constant_value_;
}

Symbol Symbol::rotated(double angle) const {
  return compose(rotation(angle), *this);
}

Symbol Symbol::recentered() const {
  const Complex center = constant_ ? constant_value_ : rat_.eval(Complex(0.0));
  if (std::abs(center) < 1e-14) return *this;
  return compose(mobius(center), *this);
}

Symbol Symbol::assume_open_disk_only() const {
  Symbol s = *this;
  s.closed_disk_ = false;
  return s;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Symbol run() {
    Symbol s = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after expression");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) fail("expected a symbol name");
    return std::string(text_.substr(start, pos_ - start));
  }

  double real() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
    std::size_t digits = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_, ++digits;
    }
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_, ++digits;
      }
    }
    if (digits == 0) fail("expected a number");
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      std::size_t ed = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_, ++ed;
      }
      if (ed == 0) pos_ = mark;  // 'e' belonged to something else
    }
    return std::stod(std::string(text_.substr(start, pos_ - start)));
  }

  int integer() {
    const double v = real();
    const int n = static_cast<int>(std::lround(v));
    if (v != static_cast<double>(n)) fail("expected an integer");
    return n;
  }

  Complex complex_lit() {
    const double re = real();
    skip_ws();
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      const double sign = text_[pos_] == '-' ? -1.0 : 1.0;
      ++pos_;
      const double im = real();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != 'i') fail("expected 'i' after imaginary part");
      ++pos_;
      return {re, sign * im};
    }
    return {re, 0.0};
  }

  std::vector<Complex> complex_list() {
    std::vector<Complex> out;
    out.push_back(complex_lit());
    while (peek_is(',')) {
      expect(',');
      out.push_back(complex_lit());
    }
    return out;
  }

  Symbol parse_expr() {
    const std::size_t at = pos_;
    const std::string name = ident();
    try {
      if (name == "identity") return Symbol::identity();
      if (name == "half_plus") return Symbol::half_plus();
      if (name == "power") {
        expect('(');
        const int n = integer();
        expect(')');
        return Symbol::power(n);
      }
      if (name == "dilation") {
        expect('(');
        const double r = real();
        expect(')');
        return Symbol::dilation(r);
      }
      if (name == "rot") {
        expect('(');
        const double t = real();
        expect(')');
        return Symbol::rotation(t);
      }
      if (name == "const") {
        expect('(');
        const Complex c = complex_lit();
        expect(')');
        return Symbol::constant(c);
      }
      if (name == "poly") {
        expect('(');
        auto cs = complex_list();
        expect(')');
        return Symbol::poly(std::move(cs));
      }
      if (name == "mobius") {
        expect('(');
        const Complex a = complex_lit();
        expect(')');
        return Symbol::mobius(a);
      }
      if (name == "blaschke") {
        expect('(');
        auto as = complex_list();
        expect(')');
        return Symbol::blaschke(std::move(as));
      }
      if (name == "compose") {
        expect('(');
        Symbol outer = parse_expr();
        expect(',');
        Symbol inner = parse_expr();
        expect(')');
        return Symbol::compose(outer, inner);
      }
    } catch (const DomainError& e) {
      throw ParseError(e.what(), at);
    }
    throw ParseError("unknown symbol '" + name + "'", at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Symbol Symbol::parse(std::string_view text) {
  return Parser(text).run();
}

}  // namespace hardycomp
