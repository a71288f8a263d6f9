#include "pentaflag/symbolic.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pentaflag::symbolic {

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- Poly

Poly::Poly(const Rational& constant) : coeffs_{constant} {
  coeffs_[0].canonicalize();
  trim();
}
Poly::Poly(long constant) : coeffs_{Rational(constant)} { trim(); }
Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly Poly::monomial(const Rational& coefficient, std::size_t degree) {
  std::vector<Rational> c(degree + 1);
  c[degree] = coefficient;
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Rational(0); }

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += Poly(*it);
  }
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly out = *this;
  const Rational lc = leading();
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

std::vector<Integer> Poly::integer_coefficients() const {
  Integer l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.emplace_back(c.get_num() * (l / c.get_den()));
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

Poly operator-(Poly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Rational& c = coeffs_[static_cast<std::size_t>(d)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << var;
    if (d > 1) out << '^' << d;
  }
  return out.str();
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly acc(1);
  for (unsigned i = 0; i < exponent; ++i) acc *= base;
  return acc;
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  const Rational& lb = b.leading();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int d = a.degree(); d >= db; --d) {
    const Rational c = rem[static_cast<std::size_t>(d)] / lb;
    quot[static_cast<std::size_t>(d - db)] = c;
    if (sgn(c) == 0) continue;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(d - db + i)] -= c * b.coeff(static_cast<std::size_t>(i));
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Rational cauchy_bound(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("Cauchy bound of the zero polynomial");
  if (p.degree() == 0) return 0;
  Rational m = 0;
  const Rational lc = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(static_cast<std::size_t>(i))) / lc));
  return m + 1;
}

// ---------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).quotient;
    den_ = divmod(den_, g).quotient;
  }
  const Rational lc = den_.leading();
  if (lc != 1) {
    const Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RationalFunction::operator()(const Rational& x) const {
  const Rational d = den_(x);
  if (sgn(d) == 0) throw std::domain_error("rational function evaluated at a pole");
  return num_(x) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational function division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::string RationalFunction::to_string(std::string_view var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

RationalFunction pow(const RationalFunction& base, int exponent) {
  RationalFunction acc(1);
  const RationalFunction factor = exponent >= 0 ? base : RationalFunction(1) / base;
  for (int i = 0; i < std::abs(exponent); ++i) acc *= factor;
  return acc;
}

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, char var) : text_(text), var_(var) {}

  RationalFunction parse() {
    RationalFunction value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                                std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expression() {
    RationalFunction acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        RationalFunction d = unary();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (!accept('^')) return base;
    skip_space();
    bool negative = false;
    if (accept('-')) negative = true;
    skip_space();
    const Integer e = integer_literal();
    if (e > 64) fail("exponent too large");
    const int ei = static_cast<int>(e.get_si());
    if (negative && base.is_zero()) fail("zero to a negative power");
    return pow(base, negative ? -ei : ei);
  }

  Integer integer_literal() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  RationalFunction primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == var_) {
      ++pos_;
      return RationalFunction(Poly::indeterminate());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RationalFunction(Rational(integer_literal()));
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text, char var) {
  return ExpressionParser(text, var).parse();
}

// -------------------------------------------------------------- EpsPoly

EpsPoly::EpsPoly(const RationalFunction& constant) : coeffs_{constant} { trim(); }
EpsPoly::EpsPoly(std::vector<RationalFunction> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void EpsPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RationalFunction EpsPoly::coeff(std::size_t d) const {
  return d < coeffs_.size() ? coeffs_[d] : RationalFunction(0);
}

EpsPoly& EpsPoly::operator+=(const EpsPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

EpsPoly& EpsPoly::operator-=(const EpsPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

EpsPoly& EpsPoly::operator*=(const EpsPoly& rhs) {
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<RationalFunction> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

EpsPoly pow(const EpsPoly& base, unsigned exponent) {
  EpsPoly acc(RationalFunction(1));
  for (unsigned i = 0; i < exponent; ++i) acc *= base;
  return acc;
}

// ------------------------------------------------------------- prover

std::string_view to_string(NonnegVerdict v) {
  switch (v) {
    case NonnegVerdict::holds: return "holds";
    case NonnegVerdict::fails_at: return "fails_at";
    case NonnegVerdict::inconclusive: return "inconclusive";
    case NonnegVerdict::pole_in_range: return "pole_in_range";
  }
  return "?";
}

namespace {

Integer horner(const std::vector<Integer>& c, long x) {
  Integer acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer ceil_of(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

}  // namespace

NonnegProof prove_nonneg_int(const RationalFunction& r, long k0, long sweep_max) {
  NonnegProof proof;
  if (r.is_zero()) {
    proof.verdict = NonnegVerdict::holds;
    proof.tail_bound = 0;
    return proof;
  }
  const Rational bound = std::max(cauchy_bound(r.num()), cauchy_bound(r.den()));
  proof.tail_bound = ceil_of(bound);

  const auto num = r.num().integer_coefficients();
  const auto den = r.den().integer_coefficients();
  // Integer roots of den are >= k0 only below the bound.
  const long pole_limit = proof.tail_bound < sweep_max ? proof.tail_bound.get_si() : sweep_max;
  for (long k = k0; k <= pole_limit; ++k) {
    if (sgn(horner(den, k)) == 0) {
      proof.verdict = NonnegVerdict::pole_in_range;
      proof.witness_k = k;
      return proof;
    }
  }
  for (long k = k0; k <= sweep_max; ++k) {
    const Integer d = horner(den, k);
    const Integer n = horner(num, k);
    if (sgn(n) * sgn(d) < 0) {
      proof.verdict = NonnegVerdict::fails_at;
      proof.witness_k = k;
      proof.witness_value = Rational(n, d);
      proof.witness_value->canonicalize();
      return proof;
    }
  }

  // Beyond the bound neither num nor den has a root, so R has the sign of
  // lc(num) * lc(den) for every k >= bound.
  const Integer first_unswept = std::max<Integer>(Integer(k0), Integer(sweep_max) + 1);
  if (first_unswept < proof.tail_bound) {
    proof.verdict = NonnegVerdict::inconclusive;
    proof.required_sweep = proof.tail_bound - 1;
    return proof;
  }
  if (sgn(r.num().leading()) * sgn(r.den().leading()) > 0) {
    proof.verdict = NonnegVerdict::holds;
    return proof;
  }
  proof.verdict = NonnegVerdict::fails_at;
  const long k = first_unswept.get_si();
  proof.witness_k = k;
  proof.witness_value = r(Rational(k));
  return proof;
}

}  // namespace pentaflag::symbolic
