#pragma once

// Exact univariate arithmetic in the indeterminate k: rationals, dense
// polynomials, rational functions, polynomials in a second variable (eps)
// with rational-function coefficients, and a nonnegativity prover for
// integer arguments.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pentaflag::symbolic {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Rational& q);

/// Dense polynomial with rational coefficients; index = degree.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant);             // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coefficients);

  static Poly monomial(const Rational& coefficient, std::size_t degree);
  static Poly indeterminate() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t d) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  Poly compose(const Poly& inner) const;
  Poly monic() const;

  /// Smallest positive integer multiple with integer coefficients; the
  /// returned vector has the same signs as the coefficients.
  std::vector<Integer> integer_coefficients() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& rhs);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Renders as "5*k^7 - 35*k^6 + 75*k^5 - 48*k^4".
  std::string to_string(std::string_view var = "k") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Poly pow(const Poly& base, unsigned exponent);
/// Throws std::domain_error for a negative exponent.
inline Poly pow(const Poly& base, int exponent) {
  if (exponent < 0) throw std::domain_error("negative exponent of a polynomial");
  return pow(base, static_cast<unsigned>(exponent));
}

/// Euclidean division over Q. Throws std::domain_error on a zero divisor.
struct DivMod {
  Poly quotient;
  Poly remainder;
};
DivMod divmod(const Poly& a, const Poly& b);

/// Monic gcd (zero if both are zero).
Poly gcd(Poly a, Poly b);

/// 1 + max |a_i / a_d| over i < d; 0 for nonzero constants. Every real
/// root lies strictly inside this bound. Throws on the zero polynomial.
Rational cauchy_bound(const Poly& p);

/// num/den in lowest terms with a monic denominator, so equality is
/// structural.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(long c) : num_(c), den_(1) {}             // NOLINT
  RationalFunction(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RationalFunction(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Throws std::domain_error when the denominator vanishes at x.
  Rational operator()(const Rational& x) const;

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a) { return RationalFunction(-a.num_, a.den_); }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "(num) / (den)", or just the numerator for polynomials.
  std::string to_string(std::string_view var = "k") const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

RationalFunction pow(const RationalFunction& base, int exponent);

/// Parses +, -, *, /, ^ (integer exponents), parentheses, integer
/// literals and the variable `var`, evaluating exactly. Throws
/// std::invalid_argument on malformed input.
RationalFunction parse_rational_function(std::string_view text, char var = 'k');

/// Polynomial in eps whose coefficients are rational functions of k.
class EpsPoly {
 public:
  EpsPoly() = default;
  EpsPoly(const RationalFunction& constant);  // NOLINT
  explicit EpsPoly(std::vector<RationalFunction> coefficients);
  static EpsPoly eps() { return EpsPoly({RationalFunction(0), RationalFunction(1)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  RationalFunction coeff(std::size_t d) const;
  /// Coefficients of eps^0 .. eps^degree (the collected form).
  const std::vector<RationalFunction>& collect() const { return coeffs_; }

  EpsPoly& operator+=(const EpsPoly& rhs);
  EpsPoly& operator-=(const EpsPoly& rhs);
  EpsPoly& operator*=(const EpsPoly& rhs);

  friend EpsPoly operator+(EpsPoly a, const EpsPoly& b) { return a += b; }
  friend EpsPoly operator-(EpsPoly a, const EpsPoly& b) { return a -= b; }
  friend EpsPoly operator*(EpsPoly a, const EpsPoly& b) { return a *= b; }
  friend bool operator==(const EpsPoly& a, const EpsPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<RationalFunction> coeffs_;
};

EpsPoly pow(const EpsPoly& base, unsigned exponent);

enum class NonnegVerdict { holds, fails_at, inconclusive, pole_in_range };

std::string_view to_string(NonnegVerdict v);

struct NonnegProof {
  NonnegVerdict verdict = NonnegVerdict::inconclusive;
  /// fails_at: first integer with R(k) < 0; pole_in_range: the root of den.
  std::optional<long> witness_k;
  std::optional<Rational> witness_value;
  /// Integer Cauchy bound the tail argument starts from.
  Integer tail_bound;
  /// inconclusive: the smallest sweep_max that would decide the claim.
  std::optional<Integer> required_sweep;
};

/// Decides R(k) >= 0 for all integers k >= k0: exact evaluation on
/// [k0, sweep_max], then the Cauchy bound of num and den plus the leading
/// coefficient sign for everything beyond.
NonnegProof prove_nonneg_int(const RationalFunction& r, long k0, long sweep_max = 1000);

}  // namespace pentaflag::symbolic
