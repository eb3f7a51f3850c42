#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace stirlingb {

/// Exact polynomial in q with signed 64-bit coefficients, stored densely in
/// ascending degree. The zero polynomial has no coefficients, and there is
/// never a trailing zero. Every operation that would overflow a coefficient
/// throws OverflowError instead of wrapping.
class QPoly {
public:
  QPoly() = default;
  QPoly(std::initializer_list<std::int64_t> coeffs);
  explicit QPoly(std::vector<std::int64_t> coeffs);

  static QPoly constant(std::int64_t c);
  static QPoly monomial(std::int64_t c, std::size_t degree);

  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::int64_t degree() const noexcept {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  /// Coefficient of q^d (zero beyond the degree).
  std::int64_t operator[](std::size_t d) const noexcept {
    return d < coeffs_.size() ? coeffs_[d] : 0;
  }

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  QPoly operator-() const;

  /// Adds c·q^d in place; used by enumeration loops to accumulate monomials.
  void add_monomial(std::int64_t c, std::size_t degree);

  friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
  friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
  friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);
  friend QPoly operator*(std::int64_t c, const QPoly& p);
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Renders as "c0 + c1*q + c2*q^2", dropping zero terms and unit
  /// coefficients; "0" for the zero polynomial.
  std::string to_string() const;

private:
  void normalize();

  std::vector<std::int64_t> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

/// [n]_q = 1 + q + ... + q^(n-1); the zero polynomial for n = 0.
QPoly q_bracket(int n);

QPoly pow(const QPoly& base, unsigned exponent);

/// p(q^e): the coefficient of q^d moves to q^(d·e).
QPoly substitute_q_power(const QPoly& p, unsigned e);

/// p(1), the sum of the coefficients.
std::int64_t eval_at_one(const QPoly& p);

/// Polynomial in t whose coefficients are QPolys, ascending degree in t.
class TPoly {
public:
  TPoly() = default;
  explicit TPoly(std::vector<QPoly> coeffs);

  static TPoly one() { return TPoly({QPoly{1}}); }

  std::span<const QPoly> coeffs() const noexcept { return coeffs_; }
  std::int64_t degree() const noexcept {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  /// Coefficient of t^k (zero beyond the degree).
  QPoly operator[](std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : QPoly{};
  }

  TPoly& operator+=(const TPoly& rhs);
  friend TPoly operator+(TPoly lhs, const TPoly& rhs) { return lhs += rhs; }
  friend TPoly operator*(const TPoly& lhs, const TPoly& rhs);
  friend bool operator==(const TPoly&, const TPoly&) = default;

  /// Multiplies in place by (t + c).
  void mul_linear(const QPoly& c);

  std::string to_string() const;

private:
  void normalize();

  std::vector<QPoly> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const TPoly& p);

/// Expands (t + c_1)(t + c_2)...(t + c_m). The empty product is 1.
TPoly expand_linear_factors(std::span<const QPoly> constants);

}  // namespace stirlingb
