#include "stirlingb/qpoly.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>
#include <utility>

#include "checked.hpp"

namespace stirlingb {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

QPoly::QPoly(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) {
  normalize();
}

QPoly::QPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

QPoly QPoly::constant(std::int64_t c) { return QPoly(std::vector<std::int64_t>{c}); }

QPoly QPoly::monomial(std::int64_t c, std::size_t degree) {
  std::vector<std::int64_t> v(degree + 1, 0);
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t d = 0; d < rhs.coeffs_.size(); ++d)
    coeffs_[d] = checked_add(coeffs_[d], rhs.coeffs_[d], "QPoly addition");
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t d = 0; d < rhs.coeffs_.size(); ++d)
    coeffs_[d] = checked_sub(coeffs_[d], rhs.coeffs_[d], "QPoly subtraction");
  normalize();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& rhs) { return *this = *this * rhs; }

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = checked_sub(0, c, "QPoly negation");
  return r;
}

void QPoly::add_monomial(std::int64_t c, std::size_t degree) {
  if (coeffs_.size() <= degree) coeffs_.resize(degree + 1, 0);
  coeffs_[degree] = checked_add(coeffs_[degree], c, "QPoly addition");
  normalize();
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<std::int64_t> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      const auto term = checked_mul(lhs.coeffs_[i], rhs.coeffs_[j], "QPoly multiplication");
      out[i + j] = checked_add(out[i + j], term, "QPoly multiplication");
    }
  }
  return QPoly(std::move(out));
}

QPoly operator*(std::int64_t c, const QPoly& p) {
  std::vector<std::int64_t> out(p.coeffs_.begin(), p.coeffs_.end());
  for (auto& x : out) x = checked_mul(c, x, "QPoly scalar multiplication");
  return QPoly(std::move(out));
}

std::string QPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    std::int64_t c = coeffs_[d];
    if (c == 0) continue;
    // Magnitude printed as unsigned so INT64_MIN renders correctly.
    const bool negative = c < 0;
    const auto magnitude = negative ? 0 - static_cast<std::uint64_t>(c)
                                    : static_cast<std::uint64_t>(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      os << magnitude;
      continue;
    }
    if (magnitude != 1) os << magnitude << '*';
    os << 'q';
    if (d > 1) os << '^' << d;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

QPoly q_bracket(int n) {
  if (n < 0) throw DomainError("q_bracket: n must be nonnegative");
  return QPoly(std::vector<std::int64_t>(static_cast<std::size_t>(n), 1));
}

QPoly pow(const QPoly& base, unsigned exponent) {
  QPoly result{1};
  QPoly square = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= square;
    exponent >>= 1;
    if (exponent != 0) square *= square;
  }
  return result;
}

QPoly substitute_q_power(const QPoly& p, unsigned e) {
  if (e == 0) throw DomainError("substitute_q_power: exponent must be positive");
  if (p.is_zero()) return {};
  std::size_t top;
  if (__builtin_mul_overflow(static_cast<std::size_t>(p.degree()), std::size_t{e}, &top) ||
      top > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max()))
    throw OverflowError("substitute_q_power");
  std::vector<std::int64_t> out(top + 1, 0);
  const auto c = p.coeffs();
  for (std::size_t d = 0; d < c.size(); ++d) out[d * e] = c[d];
  return QPoly(std::move(out));
}

std::int64_t eval_at_one(const QPoly& p) {
  std::int64_t sum = 0;
  for (auto c : p.coeffs()) sum = checked_add(sum, c, "eval_at_one");
  return sum;
}

// ---------------------------------------------------------------------------

TPoly::TPoly(std::vector<QPoly> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void TPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

TPoly& TPoly::operator+=(const TPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

TPoly operator*(const TPoly& lhs, const TPoly& rhs) {
  if (lhs.coeffs_.empty() || rhs.coeffs_.empty()) return {};
  std::vector<QPoly> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return TPoly(std::move(out));
}

void TPoly::mul_linear(const QPoly& c) {
  // (t + c)·Σ a_k t^k = Σ (a_{k-1} + c·a_k) t^k
  std::vector<QPoly> out(coeffs_.size() + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out[k + 1] += coeffs_[k];
    out[k] += c * coeffs_[k];
  }
  coeffs_ = std::move(out);
  normalize();
}

std::string TPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const QPoly& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << '(' << c << ')';
      continue;
    }
    if (c != QPoly{1}) os << '(' << c << ")*";
    os << 't';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << p.to_string(); }

TPoly expand_linear_factors(std::span<const QPoly> constants) {
  TPoly result = TPoly::one();
  for (const auto& c : constants) result.mul_linear(c);
  return result;
}

}  // namespace stirlingb
