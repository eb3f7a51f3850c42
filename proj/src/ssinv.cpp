#include "stirlingb/ssinv.hpp"

#include <algorithm>
#include <cstdlib>

#include "stirlingb/errors.hpp"
#include "text.hpp"

namespace stirlingb {

namespace {

std::vector<int> negated(const std::vector<int>& v) {
  std::vector<int> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](int x) { return -x; });
  return out;
}

[[noreturn]] void malformed(const std::string& why) {
  throw ValidationError("malformed Sagan-Swanson form: " + why);
}

}  // namespace

int SSUnit::min_abs() const {
  int m = 0;
  for (int x : first_half)
    if (m == 0 || std::abs(x) < m) m = std::abs(x);
  return m;
}

SSForm ss_standard_form(const SignedPermutation& p) {
  SSForm form;
  for (const auto& cyc : cycle_decompose(p).cycles) {
    const auto& e = cyc.elements;
    const int m = e.front();
    SSUnit unit;
    unit.kind = cyc.kind;
    if (cyc.kind == CycleKind::Split) {
      // -c rotated to end in -m, then c rotated to end in m.
      for (std::size_t l = 1; l < e.size(); ++l) unit.first_half.push_back(-e[l]);
      unit.first_half.push_back(-m);
    } else {
      // Full orbit e, -e rotated to end in -m.
      std::vector<int> full;
      for (std::size_t l = 1; l < e.size(); ++l) full.push_back(-e[l]);
      full.insert(full.end(), e.begin(), e.end());
      full.push_back(-m);
      unit.first_half.assign(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(e.size()));
    }
    unit.second_half = negated(unit.first_half);
    form.units.push_back(std::move(unit));
  }
  return form;
}

SignedPermutation ss_to_perm(const SSForm& form) {
  int n = 0;
  for (const auto& u : form.units) n += static_cast<int>(u.first_half.size());
  std::vector<int> window(static_cast<std::size_t>(n), 0);
  auto close_cycle = [&](const std::vector<int>& c) {
    for (std::size_t l = 0; l < c.size(); ++l) {
      const int x = c[l];
      const int y = c[(l + 1) % c.size()];
      if (x == 0 || std::abs(x) > n) malformed("entry out of range");
      if (x > 0) {
        if (window[static_cast<std::size_t>(x - 1)] != 0) malformed("repeated entry");
        window[static_cast<std::size_t>(x - 1)] = y;
      }
    }
  };
  for (const auto& u : form.units) {
    if (u.first_half.empty() || u.second_half != negated(u.first_half))
      malformed("halves are not negations of each other");
    if (u.kind == CycleKind::Split) {
      close_cycle(u.first_half);
      close_cycle(u.second_half);
    } else {
      std::vector<int> full = u.first_half;
      full.insert(full.end(), u.second_half.begin(), u.second_half.end());
      close_cycle(full);
    }
  }
  return SignedPermutation(std::move(window));
}

std::vector<int> ss_word(const SSForm& form) {
  std::vector<int> w;
  for (const auto& u : form.units) {
    w.insert(w.end(), u.first_half.begin(), u.first_half.end());
    w.insert(w.end(), u.second_half.begin(), u.second_half.end());
  }
  return w;
}

std::vector<int> ss_word(const SignedPermutation& p) { return ss_word(ss_standard_form(p)); }

int ss_inv(const SSForm& form) {
  const auto w = ss_word(form);
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > std::abs(w[j])) ++count;
  return count;
}

int ss_inv(const SignedPermutation& p) { return ss_inv(ss_standard_form(p)); }

std::vector<int> shortened_form(const SSForm& form) {
  std::vector<int> sigma;
  for (const auto& u : form.units) sigma.insert(sigma.end(), u.first_half.begin(), u.first_half.end());
  return sigma;
}

std::vector<int> shortened_form(const SignedPermutation& p) {
  return shortened_form(ss_standard_form(p));
}

std::vector<int> abs_form(const std::vector<int>& sigma) {
  std::vector<int> out(sigma.size());
  std::transform(sigma.begin(), sigma.end(), out.begin(), [](int x) { return std::abs(x); });
  return out;
}

FlagParts flag_parts(const SSForm& form) {
  std::vector<int> sigma;
  std::vector<std::size_t> unit_of;
  for (std::size_t u = 0; u < form.units.size(); ++u)
    for (int x : form.units[u].first_half) {
      sigma.push_back(x);
      unit_of.push_back(u);
    }
  FlagParts parts;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j) {
      const bool same = unit_of[i] == unit_of[j];
      const bool abs_descent = std::abs(sigma[i]) > std::abs(sigma[j]);
      if (abs_descent && !same) ++parts.a;
      if (abs_descent && same && sigma[i] > 0) ++parts.b;
      if (abs_descent && same && sigma[i] < 0) ++parts.c;
      if (same && sigma[i] < sigma[j] && !abs_descent) ++parts.d;
    }
  return parts;
}

FlagParts flag_parts(const SignedPermutation& p) { return flag_parts(ss_standard_form(p)); }

std::string to_string(const SSForm& form) {
  std::string out;
  for (const auto& u : form.units) {
    if (u.kind == CycleKind::Split) {
      out += "(" + detail::join_ints(u.first_half) + ")";
      out += "(" + detail::join_ints(u.second_half) + ")";
    } else {
      out += "(" + detail::join_ints(u.first_half) + "," + detail::join_ints(u.second_half) + ")";
    }
  }
  return out;
}

}  // namespace stirlingb
