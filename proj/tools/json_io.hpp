#pragma once

#include <json.hpp>

#include "stirlingb/qpoly.hpp"
#include "stirlingb/rg1.hpp"
#include "stirlingb/ssinv.hpp"

namespace stirlingb {

inline void to_json(nlohmann::ordered_json& j, const QPoly& p) {
  j = nlohmann::ordered_json{{"coeffs", std::vector<std::int64_t>(p.coeffs().begin(), p.coeffs().end())}};
}

inline void to_json(nlohmann::ordered_json& j, const TPoly& p) {
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c);
  j = nlohmann::ordered_json{{"t_coeffs", std::move(coeffs)}};
}

inline void to_json(nlohmann::ordered_json& j, const FirstKindStats& s) {
  j = nlohmann::ordered_json{{"inv_B", s.inv_B}, {"neg", s.neg},     {"nl", s.nl},
                     {"finv", s.finv},   {"sfinv", s.sfinv}, {"k", s.k}};
}

inline void to_json(nlohmann::ordered_json& j, const FlagParts& f) {
  j = nlohmann::ordered_json{{"p_A", f.a}, {"p_B", f.b}, {"p_C", f.c}, {"p_D", f.d}};
}

}  // namespace stirlingb
