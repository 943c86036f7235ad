#pragma once

// JSON form of DivisorClass. Rationals are always written "num/den".

#include <string>

#include "json.hpp"

#include "qmod/pic_calculus.hpp"

namespace qmod::pic {

inline nlohmann::json coefficient_to_json(const Coefficient& c) {
  return {{"kind", kind_name(c.kind)}, {"value", to_fraction_string(c.value)}};
}

inline Coefficient coefficient_from_json(const nlohmann::json& j) {
  const auto kind = j.at("kind").get<std::string>();
  Rational v = parse_fraction(j.at("value").get<std::string>());
  if (kind == "exact") return Coefficient::exact(std::move(v));
  if (kind == "at_least") return Coefficient::at_least(std::move(v));
  throw DomainError("unknown coefficient kind '" + kind + "'");
}

inline nlohmann::json to_json(const DivisorClass& c) {
  nlohmann::json psi = nlohmann::json::array();
  for (const auto& p : c.psi()) psi.push_back(to_fraction_string(p.value));
  nlohmann::json b = nlohmann::json::array();
  for (const auto& [slot, coeff] : c.boundary()) {
    b.push_back({{"i", slot.i},
                 {"s", slot.s},
                 {"kind", kind_name(coeff.kind)},
                 {"value", to_fraction_string(coeff.value)}});
  }
  return {{"g", c.g()},
          {"n", c.n()},
          {"lambda", to_fraction_string(c.lambda().value)},
          {"psi", std::move(psi)},
          {"b_irr", coefficient_to_json(c.b_irr())},
          {"b", std::move(b)}};
}

inline DivisorClass divisor_class_from_json(const nlohmann::json& j) {
  DivisorClass c(j.at("g").get<int>(), j.at("n").get<int>());
  c.set_lambda(Coefficient::exact(parse_fraction(j.at("lambda").get<std::string>())));
  const auto& psi = j.at("psi");
  if (psi.size() != static_cast<std::size_t>(c.n())) throw DomainError("psi list length must equal n");
  for (int k = 1; k <= c.n(); ++k) {
    c.set_psi(k, Coefficient::exact(parse_fraction(psi[static_cast<std::size_t>(k - 1)].get<std::string>())));
  }
  c.set_b_irr(coefficient_from_json(j.at("b_irr")));
  for (const auto& e : j.at("b")) c.set_b(e.at("i").get<int>(), e.at("s").get<int>(), coefficient_from_json(e));
  return c;
}

}  // namespace qmod::pic
