#include "stirnum/serialize.hpp"

#include <stdexcept>
#include <vector>

namespace stirnum {

nlohmann::ordered_json poly_to_json(const Polynomial& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Rational& c : p.coefficients()) arr.push_back(c.str());
  return arr;
}

Polynomial poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("poly_from_json: expected a JSON array");
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string())
      throw std::invalid_argument("poly_from_json: coefficients must be strings");
    coeffs.push_back(Rational::from_string(item.get<std::string>()));
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace stirnum
