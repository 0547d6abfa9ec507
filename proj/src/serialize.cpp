#include "loopvertex/serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace loopvertex {

using json = nlohmann::ordered_json;

json cyclotomic_to_json(const Cyclotomic& c) {
  json arr = json::array();
  for (const auto& s : c.to_strings()) arr.push_back(s);
  return arr;
}

Cyclotomic cyclotomic_from_json(const json& j, int order) {
  std::vector<Rational> v;
  for (const auto& x : j) v.push_back(parse_rational(x.get<std::string>()));
  if (order == 1) {
    if (v.size() > 1) throw std::invalid_argument("rational coefficient with several entries");
    return v.empty() ? Cyclotomic() : Cyclotomic(v[0]);
  }
  if (static_cast<long>(v.size()) != euler_phi(order))
    throw std::invalid_argument("coefficient length does not match field degree");
  return Cyclotomic(order, v);
}

json series_to_json(const FracSeries& s) {
  const VarSet& vs = *s.vars();
  int order = 1;
  for (const auto& [e, c] : s.terms()) order = std::max(order, c.order());
  json j;
  j["variables"] = vs.names();
  j["weights"] = vs.weights();
  j["scale"] = vs.scale();
  j["order"] = order;
  j["bound"] = s.is_exact() ? json(nullptr) : json(rational_to_string(frac(s.bound(), vs.scale())));
  std::vector<std::pair<Degree, Exponents>> keys;
  for (const auto& [e, c] : s.terms()) keys.emplace_back(vs.degree(e), e);
  std::sort(keys.begin(), keys.end());
  json terms = json::array();
  for (const auto& [d, e] : keys) {
    json t;
    json ex = json::object();
    for (int i = 0; i < vs.size(); ++i)
      if (e[i] != 0) ex[vs.names()[i]] = e[i];
    t["exps"] = ex;
    Cyclotomic c = s.coefficient(e);
    // pad rationals to the common field so every entry has one length
    if (order > 1 && c.order() == 1) c = c * Cyclotomic::root_of_unity(order, 1, 0);
    t["coeff"] = cyclotomic_to_json(c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

FracSeries series_from_json(const json& j) {
  auto names = j.at("variables").get<std::vector<std::string>>();
  std::vector<int> weights = j.contains("weights") ? j["weights"].get<std::vector<int>>() : std::vector<int>(names.size(), 1);
  int scale = j.at("scale").get<int>();
  int order = j.value("order", 1);
  auto vars = VarSet::make(names, weights, scale);
  Degree bound = kExact;
  if (j.contains("bound") && !j["bound"].is_null()) {
    Rational b = parse_rational(j["bound"].get<std::string>()) * scale;
    if (b.get_den() != 1) throw std::invalid_argument("bound not on the exponent lattice");
    bound = b.get_num().get_si();
  }
  FracSeries s(vars, bound);
  for (const auto& t : j.at("terms")) {
    Exponents e;
    for (const auto& [name, v] : t.at("exps").items()) e[vars->index(name)] = v.get<std::int32_t>();
    s.add_term(e, cyclotomic_from_json(t.at("coeff"), order));
  }
  return s;
}

}  // namespace loopvertex
