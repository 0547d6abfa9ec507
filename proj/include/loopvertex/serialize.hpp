#pragma once

#include <json.hpp>

#include "loopvertex/series.hpp"

namespace loopvertex {

// {variables, weights, scale, order, bound, terms:[{exps, coeff}]}
// terms sorted by (degree, exponent vector); bound is "p/q" or null
nlohmann::ordered_json series_to_json(const FracSeries& s);
FracSeries series_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json cyclotomic_to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const nlohmann::ordered_json& j, int order);

}  // namespace loopvertex
