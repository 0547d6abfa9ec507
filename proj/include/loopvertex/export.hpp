#pragma once

#include <json.hpp>
#include <string>

#include "loopvertex/vertex.hpp"

namespace loopvertex {

// [3,1] style; rejects non-partitions
Partition parse_partition(const nlohmann::ordered_json& j);
// [[1],[],[2]] style, one entry per color
NPartition parse_npartition(const nlohmann::ordered_json& j, int n);
// a flat list is taken as lambda-bar, a nested list as the n-quotient
Partition parse_lambda_bar(const nlohmann::ordered_json& j, int n);
Alpha parse_alpha(const std::string& s);

nlohmann::ordered_json chartable_json(int n, int d);

// every method reports s_lambda itself; jt is divided by its monomial
enum class LoopSchurMethod { ssyt, hook, jt };
LoopSchurMethod parse_method(const std::string& s);
nlohmann::ordered_json loopschur_json(const Partition& bar, int n, LoopSchurMethod method, long degree);

// expanded to the given degree, monomial prefactor split off
nlohmann::ordered_json dt_vertex_json(const Partition& rho_plus, const Partition& rho_minus, const NPartition& lambda,
                                      Alpha alpha, const Framing& w, long degree);
nlohmann::ordered_json gw_vertex_json(const Partition& tau_plus, const Partition& tau_minus, Alpha alpha, int n,
                                      long degree);

}  // namespace loopvertex
