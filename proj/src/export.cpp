#include "loopvertex/export.hpp"

#include <sstream>
#include <stdexcept>

#include "loopvertex/serialize.hpp"

namespace loopvertex {

using json = nlohmann::ordered_json;

Partition parse_partition(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
  std::vector<int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<int>() <= 0) throw std::invalid_argument("partition parts must be positive integers");
    v.push_back(x.get<int>());
  }
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) throw std::invalid_argument("partition parts must be nonincreasing");
  return Partition(v);
}

NPartition parse_npartition(const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw std::invalid_argument("n-partition must be an array of " + std::to_string(n) + " partitions");
  std::vector<Partition> c;
  for (const auto& x : j) c.push_back(parse_partition(x));
  return NPartition(c);
}

Partition parse_lambda_bar(const json& j, int n) {
  if (j.is_array() && !j.empty() && j[0].is_array()) return n_quotient_inverse(parse_npartition(j, n));
  Partition p = parse_partition(j);
  if (!n_quotient(p, n).core.empty()) throw std::invalid_argument("lambda-bar must have empty n-core");
  return p;
}

Alpha parse_alpha(const std::string& s) {
  std::stringstream ss(s);
  std::string a, b, extra;
  if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || std::getline(ss, extra, ','))
    throw std::invalid_argument("alpha must be two signs, e.g. 1,-1");
  auto sign = [](const std::string& t) {
    if (t == "1" || t == "+1" || t == "+") return 1;
    if (t == "-1" || t == "-") return -1;
    throw std::invalid_argument("alpha entries must be +1 or -1");
  };
  return {sign(a), sign(b)};
}

static json npartition_json(const NPartition& l) {
  json a = json::array();
  for (const auto& c : l.components()) a.push_back(c.parts());
  return a;
}

json chartable_json(int n, int d) {
  const auto& t = char_table(n, d);
  json j;
  j["n"] = n;
  j["d"] = d;
  j["order"] = n == 1 ? 1 : ambient_order(n);
  json irr = json::array(), cls = json::array(), vals = json::array();
  for (const auto& l : t.irreps) irr.push_back(npartition_json(l));
  for (const auto& m : t.classes) cls.push_back(npartition_json(m));
  for (const auto& row : t.values) {
    json r = json::array();
    for (const auto& v : row) {
      Cyclotomic c = v;
      if (n > 1 && c.order() == 1) c = c * Cyclotomic::root_of_unity(ambient_order(n), 1, 0);
      r.push_back(cyclotomic_to_json(c));
    }
    vals.push_back(r);
  }
  j["irreps"] = irr;
  j["classes"] = cls;
  j["values"] = vals;
  return j;
}

LoopSchurMethod parse_method(const std::string& s) {
  if (s == "ssyt") return LoopSchurMethod::ssyt;
  if (s == "hook") return LoopSchurMethod::hook;
  if (s == "jt") return LoopSchurMethod::jt;
  throw std::invalid_argument("method must be ssyt, hook or jt");
}

json loopschur_json(const Partition& bar, int n, LoopSchurMethod method, long degree) {
  const Degree B = qdeg(n, degree);
  FracSeries s;
  std::string name;
  switch (method) {
    case LoopSchurMethod::ssyt:
      s = ssyt_loop_schur(bar, n, B);
      name = "ssyt";
      break;
    case LoopSchurMethod::hook:
      s = hook_content_loop_schur(bar, n, B);
      name = "hook";
      break;
    case LoopSchurMethod::jt: {
      const Exponents hat = hat_prefactor(bar, n);
      s = loop_jacobi_trudi(bar, n, bar.length(), B + q_vars(n)->degree(hat)).shifted(-hat);
      name = "jt";
      break;
    }
  }
  json j;
  j["n"] = n;
  j["lambda_bar"] = bar.parts();
  j["lambda"] = npartition_json(n_quotient(bar, n).quotient);
  j["method"] = name;
  j["degree"] = degree;
  j["series"] = series_to_json(s);
  return j;
}

static json prefactor_json(const Exponents& e, const VarSetPtr& vars) {
  json p = json::object();
  for (int i = 0; i < vars->size(); ++i)
    if (e[i] != 0) p[vars->names()[i]] = e[i];
  return p;
}

json dt_vertex_json(const Partition& rp, const Partition& rm, const NPartition& lambda, Alpha alpha, const Framing& w,
                    long degree) {
  const int n = lambda.n();
  Normalized v = normalize(dt_vertex_framed(rp, rm, lambda, alpha, w).expand(qdeg(n, degree)));
  json j;
  j["kind"] = "dt-vertex";
  j["n"] = n;
  j["rho_plus"] = rp.parts();
  j["rho_minus"] = rm.parts();
  j["lambda"] = npartition_json(lambda);
  j["alpha"] = {alpha.plus, alpha.minus};
  j["w"] = w.to_string();
  j["degree"] = degree;
  j["prefactor"] = prefactor_json(v.prefactor, q_vars(n));
  j["series"] = series_to_json(v.series);
  return j;
}

json gw_vertex_json(const Partition& tp, const Partition& tm, Alpha alpha, int n, long degree) {
  Normalized v = normalize(gw_sym_vertex_ws(tp, tm, alpha, n, qdeg(n, degree)));
  json j;
  j["kind"] = "gw-vertex-ws";
  j["n"] = n;
  j["tau_plus"] = tp.parts();
  j["tau_minus"] = tm.parts();
  j["alpha"] = {alpha.plus, alpha.minus};
  j["degree"] = degree;
  j["prefactor"] = prefactor_json(v.prefactor, xu_vars(n));
  j["series"] = series_to_json(v.series);
  return j;
}

}  // namespace loopvertex
