#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "loopvertex/export.hpp"
#include "loopvertex/serialize.hpp"
#include "loopvertex/verifier.hpp"

using namespace loopvertex;
using json = nlohmann::ordered_json;

namespace {

json parse_json_arg(const std::string& s, const char* what) {
  try {
    return json::parse(s);
  } catch (const json::parse_error&) {
    throw std::invalid_argument(std::string(what) + " is not valid JSON: " + s);
  }
}

void print_vertex(const json& j, bool as_json) {
  if (as_json) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  FracSeries s = series_from_json(j["series"]);
  Exponents e;
  for (const auto& [k, v] : j["prefactor"].items()) e[s.vars()->index(k)] = v.get<std::int32_t>();
  if (!e.is_zero()) std::cout << s.monomial_to_string(e) << " * ";
  std::cout << "(" << s.to_string() << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"loop Schur functions, wreath characters and the orbifold vertex"};
  app.require_subcommand(1);

  int n = 1, d = 1;
  long degree = 6;
  std::string format = "json";
  auto* ct = app.add_subcommand("chartable", "character table of S_d or Z_n wr S_d");
  ct->add_option("--n", n)->required()->check(CLI::Range(1, 6));
  ct->add_option("--d", d)->required()->check(CLI::Range(0, 8));
  ct->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  std::string lambda_s = "[]", method = "ssyt";
  auto* ls = app.add_subcommand("loopschur", "loop Schur function s_lambda(q), truncated");
  ls->add_option("--n", n)->required()->check(CLI::Range(1, 6));
  ls->add_option("--lambda", lambda_s, "lambda-bar as [3,1] or the quotient as [[1],[]]")->required();
  ls->add_option("--method", method)->check(CLI::IsMember({"ssyt", "hook", "jt"}));
  ls->add_option("--degree", degree)->check(CLI::Range(0, 40));

  std::string rp_s = "[]", rm_s = "[]", dt_lambda = "", alpha_s = "1,1", w_s = "";
  bool as_json = false;
  auto* dt = app.add_subcommand("dt-vertex", "framed DT vertex expanded in q");
  dt->add_option("--n", n)->required()->check(CLI::Range(1, 6));
  dt->add_option("--rho-plus", rp_s);
  dt->add_option("--rho-minus", rm_s);
  dt->add_option("--lambda", dt_lambda, "n-quotient, e.g. [[1],[]]; default empty");
  dt->add_option("--alpha", alpha_s);
  dt->add_option("--w", w_s, "framing weights a,b,c summing to 0; default w_s = 1/n,-1/n,0");
  dt->add_option("--degree", degree)->check(CLI::Range(0, 40));
  dt->add_flag("--json", as_json);

  std::string tp_s = "[]", tm_s = "[]";
  auto* gw = app.add_subcommand("gw-vertex-ws", "GW vertex at the symmetric weight, in (x, u)");
  gw->add_option("--n", n)->required()->check(CLI::Range(1, 6));
  gw->add_option("--tau-plus", tp_s);
  gw->add_option("--tau-minus", tm_s);
  gw->add_option("--alpha", alpha_s);
  gw->add_option("--degree", degree)->check(CLI::Range(0, 40));
  gw->add_flag("--json", as_json);

  std::string suite, config_path, out_path;
  int threads = 0;
  bool quiet = false;
  auto* vf = app.add_subcommand("verify", "run identity sweeps; exit 0 pass, 1 fail, 2 config error");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  vf->add_option("suite", suite)->required()->check(CLI::IsMember(choices));
  vf->add_option("--config", config_path, "JSON sweep parameters; suites not listed are skipped");
  vf->add_option("--json", out_path, "write the report here");
  vf->add_option("--threads", threads);
  vf->add_flag("--quiet", quiet);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*ct) {
      json j = chartable_json(n, d);
      if (format == "json") {
        std::cout << j.dump(2) << "\n";
      } else {
        const auto& t = char_table(n, d);
        for (std::size_t a = 0; a < t.irreps.size(); ++a) {
          std::cout << t.irreps[a].to_string() << ":";
          for (const auto& v : t.values[a]) std::cout << " " << v.to_string();
          std::cout << "\n";
        }
      }
    } else if (*ls) {
      Partition bar = parse_lambda_bar(parse_json_arg(lambda_s, "--lambda"), n);
      std::cout << loopschur_json(bar, n, parse_method(method), degree).dump(2) << "\n";
    } else if (*dt) {
      NPartition lambda = dt_lambda.empty() ? NPartition(n) : parse_npartition(parse_json_arg(dt_lambda, "--lambda"), n);
      Framing w = w_s.empty() ? Framing::symmetric(n) : parse_framing(w_s);
      json j = dt_vertex_json(parse_partition(parse_json_arg(rp_s, "--rho-plus")),
                              parse_partition(parse_json_arg(rm_s, "--rho-minus")), lambda, parse_alpha(alpha_s), w,
                              degree);
      print_vertex(j, as_json);
    } else if (*gw) {
      json j = gw_vertex_json(parse_partition(parse_json_arg(tp_s, "--tau-plus")),
                              parse_partition(parse_json_arg(tm_s, "--tau-minus")), parse_alpha(alpha_s), n, degree);
      print_vertex(j, as_json);
    } else if (*vf) {
      json config;
      if (config_path.empty()) {
        config = default_config();
      } else {
        std::ifstream in(config_path);
        if (!in) throw ConfigError("cannot read " + config_path);
        try {
          config = json::parse(in);
        } catch (const json::parse_error& e) {
          throw ConfigError(std::string("config is not valid JSON: ") + e.what());
        }
      }
      Report r = run_suite(suite, config, threads);
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw ConfigError("cannot write " + out_path);
        out << r.to_json().dump(2) << "\n";
      }
      if (!quiet) std::cout << r.summary();
      return r.pass() ? 0 : 1;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
