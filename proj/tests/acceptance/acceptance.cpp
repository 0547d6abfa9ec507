// one line per acceptance criterion; exit status 1 if any line fails
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "../golden/golden_cases.hpp"
#include "loopvertex/verifier.hpp"

using namespace loopvertex;
using json = nlohmann::ordered_json;

namespace {

struct Timed {
  Report report;
  double seconds;
};

Timed run(const std::string& suite, const json& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  Report r = run_suite(suite, cfg);
  return {std::move(r), std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
}

json only(const std::string& suite) {
  json c;
  c[suite] = default_config().at(suite);
  return c;
}

// "identity x/y" for each identity in the report
std::string breakdown(const Report& r) {
  std::map<std::string, std::pair<int, int>> by;
  std::vector<std::string> order;
  for (const auto& c : r.cases) {
    if (!by.count(c.identity)) order.push_back(c.identity);
    ++by[c.identity].second;
    if (c.pass) ++by[c.identity].first;
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < order.size(); ++i)
    os << (i ? "; " : "") << order[i] << " " << by[order[i]].first << "/" << by[order[i]].second;
  return os.str();
}

std::string secs(double s) {
  std::ostringstream os;
  os.precision(1);
  os << std::fixed << s << "s";
  return os.str();
}

bool all_ok = true;

void line(int k, bool pass, const std::string& text) {
  all_ok = all_ok && pass;
  std::cout << "criterion " << k << ": " << (pass ? "PASS" : "FAIL") << "  " << text << std::endl;
}

void suite_line(int k, const std::string& suite, double limit, const std::string& what) {
  Timed t = run(suite, only(suite));
  bool in_time = limit <= 0 || t.seconds < limit;
  std::string text = what + " [" + breakdown(t.report) + "] in " + secs(t.seconds);
  if (!in_time) text += " (limit " + secs(limit) + ")";
  line(k, t.report.pass() && in_time, text);
  if (!t.report.pass()) {
    int shown = 0;
    for (const auto& c : t.report.cases)
      if (!c.pass && shown++ < 3) {
        std::cout << "    e.g. " << c.params.dump();
        if (c.witness) std::cout << " at " << c.witness->monomial;
        if (!c.note.empty()) std::cout << " [" << c.note << "]";
        std::cout << "\n";
      }
  }
}

}  // namespace

int main() {
  suite_line(1, "loopschur", 120, "loop Schur SSYT = hook-content = monomial * Jacobi-Trudi, n<=3, |lambda-bar|<=8, mod q-degree 10");
  suite_line(2, "thm-comb", 300, "comb theorem, n<=3, d<=2, |omega|,|sigma|<=2, exact");
  suite_line(3, "det-forms", 0, "determinantal forms and finite-m column/row expansions, |sigma-bar|<=4, m<=4, mod degree 6");
  suite_line(4, "characters", 0, "S_d and wreath orthogonality, conjugation and twist pinning, strip expansion");

  {
    Timed t = run("sym-corr", only("sym-corr"));
    json both;
    both["sym-corr"] = {{"n", {1, 2, 3}}, {"max_tau", 1}, {"degree", 5}, {"negate_q", {false, true}}};
    Report neg = run_suite("sym-corr", both);
    int on = 0, on_total = 0, off = 0, off_total = 0;
    for (const auto& c : neg.cases) {
      bool flag = c.params.at("negate_q").get<bool>();
      (flag ? on_total : off_total)++;
      if (c.pass) (flag ? on : off)++;
    }
    std::string text = "symmetric correspondence at w_s, n<=3, |tau+-|<=3, all alpha, mod (x,u)-degree 5 [" +
                       breakdown(t.report) + "] in " + secs(t.seconds) + "; q-negation off " +
                       std::to_string(off) + "/" + std::to_string(off_total) + ", on " + std::to_string(on) + "/" +
                       std::to_string(on_total);
    line(5, t.report.pass() && t.seconds < 600, text);
  }

  suite_line(6, "framing", 0, "framing prefactors = image of the DT framing monomials, |rho|<=3, |lambda|<=2, 3 weights each");
  suite_line(7, "hurwitz", 0, "Hurwitz orthogonality and composition n,d<=3; central lemma n<=4, |lambda|<=3");
  suite_line(8, "fp", 0, "(t/2)csc(t/2): 1/24 and 7/5760 against sin inversion");

  {
    int same = 0, total = 0;
    std::string bad;
    for (const auto& c : golden::cases()) {
      ++total;
      std::ifstream in(std::string(GOLDEN_DIR) + "/" + c.name + ".json", std::ios::binary);
      std::stringstream ss;
      ss << in.rdbuf();
      std::string a = golden::render(c.make()), b = golden::render(c.make());
      if (in.good() && a == ss.str() && a == b)
        ++same;
      else if (bad.empty())
        bad = c.name;
    }
    line(9, same == total && total == 20,
         "golden vertex JSON byte identical " + std::to_string(same) + "/" + std::to_string(total) +
             (bad.empty() ? "" : " (first difference " + bad + ")"));
  }
  return all_ok ? 0 : 1;
}
