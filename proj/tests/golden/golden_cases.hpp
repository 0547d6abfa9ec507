#pragma once

#include <functional>
#include <string>
#include <vector>

#include "loopvertex/export.hpp"

namespace golden {

using loopvertex::Alpha;
using loopvertex::Framing;
using loopvertex::NPartition;
using loopvertex::Partition;

struct Case {
  std::string name;
  std::function<nlohmann::ordered_json()> make;
};

inline NPartition np(std::vector<Partition> c) { return NPartition(std::move(c)); }

inline std::vector<Case> cases() {
  using loopvertex::dt_vertex_json;
  using loopvertex::gw_vertex_json;
  std::vector<Case> v;
  auto dt = [&](std::string name, Partition rp, Partition rm, NPartition l, Alpha a, Framing w, long deg) {
    v.push_back({name, [=] { return dt_vertex_json(rp, rm, l, a, w, deg); }});
  };
  auto gw = [&](std::string name, Partition tp, Partition tm, Alpha a, int n, long deg) {
    v.push_back({name, [=] { return gw_vertex_json(tp, tm, a, n, deg); }});
  };
  dt("dt_01", {1}, {}, np({{}}), {1, 1}, Framing::symmetric(1), 4);
  dt("dt_02", {2, 1}, {1}, np({{1}}), {1, -1}, {1, -2, 1}, 4);
  dt("dt_03", {1}, {1}, np({{}, {}}), {1, 1}, Framing::symmetric(2), 4);
  dt("dt_04", {2}, {}, np({{1}, {}}), {1, 1}, {1, -3, 2}, 4);
  dt("dt_05", {}, {1, 1}, np({{}, {1}}), {-1, 1}, {1, 1, -2}, 4);
  dt("dt_06", {1}, {}, np({{}, {}, {}}), {1, 1}, Framing::symmetric(3), 3);
  dt("dt_07", {1}, {1}, np({{1}, {}, {}}), {1, -1}, {1, -4, 3}, 3);
  dt("dt_08", {}, {}, np({{}, {1}, {1}}), {1, 1}, {1, -4, 3}, 3);
  dt("dt_09", {2}, {1, 1}, np({{1}}), {-1, -1}, {2, -1, -1}, 5);
  dt("dt_10", {1}, {2}, np({{1}, {1}}), {1, -1}, {2, -4, 2}, 3);
  gw("gw_01", {1}, {}, {1, 1}, 1, 5);
  gw("gw_02", {2}, {1}, {1, -1}, 1, 5);
  gw("gw_03", {}, {}, {1, 1}, 2, 5);
  gw("gw_04", {1}, {}, {1, 1}, 2, 5);
  gw("gw_05", {2}, {1}, {-1, 1}, 2, 4);
  gw("gw_06", {1, 1}, {1, 1}, {1, -1}, 2, 4);
  gw("gw_07", {1}, {1}, {1, 1}, 3, 4);
  gw("gw_08", {2}, {}, {-1, -1}, 3, 4);
  gw("gw_09", {1, 1}, {1}, {1, -1}, 3, 3);
  gw("gw_10", {3}, {2, 1}, {1, 1}, 2, 3);
  return v;
}

// the exact bytes stored on disk
inline std::string render(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace golden
