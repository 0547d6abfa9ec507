#include <doctest.h>

#include <fstream>
#include <sstream>

#include "golden_cases.hpp"

TEST_CASE("golden vertex values are byte identical") {
  for (const auto& c : golden::cases()) {
    CAPTURE(c.name);
    std::ifstream in(std::string(GOLDEN_DIR) + "/" + c.name + ".json", std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(golden::render(c.make()) == ss.str());
  }
}
