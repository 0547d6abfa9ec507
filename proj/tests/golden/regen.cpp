// writes every golden file into the directory given as argv[1]
#include <fstream>
#include <iostream>

#include "golden_cases.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: regen_golden DIR\n";
    return 2;
  }
  for (const auto& c : golden::cases()) {
    std::ofstream out(std::string(argv[1]) + "/" + c.name + ".json", std::ios::binary);
    out << golden::render(c.make());
    std::cout << c.name << "\n";
  }
  return 0;
}
