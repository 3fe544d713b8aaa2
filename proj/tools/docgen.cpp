// Writes the generated reference map to the path given as argv[1]
// (stdout when absent). Driven by the `docs` build target.
#include <fstream>
#include <iostream>

#include "mollow/equation_map.hpp"

int main(int argc, char** argv) {
  const std::string text = mollow::render_equation_map();
  if (argc > 1) {
    std::ofstream f(argv[1], std::ios::binary);
    if (!f) {
      std::cerr << "docgen: cannot open " << argv[1] << "\n";
      return 1;
    }
    f << text;
  } else {
    std::cout << text;
  }
  return 0;
}
