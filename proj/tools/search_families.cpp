// Offline search that produces the bundled three_color and low_crossing configurations.
// Usage: search_families <three_color|low_crossing> <max_param> <out_dir> [seed]
#include <filesystem>
#include <iostream>
#include <string>

#include "glued/error.hpp"
#include "glued/families.hpp"

int main(int argc, char** argv) {
  if (argc < 4) {
    std::cerr << "usage: search_families <three_color|low_crossing> <max_param> <out_dir> [seed]\n";
    return 2;
  }
  try {
    glued::Family family = glued::parse_family(argv[1]);
    int max_param = std::stoi(argv[2]);
    std::filesystem::path out = argv[3];
    glued::SearchOptions opts;
    if (argc > 4) opts.seed = std::stoull(argv[4]);
    std::filesystem::create_directories(out);

    auto save = [&](int param, const glued::PregluedConfig& cfg) {
      std::string name = std::string(glued::family_name(family)) + "_" + std::to_string(param);
      auto path = out / (name + ".cfg");
      glued::save_config(cfg, path.string(), name + " (search seed " + std::to_string(opts.seed) + ")");
      std::cout << "wrote " << path.string() << std::endl;
    };

    auto beam = glued::search_seed_beam(family, opts);
    int base = glued::family_min_param(family);
    save(base, beam.front());
    int reached = glued::search_family(family, beam, base, max_param, opts, save);
    if (reached < max_param) {
      std::cerr << "search stopped at parameter " << reached << "\n";
      return 1;
    }
  } catch (const glued::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
