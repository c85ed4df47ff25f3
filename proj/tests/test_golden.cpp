#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"

// Runs every line of golden/cases.txt through the CLI and compares stdout
// with golden/<name>.out. Set RLAT_UPDATE_GOLDEN=1 to rewrite the files.

namespace {
  std::string const dir = RLAT_GOLDEN_DIR;

  std::string trim(std::string s) {
    auto b = s.find_first_not_of(' ');
    auto e = s.find_last_not_of(' ');
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
  }

  std::string slurp(std::string const& path) {
    std::ifstream     in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
}  // namespace

TEST_CASE("golden CLI outputs") {
  bool const    update = std::getenv("RLAT_UPDATE_GOLDEN") != nullptr;
  std::ifstream cases(dir + "/cases.txt");
  REQUIRE(cases.good());
  std::size_t n = 0;
  for (std::string line; std::getline(cases, line);) {
    if (line.empty() || line[0] == '#') {
      continue;
    }
    auto p1 = line.find('|'), p2 = line.find('|', p1 + 1);
    std::string name = trim(line.substr(0, p1));
    int         code = std::stoi(line.substr(p1 + 1, p2 - p1 - 1));
    std::vector<std::string> args;
    std::istringstream       words(line.substr(p2 + 1));
    for (std::string w; words >> w;) {
      args.push_back(w[0] == '@' ? dir + "/" + w.substr(1) : w);
    }
    std::ostringstream out, err;
    int const          got = rlat::cli::run_cli(args, out, err);
    CAPTURE(name);
    CHECK(got == code);
    std::string const path = dir + "/" + name + ".out";
    if (update) {
      std::ofstream(path) << out.str();
    } else {
      CHECK(out.str() == slurp(path));
    }
    ++n;
  }
  CHECK(n > 30);
}
