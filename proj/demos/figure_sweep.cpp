// Writes implicit-versus-formula sweeps for each closed-form regime as CSV
// files into the directory given on the command line (default: current).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ricbounds.hpp"

using namespace ricbounds;

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : ".";
  std::filesystem::create_directories(dir);

  struct Job {
    std::string file;
    SweepSpec spec;
  };
  std::vector<Job> jobs;

  SweepSpec s;
  s.regime = Regime::small_rho;
  s.fixed = 0.25;
  s.constants.c = 6;
  s.start_exp = -10;
  s.end_exp = -1;
  s.points = 30;
  jobs.push_back({"small_rho_delta0.25.csv", s});

  s = SweepSpec{};
  s.regime = Regime::small_delta;
  s.constants.c = 1;
  s.start_exp = -50;
  s.end_exp = -1;
  s.points = 50;
  s.fixed = 0.5;
  jobs.push_back({"small_delta_rho0.5.csv", s});
  s.fixed = 0.1;
  jobs.push_back({"small_delta_rho0.1.csv", s});

  s = SweepSpec{};
  s.regime = Regime::gamma_path;
  s.constants.c_u = s.constants.c_l = 1.0 / 3;
  s.start_exp = -80;
  s.end_exp = -1;
  s.points = 80;
  for (double gamma : {100.0, 300.0}) {
    s.constants.gamma = gamma;
    jobs.push_back({"gamma_path_gamma" + format_g17(gamma) + ".csv", s});
  }

  for (const auto& j : jobs) {
    const auto rows = compare_sweep(j.spec);
    std::ofstream out(dir / j.file);
    write_csv(out, rows);
    std::size_t errors = 0;
    for (const auto& r : rows) errors += r.error ? 1 : 0;
    std::cout << (dir / j.file).string() << ": " << rows.size() << " rows, " << errors << " row errors\n";
  }
}
