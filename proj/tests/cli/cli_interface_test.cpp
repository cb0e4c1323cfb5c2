// Black-box checks of the isospec command-line contract: exit codes,
// config-file handling, and environment-variable thread caps.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string binary;
fs::path work;
int failures = 0;

int exit_code(int system_status) {
#ifdef WEXITSTATUS
  if (WIFEXITED(system_status)) return WEXITSTATUS(system_status);
  return -1;
#else
  return system_status;
#endif
}

int run(const std::string& args) {
  return exit_code(std::system(("\"" + binary + "\" " + args).c_str()));
}

void check(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "[ok] " << what << "\n";
  } else {
    std::cout << "[FAILED] " << what << "\n";
    ++failures;
  }
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_interface_test <path-to-isospec>\n";
    return 1;
  }
  binary = argv[1];
  work = fs::temp_directory_path() / "isospec-cli-test";
  fs::create_directories(work);

  check(run("--help > /dev/null 2>&1") == 0, "--help exits 0");
  check(run("sweep --help > /dev/null 2>&1") == 0, "sweep --help exits 0");

  check(run("2> /dev/null") == 1, "missing subcommand exits 1");
  check(run("sweep --bundle 7 --m-max 1 2> /dev/null") == 1,
        "invalid bundle exits 1");
  check(run("sweep --bundle 1 --m-max 0 2> /dev/null") == 1,
        "invalid m-max exits 1");
  check(run("sweep --bundle 1 --m-max 1 --b-min 0.9 --b-max 0.1 --steps 5 "
            "2> /dev/null") == 1,
        "inverted b range exits 1");
  check(run("sweep --bundle 1 --m-max 1 --b-min 0.2 --steps 5 2> /dev/null") == 1,
        "partial grid spec exits 1");

  const fs::path missing_dir = work / "no-such-dir" / "out.csv";
  check(run("sweep --bundle 1 --m-max 1 --b-min 0.3 --b-max 0.7 --steps 3 "
            "--out \"" + missing_dir.string() + "\" 2> /dev/null") == 2,
        "unwritable output path exits 2");

  const fs::path out = work / "out.csv";
  check(run("sweep --bundle 1 --m-max 1 --b-min 0.3 --b-max 0.7 --steps 3 "
            "--out \"" + out.string() + "\"") == 0,
        "valid sweep exits 0");
  {
    std::istringstream csv(slurp(out));
    std::string header, row1, row2;
    std::getline(csv, header);
    std::getline(csv, row1);
    std::getline(csv, row2);
    check(header == "bundle,m,l,b,eigenvalue,multiplicity", "CSV header matches");
    check(row2 == "1,1,0,0.5,1.25,2", "CSV b=1/2 row matches the closed form");
  }

  // Config file: key=value lines mirror the flags; explicit flags win.
  const fs::path config = work / "sweep.conf";
  {
    std::ofstream c(config);
    c << "bundle=1\n"
      << "m-max=2\n"
      << "b-min=0.3\n"
      << "b-max=0.7\n"
      << "steps=3\n"
      << "format=csv\n";
  }
  const fs::path out_conf = work / "out_conf.csv";
  check(run("sweep --config \"" + config.string() + "\" --out \"" +
            out_conf.string() + "\"") == 0,
        "config-file sweep exits 0");
  {
    std::istringstream csv(slurp(out_conf));
    std::string line;
    int rows = 0;
    std::getline(csv, line);  // header
    while (std::getline(csv, line)) ++rows;
    // m-max=2 from the config: branches m=1 (1) and m=2 (1), 3 b's each.
    check(rows == 6, "config-file m-max honoured");
  }
  const fs::path out_override = work / "out_override.csv";
  check(run("sweep --config \"" + config.string() + "\" --m-max 1 --out \"" +
            out_override.string() + "\"") == 0,
        "flag-over-config sweep exits 0");
  {
    std::istringstream csv(slurp(out_override));
    std::string line;
    int rows = 0;
    std::getline(csv, line);
    while (std::getline(csv, line)) ++rows;
    check(rows == 3, "explicit --m-max overrides the config file");
  }

  // ISOSPEC_THREADS caps parallelism; the output must not change.
  const fs::path out_threads = work / "out_threads.csv";
  check(exit_code(std::system(("ISOSPEC_THREADS=1 \"" + binary +
                               "\" sweep --bundle 1 --m-max 1 --b-min 0.3 "
                               "--b-max 0.7 --steps 3 --out \"" +
                               out_threads.string() + "\"")
                                  .c_str())) == 0,
        "ISOSPEC_THREADS=1 sweep exits 0");
  check(slurp(out_threads) == slurp(out), "thread cap does not change the bytes");

  check(run("reconcile --m-max 2 > /dev/null") == 0, "reconcile text exits 0");
  check(run("geometry --b 0.5 --r0 1 > /dev/null") == 0, "geometry exits 0");
  check(run("geometry --b 1.5 --r0 1 2> /dev/null") == 1,
        "geometry rejects b outside (0,1)");
  check(run("closed-forms --m-max 3 > /dev/null") == 0, "closed-forms exits 0");

  if (failures == 0) {
    std::cout << "cli interface: all checks passed\n";
    return 0;
  }
  std::cout << "cli interface: " << failures << " check(s) failed\n";
  return 1;
}
