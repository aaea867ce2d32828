#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

const std::string kCli = KGRING_CLI_PATH;
const fs::path kTmp = KGRING_TEST_TMPDIR;

int run(const std::string& args) {
  std::string cmd = kCli + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

fs::path write_file(const std::string& name, const std::string& body) {
  fs::path p = kTmp / name;
  std::ofstream f(p, std::ios::binary);
  f << body;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

const char* base_config =
    "mu = 1\n"
    "a0 = 0.5\n"
    "r0 = 1\n"
    "beta = 0\n"
    "dim = 3\n"
    "n = 0:1\n"
    "n_polar = 0\n"
    "m = 0\n";

}  // namespace

TEST_CASE("spectrum: exit 0, metadata header, ok rows") {
  auto cfg = write_file("cli_base.cfg", base_config);
  auto out = kTmp / "cli_spectrum.csv";
  REQUIRE(run("spectrum --config " + cfg.string() + " --out " + out.string()) == 0);
  auto ls = lines_of(slurp(out));
  REQUIRE(ls.size() >= 6);
  CHECK(ls[0].rfind("# kgring ", 0) == 0);
  CHECK(ls[1] == "# command spectrum");
  CHECK(ls[2].rfind("# config-hash ", 0) == 0);
  CHECK(ls[3] == "D,n,n_polar,m,beta,E,l_tilde,m_prime,zeta,residual,status");
  int ok_rows = 0;
  for (std::size_t i = 4; i < ls.size(); ++i)
    if (ls[i].size() > 3 && ls[i].substr(ls[i].size() - 3) == ",ok") ++ok_rows;
  CHECK(ok_rows == 2);  // one level per n in 0:1
}

TEST_CASE("spectrum: byte-identical across repeated runs") {
  auto cfg = write_file("cli_det.cfg", base_config);
  auto o1 = kTmp / "cli_det1.csv";
  auto o2 = kTmp / "cli_det2.csv";
  REQUIRE(run("spectrum --config " + cfg.string() + " --out " + o1.string()) == 0);
  REQUIRE(run("spectrum --config " + cfg.string() + " --out " + o2.string()) == 0);
  CHECK(slurp(o1) == slurp(o2));
  CHECK(!slurp(o1).empty());
}

TEST_CASE("config errors exit with code 2 and write nothing") {
  auto bad1 = write_file("cli_bad1.cfg", std::string(base_config) + "bogus_key = 3\n");
  auto bad2 = write_file("cli_bad2.cfg", std::string(base_config) + "not a pair\n");
  auto bad3 = write_file("cli_bad3.cfg", "mu = -1\n");
  auto out = kTmp / "cli_bad.csv";
  fs::remove(out);
  CHECK(run("spectrum --config " + bad1.string() + " --out " + out.string()) == 2);
  CHECK(run("spectrum --config " + bad2.string() + " --out " + out.string()) == 2);
  CHECK(run("spectrum --config " + bad3.string() + " --out " + out.string()) == 2);
  CHECK(run("spectrum --config " + (kTmp / "no_such_file.cfg").string()) == 2);
  CHECK(run("spectrum") == 2);  // --config required
  CHECK(run("spectrum --config " + bad1.string() + " --window nonsense") == 2);
  CHECK(!fs::exists(out));
}

TEST_CASE("empty window yields a header-only table and exit 0") {
  auto cfg = write_file("cli_empty.cfg", base_config);
  auto out = kTmp / "cli_empty.csv";
  // window entirely below the admissibility bound mu - 2 a0 = 0
  REQUIRE(run("spectrum --config " + cfg.string() + " --window=-0.9:-0.1 --out " +
              out.string()) == 0);
  auto ls = lines_of(slurp(out));
  REQUIRE(ls.size() == 4);
  CHECK(ls[3] == "D,n,n_polar,m,beta,E,l_tilde,m_prime,zeta,residual,status");
}

TEST_CASE("verify: passes clean, fails under injected perturbation") {
  std::string cfg_text =
      "mu = 1\na0 = 0.5\nr0 = 1\nbeta = 0\ndim = 3\nn = 0:1\nn_polar = 0\nm = 0\n";
  auto cfg = write_file("cli_verify.cfg", cfg_text);
  auto out = kTmp / "cli_verify.csv";
  REQUIRE(run("verify --config " + cfg.string() + " --out " + out.string()) == 0);
  auto ls = lines_of(slurp(out));
  REQUIRE(ls.size() >= 5);
  CHECK(ls[1] == "# command verify");
  for (std::size_t i = 4; i < ls.size(); ++i)
    CHECK(ls[i].substr(ls[i].size() - 3) == ",ok");
  // detector self-test: a 1e-3 shift must be flagged
  CHECK(run("verify --config " + cfg.string() + " --perturb 1e-3 --out " +
            (kTmp / "cli_verify_bad.csv").string()) == 1);
}

TEST_CASE("wavefunction: radial node count and unit norms") {
  std::string cfg_text =
      "mu = 1\na0 = 0.5\nr0 = 1\nbeta = 0.5\ndim = 3\nn = 2\nn_polar = 1\nm = 1\n";
  auto cfg = write_file("cli_wave.cfg", cfg_text);
  auto out = kTmp / "cli_wave.csv";
  REQUIRE(run("wavefunction --config " + cfg.string() + " --out " + out.string()) == 0);
  auto ls = lines_of(slurp(out));
  int sign_changes = 0;
  double prev = 0.0;
  bool have_prev = false;
  double norm_R = -1.0, norm_H = -1.0;
  for (const auto& l : ls) {
    if (l.rfind("R,", 0) == 0) {
      double v = std::stod(l.substr(l.rfind(',') + 1));
      if (have_prev && prev * v < 0.0) ++sign_changes;
      if (v != 0.0) {
        prev = v;
        have_prev = true;
      }
    }
    if (l.rfind("norm_R,", 0) == 0) norm_R = std::stod(l.substr(l.rfind(',') + 1));
    if (l.rfind("norm_H,", 0) == 0) norm_H = std::stod(l.substr(l.rfind(',') + 1));
  }
  CHECK(sign_changes == 2);
  CHECK(norm_R == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(norm_H == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("nu-report: built-in fixtures and error paths") {
  auto out = kTmp / "cli_nu.csv";
  REQUIRE(run("nu-report --fixture radial --out " + out.string()) == 0);
  auto ls = lines_of(slurp(out));
  REQUIRE(ls.size() == 8);  // 3 metadata + header + 4 branches
  CHECK(ls[3] == "k,pi_slope,pi_const,tau_slope,tau_const,lambda,selected");
  int selected = 0;
  for (std::size_t i = 4; i < ls.size(); ++i)
    if (ls[i].substr(ls[i].size() - 2) == ",1") ++selected;
  CHECK(selected == 1);
  CHECK(run("nu-report --fixture angular") == 0);
  CHECK(run("nu-report --fixture polar") == 0);
  CHECK(run("nu-report --fixture nonsense") == 2);
  CHECK(run("nu-report") == 2);  // needs --fixture or polynomial keys
  // user-supplied polynomial data: a non-reducible form exits 1
  auto cfg = write_file("cli_nu.cfg",
                        "sigma = 0,0,1\nsigma_tilde = 1,0,1\ntau_tilde = 0,0\n");
  CHECK(run("nu-report --config " + cfg.string()) == 1);
}

TEST_CASE("limits: closed-form table") {
  std::string cfg_text = "mu = 1\na0 = 0.5\nr0 = 1\nbeta = 0\ndim = 3\nn = 0:1\nm = 0:1\nk = 0.001\n";
  auto cfg = write_file("cli_limits.cfg", cfg_text);
  auto out = kTmp / "cli_limits.csv";
  REQUIRE(run("limits --config " + cfg.string() + " --out " + out.string()) == 0);
  auto text = slurp(out);
  CHECK(text.find("nr_oscillator,") != std::string::npos);
  CHECK(text.find("nr_pseudoharmonic,") != std::string::npos);
  CHECK(text.find("nr_mapped,") != std::string::npos);
  CHECK(text.find("ho_relativistic_root") != std::string::npos);
}

TEST_CASE("unknown subcommand is a usage error") {
  CHECK(run("frobnicate") != 0);
  CHECK(run("") != 0);
}
