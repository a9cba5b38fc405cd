#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "csv.hpp"
#include "manifest.hpp"

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(RNLS_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string out_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "rnls_test_cli" / name;
  fs::remove_all(dir);
  return dir.string();
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("") == 2);
  CHECK(run_cli("bogus") == 2);
  CHECK(run_cli("simulate --K 1 --out " + out_dir("k1")) == 2);
  CHECK(run_cli("simulate --eps -1 --out " + out_dir("neg")) == 2);
  CHECK(run_cli("simulate --preset fig9 --out " + out_dir("p9")) == 2);
  CHECK(run_cli("simulate --K abc") == 2);
}

TEST_CASE("simulate writes readable artifacts and a manifest") {
  const auto dir = out_dir("sim");
  REQUIRE(run_cli("simulate --preset fig3 --tfinal 1 --stride 1 --out " + dir) == 0);
  const auto kv = rnls_cli::read_manifest(dir + "/manifest.txt");
  CHECK(kv.at("command") == "simulate");
  CHECK(kv.at("param.eps") == "0.5");
  const auto snaps = rnls_cli::read_csv(dir + "/snapshots.csv");
  CHECK(snaps.rows() == 801 * 21);
  const auto diag = rnls_cli::read_csv(dir + "/diagnostics.csv");
  CHECK(diag.rows() == 21);
  CHECK(diag["t"].numbers.back() == doctest::Approx(1.0));
  const auto cons = rnls_cli::read_csv(dir + "/conserved.csv");
  CHECK(cons.rows() == 21);
}

TEST_CASE("blow-up exits 3") {
  CHECK(run_cli("simulate --eps 1 --K 100 --amp 1 --tau 50 --tfinal 5000 --ceiling 1.5 --no-plots --out " +
                out_dir("blow")) == 3);
}

TEST_CASE("oracle-check and convergence") {
  const auto d1 = out_dir("oracle");
  CHECK(run_cli("oracle-check --nmax 400 --no-plots --out " + d1) == 0);
  CHECK(rnls_cli::read_csv(d1 + "/coefficients.csv").rows() == 401);
  const auto d2 = out_dir("conv");
  CHECK(run_cli("convergence --K 50 --nmax 400 --tfinal 1 --no-plots --out " + d2) == 0);
  const auto kv = rnls_cli::read_manifest(d2 + "/manifest.txt");
  CHECK(kv.count("result.mean_ratio") == 1);
}

TEST_CASE("spectrum and threshold") {
  const auto d1 = out_dir("spec");
  CHECK(run_cli("spectrum --eps 1 --L 20 --K 100 --no-plots --out " + d1) == 0);
  CHECK(rnls_cli::read_csv(d1 + "/eigenvalues.csv").rows() == 402);
  CHECK(rnls_cli::read_manifest(d1 + "/manifest.txt").at("result.verdict") == "unstable");
  CHECK(run_cli("threshold --L 20 --K 100 --lo 1.0 --hi 1.2 --out " + out_dir("bad")) == 2);
  const auto d2 = out_dir("thr");
  CHECK(run_cli("threshold --L 20 --K 100 --width 0.05 --no-plots --out " + d2) == 0);
  CHECK(rnls_cli::read_csv(d2 + "/threshold_trace.csv")["verdict"].is_text());
}
