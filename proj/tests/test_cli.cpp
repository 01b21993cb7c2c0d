#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell, capturing stdout; stderr is discarded.
Run cli(const std::string& args) {
  const std::string cmd = std::string("\"") + LRCAVAIL_CLI + "\" " + args + " 2>/dev/null";
  Run run;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) run.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  run.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return run;
}

fs::path scratch() {
  const char* env = std::getenv("LRCAVAIL_TEST_TMP");
  fs::path dir = env && *env ? fs::path(env) : fs::temp_directory_path() / "lrcavail_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("construct then verify") {
  const auto path = (scratch() / "k4.txt").string();
  const auto built = cli("construct partition --r 1 --g 2 --t 3 -o \"" + path + "\"");
  REQUIRE(built.status == 0);
  const auto meta = nlohmann::json::parse(built.out);
  CHECK(meta["code"]["n"] == 4);
  CHECK(meta["code"]["k"] == 1);
  CHECK(fs::exists(path + ".json"));

  const auto strict = cli("verify --in \"" + path + "\" --r 1 --t 3 --strict");
  REQUIRE(strict.status == 0);
  CHECK(nlohmann::json::parse(strict.out)["checks"]["strict"]["pass"] == true);

  const auto general = cli("verify --in \"" + path + "\" --r 1 --t 3");
  CHECK(nlohmann::json::parse(general.out)["checks"]["availability"]["pass"] == true);

  const auto analyzed = cli("analyze --in \"" + path + "\" --dmin --greedy --ghw 2");
  REQUIRE(analyzed.status == 0);
  const auto a = nlohmann::json::parse(analyzed.out);
  CHECK(a["code"]["k"] == 1);
  CHECK(a["code"]["r"] == 1);
  CHECK(a["code"]["t"] == 3);
  CHECK(a["code"]["dmin"] == 4);
  CHECK(a["trace"]["g"] == nlohmann::json::array({3, 2, 1}));
}

TEST_CASE("construct to stdout") {
  const auto run = cli("construct product --r 2 --t 2");
  REQUIRE(run.status == 0);
  CHECK(run.out.rfind("6 9\n", 0) == 0);
  CHECK(cli("construct functional --q 3 --t 4").out.rfind("12 9\n", 0) == 0);
}

TEST_CASE("bounds") {
  const auto rate = cli("bounds rate --r 4 --t 4 --method transpose");
  REQUIRE(rate.status == 0);
  CHECK(rate.out.find("1093/1820") != std::string::npos);

  const auto dmin = cli("bounds dmin --n 20 --k 10 --r 3 --t 3 --method tamo_barg");
  REQUIRE(dmin.status == 0);
  CHECK(nlohmann::json::parse(dmin.out)["bounds"].size() == 1);

  const auto lp = cli("bounds lp --n 16 --r 3 --t 3");
  REQUIRE(lp.status == 0);
  const auto j = nlohmann::json::parse(lp.out);
  CHECK(j["lp"]["status"] == "optimal");
  CHECK(j["bounds"][0]["value_float"].get<double>() == doctest::Approx(8.26614).epsilon(1e-5));
}

TEST_CASE("figure csv") {
  const auto run = cli("figure rate3 --rmin 3 --rmax 3");
  REQUIRE(run.status == 0);
  CHECK(std::count(run.out.begin(), run.out.end(), '\n') == 2);
  CHECK(run.out.find("\n3,") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli("bounds rate --r 3 --t 3 --bogus").status == 2);
  CHECK(cli("figure nosuch").status == 2);
  CHECK(cli("construct partition --r 5 --g 2 --t 2").status == 1);
  CHECK(cli("bounds lp --n 10 --r 3 --t 3").status == 1);

  const auto bad = scratch() / "ragged.txt";
  {
    std::FILE* f = std::fopen(bad.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs("2 3\n10\n010\n", f);
    std::fclose(f);
  }
  CHECK(cli("verify --in \"" + bad.string() + "\" --r 1 --t 1").status == 2);
}

TEST_CASE("deterministic output") {
  const std::string args = "analyze --in \"" + (scratch() / "k4.txt").string() + "\" --greedy --seed 5";
  cli("construct partition --r 1 --g 2 --t 3 -o \"" + (scratch() / "k4.txt").string() + "\"");
  CHECK(cli(args).out == cli(args).out);
  CHECK(cli("figure rate4 --rmin 1 --rmax 5").out == cli("figure rate4 --rmin 1 --rmax 5").out);
}
