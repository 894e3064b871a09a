#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "zforge/identities/families.hpp"
#include "zforge/identities/serialize.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// stdout only; stderr is discarded.
Run cli(const std::string& args, const std::string& env = "") {
  const std::string command = env + " " + ZFORGE_CLI + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("documented examples") {
  auto r = cli("bernoulli --n 12");
  CHECK(r.code == 0);
  CHECK(r.out == "-691/2730\n");

  r = cli("identity show --family zeta4m-1 --m 1 --format text");
  CHECK(r.code == 0);
  CHECK(r.out == "zeta(3) = (7/180)*pi^3 - 2*S[3](2*pi)\n");

  r = cli("identity show --family pq --k 5 --p 2 --q 1");
  CHECK(r.code == 2);
  CHECK(r.out.empty());

  r = cli("eval --sum S --s 3 --x 2pi -P 30");
  CHECK(r.code == 0);
  // mpmath: sum 1/(n^3 (e^(2 pi n) - 1)) = 0.00187137275936602737883704554902...
  CHECK(r.out.rfind("1.87137275936602737883704554902", 0) == 0);

  r = cli("verify-suite --level quick -P 50");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS zeta4m-1(m=1)") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli("").code == 2);
  CHECK(cli("--bogus bernoulli --n 2").code == 2);
  CHECK(cli("bernoulli --n 2 --unknown").code == 2);
  CHECK(cli("bernoulli --n 2 -P 9").code == 2);
  CHECK(cli("bernoulli --n 2 -P 10001").code == 2);
  CHECK(cli("bernoulli").code == 2);
  CHECK(cli("eval --sum S --s 3 --x 2x").code == 2);
  CHECK(cli("eval --sum S --s 3 --x -2pi").code == 2);
  CHECK(cli("identity show --family nope").code == 2);
  CHECK(cli("identity show --family surd --k 3 --p 4").code == 2);
  CHECK(cli("identity verify --classical entry13 --k 1").code == 2);
  CHECK(cli("bernoulli --n 2", "ZFORGE_PRECISION=3").code == 2);
  CHECK(cli("--help").code == 0);
}

TEST_CASE("precision from the environment") {
  const auto dflt = cli("eval --sum S --s 3 --x 2pi");
  const auto env = cli("eval --sum S --s 3 --x 2pi", "ZFORGE_PRECISION=20");
  CHECK(dflt.out.size() > env.out.size());
  // the flag wins over the environment
  const auto both = cli("eval --sum S --s 3 --x 2pi -P 50", "ZFORGE_PRECISION=20");
  CHECK(both.out == dflt.out);
}

TEST_CASE("verification failure writes a JSON report and exits 1") {
  const std::string path = "cli_printed_pq7.json";
  {
    std::ofstream f(path);
    f << zforge::identities::emit(zforge::identities::printed_pq7_display(), zforge::identities::Format::Json);
  }
  const auto r = cli("identity verify --file " + path);
  CHECK(r.code == 1);
  const auto report = nlohmann::json::parse(r.out.substr(r.out.find('{')));
  CHECK(report["pass"] == false);
  CHECK(report["failures"][0]["name"] == "printed-pq7-display");

  const auto j = cli("identity verify --file " + path + " --format json");
  CHECK(j.code == 1);
  CHECK(nlohmann::json::parse(j.out)["pass"] == false);
  std::remove(path.c_str());
}

TEST_CASE("json output round-trips through the identity parser") {
  for (const char* args : {"--family pq --k 7 --p 2 --q 1", "--family surd --k 3 --p 3", "--family zeta4m+1 --m 2",
                           "--family log2", "--family pi-power --m 1"}) {
    CAPTURE(args);
    const auto shown = cli(std::string("identity show --format json ") + args);
    REQUIRE(shown.code == 0);
    const auto id = zforge::identities::parse_identity_json(shown.out);
    CHECK(zforge::identities::emit(id, zforge::identities::Format::Json) + "\n" == shown.out);

    const std::string path = "cli_roundtrip.json";
    {
      std::ofstream f(path);
      f << shown.out;
    }
    const auto verified = cli("identity verify --format json --file " + path);
    CHECK(verified.code == 0);
    CHECK(nlohmann::json::parse(verified.out)["results"][0]["pass"] == true);
    std::remove(path.c_str());
  }
  const auto list = cli("identity list --format json");
  CHECK(list.code == 0);
  CHECK(nlohmann::json::parse(list.out)["families"].size() == 6);
}

TEST_CASE("other subcommands") {
  auto r = cli("identity verify --classical letter");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS letter", 0) == 0);

  r = cli("bernoulli --check-identities --m-max 10");
  CHECK(r.code == 0);

  r = cli("mellin-check --s 2 --u 0.5 -P 30");
  CHECK(r.code == 0);
  const auto m = nlohmann::json::parse(r.out);
  CHECK(m["log10_difference"].get<double>() < -18);

  r = cli("eval --sum T --s 5 --x 'pi*(1-i)' --format json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["sum"] == "T");

  const std::string ppm = "cli_plot.ppm";
  r = cli("plot --series -1 --size 32 --out " + ppm);
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["truncation_failures"] == 0);
  std::ifstream f(ppm, std::ios::binary);
  const std::string bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(bytes.rfind("P6\n32 32 255\n", 0) == 0);
  CHECK(bytes.size() == 13 + 32 * 32 * 3);
  std::remove(ppm.c_str());

  r = cli("plot --function g3 --size 16 --out " + ppm);
  CHECK(r.code == 0);
  std::remove(ppm.c_str());

  r = cli("plot --series -1 --size 16 --max-terms 2 --out " + ppm);
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["truncation_failures"].get<long>() > 0);
  std::remove(ppm.c_str());

  CHECK(cli("plot --series 1 --size 16 --out " + ppm).code == 2);
  std::remove(ppm.c_str());
}
