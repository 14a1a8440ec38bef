#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"
#include "table_writer.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Run run_cli(const std::string& args) {
  static int counter = 0;
  auto dir = fs::temp_directory_path() / "cayley-cli-test";
  fs::create_directories(dir);
  auto out = dir / ("out" + std::to_string(counter) + ".txt");
  auto err = dir / ("err" + std::to_string(counter++) + ".txt");
  std::string cmd = std::string(CAYLEY_CLI) + " " + args + " >" + out.string() + " 2>" + err.string();
  int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

int lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("table writer") {
  cayley::cli::TableWriter t("z", {"n", "ratio", "label", "empty"});
  t.add({std::int64_t{3}, 0.5, std::string("a,b"), std::monostate{}});
  std::ostringstream csv, json;
  t.write_csv(csv);
  CHECK(csv.str() == "# model: z\nn,ratio,label,empty\n3,0.500000,\"a,b\",\n");
  t.write_json(json);
  auto j = nlohmann::json::parse(json.str());
  CHECK(j["model"] == "z");
  CHECK(j["rows"][0]["n"] == 3);
  CHECK(j["rows"][0]["label"] == "a,b");
  CHECK(j["rows"][0]["empty"].is_null());
}

TEST_CASE("enumerate") {
  auto r = run_cli("enumerate --model \"line-lamplighter m=2\" --n 10");
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 13);
  CHECK(r.out.find("10,8768,17120") != std::string::npos);
  auto zero = run_cli("enumerate --model z --n 0");
  CHECK(zero.code == 0);
  CHECK(zero.out == "# model: z\nn,|S(n)|,|B(n)|\n0,1,1\n");
}

TEST_CASE("exit codes") {
  auto bad = run_cli("enumerate --model nonsense --n 2");
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
  CHECK(run_cli("experiment nonsense").code == 2);
  CHECK(run_cli("enumerate --model z --n 3 --format xml").code == 2);
  CHECK(run_cli("enumerate --model \"line-lamplighter m=2\" --n 30 --budget 1000").code == 3);
  CHECK(run_cli("deadends --model z --n 2").code == 0);
}

TEST_CASE("thickness") {
  auto r = run_cli("thickness --model \"line-lamplighter m=2\" --n 2 --nmax 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("line-lamplighter m=2,2,4,") != std::string::npos);
  CHECK(r.out.find("line-lamplighter m=2,4,6,") != std::string::npos);
  auto capped = run_cli("thickness --model \"line-lamplighter m=2\" --n 4 --rcap 2");
  CHECK(capped.out.find(">cap") != std::string::npos);
}

TEST_CASE("components dump") {
  auto dump = fs::temp_directory_path() / "cayley-cli-test" / "dump.csv";
  auto r = run_cli("components --model \"line-lamplighter m=2\" --n 3 --r 1 --filtered --dump " + dump.string());
  CHECK(r.code == 0);
  auto text = slurp(dump);
  CHECK(text.find("component_id,element_encoding") != std::string::npos);
  CHECK(run_cli("components --model \"line-lamplighter m=2\" --n 3 --nmax 4 --dump " + dump.string()).code == 2);
}

TEST_CASE("json mirrors csv") {
  auto csv = run_cli("deadends --model \"line-lamplighter m=2\" --n 4");
  auto json = run_cli("deadends --model \"line-lamplighter m=2\" --n 4 --format json");
  REQUIRE(json.code == 0);
  auto j = nlohmann::json::parse(json.out);
  CHECK(static_cast<int>(j["rows"].size()) == lines(csv.out) - 2);
  CHECK(j["rows"][0].contains("rd"));
}

TEST_CASE("determinism") {
  std::string args = "distortion --model zz-walk-or-switch --n 3 --r 3 --samples 50 --seed 9";
  auto a = run_cli(args), b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("certificates through the command line") {
  auto cert = fs::temp_directory_path() / "cayley-cli-test" / "cert.txt";
  auto made = run_cli("verify --model \"line-lamplighter m=2\" --construct line --n 4 --element \"w:4;0:1,3:1\" --out " +
                     cert.string());
  CHECK(made.code == 0);
  CHECK(run_cli("verify --in " + cert.string()).code == 0);
  auto text = slurp(cert);
  auto pos = text.find("\n1,");
  REQUIRE(pos != std::string::npos);
  text.replace(pos + 3, 1, "9");
  std::ofstream(cert, std::ios::binary) << text;
  CHECK(run_cli("verify --in " + cert.string()).code == 1);
}

TEST_CASE("version") {
  auto r = run_cli("--version");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["version"] == "1.0.0");
  CHECK(j["registry_hash"].get<std::string>().size() == 16);
}

TEST_CASE("experiments run") {
  CHECK(run_cli("experiment ladder-cutset").code == 0);
  CHECK(run_cli("experiment sd-question --nmax 4").code == 0);
  CHECK(run_cli("experiment almost-convexity --nmax 4").code == 0);
}
