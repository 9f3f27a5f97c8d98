#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "cyberquote/cli.hpp"
#include "test_support.hpp"

using cyberquote::cli::run;
using test_support::data_path;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> quote_args() {
  return {"quote",
          "--org", data_path("retail.org"),
          "--econ", data_path("retail-econ.csv"),
          "--assess", data_path("retail-l1.csv") + "," + data_path("retail-l2.csv") + "," +
                          data_path("retail-l3.csv"),
          "--scenarios", data_path("point.csv"),
          "--utility", "linear"};
}

std::vector<std::string> simulate_args() {
  return {"simulate", "--econ", data_path("retail-econ.csv"), "--assess",
          data_path("retail-l1.csv"), "--dist", data_path("uniform.dist"), "-n", "2000"};
}

std::vector<std::string> plus(std::vector<std::string> a, std::vector<std::string> b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("validate") {
    const auto r = call({"validate", data_path("payroll.org")});
    CHECK(r.code == 0);
    CHECK(r.out.find("0 errors") != std::string::npos);
    CHECK(r.out.find("5 entities, 5 relationships") != std::string::npos);
    const auto j = nlohmann::json::parse(
        call({"validate", data_path("payroll.org"), "--format", "json"}).out);
    CHECK(j["errors"] == 0);
  }

  TEST_CASE("exit codes") {
    CHECK(call({}).code == 4);
    CHECK(call({"bogus"}).code == 4);
    CHECK(call({"--help"}).code == 0);
    CHECK(call({"validate", "/nonexistent.org"}).code == 2);
    auto no_econ = quote_args();
    no_econ.erase(no_econ.begin() + 3, no_econ.begin() + 5);
    const auto r = call(no_econ);
    CHECK(r.code == 4);
    CHECK(r.err.find("--econ") != std::string::npos);
    CHECK(call(plus(quote_args(), {"--strict"})).code == 1);
    CHECK(call(plus(quote_args(), {"--format", "xml"})).code == 4);
    auto bad_util = quote_args();
    bad_util.back() = "cara,a=100";
    CHECK(call(bad_util).code == 3);
  }

  TEST_CASE("quote text and json carry the same numbers") {
    const auto text = call(quote_args());
    REQUIRE(text.code == 0);
    CHECK(text.out.find("total_premium: 4822.78") != std::string::npos);
    CHECK(text.out.find("pi=0.03333333333") != std::string::npos);
    CHECK(text.err.find("constraint-violation") != std::string::npos);
    const auto js = call(plus(quote_args(), {"--format", "json"}));
    REQUIRE(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["total_premium"].get<double>() == 4822.78);
    CHECK(j["layers"][0]["pi"].get<double>() == 0.03333333333);
    CHECK(j["layers"][2]["premium"].get<double>() == 1038.06);
    CHECK(j["layers"][1]["rate"].get<double>() == 0.01302083333);
    CHECK(j["warnings"].size() == 3);
    CHECK(text.out.find("rate=0.01302083333") != std::string::npos);
  }

  TEST_CASE("quote writes to --out") {
    const auto path = std::filesystem::temp_directory_path() / "cyberquote_cli_quote.json";
    const auto r = call(plus(quote_args(), {"--format", "json", "--out", path.string()}));
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    const auto j = nlohmann::json::parse(cyberquote::inputs::read_file(path.string()));
    CHECK(j["total_premium"].get<double>() == 4822.78);
    std::filesystem::remove(path);
  }

  TEST_CASE("quote with sampled scenarios") {
    auto args = quote_args();
    args[8] = data_path("uniform.dist");
    const auto a = call(plus(args, {"--format", "json", "--workers", "1"}));
    const auto b = call(plus(args, {"--format", "json", "--workers", "3"}));
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto c = call(plus(args, {"--format", "json", "--seed", "7"}));
    CHECK(c.out != a.out);
  }

  TEST_CASE("assess") {
    const auto r = call({"assess", "--assess",
                         data_path("retail-l1.csv") + "," + data_path("retail-l2.csv"),
                         "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["layers"].size() == 2);
    CHECK(j["layers"][0]["p_bar"] == 0.5);
    CHECK(j["layers"][1]["objective_coverage"].contains("C2"));
    CHECK(call({"assess", "--assess", data_path("retail-l1.csv"), "--max-level", "9"}).code == 3);
  }

  TEST_CASE("adjust") {
    auto args = quote_args();
    args.resize(args.size() - 4);
    args[0] = "adjust";
    const auto r = call(plus(args, {"--claims", data_path("retail-claims.csv"), "--adjuster",
                                    data_path("retail-l1-adjuster.csv"), "--format", "json"}));
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["settlements"][0]["adjusted_loss"].get<double>() == 83333.33);
    CHECK(j["settlements"][0]["payout"].get<double>() == 50000.0);
    CHECK(call(plus(args, {"--claims", data_path("retail-claims.csv"), "--adjuster",
                           data_path("retail-l1.csv")}))
              .code == 1);
  }

  TEST_CASE("simulate") {
    const auto r = call(plus(simulate_args(), {"--format", "json", "--utility", "linear"}));
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 2000);
    CHECK(j["seed"] == 42);
    CHECK(j["generator"] == "philox4x32-10");
    CHECK(j["quantiles"].size() == 4);
    CHECK(j.contains("premium"));
    const auto again = call(plus(simulate_args(), {"--format", "json", "--utility", "linear"}));
    CHECK(again.out == r.out);
    const auto text = call(simulate_args());
    CHECK(text.out.find("generator: philox4x32-10") != std::string::npos);
    const auto at = text.out.find("mean: ");
    REQUIRE(at != std::string::npos);
    CHECK(std::strtod(text.out.c_str() + at + 6, nullptr) == j["mean"].get<double>());
  }

  TEST_CASE("seed precedence") {
    const auto from_file = nlohmann::json::parse(
        call(plus(simulate_args(), {"--format", "json"})).out);
    CHECK(from_file["seed"] == 42);
    const auto from_flag = nlohmann::json::parse(
        call(plus(simulate_args(), {"--format", "json", "--seed", "9"})).out);
    CHECK(from_flag["seed"] == 9);
  }

  TEST_CASE("export-dot") {
    const auto r = call({"export-dot", data_path("retail.org")});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("digraph", 0) == 0);
  }

  TEST_CASE("built-in model") {
    CHECK(cyberquote::cli::builtin_model_text().find("AC.L1-3.1.22") != std::string_view::npos);
  }
}
