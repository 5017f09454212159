#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>
#include <srk/serialization.hpp>
#include <srk_cli/dispatch.hpp>

using namespace srk;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  RunResult r;
  r.code = srk_cli::dispatch(std::move(args), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Quaternion parse_line(std::string text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == ' ')) {
    text.pop_back();
  }
  return parse_quaternion(text);
}

}  // namespace

TEST_CASE("the identity series evaluates to the point itself") {
  const RunResult r = run({"eval", "--f", R"(["0","1"])", "--q", "1+0i+0j+0k"});
  CHECK(r.code == 0);
  CHECK(r.out == "1+0i+0j+0k\n");
  CHECK(r.err.empty());
}

TEST_CASE("single values can be wrapped in json, before or after the verb") {
  const RunResult before =
      run({"--format", "json", "eval", "--f", R"(["0","1"])", "--q", "2i"});
  const RunResult after =
      run({"eval", "--f", R"(["0","1"])", "--q", "2i", "--format", "json"});
  CHECK(before.code == 0);
  CHECK(before.out == after.out);
  const auto j = nlohmann::json::parse(before.out);
  CHECK(parse_quaternion(j.at("value").get<std::string>()) ==
        Quaternion(0.0, 2.0, 0.0, 0.0));
}

TEST_CASE("usage problems exit with code 1 and a diagnostic") {
  CHECK(run({}).code == 1);
  CHECK(run({"no-such-verb"}).code == 1);
  CHECK(run({"eval", "--f", "[]"}).code == 1);
  CHECK(run({"eval", "--f", "[]", "--q", "0", "--bogus"}).code == 1);
  const RunResult r = run({"check-sp", "--family", "nope"});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
  const RunResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("check-sp") != std::string::npos);
}

TEST_CASE("domain problems exit with code 1") {
  CHECK(run({"recip", "--f", "[]"}).code == 1);
  CHECK(run({"mobius", "eval", "--q0", "2", "--q", "0"}).code == 1);
  CHECK(run({"eval", "--f", "@/no/such/file", "--q", "0"}).code == 1);
  CHECK(run({"derive", "--kind", "spherical", "--f", R"(["0","1"])"}).code ==
        1);
}

TEST_CASE("mul emits the convolution of the coefficients") {
  const std::string f = R"(["0.5+0.5i","0","1k"])";
  const std::string g = R"(["1j","0.25"])";
  const RunResult r = run({"mul", "--f", f, "--g", g});
  REQUIRE(r.code == 0);
  const StarSeries product = parse_series(r.out);
  const StarSeries expect = star_mul(parse_series(f), parse_series(g));
  REQUIRE(product.degree() == expect.degree());
  for (int n = 0; n <= expect.degree(); ++n) {
    CHECK(product.coeff(n) == expect.coeff(n));
  }
}

TEST_CASE("conj and symm match the library operations") {
  const std::string f = R"(["1+2i","3j","0.5-0.5k"])";
  const RunResult rc = run({"conj", "--f", f});
  const RunResult rs = run({"symm", "--f", f});
  REQUIRE(rc.code == 0);
  REQUIRE(rs.code == 0);
  CHECK(rc.out == serialize_series(conjugate(parse_series(f))) + "\n");
  CHECK(rs.out == serialize_series(symmetrize(parse_series(f))) + "\n");
}

TEST_CASE("quotient construction, evaluation, and route comparison") {
  const std::string denom = R"(["1","-0.3-0.1i+0.2k"])";
  const std::string numer = R"(["0.2j","0.4","0.1i"])";

  const RunResult lit = run({"quotient", "--denom", denom, "--numer", numer});
  REQUIRE(lit.code == 0);
  const RegularQuotient Q = parse_quotient(lit.out);
  CHECK(Q.side() == QuotientSide::left);

  const std::string point = "0.2+0.3i-0.1j+0.4k";
  const RunResult symm_route =
      run({"quotient", "--denom", denom, "--numer", numer, "--q", point});
  const RunResult transform_route =
      run({"quotient", "--denom", denom, "--numer", numer, "--q", point,
           "--route", "transform"});
  REQUIRE(symm_route.code == 0);
  REQUIRE(transform_route.code == 0);
  const Quaternion a = parse_line(symm_route.out);
  const Quaternion b = parse_line(transform_route.out);
  CHECK(norm(a - b) <= 1e-10 * (1.0 + norm(a)));

  const RunResult both =
      run({"quotient", "--denom", denom, "--numer", numer, "--q", point,
           "--route", "both"});
  CHECK(both.code == 0);
  CHECK(both.out.find("\"agree\": true") != std::string::npos);

  const RunResult missing = run({"quotient", "--denom", denom});
  CHECK(missing.code == 1);
}

TEST_CASE("mobius verbs cover evaluation, fixing, and fixed points") {
  const RunResult at_center =
      run({"mobius", "eval", "--q0", "0.5", "--q", "0.5"});
  REQUIRE(at_center.code == 0);
  CHECK(parse_line(at_center.out) == Quaternion::zero());

  const RunResult id = run({"mobius", "fixed-points", "--a", "0", "--u", "1"});
  REQUIRE(id.code == 0);
  CHECK(id.out.find("\"identity\": true") != std::string::npos);

  const RunResult fix =
      run({"mobius", "fix", "--q0", "0.2+0.3i", "--v", "0.6+0.8j"});
  REQUIRE(fix.code == 0);
  const auto jf = nlohmann::json::parse(fix.out);
  const Quaternion q0 = parse_quaternion(jf.at("q0").get<std::string>());
  const Quaternion u = parse_quaternion(jf.at("u").get<std::string>());
  const RunResult round_trip =
      run({"mobius", "eval", "--q0", to_string(q0), "--u", to_string(u), "--q",
           "0.2+0.3i"});
  REQUIRE(round_trip.code == 0);
  CHECK(norm(parse_line(round_trip.out) - Quaternion(0.2, 0.3, 0, 0)) <=
        1e-9);

  const RunResult fp =
      run({"mobius", "fixed-points", "--a", to_string(q0), "--u",
           to_string(u)});
  REQUIRE(fp.code == 0);
  const auto jp = nlohmann::json::parse(fp.out);
  CHECK_FALSE(jp.at("identity").get<bool>());
  REQUIRE(jp.at("points").size() == 1);
  CHECK(norm(parse_quaternion(jp.at("points")[0].get<std::string>()) -
             Quaternion(0.2, 0.3, 0, 0)) <= 1e-8);
}

TEST_CASE("matrix actions compose through the act verb") {
  const std::string f = R"(["0","1"])";
  const std::string matrix = R"([["1","-0.4i"],["-0.4i","1"]])";
  const RunResult r =
      run({"mobius", "act", "--f", f, "--matrix", matrix});
  REQUIRE(r.code == 0);
  const RegularQuotient Q = parse_quotient(r.out);
  const Quaternion probe(0.1, 0.2, -0.3, 0.1);
  const QuatMatrix2 A = parse_matrix(matrix);
  const RegularQuotient expect = right_action(StarSeries::identity(), A);
  CHECK(norm(eval_quotient(Q, probe) - eval_quotient(expect, probe)) <= 1e-12);
}

TEST_CASE("derive prints series, pairs, and difference quotients") {
  const std::string square = R"(["0","0","1"])";
  const RunResult cullen =
      run({"derive", "--kind", "cullen", "--f", square, "--q0", "0.5"});
  REQUIRE(cullen.code == 0);
  const auto jc = nlohmann::json::parse(cullen.out);
  CHECK(parse_quaternion(jc.at("value").get<std::string>()) ==
        Quaternion(1.0));

  const RunResult spherical = run(
      {"derive", "--kind", "spherical", "--f", square, "--q0", "0.3+0.4i"});
  REQUIRE(spherical.code == 0);
  const auto js = nlohmann::json::parse(spherical.out);
  CHECK(norm(parse_quaternion(js.at("derivative").get<std::string>()) -
             Quaternion(0.6)) <= 1e-12);

  const RunResult diff =
      run({"derive", "--kind", "R", "--f", square, "--q0", "0.25+0.5j"});
  REQUIRE(diff.code == 0);
  const auto jr = nlohmann::json::parse(diff.out);
  const StarSeries R = parse_series(jr.at("series").dump());
  CHECK(R.degree() == 1);
  CHECK(norm(R.coeff(0) - Quaternion(0.25, 0.0, 0.5, 0.0)) <= 1e-15);
  CHECK(norm(R.coeff(1) - Quaternion::one()) <= 1e-15);
}

TEST_CASE("expand emits coefficient arrays for both kinds") {
  const std::string cube = R"(["0","0","0","1"])";
  const RunResult taylor = run(
      {"expand", "--kind", "taylor", "--f", cube, "--q0", "0.5", "--order",
       "3"});
  REQUIRE(taylor.code == 0);
  const auto jt = nlohmann::json::parse(taylor.out);
  REQUIRE(jt.size() == 4);
  CHECK(norm(parse_quaternion(jt[0].get<std::string>()) -
             Quaternion(0.125)) <= 1e-15);
  CHECK(norm(parse_quaternion(jt[3].get<std::string>()) - Quaternion::one()) <=
        1e-15);

  const RunResult spherical = run(
      {"expand", "--kind", "spherical", "--f", cube, "--q0", "0.2+0.4i",
       "--order", "2"});
  REQUIRE(spherical.code == 0);
  const auto jsph = nlohmann::json::parse(spherical.out);
  CHECK(jsph.size() == 6);
}

TEST_CASE("sigma prints the adapted distance") {
  const RunResult same_plane = run({"sigma", "--q", "1+1i", "--p", "1-1i"});
  REQUIRE(same_plane.code == 0);
  CHECK(same_plane.out == "2\n");
  const RunResult cross_plane = run({"sigma", "--q", "1i", "--p", "1j"});
  REQUIRE(cross_plane.code == 0);
  CHECK(cross_plane.out == "2\n");
}

TEST_CASE("series arguments can come from files") {
  const std::string path = "cli_series_arg.json";
  {
    std::ofstream file(path);
    file << R"(["0","0","1"])";
  }
  const RunResult r = run({"eval", "--f", "@" + path, "--q", "3"});
  std::remove(path.c_str());
  REQUIRE(r.code == 0);
  CHECK(parse_line(r.out) == Quaternion(9.0));
}

TEST_CASE("check-sp reports are deterministic and gate on violations") {
  const std::vector<std::string> args = {"check-sp", "--family", "mobius",
                                         "--count", "4", "--seed", "7"};
  const RunResult first = run(args);
  const RunResult second = run(args);
  REQUIRE(first.code == 0);
  CHECK(first.out == second.out);
  const auto j = nlohmann::json::parse(first.out);
  CHECK(j.at("meta").at("seed").get<int>() == 7);
  CHECK(j.at("summary").at("equality_count").get<int>() ==
        j.at("summary").at("record_count").get<int>());

  const std::string report_path = "cli_report.json";
  const RunResult filed = run({"check-sp", "--family", "blaschke", "--count",
                               "3", "--seed", "5", "--out", report_path});
  REQUIRE(filed.code == 0);
  CHECK(filed.out.rfind("records ", 0) == 0);
  std::ifstream file(report_path);
  REQUIRE(file.good());
  std::stringstream buffer;
  buffer << file.rdbuf();
  file.close();
  std::remove(report_path.c_str());
  const auto jf = nlohmann::json::parse(buffer.str());
  CHECK(jf.at("meta").at("family").get<std::string>() == "blaschke");
}

TEST_CASE("the tolerance scale narrows thresholds enough to trip the gate") {
  setenv("SRK_TOLERANCE_SCALE", "1e-9", 1);
  const RunResult strict = run(
      {"check-sp", "--family", "mobius", "--count", "5", "--seed", "1"});
  unsetenv("SRK_TOLERANCE_SCALE");
  CHECK(strict.code == 2);
  const auto j = nlohmann::json::parse(strict.out);
  CHECK(j.at("summary").at("violation_count").get<int>() > 0);

  setenv("SRK_TOLERANCE_SCALE", "not-a-number", 1);
  const RunResult bad = run({"sigma", "--q", "0", "--p", "1"});
  unsetenv("SRK_TOLERANCE_SCALE");
  CHECK(bad.code == 0);  // sigma never consults the scale

  setenv("SRK_TOLERANCE_SCALE", "not-a-number", 1);
  const RunResult bad_used = run(
      {"check-sp", "--family", "mobius", "--count", "1", "--seed", "1"});
  unsetenv("SRK_TOLERANCE_SCALE");
  CHECK(bad_used.code == 1);
}

TEST_CASE("falsify finds nothing on honest families") {
  const RunResult r = run({"falsify", "--budget", "4", "--seed", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("no violation found") != std::string::npos);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("seed").get<int>() == 3);
  CHECK(j.at("violation_count").get<int>() == 0);
}

TEST_CASE("rigidity classifies the fixing family through the CLI") {
  const RunResult id = run({"rigidity", "--q0", "0.2+0.3i-0.1k", "--v", "1"});
  REQUIRE(id.code == 0);
  const auto ji = nlohmann::json::parse(id.out);
  CHECK(ji.at("identity").get<bool>());

  const RunResult moved =
      run({"rigidity", "--q0", "0.2+0.3i-0.1k", "--v", "0.6+0.8i"});
  REQUIRE(moved.code == 0);
  const auto jm = nlohmann::json::parse(moved.out);
  CHECK_FALSE(jm.at("identity").get<bool>());
  CHECK(jm.at("fixed_point").get<bool>());

  const RunResult series_mode =
      run({"rigidity", "--f", R"(["0","0.5"])", "--q0", "0"});
  REQUIRE(series_mode.code == 0);
  const auto js = nlohmann::json::parse(series_mode.out);
  CHECK_FALSE(js.at("identity").get<bool>());

  CHECK(run({"rigidity", "--q0", "0"}).code == 1);
  CHECK(run({"rigidity", "--q0", "0", "--v", "1", "--f", R"(["0","1"])"})
            .code == 1);
  CHECK(run({"rigidity", "--f", R"(["0","0.5"])", "--q0", "0.3"}).code == 1);
}
