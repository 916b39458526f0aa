#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "table.hpp"

using pdm::cli::kExitOk;
using pdm::cli::kExitRejected;
using pdm::cli::kExitUsage;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = pdm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> fields;
    std::stringstream ls(line);
    for (std::string f; std::getline(ls, f, ',');) fields.push_back(f);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    rows.push_back(fields);
  }
  return rows;
}

std::size_t column(const std::vector<std::vector<std::string>>& t, const std::string& name) {
  const auto& h = t.at(0);
  const auto it = std::find(h.begin(), h.end(), name);
  REQUIRE(it != h.end());
  return static_cast<std::size_t>(it - h.begin());
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"spectrum"}).code == kExitUsage);  // --profile is required
  CHECK(run({"spectrum", "--profile", "soliton", "--bogus"}).code == kExitUsage);
  CHECK(run({"spectrum", "--profile", "cubic"}).code == kExitUsage);
  CHECK(run({"spectrum", "--profile", "soliton", "--ordering", "xyz"}).code == kExitUsage);
  CHECK(run({"spectrum", "--profile", "soliton", "--a", "1/0", "--b", "0"}).code == kExitUsage);
  CHECK(run({"spectrum", "--profile", "soliton", "--a", "-1/4"}).code == kExitUsage);
  CHECK(run({"spectrum", "--profile", "soliton", "--a", "0", "--b", "0", "--ordering", "mm"}).code == kExitUsage);
  CHECK(run({"--precision", "5", "spectrum", "--profile", "soliton", "--ordering", "mm"}).code == kExitUsage);
  CHECK(run({"--precision", "18", "spectrum", "--profile", "soliton", "--ordering", "mm"}).code == kExitUsage);
  CHECK(run({"--format", "xml", "spectrum", "--profile", "soliton", "--ordering", "mm"}).code == kExitUsage);
  CHECK(run({"wavefunction", "--profile", "soliton", "--ordering", "mm", "--n", "0", "--energy", "1"}).code ==
        kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("rejections exit 2 with a record") {
  for (const auto& [profile, ordering] : std::vector<std::pair<std::string, std::string>>{
           {"soliton", "gw"}, {"soliton", "zk"}, {"soliton", "lk"}, {"biquadratic", "gw"}, {"biquadratic", "lk"},
           {"exponential", "gw"}, {"parabolic", "gw"}, {"parabolic", "zk"}, {"parabolic", "lk"}}) {
    CAPTURE(profile);
    CAPTURE(ordering);
    const auto r = run({"spectrum", "--profile", profile, "--ordering", ordering});
    CHECK(r.code == kExitRejected);
    const auto t = csv(r.out);
    REQUIRE(t.size() == 2);
    CHECK(t[0] == std::vector<std::string>{"status", "classification", "message"});
    CHECK(t[1][0] == "rejected");
    CHECK(t[1][1].rfind("NoSpectrum", 0) == 0);
  }
  CHECK(run({"hetero", "--m1", "1", "--m2", "1"}).code == kExitRejected);
  CHECK(run({"wavefunction", "--profile", "quadratic", "--ordering", "zk", "--energy", "0.25", "--parity", "even"})
            .code == kExitRejected);
  const auto j = json_of(run({"--format", "json", "spectrum", "--profile", "soliton", "--ordering", "gw"}));
  CHECK(j["status"] == "rejected");
}

TEST_CASE("spectrum reproduces the exponential roots") {
  const double expected[3][3] = {{0.9407705639, 3.959371185, 7.086380848},
                                 {1.570796327, 4.712388980, 7.853981634},
                                 {2.165871271, 5.427433202, 8.595426306}};
  const char* orderings[] = {"zk", "mm", "bdd"};
  for (int i = 0; i < 3; ++i) {
    const auto r = run({"spectrum", "--profile", "exponential", "--ordering", orderings[i]});
    REQUIRE(r.code == kExitOk);
    const auto t = csv(r.out);
    REQUIRE(t.size() == 4);
    for (int n = 0; n < 3; ++n) {
      CHECK(std::stod(t[n + 1][column(t, "k")]) == doctest::Approx(expected[i][n]).epsilon(1e-9));
      CHECK(t[n + 1][column(t, "kind")] == "discrete");
    }
  }
  const auto lk = run({"spectrum", "--profile", "exponential", "--ordering", "lk"});
  const auto zk = run({"spectrum", "--profile", "exponential", "--ordering", "zk"});
  CHECK(csv(lk.out)[1][column(csv(lk.out), "k")] == csv(zk.out)[1][column(csv(zk.out), "k")]);
}

TEST_CASE("spectrum with rational orderings") {
  const auto r = run({"spectrum", "--profile", "soliton", "--a", "-1/4", "--b", "-0.25", "--count", "3"});
  REQUIRE(r.code == kExitOk);
  const auto t = csv(r.out);
  REQUIRE(t.size() == 4);
  for (int n = 0; n < 3; ++n) CHECK(std::stod(t[n + 1][column(t, "e_tilde")]) == (n + 1) * (n + 1));

  const auto q = csv(run({"spectrum", "--profile", "quadratic", "--ordering", "zk"}).out);
  REQUIRE(q.size() == 3);
  CHECK(q[1][column(q, "kind")] == "bound");
  CHECK(q[2][column(q, "kind")] == "continuum_threshold");
  CHECK(std::stod(q[2][column(q, "e_tilde")]) == 0.25);

  const auto p = run({"spectrum", "--profile", "parabolic", "--ordering", "bdd"});
  CHECK(p.code == kExitOk);
  CHECK(csv(p.out).size() == 1);  // header only: the surroundings fix the spectrum
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::vector<std::string>> cmds = {
      {"spectrum", "--profile", "exponential", "--ordering", "bdd", "--count", "5"},
      {"--format", "json", "wavefunction", "--profile", "biquadratic", "--ordering", "zk", "--n", "1", "--normalize"},
      {"potential", "--profile", "soliton", "--ordering", "mm"},
      {"--format", "json", "hetero", "--mode", "scan", "--points", "64"},
  };
  for (const auto& c : cmds) {
    const auto a = run(c);
    const auto b = run(c);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("potential") {
  const auto zk = run({"potential", "--profile", "exponential", "--ordering", "zk"});
  const auto lk = run({"potential", "--profile", "exponential", "--ordering", "lk"});
  CHECK(zk.code == kExitOk);
  // identical apart from the ordering metadata, which CSV does not carry
  CHECK(zk.out == lk.out);

  const auto t = csv(run({"potential", "--profile", "soliton", "--ordering", "bdd", "--z-min", "0", "--z-max", "1",
                          "--samples", "11"})
                         .out);
  REQUIRE(t.size() == 12);
  CHECK(std::stod(t[1][column(t, "V")]) == 0.5);

  const auto pole = csv(run({"potential", "--profile", "exponential", "--ordering", "bdd", "--z-min", "0",
                             "--z-max", "1", "--samples", "3"})
                            .out);
  REQUIRE(pole.size() == 4);
  CHECK(pole[3][column(pole, "V")].empty());

  const auto j = json_of(run({"--format", "json", "potential", "--profile", "soliton", "--ordering", "bdd"}));
  CHECK(j["parameters"]["omega"] == "3/4");
  CHECK(j["rows"].size() == 400);
}

TEST_CASE("wavefunction") {
  const auto t = csv(run({"wavefunction", "--profile", "biquadratic", "--ordering", "zk", "--n", "0", "--x-min",
                          "-10", "--x-max", "10", "--samples", "401", "--precision", "17"})
                         .out);
  REQUIRE(t.size() == 402);
  for (std::size_t i = 1; i < t.size(); ++i) {
    CHECK(std::abs(std::stod(t[i][column(t, "rho")]) - std::stod(t[i][column(t, "m_of_x")])) <= 1e-10);
  }

  const auto odd = csv(run({"wavefunction", "--profile", "soliton", "--ordering", "bdd", "--n", "1", "--samples",
                            "201", "--precision", "17"})
                           .out);
  REQUIRE(odd.size() == 202);
  const auto psi = column(odd, "psi");
  for (std::size_t i = 1; i <= 100; ++i) CHECK(std::stod(odd[i][psi]) == -std::stod(odd[202 - i][psi]));
  CHECK(std::stod(odd[101][psi]) == 0.0);

  const auto norm = json_of(run({"--format", "json", "wavefunction", "--profile", "quadratic", "--ordering", "zk",
                                 "--n", "0", "--normalize"}));
  CHECK(norm["parameters"]["normalized"] == true);
  CHECK(norm["parameters"]["norm_constant"].get<double>() == doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-8));

  CHECK(run({"wavefunction", "--profile", "quadratic", "--ordering", "zk", "--energy", "2", "--parity", "even",
             "--normalize"})
            .code == kExitRejected);
  CHECK(run({"wavefunction", "--profile", "parabolic", "--ordering", "bdd", "--energy", "2"}).code == kExitOk);
}

TEST_CASE("hetero") {
  const auto scan = json_of(run({"--format", "json", "hetero"}));
  CHECK(scan["rows"].size() == 512);
  CHECK(scan["summary"]["max_flux_residual"].get<double>() <= 1e-10);
  CHECK(scan["summary"]["resonances"] == 0);
  CHECK(scan["rows"][0]["e_tilde"].get<double>() > 0.5);
  CHECK(scan["rows"][511]["e_tilde"].get<double>() == 100.0);

  const auto states = run({"hetero", "--mode", "states"});
  CHECK(states.code == kExitOk);
  CHECK(csv(states.out).size() == 1);
  const auto zk = json_of(run({"--format", "json", "hetero", "--mode", "states", "--ordering", "zk"}));
  CHECK(zk["summary"]["count"] == 1);
  CHECK(zk["rows"][0]["e_tilde"].get<double>() == doctest::Approx(-5.0624009490e-3).epsilon(1e-8));

  const auto psi = csv(run({"hetero", "--mode", "profilepsi", "--energies", "3.5", "--x-min", "-1.2", "--x-max", "1.2",
                            "--samples", "2401", "--precision", "15"})
                           .out);
  REQUIRE(psi.size() == 2402);
  const auto re = column(psi, "psi_re"), im = column(psi, "psi_im");
  for (std::size_t i = 2; i < psi.size(); ++i) {
    const double dre = std::stod(psi[i][re]) - std::stod(psi[i - 1][re]);
    const double dim = std::stod(psi[i][im]) - std::stod(psi[i - 1][im]);
    // step 1e-3 and |ψ′| ≲ 3 here, so a jump at an interface would stand out
    CHECK(std::hypot(dre, dim) <= 5e-3);
  }
  CHECK(run({"hetero", "--ordering", "gw"}).code == kExitRejected);
}

TEST_CASE("validate") {
  const auto r = run({"--format", "json", "validate"});
  CHECK(r.code == kExitOk);
  const auto j = json_of(r);
  CHECK(j["rows"].size() == 25);
  CHECK(j["summary"]["pass"] == true);
  CHECK(j["summary"]["failures"] == 0);

  const auto bad = run({"validate", "--scope", "arrangement", "--profile", "soliton", "--ordering", "bdd",
                        "--perturb-omega", "soliton:BDD:0.001"});
  CHECK(bad.code == kExitRejected);
  CHECK(bad.err.find("soliton:BDD") != std::string::npos);
  const auto t = csv(bad.out);
  REQUIRE(t.size() == 2);
  CHECK(t[1][column(t, "pass")] == "false");
  CHECK(t[1][column(t, "omega")] == "751/1000");
}

TEST_CASE("precision, environment and config file") {
  const std::vector<std::string> cmd = {"spectrum", "--profile", "exponential", "--ordering", "zk", "--count", "1"};
  const auto mantissa_digits = [](const std::string& out) {
    const auto t = csv(out);
    const auto k = t[1][column(t, "k")];
    return k.substr(0, k.find('e')).size() - 2;  // "d." prefix
  };
  CHECK(mantissa_digits(run(cmd).out) == 11);  // default 12 significant digits

  ::setenv("PDM_PRECISION", "8", 1);
  CHECK(mantissa_digits(run(cmd).out) == 7);
  auto with_flag = cmd;
  with_flag.insert(with_flag.begin(), {"--precision", "15"});
  CHECK(mantissa_digits(run(with_flag).out) == 14);
  ::setenv("PDM_PRECISION", "40", 1);
  CHECK(run(cmd).code == kExitUsage);
  ::unsetenv("PDM_PRECISION");

  const auto path = std::filesystem::temp_directory_path() / "pdm_cli_test.ini";
  {
    std::ofstream f(path);
    f << "format = json\nprecision = 9\n\n[hetero]\nm1 = 0.25\nm2 = 2\nmode = scan\npoints = 8\n";
  }
  const auto r = run({"--config", path.string(), "hetero"});
  std::filesystem::remove(path);
  REQUIRE(r.code == kExitOk);
  const auto j = json_of(r);
  CHECK(j["parameters"]["m1"] == 0.25);
  CHECK(j["rows"].size() == 8);
  CHECK(r.out.find("1.00000000e+02") != std::string::npos);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "pdm_cli_out.csv";
  const auto r = run({"spectrum", "--profile", "soliton", "--ordering", "mm", "-o", path.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  CHECK(header == "n,parity,e_tilde,k,classification,kind");
  std::filesystem::remove(path);
}

TEST_CASE("table encodings") {
  using namespace pdm::cli;
  Table t;
  t.command = "spectrum";
  t.columns = {"name", "value", "flag", "missing"};
  t.add_row({std::string("a,b\"c"), 0.1, true, Cell{}});
  t.add_row({std::string("line\nbreak"), -INFINITY, false, std::int64_t{-3}});
  std::ostringstream c;
  write_csv(c, t, 6);
  CHECK(c.str() == "name,value,flag,missing\n\"a,b\"\"c\",1.00000e-01,true,\n\"line\nbreak\",-inf,false,-3\n");

  std::ostringstream j;
  write_json(j, t, 6);
  const auto parsed = nlohmann::json::parse(j.str());
  CHECK(parsed["rows"][0]["name"] == "a,b\"c");
  CHECK(parsed["rows"][1]["value"].is_null());
  CHECK(parsed["rows"][0]["missing"].is_null());

  CHECK(format_number(12345.678, 6) == "1.23457e+04");
  CHECK(format_number(0.0, 6) == "0.00000e+00");
  CHECK(format_number(NAN, 6) == "nan");
}
