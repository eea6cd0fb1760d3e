#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "scp/families.hpp"
#include "scp/fixtures.hpp"
#include "scp/io.hpp"
#include "scp/irreducibility.hpp"
#include "scp/qary.hpp"
#include "scp/symmetry.hpp"
#include "scp/affine.hpp"

using namespace scp;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_tool(const std::string& args, const std::string& stdin_data = "") {
  std::string cmd = std::string(SCPTOOL_PATH) + " " + args + " 2>&1";
  std::string tmpname;
  if (!stdin_data.empty()) {
    char name[] = "/tmp/scp_cli_in_XXXXXX";
    int fd = mkstemp(name);
    REQUIRE(fd >= 0);
    {
      std::ofstream f(name);
      f << stdin_data;
    }
    close(fd);
    tmpname = name;
    cmd += " < " + tmpname;
  }
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) res.out.append(buf.data(), got);
  int rc = pclose(pipe);
  res.status = WEXITSTATUS(rc);
  if (!tmpname.empty()) unlink(tmpname.c_str());
  return res;
}

}  // namespace

TEST_CASE("cli gen") {
  auto res = run_tool("gen s --n 4");
  CHECK(res.status == 0);
  CHECK(scptest::as_set(parse_scp(res.out)) ==
        scptest::as_set({"000*", "1000", "01**", "*01*", "1*01", "11*0", "1111"}));

  res = run_tool("gen weight --n 5 --variant D");
  CHECK(res.status == 0);
  CHECK(parse_scp(res.out).size() == 9);

  res = run_tool("gen staircase --n 3 --q 3");
  CHECK(res.status == 0);
  CHECK(parse_scp(res.out).size() == 7);

  res = run_tool("gen avsp --n 5");
  CHECK(res.status == 0);
  CHECK(parse_avsp(res.out).size() == 7);

  res = run_tool("gen s --n 2");
  CHECK(res.status == 4);  // precondition violation
}

TEST_CASE("cli verify") {
  auto res = run_tool("verify - --expect partition,tight,irreducible",
                      format_scp(family_s(5)));
  CHECK(res.status == 0);

  res = run_tool("verify - --expect irreducible", "0*\n10\n11\n");
  CHECK(res.status == 1);
  CHECK(res.out.find("witness_members: 10 11") != std::string::npos);
  CHECK(res.out.find("witness_join: 1*") != std::string::npos);

  res = run_tool("verify - --expect partition", "00\n01\n0*\n");
  CHECK(res.status == 1);

  res = run_tool("verify -", "0#\n!!\n");
  CHECK(res.status == 2);  // parse error

  // avsp input is detected by its header
  res = run_tool("verify - --expect partition,tight,irreducible",
                 "avsp n=3\nrep=000; basis=111\nrep=010; basis=001\nrep=100; basis=010\n"
                 "rep=001; basis=100\n");
  CHECK(res.status == 0);
}

TEST_CASE("cli stats and canon") {
  auto res = run_tool("stats -", format_scp(family_s(3)));
  CHECK(res.status == 0);
  CHECK(res.out.find("size: 5") != std::string::npos);
  CHECK(res.out.find("weight_vector: 1 3 0 1") != std::string::npos);
  CHECK(res.out.find("regular: true") != std::string::npos);

  res = run_tool("canon -", "*00\n001\n01*\n110\n1*1\n");
  CHECK(res.status == 0);
  SubcubeCollection canon_a3 = canonical_form(parse_scp("*00\n001\n01*\n110\n1*1\n"));
  CHECK(parse_scp(res.out) == canon_a3);
}

TEST_CASE("cli search and bounds") {
  auto res = run_tool("search min-size --n 3");
  CHECK(res.status == 0);
  CHECK(res.out.find("value: 5") != std::string::npos);
  CHECK(res.out.find("complete: true") != std::string::npos);

  res = run_tool("search min-size --n 4 --budget 10");
  CHECK(res.status == 3);  // budget exhausted, distinct from nonexistence
  CHECK(res.out.find("complete: false") != std::string::npos);

  res = run_tool("bounds --n 7");
  CHECK(res.status == 0);
  CHECK(res.out.find("max_size_upper: 83") != std::string::npos);
  CHECK(res.out.find("min_size_lower: 10") != std::string::npos);

  // worker threads change node accounting but not values or certificates
  auto serial = run_tool("search max-size --n 4 --deterministic");
  auto threaded = run_tool("search max-size --n 4 --deterministic --threads 2");
  CHECK(serial.status == 0);
  CHECK(threaded.status == 0);
  auto essentials = [](const std::string& text) {
    std::string out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line))
      if (line.rfind("nodes:", 0) != 0 && line.rfind("wall_seconds:", 0) != 0 &&
          line.rfind("completions:", 0) != 0)
        out += line + "\n";
    return out;
  };
  CHECK(essentials(serial.out) == essentials(threaded.out));
}

TEST_CASE("cli expand and compress") {
  auto res = run_tool("expand - --q 3", format_scp(family_weight(3, WeightVariant::A)));
  CHECK(res.status == 0);
  CHECK(parse_scp(res.out).size() == 13);

  res = run_tool("expand - --q 3 --phi \"01/2;0/12;2/01\"", format_scp(family_s(3)));
  CHECK(res.status == 0);
  SubcubeCollection ex = parse_scp(res.out);
  CHECK(is_partition(ex));
  CHECK(test_irreducible(ex).irreducible());

  res = run_tool("compress -", format_scp(family_s(3)));
  CHECK(res.status == 0);
  CHECK(res.out.find("# tight: true") != std::string::npos);
  CHECK(parse_avsp(res.out).size() == 4);
}

TEST_CASE("cli fixtures") {
  auto res = run_tool("fixtures list");
  CHECK(res.status == 0);
  CHECK(res.out.find("s3 (scp)") != std::string::npos);
  CHECK(res.out.find("avsp-min-3 (avsp)") != std::string::npos);

  res = run_tool("fixtures dump s3");
  CHECK(res.status == 0);
  CHECK(res.out == std::string(find_fixture("s3")->content));

  res = run_tool("fixtures dump nope");
  CHECK(res.status == 4);
}

TEST_CASE("fixture integrity: every fixture re-verifies its annotations") {
  for (const Fixture& f : fixtures()) {
    INFO(f.name);
    FixtureExpectations exp = fixture_expectations(f.content);
    if (f.avsp) {
      AffinePartition F = parse_avsp(f.content);
      CHECK(avsp_is_partition(F) == exp.partition);
      if (exp.tight) CHECK(avsp_is_tight(F) == *exp.tight);
      if (exp.irreducible) CHECK(avsp_test_irreducible(F).irreducible() == *exp.irreducible);
    } else {
      SubcubeCollection F = parse_scp(f.content);
      CHECK(is_partition(F) == exp.partition);
      if (exp.tight) CHECK(is_tight(F) == *exp.tight);
      if (exp.irreducible) CHECK(test_irreducible(F).irreducible() == *exp.irreducible);
      if (exp.homogeneous_codim)
        CHECK(structure_flags(F).homogeneous_codim == exp.homogeneous_codim);
      // round trip through the text grammar
      CHECK(parse_scp(format_scp(F)) == F);
    }
  }
}

TEST_CASE("fixture files on disk match the embedded corpus") {
  for (const Fixture& f : fixtures()) {
    INFO(f.name);
    std::string path = std::string(FIXTURES_DIR) + "/" + std::string(f.name) +
                       (f.avsp ? ".avsp" : ".scp");
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), path);
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == f.content);
  }
}

TEST_CASE("fixtures match their generators") {
  CHECK(scptest::as_set(parse_scp(find_fixture("s3")->content)) ==
        scptest::as_set(family_s(3)));
  CHECK(scptest::as_set(parse_scp(find_fixture("s4")->content)) ==
        scptest::as_set(family_s(4)));
  CHECK(scptest::as_set(parse_scp(find_fixture("s5")->content)) ==
        scptest::as_set(family_s(5)));
  CHECK(scptest::as_set(parse_scp(find_fixture("cubic-5")->content)) ==
        scptest::as_set(cubic(5)));
  CHECK(scptest::as_set(parse_scp(find_fixture("lagarias-shor-5")->content)) ==
        scptest::as_set(lagarias_shor(5)));
  CHECK(scptest::as_set(parse_scp(find_fixture("maximal-3")->content)) ==
        scptest::as_set(maximal_family(3)));
  CHECK(scptest::as_set(parse_scp(find_fixture("maximal-4")->content)) ==
        scptest::as_set(maximal_family(4)));
  CHECK(scptest::as_set(parse_scp(find_fixture("maximal-6")->content)) ==
        scptest::as_set(maximal_family(6)));
  CHECK(scptest::as_set(parse_scp(find_fixture("spm-4")->content)) ==
        scptest::as_set(special_perfect_matching(4)));
  CHECK(scptest::as_set(parse_scp(find_fixture("min-dim-6")->content)) ==
        scptest::as_set(min_dim_family(6)));
  CHECK(scptest::as_set(parse_scp(find_fixture("homogeneous-6-4")->content)) ==
        scptest::as_set(homogeneous_6_4()));
  for (const char* name : {"a5", "b5", "c5", "d5"}) {
    WeightVariant v = name[0] == 'a'   ? WeightVariant::A
                      : name[0] == 'b' ? WeightVariant::B
                      : name[0] == 'c' ? WeightVariant::C
                                       : WeightVariant::D;
    SubcubeCollection built = family_weight(5, v);
    std::vector<Subcube> rotated;
    for (const Subcube& s : built.members()) rotated.push_back(rotated_left(s));
    CHECK(scptest::as_set(parse_scp(find_fixture(name)->content)) ==
          scptest::as_set(SubcubeCollection(2, 5, rotated)));
  }
}
