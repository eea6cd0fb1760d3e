#include "scp/fixtures.hpp"

#include <sstream>

namespace scp {

namespace {

// clang-format off
constexpr std::string_view kS3 =
    "# the unique tight irreducible partition of the 3-cube, size 5\n"
    "# expect: partition tight irreducible\n"
    "scp q=2 n=3\n"
    "000\n*01\n1*0\n01*\n111\n";

constexpr std::string_view kS4 =
    "# merge-grown partition of size 7\n"
    "# expect: partition tight irreducible\n"
    "scp q=2 n=4\n"
    "000*\n1000\n01**\n*01*\n1*01\n11*0\n1111\n";

constexpr std::string_view kS5 =
    "# merge-grown partition of size 9\n"
    "# expect: partition tight irreducible\n"
    "scp q=2 n=5\n"
    "000**\n1000*\n11000\n01***\n*01**\n1*01*\n11*01\n111*0\n11111\n";

constexpr std::string_view kA5 =
    "# weight vector (1,4,4,0,0,0), displayed after one left rotation\n"
    "# expect: partition tight irreducible\n"
    "scp q=2 n=5\n"
    "0000*\n01000\n0*100\n0**10\n1***0\n10001\n*1001\n**101\n***11\n";

constexpr std::string_view kB5 =
    "# weight vector (1,4,4,0,0,0), displayed after one left rotation\n"
    "# expect: partition tight irreducible\n"
    "scp q=2 n=5\n"
    "0000*\n01001\n0*101\n0**11\n1***1\n10000\n*1000\n**100\n***10\n";

constexpr std::string_view kC5 =
    "# weight vector (1,4,4,0,0,0), displayed after one left rotation\n"
    "# expect: partition tight irreducible\n"
    "scp q=2 n=5\n"
    "0100*\n00001\n0*101\n0**11\n1***1\n11000\n*0000\n**100\n***10\n";

constexpr std::string_view kD5 =
    "# weight vector (1,5,2,1,0,0), displayed after one left rotation\n"
    "# expect: partition tight irreducible\n"
    "scp q=2 n=5\n"
    "0100*\n00000\n0*100\n0**10\n1***0\n11001\n*0001\n**101\n***11\n";

constexpr std::string_view kCubic5 =
    "# cubic-size family at n=5: point, rotated edges, triple-indexed subcubes\n"
    "# expect: partition tight irreducible\n"
    "scp q=2 n=5\n"
    "00000\n001**\n*001*\n**001\n1**00\n01**0\n11*1*\n1011*\n011*1\n01011\n1*101\n";

constexpr std::string_view kLagariasShor5 =
    "# block construction (*1 and 0 blocks, all rotations) at n=5, size 12\n"
    "# expect: partition tight irreducible\n"
    "scp q=2 n=5\n"
    "00000\n*1000\n0*100\n00*10\n000*1\n1000*\n"
    "11111\n*1*10\n*10*1\n0*1*1\n1*10*\n10*1*\n";

constexpr std::string_view kMaximal3 =
    "# maximal-size base at n=3, size 5\n"
    "# expect: partition tight irreducible\n"
    "scp q=2 n=3\n"
    "100\n*10\n1*1\n00*\n011\n";

constexpr std::string_view kMaximal4 =
    "# the exceptional n=4 maximum: 9 members, size 10 is impossible\n"
    "# expect: partition tight irreducible\n"
    "scp q=2 n=4\n"
    "0000\n0011\n1101\n1110\n*100\n*111\n0*01\n0*10\n10**\n";

constexpr std::string_view kMaximal6 =
    "# maximal-size base at n=6, size 40\n"
    "# expect: partition tight irreducible\n"
    "scp q=2 n=6\n"
    "000010\n000100\n001011\n001101\n110010\n110100\n111011\n111101\n"
    "010001\n010111\n011000\n011110\n100001\n100111\n101000\n101110\n"
    "*00011\n*01001\n*10110\n*11100\n"
    "0*1010\n0*1111\n1*0000\n1*0101\n"
    "00*110\n01*011\n10*100\n11*001\n"
    "001*00\n011*01\n100*10\n110*11\n"
    "0001*1\n0100*0\n1011*1\n1110*0\n"
    "00000*\n01010*\n10101*\n11111*\n";

constexpr std::string_view kSpm4 =
    "# irreducible perfect matching of the 4-cube\n"
    "# expect: partition tight irreducible homogeneous=3\n"
    "scp q=2 n=4\n"
    "0*10\n01*1\n000*\n1*01\n10*0\n111*\n*100\n*011\n";

constexpr std::string_view kMinDim6 =
    "# base with minimum dimension 2 at n=6\n"
    "# expect: partition tight irreducible\n"
    "scp q=2 n=6\n"
    "0*0*1*\n00**0*\n001*1*\n010*0*\n0110**\n"
    "1**0*1\n10***0\n10*1*1\n11*0*0\n1101**\n*111**\n";

constexpr std::string_view kHomogeneous64 =
    "# the unique irreducible (6,4)-homogeneous partition\n"
    "# expect: partition tight irreducible homogeneous=4\n"
    "scp q=2 n=6\n"
    "0000**\n001**1\n01*01*\n01**00\n0*01*1\n0**110\n*010*0\n*0*100\n"
    "1101**\n111**0\n10*11*\n10**01\n1*00*0\n1**011\n*111*1\n*1*001\n";

constexpr std::string_view kT6 =
    "# inductive base for the affine small-size family, even lengths\n"
    "# expect: partition tight irreducible\n"
    "scp q=2 n=6\n"
    "*0110*\n*1101*\n*001*1\n*010*0\n*00**0\n*0*0*1\n"
    "**111*\n011*0*\n110*1*\n010***\n11**0*\n";

constexpr std::string_view kExceptional34 =
    "# ternary n=4 partition of size 51 that is not an expansion image:\n"
    "# the triples 001,122,212 and 001,112,210 are not product sets\n"
    "# expect: partition tight irreducible\n"
    "scp q=3 n=4\n"
    "0000\n0002\n0020\n0022\n0101\n0102\n0111\n0122\n0200\n0201\n0211\n0220\n"
    "1010\n1011\n1020\n1021\n1102\n1110\n1120\n1122\n1201\n1202\n1211\n1212\n"
    "2011\n2012\n2021\n2022\n2110\n2111\n2200\n2212\n2220\n2222\n2100\n2101\n"
    "01*0\n02*2\n0*21\n10*2\n11*1\n1*00\n20*0\n22*1\n2*02\n"
    "001*\n122*\n212*\n*001\n*112\n*210\n";

constexpr std::string_view kCompressNontightBase =
    "# compression of this partition loses tightness: every pattern class\n"
    "# joins to the full cube\n"
    "# expect: partition tight irreducible\n"
    "scp q=2 n=4\n"
    "*000\n*111\n001*\n0*01\n01*0\n110*\n1*10\n10*1\n";

constexpr std::string_view kReducibleExample =
    "# 10 and 11 join to the subcube 1*\n"
    "# expect: partition tight reducible\n"
    "scp q=2 n=2\n"
    "0*\n10\n11\n";

constexpr std::string_view kAvspMin3 =
    "# minimal tight irreducible affine partition at n=3: the diagonal pair\n"
    "# {000,111} plus three subcube cosets\n"
    "# expect: partition tight irreducible\n"
    "avsp n=3\n"
    "rep=000; basis=111\n"
    "rep=010; basis=001\n"
    "rep=100; basis=010\n"
    "rep=001; basis=100\n";

constexpr std::string_view kAvspNontight4 =
    "# all four linear parts contain 1111\n"
    "# expect: partition nontight irreducible\n"
    "avsp n=4\n"
    "rep=0000; basis=1000,0111\n"
    "rep=0010; basis=1110,0001\n"
    "rep=0001; basis=1011,0100\n"
    "rep=0100; basis=1101,0010\n";
// clang-format on

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = {
      {"s3", false, kS3},
      {"s4", false, kS4},
      {"s5", false, kS5},
      {"a5", false, kA5},
      {"b5", false, kB5},
      {"c5", false, kC5},
      {"d5", false, kD5},
      {"cubic-5", false, kCubic5},
      {"lagarias-shor-5", false, kLagariasShor5},
      {"maximal-3", false, kMaximal3},
      {"maximal-4", false, kMaximal4},
      {"maximal-6", false, kMaximal6},
      {"spm-4", false, kSpm4},
      {"min-dim-6", false, kMinDim6},
      {"homogeneous-6-4", false, kHomogeneous64},
      {"t6", false, kT6},
      {"exceptional-3-4", false, kExceptional34},
      {"compress-nontight-base", false, kCompressNontightBase},
      {"reducible-example", false, kReducibleExample},
      {"avsp-min-3", true, kAvspMin3},
      {"avsp-nontight-4", true, kAvspNontight4},
  };
  return all;
}

const Fixture* find_fixture(std::string_view name) {
  for (const Fixture& f : fixtures())
    if (f.name == name) return &f;
  return nullptr;
}

FixtureExpectations fixture_expectations(std::string_view content) {
  FixtureExpectations out;
  std::istringstream in{std::string(content)};
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find("# expect:");
    if (pos == std::string::npos) continue;
    std::istringstream tokens{line.substr(pos + 9)};
    std::string tok;
    while (tokens >> tok) {
      if (tok == "partition") out.partition = true;
      else if (tok == "tight") out.tight = true;
      else if (tok == "nontight") out.tight = false;
      else if (tok == "irreducible") out.irreducible = true;
      else if (tok == "reducible") out.irreducible = false;
      else if (tok.rfind("homogeneous=", 0) == 0)
        out.homogeneous_codim = std::stoi(tok.substr(12));
    }
    break;
  }
  return out;
}

}  // namespace scp
