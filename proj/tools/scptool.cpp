// Command-line surface for the subcube / affine partition toolkit.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "scp/affine.hpp"
#include "scp/families.hpp"
#include "scp/fixtures.hpp"
#include "scp/io.hpp"
#include "scp/irreducibility.hpp"
#include "scp/qary.hpp"
#include "scp/search.hpp"
#include "scp/symmetry.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitExpectationFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitBudget = 3;
constexpr int kExitPrecondition = 4;

struct CliError {
  int code;
  std::string message;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw CliError{kExitParseError, "cannot open " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_avsp(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    return line.compare(first, 4, "avsp") == 0;
  }
  return false;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

void print_collection(const scp::SubcubeCollection& F) { std::cout << scp::format_scp(F); }

struct VerifyOutcome {
  bool partition = false;
  bool tight = false;
  bool irreducible = false;
  std::optional<int> homogeneous_codim;
  std::string witness_members;
  std::string witness_join;
};

VerifyOutcome verify_scp(const scp::SubcubeCollection& F) {
  VerifyOutcome out;
  out.partition = scp::is_partition(F);
  out.tight = scp::is_tight(F);
  if (out.partition) {
    auto verdict = scp::test_irreducible(F);
    out.irreducible = verdict.irreducible();
    if (verdict.witness) {
      for (std::size_t i : verdict.witness->member_indices) {
        if (!out.witness_members.empty()) out.witness_members += " ";
        out.witness_members += F.member(i).to_string();
      }
      out.witness_join = verdict.witness->join_element.to_string();
    }
    out.homogeneous_codim = scp::structure_flags(F).homogeneous_codim;
  }
  return out;
}

VerifyOutcome verify_avsp(const scp::AffinePartition& F) {
  VerifyOutcome out;
  out.partition = scp::avsp_is_partition(F);
  out.tight = scp::avsp_is_tight(F);
  if (out.partition) {
    auto verdict = scp::avsp_test_irreducible(F);
    out.irreducible = verdict.irreducible();
    if (verdict.witness) {
      scp::AffinePartition j;
      j.n = F.n;
      for (std::size_t i : verdict.witness->member_indices) {
        if (!out.witness_members.empty()) out.witness_members += " ";
        out.witness_members += "#" + std::to_string(i);
      }
      j.members.push_back(verdict.witness->join_element);
      std::istringstream lines(scp::format_avsp(j));
      std::string skip, joinline;
      std::getline(lines, skip);
      std::getline(lines, joinline);
      out.witness_join = joinline;
    }
  }
  return out;
}

int check_expectations(const VerifyOutcome& out, const std::string& expect) {
  int rc = kExitOk;
  std::string tok;
  std::istringstream toks(expect);
  auto fail = [&](const std::string& what) {
    std::cout << "failed_expectation: " << what << "\n";
    rc = kExitExpectationFailed;
  };
  std::string normalized = expect;
  for (char& c : normalized)
    if (c == ',') c = ' ';
  std::istringstream stream(normalized);
  while (stream >> tok) {
    if (tok == "partition" && !out.partition) fail("partition");
    else if (tok == "tight" && !out.tight) fail("tight");
    else if (tok == "nontight" && out.tight) fail("nontight");
    else if (tok == "irreducible" && !out.irreducible) fail("irreducible");
    else if (tok == "reducible" && out.irreducible) fail("reducible");
    else if (tok.rfind("homogeneous=", 0) == 0) {
      int k = std::stoi(tok.substr(12));
      if (!out.homogeneous_codim || *out.homogeneous_codim != k) fail(tok);
    }
  }
  return rc;
}

void print_report(const scp::SearchReport& rep) {
  std::cout << "objective: " << rep.objective << "\n";
  std::cout << "complete: " << bool_str(rep.complete) << "\n";
  if (rep.value) std::cout << "value: " << *rep.value << "\n";
  std::cout << "exists: " << bool_str(rep.exists) << "\n";
  std::cout << "nodes: " << rep.nodes << "\n";
  std::cout << "completions: " << rep.partitions_visited << "\n";
  std::cout << "wall_seconds: " << rep.wall_seconds << "\n";
  std::cout << "certificates: " << rep.certificates.size() + rep.avsp_certificates.size() << "\n";
  for (const auto& cert : rep.certificates) {
    std::cout << "certificate:\n";
    print_collection(cert);
  }
  for (const auto& cert : rep.avsp_certificates) {
    std::cout << "certificate:\n";
    std::cout << scp::format_avsp(cert);
  }
}

int run(int argc, char** argv) {
  CLI::App app{"subcube and affine subspace partition toolkit"};
  app.require_subcommand(1);
  bool porcelain = false;
  app.add_flag("--porcelain", porcelain, "stable machine-readable output");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a named family");
  std::string family;
  int gen_n = 0, gen_q = 2, gen_k = 0;
  std::string variant = "A", pump_base = "spm-4";
  gen->add_option("family", family,
                  "s | weight | cubic | lagarias-shor | max-points | maximal | spm | min-dim | "
                  "homogeneous-6-4 | pump | staircase | minimal-qary | avsp")
      ->required();
  gen->add_option("--n", gen_n, "length");
  gen->add_option("--q", gen_q, "alphabet size");
  gen->add_option("--k", gen_k, "pump rounds (family pump)");
  gen->add_option("--variant", variant, "A | B | C | D")
      ->check(CLI::IsMember({"A", "B", "C", "D"}));
  gen->add_option("--base", pump_base, "pump base: spm-4 | homogeneous-6-4");

  // verify
  auto* verify = app.add_subcommand("verify", "verify a partition file");
  std::string verify_file, expect;
  verify->add_option("file", verify_file, "input file (- for stdin)")->required();
  verify->add_option("--expect", expect,
                     "comma list: partition, tight, nontight, irreducible, reducible, "
                     "homogeneous=K");

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "collection statistics");
  std::string stats_file;
  stats_cmd->add_option("file", stats_file)->required();

  // canon
  auto* canon = app.add_subcommand("canon", "canonical form under coordinate/symbol symmetry");
  std::string canon_file;
  canon->add_option("file", canon_file)->required();

  // search
  auto* search = app.add_subcommand("search", "exhaustive extremal search");
  std::string objective;
  int s_n = 0, s_q = 2, s_k = 0, s_threads = 1;
  std::uint64_t s_budget = scp::kDefaultNodeBudget;
  bool s_deterministic = false;
  search->add_option("objective", objective,
                     "min-size | max-points | max-size | homogeneous | min-cover | avsp-min-size")
      ->required();
  search->add_option("--n", s_n, "length")->required();
  search->add_option("--q", s_q, "alphabet size");
  search->add_option("--k", s_k, "codimension (homogeneous)");
  search->add_option("--budget", s_budget, "node budget");
  search->add_option("--threads", s_threads, "worker threads");
  search->add_flag("--deterministic", s_deterministic, "reproducible reports");

  // expand
  auto* expand_cmd = app.add_subcommand("expand", "lift a binary partition to alphabet q");
  std::string expand_file, phi_spec;
  int expand_q = 0;
  expand_cmd->add_option("file", expand_file)->required();
  expand_cmd->add_option("--q", expand_q, "target alphabet")->required();
  expand_cmd->add_option("--phi", phi_spec,
                         "per-coordinate preimages `<zeros>/<ones>` joined by `;` "
                         "(default: thresholds 0/rest)");

  // compress
  auto* compress_cmd = app.add_subcommand("compress", "merge star-pattern classes into cosets");
  std::string compress_file;
  compress_cmd->add_option("file", compress_file)->required();

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bound values");
  int b_n = 0, b_q = 2, b_k = 0;
  bounds_cmd->add_option("--n", b_n, "length")->required();
  bounds_cmd->add_option("--q", b_q, "alphabet size");
  bounds_cmd->add_option("--k", b_k, "homogeneous codimension");

  // fixtures
  auto* fixtures_cmd = app.add_subcommand("fixtures", "built-in reference partitions");
  std::string fixtures_action, fixture_name;
  fixtures_cmd->add_option("action", fixtures_action, "list | dump")->required();
  fixtures_cmd->add_option("name", fixture_name, "fixture name (for dump)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitPrecondition;
  }
  (void)porcelain;  // the key:value output below is already the stable format

  if (gen->parsed()) {
    if (family == "avsp") {
      std::cout << scp::format_avsp(scp::avsp_family(gen_n));
      return kExitOk;
    }
    scp::SubcubeCollection F = [&]() -> scp::SubcubeCollection {
      if (family == "s") return scp::family_s(gen_n);
      if (family == "weight") {
        scp::WeightVariant v = variant == "A"   ? scp::WeightVariant::A
                               : variant == "B" ? scp::WeightVariant::B
                               : variant == "C" ? scp::WeightVariant::C
                                                : scp::WeightVariant::D;
        return scp::family_weight(gen_n, v);
      }
      if (family == "cubic") return scp::cubic(gen_n);
      if (family == "lagarias-shor") return scp::lagarias_shor(gen_n);
      if (family == "max-points") {
        if (gen_n == 3) return scp::family_s(3);
        return scp::xor_extend(scp::family_s(3), gen_n - 3);
      }
      if (family == "maximal") return scp::maximal_family(gen_n);
      if (family == "spm") return scp::special_perfect_matching(gen_n);
      if (family == "min-dim") return scp::min_dim_family(gen_n);
      if (family == "homogeneous-6-4") return scp::homogeneous_6_4();
      if (family == "pump") {
        scp::SubcubeCollection base = pump_base == "homogeneous-6-4"
                                          ? scp::homogeneous_6_4()
                                          : scp::special_perfect_matching(4);
        for (int round = 0; round < std::max(1, gen_k); ++round)
          base = scp::homogeneous_pump(base);
        return base;
      }
      if (family == "staircase") return scp::staircase_cover(gen_n, gen_q);
      if (family == "minimal-qary") return scp::minimal_qary(gen_n, gen_q);
      throw CliError{kExitPrecondition, "unknown family " + family};
    }();
    print_collection(F);
    return kExitOk;
  }

  if (verify->parsed()) {
    std::string text = read_input(verify_file);
    VerifyOutcome out = looks_like_avsp(text) ? verify_avsp(scp::parse_avsp(text))
                                              : verify_scp(scp::parse_scp(text));
    std::cout << "partition: " << bool_str(out.partition) << "\n";
    std::cout << "tight: " << bool_str(out.tight) << "\n";
    if (out.partition) {
      std::cout << "irreducible: " << bool_str(out.irreducible) << "\n";
      if (!out.irreducible) {
        std::cout << "witness_members: " << out.witness_members << "\n";
        std::cout << "witness_join: " << out.witness_join << "\n";
      }
      if (out.homogeneous_codim)
        std::cout << "homogeneous_codim: " << *out.homogeneous_codim << "\n";
    }
    return expect.empty() ? kExitOk : check_expectations(out, expect);
  }

  if (stats_cmd->parsed()) {
    scp::SubcubeCollection F = scp::parse_scp(read_input(stats_file));
    std::cout << "q: " << F.q() << "\n";
    std::cout << "n: " << F.n() << "\n";
    std::cout << "size: " << F.size() << "\n";
    if (F.q() == 2) {
      auto w = scp::weight_vector(F);
      std::cout << "weight_vector:";
      for (auto c : w.counts) std::cout << " " << c;
      std::cout << "\n";
    }
    if (F.size() > 0) {
      auto d = scp::dim_stats(F);
      std::cout << "delta: " << d.delta << "\n";
      if (d.delta_star) std::cout << "delta_star: " << *d.delta_star << "\n";
      if (d.delta_b) std::cout << "delta_b: " << *d.delta_b << "\n";
      std::cout << "Delta: " << d.Delta << "\n";
    }
    auto flags = scp::structure_flags(F);
    std::cout << "regular: " << bool_str(flags.regular) << "\n";
    if (flags.homogeneous_codim)
      std::cout << "homogeneous_codim: " << *flags.homogeneous_codim << "\n";
    std::cout << "mentions_per_coordinate:";
    for (auto c : flags.mentions_per_coordinate) std::cout << " " << c;
    std::cout << "\n";
    return kExitOk;
  }

  if (canon->parsed()) {
    print_collection(scp::canonical_form(scp::parse_scp(read_input(canon_file))));
    return kExitOk;
  }

  if (search->parsed()) {
    scp::SearchConstraints cons;
    cons.node_budget = s_budget;
    cons.deterministic = s_deterministic;
    cons.threads = s_threads;
    scp::SearchReport rep;
    if (objective == "min-size") rep = scp::min_size_search(s_n, s_q, cons);
    else if (objective == "max-points") rep = scp::max_points_search(s_n, cons);
    else if (objective == "max-size") rep = scp::max_size_search(s_n, cons);
    else if (objective == "homogeneous") rep = scp::homogeneous_search(s_n, s_k, cons);
    else if (objective == "min-cover") rep = scp::min_cover_search(s_n, s_q, cons);
    else if (objective == "avsp-min-size") rep = scp::avsp_min_size_search(s_n, cons);
    else throw CliError{kExitPrecondition, "unknown objective " + objective};
    print_report(rep);
    return rep.complete ? kExitOk : kExitBudget;
  }

  if (expand_cmd->parsed()) {
    scp::SubcubeCollection F = scp::parse_scp(read_input(expand_file));
    scp::ExpansionMap phis;
    if (phi_spec.empty()) {
      phis = scp::ExpansionMap::thresholds(F.n(), expand_q);
    } else {
      std::istringstream per_coord(phi_spec);
      std::string part;
      while (std::getline(per_coord, part, ';')) {
        auto slash = part.find('/');
        if (slash == std::string::npos)
          throw CliError{kExitParseError, "--phi: expected `<zeros>/<ones>` per coordinate"};
        std::vector<int> m(static_cast<std::size_t>(expand_q), -1);
        auto assign = [&](std::string_view digits, int image) {
          for (char c : digits) {
            int v = c >= 'a' ? c - 'a' + 10 : c - '0';
            if (v < 0 || v >= expand_q)
              throw CliError{kExitParseError, "--phi: symbol out of range"};
            m[static_cast<std::size_t>(v)] = image;
          }
        };
        assign(std::string_view(part).substr(0, slash), 0);
        assign(std::string_view(part).substr(slash + 1), 1);
        for (int v : m)
          if (v < 0) throw CliError{kExitParseError, "--phi: every symbol needs an image"};
        phis.maps.push_back(std::move(m));
      }
    }
    print_collection(scp::expand(F, phis));
    return kExitOk;
  }

  if (compress_cmd->parsed()) {
    scp::CompressResult res = scp::compress(scp::parse_scp(read_input(compress_file)));
    std::cout << "# tight: " << bool_str(res.tight) << "\n";
    std::cout << scp::format_avsp(res.partition);
    return kExitOk;
  }

  if (bounds_cmd->parsed()) {
    scp::BoundsRecord rec = scp::bounds(b_n, b_q);
    std::cout << "n: " << rec.n << "\n";
    std::cout << "q: " << rec.q << "\n";
    if (rec.binary_min_size_lower)
      std::cout << "min_size_lower: " << *rec.binary_min_size_lower << "\n";
    std::cout << "cover_size_lower: " << rec.cover_size_lower << "\n";
    if (rec.max_size_upper) std::cout << "max_size_upper: " << *rec.max_size_upper << "\n";
    std::cout << "avsp_size_lower: " << rec.avsp_size_lower << "\n";
    if (b_k >= 2) {
      auto [lo, hi] = scp::homogeneous_length_range(b_k);
      std::cout << "homogeneous_length_min: " << lo << "\n";
      std::cout << "homogeneous_length_max: " << hi << "\n";
    }
    return kExitOk;
  }

  if (fixtures_cmd->parsed()) {
    if (fixtures_action == "list") {
      for (const auto& f : scp::fixtures())
        std::cout << f.name << (f.avsp ? " (avsp)" : " (scp)") << "\n";
      return kExitOk;
    }
    if (fixtures_action == "dump") {
      const scp::Fixture* f = scp::find_fixture(fixture_name);
      if (!f) throw CliError{kExitPrecondition, "unknown fixture " + fixture_name};
      std::cout << f->content;
      return kExitOk;
    }
    throw CliError{kExitPrecondition, "fixtures: expected `list` or `dump NAME`"};
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const scp::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const scp::budget_error& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const scp::precondition_error& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::overflow_error& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
}
