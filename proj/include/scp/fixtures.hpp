#ifndef SCP_FIXTURES_HPP
#define SCP_FIXTURES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scp {

// Built-in corpus of reference partitions. Each fixture carries its exact
// file content (including the `expect:` annotation that the verification
// tests re-check on every run) in SCP or AVSP format.
struct Fixture {
  std::string_view name;
  bool avsp = false;
  std::string_view content;
};

const std::vector<Fixture>& fixtures();

const Fixture* find_fixture(std::string_view name);

struct FixtureExpectations {
  bool partition = false;
  std::optional<bool> tight;
  std::optional<bool> irreducible;
  std::optional<int> homogeneous_codim;
};

// Parses the `# expect: ...` annotation of a fixture's content.
FixtureExpectations fixture_expectations(std::string_view content);

}  // namespace scp

#endif
