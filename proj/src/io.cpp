#include "scp/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace scp {

namespace {

std::string_view strip(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
  return line;
}

int symbol_of(char c, int lineno) {
  if (c == '*') return kStar;
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  throw parse_error("line " + std::to_string(lineno) + ": invalid symbol character '" +
                    std::string(1, c) + "'");
}

bool parse_key_int(std::string_view tok, std::string_view key, int& out) {
  if (tok.substr(0, key.size()) != key || tok.size() <= key.size() || tok[key.size()] != '=')
    return false;
  std::string_view num = tok.substr(key.size() + 1);
  if (num.empty()) return false;
  int value = 0;
  for (char c : num) {
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
    if (value > 1000000) return false;
  }
  out = value;
  return true;
}

}  // namespace

SubcubeCollection parse_scp(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  bool have_header = false;
  int q = 0, n = 0;
  std::vector<std::vector<int>> words;
  std::vector<int> word_lines;
  bool first_content = true;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = strip(raw);
    if (line.empty()) continue;
    if (first_content && line.substr(0, 3) == "scp") {
      first_content = false;
      std::istringstream hs{std::string(line)};
      std::string kw, qa, na;
      hs >> kw >> qa >> na;
      if (!parse_key_int(qa, "q", q) || !parse_key_int(na, "n", n))
        throw parse_error("line " + std::to_string(lineno) +
                          ": malformed header, expected `scp q=<q> n=<n>`");
      if (q < kMinAlphabet || q > kMaxAlphabet)
        throw parse_error("line " + std::to_string(lineno) + ": q out of range [2, 36]");
      if (n < 1 || n > kMaxLength)
        throw parse_error("line " + std::to_string(lineno) + ": n out of range [1, 64]");
      have_header = true;
      continue;
    }
    first_content = false;
    std::vector<int> word;
    word.reserve(line.size());
    for (char c : line) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      word.push_back(symbol_of(c, lineno));
    }
    words.push_back(std::move(word));
    word_lines.push_back(lineno);
  }
  if (words.empty()) {
    if (!have_header) throw parse_error("no subcubes and no header to infer the shape from");
    return SubcubeCollection(q, n, {}, /*partial=*/true);
  }
  if (!have_header) {
    n = static_cast<int>(words.front().size());
    int max_sym = 1;
    for (const auto& w : words)
      for (int v : w)
        if (v != kStar) max_sym = std::max(max_sym, v);
    q = max_sym + 1;
  }
  std::vector<Subcube> members;
  members.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (static_cast<int>(words[i].size()) != n)
      throw parse_error("line " + std::to_string(word_lines[i]) + ": expected " +
                        std::to_string(n) + " symbols, got " + std::to_string(words[i].size()));
    for (int v : words[i])
      if (v != kStar && v >= q)
        throw parse_error("line " + std::to_string(word_lines[i]) + ": symbol " +
                          std::to_string(v) + " exceeds alphabet q=" + std::to_string(q));
    members.emplace_back(q, std::move(words[i]));
  }
  return SubcubeCollection(q, n, std::move(members));
}

std::string format_scp(const SubcubeCollection& F, bool with_header) {
  std::string out;
  if (with_header)
    out += "scp q=" + std::to_string(F.q()) + " n=" + std::to_string(F.n()) + "\n";
  for (const Subcube& s : F.members()) {
    out += s.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace scp
