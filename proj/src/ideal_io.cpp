#include "sqfdepth/ideal_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace sqfdepth {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

} // namespace

SquarefreeIdeal parse_ideal(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int ground = -1;
  std::vector<VarSet> gens;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream ls(line);
    if (ground < 0) {
      std::string tag;
      long n = -1;
      ls >> tag >> n;
      std::string rest;
      if (tag != "n" || ls.fail() || (ls >> rest))
        throw ParseError(line_no, "expected header 'n <ground_size>'");
      if (n < 1 || n > kMaxGround) throw ParseError(line_no, "ground size must lie in [1, 64]");
      ground = static_cast<int>(n);
      continue;
    }
    if (line == "-") {
      gens.push_back(VarSet::empty(ground));
      continue;
    }
    std::vector<int> idx;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError(line_no, "not an integer: '" + tok + "'");
      if (v < 1 || v > ground)
        throw ParseError(line_no, "index " + tok + " outside [1, " + std::to_string(ground) + "]");
      idx.push_back(static_cast<int>(v));
    }
    gens.push_back(VarSet::of(ground, idx));
  }
  if (ground < 0) throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'n <ground_size>'");
  return minimalize(ground, gens);
}

SquarefreeIdeal parse_ideal(const std::string& text) {
  std::istringstream in(text);
  return parse_ideal(in);
}

SquarefreeIdeal read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ideal file '" + path + "'");
  return parse_ideal(in);
}

std::string format_ideal(const SquarefreeIdeal& ideal) {
  std::ostringstream out;
  out << "n " << ideal.ground_size() << '\n';
  for (const VarSet& g : ideal.generators()) {
    auto m = g.members();
    if (m.empty()) {
      out << "-\n";
      continue;
    }
    for (std::size_t i = 0; i < m.size(); ++i) out << (i ? " " : "") << m[i];
    out << '\n';
  }
  return out.str();
}

} // namespace sqfdepth
