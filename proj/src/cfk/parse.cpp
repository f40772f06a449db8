#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "hfs/cfk/complex.hpp"
#include "hfs/error.hpp"

namespace hfs::cfk {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view token, std::string_view key, std::size_t line, bool unsigned_only) {
  if (token.substr(0, key.size()) != key) {
    throw ParseError(line, "expected " + std::string(key) + "<int>, got '" + std::string(token) +
                               "'");
  }
  const std::string_view digits = token.substr(key.size());
  if (unsigned_only && !digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    throw ParseError(line, "expected unsigned integer in '" + std::string(token) + "'");
  }
  int value = 0;
  const auto* first = digits.data();
  const auto* last = digits.data() + digits.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (digits.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError(line, "bad integer in '" + std::string(token) + "'");
  }
  return value;
}

std::string ident(std::string_view token, std::size_t line) {
  if (!is_identifier(token)) {
    throw ParseError(line, "bad identifier '" + std::string(token) + "'");
  }
  return std::string(token);
}

}  // namespace

BifilteredComplex parse_cfk(std::string_view text) {
  std::vector<Generator> generators;
  std::vector<Arrow> arrows;
  std::set<std::string> names;
  std::set<std::tuple<std::string, std::string, int>> triples;
  bool header = false;
  std::optional<bool> with_maslov;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (!header) {
      if (tokens.size() != 2 || tokens[0] != "cfk" || tokens[1] != "v1") {
        throw ParseError(line_no, "expected header 'cfk v1'");
      }
      header = true;
    } else if (tokens[0] == "generator") {
      if (tokens.size() != 3 && tokens.size() != 4) {
        throw ParseError(line_no, "expected 'generator <ident> A=<int> [M=<int>]'");
      }
      Generator g;
      g.label = ident(tokens[1], line_no);
      g.alexander = parse_int(tokens[2], "A=", line_no, false);
      if (tokens.size() == 4) g.maslov = parse_int(tokens[3], "M=", line_no, false);
      if (!names.insert(g.label).second) {
        throw ParseError(line_no, "duplicate generator '" + g.label + "'");
      }
      if (with_maslov && *with_maslov != g.maslov.has_value()) {
        throw ParseError(line_no, "either all generators carry M= or none");
      }
      with_maslov = g.maslov.has_value();
      generators.push_back(std::move(g));
    } else if (tokens[0] == "arrow") {
      if (tokens.size() != 4) throw ParseError(line_no, "expected 'arrow <src> <dst> h=<uint>'");
      Arrow a{ident(tokens[1], line_no), ident(tokens[2], line_no),
              parse_int(tokens[3], "h=", line_no, true)};
      if (!triples.emplace(a.src, a.dst, a.h).second) {
        throw ParseError(line_no, "duplicate arrow " + a.src + " -> " + a.dst +
                                      " h=" + std::to_string(a.h));
      }
      arrows.push_back(std::move(a));
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(tokens[0]) + "'");
    }
    if (end == text.size()) break;
  }
  if (!header) throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'cfk v1'");
  return BifilteredComplex(std::move(generators), std::move(arrows));
}

BifilteredComplex load_cfk(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cfk(buf.str());
}

std::string to_cfk(const BifilteredComplex& c) {
  std::ostringstream out;
  out << "cfk v1\n";
  for (const auto& g : c.generators()) {
    out << "generator " << g.label << " A=" << g.alexander;
    if (g.maslov) out << " M=" << *g.maslov;
    out << '\n';
  }
  for (const auto& a : c.arrows()) {
    out << "arrow " << a.src << ' ' << a.dst << " h=" << a.h << '\n';
  }
  return out.str();
}

}  // namespace hfs::cfk
