#include "hfs/heegaard.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "hfs/cfk/complex.hpp"
#include "hfs/error.hpp"

namespace hfs::heegaard {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  for (auto tok : split(line, ' ')) {
    for (auto t : split(tok, '\t')) {
      while (!t.empty() && t.back() == '\r') t.remove_suffix(1);
      if (!t.empty()) out.push_back(t);
    }
  }
  return out;
}

std::string ident(std::string_view token, std::size_t line) {
  if (!cfk::is_identifier(token)) {
    throw ParseError(line, "bad identifier '" + std::string(token) + "'");
  }
  return std::string(token);
}

std::string_view keyed(std::string_view token, std::string_view key, std::size_t line) {
  if (token.substr(0, key.size()) != key) {
    throw ParseError(line, "expected " + std::string(key) + "..., got '" + std::string(token) + "'");
  }
  return token.substr(key.size());
}

}  // namespace

PeriodicDomainModel::PeriodicDomainModel(std::vector<Region> regions,
                                         std::vector<DomainGenerator> generators)
    : regions_(std::move(regions)), generators_(std::move(generators)) {
  std::set<std::string> ids;
  for (const auto& r : regions_) {
    if (!ids.insert(r.id).second) {
      throw Error(ErrorKind::ValidationError, "duplicate region '" + r.id + "'");
    }
  }
  std::set<std::string> labels;
  std::optional<std::size_t> coords;
  for (const auto& g : generators_) {
    if (!labels.insert(g.label).second) {
      throw Error(ErrorKind::ValidationError, "duplicate generator '" + g.label + "'");
    }
    if (g.corners.empty()) {
      throw Error(ErrorKind::ValidationError, "generator '" + g.label + "' has no coordinates");
    }
    if (coords && *coords != g.corners.size()) {
      throw Error(ErrorKind::ValidationError,
                  "generator '" + g.label + "' has " + std::to_string(g.corners.size()) +
                      " coordinates, expected " + std::to_string(*coords));
    }
    coords = g.corners.size();
    for (const auto& corner : g.corners) {
      for (const auto& id : corner) {
        if (!ids.count(id)) {
          throw Error(ErrorKind::ValidationError,
                      "generator '" + g.label + "' names unknown region '" + id + "'");
        }
      }
    }
  }
}

long long PeriodicDomainModel::multiplicity(const std::string& region) const {
  for (const auto& r : regions_) {
    if (r.id == region) return r.multiplicity;
  }
  throw Error(ErrorKind::ValidationError, "unknown region '" + region + "'");
}

const DomainGenerator& PeriodicDomainModel::generator(const std::string& label) const {
  for (const auto& g : generators_) {
    if (g.label == label) return g;
  }
  throw Error(ErrorKind::UnknownGenerator, "no generator '" + label + "'");
}

PeriodicDomainModel parse_domain(std::string_view text) {
  std::vector<Region> regions;
  std::vector<DomainGenerator> generators;
  bool header = false;
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (!header) {
      if (tokens.size() != 2 || tokens[0] != "domain" || tokens[1] != "v1") {
        throw ParseError(line_no, "expected header 'domain v1'");
      }
      header = true;
      continue;
    }
    if (tokens[0] == "region") {
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'region <id> mult=<int>'");
      const auto digits = keyed(tokens[2], "mult=", line_no);
      long long m = 0;
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
      if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw ParseError(line_no, "bad integer in '" + std::string(tokens[2]) + "'");
      }
      const auto id = ident(tokens[1], line_no);
      for (const auto& r : regions) {
        if (r.id == id) throw ParseError(line_no, "duplicate region '" + id + "'");
      }
      regions.push_back({id, m});
    } else if (tokens[0] == "generator") {
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'generator <id> corners=...'");
      DomainGenerator g;
      g.label = ident(tokens[1], line_no);
      for (const auto& g2 : generators) {
        if (g2.label == g.label) throw ParseError(line_no, "duplicate generator '" + g.label + "'");
      }
      for (auto coord : split(keyed(tokens[2], "corners=", line_no), ';')) {
        const auto ids = split(coord, ',');
        if (ids.size() != 4) {
          throw ParseError(line_no, "a coordinate needs four regions, got '" + std::string(coord) + "'");
        }
        Corner c;
        for (std::size_t k = 0; k < 4; ++k) c[k] = ident(ids[k], line_no);
        g.corners.push_back(c);
      }
      generators.push_back(std::move(g));
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(tokens[0]) + "'");
    }
  }
  if (!header) throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'domain v1'");
  return PeriodicDomainModel(std::move(regions), std::move(generators));
}

PeriodicDomainModel load_domain(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_domain(ss.str());
}

Rational point_measure(const PeriodicDomainModel& d, const std::string& x) {
  Rational sum = 0;
  for (const auto& corner : d.generator(x).corners) {
    long long s = 0;
    for (const auto& id : corner) s += d.multiplicity(id);
    sum += Rational(s, 4);
  }
  return sum;
}

Rational alexander_difference(const PeriodicDomainModel& d, const std::string& x,
                              const std::string& y) {
  return point_measure(d, x) - point_measure(d, y);
}

WindingResult winding_distinct(long long a, long long q) {
  if (a < 1 || q < 1) {
    throw Error(ErrorKind::ValidationError, "winding parameters must be positive");
  }
  // r_lambda q = r_mu a forces r_mu = r_lambda q / a, so one loop suffices.
  for (long long rl = 1; rl < a; ++rl) {
    if ((rl * q) % a != 0) continue;
    const long long rm = rl * q / a;
    if (rm > 0 && rm < q) return {false, std::make_pair(rl, rm)};
  }
  return {true, std::nullopt};
}

bool WindingParams::valid() const {
  if (a < 1 || q < 1) return false;
  if (p && b) return *p * a - q * *b == -1;
  return true;
}

CableArithmetic cable_arithmetic(long long p, long long P) {
  if (p < 1 || P < 1) throw Error(ErrorKind::ValidationError, "cable parameters must be positive");
  const long long g = std::gcd(p, P);
  return {p / g, P / g};
}

PeriodicDomainModel scaled_measure(const PeriodicDomainModel& d, long long R) {
  if (R < 1) throw Error(ErrorKind::ValidationError, "scale must be positive");
  auto regions = d.regions();
  for (auto& r : regions) r.multiplicity *= R;
  return PeriodicDomainModel(std::move(regions), d.generators());
}

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace hfs::heegaard
