#include "polylat/incidence.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

namespace polylat {

namespace {

// Comment lines and blank lines stripped, leading whitespace trimmed.
std::vector<std::string> data_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    lines.push_back(line.substr(first));
  }
  return lines;
}

int parse_count(const std::string& token, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(std::string("malformed header: bad ") + what + " '" + token + "'");
  return value;
}

}  // namespace

IncidenceStructure IncidenceStructure::from_rows(int num_vertices, std::vector<VertexSet> rows) {
  if (num_vertices <= 0) throw std::invalid_argument("vertex count must be positive");
  if (num_vertices == 1) throw std::invalid_argument("single-vertex inputs are not supported");
  if (rows.empty()) throw std::invalid_argument("facet count must be positive");

  IncidenceStructure inc;
  inc.num_facets = static_cast<int>(rows.size());
  inc.num_vertices = num_vertices;
  inc.facet_vertices = std::move(rows);
  inc.vertex_facets.assign(num_vertices, {});
  inc.facet_vertex_bits.assign(inc.num_facets, Bitset(num_vertices));
  inc.vertex_facet_bits.assign(num_vertices, Bitset(inc.num_facets));

  for (int f = 0; f < inc.num_facets; ++f) {
    VertexSet& row = inc.facet_vertices[f];
    std::sort(row.begin(), row.end());
    for (std::size_t i = 0; i < row.size(); ++i) {
      const int v = row[i];
      if (v < 0 || v >= num_vertices)
        throw std::invalid_argument("facet " + std::to_string(f) + ": vertex index " +
                                    std::to_string(v) + " out of range");
      if (i > 0 && row[i - 1] == v)
        throw std::invalid_argument("facet " + std::to_string(f) + ": duplicate vertex " +
                                    std::to_string(v));
      inc.facet_vertex_bits[f].set(v);
      inc.vertex_facets[v].push_back(f);
      inc.vertex_facet_bits[v].set(f);
    }
    inc.incidence_count += row.size();
  }
  return inc;
}

IncidenceStructure parse_incidence(std::istream& in) {
  const std::vector<std::string> lines = data_lines(in);
  if (lines.empty()) throw ParseError("malformed header: empty input");

  std::istringstream header(lines.front());
  std::string mtok, ntok, extra;
  if (!(header >> mtok >> ntok)) throw ParseError("malformed header: expected 'm n'");
  if (header >> extra) throw ParseError("malformed header: trailing token '" + extra + "'");
  const int num_facets = parse_count(mtok, "facet count");
  const int num_vertices = parse_count(ntok, "vertex count");
  if (num_facets <= 0) throw ParseError("malformed header: facet count must be positive");
  if (num_vertices <= 0) throw ParseError("malformed header: vertex count must be positive");
  if (num_vertices == 1) throw ParseError("single-vertex inputs are not supported");

  if (static_cast<int>(lines.size()) - 1 < num_facets)
    throw ParseError("expected " + std::to_string(num_facets) + " facet lines, found " +
                     std::to_string(lines.size() - 1));
  if (static_cast<int>(lines.size()) - 1 > num_facets)
    throw ParseError("unexpected data after facet " + std::to_string(num_facets - 1));

  std::vector<VertexSet> rows(num_facets);
  for (int f = 0; f < num_facets; ++f) {
    std::istringstream ss(lines[f + 1]);
    std::string tok;
    while (ss >> tok) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0)
        throw ParseError("facet " + std::to_string(f) + ": bad vertex index '" + tok + "'");
      if (v >= num_vertices)
        throw ParseError("facet " + std::to_string(f) + ": vertex index " + tok +
                         " out of range [0," + std::to_string(num_vertices) + ")");
      rows[f].push_back(v);
    }
  }

  try {
    return IncidenceStructure::from_rows(num_vertices, std::move(rows));
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what());
  }
}

IncidenceStructure parse_incidence(const std::string& text) {
  std::istringstream in(text);
  return parse_incidence(in);
}

std::string serialize_incidence(const IncidenceStructure& inc) {
  std::ostringstream out;
  out << inc.num_facets << ' ' << inc.num_vertices << '\n';
  for (const VertexSet& row : inc.facet_vertices) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ' ';
      out << row[i];
    }
    out << '\n';
  }
  return out.str();
}

IncidenceStructure dualize(const IncidenceStructure& inc) {
  IncidenceStructure out;
  out.num_facets = inc.num_vertices;
  out.num_vertices = inc.num_facets;
  out.facet_vertices = inc.vertex_facets;
  out.vertex_facets = inc.facet_vertices;
  out.facet_vertex_bits = inc.vertex_facet_bits;
  out.vertex_facet_bits = inc.facet_vertex_bits;
  out.incidence_count = inc.incidence_count;
  return out;
}

}  // namespace polylat
