#include "polylat/om.hpp"

#include "json.hpp"
#include "polylat/facetree.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>

namespace polylat::om {

namespace {

void require_same_length(const SignVector& v, const SignVector& w) {
  if (v.size() != w.size())
    throw std::invalid_argument("sign vectors of lengths " + std::to_string(v.size()) +
                                " and " + std::to_string(w.size()));
}

SignVector negate(const SignVector& v) {
  SignVector out = v;
  for (char& c : out) {
    if (c == '+')
      c = '-';
    else if (c == '-')
      c = '+';
  }
  return out;
}

bool is_zero(const SignVector& v) {
  return v.find_first_not_of('0') == SignVector::npos;
}

}  // namespace

std::vector<int> separation_set(const SignVector& v, const SignVector& w) {
  require_same_length(v, w);
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if ((v[i] == '+' && w[i] == '-') || (v[i] == '-' && w[i] == '+'))
      out.push_back(static_cast<int>(i));
  return out;
}

SignVector compose(const SignVector& v, const SignVector& w) {
  require_same_length(v, w);
  SignVector out = v;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (out[i] == '0') out[i] = w[i];
  return out;
}

bool conforms(const SignVector& below, const SignVector& above) {
  require_same_length(below, above);
  for (std::size_t i = 0; i < below.size(); ++i)
    if (below[i] != '0' && below[i] != above[i]) return false;
  return true;
}

std::optional<SignVector> join_covectors(const SignVector& v, const SignVector& w) {
  if (!separation_set(v, w).empty()) return std::nullopt;
  return compose(v, w);
}

std::vector<int> canonical_index_set(std::span<const SignVector> cocircuits,
                                     const SignVector& covector) {
  SignVector running(covector.size(), '0');
  std::vector<int> out;
  for (std::size_t i = 0; i < cocircuits.size(); ++i) {
    require_same_length(cocircuits[i], covector);
    if (!conforms(cocircuits[i], covector)) continue;
    SignVector next = compose(running, cocircuits[i]);
    if (next != running) {
      out.push_back(static_cast<int>(i));
      running.swap(next);
    }
  }
  if (running != covector)
    throw std::invalid_argument("not a covector: no conformal cocircuit decomposition");
  return out;
}

CovectorLattice build_covector_lattice(std::vector<SignVector> cocircuits, int ground_size) {
  if (ground_size < 0) {
    if (cocircuits.empty())
      throw std::invalid_argument("ground size required when no cocircuits are given");
    ground_size = static_cast<int>(cocircuits.front().size());
  }
  for (const SignVector& c : cocircuits) {
    if (static_cast<int>(c.size()) != ground_size)
      throw std::invalid_argument("cocircuit of length " + std::to_string(c.size()) +
                                  ", expected " + std::to_string(ground_size));
    if (c.find_first_not_of("+-0") != SignVector::npos)
      throw std::invalid_argument("cocircuit with characters outside +-0");
    if (is_zero(c)) throw std::invalid_argument("the zero vector is not a cocircuit");
  }

  CovectorLattice lat;
  lat.ground_size = ground_size;

  // Cocircuit sets are symmetric under negation; files often carry one
  // representative per antipodal pair. Complete and remember that we did.
  {
    std::set<SignVector> have(cocircuits.begin(), cocircuits.end());
    const std::size_t given = cocircuits.size();
    for (std::size_t i = 0; i < given; ++i) {
      SignVector neg = negate(cocircuits[i]);
      if (have.insert(neg).second) {
        cocircuits.push_back(std::move(neg));
        lat.negation_completed = true;
      }
    }
  }
  lat.cocircuits = std::move(cocircuits);

  auto add_node = [&lat](SignVector label, int dim) {
    lat.labels.push_back(std::move(label));
    lat.dims.push_back(dim);
    return static_cast<int>(lat.labels.size()) - 1;
  };

  const SignVector zero(static_cast<std::size_t>(ground_size), '0');
  FaceTree tree;
  lat.root = tree.locate_or_create_keyed({}, [&] { return add_node(zero, -1); }).first;

  struct Pending {
    int node;
    SignVector covector;
  };
  std::deque<Pending> queue;
  queue.push_back({lat.root, zero});

  while (!queue.empty()) {
    const Pending entry = std::move(queue.front());
    queue.pop_front();

    // Joins with the cocircuits not below this covector, deduplicated,
    // keeping first-come order.
    std::vector<SignVector> joins;
    for (const SignVector& c : lat.cocircuits) {
      if (conforms(c, entry.covector)) continue;
      if (!separation_set(entry.covector, c).empty()) continue;
      SignVector joined = compose(entry.covector, c);
      if (std::find(joins.begin(), joins.end(), joined) == joins.end())
        joins.push_back(std::move(joined));
    }

    for (const SignVector& cover : joins) {
      bool minimal = true;
      for (const SignVector& other : joins)
        if (other != cover && conforms(other, cover)) {
          minimal = false;
          break;
        }
      if (!minimal) continue;

      const std::vector<int> key = canonical_index_set(lat.cocircuits, cover);
      auto [cover_node, created] = tree.locate_or_create_keyed(
          key, [&] { return add_node(cover, lat.dims[entry.node] + 1); });
      lat.arcs.emplace_back(entry.node, cover_node);
      if (created) queue.push_back({cover_node, cover});
    }
  }

  // Adjoin the artificial maximal element and hang every covector without an
  // upward arc (the topes) below it.
  const int top_dim = *std::max_element(lat.dims.begin(), lat.dims.end()) + 1;
  lat.top = add_node(SignVector{}, top_dim);
  std::vector<char> has_up(lat.labels.size(), 0);
  for (auto [child, parent] : lat.arcs) has_up[child] = 1;
  for (int node = 0; node < lat.top; ++node) {
    if (!has_up[node]) {
      lat.arcs.emplace_back(node, lat.top);
      ++lat.tope_count;
    }
  }
  return lat;
}

CocircuitFile parse_cocircuits(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(first, last - first + 1));
  }
  if (lines.empty()) throw ParseError("malformed header: empty input");

  std::istringstream header(lines.front());
  int count = 0, ground = 0;
  std::string extra;
  if (!(header >> count >> ground)) throw ParseError("malformed header: expected 'n k'");
  if (header >> extra) throw ParseError("malformed header: trailing token '" + extra + "'");
  if (count < 0 || ground <= 0) throw ParseError("malformed header: bad counts");
  if (static_cast<int>(lines.size()) - 1 != count)
    throw ParseError("expected " + std::to_string(count) + " cocircuit lines, found " +
                     std::to_string(lines.size() - 1));

  CocircuitFile file;
  file.ground_size = ground;
  for (int i = 0; i < count; ++i) {
    const std::string& body = lines[i + 1];
    if (static_cast<int>(body.size()) != ground)
      throw ParseError("cocircuit " + std::to_string(i) + ": length " +
                       std::to_string(body.size()) + ", expected " + std::to_string(ground));
    if (body.find_first_not_of("+-0") != std::string::npos)
      throw ParseError("cocircuit " + std::to_string(i) + ": characters outside +-0");
    if (is_zero(body))
      throw ParseError("cocircuit " + std::to_string(i) + ": the zero vector is not a cocircuit");
    file.cocircuits.push_back(body);
  }
  return file;
}

CocircuitFile parse_cocircuits(const std::string& text) {
  std::istringstream in(text);
  return parse_cocircuits(in);
}

namespace {

struct CanonicalForm {
  std::vector<int> order;
  std::vector<int> rank;
  std::vector<std::pair<int, int>> arcs;
};

CanonicalForm canonicalize(const CovectorLattice& lat) {
  CanonicalForm cf;
  cf.order.resize(lat.labels.size());
  std::iota(cf.order.begin(), cf.order.end(), 0);
  std::sort(cf.order.begin(), cf.order.end(), [&](int a, int b) {
    if (lat.dims[a] != lat.dims[b]) return lat.dims[a] < lat.dims[b];
    return lat.labels[a] < lat.labels[b];
  });
  cf.rank.resize(cf.order.size());
  for (std::size_t i = 0; i < cf.order.size(); ++i) cf.rank[cf.order[i]] = static_cast<int>(i);
  cf.arcs.reserve(lat.arcs.size());
  for (auto [child, parent] : lat.arcs) cf.arcs.emplace_back(cf.rank[child], cf.rank[parent]);
  std::sort(cf.arcs.begin(), cf.arcs.end());
  cf.arcs.erase(std::unique(cf.arcs.begin(), cf.arcs.end()), cf.arcs.end());
  return cf;
}

}  // namespace

std::string to_text(const CovectorLattice& lat) {
  const CanonicalForm cf = canonicalize(lat);
  const int dim = *std::max_element(lat.dims.begin(), lat.dims.end());
  std::ostringstream out;
  out << "faces " << lat.labels.size() << " arcs " << cf.arcs.size() << " dim " << dim << '\n';
  for (std::size_t i = 0; i < cf.order.size(); ++i) {
    const int id = cf.order[i];
    out << i << ' ' << lat.dims[id];
    if (id == lat.top)
      out << " top";
    else
      out << " s " << lat.labels[id];
    out << '\n';
  }
  for (auto [child, parent] : cf.arcs) out << child << ' ' << parent << '\n';
  return out.str();
}

std::string to_json(const CovectorLattice& lat) {
  const CanonicalForm cf = canonicalize(lat);
  const int dim = *std::max_element(lat.dims.begin(), lat.dims.end());
  nlohmann::ordered_json doc;
  doc["face_count"] = lat.labels.size();
  doc["arc_count"] = cf.arcs.size();
  doc["dim"] = dim;
  auto& nodes = doc["nodes"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < cf.order.size(); ++i) {
    const int id = cf.order[i];
    nlohmann::ordered_json entry;
    entry["id"] = i;
    entry["dim"] = lat.dims[id];
    if (id == lat.top)
      entry["top"] = true;
    else
      entry["s"] = lat.labels[id];
    nodes.push_back(std::move(entry));
  }
  auto& arcs = doc["arcs"] = nlohmann::ordered_json::array();
  for (auto [child, parent] : cf.arcs) arcs.push_back({child, parent});
  return doc.dump();
}

}  // namespace polylat::om
