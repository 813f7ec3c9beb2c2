#ifndef PADV_GRAPH_HPP
#define PADV_GRAPH_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// Simple undirected graphs of maximum degree 3, vertex-arrival items, the
// plain edge-list file format, and the instance generators (gadget graphs,
// the online lower-bound family, random bounded-degree graphs).

namespace padv {

struct GraphError : std::runtime_error {
  explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
  int line;
};

class Graph {
 public:
  Graph() = default;

  // Validates on construction: no self-loops, no parallel edges, all
  // degrees <= 3. Adjacency lists are kept sorted.
  Graph(int n, const std::vector<std::pair<int, int>>& edges) : adj_(n) {
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw GraphError("edge endpoint out of range");
      if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
      auto key = std::minmax(u, v);
      if (!seen.insert(key).second)
        throw GraphError("duplicate edge " + std::to_string(key.first) + "-" +
                         std::to_string(key.second));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) {
      std::sort(nbrs.begin(), nbrs.end());
      if (nbrs.size() > 3) throw GraphError("vertex of degree > 3");
    }
  }

  int size() const { return static_cast<int>(adj_.size()); }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  std::size_t edge_count() const {
    std::size_t deg = 0;
    for (const auto& nbrs : adj_) deg += nbrs.size();
    return deg / 2;
  }

  // Edges in canonical sorted order, u < v.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u)
      for (int v : adj_[u])
        if (u < v) out.push_back({u, v});
    return out;
  }

  std::vector<std::vector<int>> connected_components() const {
    std::vector<int> comp(adj_.size(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < size(); ++s) {
      if (comp[s] != -1) continue;
      std::vector<int> stack{s}, members;
      comp[s] = static_cast<int>(out.size());
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        members.push_back(u);
        for (int v : adj_[u])
          if (comp[v] == -1) {
            comp[v] = comp[s];
            stack.push_back(v);
          }
      }
      std::sort(members.begin(), members.end());
      out.push_back(std::move(members));
    }
    return out;
  }

 private:
  std::vector<std::vector<int>> adj_;
};

// A vertex together with the complete list of its neighbors (including
// vertices that have not yet appeared): the vertex-arrival, vertex-adjacency
// input item.
struct VertexItem {
  int vertex = 0;
  std::vector<int> neighbors;

  std::string id() const { return pad(vertex); }

  // Zero-padded so lexicographic id order equals numeric order.
  static std::string pad(int v) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%08d", v);
    return buf;
  }
};

inline std::vector<VertexItem> vertex_items(const Graph& g) {
  std::vector<VertexItem> items;
  items.reserve(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) items.push_back({v, g.neighbors(v)});
  return items;
}

// ---- File I/O ----
// Format: line 1 "n m"; then m lines "u v" with 0 <= u < v < n, each edge
// once. Lines starting with '#' are ignored.

inline Graph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line[0] != '#') return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError(lineno, "missing header");
  long long n, m;
  {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> n >> m) || (ss >> extra))
      throw ParseError(lineno, "expected header 'n m'");
  }
  if (n < 0 || m < 0) throw ParseError(lineno, "negative header value");
  std::vector<std::pair<int, int>> edges;
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) throw ParseError(lineno, "unexpected end of file");
    std::istringstream ss(line);
    long long u, v;
    std::string extra;
    if (!(ss >> u >> v) || (ss >> extra))
      throw ParseError(lineno, "expected edge 'u v'");
    if (u < 0 || v <= u || v >= n)
      throw ParseError(lineno, "edge must satisfy 0 <= u < v < n");
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const GraphError& e) {
    throw ParseError(lineno, e.what());
  }
}

inline void write_graph(const Graph& g, std::ostream& out) {
  auto es = g.edges();
  out << g.size() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

// ---- Gadget graphs ----
// The two 7-vertex gadget graphs used by the vertex-cover reduction. Roles
// are numbered 1..7 as drawn; vertex index i holds role i+1 under the
// identity relabeling. Both have minimum vertex covers of size 3.

enum class GadgetVariant { one, two };

inline Graph gadget_graph(GadgetVariant which,
                          const std::array<int, 7>& relabel = {0, 1, 2, 3, 4,
                                                               5, 6}) {
  {
    std::set<int> names(relabel.begin(), relabel.end());
    if (names.size() != 7) throw GraphError("relabeling is not a bijection");
    if (*names.begin() < 0 || *names.rbegin() > 6)
      throw GraphError("relabeling must permute 0..6");
  }
  // Role pairs (1-based) read off the drawings.
  static const std::vector<std::pair<int, int>> g1 = {
      {4, 3}, {4, 5}, {3, 7}, {7, 5}, {3, 2}, {2, 1}, {5, 6}, {6, 1}};
  static const std::vector<std::pair<int, int>> g2 = {
      {4, 1}, {2, 1}, {3, 1}, {4, 7}, {3, 7}, {3, 6}, {2, 6}, {2, 5}, {5, 4}};
  const auto& roles = which == GadgetVariant::one ? g1 : g2;
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : roles) edges.push_back({relabel[a - 1], relabel[b - 1]});
  return Graph(7, edges);
}

// ---- Online lower-bound family (unique-optimum construction) ----
// n = 6*n_prime + 1 vertices. The first 2*n_prime vertices form S, each the
// degree-2 center of a path of length two. Centers in R (and an equal number
// of non-R centers) sit on a cycle of 2r blocks joined in a ring; R members
// land at odd distance from the distinguished vertex v, which carries the
// extra degree-1 vertex w. The minimum vertex cover is unique and has size
// (2*n_prime - 2r) + 3r.

struct OnlineLBParams {
  int n_prime = 2;
  std::vector<int> R;  // subset of {0..2*n_prime-1}
  std::uint64_t seed = 0;
};

inline Graph online_lb_graph(const OnlineLBParams& params) {
  const int np = params.n_prime;
  if (np < 1) throw GraphError("n_prime must be >= 1");
  std::vector<int> R = params.R;
  std::sort(R.begin(), R.end());
  if (std::adjacent_find(R.begin(), R.end()) != R.end())
    throw GraphError("R has duplicates");
  const int r = static_cast<int>(R.size());
  if (r > np) throw GraphError("|R| must be at most n_prime");
  for (int s : R)
    if (s < 0 || s >= 2 * np) throw GraphError("R member outside S");

  std::set<int> in_R(R.begin(), R.end());
  // Even-distance cycle centers: the r smallest members of S \ R.
  std::vector<int> evens, isolated;
  for (int s = 0; s < 2 * np; ++s)
    if (!in_R.count(s)) (static_cast<int>(evens.size()) < r ? evens : isolated)
                            .push_back(s);

  // Fresh (non-S) labels, optionally shuffled by the seed. The items of S
  // stay fixed across all choices of R.
  std::vector<int> fresh(4 * np + 1);
  std::iota(fresh.begin(), fresh.end(), 2 * np);
  if (params.seed != 0) {
    std::mt19937_64 rng(params.seed);
    std::shuffle(fresh.begin(), fresh.end(), rng);
  }
  std::size_t next = 0;
  auto take = [&]() { return fresh[next++]; };

  std::vector<std::pair<int, int>> edges;
  std::vector<int> cycle;  // vertex sequence l_k, c_k, m_k per block
  for (int k = 0; k < 2 * r; ++k) {
    int center = (k % 2 == 0) ? R[k / 2] : evens[k / 2];
    int l = take(), m = take();
    edges.push_back({std::min(l, center), std::max(l, center)});
    edges.push_back({std::min(center, m), std::max(center, m)});
    cycle.push_back(l);
    cycle.push_back(center);
    cycle.push_back(m);
  }
  for (int k = 0; k < 2 * r; ++k) {
    int m = cycle[static_cast<std::size_t>(3 * k + 2)];
    int l = cycle[static_cast<std::size_t>((3 * k + 3) % (6 * r))];
    edges.push_back({std::min(m, l), std::max(m, l)});
  }
  for (int center : isolated) {
    int a = take(), b = take();
    edges.push_back({std::min(a, center), std::max(a, center)});
    edges.push_back({std::min(center, b), std::max(center, b)});
  }
  int w = take();
  int v = r > 0 ? cycle[0] : (isolated.empty() ? 0 : isolated.front());
  edges.push_back({std::min(v, w), std::max(v, w)});
  return Graph(6 * np + 1, edges);
}

// ---- Random bounded-degree test instances ----
// Deterministic for a fixed seed. target_density is the fraction of the
// degree-3 edge budget floor(3n/2) to aim for; the generator stops early if
// degree constraints block further edges.

inline Graph random_max3(int n, double target_density, std::uint64_t seed) {
  if (n < 1) throw GraphError("n must be >= 1");
  target_density = std::clamp(target_density, 0.0, 1.0);
  std::vector<std::pair<int, int>> candidates;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) candidates.push_back({u, v});
  std::mt19937_64 rng(seed);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  auto target =
      static_cast<std::size_t>(target_density * (3.0 * n / 2.0) + 0.5);
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : candidates) {
    if (edges.size() >= target) break;
    if (deg[static_cast<std::size_t>(u)] < 3 &&
        deg[static_cast<std::size_t>(v)] < 3) {
      edges.push_back({u, v});
      ++deg[static_cast<std::size_t>(u)];
      ++deg[static_cast<std::size_t>(v)];
    }
  }
  return Graph(n, edges);
}

}  // namespace padv

#endif  // PADV_GRAPH_HPP
