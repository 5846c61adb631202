#include "apollonian/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include <nlohmann/json.hpp>

#include "apollonian/errors.hpp"

namespace apollonian {

namespace {

void require_step(int n) {
  if (n < 0) throw usage_error("step index must be non-negative, got " + std::to_string(n));
}

void require_explicit(int n) {
  require_step(n);
  if (n > kMaxExplicitStep) {
    throw size_guard_error("explicit construction refused for n = " + std::to_string(n) +
                           " (limit " + std::to_string(kMaxExplicitStep) +
                           "); use the formula-based operations instead");
  }
}

mpz_class pow3(unsigned long n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, n);
  return r;
}

}  // namespace

bool Graph::has_edge(int u, int v) const {
  return std::binary_search(edges.begin(), edges.end(), make_edge(u, v));
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(birth.size(), 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(birth.size());
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

std::pair<mpz_class, mpz_class> order_size(int n) {
  require_step(n);
  mpz_class p = pow3(static_cast<unsigned long>(n));
  return {(p + 5) / 2, 3 * (p + 1) / 2};
}

Graph build_iterative(int n) {
  require_explicit(n);
  Graph g;
  g.step = n;
  g.birth = {0, 0, 0};
  g.edges = {{0, 1}, {0, 2}, {1, 2}};
  // Triangles created at the previous step, as sorted vertex triples.
  std::vector<std::array<int, 3>> frontier = {{0, 1, 2}};
  for (int step = 1; step <= n; ++step) {
    std::sort(frontier.begin(), frontier.end());
    std::vector<std::array<int, 3>> next;
    next.reserve(frontier.size() * 3);
    for (const auto& [a, b, c] : frontier) {
      const int v = g.vertex_count();
      g.birth.push_back(step);
      g.edges.emplace_back(a, v);
      g.edges.emplace_back(b, v);
      g.edges.emplace_back(c, v);
      next.push_back({a, b, v});
      next.push_back({a, c, v});
      next.push_back({b, c, v});
    }
    frontier = std::move(next);
  }
  std::sort(g.edges.begin(), g.edges.end());
  validate(g);
  return g;
}

namespace {

// Glue three relabeled copies of `part` so that each pair of copies shares
// one hub edge. Copy i has hubs (h1, h2, h3); h3 of all copies becomes the
// shared center, h2 of copy i coincides with h1 of copy i+1, and the h1
// vertices survive as the hubs of the result:
//
//   result hubs:      0 = copy1.h1   1 = copy2.h1   2 = copy3.h1
//   shared center:    3 = copy*.h3
//   shared edges:     copy_i.(h2,h3) == copy_{i+1}.(h1,h3)
//   result hub edges: copy_i.(h1,h2)
Graph merge_three(const Graph& part) {
  const int vp = part.vertex_count();
  Graph g;
  g.step = part.step + 1;
  g.hubs = {0, 1, 2};
  g.hub_edges = {Edge{0, 1}, Edge{0, 2}, Edge{1, 2}};
  g.birth.assign(4, 0);
  g.birth[3] = 1;

  // map[i][v]: id of copy i's vertex v in the merged graph.
  std::array<std::vector<int>, 3> map;
  int next_id = 4;
  for (int i = 0; i < 3; ++i) {
    map[i].assign(vp, -1);
    map[i][part.hubs[0]] = i;
    map[i][part.hubs[1]] = (i + 1) % 3;
    map[i][part.hubs[2]] = 3;
    for (int v = 0; v < vp; ++v) {
      if (map[i][v] >= 0) continue;
      map[i][v] = next_id++;
      g.birth.push_back(part.birth[v] + 1);
    }
  }

  std::vector<Edge> merged;
  merged.reserve(part.edges.size() * 3);
  for (int i = 0; i < 3; ++i)
    for (const auto& [u, v] : part.edges) merged.push_back(make_edge(map[i][u], map[i][v]));
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  g.edges = std::move(merged);

  if (g.vertex_count() != 3 * vp - 5 || g.edge_count() != 3 * part.edge_count() - 3) {
    throw consistency_error("merge produced wrong vertex/edge counts at step " +
                            std::to_string(g.step));
  }
  return g;
}

}  // namespace

Graph build_merged(int n) {
  require_explicit(n);
  Graph g = build_iterative(0);
  for (int step = 1; step <= n; ++step) g = merge_three(g);
  validate(g);
  return g;
}

void validate(const Graph& g) {
  const auto [v_expected, e_expected] = order_size(g.step);
  if (v_expected != g.vertex_count() || e_expected != g.edge_count()) {
    throw consistency_error("vertex/edge counts disagree with the closed formulas at n = " +
                            std::to_string(g.step));
  }
  if (g.edge_count() != 3 * g.vertex_count() - 6) {
    throw consistency_error("E = 3V - 6 violated at n = " + std::to_string(g.step));
  }
  if (!std::is_sorted(g.edges.begin(), g.edges.end()) ||
      std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end()) {
    throw consistency_error("edge list not sorted/unique");
  }
  for (const auto& [u, v] : g.edges) {
    if (u == v || u < 0 || v >= g.vertex_count()) throw consistency_error("bad edge endpoints");
  }
  for (const Edge& he : g.hub_edges) {
    if (!std::binary_search(g.edges.begin(), g.edges.end(), he)) {
      throw consistency_error("hub edge missing from edge set");
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (!g.has_edge(g.hubs[i], g.hubs[j])) throw consistency_error("hubs not pairwise adjacent");
    }
    if (g.birth[g.hubs[i]] != 0) throw consistency_error("hub has nonzero birth step");
  }
  // Exactly 3^{t-1} vertices are born at step t, and the newest generation
  // has degree exactly 3.
  std::vector<std::int64_t> per_step(g.step + 1, 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.birth[v] < 0 || g.birth[v] > g.step) throw consistency_error("birth step out of range");
    if (g.birth[v] > 0) ++per_step[g.birth[v]];
  }
  std::int64_t expect = 1;
  for (int t = 1; t <= g.step; ++t, expect *= 3) {
    if (per_step[t] != expect) {
      throw consistency_error("birth-step census broken at t = " + std::to_string(t));
    }
  }
  const auto deg = g.degrees();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.birth[v] == g.step && g.step >= 1 && deg[v] != 3) {
      throw consistency_error("newest vertex without degree 3");
    }
  }
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "edge-list") return ExportFormat::edge_list;
  if (name == "dot") return ExportFormat::dot;
  if (name == "json") return ExportFormat::json;
  throw usage_error("unknown format '" + std::string(name) + "' (choose edge-list, dot or json)");
}

namespace {

std::string export_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

std::string export_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph apollonian_" << g.step << " {\n";
  for (int h : g.hubs) out << "  " << h << " [shape=doublecircle];\n";
  for (const auto& [u, v] : g.edges) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.step;
  j["hubs"] = g.hubs;
  j["hub_edges"] = nlohmann::json::array();
  for (const Edge& e : g.hub_edges) j["hub_edges"].push_back({e.first, e.second});
  j["vertices"] = nlohmann::json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    j["vertices"].push_back({{"id", v}, {"birth", g.birth[v]}});
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : g.edges) j["edges"].push_back({u, v});
  return j.dump(2) + "\n";
}

}  // namespace

std::string export_graph(const Graph& g, ExportFormat format) {
  switch (format) {
    case ExportFormat::edge_list: return export_edge_list(g);
    case ExportFormat::dot: return export_dot(g);
    case ExportFormat::json: return export_json(g);
  }
  throw usage_error("unhandled export format");
}

Graph strip_hub_edges(Graph g) {
  auto is_hub_edge = [&g](const Edge& e) {
    return std::find(g.hub_edges.begin(), g.hub_edges.end(), e) != g.hub_edges.end();
  };
  g.edges.erase(std::remove_if(g.edges.begin(), g.edges.end(), is_hub_edge), g.edges.end());
  return g;
}

std::int64_t triangle_count(const Graph& g) {
  const auto adj = g.adjacency();
  std::int64_t total = 0;
  for (const auto& [u, v] : g.edges) {
    // common neighbours w > v avoid double counting
    const auto& a = adj[u];
    const auto& b = adj[v];
    std::size_t i = 0, k = 0;
    while (i < a.size() && k < b.size()) {
      if (a[i] < b[k]) {
        ++i;
      } else if (b[k] < a[i]) {
        ++k;
      } else {
        if (a[i] > v) ++total;
        ++i;
        ++k;
      }
    }
  }
  return total;
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  const auto adj = g.adjacency();
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w : adj[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == n;
}

}  // namespace apollonian
