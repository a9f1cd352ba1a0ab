#include "matprov/graph_validate.hpp"

#include <unordered_map>
#include <vector>

#include "matprov/elements.hpp"

namespace matprov {

namespace {

struct Adjacency {
  std::vector<std::vector<std::size_t>> out;   // directed, temporal orientation
  std::vector<std::vector<std::size_t>> undir;
  std::vector<bool> touched;  // participates in at least one edge
};

Adjacency build_adjacency(const SynthesisProcedure& proc) {
  Adjacency adj;
  const std::size_t n = proc.nodes.size();
  adj.out.resize(n);
  adj.undir.resize(n);
  adj.touched.assign(n, false);

  std::unordered_map<std::string_view, std::size_t> index;
  index.reserve(n);
  for (std::size_t i = 0; i < n; ++i) index.emplace(proc.nodes[i].id, i);

  for (const auto& edge : proc.edges) {
    std::size_t a = index.at(edge.activity_id);
    std::size_t e = index.at(edge.entity_id);
    // Usage: entity -> activity, Generation: activity -> entity
    std::size_t src = edge.kind == EdgeKind::Usage ? e : a;
    std::size_t dst = edge.kind == EdgeKind::Usage ? a : e;
    adj.out[src].push_back(dst);
    adj.undir[src].push_back(dst);
    adj.undir[dst].push_back(src);
    adj.touched[src] = true;
    adj.touched[dst] = true;
  }
  return adj;
}

// Iterative three-color DFS; recursion would overflow on long chains.
bool has_directed_cycle(const std::vector<std::vector<std::size_t>>& out) {
  enum class Color : unsigned char { White, Gray, Black };
  const std::size_t n = out.size();
  std::vector<Color> color(n, Color::White);
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // node, next-child index

  for (std::size_t start = 0; start < n; ++start) {
    if (color[start] != Color::White) continue;
    stack.emplace_back(start, 0);
    color[start] = Color::Gray;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < out[node].size()) {
        std::size_t child = out[node][next++];
        if (color[child] == Color::Gray) return true;
        if (color[child] == Color::White) {
          color[child] = Color::Gray;
          stack.emplace_back(child, 0);
        }
      } else {
        color[node] = Color::Black;
        stack.pop_back();
      }
    }
  }
  return false;
}

bool is_connected_skeleton(const std::vector<std::vector<std::size_t>>& undir) {
  const std::size_t n = undir.size();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t visited = 1;
  while (!stack.empty()) {
    std::size_t node = stack.back();
    stack.pop_back();
    for (std::size_t next : undir[node]) {
      if (!seen[next]) {
        seen[next] = true;
        ++visited;
        stack.push_back(next);
      }
    }
  }
  return visited == n;
}

}  // namespace

std::string_view primary_class_name(PrimaryClass c) {
  switch (c) {
    case PrimaryClass::Dag: return "DAG";
    case PrimaryClass::Cyclic: return "Cyclic";
    case PrimaryClass::IsolatedNodes: return "IsolatedNodes";
  }
  return "?";
}

GraphClass classify(const SynthesisProcedure& proc) {
  Adjacency adj = build_adjacency(proc);

  GraphClass result;
  result.has_cycle = has_directed_cycle(adj.out);
  result.is_dag = !result.has_cycle;
  result.has_isolated_nodes = false;
  for (bool t : adj.touched)
    if (!t) result.has_isolated_nodes = true;
  result.is_connected = is_connected_skeleton(adj.undir);

  if (result.has_cycle)
    result.primary = PrimaryClass::Cyclic;
  else if (result.has_isolated_nodes)
    result.primary = PrimaryClass::IsolatedNodes;
  else
    result.primary = PrimaryClass::Dag;
  return result;
}

CorpusStats corpus_stats(std::span<const SynthesisProcedure> corpus,
                         std::size_t bin_width) {
  if (corpus.empty()) throw EmptyCorpusError();
  if (bin_width == 0) bin_width = 1;

  CorpusStats stats;
  stats.total_procedures = corpus.size();
  stats.bin_width = bin_width;
  stats.class_counts[PrimaryClass::Dag] = 0;
  stats.class_counts[PrimaryClass::Cyclic] = 0;
  stats.class_counts[PrimaryClass::IsolatedNodes] = 0;

  for (const auto& proc : corpus) {
    ++stats.class_counts[classify(proc).primary];
    std::size_t bin = (proc.nodes.size() / bin_width) * bin_width;
    ++stats.node_histogram[bin];
    auto [composition, characteristic] = parse_label(proc.label);
    (void)characteristic;
    for (const auto& element : parse_composition(composition).elements)
      ++stats.element_frequency[element];
  }
  return stats;
}

}  // namespace matprov
