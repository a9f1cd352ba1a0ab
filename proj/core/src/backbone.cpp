#include "matprov/backbone.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "matprov/eval.hpp"
#include "matprov/graph_validate.hpp"

namespace matprov {

CooccurrenceMatrix build_cooccurrence(std::span<const SynthesisProcedure> corpus) {
  CooccurrenceMatrix matrix;

  for (const auto& proc : corpus) {
    if (classify(proc).has_cycle) {
      ++matrix.procedures_skipped;
      continue;
    }
    ++matrix.procedures_counted;

    const std::size_t n = proc.nodes.size();
    std::unordered_map<std::string_view, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(proc.nodes[i].id, i);

    std::vector<std::vector<std::size_t>> out(n);
    for (const auto& edge : proc.edges) {
      std::size_t a = index.at(edge.activity_id);
      std::size_t e = index.at(edge.entity_id);
      if (edge.kind == EdgeKind::Usage)
        out[e].push_back(a);
      else
        out[a].push_back(e);
    }

    std::vector<std::string> norm(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (proc.nodes[i].kind != NodeKind::Activity) continue;
      norm[i] = normalize(proc.nodes[i].label());
      matrix.display.try_emplace(norm[i], proc.nodes[i].label());
    }

    // Ordered label pairs, at most once per procedure.
    std::set<std::pair<std::string, std::string>> pairs;
    std::vector<bool> seen(n);
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < n; ++start) {
      if (proc.nodes[start].kind != NodeKind::Activity) continue;
      std::fill(seen.begin(), seen.end(), false);
      stack.assign(out[start].begin(), out[start].end());
      while (!stack.empty()) {
        std::size_t node = stack.back();
        stack.pop_back();
        if (seen[node]) continue;
        seen[node] = true;
        if (proc.nodes[node].kind == NodeKind::Activity)
          pairs.emplace(norm[start], norm[node]);
        for (std::size_t next : out[node]) stack.push_back(next);
      }
    }
    for (const auto& pair : pairs) ++matrix.counts[pair];
  }
  return matrix;
}

namespace {

struct Neighbor {
  std::string label;
  std::size_t count;
};

struct Extension {
  std::string winner;
  std::size_t count = 0;
  std::vector<Neighbor> losers;  // admissible but outscored
};

std::optional<Extension> best_extension(
    const std::unordered_map<std::string, std::vector<Neighbor>>& adjacency,
    const std::string& from, std::size_t threshold,
    const std::set<std::string>& in_path) {
  auto it = adjacency.find(from);
  if (it == adjacency.end()) return std::nullopt;

  std::vector<Neighbor> admissible;
  for (const auto& n : it->second)
    if (n.count >= threshold && !in_path.contains(n.label)) admissible.push_back(n);
  if (admissible.empty()) return std::nullopt;

  std::size_t best = 0;
  for (std::size_t i = 1; i < admissible.size(); ++i) {
    const auto& cand = admissible[i];
    const auto& curr = admissible[best];
    if (cand.count > curr.count || (cand.count == curr.count && cand.label < curr.label))
      best = i;
  }

  Extension ext;
  ext.winner = admissible[best].label;
  ext.count = admissible[best].count;
  for (std::size_t i = 0; i < admissible.size(); ++i)
    if (i != best) ext.losers.push_back(admissible[i]);
  return ext;
}

}  // namespace

BackboneGraph mine_backbone(const CooccurrenceMatrix& matrix, std::size_t threshold) {
  if (matrix.counts.empty()) throw EmptyMatrixError();

  // Seed: highest count; map iteration order breaks ties lexicographically.
  std::pair<std::string, std::string> seed;
  std::size_t seed_count = 0;
  for (const auto& [pair, count] : matrix.counts) {
    if (count > seed_count) {
      seed = pair;
      seed_count = count;
    }
  }

  BackboneGraph result;
  if (seed_count < threshold) return result;  // no admissible seed

  std::unordered_map<std::string, std::vector<Neighbor>> successors, predecessors;
  for (const auto& [pair, count] : matrix.counts) {
    successors[pair.first].push_back({pair.second, count});
    predecessors[pair.second].push_back({pair.first, count});
  }

  std::deque<std::string> path{seed.first, seed.second};
  std::deque<std::size_t> weights{seed_count};
  std::set<std::string> in_path{seed.first, seed.second};

  struct GrayRaw {
    std::string label, anchor;
    std::size_t count;
    bool forward;
  };
  std::vector<GrayRaw> gray;

  while (true) {
    auto forward = best_extension(successors, path.back(), threshold, in_path);
    auto backward = best_extension(predecessors, path.front(), threshold, in_path);
    if (!forward && !backward) break;

    bool go_forward = forward && (!backward || forward->count >= backward->count);
    const Extension& ext = go_forward ? *forward : *backward;
    const std::string anchor = go_forward ? path.back() : path.front();

    for (const auto& loser : ext.losers)
      gray.push_back({loser.label, anchor, loser.count, go_forward});

    if (go_forward) {
      path.push_back(ext.winner);
      weights.push_back(ext.count);
    } else {
      path.push_front(ext.winner);
      weights.push_front(ext.count);
    }
    in_path.insert(ext.winner);
  }

  auto display = [&](const std::string& norm) {
    auto it = matrix.display.find(norm);
    return it == matrix.display.end() ? norm : it->second;
  };

  result.backbone.reserve(path.size());
  for (const auto& label : path) result.backbone.push_back(display(label));
  result.weights.assign(weights.begin(), weights.end());
  // Candidates that eventually joined the backbone are not gray.
  for (const auto& g : gray) {
    if (in_path.contains(g.label)) continue;
    result.gray_candidates.push_back({display(g.label), g.count, display(g.anchor), g.forward});
  }
  return result;
}

}  // namespace matprov
