#include "matprov/eval.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <unordered_map>

namespace matprov {

namespace {

// Lenient UTF-8 decoding; stray bytes pass through as Latin-1 code points.
std::vector<char32_t> decode_utf8(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = s[i];
    std::size_t extra = 0;
    char32_t cp = c;
    if (c >= 0xF0)
      extra = 3, cp = c & 0x07;
    else if (c >= 0xE0)
      extra = 2, cp = c & 0x0F;
    else if (c >= 0xC0)
      extra = 1, cp = c & 0x1F;
    if (extra > 0 && i + extra < s.size() + 1) {
      bool ok = true;
      for (std::size_t k = 1; k <= extra && ok; ++k) {
        if (i + k >= s.size() || (static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80)
          ok = false;
      }
      if (ok) {
        for (std::size_t k = 1; k <= extra; ++k)
          cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
        i += extra + 1;
        out.push_back(cp);
        continue;
      }
    }
    out.push_back(c);
    ++i;
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Keep-and-lowercase classification covering the scripts that occur in
// materials-science text (ASCII, Latin-1/extended, Greek, Cyrillic). Symbols,
// punctuation and unhandled scripts are removed.
bool keep_alnum(char32_t cp, char32_t& mapped) {
  mapped = cp;
  if (cp < 0x80) {
    if (cp >= 'A' && cp <= 'Z') {
      mapped = cp + 0x20;
      return true;
    }
    return (cp >= 'a' && cp <= 'z') || (cp >= '0' && cp <= '9');
  }
  if (cp == 0xB5 || cp == 0xAA || cp == 0xBA) return true;  // micro sign, ordinals
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) {
    mapped = cp + 0x20;
    return true;
  }
  if (cp >= 0xDF && cp <= 0xFF && cp != 0xF7) return true;
  if (cp >= 0x100 && cp <= 0x2AF) return true;  // Latin extended, IPA
  if (cp >= 0x391 && cp <= 0x3AB && cp != 0x3A2) {
    mapped = cp + 0x20;
    return true;
  }
  if (cp >= 0x3B1 && cp <= 0x3FF) return true;  // Greek lowercase and symbols
  if ((cp >= 0x370 && cp <= 0x373) || cp == 0x376 || cp == 0x377 || cp == 0x37F ||
      cp == 0x386 || (cp >= 0x388 && cp <= 0x38F))
    return true;
  if (cp >= 0x400 && cp <= 0x40F) {
    mapped = cp + 0x50;
    return true;
  }
  if (cp >= 0x410 && cp <= 0x42F) {
    mapped = cp + 0x20;
    return true;
  }
  if (cp >= 0x430 && cp <= 0x4FF) return true;
  return false;
}

struct Window {
  std::size_t alo, ahi, blo, bhi;
};

struct Block {
  std::size_t i = 0, j = 0, size = 0;
};

// difflib.SequenceMatcher.find_longest_match without the junk heuristic:
// among maximal blocks, earliest start in a wins, then earliest in b.
Block find_longest_match(
    const std::vector<char32_t>& a,
    const std::unordered_map<char32_t, std::vector<std::size_t>>& b2j,
    const Window& w) {
  Block best{w.alo, w.blo, 0};
  std::unordered_map<std::size_t, std::size_t> j2len;
  for (std::size_t i = w.alo; i < w.ahi; ++i) {
    std::unordered_map<std::size_t, std::size_t> newj2len;
    auto it = b2j.find(a[i]);
    if (it != b2j.end()) {
      for (std::size_t j : it->second) {
        if (j < w.blo) continue;
        if (j >= w.bhi) break;
        std::size_t k = 1;
        if (j > 0) {
          auto prev = j2len.find(j - 1);
          if (prev != j2len.end()) k = prev->second + 1;
        }
        newj2len[j] = k;
        if (k > best.size) best = {i - k + 1, j - k + 1, k};
      }
    }
    j2len = std::move(newj2len);
  }
  return best;
}

std::size_t total_matched(const std::vector<char32_t>& a,
                          const std::vector<char32_t>& b) {
  std::unordered_map<char32_t, std::vector<std::size_t>> b2j;
  for (std::size_t j = 0; j < b.size(); ++j) b2j[b[j]].push_back(j);

  std::size_t matched = 0;
  std::vector<Window> queue{{0, a.size(), 0, b.size()}};
  while (!queue.empty()) {
    Window w = queue.back();
    queue.pop_back();
    Block block = find_longest_match(a, b2j, w);
    if (block.size == 0) continue;
    matched += block.size;
    queue.push_back({w.alo, block.i, w.blo, block.j});
    queue.push_back({block.i + block.size, w.ahi, block.j + block.size, w.bhi});
  }
  return matched;
}

}  // namespace

std::string normalize(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : decode_utf8(s)) {
    char32_t mapped;
    if (keep_alnum(cp, mapped)) append_utf8(out, mapped);
  }
  return out;
}

double similarity(std::string_view a_text, std::string_view b_text) {
  std::vector<char32_t> a = decode_utf8(a_text);
  std::vector<char32_t> b = decode_utf8(b_text);
  std::size_t total = a.size() + b.size();
  if (total == 0) return 1.0;
  return 2.0 * static_cast<double>(total_matched(a, b)) / static_cast<double>(total);
}

std::set<std::string> VariantTable::accepted_forms(
    std::span<const std::string> labels) const {
  std::set<std::string> out;
  for (const auto& raw : labels) {
    out.insert(normalize(raw));
    auto it = variants.find(raw);
    if (it != variants.end())
      for (const auto& v : it->second) out.insert(normalize(v));
  }
  return out;
}

std::set<std::string> VariantTable::accepted_forms(const std::string& canonical) const {
  return accepted_forms(std::span<const std::string>(&canonical, 1));
}

ElementCounts& ElementCounts::operator+=(const ElementCounts& o) {
  node_matched += o.node_matched;
  node_gold += o.node_gold;
  node_pred += o.node_pred;
  edge_matched += o.edge_matched;
  edge_gold += o.edge_gold;
  edge_pred += o.edge_pred;
  param_matched += o.param_matched;
  param_gold += o.param_gold;
  param_pred += o.param_pred;
  return *this;
}

MetricTriple metric_from_counts(std::size_t matched, std::size_t gold,
                                std::size_t pred) {
  MetricTriple t;
  t.precision = pred > 0 ? static_cast<double>(matched) / static_cast<double>(pred) : 1.0;
  t.recall = gold > 0 ? static_cast<double>(matched) / static_cast<double>(gold) : 1.0;
  t.f1 = (t.precision + t.recall) > 0.0
             ? 2.0 * t.precision * t.recall / (t.precision + t.recall)
             : 0.0;
  return t;
}

ProcedureMatch match_procedures(std::span<const SynthesisProcedure> gold,
                                std::span<const SynthesisProcedure> pred) {
  if (gold.empty()) throw EmptyGoldError();

  struct Candidate {
    double sim;
    std::size_t g, p;
  };
  std::vector<Candidate> candidates;
  candidates.reserve(gold.size() * pred.size());
  for (std::size_t g = 0; g < gold.size(); ++g)
    for (std::size_t p = 0; p < pred.size(); ++p)
      candidates.push_back({similarity(gold[g].label, pred[p].label), g, p});

  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& x, const Candidate& y) {
              if (x.sim != y.sim) return x.sim > y.sim;
              if (x.g != y.g) return x.g < y.g;
              return x.p < y.p;
            });

  ProcedureMatch result;
  std::vector<bool> gold_used(gold.size(), false);
  std::vector<bool> pred_used(pred.size(), false);
  for (const auto& c : candidates) {
    if (gold_used[c.g] || pred_used[c.p]) continue;
    gold_used[c.g] = true;
    pred_used[c.p] = true;
    result.pairs.push_back({c.g, c.p, c.sim});
  }
  result.collection_rate =
      static_cast<double>(result.pairs.size()) / static_cast<double>(gold.size());
  return result;
}

namespace {

struct EdgeElement {
  EdgeKind kind;
  const ProvNode* source = nullptr;  // temporal orientation
  const ProvNode* target = nullptr;
};

std::vector<EdgeElement> edge_elements(const SynthesisProcedure& proc) {
  std::unordered_map<std::string_view, const ProvNode*> by_id;
  for (const auto& node : proc.nodes) by_id.emplace(node.id, &node);
  std::vector<EdgeElement> out;
  out.reserve(proc.edges.size());
  for (const auto& edge : proc.edges) {
    EdgeElement e{edge.kind, nullptr, nullptr};
    auto a = by_id.find(edge.activity_id);
    auto n = by_id.find(edge.entity_id);
    const ProvNode* activity = a == by_id.end() ? nullptr : a->second;
    const ProvNode* entity = n == by_id.end() ? nullptr : n->second;
    if (edge.kind == EdgeKind::Usage) {
      e.source = entity;
      e.target = activity;
    } else {
      e.source = activity;
      e.target = entity;
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace

StructuralEval eval_structural(const SynthesisProcedure& gold,
                               const SynthesisProcedure& pred,
                               const VariantTable& variants) {
  StructuralEval result;
  const auto& gn = gold.nodes;
  const auto& pn = pred.nodes;

  // Node level: greedy one-to-one consumption in document order.
  std::vector<std::set<std::string>> gold_accept;
  gold_accept.reserve(gn.size());
  for (const auto& node : gn) gold_accept.push_back(variants.accepted_forms(node.labels));

  std::vector<bool> gold_node_used(gn.size(), false);
  std::unordered_map<const ProvNode*, bool> pred_node_matched;
  for (std::size_t p = 0; p < pn.size(); ++p) {
    const std::string norm = normalize(pn[p].label());
    bool matched = false;
    for (std::size_t g = 0; g < gn.size(); ++g) {
      if (gold_node_used[g] || !gold_accept[g].contains(norm)) continue;
      gold_node_used[g] = true;
      result.node_pairs.emplace_back(g, p);
      matched = true;
      break;
    }
    pred_node_matched[&pn[p]] = matched;
  }

  result.counts.node_matched = result.node_pairs.size();
  result.counts.node_gold = gn.size();
  result.counts.node_pred = pn.size();

  // Edge level: (source label, target label, kind) elements; a pred edge is
  // automatically incorrect when either endpoint node was not matched.
  auto gold_edges = edge_elements(gold);
  auto pred_edges = edge_elements(pred);
  std::vector<bool> gold_edge_used(gold_edges.size(), false);
  std::size_t edge_matched = 0;
  for (const auto& pe : pred_edges) {
    if (pe.source == nullptr || pe.target == nullptr) continue;
    if (!pred_node_matched[pe.source] || !pred_node_matched[pe.target]) continue;
    const std::string src = normalize(pe.source->label());
    const std::string tgt = normalize(pe.target->label());
    for (std::size_t g = 0; g < gold_edges.size(); ++g) {
      const auto& ge = gold_edges[g];
      if (gold_edge_used[g] || ge.kind != pe.kind) continue;
      if (ge.source == nullptr || ge.target == nullptr) continue;
      if (!variants.accepted_forms(ge.source->labels).contains(src)) continue;
      if (!variants.accepted_forms(ge.target->labels).contains(tgt)) continue;
      gold_edge_used[g] = true;
      ++edge_matched;
      break;
    }
  }
  result.counts.edge_matched = edge_matched;
  result.counts.edge_gold = gold_edges.size();
  result.counts.edge_pred = pred_edges.size();

  result.node = metric_from_counts(result.counts.node_matched, result.counts.node_gold,
                                   result.counts.node_pred);
  result.edge = metric_from_counts(result.counts.edge_matched, result.counts.edge_gold,
                                   result.counts.edge_pred);
  result.structural = metric_from_counts(
      result.counts.node_matched + result.counts.edge_matched,
      result.counts.node_gold + result.counts.edge_gold,
      result.counts.node_pred + result.counts.edge_pred);
  return result;
}

MetricTriple eval_parametric(const SynthesisProcedure& gold,
                             const SynthesisProcedure& pred,
                             const StructuralEval& node_matching,
                             const VariantTable& variants,
                             ElementCounts* counts) {
  std::size_t matched = 0, gold_total = 0, pred_total = 0;
  for (const auto& [g, p] : node_matching.node_pairs) {
    const ParamMap& gparams = gold.nodes[g].params;
    const ParamMap& pparams = pred.nodes[p].params;
    gold_total += gparams.size();
    pred_total += pparams.size();
    for (const auto& [key, value] : pparams) {
      auto it = gparams.find(key);
      if (it == gparams.end()) continue;
      if (variants.accepted_forms(it->second).contains(normalize(value))) ++matched;
    }
  }
  if (counts) {
    counts->param_matched += matched;
    counts->param_gold += gold_total;
    counts->param_pred += pred_total;
  }
  return metric_from_counts(matched, gold_total, pred_total);
}

EvalReport evaluate_pair(const SynthesisProcedure& gold,
                         const SynthesisProcedure& pred,
                         const VariantTable& variants, ElementCounts* counts) {
  StructuralEval structural = eval_structural(gold, pred, variants);
  EvalReport report;
  report.node = structural.node;
  report.edge = structural.edge;
  report.structural = structural.structural;
  report.parametric =
      eval_parametric(gold, pred, structural, variants, &structural.counts);
  if (counts) *counts += structural.counts;
  return report;
}

namespace {

MeanStd mean_std(const std::vector<double>& values) {
  MeanStd out;
  const double k = static_cast<double>(values.size());
  for (double v : values) out.mean += v;
  out.mean /= k;
  double var = 0.0;
  for (double v : values) var += (v - out.mean) * (v - out.mean);
  out.stddev = std::sqrt(var / k);  // population standard deviation
  return out;
}

template <typename Get>
MeanStd collect(std::span<const EvalReport> reports, Get get) {
  std::vector<double> values;
  values.reserve(reports.size());
  for (const auto& r : reports) values.push_back(get(r));
  return mean_std(values);
}

template <typename GetLevel>
AggregateTriple collect_level(std::span<const EvalReport> reports, GetLevel level) {
  AggregateTriple out;
  out.precision = collect(reports, [&](const EvalReport& r) { return level(r).precision; });
  out.recall = collect(reports, [&](const EvalReport& r) { return level(r).recall; });
  out.f1 = collect(reports, [&](const EvalReport& r) { return level(r).f1; });
  return out;
}

}  // namespace

RunAggregate aggregate_runs(std::span<const EvalReport> reports) {
  if (reports.empty()) throw EmptyInputError();
  RunAggregate out;
  out.runs = reports.size();
  out.collection_rate =
      collect(reports, [](const EvalReport& r) { return r.collection_rate; });
  out.node = collect_level(reports, [](const EvalReport& r) -> const MetricTriple& {
    return r.node;
  });
  out.edge = collect_level(reports, [](const EvalReport& r) -> const MetricTriple& {
    return r.edge;
  });
  out.structural = collect_level(
      reports, [](const EvalReport& r) -> const MetricTriple& { return r.structural; });
  out.parametric = collect_level(
      reports, [](const EvalReport& r) -> const MetricTriple& { return r.parametric; });
  return out;
}

}  // namespace matprov
