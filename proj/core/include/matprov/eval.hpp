#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matprov/errors.hpp"
#include "matprov/prov_model.hpp"

namespace matprov {

// Lowercases and strips every character that is not a letter or digit.
// Unicode letters survive ("δ" stays); punctuation, spaces, hyphens and
// underscores are removed. Idempotent.
std::string normalize(std::string_view s);

// difflib.SequenceMatcher-compatible Ratcliff-Obershelp ratio over Unicode
// code points: 2*M/(|a|+|b|), M = total length of the matching blocks found
// by repeatedly taking the longest match (earliest in a, then in b) and
// recursing on both remainders. Two empty strings compare as 1.0.
double similarity(std::string_view a, std::string_view b);

// Acceptable alternatives per canonical ground-truth string. Lookups always
// include the canonical string itself after normalization.
struct VariantTable {
  std::map<std::string, std::vector<std::string>> variants;

  // Normalized acceptable forms for a gold element whose raw values are
  // `labels` (canonical first, extra values from multi-valued PROV labels).
  std::set<std::string> accepted_forms(std::span<const std::string> labels) const;
  std::set<std::string> accepted_forms(const std::string& canonical) const;
};

struct MetricTriple {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  bool operator==(const MetricTriple&) const = default;
};

// Raw element counts for one or more evaluated procedure pairs. Counts are
// additive, which is how corpus-level metrics are pooled.
struct ElementCounts {
  std::size_t node_matched = 0, node_gold = 0, node_pred = 0;
  std::size_t edge_matched = 0, edge_gold = 0, edge_pred = 0;
  std::size_t param_matched = 0, param_gold = 0, param_pred = 0;

  ElementCounts& operator+=(const ElementCounts& o);
};

// matched/pred and matched/gold with the vacuous convention: an empty
// denominator scores 1.0, so comparing a directory against itself is a fixed
// point even for levels with no elements.
MetricTriple metric_from_counts(std::size_t matched, std::size_t gold, std::size_t pred);

struct EvalReport {
  double collection_rate = 0.0;
  MetricTriple node, edge, structural, parametric;
};

struct MatchedPair {
  std::size_t gold_index = 0;
  std::size_t pred_index = 0;
  double similarity = 0.0;
};

struct ProcedureMatch {
  std::vector<MatchedPair> pairs;
  double collection_rate = 0.0;
};

class EmptyGoldError : public Error {
public:
  EmptyGoldError() : Error("no ground-truth procedures; collection rate undefined") {}
};

// Greedy label matching: all gold x pred similarities, pairs taken in
// descending similarity (ties by gold index, then pred index), each side used
// at most once. Unmatched predictions are excluded from evaluation;
// collection_rate = |pairs| / |gold|. Throws EmptyGoldError.
ProcedureMatch match_procedures(std::span<const SynthesisProcedure> gold,
                                std::span<const SynthesisProcedure> pred);

// Node/edge evaluation of one matched pair. Node elements are normalized
// labels matched greedily in document order against unconsumed gold nodes
// (canonical label, multi-valued label variants, and variant-table entries
// all count). Edge elements are (source label, target label, kind); a pred
// edge can only be correct when both of its endpoint nodes were matched.
// The structural triple pools node and edge elements into one computation.
struct StructuralEval {
  MetricTriple node, edge, structural;
  ElementCounts counts;  // param counts stay zero here
  // (gold node index, pred node index) for every matched node pair
  std::vector<std::pair<std::size_t, std::size_t>> node_pairs;
};

StructuralEval eval_structural(const SynthesisProcedure& gold,
                               const SynthesisProcedure& pred,
                               const VariantTable& variants = {});

// Parameter (key, value) pairs on correctly matched nodes only. Keys must
// match exactly after normalization; values may match through the variant
// table. Returns the metric triple and adds param counts into `counts`.
MetricTriple eval_parametric(const SynthesisProcedure& gold,
                             const SynthesisProcedure& pred,
                             const StructuralEval& node_matching,
                             const VariantTable& variants,
                             ElementCounts* counts = nullptr);

// Full report for one matched pair (convenience wrapper; collection_rate is
// left at 0, it is a per-paper notion).
EvalReport evaluate_pair(const SynthesisProcedure& gold,
                         const SynthesisProcedure& pred,
                         const VariantTable& variants = {},
                         ElementCounts* counts = nullptr);

class EmptyInputError : public Error {
public:
  EmptyInputError() : Error("cannot aggregate zero reports") {}
};

struct MeanStd {
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
};

struct AggregateTriple {
  MeanStd precision, recall, f1;
};

struct RunAggregate {
  std::size_t runs = 0;
  MeanStd collection_rate;
  AggregateTriple node, edge, structural, parametric;
};

// Mean and population standard deviation per metric over k >= 1 runs.
RunAggregate aggregate_runs(std::span<const EvalReport> reports);

}  // namespace matprov
