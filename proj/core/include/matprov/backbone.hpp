#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "matprov/errors.hpp"
#include "matprov/prov_model.hpp"

namespace matprov {

// Forward co-occurrence counts over normalized activity labels: counts[(a,b)]
// is the number of procedures in which an activity labeled b is reachable
// downstream of an activity labeled a (directly or transitively, through
// intervening entities). Each ordered pair counts at most once per procedure.
struct CooccurrenceMatrix {
  std::map<std::pair<std::string, std::string>, std::size_t> counts;
  // normalized label -> first raw form seen, used for display
  std::map<std::string, std::string> display;
  std::size_t procedures_counted = 0;
  std::size_t procedures_skipped = 0;  // cyclic inputs, skipped with a warning
};

CooccurrenceMatrix build_cooccurrence(std::span<const SynthesisProcedure> corpus);

struct GrayCandidate {
  std::string label;   // display form
  std::size_t count;   // co-occurrence with the anchor
  std::string anchor;  // backbone node it would have extended
  bool forward;        // extension direction that rejected it
};

struct BackboneGraph {
  std::vector<std::string> backbone;  // display labels, a simple path
  std::vector<std::size_t> weights;   // consecutive-pair counts, size = |backbone|-1
  std::vector<GrayCandidate> gray_candidates;

  bool empty() const { return backbone.empty(); }
};

class EmptyMatrixError : public Error {
public:
  EmptyMatrixError() : Error("co-occurrence matrix has no entries") {}
};

// Seeds with the highest-count pair (ties broken lexicographically) and
// extends the path head/backward and tail/forward, always taking the larger
// admissible count (>= threshold, label not already on the path; count ties
// lexicographic, direction ties forward). Losing above-threshold candidates
// are reported gray unless they later join the backbone. Returns an empty
// backbone when no pair reaches the threshold; throws EmptyMatrixError on an
// empty matrix.
BackboneGraph mine_backbone(const CooccurrenceMatrix& matrix, std::size_t threshold);

inline constexpr std::size_t kDefaultBackboneThreshold = 25;

}  // namespace matprov
