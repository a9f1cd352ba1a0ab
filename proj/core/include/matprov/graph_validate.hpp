#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>

#include "matprov/errors.hpp"
#include "matprov/prov_model.hpp"

namespace matprov {

enum class PrimaryClass { Dag, Cyclic, IsolatedNodes };

std::string_view primary_class_name(PrimaryClass c);  // "DAG", "Cyclic", "IsolatedNodes"

// Structural classification of one procedure graph. The flags expose the full
// truth; `primary` applies the precedence Cyclic > IsolatedNodes > DAG so the
// three classes partition a corpus.
struct GraphClass {
  bool is_dag = false;  // the directed graph is acyclic
  bool has_cycle = false;
  bool has_isolated_nodes = false;  // some node participates in no edge
  bool is_connected = false;        // undirected skeleton has one component
  PrimaryClass primary = PrimaryClass::Dag;
};

GraphClass classify(const SynthesisProcedure& proc);

class EmptyCorpusError : public Error {
public:
  EmptyCorpusError() : Error("corpus contains no procedures") {}
};

struct CorpusStats {
  std::size_t total_procedures = 0;
  std::size_t bin_width = 1;
  std::map<PrimaryClass, std::size_t> class_counts;
  // bin lower bound (k * bin_width) -> number of procedures with a node count
  // in [k*w, (k+1)*w)
  std::map<std::size_t, std::size_t> node_histogram;
  // element symbol -> number of procedures whose composition contains it
  std::map<std::string, std::size_t> element_frequency;
};

// Classification counts, node-count histogram and element frequencies over a
// corpus. Throws EmptyCorpusError on an empty corpus.
CorpusStats corpus_stats(std::span<const SynthesisProcedure> corpus,
                         std::size_t bin_width = 1);

}  // namespace matprov
