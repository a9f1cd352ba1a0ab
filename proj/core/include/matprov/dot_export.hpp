#pragma once

#include <string>

#include "matprov/backbone.hpp"
#include "matprov/prov_model.hpp"

namespace matprov {

struct DotOptions {
  // Draw edges in experimental time order (entity -> activity for Usage,
  // activity -> entity for Generation). false draws the PROV provenance
  // direction, which points backward in time.
  bool temporal_arrows = true;
  bool color_by_kind = false;
};

// One DOT digraph per procedure: entities boxed, activities elliptic, node
// parameters rendered into the label. Output is byte-stable: nodes sorted by
// id, edges by endpoints.
std::string export_dot(const SynthesisProcedure& proc, const DotOptions& opts = {});

// Backbone chain in the corpus-figure styling: green path nodes and weighted
// edges, gray runner-up candidates attached dashed to their anchor.
std::string export_backbone_dot(const BackboneGraph& backbone);

}  // namespace matprov
