#pragma once

#include <string>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

struct CanonicalLabeling {
  std::vector<Vertex> label;  // vertex v of the input gets canonical index label[v]
  std::string form;           // graph6 of the relabeled graph
};

/// Individualization-refinement with twin and automorphism pruning.
/// Tested routinely up to a few hundred vertices; highly symmetric inputs
/// beyond ~64 vertices may be slow.
CanonicalLabeling canonical_labeling(const Graph& g);
std::string canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace spexlab
