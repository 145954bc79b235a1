#pragma once

#include "mgsn/autodiff.hpp"
#include "mgsn/graph.hpp"

#include <span>
#include <vector>

namespace mgsn {

enum class RelationKind { kAttribute, kEdge };

// Per-graph adjacency views. `relations` holds one matrix per enabled
// relation in `kinds` order; `fused` is the snapshot for the fusion weights
// recorded in `fusion_weights` (raw logits).
struct RelationViewSet {
  Matrix original;
  std::vector<RelationKind> kinds;
  std::vector<Matrix> relations;
  Matrix fused;
  Vector fusion_weights;

  const Matrix& relation(RelationKind kind) const;
};

// Keeps each row's top_k largest off-diagonal entries (ties go to the lower
// column index), symmetrizes by elementwise max and zeroes the diagonal.
Matrix sparsify_top_k(const Matrix& scores, int top_k);

// Clamped cosine similarity of node attribute rows, sparsified.
Matrix attribute_relation(const Matrix& x, int top_k);

// Incident-edge descriptor per node: mean of incident edge feature rows when
// the graph has edge features, otherwise the 1-vector scaled by the degree.
// Isolated nodes get the zero descriptor.
Matrix edge_descriptors(const Graph& g);

// exp(-||e_u - e_v||) over incident-edge descriptors, sparsified.
Matrix edge_relation(const Graph& g, int top_k);

// softmax(alpha)-weighted sum of the views. alpha is 1 x R.
ad::Tensor fuse_relations(std::span<const Matrix> views, const ad::Tensor& alpha);
Matrix fuse_relations(std::span<const Matrix> views, const Vector& alpha);

RelationViewSet build_relation_views(const Graph& g, std::span<const RelationKind> kinds,
                                     int top_k, const Vector& alpha);

}  // namespace mgsn
