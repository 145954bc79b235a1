#pragma once

#include "mgsn/common.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mgsn {

using Edge = std::pair<int, int>;

// One undirected attributed graph. Edges are stored once, canonically as
// (min, max), without self-loops.
struct Graph {
  int node_count = 0;
  std::vector<Edge> edges;
  Matrix node_attributes;  // node_count x d
  std::optional<std::vector<int>> node_labels;
  std::optional<std::vector<int>> edge_labels;  // one per edge
  std::optional<Matrix> edge_features;          // one row per edge

  // Binary symmetric adjacency, zero diagonal.
  Matrix adjacency() const;
  std::vector<int> degrees() const;
  std::vector<std::vector<int>> neighbor_lists() const;
};

struct GraphDataset {
  std::vector<Graph> graphs;
  std::vector<int> class_labels;
  std::string name;
  int num_classes = 1;
  // Leading columns of node_attributes / edge_features that came from raw
  // attribute files. Columns past these are derived encodings (one-hot labels
  // or degrees) and are rebuilt on parse rather than written back.
  int raw_node_attribute_dim = 0;
  int raw_edge_attribute_dim = 0;

  std::size_t size() const { return graphs.size(); }
};

struct Partition {
  std::vector<int> assignments;
  int k = 1;
};

// Throws ValidationError describing the first violated invariant.
void validate_graph(const Graph& g);
void validate_dataset(const GraphDataset& d);
void validate_partition(const Partition& p);

Matrix degree_matrix(const Matrix& a);

// D^{-1/2} (A + I) D^{-1/2}, D the degree matrix of A + I.
Matrix normalize_adjacency(const Matrix& a);

// One-hot degree features, degrees above max_degree share the last column.
Matrix degree_one_hot(const Graph& g, int max_degree);

}  // namespace mgsn
