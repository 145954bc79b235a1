#pragma once

#include "mgsn/autodiff.hpp"
#include "mgsn/graph.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mgsn {

enum class FeatureMap { kIdentity, kRbf };

struct KernelMap {
  FeatureMap kind = FeatureMap::kIdentity;
  double gamma = 1.0;  // rbf only
};

// sum over node pairs of <phi(h1_v), phi(h2_w)>. With the identity map this
// is (sum rows H1) . (sum rows H2); with rbf it is sum exp(-gamma ||.||^2).
ad::Tensor embedding_kernel(const ad::Tensor& h1, const ad::Tensor& h2, KernelMap map = {});

// Sum of embedding_kernel over all ordered relation pairs.
ad::Tensor multi_relation_kernel(std::span<const ad::Tensor> views1, std::span<const ad::Tensor> views2,
                                 KernelMap map = {});

// B x B Gram matrix of multi_relation_kernel over a batch; graphs[i] holds the
// per-relation node embeddings of graph i. The identity map is evaluated as
// T T^T with T_i the summed embeddings, which is PSD by construction.
ad::Tensor embedding_gram(const std::vector<std::vector<ad::Tensor>>& graphs, KernelMap map = {});

// K_ij / sqrt(K_ii K_jj); rows and columns with K_ii <= 0 become 0.
Matrix cosine_normalize(const Matrix& k);
ad::Tensor cosine_normalize(const ad::Tensor& k);

// Labels used by the structural kernels: node labels when present, degrees
// otherwise.
std::vector<int> structural_labels(const Graph& g);

// Weisfeiler-Lehman subtree features: (feature id, count) sorted by id. Ids
// are shared across the whole set of graphs passed in.
using SparseFeatures = std::vector<std::pair<std::int64_t, double>>;
std::vector<SparseFeatures> wl_features(std::span<const Graph> graphs, int iterations);
double wl_kernel(const Graph& g1, const Graph& g2, int iterations);

// All-pairs shortest path lengths by Floyd-Warshall; -1 marks unreachable.
std::vector<std::vector<int>> all_pairs_shortest_paths(const Graph& g);
std::vector<SparseFeatures> sp_features(std::span<const Graph> graphs, bool use_labels);
double sp_kernel(const Graph& g1, const Graph& g2, bool use_labels = true);

// Geometric random-walk kernel on the label-matched direct product graph,
// truncated after `steps` terms.
double rw_kernel(const Graph& g1, const Graph& g2, int steps = 10, double decay = 0.1);

enum class KernelKind { kDynamic, kWl, kSp, kRw };
KernelKind parse_kernel_kind(const std::string& s);
std::string to_string(KernelKind k);

struct StructuralKernelOptions {
  int wl_iterations = 3;
  bool sp_use_labels = true;
  int rw_steps = 10;
  double rw_decay = 0.1;
};

// Gram matrices over a dataset, pairs evaluated in parallel (OpenMP). Every
// entry is computed independently, so results do not depend on scheduling.
Matrix structural_gram(std::span<const Graph> graphs, KernelKind kind, const StructuralKernelOptions& options = {});
Matrix sparse_gram(std::span<const SparseFeatures> features);

namespace serial {
// Reference implementations: one pairwise kernel call per entry, no threads.
Matrix structural_gram(std::span<const Graph> graphs, KernelKind kind, const StructuralKernelOptions& options = {});
Matrix sparse_gram(std::span<const SparseFeatures> features);
}  // namespace serial

struct GraphLevelGraph {
  Matrix weights;
  int top_k = 10;
  KernelKind source = KernelKind::kDynamic;
};

// Cosine-normalize, zero the diagonal, clamp to [0, 1], keep each row's top_k
// entries and symmetrize by max. The result is a constant (no gradient).
GraphLevelGraph build_graph_level_graph(const Matrix& k, int top_k, KernelKind source = KernelKind::kDynamic);

}  // namespace mgsn
