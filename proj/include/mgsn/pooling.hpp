#pragma once

#include "mgsn/autodiff.hpp"
#include "mgsn/rng.hpp"

namespace mgsn {

struct PoolingParams {
  ad::Tensor query;  // hidden_dim x 1
  double temperature = 1.0;
  // Optional 1 x 3 logits weighting the three pooled terms; the weights are
  // 3 * softmax(logits), so zero logits reproduce unit coefficients.
  ad::Tensor coefficients;

  std::vector<ad::Tensor> tensors() const;
};

PoolingParams init_pooling(int hidden_dim, double temperature, bool learnable_coefficients, Rng& rng);

// softmax over nodes of q^T h_v, as a 1 x n row.
ad::Tensor node_importance(const ad::Tensor& h, const ad::Tensor& query);

// Pairwise distance factors d_uv = ||e_u - e_v|| between incident-edge
// descriptors, or all ones when every node has the same descriptor.
Matrix descriptor_distances(const Matrix& descriptors);

// s_uv = exp(-d_uv ||h_u - h_v||^2 / tau).
ad::Tensor structure_similarity(const ad::Tensor& h, const Matrix& distances, double temperature);

// Cosine of each node embedding with the mean embedding, n x 1. Zero-norm
// rows or a zero mean give 0.
ad::Tensor node_graph_similarity(const ad::Tensor& h);

// sum_v s_v h_v + (1/n) sum_{v,u} s_vu h_u + sum_v sim_v h_v, as 1 x hidden.
// `coefficients`, when defined, is the 1 x 3 term weighting.
ad::Tensor pool_graph(const ad::Tensor& h, const ad::Tensor& scores, const ad::Tensor& structure,
                      const ad::Tensor& similarity, const ad::Tensor& coefficients = {});

// Full pooling of one graph's node embeddings.
ad::Tensor pool(const ad::Tensor& h, const Matrix& distances, const PoolingParams& params);

}  // namespace mgsn
