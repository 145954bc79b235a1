#pragma once

#include "mgsn/autodiff.hpp"
#include "mgsn/metrics.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace mgsn {

struct PseudoLabelState {
  Matrix centroids;  // k x hidden, constants
  std::vector<int> assignments;
  int refresh_period = 5;
  int last_refresh_epoch = -1;
};

struct LossWeights {
  double lambda = 1.0;
  double mu = 1.0;
};

void validate_weights(const LossWeights& w);

// k-means on detached embedding values.
PseudoLabelState update_pseudo_labels(const Matrix& z, int k, std::uint64_t seed, const KMeansOptions& options = {},
                                      int refresh_period = 5, int epoch = 0);

// Mean cross-entropy of softmax(z C^T) against the pseudo-labels.
ad::Tensor cluster_loss(const ad::Tensor& z, const Matrix& centroids, std::span<const int> labels);
ad::Tensor cluster_loss(const ad::Tensor& z, const PseudoLabelState& state);

// (1/n^2) sum_ij A_ij * mean_d (z_i - z_j)^2.
ad::Tensor contrastive_loss(const ad::Tensor& z, const Matrix& a_tilde);

// mean (Z_phi - Z_f)^2 + mean (Z_r - Z_f)^2 over whichever of the first two
// are defined.
ad::Tensor view_alignment_loss(const ad::Tensor& z_original, const ad::Tensor& z_relation, const ad::Tensor& z_fused);

// Mean over u != v of (K_uv - A_uv)^2. k_normalized is the cosine-normalized
// live kernel; a_target is treated as constant.
ad::Tensor similarity_loss(const ad::Tensor& k_normalized, const Matrix& a_target);

ad::Tensor total_loss(const ad::Tensor& l_clu, const ad::Tensor& l_con, const ad::Tensor& l_sim, const LossWeights& w);

}  // namespace mgsn
