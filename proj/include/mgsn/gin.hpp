#pragma once

#include "mgsn/autodiff.hpp"
#include "mgsn/relations.hpp"
#include "mgsn/rng.hpp"

#include <vector>

namespace mgsn {

struct EncoderLayer {
  ad::Tensor weight;  // d_in x d_out
  ad::Tensor bias;    // 1 x d_out
};

// One set of layers shared by every view.
struct EncoderParams {
  std::vector<EncoderLayer> layers;
  int hidden_dim = 32;

  int depth() const { return static_cast<int>(layers.size()); }
  std::vector<ad::Tensor> tensors() const;
};

// Glorot-uniform weights, zero biases.
EncoderParams init_encoder(int input_dim, int hidden_dim, int depth, Rng& rng);

// relu((H + A_hat H) W + b).
ad::Tensor gin_layer(const ad::Tensor& h, const ad::Tensor& a_hat, const EncoderLayer& layer);

ad::Tensor encode(const ad::Tensor& x, const ad::Tensor& a_hat, const EncoderParams& params);

// Differentiable D^{-1/2} (A + I) D^{-1/2}.
ad::Tensor normalize_adjacency(const ad::Tensor& a);

// Constant parts of a graph's encoder input, prepared once per dataset.
struct EncoderInputs {
  Matrix x;
  Matrix original_hat;               // normalized A^phi
  std::vector<Matrix> relation_hat;  // normalized A^r per relation
  std::vector<Matrix> relation_raw;  // A^r, inputs to the fusion
};

EncoderInputs prepare_encoder_inputs(const Matrix& x, const RelationViewSet& views);

struct StreamMask {
  bool original = true;
  bool relation = true;
  bool fused = true;
};

// Node embeddings per view. `relation` is the row-wise mean of
// `per_relation`. Streams masked off are left undefined.
struct ViewEmbeddings {
  ad::Tensor original;
  ad::Tensor relation;
  ad::Tensor fused;
  std::vector<ad::Tensor> per_relation;
};

// alpha (1 x R) drives the fused view so that gradients reach it.
ViewEmbeddings encode_views(const EncoderInputs& inputs, const ad::Tensor& alpha,
                            const EncoderParams& params, StreamMask mask = {});

// Convenience overload using the views' recorded fusion weights as constants.
ViewEmbeddings encode_views(const Matrix& x, const RelationViewSet& views, const EncoderParams& params);

}  // namespace mgsn
