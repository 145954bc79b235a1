#pragma once

#include "mgsn/common.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

// Dense reverse-mode differentiation over double matrices.
//
// A Tensor is a cheap handle to a node in the differentiation graph. Ops build
// new nodes; when any input requires a gradient the output records its
// parents and a backward rule, otherwise the output is a plain constant and
// nothing is retained. A graph belongs to one thread; separate graphs may be
// built concurrently.
namespace mgsn::ad {

struct Node;

class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Matrix value, bool requires_grad = false);

  static Tensor constant(Matrix value) { return Tensor(std::move(value), false); }
  static Tensor parameter(Matrix value) { return Tensor(std::move(value), true); }
  static Tensor scalar(double v, bool requires_grad = false);

  bool defined() const { return node_ != nullptr; }
  const Matrix& value() const;
  // For optimizers and finite differences; invalidates any graph built on it.
  Matrix& mutable_value();
  Eigen::Index rows() const { return value().rows(); }
  Eigen::Index cols() const { return value().cols(); }
  double item() const;  // value of a 1x1 tensor

  bool requires_grad() const;
  const std::optional<Matrix>& grad() const;
  void zero_grad();
  std::uint64_t id() const;
  std::string_view op() const;

  // Same value, no history.
  Tensor detach() const { return constant(value()); }

  const std::shared_ptr<Node>& node() const { return node_; }

 private:
  friend Tensor make_result(Matrix, std::string_view, std::vector<Tensor>,
                            std::function<void(const Node&, const Matrix&)>);
  std::shared_ptr<Node> node_;
};

using BackwardRule = std::function<void(const Node& self, const Matrix& out_grad)>;

struct Node {
  Matrix value;
  std::optional<Matrix> grad;
  bool requires_grad = false;
  std::uint64_t id = 0;
  std::string_view op = "leaf";
  std::vector<std::shared_ptr<Node>> parents;
  BackwardRule backward;
  // Scratch buffer for one backward pass.
  Matrix pending;
  bool has_pending = false;
};

// Builds an op result. The backward rule is only kept when some input
// requires a gradient.
Tensor make_result(Matrix value, std::string_view op, std::vector<Tensor> inputs, BackwardRule rule);

// Adds g into the pending gradient of n (no-op when n does not require grad).
void accumulate(Node& n, const Matrix& g);

// Op kinds. Binary elementwise ops broadcast the right operand when it is
// 1x1 or a 1xC row vector.
Tensor matmul(const Tensor& a, const Tensor& b);
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor relu(const Tensor& a);
Tensor row_softmax(const Tensor& a);
Tensor row_log_softmax(const Tensor& a);
Tensor exp(const Tensor& a);
Tensor log(const Tensor& a);
Tensor neg(const Tensor& a);
Tensor sum_all(const Tensor& a);
Tensor mean_all(const Tensor& a);
Tensor row_sum(const Tensor& a);  // n x 1
Tensor col_sum(const Tensor& a);  // 1 x c
Tensor transpose(const Tensor& a);
Tensor l2_norm_rows(const Tensor& a);  // n x 1; zero rows have zero norm and zero gradient
Tensor squared_frobenius(const Tensor& a);
Tensor scalar_mul(const Tensor& a, double c);
Tensor add_scalar(const Tensor& a, double c);
Tensor concat_rows(std::span<const Tensor> parts);
Tensor gather_rows(const Tensor& a, std::span<const int> rows);
Tensor div_by_scalar(const Tensor& a, const Tensor& s);  // s is 1x1
// a / b elementwise (b broadcast as in mul); entries with b == 0 yield 0.
Tensor safe_div(const Tensor& a, const Tensor& b);
// x^p for x > 0, 0 elsewhere.
Tensor pow_positive(const Tensor& a, double p);
// out(i, j) = ||a_i - b_j||^2.
Tensor sq_dist(const Tensor& a, const Tensor& b);
Tensor diag_part(const Tensor& a);  // n x n -> n x 1
Tensor element(const Tensor& a, Eigen::Index row, Eigen::Index col);  // 1 x 1

inline Tensor operator+(const Tensor& a, const Tensor& b) { return add(a, b); }
inline Tensor operator-(const Tensor& a, const Tensor& b) { return sub(a, b); }
inline Tensor operator*(const Tensor& a, const Tensor& b) { return mul(a, b); }
inline Tensor operator*(double c, const Tensor& a) { return scalar_mul(a, c); }

// Populates grad on every reachable tensor that requires one. Gradients
// accumulate: a second call without reset_grads doubles them.
void backward(const Tensor& loss);
void reset_grads(const Tensor& root);

// Tensors reachable from root (root included) in topological order, inputs
// first.
std::vector<Node*> topological_order(const Tensor& root);

struct OptimizerState {
  std::vector<Matrix> first_moment;
  std::vector<Matrix> second_moment;
  std::int64_t step_count = 0;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

OptimizerState make_adam(std::span<const Tensor> params, double learning_rate = 1e-3);

// One bias-corrected Adam update in place. Grads are left untouched.
void adam_step(std::span<Tensor> params, OptimizerState& state);

struct GradCheckResult {
  double max_relative_error = 0.0;
  int checked = 0;
  int excluded = 0;  // coordinates at a kink
};

using ExpressionBuilder = std::function<Tensor(const std::vector<Tensor>&)>;

// Compares backward() against central differences at `point`. The relative
// error per coordinate is |analytic - numeric| / max(1, |analytic|). A
// coordinate whose one-sided difference quotients disagree by more than
// kink_tolerance is treated as a nondifferentiable point (e.g. relu at 0) and
// excluded.
GradCheckResult grad_check(const ExpressionBuilder& build, const std::vector<Matrix>& point,
                           double h = 1e-5, double kink_tolerance = 1e-2);

}  // namespace mgsn::ad
