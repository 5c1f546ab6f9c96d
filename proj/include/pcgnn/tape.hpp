#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "pcgnn/matrix.hpp"

namespace pcgnn {

class Tape;

/// Handle to a dense 2-D value. Holds the payload; additionally points at a
/// tape node when the value was recorded for differentiation. Values are
/// immutable after construction and cheap to copy.
struct Value {
  std::shared_ptr<const Matrix> m;
  Tape* tape = nullptr;
  int node = -1;

  Value() = default;
  const Matrix& mat() const { return *m; }
  bool recorded() const { return node >= 0; }
  index_t rows() const { return m->rows(); }
  index_t cols() const { return m->cols(); }
};

/// Wraps a matrix as an unrecorded constant.
Value constant(Matrix m);
Value constant(std::shared_ptr<const Matrix> m);

/// Reverse-mode record: an ordered list of primitive ops with parent
/// references and one gradient buffer per recorded value. Single-threaded by
/// contract; independent tapes may live on different threads.
class Tape {
 public:
  using BackFn = std::function<void(Tape&)>;

  /// Records a computed value. `back` reads grad(id) and accumulates into the
  /// parents' gradient buffers.
  Value record(Matrix value, std::vector<int> parents, BackFn back);
  Value record(std::shared_ptr<const Matrix> value, std::vector<int> parents, BackFn back);

  /// Records an input leaf (parameter or differentiable input).
  Value leaf(std::shared_ptr<const Matrix> v);

  /// Gradient buffer of a node, zero-initialized on first access.
  Matrix& grad(int node);
  bool grad_touched(int node) const;
  const Matrix& value(int node) const { return *nodes_[static_cast<size_t>(node)].value; }

  /// Seeds d(loss)/d(loss) = 1 and sweeps the record in reverse topological
  /// order. `loss` must be a 1x1 value recorded on this tape.
  void backward(const Value& loss);

  int size() const { return static_cast<int>(nodes_.size()); }

 private:
  struct Node {
    std::shared_ptr<const Matrix> value;
    Matrix grad;  // empty until touched
    std::vector<int> parents;
    BackFn back;
  };
  std::vector<Node> nodes_;
};

// ---------------------------------------------------------------------------
// Primitive ops. Every op computes its value; when `t` is non-null and at
// least one input is recorded, the result is recorded with its backward rule.
// Passing t = nullptr gives the plain inference path.
// ---------------------------------------------------------------------------

/// y = x * w + broadcast-rows(b); b is 1 x cols(w).
Value linear(Tape* t, const Value& x, const Value& w, const Value& b);

/// Elementwise max(x, slope*x). Subgradient at 0 is slope.
Value leaky_relu(Tape* t, const Value& x, double slope);

Value add(Tape* t, const Value& a, const Value& b);
Value sub(Tape* t, const Value& a, const Value& b);
Value mul_elem(Tape* t, const Value& a, const Value& b);
Value scale(Tape* t, const Value& a, double c);

/// Column-concatenation in argument order.
Value concat_cols(Tape* t, const std::vector<Value>& xs);

/// out.row(r) = x.row(idx[r]).
Value gather_rows(Tape* t, const Value& x, std::shared_ptr<const std::vector<index_t>> idx);

/// 1 x d column-wise max over rows; ties route the subgradient to the first
/// argmax row.
Value global_max_rows(Tape* t, const Value& x);
Value global_mean_rows(Tape* t, const Value& x);

/// Sum of all entries as a 1x1 value.
Value sum_all(Tape* t, const Value& x);

/// Mean softmax cross-entropy of logits rows against integer labels; returns
/// a 1x1 value. Stabilized with log-sum-exp.
Value softmax_cross_entropy(Tape* t, const Value& logits,
                            std::shared_ptr<const std::vector<int>> labels);

}  // namespace pcgnn
