#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tagger/tensor.hpp"

namespace tagger {

// Reverse-mode tape. Ops append backward closures in execution order;
// backward() replays them in reverse. Single-threaded per tape.
class Tape {
  public:
    void record(std::function<void()> backward_fn) {
        nodes_.push_back(std::move(backward_fn));
    }
    // loss must be scalar; seeds grad 1 and accumulates into every
    // requires_grad leaf. Gradients are additive; callers reset between steps.
    void backward(const TensorPtr& loss);
    void clear() { nodes_.clear(); }
    size_t size() const { return nodes_.size(); }

  private:
    std::vector<std::function<void()>> nodes_;
};

enum class OpKind {
    Conv2d,
    Linear,
    BatchNorm2d,
    Relu,
    Relu6,
    Sigmoid,
    Softmax,
    GlobalAvgPool2d,
    Add,
    Scale,
    Concat,
    Reshape,
    Slice,
    Mean,
    Transpose,
    Dropout,
    LayerNorm,
    Matmul,
};

const char* op_kind_name(OpKind kind);
std::vector<OpKind> all_op_kinds();

struct OpAttrs {
    int stride = 1;
    int pad = 0;
    int groups = 1;
    int axis = 0;                 // softmax / concat / mean / slice axis (-1 = all for mean)
    int start = 0, len = 0;       // slice window
    std::vector<int> perm;        // transpose permutation
    std::vector<int> shape;       // reshape target
    double factor = 1.0;          // scale
    double p = 0.0;               // dropout probability
    uint64_t seed = 0;            // dropout mask seed
    bool train = false;           // batch_norm / dropout mode
    bool update_running = true;   // batch_norm running-stat update
    double eps = 1e-5;
    double momentum = 0.1;        // batch_norm running-average momentum
};

// --- typed ops ---------------------------------------------------------
// All ops: pure forward on the inputs; when tape != nullptr and any input
// has requires_grad, the output carries requires_grad and a backward node
// is recorded. Forward outputs are checked finite.

TensorPtr conv2d(Tape* tape, const TensorPtr& x, const TensorPtr& w,
                 const TensorPtr& b, const OpAttrs& attrs);
TensorPtr linear(Tape* tape, const TensorPtr& x, const TensorPtr& w,
                 const TensorPtr& b);
// inputs: x [n,c,h,w], gamma [c], beta [c]; running stats are buffers
// mutated in train mode when attrs.update_running.
TensorPtr batch_norm_2d(Tape* tape, const TensorPtr& x, const TensorPtr& gamma,
                        const TensorPtr& beta, const TensorPtr& running_mean,
                        const TensorPtr& running_var, const OpAttrs& attrs);
TensorPtr relu(Tape* tape, const TensorPtr& x);
TensorPtr relu6(Tape* tape, const TensorPtr& x);
TensorPtr sigmoid(Tape* tape, const TensorPtr& x);
TensorPtr softmax(Tape* tape, const TensorPtr& x, int axis);
TensorPtr global_avg_pool_2d(Tape* tape, const TensorPtr& x);
TensorPtr add(Tape* tape, const TensorPtr& a, const TensorPtr& b);
TensorPtr scale(Tape* tape, const TensorPtr& x, double factor);
TensorPtr concat(Tape* tape, const std::vector<TensorPtr>& xs, int axis);
TensorPtr reshape(Tape* tape, const TensorPtr& x, std::vector<int> shape);
TensorPtr slice(Tape* tape, const TensorPtr& x, int axis, int start, int len);
TensorPtr mean_all(Tape* tape, const TensorPtr& x);
TensorPtr mean_axis(Tape* tape, const TensorPtr& x, int axis);
TensorPtr transpose(Tape* tape, const TensorPtr& x, std::vector<int> perm);
TensorPtr dropout(Tape* tape, const TensorPtr& x, double p, bool train, uint64_t seed);
TensorPtr layer_norm(Tape* tape, const TensorPtr& x, const TensorPtr& gamma,
                     const TensorPtr& beta, double eps = 1e-5);
TensorPtr matmul(Tape* tape, const TensorPtr& a, const TensorPtr& b);

// Weighted sum reduction to a scalar; w is constant. Used by grad_check.
TensorPtr dot_const(Tape* tape, const TensorPtr& x, const std::vector<double>& w);

// Numerically stable binary cross-entropy from logits, mean over all
// entries. targets are constants in [0,1].
TensorPtr bce_with_logits(Tape* tape, const TensorPtr& logits, const TensorPtr& targets);
// Per-class (column) mean BCE vector, no gradient tracking.
std::vector<double> bce_per_class(const TensorPtr& logits, const TensorPtr& targets);

// Generic dispatcher over the OpKind set; input ordering is documented per
// kind in the implementation (conv2d: x,w,b; batch_norm: x,gamma,beta,rm,rv;
// everything else in natural order).
TensorPtr apply(OpKind kind, const std::vector<TensorPtr>& inputs,
                const OpAttrs& attrs, Tape* tape);

// --- gradient checking -------------------------------------------------

struct CheckReport {
    OpKind kind;
    double max_rel_err = 0.0;
    bool pass = false;
};

// Compares the reverse-mode gradient of a random weighted sum of the op
// output against central finite differences (h=1e-5). The sampler avoids
// relu/relu6 kinks by rejecting inputs within 1e-3 of 0 and 6.
CheckReport grad_check(OpKind kind, double tolerance, uint64_t seed = 7);
std::vector<CheckReport> grad_check_all(double tolerance, uint64_t seed = 7);

}  // namespace tagger
