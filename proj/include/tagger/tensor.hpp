#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace tagger {

// N-dimensional row-major array of doubles with optional gradient buffer.
// Double precision is used everywhere; finite-difference checks need it.
struct Tensor {
    std::vector<int> shape;
    std::vector<double> data;
    bool requires_grad = false;
    std::vector<double> grad;  // empty until ensure_grad()

    Tensor() = default;
    Tensor(std::vector<int> shape_, double fill = 0.0);
    Tensor(std::vector<int> shape_, std::vector<double> data_);

    int64_t numel() const;
    int rank() const { return static_cast<int>(shape.size()); }
    int extent(int axis) const { return shape[static_cast<size_t>(axis)]; }

    double& at(std::initializer_list<int> idx);
    double at(std::initializer_list<int> idx) const;

    void ensure_grad();       // allocates a zero grad buffer if absent
    void zero_grad();
    bool has_grad() const { return !grad.empty(); }

    std::string shape_str() const;
};

using TensorPtr = std::shared_ptr<Tensor>;

TensorPtr make_tensor(std::vector<int> shape, double fill = 0.0);
TensorPtr make_tensor(std::vector<int> shape, std::vector<double> data);

int64_t shape_numel(const std::vector<int>& shape);
std::string shape_to_string(const std::vector<int>& shape);

// Thrown on dimension mismatches and malformed op attributes.
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a forward op produces NaN/Inf from finite inputs.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tagger
