#include "tagger/tensor.hpp"

#include <numeric>
#include <sstream>

namespace tagger {

int64_t shape_numel(const std::vector<int>& shape) {
    int64_t n = 1;
    for (int e : shape) {
        if (e < 0) throw ShapeError("negative extent in shape " + shape_to_string(shape));
        n *= e;
    }
    return n;
}

std::string shape_to_string(const std::vector<int>& shape) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < shape.size(); ++i) {
        if (i) os << ",";
        os << shape[i];
    }
    os << "]";
    return os.str();
}

Tensor::Tensor(std::vector<int> shape_, double fill)
    : shape(std::move(shape_)), data(static_cast<size_t>(shape_numel(shape)), fill) {}

Tensor::Tensor(std::vector<int> shape_, std::vector<double> data_)
    : shape(std::move(shape_)), data(std::move(data_)) {
    if (shape_numel(shape) != static_cast<int64_t>(data.size()))
        throw ShapeError("data size " + std::to_string(data.size()) +
                         " does not match shape " + shape_to_string(shape));
}

int64_t Tensor::numel() const { return static_cast<int64_t>(data.size()); }

double& Tensor::at(std::initializer_list<int> idx) {
    size_t off = 0, d = 0;
    for (int i : idx) off = off * static_cast<size_t>(shape[d++]) + static_cast<size_t>(i);
    return data[off];
}

double Tensor::at(std::initializer_list<int> idx) const {
    size_t off = 0, d = 0;
    for (int i : idx) off = off * static_cast<size_t>(shape[d++]) + static_cast<size_t>(i);
    return data[off];
}

void Tensor::ensure_grad() {
    if (grad.empty()) grad.assign(data.size(), 0.0);
}

void Tensor::zero_grad() { grad.assign(data.size(), 0.0); }

std::string Tensor::shape_str() const { return shape_to_string(shape); }

TensorPtr make_tensor(std::vector<int> shape, double fill) {
    return std::make_shared<Tensor>(std::move(shape), fill);
}

TensorPtr make_tensor(std::vector<int> shape, std::vector<double> data) {
    return std::make_shared<Tensor>(std::move(shape), std::move(data));
}

}  // namespace tagger
