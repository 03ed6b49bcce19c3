#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "heliodet/error.hpp"

namespace heliodet {

/// Dense row-major f32 tensor.
struct Tensor {
    std::vector<size_t> shape;
    std::vector<float> data;

    Tensor() = default;

    explicit Tensor(std::vector<size_t> s) : shape(std::move(s)) {
        data.assign(numel_of(shape), 0.f);
    }

    Tensor(std::vector<size_t> s, std::vector<float> d)
        : shape(std::move(s)), data(std::move(d)) {
        if (data.size() != numel_of(shape))
            throw ShapeError("Tensor: data length " + std::to_string(data.size()) +
                             " does not match shape (" + std::to_string(numel_of(shape)) + ")");
    }

    static size_t numel_of(const std::vector<size_t>& s) {
        return std::accumulate(s.begin(), s.end(), size_t{1}, std::multiplies<>());
    }

    size_t numel() const { return data.size(); }

    void fill(float v) { std::fill(data.begin(), data.end(), v); }

    bool same_shape(const Tensor& other) const { return shape == other.shape; }

    std::string shape_str() const {
        std::string s = "[";
        for (size_t i = 0; i < shape.size(); ++i)
            s += (i ? "," : "") + std::to_string(shape[i]);
        return s + "]";
    }
};

}  // namespace heliodet
