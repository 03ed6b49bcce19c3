#pragma once

#include <memory>
#include <string>
#include <vector>

#include "heliodet/rng.hpp"
#include "heliodet/tensor.hpp"

namespace heliodet {

enum class LayerKind { conv2d, maxpool2d, leaky_relu, linear, flatten, sigmoid };

std::string layer_kind_name(LayerKind k);
LayerKind layer_kind_from_name(const std::string& name);

/// Declarative layer description used to build networks and to serialize
/// weight files.
struct LayerSpec {
    LayerKind kind = LayerKind::conv2d;
    int out_channels = 0;   // conv2d
    int kernel = 0;         // conv2d
    int stride = 1;         // conv2d, maxpool2d
    int pad = 0;            // conv2d
    int size = 0;           // maxpool2d
    float slope = 0.1f;     // leaky_relu
    int out_features = 0;   // linear

    static LayerSpec conv(int out_channels, int kernel, int stride = 1, int pad = 0);
    static LayerSpec maxpool(int size, int stride);
    static LayerSpec leaky(float slope = 0.1f);
    static LayerSpec dense(int out_features);
    static LayerSpec flat();
    static LayerSpec sigmoid_act();

    bool operator==(const LayerSpec&) const = default;
};

/// One network layer with cached forward state for reverse-mode gradients.
class Layer {
public:
    virtual ~Layer() = default;
    virtual Tensor forward(const Tensor& input) = 0;
    /// Accumulates parameter gradients (+=) and returns the input gradient.
    /// Requires a prior forward with cached state; throws std::logic_error
    /// otherwise.
    virtual Tensor backward(const Tensor& grad_out) = 0;
    virtual std::vector<Tensor*> params() { return {}; }
    virtual std::vector<Tensor*> grads() { return {}; }
    virtual std::vector<size_t> output_shape(const std::vector<size_t>& in) const = 0;
    virtual LayerSpec spec() const = 0;
    virtual std::string name() const = 0;
};

std::unique_ptr<Layer> make_layer(const LayerSpec& spec, const std::vector<size_t>& input_shape,
                                  int layer_index, uint64_t seed);

/// Sequential network. Forward caches per-layer state; backward consumes it.
/// Single-writer during forward/backward.
class Network {
public:
    Network() = default;
    Network(std::vector<LayerSpec> specs, std::vector<size_t> input_shape, uint64_t seed);

    Tensor forward(const Tensor& input);
    /// Reverse pass through all layers. Parameter gradients accumulate; call
    /// zero_grads() between batches.
    Tensor backward(const Tensor& grad_out);
    void zero_grads();

    std::vector<Tensor*> parameters();
    std::vector<Tensor*> gradients();
    size_t parameter_count();

    const std::vector<size_t>& input_shape() const { return input_shape_; }
    const std::vector<size_t>& output_shape() const { return output_shape_; }
    const std::vector<LayerSpec>& specs() const { return specs_; }
    std::vector<Layer*> layers();

private:
    std::vector<LayerSpec> specs_;
    std::vector<size_t> input_shape_;
    std::vector<size_t> output_shape_;
    std::vector<std::unique_ptr<Layer>> layers_;
    bool forward_done_ = false;

    friend class WeightsCodec;
};

/// SGD with momentum and weight decay:
///   v <- momentum * v + g + weight_decay * w
///   w <- w - lr * v
class SgdOptimizer {
public:
    explicit SgdOptimizer(const std::vector<Tensor*>& params);
    void step(const std::vector<Tensor*>& params, const std::vector<Tensor*>& grads, float lr,
              float momentum, float weight_decay);

private:
    std::vector<Tensor> velocity_;
};

/// Kaiming-uniform fan-in initialization: U(-b, b), b = sqrt(6 / fan_in).
void kaiming_uniform(Tensor& w, size_t fan_in, Rng& rng);

}  // namespace heliodet
