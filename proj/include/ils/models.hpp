#pragma once

#include <cstdint>
#include <string>

#include <torch/torch.h>

#include "ils/layersynth.hpp"
#include "ils/rng.hpp"

namespace ils {

struct Checkpoint;

struct NetConfig {
  std::int64_t img_size = 32;
  std::int64_t base_channels = 64;
  std::int64_t z_dim = 64;
  std::int64_t w_dim = 64;
  std::int64_t mapping_layers = 2;
  std::int64_t seg_channels = 16;

  void validate() const;
  // Feature channels of a synthesis or discrimination block at `resolution`.
  std::int64_t channels_at(std::int64_t resolution) const;
};

// z -> w multilayer perceptron applied after normalizing z to unit second moment.
struct MappingNetworkImpl : torch::nn::Module {
  MappingNetworkImpl(std::int64_t z_dim, std::int64_t w_dim, std::int64_t layers);
  torch::Tensor forward(const torch::Tensor& z);

  torch::nn::Sequential net;
};
TORCH_MODULE(MappingNetwork);

// Upsample x2, 3x3 conv, per-channel gain (1 + A w), leaky ReLU.
struct SynthesisBlockImpl : torch::nn::Module {
  SynthesisBlockImpl(std::int64_t in_ch, std::int64_t out_ch, std::int64_t w_dim);
  torch::Tensor forward(const torch::Tensor& x, const torch::Tensor& w);

  torch::nn::Conv2d conv{nullptr};
  torch::nn::Linear style{nullptr};
};
TORCH_MODULE(SynthesisBlock);

// Mapping network followed by a transposed-resolution stack from 4x4 to img_size.
// Output is raw (pre-activation) with `out_channels` channels.
struct LayerGeneratorImpl : torch::nn::Module {
  LayerGeneratorImpl(const NetConfig& cfg, std::int64_t out_channels);
  torch::Tensor forward(const torch::Tensor& z);

  NetConfig cfg;
  MappingNetwork mapping{nullptr};
  torch::nn::Linear to_initial{nullptr};
  torch::nn::ModuleList blocks;
  torch::nn::Conv2d to_out{nullptr};
};
TORCH_MODULE(LayerGenerator);

// The foreground+mask generator (4 output channels: tanh RGB, logistic mask) and
// the background generator (tanh RGB). Both consume the same z.
struct GeneratorPairImpl : torch::nn::Module {
  explicit GeneratorPairImpl(const NetConfig& cfg);

  LayerTriplet synthesize(const torch::Tensor& z);

  NetConfig cfg;
  LayerGenerator g_fm{nullptr};
  LayerGenerator g_b{nullptr};
};
TORCH_MODULE(GeneratorPair);

// Convolutional classifier producing one logit per image.
struct DiscriminatorImpl : torch::nn::Module {
  explicit DiscriminatorImpl(const NetConfig& cfg);
  torch::Tensor forward(const torch::Tensor& x);

  NetConfig cfg;
  torch::nn::Conv2d from_rgb{nullptr};
  torch::nn::ModuleList blocks;
  torch::nn::Linear head{nullptr};
};
TORCH_MODULE(Discriminator);

// Small encoder-decoder with skip connections: [N,3,H,W] -> [N,1,H,W] logits.
struct SegmenterImpl : torch::nn::Module {
  explicit SegmenterImpl(const NetConfig& cfg);
  torch::Tensor forward(const torch::Tensor& x);
  torch::Tensor predict(const torch::Tensor& x);  // logistic probabilities

  torch::nn::Sequential enc1{nullptr}, enc2{nullptr}, enc3{nullptr};
  torch::nn::Sequential dec2{nullptr}, dec1{nullptr};
  torch::nn::Conv2d up2{nullptr}, up1{nullptr};
  torch::nn::Conv2d out{nullptr};
};
TORCH_MODULE(Segmenter);

GeneratorPair build_generators(const NetConfig& cfg, std::uint64_t seed);
Discriminator build_discriminator(const NetConfig& cfg, std::uint64_t seed);
Segmenter build_segmenter(const NetConfig& cfg, std::uint64_t seed);

LayerTriplet synthesize(GeneratorPair& gp, const LatentBatch& z);

// Re-initialize every parameter from `rng`: weights ~ N(0, gain^2 / fan_in),
// biases zero. Parameters whose name contains "style" use a small gain.
void init_parameters(torch::nn::Module& module, Rng& rng);

std::int64_t parameter_count(const torch::nn::Module& module);

// FNV-1a over the raw bytes of all parameters and buffers in registration order.
std::uint64_t parameter_checksum(const torch::nn::Module& module);

void export_parameters(const torch::nn::Module& module, const std::string& prefix, Checkpoint& ckpt);
void import_parameters(torch::nn::Module& module, const std::string& prefix, const Checkpoint& ckpt);

}  // namespace ils
