#pragma once

#include <cstdint>
#include <vector>

#include <ATen/core/Generator.h>
#include <torch/torch.h>

namespace ils {

// Explicit random stream. Every stochastic operation in the library takes one of
// these by reference; nothing touches torch's global generator.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0);

  at::Generator& generator() { return gen_; }

  // Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  std::vector<std::int64_t> uniform_ints(std::int64_t n, std::int64_t lo, std::int64_t hi);
  double uniform();

  torch::Tensor normal(at::IntArrayRef shape, torch::Dtype dtype = torch::kFloat32);
  torch::Tensor permutation(std::int64_t n);

  // Opaque serialized state (a uint8 tensor) for checkpointing.
  torch::Tensor state() const;
  void set_state(const torch::Tensor& state);

  // Derive an independent stream from a seed and a stream label.
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

 private:
  at::Generator gen_;
};

}  // namespace ils
