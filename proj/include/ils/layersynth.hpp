#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <torch/torch.h>

#include "ils/rng.hpp"

namespace ils {

// Latent codes z ~ N(0, I), shape [N, z_dim].
struct LatentBatch {
  torch::Tensor z;

  static LatentBatch sample(std::int64_t n, std::int64_t z_dim, Rng& rng);
  std::int64_t size() const { return z.size(0); }
  std::int64_t dim() const { return z.size(1); }
};

// One generated batch of layers.
//   fg:   [N, 3, H, W] in [-1, 1]
//   bg:   [N, 3, H, W] in [-1, 1]
//   mask: [N, 1, H, W] in [0, 1]
struct LayerTriplet {
  torch::Tensor fg;
  torch::Tensor bg;
  torch::Tensor mask;

  // Throws DimensionError when the three tensors disagree on batch or spatial size.
  void check_shapes() const;
  std::int64_t batch() const { return fg.size(0); }
  LayerTriplet detach() const { return {fg.detach(), bg.detach(), mask.detach()}; }
  LayerTriplet slice(std::int64_t begin, std::int64_t end) const;
};

// Random translation applied jointly to mask and foreground before composing.
struct PerturbSpec {
  double max_shift_frac = 0.125;  // fraction of the image side, in [0, 0.5)
  double fill_value = -1.0;       // value written into vacated foreground pixels

  std::int64_t max_shift(std::int64_t extent) const;
};

struct Shift {
  std::int64_t dx = 0;
  std::int64_t dy = 0;
  bool operator==(const Shift&) const = default;
};

struct PerturbedImage {
  torch::Tensor image;
  std::vector<Shift> shifts;
};

// The four visibility-separated regions.
struct RegionSplit {
  torch::Tensor fg_vis;
  torch::Tensor fg_inv;
  torch::Tensor bg_vis;
  torch::Tensor bg_inv;
};

// x = m * f + (1 - m) * b, mask broadcast over colour channels.
torch::Tensor compose(const LayerTriplet& layers);

// Translate each sample of an [N, C, H, W] tensor by (dx[i], dy[i]) pixels;
// positive dx moves content right, positive dy moves it down. Vacated pixels take
// `fill`, nothing wraps. Differentiable with respect to `t`.
torch::Tensor shift2d(const torch::Tensor& t, std::span<const std::int64_t> dx,
                      std::span<const std::int64_t> dy, double fill);
torch::Tensor shift2d(const torch::Tensor& t, std::span<const Shift> shifts, double fill);

// Draw one shift per sample, uniform over [-s, s] on each axis.
std::vector<Shift> sample_shifts(std::int64_t n, std::int64_t height, std::int64_t width,
                                 const PerturbSpec& spec, Rng& rng);

// x = T(m) * T(f) + (1 - T(m)) * b with one shared shift per sample.
// The mask fills with 0 and the foreground with spec.fill_value.
PerturbedImage perturb_compose(const LayerTriplet& layers, const PerturbSpec& spec, Rng& rng);
torch::Tensor perturb_compose(const LayerTriplet& layers, std::span<const Shift> shifts,
                              const PerturbSpec& spec);

RegionSplit split_regions(const LayerTriplet& layers);

}  // namespace ils
