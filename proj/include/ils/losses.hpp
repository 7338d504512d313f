#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

#include <torch/torch.h>

#include "ils/layersynth.hpp"
#include "ils/mi_estimators.hpp"
#include "ils/rng.hpp"

namespace ils {

struct LossWeights {
  double lambda_m = 2.0;    // non-empty mask
  double lambda_b = 2.0;    // mask binarization
  double lambda_ils = 1.0;  // independence loss
  double gamma = 1.0;       // R1 weight
  double eta = 0.25;        // minimal mask area

  void validate() const;
};

enum class IlsKind { MI, L1, None };

std::string to_string(IlsKind k);
IlsKind ils_kind_from_string(const std::string& s);

// Ablation switches for the independence loss.
struct ILSOptions {
  bool separate_regions = true;   // split by visibility; false uses whole layers
  bool optimize_visible = true;   // false stops gradients through fg_vis and bg_vis
  bool optimize_mask = true;      // false stops gradients through the mask
  Family family = Family::Laplace;
  IlsKind loss_kind = IlsKind::MI;
  bool per_element_mean = false;  // divide per-sample distances by element count
};

// ---- adversarial ---------------------------------------------------------

// -E[log sigmoid(real)] - E[log(1 - sigmoid(fake))]
torch::Tensor d_loss(const torch::Tensor& real_logits, const torch::Tensor& fake_logits);

// Non-saturating generator loss -E[log sigmoid(fake)].
torch::Tensor g_loss(const torch::Tensor& fake_logits);

using DiscriminatorFn = std::function<torch::Tensor(const torch::Tensor&)>;

// (1/2) E ||grad_x D(x)||^2 over the real batch. The returned tensor is
// differentiable with respect to the discriminator's parameters.
// Throws UnsupportedError when D's output carries no autograd history.
torch::Tensor r1_penalty(const torch::Tensor& real_images, const DiscriminatorFn& discriminator);

// Same penalty when the caller already evaluated `logits = D(inputs)` with
// `inputs` requiring grad (lets a training step reuse the real-batch forward pass).
torch::Tensor r1_penalty_from_logits(const torch::Tensor& inputs, const torch::Tensor& logits);

// ---- mask regularizers ---------------------------------------------------

// E max{0, eta - mean_u m_u}
torch::Tensor mask_area_loss(const torch::Tensor& mask, double eta);

// E mean_u min{m_u, 1 - m_u}
torch::Tensor mask_binarization_loss(const torch::Tensor& mask);

// ---- independence losses -------------------------------------------------

// Visibility split feeding the independence losses; the mask is detached when
// !opts.optimize_mask.
RegionSplit ils_regions(const LayerTriplet& layers, const ILSOptions& opts);

// vCLUB(bg_inv, fg_vis) + vCLUB(bg_vis, fg_inv) with caller-supplied shuffles.
// !optimize_visible detaches fg_vis and bg_vis. !separate_regions evaluates the
// single term vCLUB(b, f) on the re-assembled layers (only the first shuffle is used).
torch::Tensor ils_mi_loss(const RegionSplit& split, const ILSOptions& opts,
                          std::span<const std::int64_t> shuffle_inv_vis,
                          std::span<const std::int64_t> shuffle_vis_inv);

// Same, drawing one independent shuffle per term from `rng`.
torch::Tensor ils_mi_loss(const RegionSplit& split, const ILSOptions& opts, Rng& rng);

// -E||bg_inv - fg_vis||_1 - E||bg_vis - fg_inv||_1
torch::Tensor ils_l1_loss(const RegionSplit& split, const ILSOptions& opts);

// Dispatches on opts.loss_kind; std::nullopt for IlsKind::None.
std::optional<torch::Tensor> ils_loss(const LayerTriplet& layers, const ILSOptions& opts, Rng& rng);

struct GeneratorLossParts {
  torch::Tensor adversarial;
  torch::Tensor mask_area;
  torch::Tensor mask_binarization;
  std::optional<torch::Tensor> ils;
};

// adversarial + lambda_m L_m + lambda_b L_b + lambda_ils L_ILS
torch::Tensor generator_objective(const GeneratorLossParts& parts, const LossWeights& weights);

}  // namespace ils
