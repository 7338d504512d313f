#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include <torch/torch.h>

#include "ils/checkpoint.hpp"
#include "ils/errors.hpp"
#include "ils/layersynth.hpp"
#include "ils/losses.hpp"
#include "ils/models.hpp"
#include "ils/rng.hpp"
#include "ils/synthdata.hpp"

namespace ils {

struct TrainConfig {
  NetConfig net;
  LossWeights weights;
  ILSOptions ils;
  PerturbSpec perturb;
  std::int64_t batch_size = 32;
  std::int64_t total_images_shown = 200000;
  double lr = 0.0025;
  std::array<double, 2> adam_betas{0.0, 0.99};
  std::uint64_t seed = 0;
  std::int64_t checkpoint_every = 50000;  // images
  std::int64_t log_every = 50;            // steps

  void validate() const;
  nlohmann::json to_json() const;
  static TrainConfig from_json(const nlohmann::json& j);
};

// Raised when a loss or gradient becomes non-finite; the message carries the last
// losses and gradient norms.
struct TrainingDiverged : NumericalError {
  using NumericalError::NumericalError;
};

// One row of the metric history. Keys: d_loss, r1, g_adv, mask_area, mask_bin,
// ils (only when an independence loss is active), vclub (always; Laplace vCLUB of
// the visibility split, no gradient), g_total, grad_norm_g, grad_norm_d.
struct StepMetrics {
  std::int64_t step = 0;
  std::int64_t images_shown = 0;
  std::map<std::string, double> values;

  nlohmann::json to_json() const;
};

// Everything needed to continue training bit-exactly.
struct TrainState {
  explicit TrainState(const TrainConfig& cfg);

  TrainConfig cfg;
  GeneratorPair gen{nullptr};
  Discriminator disc{nullptr};
  std::unique_ptr<torch::optim::Adam> opt_g;
  std::unique_ptr<torch::optim::Adam> opt_d;
  Rng rng;
  std::int64_t images_shown = 0;
  std::int64_t step = 0;
  std::vector<StepMetrics> history;

  Checkpoint to_checkpoint() const;
  static TrainState from_checkpoint(const Checkpoint& ckpt);
};

// One discriminator update followed by one generator update:
//   D: d_loss(real, perturbed fake) + gamma * R1(real)
//   G: g_loss(perturbed fake) + lambda_m L_m + lambda_b L_b + lambda_ils L_ILS
// L_ILS and the mask losses use the unperturbed triplet.
StepMetrics train_step(TrainState& state, const torch::Tensor& real_batch);

// The two halves of train_step; each updates only its own network and records its
// metrics into `m`.
void discriminator_step(TrainState& state, const torch::Tensor& real_batch, StepMetrics& m);
void generator_step(TrainState& state, std::int64_t batch_size, StepMetrics& m);

// Indices of the real images used at `step`: consecutive slices of per-epoch
// permutations seeded from (seed, epoch). Depends only on the arguments, so a
// resumed run sees the same data order.
torch::Tensor batch_indices(std::uint64_t seed, std::int64_t step, std::int64_t batch_size,
                            std::int64_t dataset_size);

struct FitOptions {
  std::filesystem::path out_dir;
  std::optional<std::filesystem::path> resume_from;
  bool quiet = false;
};

// Trains until cfg.total_images_shown. Checkpoints are written at images_shown = 0,
// at every multiple of cfg.checkpoint_every and at the end (if not already on a
// multiple); `out_dir/FINAL` names the final one. Metrics go to out_dir/metrics.jsonl.
std::filesystem::path fit(const TrainConfig& cfg, const DatasetManifest& manifest,
                          const FitOptions& options);
std::filesystem::path fit(const TrainConfig& cfg, const torch::Tensor& real_images,
                          const FitOptions& options);

std::filesystem::path checkpoint_name(std::int64_t images_shown);

// Loads only the generators from a checkpoint.
GeneratorPair load_generators(const std::filesystem::path& checkpoint);

// n latents -> composed images (no perturbation) with masks binarized at 0.5.
struct SyntheticSet {
  ImageSet labelled;
  LayerTriplet layers;  // unbinarized raw layers, detached
};
SyntheticSet sample_synthetic(GeneratorPair& gen, std::int64_t n, std::uint64_t seed,
                              std::int64_t chunk = 256);
// Writes the set in the dataset layout (split "train") under out_dir.
DatasetManifest sample_synthetic(const std::filesystem::path& checkpoint, std::int64_t n,
                                 std::uint64_t seed, const std::filesystem::path& out_dir);

}  // namespace ils
