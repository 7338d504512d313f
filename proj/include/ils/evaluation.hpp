#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include <torch/torch.h>

#include "ils/losses.hpp"
#include "ils/mi_estimators.hpp"
#include "ils/models.hpp"
#include "ils/synthdata.hpp"

namespace ils {

struct SegMetrics {
  double iou = 0.0;
  double dice = 0.0;
  double threshold = 0.5;
  std::int64_t n_images = 0;

  nlohmann::json to_json() const;
  static SegMetrics from_json(const nlohmann::json& j);
};

// Per-image IoU and DICE after thresholding `pred` (pred >= threshold), averaged
// over images. An image whose prediction and target are both empty scores 1.
// Both inputs are [N, 1, H, W]; `gt` must be binary.
SegMetrics seg_metrics(const torch::Tensor& pred, const torch::Tensor& gt, double threshold = 0.5);

struct SegTrainConfig {
  std::int64_t steps = 3000;
  std::int64_t batch_size = 32;
  double lr = 1e-3;
  std::uint64_t seed = 0;
  // Resolution the segmenter is trained and run at; 0 keeps the input size.
  std::int64_t train_size = 0;
};

Segmenter train_segmenter(const torch::Tensor& images, const torch::Tensor& masks,
                          const NetConfig& net, const SegTrainConfig& cfg);

// Runs the segmenter on `images` (resized to the training resolution when needed)
// and returns probabilities upsampled to the input resolution.
torch::Tensor predict_masks(Segmenter& seg, const torch::Tensor& images, std::int64_t run_size = 0);

struct SegEvalConfig {
  std::int64_t n_synthetic = 10000;
  std::uint64_t sample_seed = 0;
  SegTrainConfig train;
  double threshold = 0.5;
};

// Trains a segmenter on (image, mask) pairs presented as synthetic data and scores
// it on the real test set.
SegMetrics eval_segmentation(const ImageSet& synthetic, const ImageSet& test, const NetConfig& net,
                             const SegEvalConfig& cfg);
// Samples the synthetic set from a generator first.
SegMetrics eval_segmentation(GeneratorPair& gen, const ImageSet& test, const SegEvalConfig& cfg);
SegMetrics eval_segmentation(const std::filesystem::path& checkpoint, const DatasetManifest& test_data,
                             const SegEvalConfig& cfg);

// ---------------------------------------------------------------------------
// Frechet distance over a fixed random convolutional feature extractor.

struct FeatureExtractorImpl : torch::nn::Module {
  explicit FeatureExtractorImpl(std::uint64_t seed);
  torch::Tensor forward(const torch::Tensor& x);  // [N, 3, H, W] -> [N, feature_dim]

  static constexpr std::int64_t kFeatureDim = 64;
  std::uint64_t seed;
  torch::nn::Sequential body{nullptr};
};
TORCH_MODULE(FeatureExtractor);

// Loads the persisted extractor at `path` or creates it from `seed` and saves it.
FeatureExtractor load_or_create_extractor(const std::filesystem::path& path, std::uint64_t seed);

struct FidResult {
  double value = 0.0;
  double epsilon = 0.0;  // diagonal regularization added to both covariances
  std::int64_t n_a = 0;
  std::int64_t n_b = 0;
};

// ||mu_a - mu_b||^2 + tr(S_a + S_b - 2 (S_a S_b)^{1/2}) from feature matrices [N, D].
FidResult frechet_distance(const torch::Tensor& feats_a, const torch::Tensor& feats_b,
                           double epsilon = 1e-6);
FidResult fid_lite(const torch::Tensor& set_a, const torch::Tensor& set_b, FeatureExtractor& extractor);
FidResult fid_lite(const torch::Tensor& set_a, const torch::Tensor& set_b, std::uint64_t extractor_seed);

// ---------------------------------------------------------------------------
// Sweep records and the MI-vs-IoU report

struct SweepRecord {
  double lambda_ils = 0.0;
  IlsKind loss_kind = IlsKind::MI;
  std::optional<double> fid_lite;
  std::optional<SegMetrics> seg;
  std::optional<MIEstimate> mi;
  std::uint64_t seed = 0;
  // Free-form additions (mask_bin at end of training, checkpoint path, ...).
  nlohmann::json extra = nlohmann::json::object();

  nlohmann::json to_json() const;
  static SweepRecord from_json(const nlohmann::json& j);
};

nlohmann::json to_json(const MIEstimate& e);
MIEstimate mi_from_json(const nlohmann::json& j);

// Pearson correlation; std::nullopt when either series has zero variance or fewer
// than two points.
std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y);

struct CorrelationReport {
  std::optional<double> r;
  std::string table;  // markdown
  std::filesystem::path plot;
  std::size_t n_records = 0;
};

// Uses records that carry both MI and IoU. Needs at least 4 such records. Writes
// `out_dir/mi_iou_scatter.png` and `out_dir/report.md`.
CorrelationReport correlation_report(const std::vector<SweepRecord>& records,
                                     const std::filesystem::path& out_dir);

}  // namespace ils
