#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <torch/torch.h>

#include "ils/layersynth.hpp"
#include "ils/rng.hpp"

namespace ils {

// Variational family for q(b | f).
enum class Family { Laplace, Gaussian };

enum class Estimator { VClub, Mine, ClosedForm };
enum class BoundKind { Upper, Lower, Exact };

std::string to_string(Family f);
std::string to_string(Estimator e);
std::string to_string(BoundKind b);
Family family_from_string(const std::string& s);

// A mutual-information value in nats together with how it was obtained.
struct MIEstimate {
  double value = 0.0;
  Estimator estimator = Estimator::ClosedForm;
  BoundKind bound = BoundKind::Exact;
  std::int64_t n_samples = 0;
  std::optional<Family> family;
  // MINE only: the Donsker-Varadhan objective before clamping at zero.
  std::optional<double> raw_value;
};

// Row-wise log q(b_i | f_i) up to an additive constant:
//   Laplace  -> -||b_i - f_i||_1
//   Gaussian -> -0.5 ||b_i - f_i||_2^2
// `b_rows` and `f_rows` are [N, D]; the result is [N]. With `per_element_mean`
// the distance is divided by D.
torch::Tensor log_density(const torch::Tensor& b_rows, const torch::Tensor& f_rows, Family family,
                          bool per_element_mean = false);

// Differentiable N-sample vCLUB estimate
//   (1/N) sum_i [ log q(b_i | f_i) - log q(b_{k_i} | f_i) ]
// with zero-based shuffle indices k_i. Inputs are [N, ...] and flattened per sample.
torch::Tensor vclub(const torch::Tensor& b, const torch::Tensor& f, Family family,
                    std::span<const std::int64_t> shuffle, bool per_element_mean = false);

// Shuffle indices drawn uniformly from {0..n-1} with replacement.
std::vector<std::int64_t> draw_shuffle(std::int64_t n, Rng& rng);

MIEstimate vclub_estimate(const torch::Tensor& b, const torch::Tensor& f, Family family,
                          std::span<const std::int64_t> shuffle);

// I = -(dim / 2) ln(1 - rho^2) for dim independent pairs of unit Gaussians with
// correlation rho.
MIEstimate gaussian_mi_closed_form(double rho, std::int64_t dim = 1);

// ---------------------------------------------------------------------------
// MINE

struct MineConfig {
  std::vector<std::int64_t> hidden_sizes{256, 256};
  std::int64_t train_steps = 2000;
  std::int64_t batch_size = 128;
  double learning_rate = 1e-4;
  double ema_decay = 0.99;
  std::uint64_t seed = 0;
  // Samples used for the held-out evaluation of the final bound.
  std::int64_t eval_samples = 8192;
};

enum class SampleSplit { Train, Holdout };

// Produces a batch of n (x, y) rows; x and y are [n, dx] and [n, dy].
using PairSampler =
    std::function<std::pair<torch::Tensor, torch::Tensor>(std::int64_t n, Rng& rng, SampleSplit)>;

// Trains a statistics network on the Donsker-Varadhan objective
//   E_joint[T] - log E_marginal[exp T]
// using a moving average of the denominator for the gradient, then evaluates the
// objective on held-out draws. Throws NumericalError on overflow.
MIEstimate mine_estimate(const PairSampler& joint, const PairSampler& marginal,
                         const MineConfig& cfg);

// Fixed paired samples (rows of x and y correspond). A fraction of the rows is
// reserved for the held-out evaluation. Marginal draws pick x and y rows
// independently.
class PairedSamples {
 public:
  PairedSamples(torch::Tensor x, torch::Tensor y, double holdout_frac = 0.2);

  PairSampler joint() const;
  PairSampler marginal() const;
  std::int64_t size() const { return x_.size(0); }

 private:
  torch::Tensor x_;
  torch::Tensor y_;
  std::int64_t n_train_;
};

MIEstimate mine_estimate(const torch::Tensor& x, const torch::Tensor& y, const MineConfig& cfg);

// Region statistics used for evaluation-time MI: the pooled, flattened regions.
// Masks are binarized at 0.5 before the split; regions are average-pooled to
// `pooled_size` x `pooled_size`.
struct LayerwiseMI {
  MIEstimate total;
  MIEstimate inv_vis;  // I(b_inv; f_vis)
  MIEstimate vis_inv;  // I(b_vis; f_inv)
};

LayerwiseMI layerwise_mi_eval(const LayerTriplet& samples, const MineConfig& cfg,
                              std::int64_t pooled_size = 8);

}  // namespace ils
