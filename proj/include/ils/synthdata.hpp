#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>
#include <torch/torch.h>

namespace ils {

enum class ShapeFamily { Ellipse, Rectangle, Triangle, Mixed };
enum class FgTexture { Flat, Gradient, Noise };
enum class BgTexture { Gradient, PerlinLike, Patches };

struct SceneSpec {
  std::int64_t img_size = 32;
  ShapeFamily shape_family = ShapeFamily::Mixed;
  FgTexture fg_texture = FgTexture::Gradient;
  BgTexture bg_texture = BgTexture::PerlinLike;
  std::pair<double, double> area_range{0.15, 0.45};
  std::uint64_t seed = 0;

  void validate() const;
  nlohmann::json to_json() const;
  static SceneSpec from_json(const nlohmann::json& j);
};

struct Scene {
  torch::Tensor image;  // [3, H, W] in [-1, 1]
  torch::Tensor mask;   // [1, H, W] in {0, 1}
};

// Draws one object over a cluttered background. Foreground colours come from a
// warm palette and background colours (including distractor blobs) from a cool
// palette, so the two regions share no colours. The mask is the object support
// and its area fraction lies inside spec.area_range.
Scene generate_scene(const SceneSpec& spec, std::mt19937_64& rng);
// Scene `index` of `split` (0 = train, 1 = test); seeds are disjoint across splits.
Scene generate_scene(const SceneSpec& spec, int split, std::int64_t index);

struct SplitInfo {
  std::vector<std::string> stems;
  bool has_masks = true;
};

// On-disk layout:
//   root/{train,test}/images/<stem>.png
//   root/{train,test}/masks/<stem>.png
//   root/manifest.json
struct DatasetManifest {
  std::filesystem::path root;
  std::int64_t img_size = 0;
  std::string spec_hash;
  nlohmann::json spec = nlohmann::json::object();
  std::map<std::string, SplitInfo> splits;
  // Files skipped during ingestion, with the reason.
  std::vector<std::pair<std::string, std::string>> excluded;
  // Set when build_dataset found an up-to-date dataset and wrote nothing.
  bool reused = false;

  std::int64_t count(const std::string& split) const;
  std::int64_t total() const;
  std::filesystem::path image_path(const std::string& split, const std::string& stem) const;
  std::filesystem::path mask_path(const std::string& split, const std::string& stem) const;

  nlohmann::json to_json() const;
  void save() const;
};

// Throws ValidationError when a listed stem lacks its image or (labelled split) mask.
DatasetManifest load_manifest(const std::filesystem::path& root);

DatasetManifest build_dataset(const SceneSpec& spec, std::int64_t n_train, std::int64_t n_test,
                              const std::filesystem::path& out_dir);

struct ImageSet {
  torch::Tensor images;  // [N, 3, H, W] in [-1, 1]
  torch::Tensor masks;   // [N, 1, H, W] in {0, 1}, undefined for unlabelled splits
};

ImageSet load_split(const DatasetManifest& manifest, const std::string& split);

// Writes a labelled set in the dataset layout under `root`/`split`, updating
// (or creating) root/manifest.json.
DatasetManifest write_image_set(const std::filesystem::path& root, const std::string& split,
                                const ImageSet& set, const nlohmann::json& provenance);

enum class CropMode { Center, BBox };

// Square-crops external images from src/images (masks from src/masks when present),
// resizes to `size` (bilinear for images, nearest for masks) and writes them under
// out_dir/`split`. BBox mode reads src/bboxes.txt with records `stem x0 y0 x1 y1`
// (x1, y1 exclusive) and throws ConfigError when it is missing. Unreadable files are
// skipped with a warning and listed in the manifest's exclusion report.
DatasetManifest ingest_external(const std::filesystem::path& src, const std::filesystem::path& out_dir,
                                CropMode crop, std::int64_t size, const std::string& split = "test");

std::string to_string(ShapeFamily s);
std::string to_string(FgTexture t);
std::string to_string(BgTexture t);

}  // namespace ils
