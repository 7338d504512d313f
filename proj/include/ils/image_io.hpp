#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include <torch/torch.h>

namespace ils {

// 8-bit raster, interleaved channels (1 = gray, 3 = RGB, 4 = RGBA).
struct Raster {
  std::int64_t width = 0;
  std::int64_t height = 0;
  int channels = 0;
  std::vector<std::uint8_t> pixels;

  std::uint8_t& at(std::int64_t x, std::int64_t y, int c) {
    return pixels[static_cast<std::size_t>((y * width + x) * channels + c)];
  }
  std::uint8_t at(std::int64_t x, std::int64_t y, int c) const {
    return pixels[static_cast<std::size_t>((y * width + x) * channels + c)];
  }
};

// PNG (8-bit gray/RGB/RGBA, palette expanded) and binary PGM/PPM.
Raster read_image(const std::filesystem::path& path);
// Always PNG. Written to a temporary sibling, then renamed.
void write_png(const std::filesystem::path& path, const Raster& raster);

// [C, H, W] float in [-1, 1] <-> 8-bit raster; value v maps to round((v + 1) * 127.5).
Raster tensor_to_raster(const torch::Tensor& chw);
torch::Tensor raster_to_tensor(const Raster& raster);  // [C, H, W] in [-1, 1]

// Binary masks: [1, H, W] in {0, 1} <-> gray 0 / 255 (>= 128 reads as 1).
Raster mask_to_raster(const torch::Tensor& mask);
torch::Tensor raster_to_mask(const Raster& raster);

// Geometric helpers used by dataset ingestion.
Raster crop(const Raster& src, std::int64_t x0, std::int64_t y0, std::int64_t w, std::int64_t h);
Raster resize_bilinear(const Raster& src, std::int64_t w, std::int64_t h);
Raster resize_nearest(const Raster& src, std::int64_t w, std::int64_t h);
Raster to_rgb(const Raster& src);
Raster to_gray(const Raster& src);

}  // namespace ils
