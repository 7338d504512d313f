#pragma once

#include <cstdint>
#include <vector>

#include "ils/image_io.hpp"
#include "ils/layersynth.hpp"

namespace ils {

// Four rows (background, foreground, composed image, mask as grayscale) by k
// columns, one column per sample, separated by `pad` white pixels.
Raster render_layer_grid(const LayerTriplet& layers, std::int64_t pad = 2);

// Minimal scatter plot: framed axes with tick marks and one filled marker per
// point. Axis ranges cover the data with a 10% margin.
Raster render_scatter(const std::vector<double>& x, const std::vector<double>& y,
                      std::int64_t width = 320, std::int64_t height = 240);

}  // namespace ils
