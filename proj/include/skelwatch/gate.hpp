// Copyright 2026 The skelwatch authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SKELWATCH_GATE_HPP
#define SKELWATCH_GATE_HPP

#include <optional>

#include "skelwatch/image.hpp"

namespace skelwatch {

struct GateConfig {
    /// A frame whose correlation with the background reaches this value is
    /// treated as unchanged.
    double correlation_threshold = 0.95;
    /// Minimum absolute intensity difference for a pixel to count as changed.
    /// 0 means every nonzero difference is foreground.
    int pixel_delta_threshold = 0;
};

/// Pearson correlation coefficient of the two pixel populations, flattened.
///
/// Zero-variance convention: if both images are constant the result is 1.0
/// when the constants are equal and 0.0 otherwise; if exactly one image is
/// constant the result is 0.0. Accumulation is exact (integer moments over
/// all pixels, no sampling).
double correlation(const GrayImage& a, const GrayImage& b);

/// Binary mask of pixels where |frame - background| exceeds the threshold.
BinaryImage diff_image(const GrayImage& background, const GrayImage& frame,
                       const GateConfig& cfg);

/// Returns nullopt when correlation(background, frame) >= the threshold
/// (no change detected, equality included); otherwise the DIFF mask.
std::optional<BinaryImage> gate(const GrayImage& background, const GrayImage& frame,
                                const GateConfig& cfg);

} // namespace skelwatch

#endif // SKELWATCH_GATE_HPP
