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

#ifndef SKELWATCH_SKELETONIZE_HPP
#define SKELWATCH_SKELETONIZE_HPP

#include <optional>

#include "skelwatch/image.hpp"

namespace skelwatch {

struct SkeletonConfig {
    /// Components smaller than this are discarded as noise.
    int min_blob_area = 64;
    /// Terminal skeleton branches shorter than this are pruned away.
    int prune_length = 10;
    /// Safety cap on thinning passes; 0 means width + height of the mask.
    int max_thinning_passes = 0;
};

/// Extracts the largest 8-connected white component as a mask of identical
/// dimensions. Ties on area are broken by the smallest bounding-box corner in
/// (y, x) lexicographic order. Returns nullopt when no component reaches
/// cfg.min_blob_area.
std::optional<BinaryImage> largest_component(const BinaryImage& mask,
                                             const SkeletonConfig& cfg);

/// Two-subiteration morphological thinning (Guo-Hall) on 8-connectivity.
/// The output is a subset of the input, preserves the number of 8-connected
/// components, and is a fixed point: thin(thin(m)) == thin(m). The result is
/// one pixel wide except at crossings. max_passes caps the outer iteration
/// (0 = width + height). Throws EmptyMask when the input has no white pixel.
BinaryImage thin(const BinaryImage& mask, int max_passes = 0);

/// Removes every terminal branch (endpoint to nearest fork point, fork
/// excluded) shorter than cfg.prune_length, iterating until none remains.
/// A skeleton without fork points is never touched, so a single branch
/// cannot be pruned away entirely.
BinaryImage prune(const BinaryImage& skeleton, const SkeletonConfig& cfg);

/// largest_component -> thin -> prune. Nullopt when no component survives
/// the area filter.
std::optional<BinaryImage> skeletonize(const BinaryImage& mask, const SkeletonConfig& cfg);

} // namespace skelwatch

#endif // SKELWATCH_SKELETONIZE_HPP
