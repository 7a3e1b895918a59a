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

#ifndef SKELWATCH_FEATURES_HPP
#define SKELWATCH_FEATURES_HPP

#include <vector>

#include "skelwatch/image.hpp"

namespace skelwatch {

/// Skeleton pixels partitioned by their white 8-neighbor count n:
/// endpoint n <= 1, fork point n > 2, branch point n == 2. The three lists
/// are disjoint and together cover every skeleton pixel. bbox is the box of
/// the source foreground component (the silhouette), not of the skeleton:
/// the silhouette's width is what the height/width heuristic measures.
struct SkeletonFeatures {
    std::vector<Point> endpoints;
    std::vector<Point> fork_points;
    std::vector<Point> branch_points;
    Box bbox;
};

/// Classifies every white pixel of a thinned skeleton. An isolated pixel
/// (zero neighbors) counts as an endpoint. Throws EmptySkeleton.
SkeletonFeatures classify_points(const BinaryImage& skeleton, const Box& bbox);

/// Tight box over the white pixels. Throws EmptyMask.
Box bounding_box(const BinaryImage& mask);

} // namespace skelwatch

#endif // SKELWATCH_FEATURES_HPP
