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

#include "skelwatch/features.hpp"

#include <limits>

#include "skelwatch/errors.hpp"

namespace skelwatch {

namespace {

constexpr int kDx[8] = {0, 1, 1, 1, 0, -1, -1, -1};
constexpr int kDy[8] = {-1, -1, 0, 1, 1, 1, 0, -1};

int white_neighbors(const BinaryImage& img, int x, int y) {
    int n = 0;
    for (int k = 0; k < 8; ++k) {
        const int nx = x + kDx[k];
        const int ny = y + kDy[k];
        if (img.in_bounds(nx, ny) && img.get(nx, ny)) ++n;
    }
    return n;
}

} // namespace

SkeletonFeatures classify_points(const BinaryImage& skeleton, const Box& bbox) {
    SkeletonFeatures out;
    out.bbox = bbox;
    bool any = false;
    for (int y = 0; y < skeleton.height(); ++y) {
        for (int x = 0; x < skeleton.width(); ++x) {
            if (!skeleton.get(x, y)) continue;
            any = true;
            const int n = white_neighbors(skeleton, x, y);
            if (n <= 1) {
                out.endpoints.push_back({x, y});
            } else if (n > 2) {
                out.fork_points.push_back({x, y});
            } else {
                out.branch_points.push_back({x, y});
            }
        }
    }
    if (!any) throw EmptySkeleton("classify_points: skeleton has no pixels");
    return out;
}

Box bounding_box(const BinaryImage& mask) {
    Box box{std::numeric_limits<int>::max(), std::numeric_limits<int>::max(),
            std::numeric_limits<int>::min(), std::numeric_limits<int>::min()};
    bool any = false;
    for (int y = 0; y < mask.height(); ++y) {
        for (int x = 0; x < mask.width(); ++x) {
            if (!mask.get(x, y)) continue;
            any = true;
            if (x < box.min_x) box.min_x = x;
            if (y < box.min_y) box.min_y = y;
            if (x > box.max_x) box.max_x = x;
            if (y > box.max_y) box.max_y = y;
        }
    }
    if (!any) throw EmptyMask("bounding_box: mask has no white pixels");
    return box;
}

} // namespace skelwatch
