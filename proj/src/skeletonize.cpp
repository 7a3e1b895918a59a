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

#include "skelwatch/skeletonize.hpp"

#include <array>
#include <utility>
#include <vector>

#include "skelwatch/errors.hpp"

namespace skelwatch {

namespace {

constexpr std::array<int, 8> kDx = {0, 1, 1, 1, 0, -1, -1, -1};
constexpr std::array<int, 8> kDy = {-1, -1, 0, 1, 1, 1, 0, -1};

int white_neighbors(const BinaryImage& img, int x, int y) {
    int n = 0;
    for (int k = 0; k < 8; ++k) {
        const int nx = x + kDx[k];
        const int ny = y + kDy[k];
        if (img.in_bounds(nx, ny) && img.get(nx, ny)) ++n;
    }
    return n;
}

// Working buffer with a one-pixel zero ring so the subiteration kernels never
// branch on image bounds and shapes touching the border still thin.
struct Padded {
    int w, h; // padded dimensions
    std::vector<std::uint8_t> px;

    explicit Padded(const BinaryImage& src)
        : w(src.width() + 2), h(src.height() + 2),
          px(static_cast<std::size_t>(w) * h, 0) {
        for (int y = 0; y < src.height(); ++y)
            for (int x = 0; x < src.width(); ++x)
                px[static_cast<std::size_t>(y + 1) * w + (x + 1)] = src.get(x, y) ? 1 : 0;
    }

    std::uint8_t at(int x, int y) const { return px[static_cast<std::size_t>(y) * w + x]; }

    BinaryImage unpadded() const {
        BinaryImage out(w - 2, h - 2);
        for (int y = 1; y < h - 1; ++y)
            for (int x = 1; x < w - 1; ++x)
                if (at(x, y)) out.set(x - 1, y - 1, true);
        return out;
    }
};

// One Guo-Hall subiteration; deletions within a subiteration are simultaneous.
// Neighborhood labels follow the usual convention:
//   p9 p2 p3
//   p8 p1 p4
//   p7 p6 p5
int guo_hall_subiteration(Padded& img, int parity) {
    std::vector<std::pair<int, int>> deletions;
    for (int y = 1; y < img.h - 1; ++y) {
        for (int x = 1; x < img.w - 1; ++x) {
            if (!img.at(x, y)) continue;
            const int p2 = img.at(x, y - 1);
            const int p3 = img.at(x + 1, y - 1);
            const int p4 = img.at(x + 1, y);
            const int p5 = img.at(x + 1, y + 1);
            const int p6 = img.at(x, y + 1);
            const int p7 = img.at(x - 1, y + 1);
            const int p8 = img.at(x - 1, y);
            const int p9 = img.at(x - 1, y - 1);

            const int c = ((!p2) & (p3 | p4)) + ((!p4) & (p5 | p6)) +
                          ((!p6) & (p7 | p8)) + ((!p8) & (p9 | p2));
            const int n1 = (p9 | p2) + (p3 | p4) + (p5 | p6) + (p7 | p8);
            const int n2 = (p2 | p3) + (p4 | p5) + (p6 | p7) + (p8 | p9);
            const int n = n1 < n2 ? n1 : n2;
            const int m = parity == 0 ? ((p6 | p7 | (!p9)) & p8)
                                      : ((p2 | p3 | (!p5)) & p4);

            if (c == 1 && n >= 2 && n <= 3 && m == 0)
                deletions.emplace_back(x, y);
        }
    }
    for (auto [x, y] : deletions)
        img.px[static_cast<std::size_t>(y) * img.w + x] = 0;
    return static_cast<int>(deletions.size());
}

// Walks from an endpoint along degree-2 pixels. Returns the branch pixels
// (endpoint included, fork excluded) when the walk reaches a fork point;
// an empty path when it reaches another endpoint (single-branch skeleton)
// or a degenerate configuration.
std::vector<std::pair<int, int>> terminal_branch(const BinaryImage& skel, int ex, int ey) {
    std::vector<std::pair<int, int>> path{{ex, ey}};
    int px = -2, py = -2;
    int cx = ex, cy = ey;
    for (;;) {
        int nx = -1, ny = -1, candidates = 0;
        for (int k = 0; k < 8; ++k) {
            const int tx = cx + kDx[k];
            const int ty = cy + kDy[k];
            if (!skel.in_bounds(tx, ty) || !skel.get(tx, ty)) continue;
            if (tx == px && ty == py) continue;
            nx = tx;
            ny = ty;
            ++candidates;
        }
        if (candidates != 1)
            return {}; // isolated pixel or malformed skeleton
        const int degree = white_neighbors(skel, nx, ny);
        if (degree > 2)
            return path; // fork reached
        if (degree == 1)
            return {}; // other endpoint: the skeleton is a single branch
        px = cx;
        py = cy;
        cx = nx;
        cy = ny;
        path.emplace_back(cx, cy);
    }
}

} // namespace

std::optional<BinaryImage> largest_component(const BinaryImage& mask,
                                             const SkeletonConfig& cfg) {
    const int w = mask.width();
    const int h = mask.height();
    std::vector<int> label(static_cast<std::size_t>(w) * h, -1);

    struct Component {
        int area = 0;
        int min_x, min_y;
    };
    std::vector<Component> components;

    std::vector<std::pair<int, int>> stack;
    for (int sy = 0; sy < h; ++sy) {
        for (int sx = 0; sx < w; ++sx) {
            if (!mask.get(sx, sy) || label[static_cast<std::size_t>(sy) * w + sx] >= 0)
                continue;
            const int id = static_cast<int>(components.size());
            Component comp{0, sx, sy};
            stack.push_back({sx, sy});
            label[static_cast<std::size_t>(sy) * w + sx] = id;
            while (!stack.empty()) {
                auto [x, y] = stack.back();
                stack.pop_back();
                ++comp.area;
                if (x < comp.min_x) comp.min_x = x;
                if (y < comp.min_y) comp.min_y = y;
                for (int k = 0; k < 8; ++k) {
                    const int nx = x + kDx[k];
                    const int ny = y + kDy[k];
                    if (!mask.in_bounds(nx, ny) || !mask.get(nx, ny)) continue;
                    int& l = label[static_cast<std::size_t>(ny) * w + nx];
                    if (l < 0) {
                        l = id;
                        stack.push_back({nx, ny});
                    }
                }
            }
            components.push_back(comp);
        }
    }

    int best = -1;
    for (int i = 0; i < static_cast<int>(components.size()); ++i) {
        if (best < 0) {
            best = i;
            continue;
        }
        const Component& a = components[i];
        const Component& b = components[best];
        if (a.area > b.area ||
            (a.area == b.area &&
             (a.min_y < b.min_y || (a.min_y == b.min_y && a.min_x < b.min_x))))
            best = i;
    }

    if (best < 0 || components[best].area < cfg.min_blob_area)
        return std::nullopt;

    BinaryImage out(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (label[static_cast<std::size_t>(y) * w + x] == best) out.set(x, y, true);
    return out;
}

BinaryImage thin(const BinaryImage& mask, int max_passes) {
    if (mask.count_white() == 0)
        throw EmptyMask("thin: mask has no white pixel");

    if (max_passes <= 0)
        max_passes = mask.width() + mask.height();

    Padded work(mask);
    for (int pass = 0; pass < max_passes; ++pass) {
        int deleted = guo_hall_subiteration(work, 0);
        deleted += guo_hall_subiteration(work, 1);
        if (deleted == 0) break;
    }
    return work.unpadded();
}

BinaryImage prune(const BinaryImage& skeleton, const SkeletonConfig& cfg) {
    BinaryImage out = skeleton;
    if (cfg.prune_length <= 0)
        return out;

    for (;;) {
        std::vector<std::pair<int, int>> endpoints;
        for (int y = 0; y < out.height(); ++y)
            for (int x = 0; x < out.width(); ++x)
                if (out.get(x, y) && white_neighbors(out, x, y) == 1)
                    endpoints.emplace_back(x, y);

        std::vector<std::pair<int, int>> removals;
        for (auto [ex, ey] : endpoints) {
            const auto branch = terminal_branch(out, ex, ey);
            if (!branch.empty() && static_cast<int>(branch.size()) < cfg.prune_length)
                removals.insert(removals.end(), branch.begin(), branch.end());
        }
        if (removals.empty())
            break;
        for (auto [x, y] : removals)
            out.set(x, y, false);
    }
    return out;
}

std::optional<BinaryImage> skeletonize(const BinaryImage& mask, const SkeletonConfig& cfg) {
    auto component = largest_component(mask, cfg);
    if (!component)
        return std::nullopt;
    return prune(thin(*component, cfg.max_thinning_passes), cfg);
}

} // namespace skelwatch
