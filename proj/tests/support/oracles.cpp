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

#include "support/oracles.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <vector>

namespace skelwatch::testing {

long double pearson_oracle(const GrayImage& a, const GrayImage& b) {
    const std::size_t n = a.size();
    long double ma = 0, mb = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += a.pixels()[i];
        mb += b.pixels()[i];
    }
    ma /= n;
    mb /= n;
    long double cov = 0, va = 0, vb = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const long double da = a.pixels()[i] - ma;
        const long double db = b.pixels()[i] - mb;
        cov += da * db;
        va += da * da;
        vb += db * db;
    }
    if (va == 0 && vb == 0) return a.pixels() == b.pixels() ? 1.0L : 0.0L;
    if (va == 0 || vb == 0) return 0.0L;
    return cov / std::sqrt(va * vb);
}

namespace {

int uf_find(std::vector<int>& parent, int i) {
    while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    return i;
}

void uf_union(std::vector<int>& parent, int a, int b) {
    parent[uf_find(parent, a)] = uf_find(parent, b);
}

} // namespace

int component_count_oracle(const BinaryImage& mask) {
    const int w = mask.width();
    const int h = mask.height();
    std::vector<int> parent(static_cast<std::size_t>(w) * h);
    std::iota(parent.begin(), parent.end(), 0);

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!mask.get(x, y)) continue;
            // Half the neighborhood suffices: each pair is visited once.
            const int dx[4] = {1, -1, 0, 1};
            const int dy[4] = {0, 1, 1, 1};
            for (int k = 0; k < 4; ++k) {
                const int nx = x + dx[k];
                const int ny = y + dy[k];
                if (mask.in_bounds(nx, ny) && mask.get(nx, ny))
                    uf_union(parent, y * w + x, ny * w + nx);
            }
        }
    }

    int count = 0;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (mask.get(x, y) && uf_find(parent, y * w + x) == y * w + x) ++count;
    return count;
}

std::pair<long double, long double> mean_oracle(const BinaryImage& mask) {
    long double sx = 0, sy = 0, n = 0;
    for (int y = 0; y < mask.height(); ++y) {
        for (int x = 0; x < mask.width(); ++x) {
            if (!mask.get(x, y)) continue;
            sx += x;
            sy += y;
            n += 1;
        }
    }
    return {sx / n, sy / n};
}

BinaryImage diff_oracle(const GrayImage& background, const GrayImage& frame,
                        int threshold) {
    BinaryImage out(background.width(), background.height());
    for (int y = 0; y < background.height(); ++y)
        for (int x = 0; x < background.width(); ++x)
            out.set(x, y, std::abs(static_cast<int>(frame(x, y)) -
                                   static_cast<int>(background(x, y))) > threshold);
    return out;
}

BinaryImage random_blob(std::mt19937& rng, int width, int height) {
    BinaryImage out(width, height);
    std::uniform_int_distribution<int> cx(width / 4, 3 * width / 4 - 1);
    std::uniform_int_distribution<int> cy(height / 4, 3 * height / 4 - 1);
    std::uniform_int_distribution<int> extent(2, std::max(2, width / 4));
    std::uniform_int_distribution<int> n_shapes(2, 5);
    std::uniform_int_distribution<int> coin(0, 1);

    const int core_x = cx(rng);
    const int core_y = cy(rng);
    const int shapes = n_shapes(rng);
    for (int s = 0; s < shapes; ++s) {
        // Anchor each shape near the core so the union usually stays connected.
        const int ax = s == 0 ? core_x : (core_x + cx(rng)) / 2;
        const int ay = s == 0 ? core_y : (core_y + cy(rng)) / 2;
        if (coin(rng)) {
            const int rw = extent(rng), rh = extent(rng);
            for (int y = ay - rh; y <= ay + rh; ++y)
                for (int x = ax - rw; x <= ax + rw; ++x)
                    if (out.in_bounds(x, y)) out.set(x, y, true);
        } else {
            const int r = extent(rng);
            for (int y = ay - r; y <= ay + r; ++y)
                for (int x = ax - r; x <= ax + r; ++x)
                    if (out.in_bounds(x, y) &&
                        (x - ax) * (x - ax) + (y - ay) * (y - ay) <= r * r)
                        out.set(x, y, true);
        }
    }
    return out;
}

GrayImage random_gray(std::mt19937& rng, int width, int height, int lo, int hi) {
    GrayImage out(width, height);
    std::uniform_int_distribution<int> level(lo, hi);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            out(x, y) = static_cast<std::uint8_t>(level(rng));
    return out;
}

} // namespace skelwatch::testing
