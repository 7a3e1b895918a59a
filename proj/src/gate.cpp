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

#include "skelwatch/gate.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "skelwatch/errors.hpp"

namespace skelwatch {

namespace {

void require_same_size(const GrayImage& a, const GrayImage& b) {
    if (!a.same_size(b))
        throw DimensionMismatch("images are " + std::to_string(a.width()) + "x" +
                                std::to_string(a.height()) + " vs " +
                                std::to_string(b.width()) + "x" +
                                std::to_string(b.height()));
}

} // namespace

double correlation(const GrayImage& a, const GrayImage& b) {
    require_same_size(a, b);

    // Integer moments are exact for 8-bit pixels; the division is the only
    // floating-point step.
    const std::size_t n = a.size();
    unsigned long long sa = 0, sb = 0, saa = 0, sbb = 0, sab = 0;
    const auto& pa = a.pixels();
    const auto& pb = b.pixels();
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned long long va = pa[i];
        const unsigned long long vb = pb[i];
        sa += va;
        sb += vb;
        saa += va * va;
        sbb += vb * vb;
        sab += va * vb;
    }

    using Wide = __int128;
    const Wide count = static_cast<Wide>(n);
    const Wide var_a = count * static_cast<Wide>(saa) - static_cast<Wide>(sa) * static_cast<Wide>(sa);
    const Wide var_b = count * static_cast<Wide>(sbb) - static_cast<Wide>(sb) * static_cast<Wide>(sb);

    if (var_a == 0 && var_b == 0)
        return sa == sb ? 1.0 : 0.0;
    if (var_a == 0 || var_b == 0)
        return 0.0;

    const Wide cov = count * static_cast<Wide>(sab) - static_cast<Wide>(sa) * static_cast<Wide>(sb);
    return static_cast<double>(cov) /
           std::sqrt(static_cast<double>(var_a) * static_cast<double>(var_b));
}

BinaryImage diff_image(const GrayImage& background, const GrayImage& frame,
                       const GateConfig& cfg) {
    require_same_size(background, frame);

    BinaryImage mask(background.width(), background.height());
    for (int y = 0; y < background.height(); ++y)
        for (int x = 0; x < background.width(); ++x)
            mask.set(x, y, std::abs(int(frame(x, y)) - int(background(x, y))) >
                               cfg.pixel_delta_threshold);
    return mask;
}

std::optional<BinaryImage> gate(const GrayImage& background, const GrayImage& frame,
                                const GateConfig& cfg) {
    if (correlation(background, frame) >= cfg.correlation_threshold)
        return std::nullopt;
    return diff_image(background, frame, cfg);
}

} // namespace skelwatch
