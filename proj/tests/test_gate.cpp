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
#include <random>

#include <gtest/gtest.h>

#include "skelwatch/errors.hpp"
#include "support/oracles.hpp"

namespace skelwatch {
namespace {

using testing::diff_oracle;
using testing::pearson_oracle;
using testing::random_gray;

GrayImage from_values(int w, int h, std::initializer_list<std::uint8_t> v) {
    return GrayImage(w, h, std::vector<std::uint8_t>(v));
}

TEST(Correlation, SelfCorrelationIsOne) {
    std::mt19937 rng(1);
    const GrayImage img = random_gray(rng, 9, 7);
    EXPECT_NEAR(correlation(img, img), 1.0, 1e-12);
}

TEST(Correlation, InvertedImageIsMinusOne) {
    std::mt19937 rng(2);
    const GrayImage img = random_gray(rng, 9, 7);
    GrayImage inv = img;
    for (auto& p : inv.pixels()) p = static_cast<std::uint8_t>(255 - p);
    EXPECT_NEAR(correlation(img, inv), -1.0, 1e-12);
}

TEST(Correlation, MatchesHandComputedScalarCase) {
    // r of [1,2,3,4] vs [1,2,3,5] is 6.5/sqrt(43.75); frozen before the
    // library existed.
    const GrayImage a = from_values(2, 2, {1, 2, 3, 4});
    const GrayImage b = from_values(2, 2, {1, 2, 3, 5});
    EXPECT_NEAR(correlation(a, b), 0.9827076298239908, 1e-15);
}

TEST(Correlation, IsSymmetric) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const GrayImage a = random_gray(rng, 8, 8);
        const GrayImage b = random_gray(rng, 8, 8);
        EXPECT_NEAR(correlation(a, b), correlation(b, a), 1e-12);
    }
}

TEST(Correlation, InvariantUnderPositiveAffineRescale) {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        const GrayImage a = random_gray(rng, 8, 8);
        const GrayImage b = random_gray(rng, 8, 8, 0, 100);
        GrayImage scaled = b;  // 2*b + 10 stays within [10, 210]
        for (auto& p : scaled.pixels()) p = static_cast<std::uint8_t>(2 * p + 10);
        EXPECT_NEAR(correlation(a, scaled), correlation(a, b), 1e-9);
    }
}

TEST(Correlation, BothConstantEqualIsOne) {
    EXPECT_EQ(correlation(GrayImage(4, 4, std::uint8_t{7}),
                          GrayImage(4, 4, std::uint8_t{7})),
              1.0);
}

TEST(Correlation, BothConstantDifferentIsZero) {
    EXPECT_EQ(correlation(GrayImage(4, 4, std::uint8_t{7}),
                          GrayImage(4, 4, std::uint8_t{8})),
              0.0);
}

TEST(Correlation, OneConstantIsZero) {
    std::mt19937 rng(5);
    const GrayImage img = random_gray(rng, 4, 4);
    EXPECT_EQ(correlation(GrayImage(4, 4, std::uint8_t{50}), img), 0.0);
}

TEST(Correlation, MatchesTextbookOracleOnRandomPairs) {
    std::mt19937 rng(6);
    std::uniform_int_distribution<int> dim(1, 32);
    for (int trial = 0; trial < 200; ++trial) {
        const int w = dim(rng), h = dim(rng);
        const GrayImage a = random_gray(rng, w, h);
        const GrayImage b = random_gray(rng, w, h);
        EXPECT_NEAR(correlation(a, b), static_cast<double>(pearson_oracle(a, b)), 1e-9)
            << "trial " << trial;
    }
}

TEST(Correlation, RejectsMismatchedDimensions) {
    EXPECT_THROW(correlation(GrayImage(2, 2), GrayImage(2, 3)), DimensionMismatch);
}

TEST(DiffImage, IdenticalImagesProduceAllBlack) {
    std::mt19937 rng(7);
    const GrayImage img = random_gray(rng, 6, 6);
    EXPECT_EQ(diff_image(img, img, {}).count_white(), 0);
}

TEST(DiffImage, SinglePixelChangeIsWhiteAloneAtThresholdZero) {
    GrayImage bg(3, 2, std::uint8_t{10});
    GrayImage frame = bg;
    frame(1, 0) = 200;
    const BinaryImage diff = diff_image(bg, frame, {});
    EXPECT_EQ(diff.count_white(), 1);
    EXPECT_TRUE(diff.get(1, 0));
}

TEST(DiffImage, MatchesPerPixelOracleWithThreshold) {
    GateConfig cfg;
    cfg.pixel_delta_threshold = 25;
    std::mt19937 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const GrayImage a = random_gray(rng, 8, 8);
        const GrayImage b = random_gray(rng, 8, 8);
        EXPECT_EQ(diff_image(a, b, cfg), diff_oracle(a, b, 25)) << "trial " << trial;
    }
}

TEST(DiffImage, IsSymmetricInItsImageArguments) {
    std::mt19937 rng(9);
    const GrayImage a = random_gray(rng, 8, 8);
    const GrayImage b = random_gray(rng, 8, 8);
    EXPECT_EQ(diff_image(a, b, {}), diff_image(b, a, {}));
}

TEST(Gate, UnchangedFrameIsAbsent) {
    std::mt19937 rng(10);
    const GrayImage img = random_gray(rng, 8, 8);
    EXPECT_FALSE(gate(img, img, {}).has_value());
}

TEST(Gate, HalfReplacedFrameOpensWithExactMask) {
    // Constant background vs. half-painted frame: one side constant, so the
    // correlation collapses to 0 and the gate must open.
    GrayImage bg(8, 4, std::uint8_t{50});
    GrayImage frame = bg;
    for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 4; ++x) frame(x, y) = 200;

    const auto diff = gate(bg, frame, {});
    ASSERT_TRUE(diff.has_value());
    for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 8; ++x)
            EXPECT_EQ(diff->get(x, y), x < 4) << "(" << x << "," << y << ")";
}

TEST(Gate, ThresholdOneOpensOnAnySinglePixelChange) {
    std::mt19937 rng(11);
    GateConfig cfg;
    cfg.correlation_threshold = 1.0;
    const GrayImage bg = random_gray(rng, 8, 8);
    GrayImage frame = bg;
    frame(3, 3) = static_cast<std::uint8_t>(frame(3, 3) ^ 0x40);
    EXPECT_TRUE(gate(bg, frame, cfg).has_value());
}

TEST(Gate, AbsentExactlyWhenCorrelationReachesThreshold) {
    std::mt19937 rng(12);
    GateConfig cfg;
    for (int trial = 0; trial < 100; ++trial) {
        const GrayImage a = random_gray(rng, 8, 8);
        GrayImage b = a;
        // Perturb a random number of pixels to sweep correlation values.
        std::uniform_int_distribution<int> count(0, 64);
        std::uniform_int_distribution<int> coord(0, 7);
        std::uniform_int_distribution<int> level(0, 255);
        const int changes = count(rng);
        for (int i = 0; i < changes; ++i)
            b(coord(rng), coord(rng)) = static_cast<std::uint8_t>(level(rng));

        const bool absent = !gate(a, b, cfg).has_value();
        EXPECT_EQ(absent, correlation(a, b) >= cfg.correlation_threshold)
            << "trial " << trial;
    }
}

} // namespace
} // namespace skelwatch
