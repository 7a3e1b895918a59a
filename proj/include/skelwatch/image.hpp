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

#ifndef SKELWATCH_IMAGE_HPP
#define SKELWATCH_IMAGE_HPP

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace skelwatch {

/// Coordinate convention used throughout: x is the column index increasing
/// rightward, y is the row index increasing downward, origin at the top-left
/// pixel. Rasters are stored row-major.
struct Point {
    int x = 0;
    int y = 0;

    bool operator==(const Point&) const = default;
};

/// Continuous position, same axis convention as Point.
struct Point2D {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point2D&) const = default;
};

/// Tight axis-aligned pixel box, inclusive on all four edges.
struct Box {
    int min_x = 0;
    int min_y = 0;
    int max_x = 0;
    int max_y = 0;

    int width() const { return max_x - min_x + 1; }
    int height() const { return max_y - min_y + 1; }
    bool contains(Point p) const {
        return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
    }

    bool operator==(const Box&) const = default;
};

/// 8-bit single-channel raster.
class GrayImage {
  public:
    GrayImage(int width, int height, std::uint8_t fill = 0)
        : width_(width), height_(height),
          pixels_(checked_size(width, height), fill) {}

    GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
        : width_(width), height_(height), pixels_(std::move(pixels)) {
        if (pixels_.size() != checked_size(width, height))
            throw std::invalid_argument("GrayImage: pixel count does not match dimensions");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return pixels_.size(); }

    std::uint8_t operator()(int x, int y) const {
        assert(in_bounds(x, y));
        return pixels_[static_cast<std::size_t>(y) * width_ + x];
    }
    std::uint8_t& operator()(int x, int y) {
        assert(in_bounds(x, y));
        return pixels_[static_cast<std::size_t>(y) * width_ + x];
    }

    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width_ && y >= 0 && y < height_;
    }
    bool same_size(const GrayImage& other) const {
        return width_ == other.width_ && height_ == other.height_;
    }

    const std::vector<std::uint8_t>& pixels() const { return pixels_; }
    std::vector<std::uint8_t>& pixels() { return pixels_; }

    bool operator==(const GrayImage&) const = default;

  private:
    static std::size_t checked_size(int width, int height) {
        if (width < 1 || height < 1)
            throw std::invalid_argument("image dimensions must be >= 1");
        return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    }

    int width_;
    int height_;
    std::vector<std::uint8_t> pixels_;
};

/// Boolean raster (true = foreground/white). Stored as one byte per pixel,
/// values restricted to 0/1.
class BinaryImage {
  public:
    BinaryImage(int width, int height, bool fill = false)
        : width_(width), height_(height),
          pixels_(checked_size(width, height), fill ? 1 : 0) {}

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return pixels_.size(); }

    bool get(int x, int y) const {
        assert(in_bounds(x, y));
        return pixels_[static_cast<std::size_t>(y) * width_ + x] != 0;
    }
    void set(int x, int y, bool value) {
        assert(in_bounds(x, y));
        pixels_[static_cast<std::size_t>(y) * width_ + x] = value ? 1 : 0;
    }

    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width_ && y >= 0 && y < height_;
    }
    bool same_size(const BinaryImage& other) const {
        return width_ == other.width_ && height_ == other.height_;
    }

    int count_white() const {
        int n = 0;
        for (std::uint8_t p : pixels_) n += p;
        return n;
    }

    const std::vector<std::uint8_t>& pixels() const { return pixels_; }

    bool operator==(const BinaryImage&) const = default;

  private:
    static std::size_t checked_size(int width, int height) {
        if (width < 1 || height < 1)
            throw std::invalid_argument("image dimensions must be >= 1");
        return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    }

    int width_;
    int height_;
    std::vector<std::uint8_t> pixels_;
};

} // namespace skelwatch

#endif // SKELWATCH_IMAGE_HPP
