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

#include "skelwatch/frame_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>

#include "skelwatch/errors.hpp"

namespace skelwatch {

namespace {

constexpr long long kMaxDimension = 1 << 20;

bool is_pnm_space(int c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Reads the next unsigned decimal token, skipping whitespace and '#' comments
// (a comment runs to the end of its line).
long long read_header_number(std::istream& in, const std::string& path) {
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (is_pnm_space(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    if (c == EOF || c < '0' || c > '9')
        throw MalformedHeader(path + ": expected a number in PGM header");
    long long value = 0;
    while (c >= '0' && c <= '9') {
        value = value * 10 + (c - '0');
        if (value > kMaxDimension * kMaxDimension)
            throw MalformedHeader(path + ": header number out of range");
        c = in.get();
    }
    if (c != EOF) in.unget();
    return value;
}

} // namespace

GrayImage load_gray(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw MissingFile(path + ": cannot open file");

    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (in.gcount() != 2 || magic[0] != 'P' || magic[1] != '5')
        throw MalformedHeader(path + ": not a binary PGM (missing P5 magic)");

    const long long width = read_header_number(in, path);
    const long long height = read_header_number(in, path);
    const long long maxval = read_header_number(in, path);
    if (width < 1 || height < 1 || width > kMaxDimension || height > kMaxDimension)
        throw MalformedHeader(path + ": bad dimensions " + std::to_string(width) +
                              "x" + std::to_string(height));
    if (maxval != 255)
        throw UnsupportedMaxval(path + ": maxval " + std::to_string(maxval) +
                                " (only 255 is supported)");

    // Exactly one whitespace byte separates the header from the payload.
    const int sep = in.get();
    if (sep == EOF || !is_pnm_space(sep))
        throw MalformedHeader(path + ": missing whitespace after maxval");

    std::vector<std::uint8_t> pixels(static_cast<std::size_t>(width * height));
    in.read(reinterpret_cast<char*>(pixels.data()),
            static_cast<std::streamsize>(pixels.size()));
    if (static_cast<std::size_t>(in.gcount()) != pixels.size())
        throw TruncatedPixelData(path + ": expected " + std::to_string(pixels.size()) +
                                 " payload bytes, got " + std::to_string(in.gcount()));

    return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

void write_gray(const GrayImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoFailure(path + ": cannot open file for writing");
    out << "P5\n" << img.width() << " " << img.height() << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels().data()),
              static_cast<std::streamsize>(img.size()));
    out.flush();
    if (!out)
        throw IoFailure(path + ": write failed");
}

BinaryImage load_binary(const std::string& path) {
    const GrayImage gray = load_gray(path);
    BinaryImage mask(gray.width(), gray.height());
    for (int y = 0; y < gray.height(); ++y)
        for (int x = 0; x < gray.width(); ++x)
            mask.set(x, y, gray(x, y) != 0);
    return mask;
}

void write_binary(const BinaryImage& img, const std::string& path) {
    GrayImage gray(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            gray(x, y) = img.get(x, y) ? 255 : 0;
    write_gray(gray, path);
}

FrameSequence load_sequence(const std::string& background_path,
                            const std::string& frames_dir) {
    namespace fs = std::filesystem;

    GrayImage background = load_gray(background_path);

    std::vector<std::string> names;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(frames_dir, ec)) {
        if (entry.is_regular_file() && entry.path().extension() == ".pgm")
            names.push_back(entry.path().filename().string());
    }
    if (ec)
        throw MissingFile(frames_dir + ": cannot read directory (" + ec.message() + ")");
    if (names.empty())
        throw EmptySequence(frames_dir + ": no .pgm frame files found");

    std::sort(names.begin(), names.end());

    std::vector<GrayImage> frames;
    frames.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        GrayImage frame = load_gray((fs::path(frames_dir) / names[i]).string());
        if (!frame.same_size(background))
            throw DimensionMismatch("frame " + std::to_string(i) + " (" + names[i] + "): " +
                                    std::to_string(frame.width()) + "x" +
                                    std::to_string(frame.height()) + " does not match background " +
                                    std::to_string(background.width()) + "x" +
                                    std::to_string(background.height()));
        frames.push_back(std::move(frame));
    }

    return FrameSequence{std::move(background), std::move(frames), 10};
}

} // namespace skelwatch
