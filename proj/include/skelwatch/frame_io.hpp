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

#ifndef SKELWATCH_FRAME_IO_HPP
#define SKELWATCH_FRAME_IO_HPP

#include <string>
#include <vector>

#include "skelwatch/image.hpp"

namespace skelwatch {

/// A background image plus the ordered frames shot against it.
/// nominal_fps is metadata only; it is recorded in reports, never computed with.
struct FrameSequence {
    GrayImage background;
    std::vector<GrayImage> frames;
    int nominal_fps = 10;
};

/// Reads a binary PGM (P5, maxval 255). Header comment lines (#...) are
/// accepted. Throws MissingFile, MalformedHeader, TruncatedPixelData,
/// UnsupportedMaxval.
GrayImage load_gray(const std::string& path);

/// Writes a binary PGM (P5, maxval 255). No comments are emitted, so
/// load_gray(write_gray(img)) == img bit-exactly. Throws IoFailure.
void write_gray(const GrayImage& img, const std::string& path);

/// Reads a mask from the same container: 0 is black, any nonzero byte is white.
BinaryImage load_binary(const std::string& path);

/// Writes a mask as P5 with white = 255, black = 0.
void write_binary(const BinaryImage& img, const std::string& path);

/// Loads the background plus every *.pgm file in frames_dir, ordered
/// lexicographically by filename (zero-pad frame numbers; f10.pgm sorts before
/// f2.pgm). Every frame must match the background's dimensions.
/// Throws EmptySequence, DimensionMismatch.
FrameSequence load_sequence(const std::string& background_path,
                            const std::string& frames_dir);

} // namespace skelwatch

#endif // SKELWATCH_FRAME_IO_HPP
