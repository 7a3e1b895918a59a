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

#ifndef SKELWATCH_SYNTHETIC_HPP
#define SKELWATCH_SYNTHETIC_HPP

#include <string>

#include "skelwatch/frame_io.hpp"

namespace skelwatch {

/// Test-sequence flavors: a walking stick figure stepping right or left,
/// the same figure standing still, or a wide flat box that should never
/// be classified as a person.
enum class SyntheticKind { right_walk, left_walk, static_pose, non_human };

SyntheticKind synthetic_kind_from_string(const std::string& name);

/// Renders a uniform-gray background plus n_frames frames containing the
/// silhouette translated by k*step pixels horizontally on frame k (0-based).
/// right_walk forces step positive and left_walk negative; static_pose
/// ignores step. The figure is centred over its whole travel. Throws
/// SilhouetteOutOfBounds when any frame would clip the silhouette.
///
/// The stick figure (28x78 px) is shaped so its pruned skeleton keeps head,
/// arm, and leg branches: fork count lands in [2, 8] and the silhouette
/// height/width ratio is ~2.8, so the default classifier scores it 1.4.
/// The non_human box is 40x12 (ratio 0.3): both heuristics miss.
FrameSequence generate_synthetic(SyntheticKind kind, int n_frames, int step,
                                 int width, int height);

/// Writes background.pgm plus frames/frame_<k>.pgm (3-digit k, 0-based)
/// under dir, creating directories as needed.
void write_sequence(const FrameSequence& seq, const std::string& dir);

} // namespace skelwatch

#endif // SKELWATCH_SYNTHETIC_HPP
