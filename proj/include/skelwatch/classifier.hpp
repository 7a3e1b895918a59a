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

#ifndef SKELWATCH_CLASSIFIER_HPP
#define SKELWATCH_CLASSIFIER_HPP

#include "skelwatch/features.hpp"

namespace skelwatch {

/// Two-cue human classifier: a silhouette height/width ratio band and a
/// skeleton fork-count band, each contributing a fixed weight when its
/// test passes. Defaults accept ratios in [1.8, 4.5] and fork counts in
/// [2, 8]; a standing person typically scores 1.4, passing a threshold
/// of 1.0 on the ratio cue alone.
struct ClassifierConfig {
    double ratio_min = 1.8;
    double ratio_max = 4.5;
    int fork_min = 2;
    int fork_max = 8;
    double ratio_weight = 1.0;
    double fork_weight = 0.4;
    double human_threshold = 1.0;
};

struct Verdict {
    double ratio = 0.0;     // silhouette height / width
    int fork_count = 0;     // |fork_points|
    bool ratio_ok = false;  // ratio_min <= ratio <= ratio_max
    bool forks_ok = false;  // fork_min <= fork_count <= fork_max
    double final_score = 0.0;
    bool is_human = false;  // final_score >= human_threshold
};

/// Scores skeleton features against the two cues. Both band tests are
/// inclusive at their edges. Throws ZeroWidthBox when the silhouette box
/// has zero width.
Verdict score(const SkeletonFeatures& features, const ClassifierConfig& cfg);

} // namespace skelwatch

#endif // SKELWATCH_CLASSIFIER_HPP
