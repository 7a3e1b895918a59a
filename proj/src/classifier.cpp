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

#include "skelwatch/classifier.hpp"

#include <cstddef>

#include "skelwatch/errors.hpp"

namespace skelwatch {

Verdict score(const SkeletonFeatures& features, const ClassifierConfig& cfg) {
    const int w = features.bbox.width();
    const int h = features.bbox.height();
    if (w <= 0) throw ZeroWidthBox("score: silhouette box has zero width");

    Verdict v;
    v.ratio = static_cast<double>(h) / static_cast<double>(w);
    v.fork_count = static_cast<int>(features.fork_points.size());
    v.ratio_ok = v.ratio >= cfg.ratio_min && v.ratio <= cfg.ratio_max;
    v.forks_ok = v.fork_count >= cfg.fork_min && v.fork_count <= cfg.fork_max;
    v.final_score = (v.ratio_ok ? cfg.ratio_weight : 0.0) +
                    (v.forks_ok ? cfg.fork_weight : 0.0);
    v.is_human = v.final_score >= cfg.human_threshold;
    return v;
}

} // namespace skelwatch
