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

#include "skelwatch/tracker.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include "skelwatch/errors.hpp"

namespace skelwatch {

const char* to_string(Direction d) {
    switch (d) {
        case Direction::FIRST_FRAME: return "FIRST_FRAME";
        case Direction::NONE: return "NONE";
        case Direction::LEFT: return "LEFT";
        case Direction::RIGHT: return "RIGHT";
    }
    return "NONE";
}

Point2D centre_of_gravity(const SkeletonFeatures& features) {
    std::int64_t sx = 0;
    std::int64_t sy = 0;
    std::int64_t n = 0;
    for (const std::vector<Point>* pts :
         {&features.endpoints, &features.fork_points, &features.branch_points}) {
        for (const Point& p : *pts) {
            sx += p.x;
            sy += p.y;
            ++n;
        }
    }
    if (n == 0) throw EmptySkeleton("centre_of_gravity: no skeleton points");
    return {static_cast<double>(sx) / static_cast<double>(n),
            static_cast<double>(sy) / static_cast<double>(n)};
}

std::pair<TrackerState, MovementEvent> update(const TrackerState& state,
                                              double cgx, double cgy,
                                              const TrackerConfig& cfg) {
    if (!std::isfinite(cgx) || !std::isfinite(cgy))
        throw NonFiniteInput("tracker update: centre of gravity is not finite");

    TrackerState next;
    next.cgx_prev = state.cgx_curr;
    next.cgx_curr = cgx;
    next.frames_seen = state.frames_seen + 1;

    MovementEvent ev;
    ev.cgx_prev = next.cgx_prev;
    ev.cgx_new = cgx;
    ev.cg = {cgx, cgy};

    const bool first = cfg.first_frame_by_count ? state.frames_seen == 0
                                                : next.cgx_prev == 0.0;
    if (first) {
        ev.direction = Direction::FIRST_FRAME;
    } else {
        const double diff = cgx - next.cgx_prev;
        ev.cgx_diff = diff;
        if (diff > cfg.movement_threshold) {
            ev.direction = Direction::RIGHT;
        } else if (diff < -cfg.movement_threshold) {
            ev.direction = Direction::LEFT;
        } else {
            ev.direction = Direction::NONE;
        }
    }
    return {next, ev};
}

} // namespace skelwatch
