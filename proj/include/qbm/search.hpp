// Copyright 2026 The qblockmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "qbm/errors.hpp"
#include "qbm/image.hpp"

namespace qbm {

/// Winning offset of a block search plus how much work it took.
struct MatchResult {
    int offset_x = 0;
    int offset_y = 0;
    double distance = 0.0;
    long evaluations = 0;
};

/// Dissimilarity between two equally sized flattened blocks.
using DistanceFn = std::function<double(const std::vector<int>&, const std::vector<int>&)>;

/// Ground-truth oracle: sqrt(sum of squared pixel differences).
inline double classical_euclidean_distance(const std::vector<int>& v1,
                                           const std::vector<int>& v2) {
    if (v1.size() != v2.size()) throw ShapeError("vectors must have equal lengths");
    double sq = 0.0;
    for (std::size_t i = 0; i < v1.size(); ++i) {
        const double d = static_cast<double>(v1[i]) - static_cast<double>(v2[i]);
        sq += d * d;
    }
    return std::sqrt(sq);
}

namespace detail {

/// Full search with an already-extracted reference block. Candidates are the
/// offsets (ox, oy) in [-k, k]^2 for which the n x n block at
/// (cx + ox, cy + oy) lies inside the target; ties break in raster order
/// (smallest oy, then ox).
inline MatchResult full_search_block(const std::vector<int>& ref, int n, const GrayImage& target,
                                     int cx, int cy, int k, const DistanceFn& distance_fn) {
    if (k < 0) throw ArgumentError("search radius must be >= 0");
    MatchResult best;
    bool found = false;
    for (int oy = -k; oy <= k; ++oy) {
        for (int ox = -k; ox <= k; ++ox) {
            const int x = cx + ox, y = cy + oy;
            if (x < 0 || y < 0 || x + n > target.width || y + n > target.height) continue;
            const BlockVector candidate = extract_block(target, x, y, n);
            const double d = distance_fn(ref, candidate.values);
            best.evaluations++;
            if (!found || d < best.distance) {
                found = true;
                best.distance = d;
                best.offset_x = ox;
                best.offset_y = oy;
            }
        }
    }
    if (!found) throw SearchError("no candidate block fits inside the target image");
    return best;
}

inline GrayImage block_as_image(const std::vector<int>& values, int n, int bit_depth) {
    GrayImage img;
    img.width = n;
    img.height = n;
    img.bit_depth = bit_depth;
    img.pixels = values;
    return img;
}

/// Crops to even dimensions (at most one row/column) so the half-resolution
/// level always exists.
inline GrayImage crop_even(const GrayImage& image) {
    const int w = image.width & ~1, h = image.height & ~1;
    if (w == image.width && h == image.height) return image;
    GrayImage out;
    out.width = w;
    out.height = h;
    out.bit_depth = image.bit_depth;
    out.pixels.resize(static_cast<std::size_t>(w) * h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) out.set(x, y, image.at(x, y));
    }
    return out;
}

}  // namespace detail

/// Scores every offset in the [-k, k]^2 window and returns the global
/// minimum of `distance_fn`.
inline MatchResult full_search(const GrayImage& source, int x, int y, int n,
                               const GrayImage& target, int k, const DistanceFn& distance_fn) {
    const BlockVector ref = extract_block(source, x, y, n);
    return detail::full_search_block(ref.values, n, target, x, y, k, distance_fn);
}

/// Two-level coarse-to-fine search. Level 1 halves the block and the target
/// (n -> n/2) and scans offsets up to ceil(k/2); level 2 rescans at full
/// resolution within +/-1 of twice the coarse winner, clipped to [-k-1,k+1].
/// Evaluations count both levels.
inline MatchResult hierarchical_search(const GrayImage& source, int x, int y, int n,
                                       const GrayImage& target, int k,
                                       const DistanceFn& distance_fn) {
    if (n % 2 != 0) throw ArgumentError("hierarchical search needs an even block size");
    if (k < 1) throw ArgumentError("hierarchical search needs k >= 1");

    const BlockVector ref = extract_block(source, x, y, n);
    const GrayImage ref_coarse =
        downsample(detail::block_as_image(ref.values, n, source.bit_depth), 2);
    const GrayImage target_coarse = downsample(detail::crop_even(target), 2);

    const int k_coarse = (k + 1) / 2;
    const MatchResult coarse =
        detail::full_search_block(ref_coarse.pixels, n / 2, target_coarse, x / 2, y / 2, k_coarse,
                                  distance_fn);

    MatchResult best;
    best.evaluations = coarse.evaluations;
    bool found = false;
    for (int oy = 2 * coarse.offset_y - 1; oy <= 2 * coarse.offset_y + 1; ++oy) {
        for (int ox = 2 * coarse.offset_x - 1; ox <= 2 * coarse.offset_x + 1; ++ox) {
            if (ox < -k - 1 || ox > k + 1 || oy < -k - 1 || oy > k + 1) continue;
            const int fx = x + ox, fy = y + oy;
            if (fx < 0 || fy < 0 || fx + n > target.width || fy + n > target.height) continue;
            const BlockVector candidate = extract_block(target, fx, fy, n);
            const double d = distance_fn(ref.values, candidate.values);
            best.evaluations++;
            if (!found || d < best.distance) {
                found = true;
                best.distance = d;
                best.offset_x = ox;
                best.offset_y = oy;
            }
        }
    }
    if (!found) throw SearchError("no fine-level candidate fits inside the target image");
    return best;
}

}  // namespace qbm
