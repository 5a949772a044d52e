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

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qbm/encoding.hpp"
#include "qbm/errors.hpp"
#include "qbm/rng.hpp"

namespace qbm {

/// Row-major grayscale image, 8-bit (0..255) or 4-bit (0..15).
struct GrayImage {
    int width = 0;
    int height = 0;
    int bit_depth = 8;
    std::vector<int> pixels;

    int max_value() const { return (1 << bit_depth) - 1; }
    int at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
    void set(int x, int y, int v) { pixels[static_cast<std::size_t>(y) * width + x] = v; }
    bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
};

namespace detail {

// Rounding convention for the whole pipeline: half away from zero is never
// needed (values are non-negative at the rounding points), so plain half-up.
inline int round_half_up(double v) { return static_cast<int>(std::floor(v + 0.5)); }

inline int clamp_pixel(int v, int max_value) {
    if (v < 0) return 0;
    if (v > max_value) return max_value;
    return v;
}

/// Reads one whitespace-delimited header token, skipping '#' comments.
inline std::string next_pgm_token(std::istream& in, const std::string& path) {
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    if (c == EOF) throw FormatError(path + ": truncated PGM header");
    std::string token;
    while (c != EOF && !std::isspace(c)) {
        token.push_back(static_cast<char>(c));
        c = in.get();
    }
    return token;
}

inline int parse_pgm_int(const std::string& token, const std::string& path) {
    if (token.empty()) throw FormatError(path + ": empty PGM header field");
    for (char ch : token) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw FormatError(path + ": non-numeric PGM header field '" + token + "'");
        }
    }
    try {
        return std::stoi(token);
    } catch (const std::exception&) {
        throw FormatError(path + ": PGM header field out of range");
    }
}

}  // namespace detail

/// Loads a P2 (ASCII) or P5 (binary) PGM with maxval 255.
inline GrayImage load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError(path + ": cannot open file");
    const std::string magic = detail::next_pgm_token(in, path);
    if (magic != "P5" && magic != "P2") {
        throw FormatError(path + ": unsupported PGM magic '" + magic + "'");
    }
    GrayImage image;
    image.width = detail::parse_pgm_int(detail::next_pgm_token(in, path), path);
    image.height = detail::parse_pgm_int(detail::next_pgm_token(in, path), path);
    const int maxval = detail::parse_pgm_int(detail::next_pgm_token(in, path), path);
    if (image.width < 1 || image.height < 1) throw FormatError(path + ": bad PGM dimensions");
    if (maxval != 255) throw FormatError(path + ": only maxval 255 is supported");
    image.bit_depth = 8;
    const std::size_t count = static_cast<std::size_t>(image.width) * image.height;
    image.pixels.resize(count);
    if (magic == "P5") {
        // Header ends with exactly one whitespace byte (already consumed by
        // the tokenizer's trailing isspace read).
        std::vector<unsigned char> raw(count);
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(count));
        if (static_cast<std::size_t>(in.gcount()) != count) {
            throw FormatError(path + ": truncated PGM pixel data");
        }
        for (std::size_t i = 0; i < count; ++i) image.pixels[i] = raw[i];
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const int v = detail::parse_pgm_int(detail::next_pgm_token(in, path), path);
            if (v > maxval) throw FormatError(path + ": pixel exceeds maxval");
            image.pixels[i] = v;
        }
    }
    return image;
}

/// Writes a PGM (binary P5 by default, ASCII P2 otherwise), maxval 255.
/// 4-bit images keep their 0..15 values.
inline void save_pgm(const GrayImage& image, const std::string& path, bool binary = true) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError(path + ": cannot open file for writing");
    out << (binary ? "P5" : "P2") << "\n" << image.width << " " << image.height << "\n255\n";
    if (binary) {
        std::vector<unsigned char> raw(image.pixels.size());
        for (std::size_t i = 0; i < raw.size(); ++i) {
            raw[i] = static_cast<unsigned char>(detail::clamp_pixel(image.pixels[i], 255));
        }
        out.write(reinterpret_cast<const char*>(raw.data()),
                  static_cast<std::streamsize>(raw.size()));
    } else {
        for (int y = 0; y < image.height; ++y) {
            for (int x = 0; x < image.width; ++x) {
                out << image.at(x, y) << (x + 1 == image.width ? "" : " ");
            }
            out << "\n";
        }
    }
    if (!out) throw FormatError(path + ": write failed");
}

/// pixel -> round(pixel + N(mu, sigma^2)), clamped to [0, 255].
inline GrayImage add_gaussian_noise(const GrayImage& image, double mu, double sigma,
                                    std::uint64_t seed) {
    if (image.bit_depth != 8) throw ArgumentError("Gaussian contamination expects an 8-bit image");
    if (sigma < 0.0) throw ArgumentError("sigma must be non-negative");
    GrayImage out = image;
    if (sigma == 0.0 && mu == 0.0) return out;
    Rng rng(seed);
    for (int& p : out.pixels) {
        p = detail::clamp_pixel(detail::round_half_up(p + rng.gaussian(mu, sigma)), 255);
    }
    return out;
}

/// Block-mean reduction by an integer factor (512x512 -> 64x64 at factor 8).
inline GrayImage downsample(const GrayImage& image, int factor) {
    if (factor < 1) throw ArgumentError("downsample factor must be >= 1");
    if (image.width % factor != 0 || image.height % factor != 0) {
        throw ShapeError("image dimensions not divisible by downsample factor");
    }
    GrayImage out;
    out.width = image.width / factor;
    out.height = image.height / factor;
    out.bit_depth = image.bit_depth;
    out.pixels.resize(static_cast<std::size_t>(out.width) * out.height);
    const double area = static_cast<double>(factor) * factor;
    for (int y = 0; y < out.height; ++y) {
        for (int x = 0; x < out.width; ++x) {
            long sum = 0;
            for (int dy = 0; dy < factor; ++dy) {
                for (int dx = 0; dx < factor; ++dx) {
                    sum += image.at(x * factor + dx, y * factor + dy);
                }
            }
            out.set(x, y, detail::round_half_up(static_cast<double>(sum) / area));
        }
    }
    return out;
}

/// 8-bit -> 4-bit grayscale: pixel' = floor(pixel / 16).
inline GrayImage reduce_bit_depth(const GrayImage& image) {
    if (image.bit_depth != 8) throw ArgumentError("image is already 4-bit");
    GrayImage out = image;
    out.bit_depth = 4;
    for (int& p : out.pixels) p /= 16;
    return out;
}

/// 3x3 binomial smoothing [1 2 1; 2 4 2; 1 2 1]/16 with replicated edges.
inline GrayImage gaussian_smooth(const GrayImage& image) {
    static const int kernel[3][3] = {{1, 2, 1}, {2, 4, 2}, {1, 2, 1}};
    GrayImage out = image;
    for (int y = 0; y < image.height; ++y) {
        for (int x = 0; x < image.width; ++x) {
            int acc = 0;
            for (int ky = -1; ky <= 1; ++ky) {
                for (int kx = -1; kx <= 1; ++kx) {
                    int sx = x + kx, sy = y + ky;
                    if (sx < 0) sx = 0;
                    if (sx >= image.width) sx = image.width - 1;
                    if (sy < 0) sy = 0;
                    if (sy >= image.height) sy = image.height - 1;
                    acc += kernel[ky + 1][kx + 1] * image.at(sx, sy);
                }
            }
            out.set(x, y, detail::round_half_up(acc / 16.0));
        }
    }
    return out;
}

/// Row-major flattening of the n x n block with top-left corner (x, y).
inline BlockVector extract_block(const GrayImage& image, int x, int y, int n) {
    if (n < 1) throw ArgumentError("block size must be >= 1");
    if (x < 0 || y < 0 || x + n > image.width || y + n > image.height) {
        throw IndexError("block is not fully inside the image");
    }
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(n) * n);
    for (int dy = 0; dy < n; ++dy) {
        for (int dx = 0; dx < n; ++dx) values.push_back(image.at(x + dx, y + dy));
    }
    return make_block_vector(std::move(values));
}

}  // namespace qbm
