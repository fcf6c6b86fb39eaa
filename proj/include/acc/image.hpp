#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "acc/world.hpp"

namespace acc {

struct Color {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
    std::uint8_t a = 255;

    bool operator==(const Color&) const = default;
};

// Transparency is keyed on RGB only; the mask comparison ignores alpha.
inline bool same_rgb(const Color& x, const Color& y) {
    return x.r == y.r && x.g == y.g && x.b == y.b;
}

// Row-major RGBA raster with an optional transparency key. The key is what
// the filters skip and what a masked blit leaves out.
struct PixelBuffer {
    int width = 0;
    int height = 0;
    std::vector<Color> pixels;
    std::optional<Color> mask;

    PixelBuffer() = default;
    PixelBuffer(int w, int h, Color fill = {0, 0, 0, 255})
        : width(w), height(h), pixels(static_cast<size_t>(w) * static_cast<size_t>(h), fill) {}

    Color& at(int x, int y) {
        return pixels[static_cast<size_t>(y) * static_cast<size_t>(width) +
                      static_cast<size_t>(x)];
    }
    const Color& at(int x, int y) const {
        return pixels[static_cast<size_t>(y) * static_cast<size_t>(width) +
                      static_cast<size_t>(x)];
    }

    bool is_masked(const Color& c) const { return mask.has_value() && same_rgb(c, *mask); }
};

inline Color white_mask() { return {255, 255, 255, 255}; }

// Binary PPM, maxval 255 only. Encoding is byte-exact ("P6\n<w> <h>\n255\n"
// then RGB triplets); decoding also accepts comments and arbitrary
// whitespace runs between header tokens.
inline std::vector<std::uint8_t> encode_ppm(const PixelBuffer& buf) {
    std::string header = "P6\n" + std::to_string(buf.width) + " " + std::to_string(buf.height) +
                         "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.reserve(out.size() + buf.pixels.size() * 3);
    for (const Color& c : buf.pixels) {
        out.push_back(c.r);
        out.push_back(c.g);
        out.push_back(c.b);
    }
    return out;
}

namespace detail {

inline bool ppm_token(const std::vector<std::uint8_t>& bytes, size_t& pos, long long& value) {
    while (pos < bytes.size()) {
        std::uint8_t c = bytes[pos];
        if (c == '#') {
            while (pos < bytes.size() && bytes[pos] != '\n') pos++;
        } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f') {
            pos++;
        } else {
            break;
        }
    }
    if (pos >= bytes.size() || bytes[pos] < '0' || bytes[pos] > '9') return false;
    value = 0;
    while (pos < bytes.size() && bytes[pos] >= '0' && bytes[pos] <= '9') {
        value = value * 10 + (bytes[pos] - '0');
        if (value > 1000000000LL) return false;
        pos++;
    }
    return true;
}

} // namespace detail

inline bool decode_ppm(const std::vector<std::uint8_t>& bytes, PixelBuffer& out,
                       std::string& error) {
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6') {
        error = "not a P6 ppm (bad magic)";
        return false;
    }
    size_t pos = 2;
    long long w = 0, h = 0, maxval = 0;
    if (!detail::ppm_token(bytes, pos, w) || !detail::ppm_token(bytes, pos, h) ||
        !detail::ppm_token(bytes, pos, maxval)) {
        error = "malformed ppm header";
        return false;
    }
    if (w <= 0 || h <= 0) {
        error = "non-positive ppm dimensions";
        return false;
    }
    if (maxval != 255) {
        error = "unsupported ppm maxval (must be 255)";
        return false;
    }
    // exactly one whitespace byte separates the header from the pixels
    if (pos >= bytes.size()) {
        error = "truncated ppm pixel data";
        return false;
    }
    pos++;
    size_t need = static_cast<size_t>(w) * static_cast<size_t>(h) * 3;
    if (bytes.size() - pos < need) {
        error = "truncated ppm pixel data";
        return false;
    }
    out = PixelBuffer(static_cast<int>(w), static_cast<int>(h));
    for (size_t i = 0; i < static_cast<size_t>(w) * static_cast<size_t>(h); i++) {
        out.pixels[i].r = bytes[pos + i * 3];
        out.pixels[i].g = bytes[pos + i * 3 + 1];
        out.pixels[i].b = bytes[pos + i * 3 + 2];
        out.pixels[i].a = 255;
    }
    return true;
}

struct EffectSpec {
    enum Kind {
        None,
        Gray,
        Blur,
        BrightUp,
        BrightDown,
        Fill,
    };
    Kind kind = None;
    int delta = 0;
    Color color = {0, 0, 0, 255};
};

namespace detail {

inline std::uint8_t clamp_channel(int v) {
    if (v < 0) return 0;
    if (v > 255) return 255;
    return static_cast<std::uint8_t>(v);
}

} // namespace detail

// The closed set of pixel transforms. Gray averages the channels with
// truncation; Blur averages each interior-column pixel with its left and
// right neighbors from a snapshot of the input (masked neighbors drop out of
// the divisor, edge columns and images narrower than 3 stay untouched);
// Bright adds or subtracts uniformly with clamping; Fill repaints
// everything, mask included. Gray/Blur/Bright leave mask-colored pixels
// bit-identical.
inline void apply_effect(PixelBuffer& buf, const EffectSpec& e) {
    switch (e.kind) {
    case EffectSpec::None:
        return;
    case EffectSpec::Gray:
        for (Color& c : buf.pixels) {
            if (buf.is_masked(c)) continue;
            std::uint8_t gray = static_cast<std::uint8_t>((c.r + c.g + c.b) / 3);
            c.r = c.g = c.b = gray;
        }
        return;
    case EffectSpec::Blur: {
        if (buf.width < 3) return;
        const PixelBuffer snapshot = buf;
        for (int y = 0; y < buf.height; y++) {
            for (int x = 1; x < buf.width - 1; x++) {
                const Color& center = snapshot.at(x, y);
                if (snapshot.is_masked(center)) continue;
                int r = center.r, g = center.g, b = center.b, n = 1;
                const Color& left = snapshot.at(x - 1, y);
                if (!snapshot.is_masked(left)) {
                    r += left.r;
                    g += left.g;
                    b += left.b;
                    n++;
                }
                const Color& right = snapshot.at(x + 1, y);
                if (!snapshot.is_masked(right)) {
                    r += right.r;
                    g += right.g;
                    b += right.b;
                    n++;
                }
                Color& dst = buf.at(x, y);
                dst.r = static_cast<std::uint8_t>(r / n);
                dst.g = static_cast<std::uint8_t>(g / n);
                dst.b = static_cast<std::uint8_t>(b / n);
            }
        }
        return;
    }
    case EffectSpec::BrightUp:
        for (Color& c : buf.pixels) {
            if (buf.is_masked(c)) continue;
            c.r = detail::clamp_channel(c.r + e.delta);
            c.g = detail::clamp_channel(c.g + e.delta);
            c.b = detail::clamp_channel(c.b + e.delta);
        }
        return;
    case EffectSpec::BrightDown:
        for (Color& c : buf.pixels) {
            if (buf.is_masked(c)) continue;
            c.r = detail::clamp_channel(c.r - e.delta);
            c.g = detail::clamp_channel(c.g - e.delta);
            c.b = detail::clamp_channel(c.b - e.delta);
        }
        return;
    case EffectSpec::Fill:
        for (int y = 0; y < buf.height; y++)
            for (int x = 0; x < buf.width; x++) buf.at(x, y) = e.color;
        return;
    }
}

// Copies src onto dst with its top-left at (x, y), clipping whatever falls
// outside dst. With use_mask, source pixels matching the source's own mask
// color are skipped.
inline void blit(PixelBuffer& dst, const PixelBuffer& src, int x, int y, bool use_mask) {
    for (int sy = 0; sy < src.height; sy++) {
        int dy = y + sy;
        if (dy < 0 || dy >= dst.height) continue;
        for (int sx = 0; sx < src.width; sx++) {
            int dx = x + sx;
            if (dx < 0 || dx >= dst.width) continue;
            const Color& c = src.at(sx, sy);
            if (use_mask && src.is_masked(c)) continue;
            dst.at(dx, dy) = c;
        }
    }
}

struct SpriteRegistry {
    std::map<int, PixelBuffer> sprites;
};

// One whole frame: start from a copy of the background, then for each
// command clone the sprite, apply its effect to the clone, and blit the
// clone masked at the command's screen position. Registry sprites are never
// touched, so the same inputs always render the same bytes.
inline bool render_frame(const std::vector<RenderCommand>& commands,
                         const SpriteRegistry& registry, const PixelBuffer& background,
                         const std::map<int, EffectSpec>& effects, PixelBuffer& out) {
    out = background;
    for (const auto& cmd : commands) {
        auto it = registry.sprites.find(cmd.shape_id);
        if (it == registry.sprites.end()) return false;
        PixelBuffer clone = it->second;
        auto fx = effects.find(cmd.effect);
        if (fx != effects.end()) apply_effect(clone, fx->second);
        blit(out, clone, cmd.screen_x, cmd.screen_y, true);
    }
    return true;
}

// FNV-1a, the 64-bit variant; used to fingerprint rendered frames.
inline std::uint64_t fnv1a64(const std::uint8_t* data, size_t len,
                             std::uint64_t seed = 14695981039346656037ull) {
    std::uint64_t hash = seed;
    for (size_t i = 0; i < len; i++) {
        hash ^= data[i];
        hash *= 1099511628211ull;
    }
    return hash;
}

inline std::uint64_t fnv1a64(const std::vector<std::uint8_t>& bytes,
                             std::uint64_t seed = 14695981039346656037ull) {
    return fnv1a64(bytes.data(), bytes.size(), seed);
}

} // namespace acc
