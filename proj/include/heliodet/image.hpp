#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "heliodet/rng.hpp"

namespace heliodet {

/// Owned 8-bit interleaved pixel buffer, row-major. channels is 1 (gray)
/// or 3 (RGB). data.size() == width * height * channels always.
struct Image {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<uint8_t> data;

    Image() = default;
    Image(int w, int h, int c, uint8_t fill = 0);

    uint8_t& at(int x, int y, int c) {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }
    uint8_t at(int x, int y, int c) const {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }

    bool operator==(const Image& other) const = default;
};

/// Geometry of an aspect-preserving resize + centered pad. Invertible on box
/// coordinates up to rounding.
struct LetterboxTransform {
    double scale = 1.0;
    int pad_x = 0;
    int pad_y = 0;
    int src_w = 0;
    int src_h = 0;
    int dst_w = 0;
    int dst_h = 0;
};

/// Decode binary PPM ("P6") or PGM ("P5"), maxval 255. Header tokens may be
/// separated by any whitespace and '#' comment lines. Throws ParseError
/// naming the byte offset on malformed input.
Image decode_ppm(std::span<const uint8_t> bytes);

/// Encode to the canonical form "P6\n{w} {h}\n255\n" (P5 for 1 channel)
/// followed by raw pixel bytes. Bit-exact across platforms.
std::vector<uint8_t> encode_ppm(const Image& img);

Image read_image(const std::filesystem::path& path);
void write_image(const std::filesystem::path& path, const Image& img);

/// Bilinear resample with half-pixel centers, clamp-to-edge taps, and
/// round-half-away-from-zero quantization.
Image resize_bilinear(const Image& img, int new_w, int new_h);

/// Aspect-preserving resize then centered constant padding. Content region
/// dimensions are round(src * scale).
std::pair<Image, LetterboxTransform> letterbox(const Image& img, int dst_w, int dst_h,
                                               uint8_t pad_value = 114);

/// Rotate by turns * 90 degrees clockwise. turns taken modulo 4.
Image rotate90(const Image& img, int turns);

// Pixel-level operations used by augmentation. All leave dimensions and
// channel count unchanged and are pure functions of their inputs.
Image convert_grayscale(const Image& img);
Image adjust_brightness(const Image& img, double delta);   // delta in [-1,1] of full scale
Image adjust_gamma(const Image& img, double gamma);        // exposure; gamma in (0, inf)
Image adjust_hue_saturation(const Image& img, double hue_deg, double sat_mul);
Image box_blur(const Image& img, int radius);
Image add_uniform_noise(const Image& img, double amplitude, Rng& rng);
void fill_rect(Image& img, int x0, int y0, int x1, int y1, uint8_t value);
void draw_rect_outline(Image& img, int x0, int y0, int x1, int y1, uint8_t r, uint8_t g,
                       uint8_t b, int thickness = 2);

/// Clamp to [0,255] and round half away from zero.
uint8_t quantize_u8(double v);

}  // namespace heliodet
