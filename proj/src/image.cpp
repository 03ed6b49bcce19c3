#include "heliodet/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <string>

#include "heliodet/error.hpp"

namespace heliodet {

Image::Image(int w, int h, int c, uint8_t fill)
    : width(w), height(h), channels(c),
      data(static_cast<size_t>(w) * h * c, fill) {
    if (w < 1 || h < 1 || (c != 1 && c != 3))
        throw ValidationError("Image: bad dimensions " + std::to_string(w) + "x" +
                              std::to_string(h) + "x" + std::to_string(c));
}

uint8_t quantize_u8(double v) {
    if (v <= 0.0) return 0;
    if (v >= 255.0) return 255;
    return static_cast<uint8_t>(std::floor(v + 0.5));
}

namespace {

struct PnmReader {
    std::span<const uint8_t> bytes;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("pnm decode error at byte " + std::to_string(pos) + ": " + what);
    }

    int peek() const { return pos < bytes.size() ? bytes[pos] : -1; }

    int get() {
        if (pos >= bytes.size()) fail("unexpected end of data");
        return bytes[pos++];
    }

    // Skips whitespace and '#' comment lines between header tokens.
    void skip_space() {
        for (;;) {
            int c = peek();
            if (c == '#') {
                while (c != '\n' && c != -1) {
                    ++pos;
                    c = peek();
                }
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                ++pos;
            } else {
                return;
            }
        }
    }

    int read_int(const std::string& field) {
        skip_space();
        if (peek() < '0' || peek() > '9') fail("expected integer for " + field);
        long v = 0;
        while (peek() >= '0' && peek() <= '9') {
            v = v * 10 + (get() - '0');
            if (v > 1000000000L) fail(field + " out of range");
        }
        return static_cast<int>(v);
    }
};

}  // namespace

Image decode_ppm(std::span<const uint8_t> bytes) {
    PnmReader r{bytes};
    if (bytes.size() < 2) r.fail("missing magic");
    const char m0 = static_cast<char>(r.get());
    const char m1 = static_cast<char>(r.get());
    int channels = 0;
    if (m0 == 'P' && m1 == '6') channels = 3;
    else if (m0 == 'P' && m1 == '5') channels = 1;
    else {
        r.pos = 0;
        r.fail("malformed magic (expected P6 or P5)");
    }
    const int w = r.read_int("width");
    const int h = r.read_int("height");
    const int maxval = r.read_int("maxval");
    if (w < 1 || h < 1) r.fail("non-positive dimensions");
    if (maxval != 255) r.fail("maxval must be 255, got " + std::to_string(maxval));
    // Exactly one whitespace byte separates the header from raster data.
    const int sep = r.get();
    if (sep != '\n' && sep != ' ' && sep != '\t' && sep != '\r')
        r.fail("expected whitespace after maxval");

    const size_t need = static_cast<size_t>(w) * h * channels;
    const size_t avail = bytes.size() - r.pos;
    if (avail < need) {
        r.pos = bytes.size();
        r.fail("truncated pixel data: need " + std::to_string(need) + " bytes, have " +
               std::to_string(avail));
    }
    Image img(w, h, channels);
    std::memcpy(img.data.data(), bytes.data() + r.pos, need);
    return img;
}

std::vector<uint8_t> encode_ppm(const Image& img) {
    std::string header = (img.channels == 3 ? "P6\n" : "P5\n");
    header += std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    std::vector<uint8_t> out;
    out.reserve(header.size() + img.data.size());
    out.insert(out.end(), header.begin(), header.end());
    out.insert(out.end(), img.data.begin(), img.data.end());
    return out;
}

Image read_image(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open image file: " + path.string());
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                               std::istreambuf_iterator<char>());
    return decode_ppm(bytes);
}

void write_image(const std::filesystem::path& path, const Image& img) {
    const auto bytes = encode_ppm(img);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write image file: " + path.string());
    f.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
    if (!f) throw IoError("short write to image file: " + path.string());
}

Image resize_bilinear(const Image& img, int new_w, int new_h) {
    if (new_w < 1 || new_h < 1)
        throw ValidationError("resize_bilinear: target dimensions must be >= 1");
    if (new_w == img.width && new_h == img.height) return img;

    Image out(new_w, new_h, img.channels);
    const double sx = static_cast<double>(img.width) / new_w;
    const double sy = static_cast<double>(img.height) / new_h;
    for (int y = 0; y < new_h; ++y) {
        const double fy = (y + 0.5) * sy - 0.5;
        int y0 = static_cast<int>(std::floor(fy));
        const double wy = fy - y0;
        const int y1 = std::clamp(y0 + 1, 0, img.height - 1);
        y0 = std::clamp(y0, 0, img.height - 1);
        for (int x = 0; x < new_w; ++x) {
            const double fx = (x + 0.5) * sx - 0.5;
            int x0 = static_cast<int>(std::floor(fx));
            const double wx = fx - x0;
            const int x1 = std::clamp(x0 + 1, 0, img.width - 1);
            x0 = std::clamp(x0, 0, img.width - 1);
            for (int c = 0; c < img.channels; ++c) {
                const double top = img.at(x0, y0, c) * (1.0 - wx) + img.at(x1, y0, c) * wx;
                const double bot = img.at(x0, y1, c) * (1.0 - wx) + img.at(x1, y1, c) * wx;
                out.at(x, y, c) = quantize_u8(top * (1.0 - wy) + bot * wy);
            }
        }
    }
    return out;
}

std::pair<Image, LetterboxTransform> letterbox(const Image& img, int dst_w, int dst_h,
                                               uint8_t pad_value) {
    LetterboxTransform t;
    t.src_w = img.width;
    t.src_h = img.height;
    t.dst_w = dst_w;
    t.dst_h = dst_h;
    t.scale = std::min(static_cast<double>(dst_w) / img.width,
                       static_cast<double>(dst_h) / img.height);
    const int content_w = std::max(1, static_cast<int>(std::floor(img.width * t.scale + 0.5)));
    const int content_h = std::max(1, static_cast<int>(std::floor(img.height * t.scale + 0.5)));
    t.pad_x = (dst_w - content_w) / 2;
    t.pad_y = (dst_h - content_h) / 2;

    Image resized = resize_bilinear(img, content_w, content_h);
    Image out(dst_w, dst_h, img.channels, pad_value);
    for (int y = 0; y < content_h; ++y) {
        const size_t src_off = static_cast<size_t>(y) * content_w * img.channels;
        const size_t dst_off =
            (static_cast<size_t>(y + t.pad_y) * dst_w + t.pad_x) * img.channels;
        std::memcpy(out.data.data() + dst_off, resized.data.data() + src_off,
                    static_cast<size_t>(content_w) * img.channels);
    }
    return {std::move(out), t};
}

Image rotate90(const Image& img, int turns) {
    turns = ((turns % 4) + 4) % 4;
    if (turns == 0) return img;
    const int w = img.width, h = img.height, ch = img.channels;
    int ow = w, oh = h;
    if (turns % 2 == 1) std::swap(ow, oh);
    Image out(ow, oh, ch);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            int nx = 0, ny = 0;
            switch (turns) {
                case 1: nx = h - 1 - y; ny = x; break;          // clockwise
                case 2: nx = w - 1 - x; ny = h - 1 - y; break;
                default: nx = y; ny = w - 1 - x; break;         // counter-clockwise
            }
            for (int c = 0; c < ch; ++c) out.at(nx, ny, c) = img.at(x, y, c);
        }
    }
    return out;
}

Image convert_grayscale(const Image& img) {
    if (img.channels == 1) return img;
    Image out(img.width, img.height, 3);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const double luma = 0.299 * img.at(x, y, 0) + 0.587 * img.at(x, y, 1) +
                                0.114 * img.at(x, y, 2);
            const uint8_t v = quantize_u8(luma);
            out.at(x, y, 0) = out.at(x, y, 1) = out.at(x, y, 2) = v;
        }
    }
    return out;
}

Image adjust_brightness(const Image& img, double delta) {
    Image out = img;
    const double shift = delta * 255.0;
    for (auto& px : out.data) px = quantize_u8(px + shift);
    return out;
}

Image adjust_gamma(const Image& img, double gamma) {
    std::array<uint8_t, 256> lut;
    for (int i = 0; i < 256; ++i)
        lut[i] = quantize_u8(255.0 * std::pow(i / 255.0, gamma));
    Image out = img;
    for (auto& px : out.data) px = lut[px];
    return out;
}

namespace {

void rgb_to_hsv(double r, double g, double b, double& h, double& s, double& v) {
    const double mx = std::max({r, g, b});
    const double mn = std::min({r, g, b});
    const double d = mx - mn;
    v = mx;
    s = mx > 0.0 ? d / mx : 0.0;
    if (d <= 0.0) {
        h = 0.0;
    } else if (mx == r) {
        h = 60.0 * std::fmod((g - b) / d, 6.0);
    } else if (mx == g) {
        h = 60.0 * ((b - r) / d + 2.0);
    } else {
        h = 60.0 * ((r - g) / d + 4.0);
    }
    if (h < 0.0) h += 360.0;
}

void hsv_to_rgb(double h, double s, double v, double& r, double& g, double& b) {
    const double c = v * s;
    const double hp = h / 60.0;
    const double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
    double r1 = 0, g1 = 0, b1 = 0;
    if (hp < 1)      { r1 = c; g1 = x; }
    else if (hp < 2) { r1 = x; g1 = c; }
    else if (hp < 3) { g1 = c; b1 = x; }
    else if (hp < 4) { g1 = x; b1 = c; }
    else if (hp < 5) { r1 = x; b1 = c; }
    else             { r1 = c; b1 = x; }
    const double m = v - c;
    r = r1 + m;
    g = g1 + m;
    b = b1 + m;
}

}  // namespace

Image adjust_hue_saturation(const Image& img, double hue_deg, double sat_mul) {
    if (img.channels == 1) return img;
    Image out = img;
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            double h, s, v;
            rgb_to_hsv(img.at(x, y, 0) / 255.0, img.at(x, y, 1) / 255.0,
                       img.at(x, y, 2) / 255.0, h, s, v);
            h = std::fmod(h + hue_deg + 720.0, 360.0);
            s = std::clamp(s * sat_mul, 0.0, 1.0);
            double r, g, b;
            hsv_to_rgb(h, s, v, r, g, b);
            out.at(x, y, 0) = quantize_u8(r * 255.0);
            out.at(x, y, 1) = quantize_u8(g * 255.0);
            out.at(x, y, 2) = quantize_u8(b * 255.0);
        }
    }
    return out;
}

Image box_blur(const Image& img, int radius) {
    if (radius < 1) return img;
    Image out(img.width, img.height, img.channels);
    const int n = 2 * radius + 1;
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            for (int c = 0; c < img.channels; ++c) {
                long sum = 0;
                for (int dy = -radius; dy <= radius; ++dy) {
                    const int sy = std::clamp(y + dy, 0, img.height - 1);
                    for (int dx = -radius; dx <= radius; ++dx) {
                        const int sx = std::clamp(x + dx, 0, img.width - 1);
                        sum += img.at(sx, sy, c);
                    }
                }
                out.at(x, y, c) = quantize_u8(static_cast<double>(sum) / (n * n));
            }
        }
    }
    return out;
}

Image add_uniform_noise(const Image& img, double amplitude, Rng& rng) {
    Image out = img;
    for (auto& px : out.data)
        px = quantize_u8(px + rng.uniform(-amplitude, amplitude));
    return out;
}

void fill_rect(Image& img, int x0, int y0, int x1, int y1, uint8_t value) {
    x0 = std::clamp(x0, 0, img.width);
    x1 = std::clamp(x1, 0, img.width);
    y0 = std::clamp(y0, 0, img.height);
    y1 = std::clamp(y1, 0, img.height);
    for (int y = y0; y < y1; ++y)
        for (int x = x0; x < x1; ++x)
            for (int c = 0; c < img.channels; ++c) img.at(x, y, c) = value;
}

void draw_rect_outline(Image& img, int x0, int y0, int x1, int y1, uint8_t r, uint8_t g,
                       uint8_t b, int thickness) {
    auto put = [&](int x, int y) {
        if (x < 0 || x >= img.width || y < 0 || y >= img.height) return;
        if (img.channels == 1) {
            img.at(x, y, 0) = r;
        } else {
            img.at(x, y, 0) = r;
            img.at(x, y, 1) = g;
            img.at(x, y, 2) = b;
        }
    };
    for (int t = 0; t < thickness; ++t) {
        for (int x = x0; x <= x1; ++x) {
            put(x, y0 + t);
            put(x, y1 - t);
        }
        for (int y = y0; y <= y1; ++y) {
            put(x0 + t, y);
            put(x1 - t, y);
        }
    }
}

}  // namespace heliodet
