#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace recolor {

struct Rgb8 {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb8&, const Rgb8&) = default;
};

/// 8-bit sRGB image, row-major.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<Rgb8> pixels;

  RgbImage() = default;
  RgbImage(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h) {
    if (w < 1 || h < 1) throw std::invalid_argument("RgbImage: dimensions must be >= 1");
  }

  std::size_t size() const { return pixels.size(); }
  Rgb8& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
  const Rgb8& at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

/// CIE L*a*b* image (D65, 2° observer). L in [0,100], a/b unbounded.
struct LabImage {
  int width = 0;
  int height = 0;
  std::vector<double> L;
  std::vector<double> a;
  std::vector<double> b;

  LabImage() = default;
  LabImage(int w, int h)
      : width(w),
        height(h),
        L(static_cast<std::size_t>(w) * h),
        a(static_cast<std::size_t>(w) * h),
        b(static_cast<std::size_t>(w) * h) {
    if (w < 1 || h < 1) throw std::invalid_argument("LabImage: dimensions must be >= 1");
  }

  std::size_t size() const { return L.size(); }
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
};

/// Luminance-only image; same L scale as LabImage.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<double> L;

  GrayImage() = default;
  GrayImage(int w, int h) : width(w), height(h), L(static_cast<std::size_t>(w) * h) {
    if (w < 1 || h < 1) throw std::invalid_argument("GrayImage: dimensions must be >= 1");
  }

  std::size_t size() const { return L.size(); }
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
};

LabImage rgb_to_lab(const RgbImage& img);
RgbImage lab_to_rgb(const LabImage& img);
GrayImage to_gray(const RgbImage& img);

/// L channel of a LabImage as a GrayImage (no conversion).
GrayImage luminance(const LabImage& img);

}  // namespace recolor
