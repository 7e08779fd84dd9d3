#pragma once

#include <cstdint>
#include <random>

#include "sdn/image.hpp"

namespace sdn::testing {

// Filled disk: pixel (c, r) is foreground when (c-cx)^2 + (r-cy)^2 <= radius^2.
inline BinaryImage disk_image(int width, int height, double cx, double cy, double radius) {
  BinaryImage img(width, height);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      const double dc = c - cx, dr = r - cy;
      img.set(c, r, dc * dc + dr * dr <= radius * radius);
    }
  }
  return img;
}

inline void paint_disk(BinaryImage& img, double cx, double cy, double radius) {
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      const double dc = c - cx, dr = r - cy;
      if (dc * dc + dr * dr <= radius * radius) img.set(c, r, true);
    }
  }
}

inline void paint_rect(BinaryImage& img, int col0, int row0, int col1, int row1) {
  for (int r = row0; r <= row1; ++r) {
    for (int c = col0; c <= col1; ++c) img.set(c, r, true);
  }
}

// 32x32, disk of radius 10 at the image center.
inline BinaryImage disk32() { return disk_image(32, 32, 15.5, 15.5, 10.0); }

// 64x64, disk of radius 20 at the image center.
inline BinaryImage disk64() { return disk_image(64, 64, 31.5, 31.5, 20.0); }

// Bar geometry inside the 48x12 canvas.
struct BarGeometry {
  int col0 = 2, row0 = 3, col1 = 45, row1 = 8;
  double length() const { return double(col1 - col0 + 1); }
};

inline BinaryImage bar48x12() {
  BinaryImage img(48, 12);
  const BarGeometry g;
  paint_rect(img, g.col0, g.row0, g.col1, g.row1);
  return img;
}

// 64x64 with two separated disks.
inline BinaryImage two_blob64() {
  BinaryImage img(64, 64);
  paint_disk(img, 18.0, 20.0, 10.0);
  paint_disk(img, 44.0, 43.0, 12.0);
  return img;
}

// 40x40 annulus, outer radius 15, inner radius 7.
inline BinaryImage ring40() {
  BinaryImage img(40, 40);
  for (int r = 0; r < 40; ++r) {
    for (int c = 0; c < 40; ++c) {
      const double dc = c - 19.5, dr = r - 19.5;
      const double d2 = dc * dc + dr * dr;
      img.set(c, r, d2 <= 15.0 * 15.0 && d2 > 7.0 * 7.0);
    }
  }
  return img;
}

// 33x33 with only the center pixel in the foreground.
inline BinaryImage single_pixel33() {
  BinaryImage img(33, 33);
  img.set(16, 16, true);
  return img;
}

// 64x40 with three disks; the left two touch, the right one is isolated.
inline BinaryImage three_blob() {
  BinaryImage img(64, 40);
  paint_disk(img, 10.0, 20.0, 7.0);
  paint_disk(img, 24.0, 20.0, 7.0);
  paint_disk(img, 50.0, 20.0, 7.0);
  return img;
}

inline BinaryImage random_image(std::mt19937& rng, int max_side = 12) {
  std::uniform_int_distribution<int> side(1, max_side);
  std::bernoulli_distribution bit(0.5);
  BinaryImage img(side(rng), side(rng));
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) img.set(c, r, bit(rng));
  }
  return img;
}

}  // namespace sdn::testing
