#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "sdn/point.hpp"

namespace sdn {

enum class Label : int { Background = -1, Foreground = +1 };

constexpr double sign_of(Label y) noexcept { return static_cast<double>(static_cast<int>(y)); }

constexpr Label opposite(Label y) noexcept {
  return y == Label::Foreground ? Label::Background : Label::Foreground;
}

// Converts +1 / -1 to a Label. Anything else is a ValidationError.
Label label_from_int(int value);

struct LabeledSample {
  Point2 x;
  Label y = Label::Background;
};

// Row-major {0,1} mask, 1 = foreground.
class BinaryImage {
 public:
  BinaryImage(int width, int height);
  BinaryImage(int width, int height, std::vector<std::uint8_t> pixels);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  std::uint8_t at(int col, int row) const { return pixels_[index(col, row)]; }
  void set(int col, int row, bool foreground) { pixels_[index(col, row)] = foreground ? 1 : 0; }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::size_t foreground_count() const noexcept;

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  std::size_t index(int col, int row) const;

  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

// Which gray levels count as shape pixels when binarizing.
enum class Polarity { DarkForeground, BrightForeground };

Polarity parse_polarity(std::string_view text);
std::string_view to_string(Polarity polarity) noexcept;

struct BinarizeOptions {
  int threshold = 128;  // gray level in [0,255], inclusive on the bright side
  Polarity polarity = Polarity::DarkForeground;
};

// Grayscale raster prior to binarization, levels rescaled to [0,255].
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> levels;
};

GrayImage decode_pgm(std::span<const std::uint8_t> bytes);
GrayImage read_gray_image(const std::filesystem::path& path);
BinaryImage binarize(const GrayImage& gray, const BinarizeOptions& options);

// Reads a P2/P5 PGM (or a PNG when built with libpng) and binarizes it.
BinaryImage load_image(const std::filesystem::path& path, const BinarizeOptions& options = {});

// Binary P5 with maxval 255. Foreground is written dark or bright per polarity.
std::vector<std::uint8_t> encode_pgm(const BinaryImage& image,
                                     Polarity polarity = Polarity::DarkForeground);
void save_pgm(const BinaryImage& image, const std::filesystem::path& path,
              Polarity polarity = Polarity::DarkForeground);

std::vector<LabeledSample> image_to_samples(const BinaryImage& image);
BinaryImage labels_to_image(int width, int height, std::span<const Label> labels);

std::size_t hamming_distance(const BinaryImage& a, const BinaryImage& b);

}  // namespace sdn
