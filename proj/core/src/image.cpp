#include "sdn/image.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <string>

#include <fmt/format.h>

#ifdef SDN_HAVE_PNG
#include <png.h>
#endif

#include "sdn/error.hpp"

namespace sdn {

Label label_from_int(int value) {
  if (value == 1) return Label::Foreground;
  if (value == -1) return Label::Background;
  throw ValidationError(fmt::format("label must be +1 or -1, got {}", value));
}

BinaryImage::BinaryImage(int width, int height)
    : BinaryImage(width, height,
                  std::vector<std::uint8_t>(
                      width > 0 && height > 0 ? std::size_t(width) * std::size_t(height) : 0, 0)) {}

BinaryImage::BinaryImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width < 1 || height < 1) {
    throw ValidationError(fmt::format("image dimensions must be positive, got {}x{}", width, height));
  }
  if (pixels_.size() != std::size_t(width) * std::size_t(height)) {
    throw ValidationError(fmt::format("pixel buffer holds {} values, expected {}x{}",
                                      pixels_.size(), width, height));
  }
  for (auto& p : pixels_) {
    if (p > 1) throw ValidationError("binary image pixels must be 0 or 1");
  }
}

std::size_t BinaryImage::index(int col, int row) const {
  if (col < 0 || col >= width_ || row < 0 || row >= height_) {
    throw ValidationError(fmt::format("pixel ({}, {}) outside {}x{} image", col, row, width_, height_));
  }
  return std::size_t(row) * std::size_t(width_) + std::size_t(col);
}

std::size_t BinaryImage::foreground_count() const noexcept {
  return static_cast<std::size_t>(std::count(pixels_.begin(), pixels_.end(), std::uint8_t{1}));
}

Polarity parse_polarity(std::string_view text) {
  if (text == "dark" || text == "dark=foreground") return Polarity::DarkForeground;
  if (text == "bright" || text == "bright=foreground") return Polarity::BrightForeground;
  throw ValidationError(fmt::format("unknown polarity '{}' (expected dark or bright)", text));
}

std::string_view to_string(Polarity polarity) noexcept {
  return polarity == Polarity::DarkForeground ? "dark=foreground" : "bright=foreground";
}

namespace {

class PgmReader {
 public:
  explicit PgmReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  // Header integer, skipping whitespace and '#' comments.
  long next_int(const char* what) {
    skip_space_and_comments();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      throw FormatError(fmt::format("PGM header: missing {}", what));
    }
    long value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 1'000'000'000L) throw FormatError(fmt::format("PGM header: {} too large", what));
      ++pos_;
    }
    return value;
  }

  // Exactly one whitespace byte separates the header from P5 raster data.
  void consume_single_whitespace() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw FormatError("PGM header: expected whitespace before raster data");
    }
    ++pos_;
  }

  std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 2;
};

std::uint8_t rescale(long value, long maxval) {
  if (value > maxval) throw FormatError(fmt::format("PGM sample {} exceeds maxval {}", value, maxval));
  if (maxval == 255) return static_cast<std::uint8_t>(value);
  return static_cast<std::uint8_t>((value * 255 + maxval / 2) / maxval);
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open '{}'", path.string()));
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError(fmt::format("error reading '{}'", path.string()));
  return bytes;
}

#ifdef SDN_HAVE_PNG
GrayImage decode_png(std::span<const std::uint8_t> bytes) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    throw FormatError(fmt::format("PNG: {}", image.message));
  }
  image.format = PNG_FORMAT_GRAY;
  GrayImage gray;
  gray.width = static_cast<int>(image.width);
  gray.height = static_cast<int>(image.height);
  gray.levels.resize(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, gray.levels.data(), 0, nullptr)) {
    std::string message = image.message;
    png_image_free(&image);
    throw FormatError(fmt::format("PNG: {}", message));
  }
  return gray;
}
#endif

}  // namespace

GrayImage decode_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw FormatError("not a PGM file (expected P2 or P5 magic)");
  }
  const bool ascii = bytes[1] == '2';
  PgmReader reader(bytes);
  const long width = reader.next_int("width");
  const long height = reader.next_int("height");
  const long maxval = reader.next_int("maxval");
  if (width < 1 || height < 1) {
    throw ValidationError(fmt::format("PGM has zero dimension {}x{}", width, height));
  }
  if (maxval < 1 || maxval > 65535) throw FormatError(fmt::format("PGM maxval {} out of range", maxval));

  GrayImage gray;
  gray.width = static_cast<int>(width);
  gray.height = static_cast<int>(height);
  const std::size_t count = std::size_t(width) * std::size_t(height);
  gray.levels.reserve(count);

  if (ascii) {
    for (std::size_t i = 0; i < count; ++i) gray.levels.push_back(rescale(reader.next_int("sample"), maxval));
    return gray;
  }

  reader.consume_single_whitespace();
  const auto raster = reader.rest();
  const std::size_t bytes_per_sample = maxval < 256 ? 1 : 2;
  if (raster.size() < count * bytes_per_sample) {
    throw FormatError(fmt::format("PGM raster truncated: {} bytes, expected {}", raster.size(),
                                  count * bytes_per_sample));
  }
  for (std::size_t i = 0; i < count; ++i) {
    const long value = bytes_per_sample == 1
                           ? long(raster[i])
                           : (long(raster[2 * i]) << 8) | long(raster[2 * i + 1]);
    gray.levels.push_back(rescale(value, maxval));
  }
  return gray;
}

GrayImage read_gray_image(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  static constexpr std::uint8_t kPngMagic[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  if (bytes.size() >= 8 && std::equal(std::begin(kPngMagic), std::end(kPngMagic), bytes.begin())) {
#ifdef SDN_HAVE_PNG
    return decode_png(bytes);
#else
    throw FormatError("PNG input requires a build with libpng");
#endif
  }
  return decode_pgm(bytes);
}

BinaryImage binarize(const GrayImage& gray, const BinarizeOptions& options) {
  if (options.threshold < 0 || options.threshold > 255) {
    throw ValidationError(fmt::format("binarization threshold {} outside [0,255]", options.threshold));
  }
  std::vector<std::uint8_t> pixels(gray.levels.size());
  std::transform(gray.levels.begin(), gray.levels.end(), pixels.begin(), [&](std::uint8_t level) {
    const bool bright = level >= options.threshold;
    const bool foreground = options.polarity == Polarity::BrightForeground ? bright : !bright;
    return std::uint8_t(foreground ? 1 : 0);
  });
  return BinaryImage(gray.width, gray.height, std::move(pixels));
}

BinaryImage load_image(const std::filesystem::path& path, const BinarizeOptions& options) {
  return binarize(read_gray_image(path), options);
}

std::vector<std::uint8_t> encode_pgm(const BinaryImage& image, Polarity polarity) {
  const std::string header = fmt::format("P5\n{} {}\n255\n", image.width(), image.height());
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + image.size());
  const std::uint8_t fg = polarity == Polarity::DarkForeground ? 0 : 255;
  const std::uint8_t bg = polarity == Polarity::DarkForeground ? 255 : 0;
  for (const auto p : image.pixels()) out.push_back(p ? fg : bg);
  return out;
}

void save_pgm(const BinaryImage& image, const std::filesystem::path& path, Polarity polarity) {
  const auto bytes = encode_pgm(image, polarity);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError(fmt::format("error writing '{}'", path.string()));
}

std::vector<LabeledSample> image_to_samples(const BinaryImage& image) {
  std::vector<LabeledSample> samples;
  samples.reserve(image.size());
  for (int row = 0; row < image.height(); ++row) {
    for (int col = 0; col < image.width(); ++col) {
      samples.push_back({{double(col), double(row)},
                         image.at(col, row) ? Label::Foreground : Label::Background});
    }
  }
  return samples;
}

BinaryImage labels_to_image(int width, int height, std::span<const Label> labels) {
  if (width < 1 || height < 1 || labels.size() != std::size_t(width) * std::size_t(height)) {
    throw ValidationError(fmt::format("{} labels do not fill a {}x{} image", labels.size(), width, height));
  }
  std::vector<std::uint8_t> pixels(labels.size());
  std::transform(labels.begin(), labels.end(), pixels.begin(),
                 [](Label y) { return std::uint8_t(y == Label::Foreground ? 1 : 0); });
  return BinaryImage(width, height, std::move(pixels));
}

std::size_t hamming_distance(const BinaryImage& a, const BinaryImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw ValidationError(fmt::format("image size mismatch: {}x{} vs {}x{}", a.width(), a.height(),
                                      b.width(), b.height()));
  }
  std::size_t diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) diff += a.pixels()[i] != b.pixels()[i];
  return diff;
}

}  // namespace sdn
