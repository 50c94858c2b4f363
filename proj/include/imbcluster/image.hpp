#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace imbcluster {

// 8-bit RGB image, row-major, 3 bytes per pixel.
struct RgbImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;

  std::size_t pixel_count() const { return width * height; }
  std::uint8_t* px(std::size_t x, std::size_t y) {
    return pixels.data() + 3 * (y * width + x);
  }
  const std::uint8_t* px(std::size_t x, std::size_t y) const {
    return pixels.data() + 3 * (y * width + x);
  }

  friend bool operator==(const RgbImage&, const RgbImage&) = default;
};

RgbImage make_image(std::size_t width, std::size_t height);

// Dispatch on extension: .png, or .ppm/.pnm (binary P6).
RgbImage read_image(const std::filesystem::path& path);
void write_image(const RgbImage& image, const std::filesystem::path& path);

RgbImage read_png(const std::filesystem::path& path);
void write_png(const RgbImage& image, const std::filesystem::path& path);
RgbImage read_ppm(const std::filesystem::path& path);
void write_ppm(const RgbImage& image, const std::filesystem::path& path);

}  // namespace imbcluster
