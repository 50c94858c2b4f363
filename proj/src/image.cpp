#include "imbcluster/image.hpp"

#include <png.h>

#include <cctype>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

namespace imbcluster {

RgbImage make_image(std::size_t width, std::size_t height) {
  if (width == 0 || height == 0)
    throw std::invalid_argument("make_image: empty image");
  RgbImage img;
  img.width = width;
  img.height = height;
  img.pixels.assign(3 * width * height, 0);
  return img;
}

namespace {

std::string lower_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  for (char& c : ext) c = static_cast<char>(std::tolower(c));
  return ext;
}

}  // namespace

RgbImage read_image(const std::filesystem::path& path) {
  const std::string ext = lower_extension(path);
  if (ext == ".png") return read_png(path);
  if (ext == ".ppm" || ext == ".pnm") return read_ppm(path);
  throw std::runtime_error("read_image: unsupported format '" + ext + "'");
}

void write_image(const RgbImage& image, const std::filesystem::path& path) {
  const std::string ext = lower_extension(path);
  if (ext == ".png") return write_png(image, path);
  if (ext == ".ppm" || ext == ".pnm") return write_ppm(image, path);
  throw std::runtime_error("write_image: unsupported format '" + ext + "'");
}

RgbImage read_png(const std::filesystem::path& path) {
  png_image png;
  std::memset(&png, 0, sizeof(png));
  png.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&png, path.string().c_str()))
    throw std::runtime_error("read_png: " + std::string(png.message));
  png.format = PNG_FORMAT_RGB;

  RgbImage img;
  img.width = png.width;
  img.height = png.height;
  img.pixels.resize(PNG_IMAGE_SIZE(png));
  if (!png_image_finish_read(&png, nullptr, img.pixels.data(), 0, nullptr)) {
    png_image_free(&png);
    throw std::runtime_error("read_png: " + std::string(png.message));
  }
  return img;
}

void write_png(const RgbImage& image, const std::filesystem::path& path) {
  if (image.pixel_count() == 0)
    throw std::invalid_argument("write_png: empty image");
  png_image png;
  std::memset(&png, 0, sizeof(png));
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(image.width);
  png.height = static_cast<png_uint_32>(image.height);
  png.format = PNG_FORMAT_RGB;
  if (!png_image_write_to_file(&png, path.string().c_str(), 0,
                               image.pixels.data(), 0, nullptr))
    throw std::runtime_error("write_png: " + std::string(png.message));
}

namespace {

// Reads one whitespace-delimited PPM token, skipping '#' comments.
std::string ppm_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (std::isspace(c)) {
      if (!tok.empty()) return tok;
      continue;
    }
    tok.push_back(static_cast<char>(c));
  }
  return tok;
}

}  // namespace

RgbImage read_ppm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_ppm: cannot open " + path.string());
  if (ppm_token(in) != "P6")
    throw std::runtime_error("read_ppm: not a binary P6 file");
  const std::size_t width = std::stoul(ppm_token(in));
  const std::size_t height = std::stoul(ppm_token(in));
  const std::size_t maxval = std::stoul(ppm_token(in));
  if (maxval != 255)
    throw std::runtime_error("read_ppm: only maxval 255 supported");
  if (width == 0 || height == 0)
    throw std::runtime_error("read_ppm: empty image");

  RgbImage img = make_image(width, height);
  in.read(reinterpret_cast<char*>(img.pixels.data()),
          static_cast<std::streamsize>(img.pixels.size()));
  if (in.gcount() != static_cast<std::streamsize>(img.pixels.size()))
    throw std::runtime_error("read_ppm: truncated pixel data");
  return img;
}

void write_ppm(const RgbImage& image, const std::filesystem::path& path) {
  if (image.pixel_count() == 0)
    throw std::invalid_argument("write_ppm: empty image");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_ppm: cannot open " + path.string());
  out << "P6\n" << image.width << ' ' << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.pixels.data()),
            static_cast<std::streamsize>(image.pixels.size()));
  if (!out) throw std::runtime_error("write_ppm: write failed");
}

}  // namespace imbcluster
