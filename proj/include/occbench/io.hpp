/* Copyright 2026 The occbench Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Raster file I/O. Masks are single-channel 8-bit PNG (0 background, 255
// foreground; anything >= 128 reads as foreground). Colour images are read
// from PNG or JPEG and written as 8-bit RGB PNG. Targets using this header
// link libpng and libjpeg.

#ifndef OCCBENCH_IO_HPP_
#define OCCBENCH_IO_HPP_

#include <jpeglib.h>
#include <png.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "occbench/error.hpp"
#include "occbench/image.hpp"
#include "occbench/mask.hpp"

namespace occbench {

namespace fs = std::filesystem;

// Plain 8-bit raster with 1 or 3 interleaved channels.
struct Raster8 {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<std::uint8_t> data;
};

inline std::vector<std::uint8_t> read_file_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Writes through a uniquely named temporary in the destination directory and
// renames it into place.
inline void write_file_atomic(const fs::path& path, std::string_view bytes) {
  static std::atomic<unsigned long> counter{0};
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  auto tmp = path;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) +
         "_" + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("short write to " + path.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename into " + path.string());
  }
}

inline void write_file_atomic(const fs::path& path, const std::vector<std::uint8_t>& bytes) {
  write_file_atomic(path, std::string_view(reinterpret_cast<const char*>(bytes.data()),
                                           bytes.size()));
}

namespace detail {

inline Raster8 decode_png(const std::vector<std::uint8_t>& bytes, int channels,
                          const std::string& name) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    throw IoError("cannot decode PNG " + name + ": " + image.message);
  }
  image.format = channels == 1 ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;
  Raster8 r{static_cast<int>(image.width), static_cast<int>(image.height), channels, {}};
  r.data.resize(PNG_IMAGE_SIZE(image));
  // Composite any alpha over black.
  png_color background{0, 0, 0};
  if (!png_image_finish_read(&image, &background, r.data.data(), 0, nullptr)) {
    png_image_free(&image);
    throw IoError("cannot decode PNG " + name + ": " + image.message);
  }
  return r;
}

struct JpegErrorManager {
  jpeg_error_mgr pub;
  std::jmp_buf jump;
  char message[JMSG_LENGTH_MAX];
};

inline void jpeg_error_exit(j_common_ptr cinfo) {
  auto* err = reinterpret_cast<JpegErrorManager*>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, err->message);
  std::longjmp(err->jump, 1);
}

inline Raster8 decode_jpeg(const std::vector<std::uint8_t>& bytes, int channels,
                           const std::string& name) {
  jpeg_decompress_struct cinfo;
  JpegErrorManager jerr;
  cinfo.err = jpeg_std_error(&jerr.pub);
  jerr.pub.error_exit = jpeg_error_exit;
  Raster8 r;
  if (setjmp(jerr.jump)) {
    jpeg_destroy_decompress(&cinfo);
    throw IoError("cannot decode JPEG " + name + ": " + jerr.message);
  }
  jpeg_create_decompress(&cinfo);
  jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space = channels == 1 ? JCS_GRAYSCALE : JCS_RGB;
  jpeg_start_decompress(&cinfo);
  r.width = static_cast<int>(cinfo.output_width);
  r.height = static_cast<int>(cinfo.output_height);
  r.channels = channels;
  r.data.resize(static_cast<std::size_t>(r.width) * r.height * channels);
  while (cinfo.output_scanline < cinfo.output_height) {
    JSAMPROW row = r.data.data() +
                   static_cast<std::size_t>(cinfo.output_scanline) * r.width * channels;
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  return r;
}

inline std::string lower_extension(const fs::path& p) {
  auto ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

inline Raster8 read_raster(const fs::path& path, int channels) {
  const auto ext = lower_extension(path);
  auto bytes = read_file_bytes(path);
  if (ext == ".png") return decode_png(bytes, channels, path.string());
  if (ext == ".jpg" || ext == ".jpeg") return decode_jpeg(bytes, channels, path.string());
  throw IoError("unsupported image format: " + path.string());
}

inline std::vector<std::uint8_t> encode_png(const std::uint8_t* pixels, int width, int height,
                                            int channels) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(width);
  image.height = static_cast<png_uint_32>(height);
  image.format = channels == 1 ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;
  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&image, nullptr, &size, 0, pixels, 0, nullptr)) {
    throw IoError(std::string("PNG encode failed: ") + image.message);
  }
  std::vector<std::uint8_t> out(size);
  if (!png_image_write_to_memory(&image, out.data(), &size, 0, pixels, 0, nullptr)) {
    throw IoError(std::string("PNG encode failed: ") + image.message);
  }
  out.resize(size);
  return out;
}

}  // namespace detail

inline bool is_supported_image(const fs::path& p) {
  const auto ext = detail::lower_extension(p);
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

// Raw 8-bit grey values, for format validation.
inline Raster8 read_gray8(const fs::path& path) { return detail::read_raster(path, 1); }

inline BinaryMask binarize(const Raster8& gray, std::uint8_t threshold = 128) {
  BinaryMask m(gray.width, gray.height);
  auto dst = m.data();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = gray.data[i] >= threshold ? 1 : 0;
  return m;
}

inline BinaryMask read_mask(const fs::path& path) { return binarize(read_gray8(path)); }

inline RgbImage read_rgb(const fs::path& path) {
  auto r = detail::read_raster(path, 3);
  RgbImage img(r.width, r.height);
  std::copy(r.data.begin(), r.data.end(), img.data().begin());
  return img;
}

inline std::vector<std::uint8_t> encode_mask_png(const BinaryMask& m) {
  std::vector<std::uint8_t> gray(m.size());
  auto src = m.data();
  for (std::size_t i = 0; i < gray.size(); ++i) gray[i] = src[i] ? 255 : 0;
  return detail::encode_png(gray.data(), m.width(), m.height(), 1);
}

inline std::vector<std::uint8_t> encode_rgb_png(const RgbImage& img) {
  return detail::encode_png(img.data().data(), img.width(), img.height(), 3);
}

inline void write_mask(const fs::path& path, const BinaryMask& m) {
  write_file_atomic(path, encode_mask_png(m));
}

inline void write_rgb(const fs::path& path, const RgbImage& img) {
  write_file_atomic(path, encode_rgb_png(img));
}

// Writes an arbitrary 8-bit grey raster (used to produce non-conforming files
// in tests and by external tooling).
inline void write_gray8(const fs::path& path, const Raster8& gray) {
  write_file_atomic(path, detail::encode_png(gray.data.data(), gray.width, gray.height, 1));
}

}  // namespace occbench

#endif  // OCCBENCH_IO_HPP_
