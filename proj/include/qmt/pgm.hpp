#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "qmt/compression.hpp"

namespace qmt {

/// "P2" is ASCII greymap, "P5" binary. Only maxval 255 is accepted.
enum class PgmFormat { ascii, binary };

/// Grey level v in 0..255 becomes v/255.
GridImage parse_pgm(std::string_view bytes);
/// Value u is written as round(255 u), halves rounding down.
std::string format_pgm(const GridImage& img, PgmFormat format = PgmFormat::binary);

/// Throws IoError when the file cannot be read, ParseError on malformed content.
GridImage read_pgm(const std::filesystem::path& path);
void write_pgm(const std::filesystem::path& path, const GridImage& img,
               PgmFormat format = PgmFormat::binary);

/// The 8-bit level a value is written as: ceil(255 u - 1/2).
std::uint8_t quantize(Value u) noexcept;
/// Snap every pixel to the nearest multiple of 1/255, as a write/read cycle does.
GridImage quantized(const GridImage& img);

}  // namespace qmt
