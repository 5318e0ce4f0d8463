#include "qmt/pgm.hpp"

#include <cctype>
#include <cmath>
#include <vector>

#include "qmt/error.hpp"
#include "qmt/kernel_io.hpp"

namespace qmt {

namespace {

constexpr int kMaxval = 255;

/// Header scanner: whitespace and '#' comments between tokens.
class HeaderReader {
public:
    explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

    void skip_separators() {
        while (pos_ < bytes_.size()) {
            const char c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    long integer(const char* what) {
        skip_separators();
        const std::size_t start = pos_;
        long v = 0;
        while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            v = v * 10 + (bytes_[pos_] - '0');
            if (v > 1'000'000'000) throw ParseError(std::string(what) + " too large", start);
            ++pos_;
        }
        if (pos_ == start) throw ParseError(std::string("expected ") + what, start);
        return v;
    }

    std::size_t pos() const noexcept { return pos_; }
    void advance(std::size_t n) noexcept { pos_ += n; }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

// Ties round down: a reconstruction that sits exactly half a level above the
// code grid must not push the recompressed code up a level.
std::uint8_t quantize(Value u) noexcept {
    return static_cast<std::uint8_t>(std::ceil(u.get() * kMaxval - 0.5));
}

GridImage quantized(const GridImage& img) {
    GridImage out(img.rows(), img.cols());
    for (std::size_t r = 0; r < img.rows(); ++r) {
        for (std::size_t c = 0; c < img.cols(); ++c) {
            out.set(r, c, Value::unchecked(quantize(img(r, c)) / static_cast<double>(kMaxval)));
        }
    }
    return out;
}

GridImage parse_pgm(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
        throw ParseError("not a PGM file (expected magic P2 or P5)", 0);
    }
    const bool binary = bytes[1] == '5';
    HeaderReader in(bytes);
    in.advance(2);
    const long width = in.integer("width");
    const long height = in.integer("height");
    in.skip_separators();
    const std::size_t maxval_at = in.pos();
    const long maxval = in.integer("maxval");
    if (width <= 0 || height <= 0) throw ParseError("image dimensions must be positive", maxval_at);
    if (maxval != kMaxval) throw ParseError("only maxval 255 is supported", maxval_at);

    const auto rows = static_cast<std::size_t>(height);
    const auto cols = static_cast<std::size_t>(width);
    std::vector<double> pixels(rows * cols);

    if (binary) {
        // Exactly one whitespace byte separates the header from the raster.
        if (in.pos() >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[in.pos()]))) {
            throw ParseError("expected whitespace after maxval", in.pos());
        }
        const std::size_t start = in.pos() + 1;
        if (bytes.size() - start < pixels.size()) {
            throw ParseError("short payload: need " + std::to_string(pixels.size()) + " bytes, have " +
                                 std::to_string(bytes.size() - start),
                             bytes.size());
        }
        for (std::size_t i = 0; i < pixels.size(); ++i) {
            pixels[i] = static_cast<unsigned char>(bytes[start + i]) / static_cast<double>(kMaxval);
        }
    } else {
        for (std::size_t i = 0; i < pixels.size(); ++i) {
            in.skip_separators();
            const std::size_t at = in.pos();
            const long v = in.integer("pixel value");
            if (v > kMaxval) throw ParseError("pixel value above maxval", at);
            pixels[i] = static_cast<double>(v) / kMaxval;
        }
    }
    return GridImage(rows, cols, pixels);
}

std::string format_pgm(const GridImage& img, PgmFormat format) {
    std::string out = format == PgmFormat::binary ? "P5\n" : "P2\n";
    out += std::to_string(img.cols()) + " " + std::to_string(img.rows()) + "\n255\n";
    if (format == PgmFormat::binary) {
        for (Value v : img.pixels().values()) out += static_cast<char>(quantize(v));
        return out;
    }
    for (std::size_t r = 0; r < img.rows(); ++r) {
        for (std::size_t c = 0; c < img.cols(); ++c) {
            if (c) out += ' ';
            out += std::to_string(quantize(img(r, c)));
        }
        out += '\n';
    }
    return out;
}

GridImage read_pgm(const std::filesystem::path& path) { return parse_pgm(slurp(path)); }

void write_pgm(const std::filesystem::path& path, const GridImage& img, PgmFormat format) {
    spill(path, format_pgm(img, format));
}

}  // namespace qmt
