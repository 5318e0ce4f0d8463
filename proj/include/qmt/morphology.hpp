#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qmt/compression.hpp"
#include "qmt/quantale.hpp"
#include "qmt/transform.hpp"

namespace qmt {

/// A (row, col) displacement on the integer lattice.
struct Offset {
    int dy = 0;
    int dx = 0;

    friend auto operator<=>(const Offset&, const Offset&) = default;
};

/// A fuzzy structuring element: finitely many offsets with their weights.
class StructuringElement {
public:
    /// Throws ParameterError when `entries` is empty.
    explicit StructuringElement(std::map<Offset, Value> entries);

    const std::map<Offset, Value>& entries() const noexcept { return entries_; }
    /// Weight at `d`; 0 outside the support.
    Value at(Offset d) const noexcept;
    bool is_binary() const noexcept;

    friend bool operator==(const StructuringElement&, const StructuringElement&) = default;

private:
    std::map<Offset, Value> entries_;
};

/// Mirror through the origin: the entry at (dy,dx) moves to (-dy,-dx).
StructuringElement reflect(const StructuringElement& a);

/// Named all-ones elements: cross3 (origin and its 4-neighbours), square3
/// (full 3x3), disk5 (the 5x5 window minus its four corners, dy^2+dx^2 <= 5).
std::optional<StructuringElement> preset_element(std::string_view name);

/// How pixels outside the raster are valued.
enum class Padding { zero, one, replicate };

std::string_view to_string(Padding p) noexcept;
/// Throws ParameterError on an unknown name.
Padding parse_padding(std::string_view name);

struct MorphConfig {
    Quantale q{Family::goedel};
    Padding padding = Padding::zero;
};

/// out(y) = join over offsets d of mul(A(d), in(y - d)).
GridImage dilate(const StructuringElement& a, const GridImage& img, const MorphConfig& cfg);
/// out(x) = meet over offsets d with A(d) > 0 of residuum(A(d), in(x + d)).
GridImage erode(const StructuringElement& a, const GridImage& img, const MorphConfig& cfg);
/// dilate(erode(img)).
GridImage open(const StructuringElement& a, const GridImage& img, const MorphConfig& cfg);
/// erode(dilate(img)).
GridImage close(const StructuringElement& a, const GridImage& img, const MorphConfig& cfg);

/// Dense kernel over the rows x cols grid with p(x, y) = A(y - x). Reference
/// path only: on an image embedded with a margin of at least reach(A), its
/// forward/inverse cropped back to the image are dilate/erode under the same padding.
Kernel toeplitz_kernel(const StructuringElement& a, std::size_t rows, std::size_t cols,
                       const MorphConfig& cfg);

/// Largest |dy| or |dx| over the support.
std::size_t reach(const StructuringElement& a) noexcept;
/// The image surrounded by a band of `margin` pixels valued per the padding policy.
GridImage embed(const GridImage& img, std::size_t margin, Padding padding);
/// Inverse of embed: drops a band of `margin` pixels. Throws ShapeError if nothing is left.
GridImage crop(const GridImage& img, std::size_t margin);

// Set-theoretic binary morphology, evaluated literally with nothing outside the
// raster: the union of translates A + x over the foreground, and the set of y
// with A + y inside the foreground. Test oracles; both throw DomainError on
// non-binary input.
GridImage binary_brute_dilate(const StructuringElement& a, const GridImage& img);
GridImage binary_brute_erode(const StructuringElement& a, const GridImage& img);

/// tau_h: shifts content by (dy, dx); vacated pixels become 0.
GridImage translate(const GridImage& img, int dy, int dx);

// QSEL text format:
//
//   QSEL 1
//   <dy> <dx> <value>      one line per entry
//
// '#' starts a comment line.

std::string format_structuring_element(const StructuringElement& a);
/// Throws ParseError with a byte offset on malformed input.
StructuringElement parse_structuring_element(std::string_view text);
StructuringElement read_structuring_element_file(const std::filesystem::path& path);

}  // namespace qmt
