#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "qmt/free_module.hpp"
#include "qmt/kernel_io.hpp"
#include "qmt/transform.hpp"

namespace qmt {

/// A rows x cols raster of values in [0,1], row-major.
class GridImage {
public:
    /// All-zero image.
    GridImage(std::size_t rows, std::size_t cols);
    /// Throws ShapeError on a length mismatch, DomainError on out-of-range pixels.
    GridImage(std::size_t rows, std::size_t cols, std::span<const double> pixels);
    /// Adopts a module element whose index set carries a grid shape.
    explicit GridImage(ModuleElement pixels);

    std::size_t rows() const noexcept { return pixels_.index().shape()->rows; }
    std::size_t cols() const noexcept { return pixels_.index().shape()->cols; }
    GridShape shape() const noexcept { return *pixels_.index().shape(); }

    Value operator()(std::size_t r, std::size_t c) const noexcept { return pixels_[r * cols() + c]; }
    void set(std::size_t r, std::size_t c, Value v) { pixels_.set(r * cols() + c, v); }

    const ModuleElement& pixels() const noexcept { return pixels_; }

    friend bool operator==(const GridImage&, const GridImage&) = default;

private:
    ModuleElement pixels_;
};

enum class CodebookBuilder { triangular, block, custom };

std::string_view to_string(CodebookBuilder b) noexcept;
/// Throws ParameterError on an unknown name.
CodebookBuilder parse_builder(std::string_view name);

/// A kernel from the (m x n) pixel grid to the (a x b) code grid.
class Codebook {
public:
    /// Throws ParameterError unless the kernel's index sets carry grid shapes
    /// with a <= m and b <= n.
    Codebook(Kernel kernel, CodebookBuilder builder);

    const Kernel& kernel() const noexcept { return kernel_; }
    CodebookBuilder builder() const noexcept { return builder_; }
    GridShape image_shape() const noexcept { return *kernel_.domain().shape(); }
    GridShape code_shape() const noexcept { return *kernel_.codomain().shape(); }

    BuilderTag tag() const;
    /// Rebuilds from a QKERNEL file; the builder comment is mandatory.
    static Codebook from_file(const KernelFile& file);

private:
    Kernel kernel_;
    CodebookBuilder builder_;
};

/// Separable triangular-bump codebook C((i,j),(h,k)) = A_h(i) * B_k(j). Node h
/// sits at round(h(m-1)/(a-1)); A_h is 1 at its own node and reaches 0 at the
/// neighbouring nodes, so the kernel is strong. Under the Boolean family each
/// entry becomes the indicator of a positive real entry.
/// Throws ParameterError unless 2 <= a <= m and 2 <= b <= n.
Codebook build_triangular_codebook(Quantale q, std::size_t m, std::size_t n, std::size_t a,
                                   std::size_t b);

/// The bump profiles A_0..A_{a-1} over 0..m-1 (row h is A_h).
std::vector<std::vector<double>> triangular_profiles(std::size_t m, std::size_t a);

/// Block codebook: the grid is split into a x b disjoint blocks; inside its block
/// a codeword weighs 1 at the block centre and decays linearly to 0.2 at the
/// farthest block pixel. Disjoint supports make it orthonormal. Under the
/// Boolean family the weights are 1 throughout the block.
/// Throws ParameterError unless 1 <= a <= m and 1 <= b <= n.
Codebook build_block_codebook(Quantale q, std::size_t m, std::size_t n, std::size_t a,
                              std::size_t b);

/// Floor of the block weights at the block boundary.
inline constexpr double kBlockBoundaryWeight = 0.2;

/// I'(h,k) = join over (i,j) of I(i,j) * C(i,j,h,k).
GridImage compress(const Codebook& cb, const GridImage& img);
/// I''(i,j) = meet over (h,k) of C(i,j,h,k) -> I'(h,k).
GridImage reconstruct(const Codebook& cb, const GridImage& compressed);

/// Mean squared difference on the [0,1] scale. Throws ShapeError.
double mse(const GridImage& a, const GridImage& b);
/// 10 log10(1/mse); +infinity when the images are identical.
double psnr(const GridImage& a, const GridImage& b);

}  // namespace qmt
