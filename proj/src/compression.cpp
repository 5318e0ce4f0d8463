#include "qmt/compression.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qmt/error.hpp"

namespace qmt {

GridImage::GridImage(std::size_t rows, std::size_t cols)
    : pixels_(IndexSet(GridShape{rows, cols})) {}

GridImage::GridImage(std::size_t rows, std::size_t cols, std::span<const double> pixels)
    : pixels_(IndexSet(GridShape{rows, cols}), pixels) {}

GridImage::GridImage(ModuleElement pixels) : pixels_(std::move(pixels)) {
    if (!pixels_.index().shape()) throw ShapeError("image pixels need a grid-shaped index set");
}

std::string_view to_string(CodebookBuilder b) noexcept {
    switch (b) {
        case CodebookBuilder::triangular:
            return "triangular";
        case CodebookBuilder::block:
            return "block";
        case CodebookBuilder::custom:
            return "custom";
    }
    return "unknown";
}

CodebookBuilder parse_builder(std::string_view name) {
    for (auto b : {CodebookBuilder::triangular, CodebookBuilder::block, CodebookBuilder::custom}) {
        if (name == to_string(b)) return b;
    }
    throw ParameterError("unknown codebook builder '" + std::string(name) + "'");
}

Codebook::Codebook(Kernel kernel, CodebookBuilder builder)
    : kernel_(std::move(kernel)), builder_(builder) {
    const auto& in = kernel_.domain().shape();
    const auto& out = kernel_.codomain().shape();
    if (!in || !out) throw ParameterError("codebook kernel needs grid-shaped index sets");
    if (out->rows > in->rows || out->cols > in->cols) {
        throw ParameterError("codebook needs a <= m and b <= n");
    }
}

BuilderTag Codebook::tag() const {
    return BuilderTag{std::string(to_string(builder_)), image_shape().rows, image_shape().cols,
                      code_shape().rows, code_shape().cols};
}

Codebook Codebook::from_file(const KernelFile& file) {
    if (!file.builder) throw ParameterError("kernel file has no '# builder' line; not a codebook");
    return Codebook(file.kernel, parse_builder(file.builder->name));
}

namespace {

void check_dims(std::size_t m, std::size_t n, std::size_t a, std::size_t b, std::size_t min_codes) {
    if (a < min_codes || b < min_codes || a > m || b > n) {
        throw ParameterError("codebook needs " + std::to_string(min_codes) + " <= a <= m and " +
                             std::to_string(min_codes) + " <= b <= n (got m=" + std::to_string(m) +
                             " n=" + std::to_string(n) + " a=" + std::to_string(a) +
                             " b=" + std::to_string(b) + ")");
    }
}

/// round-half-up of h(m-1)/(a-1), in integers.
std::size_t node_position(std::size_t h, std::size_t m, std::size_t a) {
    return (2 * h * (m - 1) + (a - 1)) / (2 * (a - 1));
}

Kernel separable_kernel(Quantale q, std::size_t m, std::size_t n,
                        const std::vector<std::vector<double>>& row_profiles,
                        const std::vector<std::vector<double>>& col_profiles) {
    const std::size_t a = row_profiles.size();
    const std::size_t b = col_profiles.size();
    Kernel k(q, IndexSet(GridShape{m, n}), IndexSet(GridShape{a, b}));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t h = 0; h < a; ++h) {
                const double ri = row_profiles[h][i];
                if (ri == 0.0) continue;
                for (std::size_t kk = 0; kk < b; ++kk) {
                    double v = ri * col_profiles[kk][j];
                    if (q.is_boolean()) v = v > 0.0 ? 1.0 : 0.0;
                    k.set(i * n + j, h * b + kk, Value::unchecked(v));
                }
            }
        }
    }
    return k;
}

}  // namespace

std::vector<std::vector<double>> triangular_profiles(std::size_t m, std::size_t a) {
    if (a < 2 || a > m) throw ParameterError("triangular profile needs 2 <= a <= m");
    std::vector<std::size_t> nodes(a);
    for (std::size_t h = 0; h < a; ++h) nodes[h] = node_position(h, m, a);

    std::vector<std::vector<double>> out(a, std::vector<double>(m, 0.0));
    for (std::size_t h = 0; h < a; ++h) out[h][nodes[h]] = 1.0;
    // Between two nodes the falling and rising sides sum to exactly 1: the larger
    // side is rounded and the smaller one recovered as 1 - larger, which is exact.
    for (std::size_t h = 0; h + 1 < a; ++h) {
        const std::size_t lo = nodes[h];
        const std::size_t hi = nodes[h + 1];
        for (std::size_t i = lo + 1; i < hi; ++i) {
            const std::size_t rise = i - lo;
            const std::size_t fall = hi - i;
            const double larger = static_cast<double>(std::max(rise, fall)) / static_cast<double>(hi - lo);
            const double smaller = 1.0 - larger;
            out[h][i] = fall >= rise ? larger : smaller;
            out[h + 1][i] = fall >= rise ? smaller : larger;
        }
    }
    return out;
}

Codebook build_triangular_codebook(Quantale q, std::size_t m, std::size_t n, std::size_t a,
                                   std::size_t b) {
    check_dims(m, n, a, b, 2);
    return Codebook(separable_kernel(q, m, n, triangular_profiles(m, a), triangular_profiles(n, b)),
                    CodebookBuilder::triangular);
}

namespace {

struct Band {
    std::size_t begin;
    std::size_t end;
    std::size_t centre;
    std::size_t reach;  // largest distance from the centre to a band member
};

std::vector<Band> split_bands(std::size_t length, std::size_t parts) {
    std::vector<Band> out(parts);
    for (std::size_t h = 0; h < parts; ++h) {
        Band& band = out[h];
        band.begin = h * length / parts;
        band.end = (h + 1) * length / parts;
        band.centre = band.begin + (band.end - band.begin - 1) / 2;
        band.reach = band.end - 1 - band.centre;
    }
    return out;
}

}  // namespace

Codebook build_block_codebook(Quantale q, std::size_t m, std::size_t n, std::size_t a,
                              std::size_t b) {
    check_dims(m, n, a, b, 1);
    const auto row_bands = split_bands(m, a);
    const auto col_bands = split_bands(n, b);

    Kernel k(q, IndexSet(GridShape{m, n}), IndexSet(GridShape{a, b}));
    for (std::size_t h = 0; h < a; ++h) {
        const Band& rb = row_bands[h];
        for (std::size_t kk = 0; kk < b; ++kk) {
            const Band& cb = col_bands[kk];
            for (std::size_t i = rb.begin; i < rb.end; ++i) {
                for (std::size_t j = cb.begin; j < cb.end; ++j) {
                    const auto dist = [](std::size_t p, const Band& band) {
                        if (band.reach == 0) return 0.0;
                        const std::size_t d = p > band.centre ? p - band.centre : band.centre - p;
                        return static_cast<double>(d) / static_cast<double>(band.reach);
                    };
                    const double t = std::max(dist(i, rb), dist(j, cb));
                    double w = 1.0 - (1.0 - kBlockBoundaryWeight) * t;
                    if (q.is_boolean()) w = 1.0;
                    k.set(i * n + j, h * b + kk, Value::unchecked(w));
                }
            }
        }
    }
    return Codebook(std::move(k), CodebookBuilder::block);
}

GridImage compress(const Codebook& cb, const GridImage& img) {
    if (!(img.shape() == cb.image_shape())) throw ShapeError("image shape does not match codebook");
    return GridImage(forward(cb.kernel(), img.pixels()));
}

GridImage reconstruct(const Codebook& cb, const GridImage& compressed) {
    if (!(compressed.shape() == cb.code_shape())) {
        throw ShapeError("compressed image shape does not match codebook");
    }
    return GridImage(inverse(cb.kernel(), compressed.pixels()));
}

double mse(const GridImage& a, const GridImage& b) {
    if (!(a.shape() == b.shape())) throw ShapeError("mse: image shapes differ");
    double sum = 0.0;
    const auto pa = a.pixels().values();
    const auto pb = b.pixels().values();
    for (std::size_t i = 0; i < pa.size(); ++i) {
        const double d = pa[i].get() - pb[i].get();
        sum += d * d;
    }
    return sum / static_cast<double>(pa.size());
}

double psnr(const GridImage& a, const GridImage& b) {
    const double e = mse(a, b);
    if (e == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(1.0 / e);
}

}  // namespace qmt
