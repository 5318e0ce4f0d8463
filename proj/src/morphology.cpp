#include "qmt/morphology.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "qmt/error.hpp"
#include "qmt/kernel_io.hpp"
#include "text_scan.hpp"

namespace qmt {

StructuringElement::StructuringElement(std::map<Offset, Value> entries)
    : entries_(std::move(entries)) {
    if (entries_.empty()) throw ParameterError("structuring element must have at least one entry");
}

Value StructuringElement::at(Offset d) const noexcept {
    const auto it = entries_.find(d);
    return it == entries_.end() ? Quantale::bottom() : it->second;
}

bool StructuringElement::is_binary() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) {
        return e.second.get() == 0.0 || e.second.get() == 1.0;
    });
}

StructuringElement reflect(const StructuringElement& a) {
    std::map<Offset, Value> out;
    for (const auto& [d, v] : a.entries()) out.emplace(Offset{-d.dy, -d.dx}, v);
    return StructuringElement(std::move(out));
}

std::optional<StructuringElement> preset_element(std::string_view name) {
    int radius = 0;
    int limit = 0;
    if (name == "cross3") {
        radius = 1;
        limit = 1;
    } else if (name == "square3") {
        radius = 1;
        limit = 2;
    } else if (name == "disk5") {
        radius = 2;
        limit = 5;
    } else {
        return std::nullopt;
    }
    std::map<Offset, Value> entries;
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            if (dy * dy + dx * dx <= limit) entries.emplace(Offset{dy, dx}, Quantale::unit());
        }
    }
    return StructuringElement(std::move(entries));
}

std::string_view to_string(Padding p) noexcept {
    switch (p) {
        case Padding::zero:
            return "zero";
        case Padding::one:
            return "one";
        case Padding::replicate:
            return "replicate";
    }
    return "unknown";
}

Padding parse_padding(std::string_view name) {
    for (Padding p : {Padding::zero, Padding::one, Padding::replicate}) {
        if (name == to_string(p)) return p;
    }
    throw ParameterError("unknown padding '" + std::string(name) +
                         "' (expected zero, one or replicate)");
}

namespace {

void require_binary_inputs(const StructuringElement& a, const GridImage& img, const Quantale& q) {
    if (!q.is_boolean()) return;
    if (!a.is_binary()) throw DomainError("boolean morphology needs a {0,1}-valued structuring element");
    require_carrier(q, img.pixels());
}

/// Pixel value at a possibly out-of-raster position under the padding policy.
double sample(const GridImage& img, long r, long c, Padding padding) {
    const long rows = static_cast<long>(img.rows());
    const long cols = static_cast<long>(img.cols());
    if (r >= 0 && r < rows && c >= 0 && c < cols) {
        return img(static_cast<std::size_t>(r), static_cast<std::size_t>(c)).get();
    }
    switch (padding) {
        case Padding::zero:
            return 0.0;
        case Padding::one:
            return 1.0;
        case Padding::replicate:
            break;
    }
    r = std::clamp(r, 0L, rows - 1);
    c = std::clamp(c, 0L, cols - 1);
    return img(static_cast<std::size_t>(r), static_cast<std::size_t>(c)).get();
}

/// Support entries with a non-zero weight; zero weights never affect either operator.
std::vector<std::pair<Offset, double>> active_entries(const StructuringElement& a) {
    std::vector<std::pair<Offset, double>> out;
    for (const auto& [d, v] : a.entries()) {
        if (v.get() > 0.0) out.emplace_back(d, v.get());
    }
    return out;
}

}  // namespace

GridImage dilate(const StructuringElement& a, const GridImage& img, const MorphConfig& cfg) {
    require_binary_inputs(a, img, cfg.q);
    const auto support = active_entries(a);
    GridImage out(img.rows(), img.cols());
    for (std::size_t r = 0; r < img.rows(); ++r) {
        for (std::size_t c = 0; c < img.cols(); ++c) {
            double acc = 0.0;
            for (const auto& [d, w] : support) {
                const double v = sample(img, static_cast<long>(r) - d.dy, static_cast<long>(c) - d.dx,
                                        cfg.padding);
                acc = std::max(acc, cfg.q.mul_raw(w, v));
            }
            out.set(r, c, Value::unchecked(acc));
        }
    }
    return out;
}

GridImage erode(const StructuringElement& a, const GridImage& img, const MorphConfig& cfg) {
    require_binary_inputs(a, img, cfg.q);
    const auto support = active_entries(a);
    GridImage out(img.rows(), img.cols());
    for (std::size_t r = 0; r < img.rows(); ++r) {
        for (std::size_t c = 0; c < img.cols(); ++c) {
            double acc = 1.0;
            for (const auto& [d, w] : support) {
                const double v = sample(img, static_cast<long>(r) + d.dy, static_cast<long>(c) + d.dx,
                                        cfg.padding);
                acc = std::min(acc, cfg.q.residuum_raw(w, v));
            }
            out.set(r, c, Value::unchecked(acc));
        }
    }
    return out;
}

GridImage open(const StructuringElement& a, const GridImage& img, const MorphConfig& cfg) {
    return dilate(a, erode(a, img, cfg), cfg);
}

GridImage close(const StructuringElement& a, const GridImage& img, const MorphConfig& cfg) {
    return erode(a, dilate(a, img, cfg), cfg);
}

Kernel toeplitz_kernel(const StructuringElement& a, std::size_t rows, std::size_t cols,
                       const MorphConfig& cfg) {
    if (cfg.q.is_boolean() && !a.is_binary()) {
        throw DomainError("boolean morphology needs a {0,1}-valued structuring element");
    }
    const IndexSet grid(GridShape{rows, cols});
    Kernel p(cfg.q, grid, grid);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            for (const auto& [d, v] : a.entries()) {
                const long yr = static_cast<long>(r) + d.dy;
                const long yc = static_cast<long>(c) + d.dx;
                if (yr < 0 || yc < 0 || yr >= static_cast<long>(rows) || yc >= static_cast<long>(cols)) {
                    continue;
                }
                p.set(r * cols + c, static_cast<std::size_t>(yr) * cols + static_cast<std::size_t>(yc), v);
            }
        }
    }
    return p;
}

std::size_t reach(const StructuringElement& a) noexcept {
    int r = 0;
    for (const auto& [d, v] : a.entries()) r = std::max({r, std::abs(d.dy), std::abs(d.dx)});
    return static_cast<std::size_t>(r);
}

GridImage embed(const GridImage& img, std::size_t margin, Padding padding) {
    GridImage out(img.rows() + 2 * margin, img.cols() + 2 * margin);
    const long m = static_cast<long>(margin);
    for (std::size_t r = 0; r < out.rows(); ++r) {
        for (std::size_t c = 0; c < out.cols(); ++c) {
            out.set(r, c, Value::unchecked(sample(img, static_cast<long>(r) - m, static_cast<long>(c) - m, padding)));
        }
    }
    return out;
}

GridImage crop(const GridImage& img, std::size_t margin) {
    if (img.rows() <= 2 * margin || img.cols() <= 2 * margin) {
        throw ShapeError("crop margin " + std::to_string(margin) + " leaves no pixels");
    }
    GridImage out(img.rows() - 2 * margin, img.cols() - 2 * margin);
    for (std::size_t r = 0; r < out.rows(); ++r) {
        for (std::size_t c = 0; c < out.cols(); ++c) out.set(r, c, img(r + margin, c + margin));
    }
    return out;
}

namespace {

std::vector<Offset> binary_support(const StructuringElement& a, const GridImage& img) {
    if (!a.is_binary()) throw DomainError("binary morphology needs a {0,1}-valued structuring element");
    require_carrier(Quantale(Family::boolean), img.pixels());
    std::vector<Offset> out;
    for (const auto& [d, v] : a.entries()) {
        if (v == Quantale::unit()) out.push_back(d);
    }
    return out;
}

bool inside(const GridImage& img, long r, long c) {
    return r >= 0 && c >= 0 && r < static_cast<long>(img.rows()) && c < static_cast<long>(img.cols());
}

}  // namespace

GridImage binary_brute_dilate(const StructuringElement& a, const GridImage& img) {
    const auto set = binary_support(a, img);
    GridImage out(img.rows(), img.cols());
    for (std::size_t r = 0; r < img.rows(); ++r) {
        for (std::size_t c = 0; c < img.cols(); ++c) {
            if (img(r, c) != Quantale::unit()) continue;
            for (Offset d : set) {
                const long yr = static_cast<long>(r) + d.dy;
                const long yc = static_cast<long>(c) + d.dx;
                if (inside(img, yr, yc)) {
                    out.set(static_cast<std::size_t>(yr), static_cast<std::size_t>(yc), Quantale::unit());
                }
            }
        }
    }
    return out;
}

GridImage binary_brute_erode(const StructuringElement& a, const GridImage& img) {
    const auto set = binary_support(a, img);
    GridImage out(img.rows(), img.cols());
    for (std::size_t r = 0; r < img.rows(); ++r) {
        for (std::size_t c = 0; c < img.cols(); ++c) {
            const bool contained = std::all_of(set.begin(), set.end(), [&](Offset d) {
                const long yr = static_cast<long>(r) + d.dy;
                const long yc = static_cast<long>(c) + d.dx;
                return inside(img, yr, yc) &&
                       img(static_cast<std::size_t>(yr), static_cast<std::size_t>(yc)) == Quantale::unit();
            });
            if (contained) out.set(r, c, Quantale::unit());
        }
    }
    return out;
}

GridImage translate(const GridImage& img, int dy, int dx) {
    GridImage out(img.rows(), img.cols());
    for (std::size_t r = 0; r < img.rows(); ++r) {
        for (std::size_t c = 0; c < img.cols(); ++c) {
            const long sr = static_cast<long>(r) - dy;
            const long sc = static_cast<long>(c) - dx;
            if (inside(img, sr, sc)) {
                out.set(r, c, img(static_cast<std::size_t>(sr), static_cast<std::size_t>(sc)));
            }
        }
    }
    return out;
}

std::string format_structuring_element(const StructuringElement& a) {
    std::string out = "QSEL 1\n";
    char buf[32];
    for (const auto& [d, v] : a.entries()) {
        const auto res = std::to_chars(buf, buf + sizeof buf, v.get());
        out += std::to_string(d.dy) + " " + std::to_string(d.dx) + " " + std::string(buf, res.ptr) + "\n";
    }
    return out;
}

StructuringElement parse_structuring_element(std::string_view text) {
    detail::LineCursor cursor(text);
    const auto magic = cursor.next_content();
    if (!magic) throw ParseError("empty structuring element file", 0);
    const auto head = detail::tokenize(*magic);
    if (head.size() != 2 || head[0].text != "QSEL" || head[1].text != "1") {
        throw ParseError("expected header 'QSEL 1'", magic->offset);
    }
    std::map<Offset, Value> entries;
    while (const auto line = cursor.next_content()) {
        const auto tokens = detail::tokenize(*line);
        if (tokens.size() != 3) throw ParseError("expected '<dy> <dx> <value>'", line->offset);
        const Offset d{detail::parse_number<int>(tokens[0], "offset"),
                       detail::parse_number<int>(tokens[1], "offset")};
        const double v = detail::parse_number<double>(tokens[2], "value");
        if (!(v >= 0.0 && v <= 1.0)) throw ParseError("value outside [0,1]", tokens[2].offset);
        if (!entries.emplace(d, Value(v)).second) {
            throw ParseError("duplicate offset", line->offset);
        }
    }
    if (entries.empty()) throw ParseError("structuring element has no entries", cursor.position());
    return StructuringElement(std::move(entries));
}

StructuringElement read_structuring_element_file(const std::filesystem::path& path) {
    return parse_structuring_element(slurp(path));
}

}  // namespace qmt
