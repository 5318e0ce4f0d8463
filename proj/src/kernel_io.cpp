#include "qmt/kernel_io.hpp"

#include <charconv>
#include <optional>
#include <fstream>
#include <sstream>
#include <vector>

#include "qmt/error.hpp"
#include "text_scan.hpp"

namespace qmt {

namespace {

using detail::Line;
using detail::LineCursor;
using detail::Token;
using detail::tokenize;

std::size_t parse_count(const Token& t, const char* what) {
    const auto v = detail::parse_number<std::size_t>(t, what);
    if (v == 0) throw ParseError(std::string(what) + " must be positive", t.offset);
    return v;
}

double parse_value(const Token& t, const Quantale& q) {
    const double v = detail::parse_number<double>(t, "kernel value");
    if (!q.admits(v)) {
        throw ParseError("kernel value " + std::string(t.text) + " outside the " +
                             std::string(to_string(q.family())) + " carrier",
                         t.offset);
    }
    return v;
}

std::optional<BuilderTag> parse_builder_comment(const Line& line) {
    const std::size_t hash = line.text.find('#');
    const Line body{line.text.substr(hash + 1), line.offset + hash + 1};
    const auto tokens = tokenize(body);
    if (tokens.empty() || tokens[0].text != "builder") return std::nullopt;
    if (tokens.size() != 6) throw ParseError("builder comment needs: builder <name> <m> <n> <a> <b>", line.offset);
    return BuilderTag{std::string(tokens[1].text), parse_count(tokens[2], "m"),
                      parse_count(tokens[3], "n"), parse_count(tokens[4], "a"),
                      parse_count(tokens[5], "b")};
}

}  // namespace

std::string format_kernel(const Kernel& p, const std::optional<BuilderTag>& builder) {
    std::string out = "QKERNEL 1\n";
    if (builder) {
        out += "# builder " + builder->name + " " + std::to_string(builder->rows) + " " +
               std::to_string(builder->cols) + " " + std::to_string(builder->code_rows) + " " +
               std::to_string(builder->code_cols) + "\n";
    }
    out += std::string(to_string(p.quantale().family())) + " " + std::to_string(p.domain().size()) +
           " " + std::to_string(p.codomain().size()) + "\n";
    char buf[32];
    for (std::size_t x = 0; x < p.domain().size(); ++x) {
        const auto row = p.row(x);
        for (std::size_t y = 0; y < row.size(); ++y) {
            if (y) out += ' ';
            const auto res = std::to_chars(buf, buf + sizeof buf, row[y].get());
            out.append(buf, res.ptr);
        }
        out += '\n';
    }
    return out;
}

KernelFile parse_kernel(std::string_view text) {
    LineCursor cursor(text);
    std::optional<BuilderTag> builder;
    auto on_comment = [&](const Line& line) {
        if (auto tag = parse_builder_comment(line)) builder = std::move(tag);
    };

    const auto magic = cursor.next_content(on_comment);
    if (!magic) throw ParseError("empty kernel file", 0);
    const auto magic_tokens = tokenize(*magic);
    if (magic_tokens.size() != 2 || magic_tokens[0].text != "QKERNEL" || magic_tokens[1].text != "1") {
        throw ParseError("expected header 'QKERNEL 1'", magic->offset);
    }

    const auto dims = cursor.next_content(on_comment);
    if (!dims) throw ParseError("missing '<family> <|X|> <|Y|>' line", cursor.position());
    const auto dim_tokens = tokenize(*dims);
    if (dim_tokens.size() != 3) throw ParseError("expected '<family> <|X|> <|Y|>'", dims->offset);
    Family family{};
    try {
        family = parse_family(dim_tokens[0].text);
    } catch (const ParameterError& e) {
        throw ParseError(e.what(), dim_tokens[0].offset);
    }
    const Quantale q(family);
    const std::size_t nx = parse_count(dim_tokens[1], "|X|");
    const std::size_t ny = parse_count(dim_tokens[2], "|Y|");

    std::vector<double> values;
    values.reserve(nx * ny);
    for (std::size_t x = 0; x < nx; ++x) {
        const auto line = cursor.next_content(on_comment);
        if (!line) {
            throw ParseError("kernel has " + std::to_string(x) + " rows, expected " + std::to_string(nx),
                             cursor.position());
        }
        const auto tokens = tokenize(*line);
        if (tokens.size() != ny) {
            throw ParseError("row " + std::to_string(x) + " has " + std::to_string(tokens.size()) +
                                 " values, expected " + std::to_string(ny),
                             line->offset);
        }
        for (const Token& t : tokens) values.push_back(parse_value(t, q));
    }
    if (const auto extra = cursor.next_content(on_comment)) {
        throw ParseError("trailing content after kernel rows", extra->offset);
    }

    IndexSet domain(nx);
    IndexSet codomain(ny);
    if (builder) {
        if (builder->rows * builder->cols != nx || builder->code_rows * builder->code_cols != ny) {
            throw ParseError("builder shape does not match kernel dimensions", 0);
        }
        domain = IndexSet(GridShape{builder->rows, builder->cols});
        codomain = IndexSet(GridShape{builder->code_rows, builder->code_cols});
    }
    return KernelFile{Kernel(q, domain, codomain, values), std::move(builder)};
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("error reading '" + path.string() + "'");
    return std::move(ss).str();
}

void spill(const std::filesystem::path& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("error writing '" + path.string() + "'");
}

void write_kernel_file(const std::filesystem::path& path, const Kernel& p,
                       const std::optional<BuilderTag>& builder) {
    spill(path, format_kernel(p, builder));
}

KernelFile read_kernel_file(const std::filesystem::path& path) { return parse_kernel(slurp(path)); }

}  // namespace qmt
