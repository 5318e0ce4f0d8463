#include "qmt/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>

#include "qmt/compression.hpp"
#include "qmt/error.hpp"
#include "qmt/kernel_io.hpp"
#include "qmt/morphology.hpp"
#include "qmt/pgm.hpp"
#include "qmt/transform.hpp"

namespace qmt::cli {

namespace {

const std::vector<std::string> kFamilies = {"goedel", "product", "lukasiewicz", "boolean"};
const std::vector<std::string> kPaddings = {"zero", "one", "replicate"};

/// "MxN" -> rows M, cols N.
GridShape parse_dims(const std::string& text, const char* flag) {
    const auto x = text.find('x');
    const auto fail = [&] {
        return ParameterError(std::string(flag) + " expects ROWSxCOLS, got '" + text + "'");
    };
    if (x == std::string::npos || x == 0 || x + 1 == text.size()) throw fail();
    try {
        std::size_t used = 0;
        const auto rows = std::stoul(text.substr(0, x), &used);
        if (used != x) throw fail();
        const auto cols = std::stoul(text.substr(x + 1), &used);
        if (used != text.size() - x - 1) throw fail();
        if (rows == 0 || cols == 0) throw fail();
        return GridShape{rows, cols};
    } catch (const std::logic_error&) {
        throw fail();
    }
}

KernelLevel parse_level(const std::string& name) {
    for (KernelLevel l : {KernelLevel::general, KernelLevel::coder, KernelLevel::normal, KernelLevel::strong,
                          KernelLevel::orthonormal}) {
        if (to_string(l) == name) return l;
    }
    throw ParameterError("unknown kernel level '" + name + "'");
}

double tolerance_from_env() {
    const char* raw = std::getenv("QIMG_TOLERANCE");
    if (raw == nullptr || *raw == '\0') return kDefaultTolerance;
    char* end = nullptr;
    const double tol = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(tol >= 0.0)) {
        throw ParameterError(std::string("QIMG_TOLERANCE must be a non-negative number, got '") + raw + "'");
    }
    return tol;
}

std::string fixed6(double v) {
    if (std::isinf(v)) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

Codebook load_codebook(const std::string& path, const std::string& family) {
    KernelFile file = read_kernel_file(path);
    if (!family.empty()) file.kernel = file.kernel.retagged(Quantale(parse_family(family)));
    return Codebook::from_file(file);
}

StructuringElement load_element(const std::string& name_or_path) {
    if (auto preset = preset_element(name_or_path)) return *preset;
    return read_structuring_element_file(name_or_path);
}

struct MorphArgs {
    std::string se;
    std::string family = "goedel";
    std::string padding = "zero";
    std::string in;
    std::string out;
};

void add_morph_command(CLI::App& app, const std::string& name, const std::string& description,
                       GridImage (*op)(const StructuringElement&, const GridImage&, const MorphConfig&),
                       std::function<void()>& action) {
    auto args = std::make_shared<MorphArgs>();
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("--se", args->se, "structuring element file or preset (cross3, square3, disk5)")
        ->required();
    sub->add_option("--quantale", args->family, "quantale family")
        ->check(CLI::IsMember(kFamilies))
        ->capture_default_str();
    sub->add_option("--pad", args->padding, "padding policy")
        ->check(CLI::IsMember(kPaddings))
        ->capture_default_str();
    sub->add_option("IN", args->in, "input PGM")->required();
    sub->add_option("OUT", args->out, "output PGM")->required();
    sub->callback([args, op, &action] {
        action = [args, op] {
            const MorphConfig cfg{Quantale(parse_family(args->family)), parse_padding(args->padding)};
            const StructuringElement se = load_element(args->se);
            const GridImage img = read_pgm(args->in);
            write_pgm(args->out, op(se, img, cfg));
        };
    });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantale-module transforms on greyscale images: fuzzy compression and morphology", "qimg"};
    app.require_subcommand(1);
    std::function<void()> action;

    // gen-codebook
    std::string builder;
    std::string size_text;
    std::string codes_text;
    std::string gen_family = "goedel";
    std::string gen_out;
    CLI::App* gen = app.add_subcommand("gen-codebook", "generate a codebook kernel file");
    gen->add_option("--builder", builder, "codebook construction")
        ->required()
        ->check(CLI::IsMember({"triangular", "block"}));
    gen->add_option("--size", size_text, "image size ROWSxCOLS")->required();
    gen->add_option("--codes", codes_text, "compressed size ROWSxCOLS")->required();
    gen->add_option("--quantale", gen_family, "quantale family")
        ->check(CLI::IsMember(kFamilies))
        ->capture_default_str();
    gen->add_option("--out", gen_out, "output QKERNEL file")->required();
    gen->callback([&] {
        action = [&] {
            const GridShape size = parse_dims(size_text, "--size");
            const GridShape codes = parse_dims(codes_text, "--codes");
            const Quantale q(parse_family(gen_family));
            const Codebook cb = builder == "triangular"
                                    ? build_triangular_codebook(q, size.rows, size.cols, codes.rows, codes.cols)
                                    : build_block_codebook(q, size.rows, size.cols, codes.rows, codes.cols);
            write_kernel_file(gen_out, cb.kernel(), cb.tag());
        };
    });

    // compress / reconstruct
    std::string codebook_path;
    std::string cb_family;
    std::string cb_in;
    std::string cb_out;
    for (const char* name : {"compress", "reconstruct"}) {
        const bool is_compress = std::string(name) == "compress";
        CLI::App* sub = app.add_subcommand(
            name, is_compress ? "compress an image with a codebook" : "reconstruct an image from its compressed form");
        sub->add_option("--codebook", codebook_path, "QKERNEL codebook file")->required();
        sub->add_option("--quantale", cb_family, "quantale family (defaults to the codebook's)")
            ->check(CLI::IsMember(kFamilies));
        sub->add_option("IN", cb_in, "input PGM")->required();
        sub->add_option("OUT", cb_out, "output PGM")->required();
        sub->callback([&, is_compress] {
            action = [&, is_compress] {
                const Codebook cb = load_codebook(codebook_path, cb_family);
                const GridImage img = read_pgm(cb_in);
                write_pgm(cb_out, is_compress ? compress(cb, img) : reconstruct(cb, img));
            };
        });
    }

    add_morph_command(app, "dilate", "dilate an image", &qmt::dilate, action);
    add_morph_command(app, "erode", "erode an image", &qmt::erode, action);
    add_morph_command(app, "open", "open an image (dilate after erode)", &qmt::open, action);
    add_morph_command(app, "close", "close an image (erode after dilate)", &qmt::close, action);

    // classify
    std::string kernel_path;
    CLI::App* cls = app.add_subcommand("classify", "report the coder class of a kernel");
    cls->add_option("--kernel", kernel_path, "QKERNEL file")->required();
    cls->callback([&] {
        action = [&] {
            const KernelFile file = read_kernel_file(kernel_path);
            const KernelClass kc = classify(file.kernel);
            out << to_string(kc.level) << "\n";
            out << "orthogonal " << (kc.orthogonal ? "true" : "false") << "\n";
            out << "epsilon";
            if (kc.epsilon) {
                for (std::size_t y = 0; y < kc.epsilon->size(); ++y) {
                    out << " (" << y << "," << (*kc.epsilon)[y] << ")";
                }
            } else {
                out << " none";
            }
            out << "\n";
        };
    });

    // metrics
    std::string metric_a;
    std::string metric_b;
    CLI::App* met = app.add_subcommand("metrics", "mean squared error and PSNR between two images");
    met->add_option("A", metric_a, "first PGM")->required();
    met->add_option("B", metric_b, "second PGM")->required();
    met->callback([&] {
        action = [&] {
            const GridImage a = read_pgm(metric_a);
            const GridImage b = read_pgm(metric_b);
            out << "mse " << fixed6(mse(a, b)) << ", psnr " << fixed6(psnr(a, b)) << "\n";
        };
    });

    // verify
    std::string verify_codebook;
    std::string verify_family;
    std::string verify_in;
    CLI::App* ver = app.add_subcommand(
        "verify", "check the compression round-trip laws of a codebook on an image (tolerance: QIMG_TOLERANCE)");
    ver->add_option("--codebook", verify_codebook, "QKERNEL codebook file")->required();
    ver->add_option("--quantale", verify_family, "quantale family (defaults to the codebook's)")
        ->check(CLI::IsMember(kFamilies));
    std::string verify_expect;
    ver->add_option("--expect", verify_expect, "fail unless the codebook classifies at least this level")
        ->check(CLI::IsMember({"general", "coder", "normal", "strong", "orthonormal"}));
    ver->add_option("IN", verify_in, "input PGM")->required();
    int verify_status = kExitOk;
    ver->callback([&] {
        action = [&] {
            const double tol = tolerance_from_env();
            const Codebook cb = load_codebook(verify_codebook, verify_family);
            const GridImage img = read_pgm(verify_in);
            const GridImage comp = compress(cb, img);
            const GridImage rec = reconstruct(cb, comp);
            const GridImage rec2 = reconstruct(cb, compress(cb, rec));
            const KernelClass kc = classify(cb.kernel());

            const auto report = [&](const std::string& name, bool ok) {
                out << name << " " << (ok ? "pass" : "fail") << "\n";
                if (!ok) verify_status = kExitCheckFailed;
            };
            out << "class " << to_string(kc.level) << "\n";
            out << "tolerance " << tol << "\n";
            if (!verify_expect.empty()) {
                report("expected " + verify_expect, kc.level >= parse_level(verify_expect));
            }
            report("extensive", leq(img.pixels(), rec.pixels(), tol));
            report("idempotent", approx_equal(rec.pixels(), rec2.pixels(), tol));
            if (kc.level >= KernelLevel::strong) {
                // The compress -> reconstruct -> compress pipeline through 8-bit files.
                const std::string code_bytes = format_pgm(comp);
                const GridImage rec_q = quantized(reconstruct(cb, parse_pgm(code_bytes)));
                report("fixed-point", format_pgm(compress(cb, rec_q)) == code_bytes);
            }
            out << "psnr " << fixed6(psnr(img, rec)) << "\n";
        };
    });

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (action) action();
    } catch (const IoError& e) {
        err << "qimg: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        err << "qimg: " << e.what() << "\n";
        return kExitInvalid;
    }
    return verify_status;
}

}  // namespace qmt::cli
