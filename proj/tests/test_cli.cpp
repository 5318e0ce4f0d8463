#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "qmt/cli.hpp"
#include "qmt/compression.hpp"
#include "qmt/kernel_io.hpp"
#include "qmt/pgm.hpp"
#include "support/generators.hpp"

namespace fs = std::filesystem;
using namespace qmt;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result qimg(std::vector<std::string> args) {
    args.insert(args.begin(), "qimg");
    std::ostringstream out;
    std::ostringstream err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = fs::temp_directory_path() /
                ("qimg-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string operator/(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

GridImage sample_image(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    qmt::testing::Rng rng(seed);
    return quantized(qmt::testing::random_image(Quantale(Family::goedel), rows, cols, rng));
}

}  // namespace

TEST_CASE("gen-codebook and classify") {
    TempDir dir;
    REQUIRE(qimg({"gen-codebook", "--builder", "triangular", "--size", "8x6", "--codes", "3x2", "--out",
                  dir / "tri.qk"})
                .status == cli::kExitOk);
    Result r = qimg({"classify", "--kernel", dir / "tri.qk"});
    CHECK(r.status == cli::kExitOk);
    CHECK(r.out.rfind("strong\n", 0) == 0);
    CHECK(r.out.find("orthogonal false\n") != std::string::npos);

    REQUIRE(qimg({"gen-codebook", "--builder", "block", "--size", "6x6", "--codes", "2x2", "--quantale",
                  "product", "--out", dir / "blk.qk"})
                .status == cli::kExitOk);
    r = qimg({"classify", "--kernel", dir / "blk.qk"});
    CHECK(r.out == "orthonormal\northogonal true\nepsilon (0,7) (1,10) (2,25) (3,28)\n");
    CHECK(read_kernel_file(dir / "blk.qk").builder->name == "block");
}

TEST_CASE("metrics") {
    TempDir dir;
    write_pgm(dir / "a.pgm", sample_image(5, 7, 1));
    Result r = qimg({"metrics", dir / "a.pgm", dir / "a.pgm"});
    CHECK(r.status == cli::kExitOk);
    CHECK(r.out == "mse 0.000000, psnr inf\n");
    write_pgm(dir / "zero.pgm", GridImage(2, 2));
    write_pgm(dir / "half.pgm", GridImage(2, 2, std::vector<double>(4, 0.5)));
    r = qimg({"metrics", dir / "zero.pgm", dir / "half.pgm"});
    // 0.5 is written as level 127, so the error is 127/255.
    CHECK(r.out == "mse 0.248043, psnr 6.054729\n");
}

TEST_CASE("morphology commands") {
    TempDir dir;
    write_pgm(dir / "zero.pgm", GridImage(6, 6));
    REQUIRE(qimg({"dilate", "--se", "cross3", dir / "zero.pgm", dir / "out.pgm"}).status == cli::kExitOk);
    CHECK(read_pgm(dir / "out.pgm") == GridImage(6, 6));

    const GridImage img = sample_image(9, 8, 2);
    write_pgm(dir / "img.pgm", img);
    spill(dir / "pair.qsel", "QSEL 1\n0 0 1\n0 1 0.5\n");
    for (const char* op : {"dilate", "erode", "open", "close"}) {
        for (const char* pad : {"zero", "one", "replicate"}) {
            REQUIRE(qimg({op, "--se", dir / "pair.qsel", "--quantale", "lukasiewicz", "--pad", pad,
                          dir / "img.pgm", dir / "out.pgm"})
                        .status == cli::kExitOk);
        }
    }
    const StructuringElement se = read_structuring_element_file(dir / "pair.qsel");
    const MorphConfig cfg{Quantale(Family::lukasiewicz), Padding::replicate};
    CHECK(read_pgm(dir / "out.pgm") == quantized(close(se, img, cfg)));
}

TEST_CASE("compress, reconstruct and determinism") {
    TempDir dir;
    const GridImage img = sample_image(16, 16, 3);
    write_pgm(dir / "img.pgm", img);
    for (const char* family : {"goedel", "product", "lukasiewicz"}) {
        REQUIRE(qimg({"gen-codebook", "--builder", "triangular", "--size", "16x16", "--codes", "4x4", "--quantale",
                      family, "--out", dir / "cb.qk"})
                    .status == cli::kExitOk);
        REQUIRE(qimg({"compress", "--codebook", dir / "cb.qk", dir / "img.pgm", dir / "c1.pgm"}).status ==
                cli::kExitOk);
        REQUIRE(qimg({"compress", "--codebook", dir / "cb.qk", dir / "img.pgm", dir / "c2.pgm"}).status ==
                cli::kExitOk);
        CHECK(slurp(dir / "c1.pgm") == slurp(dir / "c2.pgm"));
        REQUIRE(qimg({"reconstruct", "--codebook", dir / "cb.qk", dir / "c1.pgm", dir / "r.pgm"}).status ==
                cli::kExitOk);
        REQUIRE(qimg({"compress", "--codebook", dir / "cb.qk", dir / "r.pgm", dir / "c3.pgm"}).status ==
                cli::kExitOk);
        CHECK(slurp(dir / "c1.pgm") == slurp(dir / "c3.pgm"));
        const GridImage rec = read_pgm(dir / "r.pgm");
        CHECK(rec.rows() == 16);
        const Codebook cb = Codebook::from_file(read_kernel_file(dir / "cb.qk"));
        CHECK(rec == quantized(reconstruct(cb, read_pgm(dir / "c1.pgm"))));
    }
    // Retagging to another family changes the arithmetic but not the file.
    REQUIRE(qimg({"compress", "--codebook", dir / "cb.qk", "--quantale", "goedel", dir / "img.pgm",
                  dir / "g.pgm"})
                .status == cli::kExitOk);
}

TEST_CASE("verify and QIMG_TOLERANCE") {
    TempDir dir;
    write_pgm(dir / "img.pgm", sample_image(8, 8, 4));
    REQUIRE(qimg({"gen-codebook", "--builder", "block", "--size", "8x8", "--codes", "2x2", "--out", dir / "cb.qk"})
                .status == cli::kExitOk);
    ::unsetenv("QIMG_TOLERANCE");
    Result r = qimg({"verify", "--codebook", dir / "cb.qk", dir / "img.pgm"});
    CHECK(r.status == cli::kExitOk);
    CHECK(r.out.find("class orthonormal\ntolerance 1e-12\nextensive pass\nidempotent pass\nfixed-point pass\n") == 0);

    ::setenv("QIMG_TOLERANCE", "0.5", 1);
    r = qimg({"verify", "--codebook", dir / "cb.qk", dir / "img.pgm"});
    CHECK(r.out.find("tolerance 0.5\n") != std::string::npos);

    ::setenv("QIMG_TOLERANCE", "lots", 1);
    CHECK(qimg({"verify", "--codebook", dir / "cb.qk", dir / "img.pgm"}).status == cli::kExitInvalid);
    ::unsetenv("QIMG_TOLERANCE");

    // Laws hold exactly, so an explicit class expectation is what can fail.
    CHECK(qimg({"verify", "--codebook", dir / "cb.qk", "--expect", "strong", dir / "img.pgm"}).status ==
          cli::kExitOk);
    spill(dir / "flat.qk", "QKERNEL 1\n# builder custom 2 2 1 2\ngoedel 4 2\n1 1\n1 1\n0.5 0\n0 0.5\n");
    write_pgm(dir / "small.pgm", GridImage(2, 2, std::vector<double>{0.2, 0.4, 0.6, 0.8}));
    r = qimg({"verify", "--codebook", dir / "flat.qk", "--expect", "strong", dir / "small.pgm"});
    CHECK(r.status == cli::kExitCheckFailed);
    CHECK(r.out.find("class normal\n") == 0);
    CHECK(r.out.find("expected strong fail\n") != std::string::npos);
    CHECK(r.out.find("fixed-point") == std::string::npos);
    CHECK(qimg({"verify", "--codebook", dir / "flat.qk", "--expect", "coder", dir / "small.pgm"}).status ==
          cli::kExitOk);
    CHECK(qimg({"verify", "--codebook", dir / "flat.qk", "--expect", "great", dir / "small.pgm"}).status ==
          cli::kExitInvalid);
}

TEST_CASE("exit codes") {
    TempDir dir;
    CHECK(qimg({}).status == cli::kExitInvalid);
    CHECK(qimg({"frobnicate"}).status == cli::kExitInvalid);
    CHECK(qimg({"dilate", "--se", "cross3", "--pad", "mirror", "a", "b"}).status == cli::kExitInvalid);
    CHECK(qimg({"gen-codebook", "--builder", "triangular", "--size", "8by8", "--codes", "2x2", "--out",
                dir / "x.qk"})
              .status == cli::kExitInvalid);
    CHECK(qimg({"gen-codebook", "--builder", "triangular", "--size", "4x4", "--codes", "8x8", "--out",
                dir / "x.qk"})
              .status == cli::kExitInvalid);
    CHECK(qimg({"metrics", dir / "missing.pgm", dir / "missing.pgm"}).status == cli::kExitIo);
    CHECK(qimg({"dilate", "--se", dir / "missing.qsel", dir / "missing.pgm", dir / "o.pgm"}).status ==
          cli::kExitIo);

    spill(dir / "bad.pgm", "P5\n4 4\n255\n\x01");
    Result r = qimg({"metrics", dir / "bad.pgm", dir / "bad.pgm"});
    CHECK(r.status == cli::kExitInvalid);
    CHECK(r.err.find("at byte") != std::string::npos);

    write_pgm(dir / "a.pgm", GridImage(2, 2));
    write_pgm(dir / "b.pgm", GridImage(3, 2));
    CHECK(qimg({"metrics", dir / "a.pgm", dir / "b.pgm"}).status == cli::kExitInvalid);
    CHECK(qimg({"--help"}).status == cli::kExitOk);

    // Codebook lacking the builder comment.
    spill(dir / "plain.qk", "QKERNEL 1\ngoedel 4 1\n1\n1\n1\n1\n");
    CHECK(qimg({"compress", "--codebook", dir / "plain.qk", dir / "a.pgm", dir / "o.pgm"}).status ==
          cli::kExitInvalid);
}
