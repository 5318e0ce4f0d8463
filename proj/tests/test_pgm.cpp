#include <doctest.h>

#include <string>

#include "qmt/error.hpp"
#include "qmt/pgm.hpp"
#include "support/generators.hpp"

using namespace qmt;

namespace {

std::size_t offset_of(const std::string& bytes) {
    try {
        parse_pgm(bytes);
    } catch (const ParseError& e) {
        return e.offset();
    }
    FAIL("no ParseError");
    return 0;
}

}  // namespace

TEST_CASE("grey levels map to v/255") {
    const GridImage img = parse_pgm(std::string("P5\n3 1\n255\n") + '\xff' + '\x00' + '\x80');
    CHECK(img.rows() == 1);
    CHECK(img.cols() == 3);
    CHECK(img(0, 0).get() == 1.0);
    CHECK(img(0, 1).get() == 0.0);
    CHECK(img(0, 2).get() == 128.0 / 255.0);
    CHECK(quantize(Value(128.0 / 255.0)) == 128);
    CHECK(quantize(Value(0.5)) == 127);
    CHECK(quantize(Value(128.5 / 255.0)) == 128);
    CHECK(quantize(Value(128.51 / 255.0)) == 129);
    CHECK(quantize(Value(0.0)) == 0);
    CHECK(quantize(Value(1.0)) == 255);
}

TEST_CASE("P2 parsing with comments") {
    const GridImage img = parse_pgm("P2\n# made by hand\n2 2\n255\n0 51\n# mid\n102 255\n");
    CHECK(img.rows() == 2);
    CHECK(img.pixels().to_doubles() == std::vector<double>{0.0, 0.2, 0.4, 1.0});
    CHECK(format_pgm(img, PgmFormat::ascii) == "P2\n2 2\n255\n0 51\n102 255\n");
}

TEST_CASE("P5 bytes survive a parse/format cycle") {
    qmt::testing::Rng rng(81);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t rows = rng.between(std::size_t{1}, std::size_t{9});
        const std::size_t cols = rng.between(std::size_t{1}, std::size_t{9});
        std::string bytes = "P5\n" + std::to_string(cols) + " " + std::to_string(rows) + "\n255\n";
        for (std::size_t i = 0; i < rows * cols; ++i) {
            bytes += static_cast<char>(rng.between(std::size_t{0}, std::size_t{255}));
        }
        const GridImage img = parse_pgm(bytes);
        CHECK(format_pgm(img) == bytes);
        CHECK(parse_pgm(format_pgm(img, PgmFormat::ascii)) == img);
        CHECK(quantized(img) == img);
    }
}

TEST_CASE("quantized snaps to the written levels") {
    const GridImage img(1, 3, std::vector<double>{0.3, 0.001, 0.999});
    const GridImage q = quantized(img);
    CHECK(q == parse_pgm(format_pgm(img)));
    CHECK(q(0, 1).get() == 0.0);
    CHECK(q(0, 2).get() == 1.0);
}

TEST_CASE("PGM errors carry offsets") {
    CHECK(offset_of("P6\n1 1\n255\n\x01") == 0);
    CHECK(offset_of("") == 0);
    CHECK(offset_of("P2\n1 1\n100\n0\n") == 7);
    CHECK(offset_of("P2\nx 1\n255\n0\n") == 3);
    CHECK(offset_of("P2\n2 1\n255\n0 256\n") == 13);
    CHECK(offset_of("P2\n2 1\n255\n0\n") == 13);
    CHECK(offset_of("P2\n0 1\n255\n") == 7);
    const std::string shortp = "P5\n2 2\n255\n\x01\x02";
    CHECK(offset_of(shortp) == shortp.size());
    CHECK(offset_of("P5\n1 1\n255") == 10);
    CHECK_THROWS_AS(read_pgm("/nonexistent/dir/x.pgm"), IoError);
}
