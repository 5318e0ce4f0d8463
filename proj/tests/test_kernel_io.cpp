#include <doctest.h>

#include <string>

#include "qmt/error.hpp"
#include "qmt/kernel_io.hpp"
#include "support/generators.hpp"

using namespace qmt;

TEST_CASE("QKERNEL layout") {
    const Kernel p(Quantale(Family::lukasiewicz), IndexSet(2), IndexSet(3),
                   std::vector<double>{1, 0.5, 0, 0.25, 0.125, 1});
    CHECK(format_kernel(p) == "QKERNEL 1\nlukasiewicz 2 3\n1 0.5 0\n0.25 0.125 1\n");
    const BuilderTag tag{"custom", 1, 2, 1, 3};
    CHECK(format_kernel(p, tag) == "QKERNEL 1\n# builder custom 1 2 1 3\nlukasiewicz 2 3\n1 0.5 0\n0.25 0.125 1\n");
}

TEST_CASE("QKERNEL parse is whitespace tolerant and keeps the builder shape") {
    const KernelFile f = parse_kernel(
        "QKERNEL 1\n# builder block 2 2 1 1\n# other comment\n  goedel\t4  1 \r\n1\n 0.5\n0.2   \n\n0\n");
    CHECK(f.kernel.quantale().family() == Family::goedel);
    CHECK(f.kernel.domain() == IndexSet(GridShape{2, 2}));
    CHECK(f.kernel.codomain() == IndexSet(GridShape{1, 1}));
    CHECK(f.kernel(2, 0).get() == 0.2);
    REQUIRE(f.builder);
    CHECK(f.builder->name == "block");
}

TEST_CASE("QKERNEL round trip is exact") {
    qmt::testing::Rng rng(51);
    for (Family fam : qmt::testing::kAllFamilies) {
        const Quantale q(fam);
        const Kernel p = qmt::testing::random_kernel(q, IndexSet(7), IndexSet(4), rng);
        CHECK(parse_kernel(format_kernel(p)).kernel == p);
    }
}

TEST_CASE("QKERNEL errors carry offsets") {
    const auto offset_of = [](const std::string& text) -> std::size_t {
        try {
            parse_kernel(text);
        } catch (const ParseError& e) {
            return e.offset();
        }
        FAIL("no ParseError");
        return 0;
    };
    CHECK(offset_of("QKERNEL 2\ngoedel 1 1\n1\n") == 0);
    CHECK(offset_of("QKERNEL 1\nfuzzy 1 1\n1\n") == 10);
    CHECK(offset_of("QKERNEL 1\ngoedel 1 2\n1 1.5\n") == 23);
    CHECK(offset_of("QKERNEL 1\nboolean 1 2\n1 0.5\n") == 24);
    CHECK(offset_of("QKERNEL 1\ngoedel 1 2\n1\n") == 21);
    CHECK(offset_of("QKERNEL 1\ngoedel 2 1\n1\n") == 23);
    CHECK(offset_of("QKERNEL 1\ngoedel 1 1\nabc\n") == 21);
    CHECK(offset_of("QKERNEL 1\ngoedel 0 1\n") == 17);
    CHECK(offset_of("QKERNEL 1\ngoedel 1 1\n1\n1\n") == 23);
    CHECK_THROWS_AS(parse_kernel("QKERNEL 1\n# builder t 2 2 1 1\ngoedel 3 1\n1\n1\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_kernel(""), ParseError);
}

TEST_CASE("kernel files") {
    CHECK_THROWS_AS(read_kernel_file("/nonexistent/dir/k.txt"), IoError);
}
