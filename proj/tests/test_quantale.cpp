#include <doctest.h>

#include <cmath>
#include <vector>

#include "qmt/error.hpp"
#include "qmt/quantale.hpp"
#include "support/generators.hpp"

using namespace qmt;
using qmt::testing::kAllFamilies;
using qmt::testing::kRealFamilies;

namespace {

Value v(double x) { return Value(x); }

}  // namespace

TEST_CASE("Value rejects out-of-range construction") {
    CHECK_THROWS_AS(Value(-0.01), DomainError);
    CHECK_THROWS_AS(Value(1.0000001), DomainError);
    CHECK_THROWS_AS(Value(std::nan("")), DomainError);
    CHECK(Value(0.0).get() == 0.0);
    CHECK(Value(1.0).get() == 1.0);
}

TEST_CASE("family names") {
    for (Family f : kAllFamilies) CHECK(parse_family(to_string(f)) == f);
    CHECK(to_string(Family::lukasiewicz) == "lukasiewicz");
    CHECK_THROWS_AS(parse_family("Goedel"), ParameterError);
    CHECK_THROWS_AS(parse_family("frank"), ParameterError);
}

TEST_CASE("mul examples") {
    CHECK(Quantale(Family::goedel).mul(v(1.0), v(0.37)).get() == 0.37);
    for (Family f : kAllFamilies) {
        const Quantale q(f);
        CHECK(q.mul(v(0.0), v(1.0)).get() == 0.0);
        CHECK(q.mul(v(0.0), v(0.0)).get() == 0.0);
    }
    const Quantale luk(Family::lukasiewicz);
    const Value t = luk.mul(v(0.7), v(0.6));
    CHECK(t.get() == doctest::Approx(0.3).epsilon(1e-12));
    // Round trip through the residuum: 0.7 * (0.7 -> 0.3) stays below 0.3 and the
    // grid supremum of the residuum matches the closed form.
    const Value r = luk.residuum(v(0.7), v(0.3));
    CHECK(luk.mul(v(0.7), r).get() <= 0.3 + 1e-12);
    CHECK(std::abs(residuum_oracle(luk, v(0.7), v(0.3), 10000).get() - r.get()) <= 1e-4 + 1e-12);
}

TEST_CASE("boolean family rejects non-binary inputs") {
    const Quantale b(Family::boolean);
    CHECK_THROWS_AS(b.mul(v(0.5), v(1.0)), DomainError);
    CHECK_THROWS_AS(b.residuum(v(1.0), v(0.3)), DomainError);
    const std::vector<Value> xs{v(0.0), v(0.4)};
    CHECK_THROWS_AS(b.join(xs), DomainError);
    CHECK(b.mul(v(1.0), v(1.0)).get() == 1.0);
    CHECK(b.residuum(v(1.0), v(0.0)).get() == 0.0);
    CHECK(b.residuum(v(0.0), v(0.0)).get() == 1.0);
}

TEST_CASE("residuum examples") {
    for (Family f : kRealFamilies) CHECK(Quantale(f).residuum(v(0.2), v(0.5)).get() == 1.0);
    // Frozen from the grid sup-oracle over {k/10^4}; see the oracle test below.
    CHECK(Quantale(Family::goedel).residuum(v(0.6), v(0.3)).get() == 0.3);
    CHECK(Quantale(Family::lukasiewicz).residuum(v(0.6), v(0.3)).get() ==
          doctest::Approx(0.7).epsilon(1e-12));
    CHECK(Quantale(Family::product).residuum(v(0.0), v(0.0)).get() == 1.0);
    CHECK(Quantale(Family::product).residuum(v(0.5), v(0.25)).get() == 0.5);
}

TEST_CASE("residuum_oracle examples") {
    const double g = residuum_oracle(Quantale(Family::goedel), v(0.6), v(0.3), 10000).get();
    CHECK(g >= 0.3 - 1e-4);
    CHECK(g <= 0.3);
    for (Family f : kAllFamilies) CHECK(residuum_oracle(Quantale(f), v(0.0), v(0.0), 10).get() == 1.0);
    const double p = residuum_oracle(Quantale(Family::product), v(0.5), v(0.25), 10000).get();
    CHECK(p >= 0.5 - 1e-4);
    CHECK(p <= 0.5);
    CHECK(residuum_oracle(Quantale(Family::lukasiewicz), v(0.6), v(0.3), 10000).get() ==
          doctest::Approx(0.7).epsilon(1e-4));
    CHECK_THROWS_AS(residuum_oracle(Quantale(Family::goedel), v(0.1), v(0.1), 0), ParameterError);
}

TEST_CASE("join and meet") {
    const Quantale q(Family::product);
    CHECK(q.join({}).get() == 0.0);
    CHECK(q.meet({}).get() == 1.0);
    const std::vector<Value> xs{v(0.2), v(0.9), v(0.5)};
    CHECK(q.join(xs).get() == 0.9);
    CHECK(q.meet(xs).get() == 0.2);
}

TEST_CASE("adjunction on the k/64 grid for a sample of triples") {
    // The exhaustive sweep over all 65^3 triples is in the acceptance suite.
    qmt::testing::Rng rng(11);
    for (Family f : kRealFamilies) {
        const Quantale q(f);
        for (int i = 0; i < 20000; ++i) {
            const Value x = v(rng.between(0, 64) / 64.0);
            const Value y = v(rng.between(0, 64) / 64.0);
            const Value z = v(rng.between(0, 64) / 64.0);
            const bool lhs = q.mul(z, x).get() <= y.get() + 1e-12;
            const bool rhs = z.get() <= q.residuum(x, y).get() + 1e-12;
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("monoid laws and join distributivity") {
    qmt::testing::Rng rng(12);
    for (Family f : kAllFamilies) {
        const Quantale q(f);
        for (int i = 0; i < 2000; ++i) {
            const Value a = qmt::testing::random_value(q, rng);
            const Value b = qmt::testing::random_value(q, rng);
            const Value c = qmt::testing::random_value(q, rng);
            CHECK(std::abs(q.mul(a, q.mul(b, c)).get() - q.mul(q.mul(a, b), c).get()) <= 1e-12);
            CHECK(q.mul(a, b) == q.mul(b, a));
            CHECK(q.mul(Quantale::unit(), a) == a);
            if (a <= b) CHECK(q.mul(a, c) <= q.mul(b, c));

            std::vector<Value> ys(rng.between(0, 6));
            for (Value& y : ys) y = qmt::testing::random_value(q, rng);
            std::vector<Value> products;
            for (Value y : ys) products.push_back(q.mul(a, y));
            CHECK(std::abs(q.mul(a, q.join(ys)).get() - q.join(products).get()) <= 1e-12);
        }
    }
}

TEST_CASE("boolean closure") {
    const Quantale q(Family::boolean);
    for (double x : {0.0, 1.0}) {
        for (double y : {0.0, 1.0}) {
            for (double r : {q.mul(v(x), v(y)).get(), q.residuum(v(x), v(y)).get(),
                             q.join(std::vector<Value>{v(x), v(y)}).get(),
                             q.meet(std::vector<Value>{v(x), v(y)}).get()}) {
                CHECK((r == 0.0 || r == 1.0));
            }
        }
    }
}
