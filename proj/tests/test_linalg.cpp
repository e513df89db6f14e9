#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsd/linalg.hpp"
#include "rsd/scalar_io.hpp"

using namespace rsd;

using LQ = Laurent<Rat>;
using MQ = Mat<Rat>;
using VQ = Vec<Rat>;

static LQ R(const std::string& s) { return parse_scalar<Rat>(s); }

static MQ mat(std::size_t r, std::size_t c, const std::vector<std::string>& entries) {
    MQ m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = R(entries[i * c + j]);
    return m;
}
static VQ vec(const std::vector<std::string>& entries) {
    VQ v(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) v[i] = R(entries[i]);
    return v;
}

TEST_CASE("rank") {
    CHECK(mat_rank(MQ::identity(3)) == 3);
    CHECK(mat_rank(MQ(2, 4)) == 0);
    MQ m = mat(2, 2, {"t", "t^2", "1", "t"});
    CHECK(mat_rank(m) == 1);
    // determinant vanishes: t*t - t^2*1 = 0
    CHECK((m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0)).is_zero());
}

TEST_CASE("solve: examples") {
    auto s1 = mat_solve(MQ::identity(2), vec({"t^-1", "1"}));
    REQUIRE(s1.consistent());
    CHECK(*s1.particular == vec({"t^-1", "1"}));
    CHECK(s1.kernel.empty());

    MQ m = mat(1, 2, {"t", "t^2"});
    auto s2 = mat_solve(m, vec({"t^3"}));
    REQUIRE(s2.consistent());
    CHECK(m * *s2.particular == vec({"t^3"})); // substitute back
    REQUIRE(s2.kernel.size() == 1);
    CHECK((m * s2.kernel[0]).is_zero());

    auto s3 = mat_solve(mat(2, 1, {"1", "0"}), vec({"0", "1"}));
    CHECK(!s3.consistent());

    CHECK_THROWS_AS(mat_solve(MQ::identity(2), VQ(3)), std::invalid_argument);
}

TEST_CASE("solve: rank-nullity and exactness on random systems") {
    Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng.below(4), cols = 1 + rng.below(4);
        MQ m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = random_scalar<Rat>(rng, -2, 2, 2, 1);
        std::size_t rank = mat_rank(m);
        auto sol = mat_solve(m, random_vec<Rat>(rng, rows, -2, 2, 2, 1));
        CHECK(rank + sol.kernel.size() == cols);
        for (const auto& kv : sol.kernel) CHECK((m * kv).is_zero());
        if (sol.consistent()) {
            auto b = m * *sol.particular;
            auto again = mat_solve(m, b);
            CHECK(again.consistent());
        }
    }
}

TEST_CASE("random_invertible: inverse pairs") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        std::size_t n = 1 + seed % 4;
        auto [m, minv] = random_invertible<Rat>(n, seed, 2);
        CHECK((m * minv).is_identity());
        CHECK((minv * m).is_identity());
        CHECK(mat_rank(m) == n);
    }
}

TEST_CASE("random_invertible: n=1 gives a unit of A") {
    auto [m, minv] = random_invertible<Rat>(1, 5, 1);
    CHECK(!m.at(0, 0).is_zero());
    CHECK((m.at(0, 0) * minv.at(0, 0)).is_one());
}

TEST_CASE("random_invertible: complexity 0 is monomial") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto [m, minv] = random_invertible<Rat>(3, seed, 0);
        CHECK((m * minv).is_identity());
        for (std::size_t i = 0; i < 3; ++i) {
            std::size_t nonzero = 0;
            for (std::size_t j = 0; j < 3; ++j) {
                const LQ& e = m.at(i, j);
                if (e.is_zero()) continue;
                ++nonzero;
                CHECK(e.num().degree() == 0); // c * t^e only
                CHECK(e.den().is_one());
            }
            CHECK(nonzero == 1);
        }
    }
}

TEST_CASE("column_echelon: canonical for the span") {
    Rng rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 2 + rng.below(3);
        std::size_t c = 1 + rng.below(n);
        MQ m(n, c);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = random_scalar<Rat>(rng, -2, 2, 1, 1);
        auto [u, uinv] = random_invertible<Rat>(c, rng.raw(), 1);
        CHECK(column_echelon(m) == column_echelon(m * u));
        CHECK(mat_rank(column_echelon(m)) == mat_rank(m));
    }
}

TEST_CASE("inverse") {
    CHECK(!mat_inverse(mat(2, 2, {"t", "t^2", "1", "t"})).has_value()); // singular
    MQ m = mat(2, 2, {"1", "t^-1", "0", "1+t"});
    auto inv = mat_inverse(m);
    REQUIRE(inv.has_value());
    CHECK((m * *inv).is_identity());
}
