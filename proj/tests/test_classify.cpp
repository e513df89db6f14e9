#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsd/classify.hpp"
#include "rsd/scalar_io.hpp"

#include "helpers.hpp"

using namespace rsd;
using namespace rsdtest;

using LQ = Laurent<Rat>;
using VQ = Vec<Rat>;
using MQ = Mat<Rat>;
using GS = GeneralSubmodule<Rat>;
using SM = SingularModule<Rat>;

static LQ R(const std::string& s) { return parse_scalar<Rat>(s); }
static VQ vec(const std::vector<std::string>& entries) {
    VQ v(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) v[i] = R(entries[i]);
    return v;
}

TEST_CASE("type_of: examples") {
    CHECK(type_of(canonical_rsd<Rat>({0, 3, 0})) == ModuleType{0, 3, 0});
    // M = A, N = 0 in dimension 1: p = id
    auto id_mod = build_rsd(GS::build(1, {vec({"1"})}, {}), SM::build(1, {}, {}));
    CHECK(type_of(id_mod) == ModuleType{0, 0, 1});
    CHECK(id_mod.apply_p(vec({"t^-4+t"})) == vec({"t^-4+t"}));

    for (std::uint64_t seed = 1; seed <= 15; ++seed)
        CHECK(type_of(random_rsd<Rat>({2, 1, 1}, seed)) == ModuleType{2, 1, 1});
}

TEST_CASE("are_isomorphic: examples") {
    auto canon = canonical_rsd<Rat>({0, 1, 0});
    CHECK(are_isomorphic(canon, random_rsd<Rat>({0, 1, 0}, 3)));
    auto a1 = canonical_rsd<Rat>({0, 0, 1});
    auto a0 = canonical_rsd<Rat>({1, 0, 0});
    CHECK(!are_isomorphic(a1, a0));
    CHECK(are_isomorphic(a0, a0));
    CHECK_THROWS_AS(are_isomorphic(canonical_rsd<Rat>({0, 1, 0}), canonical_rsd<Rat>({0, 2, 0})),
                    std::invalid_argument);
}

TEST_CASE("iso_witness: transports one decomposition onto the other") {
    auto canon = canonical_rsd<Rat>({0, 1, 0});
    auto moved = random_rsd<Rat>({0, 1, 0}, 21);
    auto w = iso_witness(canon, moved);
    REQUIRE(w.has_value());
    CHECK(canon.transported(*w) == moved);

    CHECK(!iso_witness(canonical_rsd<Rat>({1, 0, 0}), canonical_rsd<Rat>({0, 0, 1})).has_value());

    auto self = iso_witness(canon, canon);
    REQUIRE(self.has_value());
    CHECK(canon.transported(*self) == canon);

    // a mixed type across a pair of random transports
    auto r1 = random_rsd<Rat>({1, 1, 1}, 4);
    auto r2 = random_rsd<Rat>({1, 1, 1}, 5);
    auto w2 = iso_witness(r1, r2);
    REQUIRE(w2.has_value());
    CHECK(r1.transported(*w2) == r2);
}

TEST_CASE("counting") {
    CHECK(count_orbits(1) == 3);
    CHECK(count_orbits(0) == 1);
    CHECK(count_orbits(4) == 15);
    for (std::size_t n = 0; n <= 12; ++n) {
        CHECK(count_orbits(n) == static_cast<std::int64_t>(enumerate_types(n).size()));
        CHECK(count_fractional_classes(n) == static_cast<std::int64_t>(n) + 1);
    }
    CHECK(count_fractional_classes(1) == 2);
    CHECK(count_fractional_classes(5) == 6);

    // orbit_index enumerates (k, r, l) lexicographically
    CHECK(orbit_index(ModuleType{0, 0, 1}) == 0);
    CHECK(orbit_index(ModuleType{0, 1, 0}) == 1);
    CHECK(orbit_index(ModuleType{1, 0, 0}) == 2);
}

TEST_CASE("hom descriptors") {
    CHECK(hom_descriptor(Irreducible::Ar, Irreducible::A0).str() == "0");
    CHECK(hom_descriptor(Irreducible::Ar, Irreducible::Ar).str() == "k");
    CHECK(hom_descriptor(Irreducible::A0, Irreducible::A0).str() == "A");
    CHECK(hom_descriptor(Irreducible::A1, Irreducible::A1).str() == "A");
    for (auto i : {Irreducible::A0, Irreducible::Ar, Irreducible::A1})
        for (auto j : {Irreducible::A0, Irreducible::Ar, Irreducible::A1})
            CHECK((hom_descriptor(i, j).str() == "0") == (i != j));
}

TEST_CASE("end descriptors") {
    CHECK(end_descriptor({2, 1, 1}).str() == "M(2x2,A) x M(1x1,A) x M(1x1,k)");
    CHECK(end_descriptor({0, 3, 0}).str() == "M(3x3,k)");
    CHECK(end_descriptor({0, 0, 0}).str() == "1");
}

TEST_CASE("stabilizer descriptors") {
    CHECK(stabilizer_descriptor({1, 1, 1}, StabilizerScope::pair).str() ==
          "GL(1,A) x GL(1,A) x GL(1,k)");
    CHECK(stabilizer_descriptor({0, 2, 0}, StabilizerScope::module_only).str() == "GL(2,O)");
    CHECK(stabilizer_descriptor({0, 0, 2}, StabilizerScope::pair).str() == "GL(2,A)");
    CHECK(stabilizer_descriptor({1, 1, 1}, StabilizerScope::module_only).str() ==
          "[GL(1,A) 0 0; M(1x1,A) GL(1,O) 0; M(1x1,A) M(1x1,A) GL(1,A)]");
    // type (2,1,1): dim M~ = 1 leads, the codimension block GL(2,A) trails
    CHECK(stabilizer_descriptor({2, 1, 1}, StabilizerScope::module_only).str() ==
          "[GL(1,A) 0 0; M(1x1,A) GL(1,O) 0; M(2x1,A) M(2x1,A) GL(2,A)]");
}

TEST_CASE("fiber descriptors") {
    auto f1 = fiber_descriptor({0, 1, 0});
    CHECK(f1.quotient.str() == "GL(1,O) / GL(1,k)");
    CHECK(f1.flag_type == std::array<std::size_t, 3>{0, 1, 0});
    CHECK(f1.bundle_fiber.str() == "GL(1,A) / GL(1,O)");

    auto f2 = fiber_descriptor({1, 0, 1});
    CHECK(f2.quotient.str() ==
          "[GL(1,A) 0; M(1x1,A) GL(1,A)] / diag(GL(1,A), GL(1,A))");
    CHECK(f2.bundle_fiber.is_trivial());

    auto f3 = fiber_descriptor({1, 1, 1});
    CHECK(f3.quotient.str() ==
          "[GL(1,A) 0 0; M(1x1,A) GL(1,O) 0; M(1x1,A) M(1x1,A) GL(1,A)] / "
          "diag(GL(1,A), GL(1,k), GL(1,A))");
    CHECK(f3.flag_type == std::array<std::size_t, 3>{1, 1, 1});
}

TEST_CASE("sample_stabilizer_element: stabilizes the pair") {
    auto canon = canonical_rsd<Rat>({0, 1, 0});
    // scalar in GL_1(k) fixes (O, A^-)
    MQ c(1, 1);
    c.at(0, 0) = R("3");
    CHECK(canon.transported(c) == canon);

    // negative control: diag(1+t) lies in GL_1(O) \ GL_1(k) and moves N
    MQ u(1, 1);
    u.at(0, 0) = R("1+t");
    auto moved = canon.transported(u);
    CHECK(moved.regular() == canon.regular());
    CHECK_FALSE(moved == canon);
    CHECK(moved.unit_frame() == MQ::from_cols(1, {vec({"1+t"})}));

    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        auto rsd = random_rsd<Rat>({1, 1, 1}, seed);
        MQ phi = sample_stabilizer_element(rsd, 100 + seed);
        CHECK(rsd.transported(phi) == rsd);
    }
}

TEST_CASE("finite-level Schur check (small window)") {
    CHECK(schur_commutant_dimension(4) == 1);
}
