#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl3/iso.hpp"

#include <random>

namespace sl3 {
namespace {

Subalgebra span(std::initializer_list<Element> es) { return Subalgebra::span_of(es); }
Scalar q(long p, long d = 1) { return Scalar::frac(p, d); }

IsoType id_of(std::initializer_list<Element> es) { return identify_solvable(structure_constants_of(span(es))); }

Scalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
    return Scalar(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        Matrix t(n, n);
        std::uniform_int_distribution<long> e(-2, 2);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) t(i, j) = Scalar(mpq_class(e(rng)), mpq_class(e(rng)));
        if (!t.determinant().is_zero()) return t;
    }
}

}  // namespace

TEST_CASE("structure constants of subalgebras") {
    auto k5 = structure_constants_of(span({h1, h2}));
    CHECK(k5.dim() == 2);
    CHECK(sl3::is_zero(k5(0, 1)));
    CHECK(identify_solvable(structure_constants_of(span({x1 + x2, h1 + h2}))).tag == IsoTag::K2);
    auto heis = structure_constants_of(span({x1, x2, x3}));
    CHECK(identify_solvable(heis).tag == IsoTag::L5);
    std::vector<std::vector<Vec>> bad(2, std::vector<Vec>(2, Vec(2)));
    bad[0][1] = Vec{1, 0};
    CHECK_THROWS_AS(StructureConstants(2, bad), std::invalid_argument);
    // [e0,e1] = e1, [e0,e2] = e0 violates Jacobi
    CHECK_THROWS_AS(StructureConstants::from_relations(3, {{0, 1, Vec{0, 1, 0}}, {0, 2, Vec{1, 0, 0}}}),
                    std::invalid_argument);
}

TEST_CASE("identify_solvable on standard forms") {
    CHECK(identify_solvable(standard_structure({IsoTag::L2, {}})) == IsoType{IsoTag::L2, {}});
    CHECK(identify_solvable(standard_structure({IsoTag::L4, {}})) == IsoType{IsoTag::L4, {}});
    CHECK(identify_solvable(standard_structure({IsoTag::L5, {}})) == IsoType{IsoTag::L5, {}});
    CHECK(identify_solvable(standard_structure({IsoTag::M8, {}})) == IsoType{IsoTag::M8, {}});
    CHECK(identify_solvable(standard_structure({IsoTag::M12, {}})) == IsoType{IsoTag::M12, {}});
    CHECK(identify_solvable(standard_structure({IsoTag::M14, {}})) == IsoType{IsoTag::M14, {}});
    CHECK(identify_solvable(standard_structure({IsoTag::M13, q(-1, 4)})) == IsoType{IsoTag::M13, q(-1, 4)});
    CHECK(identify_solvable(standard_structure({IsoTag::L3, q(-1, 4)})) == IsoType{IsoTag::L3, q(-1, 4)});
    CHECK_THROWS_AS(standard_structure({IsoTag::L3, {}}), InvalidParameter);
}

TEST_CASE("identify_solvable on subalgebras of sl3") {
    CHECK(id_of({x1, x3, Scalar(2) * h1 + h2}) == IsoType{IsoTag::L2, {}});
    CHECK(id_of({x1, x2, x3, h1 - h2}) == IsoType{IsoTag::M14, {}});
    CHECK(id_of({x1, x2, x3, Scalar(3) * h1 + h2}) == IsoType{IsoTag::M13, q(5, 16)});
    CHECK(id_of({x1 + x2, x3, h1 + h2}) == IsoType{IsoTag::L3, q(-2, 9)});
    CHECK(id_of({x1, h1, h2}) == IsoType{IsoTag::L3, q(0)});
    CHECK(id_of({x1, x3, Scalar(2) * h1 + h2 + x2}) == IsoType{IsoTag::L3, q(-1, 4)});
    CHECK(id_of({x1, x3, h2}) == IsoType{IsoTag::L4, {}});
    CHECK(id_of({x1, x2, x3, h1 + h2}) == IsoType{IsoTag::M12, {}});
    CHECK(id_of({x1, x3, h1, h2}) == IsoType{IsoTag::M8, {}});
    CHECK(id_of({x2, y1, y3, Scalar(2) * h1 + h2}) == IsoType{IsoTag::M13, q(0)});
    CHECK(id_of({x1, x2, x3, h1}) == IsoType{IsoTag::M13, q(2)});
    CHECK_THROWS_AS(identify_solvable(structure_constants_of(span({x1, x2, x3, h1, h2}))), UnsupportedDimension);
    CHECK_THROWS_AS(identify_solvable(structure_constants_of(span({x1, sl3::y1, h1}))), NotSolvable);
}

TEST_CASE("dimension-4 types outside the target list are refused") {
    // abelian of dimension 4
    CHECK_THROWS_AS(identify_solvable(StructureConstants::from_relations(4, {})), UnrecognizedType);
    // K2 + J + J
    CHECK_THROWS_AS(identify_solvable(StructureConstants::from_relations(4, {{0, 1, Vec{1, 0, 0, 0}}})),
                    UnrecognizedType);
}

TEST_CASE("identification is basis independent") {
    std::mt19937_64 rng(31);
    std::vector<IsoType> types{{IsoTag::L2, {}}, {IsoTag::L4, {}}, {IsoTag::L5, {}}, {IsoTag::M8, {}},
                               {IsoTag::M12, {}}, {IsoTag::M14, {}}, {IsoTag::K2, {}}};
    for (int k = 0; k < 6; ++k) {
        types.push_back({IsoTag::L3, random_scalar(rng)});
        types.push_back({IsoTag::M13, random_scalar(rng)});
    }
    for (const auto& t : types) {
        auto sc = standard_structure(t);
        for (int r = 0; r < 3; ++r) {
            auto re = sc.rebase(random_invertible(rng, sc.dim()));
            CHECK(identify_solvable(re) == t);
        }
    }
}

TEST_CASE("parameter round trip") {
    std::mt19937_64 rng(37);
    for (int k = 0; k < 30; ++k) {
        Scalar a = random_scalar(rng);
        CHECK(identify_solvable(standard_structure({IsoTag::L3, a})).param == a);
        CHECK(identify_solvable(standard_structure({IsoTag::M13, a})).param == a);
    }
}

TEST_CASE("isomorphism oracle") {
    auto l2 = standard_structure({IsoTag::L2, {}});
    auto t = iso_oracle(l2, l2);
    REQUIRE(t);
    CHECK(*t == Matrix::identity(3));

    auto sub = structure_constants_of(span({x1, x3, Scalar(2) * h1 + h2}));
    auto found = iso_oracle(l2, sub);
    REQUIRE(found);
    CHECK(is_isomorphism(l2, sub, *found));

    CHECK_FALSE(iso_oracle(l2, standard_structure({IsoTag::L4, {}})));

    // whenever the oracle finds a map, identification agrees
    std::mt19937_64 rng(41);
    for (int k = 0; k < 4; ++k) {
        auto m = standard_structure({IsoTag::M13, Scalar(k)});
        auto re = m.rebase(random_invertible(rng, 4));
        auto f = iso_oracle(m, re, 5);
        if (f) CHECK(identify_solvable(m) == identify_solvable(re));
    }
}

}  // namespace sl3
