#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl3/sl3.hpp"

#include <random>

using namespace sl3;

namespace {

Element random_element(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
    Element e;
    for (auto& s : e.c) s = Scalar(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
    return e;
}

Matrix diag(long a, long b, long c) { return Matrix{{a, 0, 0}, {0, b, 0}, {0, 0, c}}; }

}  // namespace

TEST_CASE("matrix realization") {
    CHECK(to_matrix(h1) == diag(1, -1, 0));
    CHECK(to_matrix(h2) == diag(0, 1, -1));
    Matrix m3(3, 3);
    m3(0, 2) = -1;
    CHECK(to_matrix(x3) == m3);
    CHECK(to_matrix(Element{}) == Matrix(3, 3));

    CHECK(from_matrix(diag(1, -1, 0)) == h1);
    CHECK_THROWS_AS(from_matrix(diag(1, 1, 1)), NotTraceless);
    Matrix e23(3, 3);
    e23(1, 2) = 1;
    CHECK(from_matrix(e23) == x2);

    std::mt19937_64 rng(2);
    for (int k = 0; k < 30; ++k) {
        Element v = random_element(rng);
        CHECK(to_matrix(v).trace().is_zero());
        CHECK(from_matrix(to_matrix(v)) == v);
    }
}

TEST_CASE("bracket") {
    CHECK(bracket(x1, sl3::y1) == h1);
    CHECK(bracket(x1, x2) == -x3);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
        Element u = random_element(rng), v = random_element(rng);
        CHECK(bracket(u, u).is_zero());
        Matrix mu = to_matrix(u), mv = to_matrix(v);
        CHECK(to_matrix(bracket(u, v)) == mu * mv - mv * mu);
    }
}

TEST_CASE("Jacobi identity on all basis triples") {
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < kDim; ++j)
            for (std::size_t k = 0; k < kDim; ++k) {
                Element a = Element::basis(Coord(i)), b = Element::basis(Coord(j)), c = Element::basis(Coord(k));
                CHECK((bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))).is_zero());
            }
}

TEST_CASE("Chevalley involution") {
    CHECK(chevalley_involution(x1) == -sl3::y1);
    CHECK(chevalley_involution(h1 + h2) == -(h1 + h2));
    for (std::size_t i = 0; i < kDim; ++i) {
        Element a = Element::basis(Coord(i));
        CHECK(chevalley_involution(chevalley_involution(a)) == a);
        for (std::size_t j = 0; j < kDim; ++j) {
            Element b = Element::basis(Coord(j));
            CHECK(bracket(chevalley_involution(a), chevalley_involution(b)) ==
                  chevalley_involution(bracket(a, b)));
        }
    }
    std::mt19937_64 rng(4);
    for (int k = 0; k < 10; ++k) {
        Element u = random_element(rng), v = random_element(rng);
        CHECK(bracket(chevalley_involution(u), chevalley_involution(v)) == chevalley_involution(bracket(u, v)));
    }
}

TEST_CASE("adjoint representation") {
    Matrix a = ad_matrix(h1 + h2);
    CHECK(a(X3, X3) == Scalar(2));
    CHECK(bracket(h1 + h2, x3) == Scalar(2) * x3);
    CHECK(ad_matrix(Element{}).is_zero());
    CHECK(ad_matrix(Scalar(2) * (h1 + h2))(X3, X3) == Scalar(4));
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < kDim; ++j) {
            Element u = Element::basis(Coord(i)), v = Element::basis(Coord(j));
            Matrix au = ad_matrix(u), av = ad_matrix(v);
            CHECK(ad_matrix(bracket(u, v)) == au * av - av * au);
        }
}

TEST_CASE("element text") {
    CHECK((h1 + Scalar(2) * h2).str() == "h1+2*h2");
    CHECK((-x1 + Scalar::frac(-1, 3) * x3).str() == "-x1-1/3*x3");
    CHECK(Element{}.str() == "0");
}
