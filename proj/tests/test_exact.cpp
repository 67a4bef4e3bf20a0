#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl3/exact.hpp"

#include <random>

using namespace sl3;

namespace {

Scalar q(long p, long d = 1) { return Scalar::frac(p, d); }
Scalar c(long re, long im) { return Scalar(mpq_class(re), mpq_class(im)); }

Scalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    return Scalar(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("scalar text grammar") {
    CHECK(Scalar::parse("2") == q(2));
    CHECK(Scalar::parse("-1/3") == q(-1, 3));
    CHECK(Scalar::parse("0+1/1*i") == Scalar::i());
    CHECK(Scalar::parse("4/6-3/9*i") == Scalar(mpq_class(2, 3), mpq_class(-1, 3)));
    CHECK(Scalar::i().str() == "0+1/1*i");
    CHECK(q(-1, 3).str() == "-1/3");
    CHECK(Scalar(mpq_class(5), mpq_class(-2, 7)).str() == "5-2/7*i");
    CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("x"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1 + 2"), ParseError);

    std::mt19937_64 rng(7);
    for (int k = 0; k < 50; ++k) {
        Scalar s = random_scalar(rng);
        CHECK(Scalar::parse(s.str()) == s);
    }
}

TEST_CASE("field operations are exact") {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 200; ++k) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
    }
    CHECK(Scalar::i() * Scalar::i() == q(-1));
}

TEST_CASE("total order compares real part first") {
    CHECK(q(1, 3) < q(3));
    CHECK(c(0, 5) < c(1, -5));
    CHECK(c(1, -5) < c(1, 0));
}

TEST_CASE("rref") {
    auto r = rref(Matrix::identity(3));
    CHECK(r.rank == 3);
    CHECK(r.reduced == Matrix::identity(3));

    CHECK(rref(Matrix(2, 5)).rank == 0);

    Matrix m{{1, Scalar::i()}, {Scalar::i(), -1}};
    auto rr = rref(m);
    CHECK(rr.rank == 1);
    CHECK(rr.reduced.row(0) == Vec{1, Scalar::i()});
    CHECK(rref(rr.reduced).reduced == rr.reduced);

    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
        Matrix a(3, 4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j) a(i, j) = (k % 3 == 0 && i == 2) ? a(0, j) : random_scalar(rng);
        auto x = rref(a);
        CHECK(rref(x.reduced).reduced == x.reduced);
    }
}

TEST_CASE("kernel") {
    CHECK(kernel(Matrix::identity(3)).dim() == 0);
    CHECK(kernel(Matrix(3, 3)).dim() == 3);

    Matrix x1(3, 3);
    x1(0, 1) = 1;
    Subspace k = kernel(x1);
    CHECK(k == Subspace::span(3, {{1, 0, 0}, {0, 0, 1}}));

    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        Matrix a(3, 5);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 5; ++j) a(i, j) = random_scalar(rng);
        Subspace ker = kernel(a);
        CHECK(ker.dim() + a.rank() == 5);
        for (const auto& v : ker.basis()) CHECK(is_zero(a * v));
    }
}

TEST_CASE("charpoly3") {
    Matrix d{{1, 0, 0}, {0, 1, 0}, {0, 0, -2}};
    Cubic cp = charpoly3(d);
    CHECK(cp.c2 == q(0));
    CHECK(cp.c1 == q(-3));
    CHECK(cp.c0 == q(2));

    Matrix n{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
    Cubic cn = charpoly3(n);
    CHECK(cn.c2.is_zero());
    CHECK(cn.c1.is_zero());
    CHECK(cn.c0.is_zero());

    Cubic cz = charpoly3(Matrix(3, 3));
    CHECK((cz.c2.is_zero() && cz.c1.is_zero() && cz.c0.is_zero()));

    // agrees with the general characteristic polynomial
    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) {
        Matrix a(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a(i, j) = random_scalar(rng);
        Cubic cc = charpoly3(a);
        CHECK(a.charpoly() == Poly({cc.c0, cc.c1, cc.c2, 1}));
    }
}

TEST_CASE("roots_in_field") {
    auto r = roots_in_field(0, -3, 2);
    REQUIRE(r);
    CHECK(*r == std::vector<Root>{{q(-2), 1}, {q(1), 2}});

    auto z = roots_in_field(0, 0, 0);
    REQUIRE(z);
    CHECK(*z == std::vector<Root>{{q(0), 3}});

    CHECK_FALSE(roots_in_field(0, 0, -2));
    CHECK_FALSE(roots_in_field(0, 1, 1));  // irreducible over Q(i)

    // t^3 + 1 has i*sqrt(3) in its roots
    CHECK_FALSE(roots_in_field(0, 0, 1));
    // (t - i)(t + i)(t - 1/2)
    auto g = roots_in_field(q(-1, 2), 1, q(-1, 2));
    REQUIRE(g);
    CHECK(g->size() == 3);

    // reconstruction property on random split cubics with Gaussian-rational roots
    std::mt19937_64 rng(13);
    for (int t = 0; t < 40; ++t) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), cc = (t % 4 == 0) ? a : random_scalar(rng);
        Poly p = Poly({-a, 1}) * Poly({-b, 1}) * Poly({-cc, 1});
        auto rs = roots_in_field(p.coeff(2), p.coeff(1), p.coeff(0));
        REQUIRE(rs);
        Poly back({1});
        for (const auto& root : *rs)
            for (int m = 0; m < root.multiplicity; ++m) back = back * Poly({-root.value, 1});
        CHECK(back == p);
    }
}

TEST_CASE("sqrt_in_field") {
    CHECK(sqrt_in_field(4) == q(2));
    CHECK(sqrt_in_field(-1) == Scalar::i());
    CHECK_FALSE(sqrt_in_field(2));
    CHECK(sqrt_in_field(c(3, 4)) == c(2, 1));
    CHECK(sqrt_in_field(c(0, 2)) == c(1, 1));
    CHECK(sqrt_in_field(c(0, -2)) == c(1, -1));

    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
        Scalar r = random_scalar(rng);
        auto s = sqrt_in_field(r * r);
        REQUIRE(s);
        CHECK((*s == r || *s == -r));
        CHECK(*s * *s == r * r);
        CHECK(*s >= -*s);
    }
}

TEST_CASE("cube roots") {
    CHECK(cbrt_in_field(8) == q(2));
    CHECK_FALSE(cbrt_in_field(2));
    auto r = cbrt_in_field(c(0, 1));  // -i is the only cube root of i in Q(i)
    REQUIRE(r);
    CHECK(*r == c(0, -1));
}

TEST_CASE("semisimplicity and nilpotency") {
    Matrix j{{1, 1, 0}, {0, 1, 0}, {0, 0, -2}};
    CHECK_FALSE(is_semisimple(j));
    CHECK(is_semisimple(Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, -2}}));
    CHECK(is_semisimple(Matrix{{0, -1}, {1, 0}}));
    CHECK(is_nilpotent(Matrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
    CHECK_FALSE(is_nilpotent(j));
}

TEST_CASE("determinant and inverse") {
    Matrix b{{-1, 1, 0}, {0, 0, 1}, {0, 1, 0}};
    CHECK(b.determinant() == q(1));
    CHECK(b * b.inverse() == Matrix::identity(3));
    Matrix m(4, 4);
    for (std::size_t k = 0; k < 4; ++k) m(k, (k + 1) % 4) = Scalar(static_cast<long>(k + 1));
    CHECK(m.determinant() == q(-24));
    CHECK(m * m.inverse() == Matrix::identity(4));
    CHECK_THROWS(Matrix(2, 2).inverse());
}

TEST_CASE("subspaces") {
    Subspace a = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}});
    Subspace b = Subspace::span(3, {{0, 1, 0}, {0, 0, 1}});
    CHECK(a.intersect(b) == Subspace::span(3, {{0, 1, 0}}));
    CHECK(a.sum(b) == Subspace::full(3));
    CHECK(a.contains(Vec{2, 3, 0}));
    CHECK_FALSE(a.contains(Vec{0, 0, 1}));
    auto co = a.coordinates(Vec{2, 3, 0});
    REQUIRE(co);
    CHECK(*co == Vec{2, 3});
    // different spanning sets, same representation
    CHECK(Subspace::span(3, {{1, 1, 0}, {1, -1, 0}}) == a);
}
