#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl3/subalgebra.hpp"

namespace sl3 {
namespace {

Subalgebra span(std::initializer_list<Element> es) { return Subalgebra::span_of(es); }

const Subalgebra kBorel = span({x1, x2, x3, h1, h2});
const Subalgebra kA11 = span({x3, y3, h1 + h2});
const Subalgebra kA12 = span({x1 + x2, Scalar(2) * y1 + Scalar(2) * y2, Scalar(2) * h1 + Scalar(2) * h2});

std::vector<Scalar> ints(std::initializer_list<long> v) {
    std::vector<Scalar> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("generate") {
    CHECK(generate({x1, y1}) == span({x1, y1, h1}));
    CHECK(generate({h1}) == span({h1}));
    CHECK(generate({x1 + x2, x3}) == span({x1 + x2, x3}));
    CHECK(generate({x1, y1, x2, y2}) == Subalgebra::full());
    CHECK(generate(kBorel.basis()) == kBorel);
    CHECK(generate({x1, x2}).contains(generate({x1})));
    CHECK_THROWS(Subalgebra::span_of({x1, x2}));
}

TEST_CASE("derived and lower central series") {
    CHECK(dims(derived_series(kBorel)) == std::vector<std::size_t>{5, 3, 1, 0});
    CHECK(dims(derived_series(span({h1, h2}))) == std::vector<std::size_t>{2, 0});
    CHECK(dims(derived_series(Subalgebra::full())) == std::vector<std::size_t>{8, 8});
    CHECK_FALSE(is_solvable(Subalgebra::full()));

    CHECK(dims(lower_central_series(span({x1, x2, x3}))) == std::vector<std::size_t>{3, 1, 0});
    CHECK(dims(lower_central_series(span({x1, h1 + Scalar(2) * h2}))) == std::vector<std::size_t>{2, 0});
    CHECK(dims(lower_central_series(span({x1, x3, Scalar(2) * h1 + h2}))) == std::vector<std::size_t>{3, 2, 2});
    CHECK(is_solvable(span({x1, x3, Scalar(2) * h1 + h2})));
    CHECK_FALSE(is_nilpotent(span({x1, x3, Scalar(2) * h1 + h2})));
}

TEST_CASE("radical") {
    CHECK(radical(kBorel) == kBorel);
    CHECK(radical(Subalgebra::full()).dim() == 0);
    Subalgebra a1k1 = span({x3, y3, h1 + h2, x1, y2});
    CHECK(radical(a1k1) == span({x1, y2}));
    CHECK(radical(span({x3, y3, h1 + h2, h1 - h2})) == span({h1 - h2}));
    CHECK(radical(span({x3, y3, h1 + h2, h1 - h2, x1, y2})) == span({h1 - h2, x1, y2}));
}

TEST_CASE("nilradical") {
    CHECK(nilradical(span({x1, x2, x3})) == span({x1, x2, x3}));
    CHECK(nilradical(kBorel) == span({x1, x2, x3}));
    CHECK(nilradical(span({x1, x3, h1, h2})) == span({x1, x3}));
    CHECK(nilradical(span({x1, h1 + Scalar(2) * h2})) == span({x1, h1 + Scalar(2) * h2}));
    CHECK_THROWS_AS(nilradical(Subalgebra::full()), NotSolvable);
    // abelian but not consisting of nilpotent matrices
    CHECK(nilpotent_matrices(span({x1, h1 + Scalar(2) * h2})) == span({x1}));
    CHECK(nilpotent_matrices(kBorel) == span({x1, x2, x3}));
}

TEST_CASE("Levi decomposition") {
    auto d = levi_subalgebra(span({x3, y3, h1 + h2, h1 - h2}));
    CHECK(d.semisimple == kA11);
    CHECK(d.radical == span({h1 - h2}));

    auto b = levi_subalgebra(kBorel);
    CHECK(b.semisimple.dim() == 0);
    CHECK(b.radical == kBorel);

    auto f = levi_subalgebra(Subalgebra::full());
    CHECK(f.semisimple == Subalgebra::full());
    CHECK(f.radical.dim() == 0);

    // a conjugated Levi-decomposable algebra whose Levi factor is not basis aligned
    std::mt19937_64 rng(9);
    for (int k = 0; k < 5; ++k) {
        Matrix a = random_sl3(rng);
        Subalgebra s = conjugate(span({x3, y3, h1 + h2, h1 - h2, x1, y2}), a);
        auto lv = levi_subalgebra(s);
        CHECK(lv.semisimple.dim() == 3);
        CHECK(lv.radical.dim() == 3);
        CHECK(lv.semisimple.space().sum(lv.radical.space()) == s.space());
        CHECK(radical(lv.semisimple).dim() == 0);
    }
}

TEST_CASE("weights of the Levi Cartan on sl3") {
    CHECK(weight_multiset(kA11) == ints({-2, -1, -1, 0, 0, 1, 1, 2}));
    CHECK(weight_multiset(kA12) == ints({-4, -2, -2, 0, 0, 2, 2, 4}));

    // the sl2-triple route gives the same multiset
    for (const auto* l : {&kA11, &kA12}) {
        auto t = sl2_triple(*l);
        REQUIRE(t);
        Matrix adh = ad_matrix(t->h);
        std::vector<Scalar> ev;
        for (long w = -4; w <= 4; ++w) {
            Matrix m = adh;
            for (std::size_t d = 0; d < kDim; ++d) m(d, d) -= Scalar(w);
            for (std::size_t k = 0; k < kernel(m).dim(); ++k) ev.emplace_back(w);
        }
        CHECK(ev == weight_multiset(*l));
    }
}

TEST_CASE("conjugation covariance") {
    std::mt19937_64 rng(21);
    for (int k = 0; k < 10; ++k) {
        Matrix a = random_sl3(rng);
        CHECK(a.determinant() == Scalar(1));
        Subalgebra s = conjugate(kBorel, a);
        CHECK(radical(s) == conjugate(radical(kBorel), a));
        CHECK(nilradical(s) == conjugate(nilradical(kBorel), a));
        CHECK(dims(derived_series(s)) == dims(derived_series(kBorel)));
        Subalgebra m8 = span({x1, x3, h1, h2});
        CHECK(nilradical(conjugate(m8, a)) == conjugate(nilradical(m8), a));
        CHECK(weight_multiset(conjugate(kA12, a)) == weight_multiset(kA12));
    }
}

TEST_CASE("common kernel and image sum") {
    CHECK(common_kernel(span({x1, x3}).space()).dim() == 1);
    CHECK(image_sum(span({x1, x3}).space()).dim() == 1);
    CHECK(common_kernel(span({x1, y2}).space()).dim() == 2);
    CHECK(image_sum(span({x1, y2}).space()).dim() == 2);
    CHECK(common_kernel(Subspace(kDim)).dim() == 3);
}

TEST_CASE("involution maps the paired Levi-decomposable algebras") {
    CHECK(involution_image(span({x3, y3, h1 + h2, x1, y2})) == span({x3, y3, h1 + h2, sl3::y1, x2}));
}

}  // namespace sl3
