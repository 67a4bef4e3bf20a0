// Explicit isomorphisms and conjugators from the hand classification of
// the subalgebras, instantiated at sample parameters.

#include "sl3/verify.hpp"

#include "sl3/errors.hpp"

#include <sstream>

namespace sl3 {

namespace {

Scalar q(long p, long d = 1) { return Scalar::frac(p, d); }
const Scalar I = Scalar::i();

Scalar cube_root(const Scalar& s) {
    auto r = cbrt_in_field(s);
    if (!r) throw InternalInconsistency("fixture parameter without a cube root");
    return *r;
}

IsoType l3(const Scalar& a) { return {IsoTag::L3, a}; }
IsoType m13(const Scalar& a) { return {IsoTag::M13, a}; }
IsoType plain(IsoTag t) { return {t, std::nullopt}; }

// -(2a-1)(a-2) / (9(a-1)^2) and (2a-1)(a-2) / (a+1)^2.
Scalar l3_param(const Scalar& a) {
    return -(Scalar(2) * a - 1) * (a - 2) / (Scalar(9) * (a - 1) * (a - 1));
}
Scalar m13_param(const Scalar& a) {
    return (Scalar(2) * a - 1) * (a - 2) / ((a + 1) * (a + 1));
}

std::string tag(const std::string& base, const Scalar& a) { return base + "[" + a.str() + "]"; }

const std::vector<Scalar>& l3_alphas() {
    static const std::vector<Scalar> v{q(0), q(2), q(3), q(1, 2), q(-2), q(5, 7), Scalar(1) + I};
    return v;
}

const std::vector<Scalar>& m13_alphas() {
    static const std::vector<Scalar> v{q(0), q(3), q(2), q(1, 2), q(-3), q(2, 5), Scalar(2) - I};
    return v;
}

// Elements of GL(2) used for the stabilizer families.
const std::vector<std::array<Scalar, 4>>& gl2_samples() {
    static const std::vector<std::array<Scalar, 4>> v{
        {q(1), q(0), q(0), q(1)}, {q(2), q(1), q(1), q(1)}, {q(0), q(1), q(-1), q(3)},
        {Scalar(1) + I, q(2), q(1, 2), q(-1)}};
    return v;
}

Scalar det2(const std::array<Scalar, 4>& g) { return g[0] * g[3] - g[1] * g[2]; }

}  // namespace

std::vector<IsoFixture> iso_fixtures() {
    std::vector<IsoFixture> out{
        {"<x1+x2, x3, h1+h2>", {x1 + x2, x3, h1 + h2}, l3(q(-2, 9)),
         {x1 + x2 + x3, q(1, 3) * (x1 + x2) + q(2, 3) * x3, q(1, 3) * (h1 + h2)}},
        {"<x1, x2, x3>", {x1, x2, x3}, plain(IsoTag::L5), {x1, x3, x2}},
        {"<x1, h1, h2>", {x1, h1, h2}, l3(q(0)), {h1 + q(2) * h2 + x1, x1, q(1, 2) * h1 + x1}},
        {"<x1, x3, 2h1+h2>", {x1, x3, q(2) * h1 + h2}, plain(IsoTag::L2),
         {x1, x3, q(1, 3) * (q(2) * h1 + h2)}},
        {"<x1, x3, h2>", {x1, x3, h2}, plain(IsoTag::L4), {x1 + x3, x1 - x3, -h2}},
        {"<x1, x3, 2h1+h2+x2>", {x1, x3, q(2) * h1 + h2 + x2}, l3(q(-1, 4)),
         {x1 + x3, q(1, 2) * x1 + q(2, 3) * x3, q(1, 6) * (q(2) * h1 + h2 + x2)}},
        {"<x1, y2, h1-h2>", {x1, y2, h1 - h2}, plain(IsoTag::L2),
         {x1 + y2, x1 - y2, q(1, 3) * (h1 - h2)}},
        {"<x1, y2, h1+h2>", {x1, y2, h1 + h2}, plain(IsoTag::L4), {x1 + y2, x1 - y2, h1 + h2}},
        {"<y1, y3, 2h1+h2+x2>", {y1, y3, q(2) * h1 + h2 + x2}, l3(q(-1, 4)),
         {y1 + y3, q(2, 3) * y1 + q(1, 2) * y3, q(-1, 6) * (q(2) * h1 + h2 + x2)}},
        {"<x2, y1, y3>", {x2, y1, y3}, plain(IsoTag::L5), {x2, y1, y3}},
        {"<x1, x3, y2>", {x1, x3, y2}, plain(IsoTag::L5), {y2, -x1, x3}},
        {"<x1, y2, h1-h2+x3>", {x1, y2, h1 - h2 + x3}, l3(q(-1, 4)),
         {x1 + y2, q(1, 3) * x1 + q(1, 2) * y2, q(1, 6) * (h1 - h2 + x3)}},
        {"<x1, x3, h1-h2>", {x1, x3, h1 - h2}, l3(q(0)), {x1 + x3, x1, q(1, 3) * (h1 - h2)}},
        {"<x1, y2, 2h1+h2>", {x1, y2, q(2) * h1 + h2}, l3(q(0)),
         {x1 + y2, x1, q(1, 3) * (q(2) * h1 + h2)}},
        {"<x1, x3, h1, h2>", {x1, x3, h1, h2}, plain(IsoTag::M8),
         {q(1, 3) * (h1 - h2), x1, q(1, 3) * (h1 + q(2) * h2), x3}},
        {"<x1, y2, h1, h2>", {x1, y2, h1, h2}, plain(IsoTag::M8),
         {q(-1, 3) * (h1 + q(2) * h2), y2, q(1, 3) * (q(2) * h1 + h2), x1}},
        {"<x1, x2, x3, h1>", {x1, x2, x3, h1}, m13(q(2)),
         {q(2) * x1 - x2, q(3) * x3, x1 + x2, h1}},
        {"<x1, x2, x3, h1+h2>", {x1, x2, x3, h1 + h2}, plain(IsoTag::M12),
         {q(2) * x1 + x2, x3, x1 + x2, h1 + h2}},
        {"<x1, x2, x3, h1-h2>", {x1, x2, x3, h1 - h2}, plain(IsoTag::M14),
         {x1 - x2, q(2) * x3, x1 + x2, q(1, 3) * (h1 - h2)}},
        // Radicals of the two Levi decomposable families.
        {"<x1, y2>", {x1, y2}, plain(IsoTag::K1), {x1, y2}},
        {"<h1-h2, x1, y2>", {h1 - h2, x1, y2}, plain(IsoTag::L2), {x1, y2, q(1, 3) * (h1 - h2)}},
        {"<x2, y1, y3, 2h1+h2>", {x2, y1, y3, q(2) * h1 + h2}, m13(q(0)),
         {y3, -y1, x2 + y3, q(-1, 3) * (q(2) * h1 + h2)}},
    };
    for (const auto& a : l3_alphas()) {
        Scalar k = Scalar(1) / (Scalar(3) * (a - 1));
        Element z = (a - 1) * h1 + a * h2;
        out.push_back({tag("<x1, x3, (a-1)h1+a h2>", a), {x1, x3, z}, l3(l3_param(a)),
                       {x1 + x3, k * (a - 2) * x1 + k * (Scalar(2) * a - 1) * x3, k * z}});
        Element w = h1 + a * h2;
        out.push_back({tag("<x1, y2, h1+a h2>", a), {x1, y2, w}, l3(l3_param(a)),
                       {x1 + y2, k * ((a - 2) * x1 + (Scalar(2) * a - 1) * y2), -k * w}});
    }
    for (const auto& a : m13_alphas()) {
        Scalar k = Scalar(1) / (a + 1);
        Element z = a * h1 + h2;
        out.push_back({tag("<x1, x2, x3, a h1+h2>", a), {x1, x2, x3, z}, m13(m13_param(a)),
                       {k * (Scalar(2) * a - 1) * x1 - k * (a - 2) * x2, k * Scalar(3) * (a - 1) * x3,
                        x1 + x2, k * z}});
    }
    return out;
}

std::vector<ConjugatorFixture> conjugator_fixtures() {
    std::vector<ConjugatorFixture> out;
    auto add = [&](std::string name, std::vector<Element> s, std::vector<Element> t, Matrix A,
                   std::string erratum = {}) {
        out.push_back({std::move(name), std::move(s), std::move(t), std::move(A), std::move(erratum)});
    };
    const Element k12 = h1 + q(2) * h2;  // the semisimple generator of the K1_2 class

    // Abelian two-dimensional case analysis.
    for (auto [al, ga, de] : std::vector<std::array<Scalar, 3>>{
             {q(1), q(1), q(1)}, {q(2), q(-3), q(5)}, {I, q(1), q(2)}, {q(-1, 2), q(3), q(-1, 3)}}) {
        add("unipotent in the centralizer of x1 [" + al.str() + "," + ga.str() + "," + de.str() + "]",
            {x1, al * k12 + ga * x3 + de * y2}, {x1, k12},
            Matrix{{1, 0, ga / (q(3) * al)}, {0, 1, 0}, {0, de / (q(3) * al), 1}});
    }
    for (const auto& la : {q(2), q(-1, 3), Scalar(1) + I}) {
        add(tag("diagonal rescaling of x3+c*y2", la), {x1, x3 + la * la * la * y2}, {x1, x3 + y2},
            Matrix{{la, 0, 0}, {0, Scalar(1) / (la * la), 0}, {0, 0, la}});
    }
    add("<x1, x3+y2> onto K1_1", {x1, x3 + y2}, {x1 + x2, x3}, Matrix{{-1, 1, 0}, {0, 0, 1}, {0, 1, 0}});
    for (const auto& g : gl2_samples()) {
        Scalar inv = Scalar(1) / det2(g);
        std::string p = "[" + g[0].str() + "," + g[1].str() + "," + g[2].str() + "," + g[3].str() + "]";
        add("stabilizer of h1+2h2 " + p, {k12}, {k12},
            Matrix{{g[0], g[1], 0}, {g[2], g[3], 0}, {0, 0, inv}});
        add("stabilizer of h1-h2 " + p, {h1 - h2}, {h1 - h2},
            Matrix{{g[0], 0, g[1]}, {0, inv, 0}, {g[2], 0, g[3]}});
        add("stabilizer of h1+h2/2 " + p, {h1 + q(1, 2) * h2}, {h1 + q(1, 2) * h2},
            Matrix{{inv, 0, 0}, {0, g[0], g[1]}, {0, g[2], g[3]}});
        add("block stabilizer of <x1, x3> " + p, {x1, x3}, {x1, x3},
            Matrix{{inv, 0, 0}, {0, g[0], g[1]}, {0, g[2], g[3]}});
        add("corner stabilizer of <x1, y2> " + p, {x1, y2}, {x1, y2},
            Matrix{{g[0], 0, g[1]}, {0, inv, 0}, {g[2], 0, g[3]}});
    }
    add("<x3, h1-h2> onto K1_2", {x3, h1 - h2}, {x1, k12}, Matrix{{1, 0, 0}, {0, 0, 1}, {0, -1, 0}});
    add("<x2, h1+h2/2> onto K1_2", {x2, h1 + q(1, 2) * h2}, {x1, k12},
        Matrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});

    // Nonabelian two-dimensional case analysis.
    for (const auto& a : {q(0), q(3), q(-1, 2) + I}) {
        add(tag("K2 over x1+x2", a), {x1 + x2, -h1 - h2 + a * x3}, {x1 + x2, h1 + h2},
            Matrix{{1, 0, -a / q(2)}, {0, 1, 0}, {0, 0, 1}});
    }
    for (auto [a, c, d] : std::vector<std::array<Scalar, 3>>{
             {q(0), q(1), q(1)}, {q(1), q(2), q(-3)}, {q(-1), I, q(1, 2)}, {q(2, 5), q(-4), q(7)}}) {
        Element z = a * h1 + (Scalar(2) * a + 1) * h2;
        add("K2 over x1, generic [" + a.str() + "," + c.str() + "," + d.str() + "]", {x1, z + c * x3 + d * y2},
            {x1, z},
            Matrix{{1, -c * d / (Scalar(3) * a + 2), c / (Scalar(3) * a + 1)},
                   {0, 1, 0},
                   {0, d / (Scalar(3) * a + 2), 1}});
    }
    const Element k22 = q(-1, 3) * h1 + q(1, 3) * h2;
    const Element k23 = q(-2, 3) * h1 - q(1, 3) * h2;
    for (auto [la, d] : std::vector<std::array<Scalar, 2>>{{q(1), q(1)}, {q(2), q(-3)}, {I, q(1, 2)}}) {
        Scalar c = la * la * la;
        add("K2 over x1 onto K2_2 [" + la.str() + "," + d.str() + "]", {x1, k22 + c * x3 + d * y2},
            {x1, k22 + x3},
            Matrix{{la, -c * d * la, 0}, {0, la, 0}, {0, d * la, Scalar(1) / (la * la)}});
    }
    for (const auto& d : {q(1), q(-5, 2), I}) {
        add(tag("K2 over x1 onto <x1, h1-h2>", d), {x1, k22 + d * y2}, {x1, h1 - h2},
            Matrix{{1, 0, 0}, {0, 1, 0}, {0, d, 1}});
    }
    // (1,3) entry: -c + c(l^2-1)/l^2 with l the cube root.
    for (auto [la, c] : std::vector<std::array<Scalar, 2>>{{q(1), q(1)}, {q(2), q(-3)}, {I, q(1, 2)}}) {
        Scalar d = Scalar(1) / (la * la * la);
        Scalar l2 = la * la;
        add("K2 over x1 onto K2_3 [" + la.str() + "," + c.str() + "]", {x1, k23 + c * x3 + d * y2},
            {x1, k23 + y2},
            Matrix{{la, -c * (l2 - 1) / l2, -c + c * (l2 - 1) / l2}, {0, la, 0}, {0, 1, Scalar(1) / l2}});
    }
    for (const auto& c : {q(1), q(-2, 3), Scalar(1) + I}) {
        add(tag("K2 over x1 onto <x1, 2h1+h2>", c), {x1, k23 + c * x3}, {x1, q(2) * h1 + h2},
            Matrix{{1, 0, -c}, {0, 1, 0}, {0, 0, 1}});
    }

    // Three-dimensional case analysis. Triples (mu, a, c) give b = -mu^3 and
    // -ab a square, so every radical in the matrices is in Q(i).
    struct Nilcase {
        Scalar mu, a, c;
    };
    const std::vector<Nilcase> nil{{q(1), q(4), q(1)}, {q(2), q(2), q(3)}, {q(-1), q(-9), q(-2)}};
    for (const auto& [mu, a, c] : nil) {
        Scalar b = -(mu * mu * mu);
        Scalar s = *sqrt_in_field(-a * b);
        for (int sign : {1, -1}) {
            Scalar ss = Scalar(sign) * s;
            std::string p = "[" + a.str() + "," + b.str() + "," + c.str() + "," + (sign > 0 ? "+" : "-") + "]";
            Scalar k = Scalar(1) / cube_root(-b);
            add("non-diagonalizable <x1, x3, z> " + p, {x1, x3, a * x2 + b * y2 + c * h1 + (c / q(2) + ss) * h2},
                {x1, x3, c * h1 + (c / q(2)) * h2 + x2},
                k * Matrix{{1, 0, 0}, {0, ss, 1}, {0, b, 0}});
            Element src = a * x3 + b * y3 + c * h1 + (-c + q(2) * ss) * h2;
            Matrix A = k * Matrix{{0, ss, 1}, {1, 0, 0}, {0, -b, 0}};
            add("non-diagonalizable <x1, y2, z> as stated " + p, {x1, y2, src},
                {y1, y3, (q(-2) * c + q(2) * ss) * h1 + (c - ss) * h2 + x2}, A,
                "the h2 coefficient of the stated target has the wrong sign");
            // With -(c - s) h2 the image matches the 2h1+h2+x2 normal form reached next.
            add("non-diagonalizable <x1, y2, z> corrected " + p, {x1, y2, src},
                {y1, y3, (q(-2) * c + q(2) * ss) * h1 - (c - ss) * h2 + x2}, A);
            // The same normal forms one dimension up.
            Matrix G{{ss, 1}, {b, 0}};
            Scalar inv = Scalar(1) / G.determinant();
            add("non-diagonalizable <x1, x3, 2h1+h2, z> " + p,
                {x1, x3, q(2) * h1 + h2, a * x2 + b * y2 + c * h1 + (c / q(2) + ss) * h2},
                {x1, x2, x3, q(2) * h1 + h2}, Matrix{{inv, 0, 0}, {0, ss, 1}, {0, b, 0}});
            Matrix G11{{ss, 1}, {-b, 0}};
            Scalar inv11 = Scalar(1) / G11.determinant();
            add("non-diagonalizable <x1, y2, h1-h2, z> " + p,
                {x1, y2, h1 - h2, a * x3 + b * y3 + c * h1 + (-c + q(2) * ss) * h2},
                {x1, x3, y2, h1 - h2}, Matrix{{G11(0, 0), 0, G11(0, 1)}, {0, inv11, 0}, {G11(1, 0), 0, G11(1, 1)}});
        }
    }
    add("<x2, y1, y3> onto L5_1", {x2, y1, y3}, {x1, x2, x3},
        Matrix{{0, 0, 1}, {1, -1, 0}, {0, 1, -1}});
    add("L3 alpha=2 onto alpha=1/2 as stated", {x1, x3, h1 + q(2) * h2}, {x1, x3, h1 - h2},
        Matrix{{1, 1, q(-1, 3)}, {0, 1, 0}, {0, 0, 1}},
        "an upper unitriangular conjugator fixes diagonals, here (1,1,-2) versus (1,-2,1)");
    add("L3 alpha=2 onto alpha=1/2 corrected", {x1, x3, h1 + q(2) * h2}, {x1, x3, h1 - h2},
        Matrix{{1, 0, 0}, {0, 0, 1}, {0, -1, 0}});
    for (const auto& a : {q(2), q(3), q(-2), q(5, 7), Scalar(1) + I}) {
        Scalar b = Scalar(1) / a;
        add(tag("L3 alpha*beta=1", a), {x1, x3, (a - 1) * h1 + a * h2}, {x1, x3, (b - 1) * h1 + b * h2},
            Matrix{{1, 0, 0}, {0, 0, 1}, {0, -1, 0}});
    }
    return out;
}

std::string check_iso_fixture(const IsoFixture& f) {
    std::ostringstream err;
    Subalgebra s;
    try {
        s = Subalgebra::span_of(f.generators);
    } catch (const std::invalid_argument&) {
        return f.name + ": generators do not span a subalgebra";
    }
    IsoType got;
    try {
        got = identify_solvable(structure_constants_of(s));
    } catch (const std::exception& e) {
        return f.name + ": identify_solvable threw " + e.what();
    }
    if (!(got == f.claimed)) return f.name + ": identified as " + got.str() + ", claimed " + f.claimed.str();

    auto target = standard_structure(f.claimed);
    std::size_t n = target.dim();
    if (f.images.size() != n || s.dim() != n) return f.name + ": dimension mismatch";
    for (const auto& v : f.images)
        if (!s.contains(v)) return f.name + ": image " + v.str() + " outside the subalgebra";
    std::vector<Vec> cols;
    for (const auto& v : f.images) cols.push_back(v.vec());
    if (Subspace::span(kDim, cols).dim() != n) return f.name + ": images are dependent";
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Element want;
            const Vec& c = target(i, j);
            for (std::size_t k = 0; k < n; ++k) want += c[k] * f.images[k];
            if (!(bracket(f.images[i], f.images[j]) == want)) {
                err << f.name << ": bracket of z" << i + 1 << ", z" << j + 1 << " not preserved";
                return err.str();
            }
        }
    }
    return {};
}

std::string check_conjugator_fixture(const ConjugatorFixture& f) {
    Subalgebra s, t;
    try {
        s = Subalgebra::span_of(f.source);
        t = Subalgebra::span_of(f.target);
    } catch (const std::invalid_argument&) {
        return f.name + ": source or target is not a subalgebra";
    }
    if (s.dim() != f.source.size() || t.dim() != f.target.size())
        return f.name + ": degenerate source or target";
    if (!f.conjugator.determinant().is_one()) return f.name + ": determinant is not 1";
    if (!conjugates_onto(s, t, f.conjugator)) return f.name + ": A^-1 S A differs from the target";
    return {};
}

}  // namespace sl3
