#include "internal.hpp"
#include "sl3/classify.hpp"
#include "sl3/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl3 {

namespace detail {

std::vector<Scalar> expanded_eigenvalues(const Matrix& m) {
    std::vector<Scalar> out;
    for (const auto& r : eigenvalues(m))
        for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.value);
    return out;
}

Element outside(const Subalgebra& s, const Subspace& inner) {
    for (const auto& b : s.basis())
        if (!inner.contains(b.vec())) return b;
    throw InternalInconsistency("no element outside a proper subspace");
}

Matrix action_on(const Subalgebra& n, const Element& z) {
    auto nb = n.basis();
    Matrix a(nb.size(), nb.size());
    for (std::size_t j = 0; j < nb.size(); ++j) {
        Vec c = n.coordinates(bracket(z, nb[j]));
        for (std::size_t i = 0; i < nb.size(); ++i) a(i, j) = c[i];
    }
    return a;
}

Subspace preimage_flag(const Subalgebra& n, const Subspace& v1) {
    std::vector<Vec> rows;
    for (const auto& a : v1.annihilator())
        for (const auto& b : n.basis()) {
            Matrix m = to_matrix(b);
            Vec row(3);
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t i = 0; i < 3; ++i) row[j] += a[i] * m(i, j);
            rows.push_back(row);
        }
    return kernel(Matrix::from_rows(rows, 3));
}

}  // namespace detail

using detail::action_on;
using detail::expanded_eigenvalues;
using detail::outside;
using detail::preimage_flag;

namespace {

Scalar q(long p, long d = 1) { return Scalar::frac(p, d); }

Classification with_certificate(const Subalgebra& s, ClassLabel label) {
    auto cert = detail::find_certificate(s, label);
    return {std::move(label), std::move(cert)};
}

ClassLabel label_dim1(const Subalgebra& s) {
    Matrix g = to_matrix(s.basis().front());
    if (is_nilpotent(g)) return {(g * g).is_zero() ? Label::J2 : Label::J1, {}};
    if (!is_semisimple(g)) return {Label::J3, {}};
    auto e = expanded_eigenvalues(g);
    // g = lambda (h1 + alpha h2) has eigenvalues lambda (1, alpha - 1, -alpha)
    for (std::size_t i = 0; i < 3; ++i) {
        if (e[i].is_zero()) continue;
        std::size_t k = (i + 1) % 3;
        return {Label::J4, canonicalize_J4(-e[k] / e[i])};
    }
    throw InternalInconsistency("nonzero semisimple element with zero spectrum");
}

ClassLabel label_abelian2(const Subalgebra& s) {
    Subalgebra nil = nilpotent_matrices(s);
    if (nil.dim() == 0) {
        for (const auto& b : s.basis())
            if (!is_semisimple(to_matrix(b))) throw InternalInconsistency("abelian pair without toral part");
        return {Label::K1_5, {}};
    }
    if (nil.dim() == 1) return {Label::K1_2, {}};
    auto b = s.basis();
    Matrix p = to_matrix(b[0]), r = to_matrix(b[1]);
    if (!(p * p).is_zero() || !(r * r).is_zero() || !(p * r).is_zero()) return {Label::K1_1, {}};
    switch (common_kernel(s.space()).dim()) {
        case 1: return {Label::K1_3, {}};
        case 2: return {Label::K1_4, {}};
        default: throw InternalInconsistency("square-zero abelian pair with unexpected kernel");
    }
}

ClassLabel label_nonabelian2(const Subalgebra& s) {
    Subspace d = bracket_space(s.space(), s.space());
    Element z1 = Element::from_vec(d.basis().front());
    Element z2 = outside(s, d);
    // normalize so that [z1, z2] = z1
    Element br = bracket(z1, z2);
    Scalar c = Subalgebra::span_of({z1}).coordinates(br)[0];
    z2 = c.inverse() * z2;
    Matrix m1 = to_matrix(z1), m2 = to_matrix(z2);
    if (m1.rank() == 2) return {Label::K2_1, {}};
    // eigenvalue of z2 on the image line of z1
    Vec v;
    for (std::size_t j = 0; j < 3 && v.empty(); ++j)
        if (!is_zero(m1.column(j))) v = m1.column(j);
    Vec w = m2 * v;
    std::size_t piv = 0;
    while (v[piv].is_zero()) ++piv;
    Scalar alpha = w[piv] / v[piv];
    if (is_semisimple(m2)) return {Label::K2_4, alpha};
    if (alpha == q(-1, 3)) return {Label::K2_2, {}};
    if (alpha == q(-2, 3)) return {Label::K2_3, {}};
    throw InternalInconsistency("non-semisimple K2 complement with eigenvalue " + alpha.str());
}

ClassLabel label_dim2(const Subalgebra& s) {
    return is_abelian(s) ? label_abelian2(s) : label_nonabelian2(s);
}

// L3 family parameter from the eigenvalues (m1, m2) of the complement on the
// nilradical: alpha = (r - 2) / (2r - 1) with r = m1 / m2, up to alpha <-> 1/alpha.
Scalar l3_parameter(const Scalar& m1, const Scalar& m2) {
    for (int swap = 0; swap < 2; ++swap) {
        const Scalar& a = swap ? m2 : m1;
        const Scalar& b = swap ? m1 : m2;
        if (b.is_zero()) continue;
        Scalar r = a / b;
        Scalar den = Scalar(2) * r - Scalar(1);
        if (den.is_zero()) continue;
        return canonicalize_L3((r - Scalar(2)) / den);
    }
    throw InternalInconsistency("degenerate L3 eigenvalues");
}

ClassLabel label_dim3(const Subalgebra& s) {
    IsoType iso = identify_solvable(structure_constants_of(s));
    if (iso.tag == IsoTag::L5) return {Label::L5_1, {}};
    Subalgebra n = nilradical(s);
    if (n.dim() != 2) throw UnrecognizedType("three-dimensional solvable subalgebra with nilradical of dimension " +
                                             std::to_string(n.dim()));
    ClassLabel nl = label_dim2(n);
    if (nl.tag == Label::K1_1) return {Label::L3N_1, {}};
    if (nl.tag == Label::K1_2) return {Label::L3Z_1, {}};
    if (nl.tag != Label::K1_3 && nl.tag != Label::K1_4)
        throw UnrecognizedType("three-dimensional solvable subalgebra over " + nl.str());
    const bool first = nl.tag == Label::K1_3;
    Matrix a = action_on(n, outside(s, n.space()));
    if (!is_semisimple(a)) return {first ? Label::L3Q_1 : Label::L3Q_2, {}};
    auto e = expanded_eigenvalues(a);
    if (e[0] == e[1]) return {first ? Label::L2_1 : Label::L2_2, {}};
    if (a.trace().is_zero()) return {first ? Label::L4_1 : Label::L4_2, {}};
    return {first ? Label::L3_1 : Label::L3_2, l3_parameter(e[0], e[1])};
}

ClassLabel label_dim4(const Subalgebra& s) {
    IsoType iso = identify_solvable(structure_constants_of(s));
    Subalgebra n = nilpotent_matrices(s);
    if (iso.tag == IsoTag::M8) {
        switch (common_kernel(n.space()).dim()) {
            case 1: return {Label::M8_1, {}};
            case 2: return {Label::M8_2, {}};
            default: throw InternalInconsistency("M8 with unexpected nilpotent part");
        }
    }
    if (n.dim() != 3) throw UnrecognizedType("four-dimensional solvable subalgebra of type " + iso.str());
    // Eigenvalues d1, d2, d3 of the complement on the canonical flag of n.
    Subspace v1 = common_kernel(n.space());
    Subspace v2 = preimage_flag(n, v1);
    if (v1.dim() != 1 || v2.dim() != 2) throw InternalInconsistency("nilpotent part is not a full flag nilradical");
    Matrix z = to_matrix(outside(s, n.space()));
    Vec e1 = v1.basis()[0];
    Vec e2;
    for (const auto& b : v2.basis())
        if (!v1.contains(b)) e2 = b;
    Vec ze1 = z * e1;
    std::size_t piv = 0;
    while (e1[piv].is_zero()) ++piv;
    Scalar d1 = ze1[piv] / e1[piv];
    auto c = solve(Matrix::from_columns({e1, e2}, 3), z * e2);
    if (!c) throw InternalInconsistency("complement does not preserve the flag");
    Scalar d2 = (*c)[1];
    Scalar d3 = -d1 - d2;
    if (d3.is_zero()) return {Label::M13T_2, {}};
    Scalar alpha = -d1 / d3;
    if (alpha == Scalar(1)) return {Label::M12_1, {}};
    if (alpha == Scalar(-1)) return {Label::M14_1, {}};
    if (alpha == q(1, 2)) return {Label::M13Z_2, {}};
    return {Label::M13_1, alpha};
}

}  // namespace

Classification classify_dim1(const Subalgebra& s) { return with_certificate(s, label_dim1(s)); }
Classification classify_dim2(const Subalgebra& s) { return with_certificate(s, label_dim2(s)); }
Classification classify_dim3_solvable(const Subalgebra& s) { return with_certificate(s, label_dim3(s)); }

Classification classify_dim4plus_solvable(const Subalgebra& s) {
    if (s.dim() == 5) return with_certificate(s, {Label::B, {}});
    if (s.dim() == 4) return with_certificate(s, label_dim4(s));
    throw UnrecognizedType("solvable subalgebra of dimension " + std::to_string(s.dim()));
}

ClassLabel classify_semisimple_or_levi(const Subalgebra& s) {
    if (s.dim() == kDim) return {Label::SL3, {}};
    LeviDecomposition ld = levi_subalgebra(s);
    if (ld.semisimple.dim() != 3) throw UnrecognizedType("Levi factor of dimension " + std::to_string(ld.semisimple.dim()));
    auto w = weight_multiset(ld.semisimple);
    bool principal = std::find(w.begin(), w.end(), Scalar(4)) != w.end();
    const Subalgebra& r = ld.radical;
    if (r.dim() == 0) return {principal ? Label::A1_2 : Label::A1_1, {}};
    if (principal) throw UnrecognizedType("principal sl2 with a nonzero radical");
    if (r.dim() == 1) return {Label::A1J_1, {}};
    if (r.dim() == 2 || r.dim() == 3) {
        Subalgebra n = r.dim() == 2 ? r : nilpotent_matrices(r);
        std::size_t ck = common_kernel(n.space()).dim();
        if (ck == 2) return {r.dim() == 2 ? Label::A1K1_1 : Label::A1L2_1, {}};
        if (ck == 1) return {r.dim() == 2 ? Label::A1K1_2 : Label::A1L2_2, {}};
    }
    throw UnrecognizedType("Levi-decomposable subalgebra with radical of dimension " + std::to_string(r.dim()));
}

Classification classify(const Subalgebra& s) {
    if (s.dim() == 0) throw std::invalid_argument("the zero subalgebra has no class");
    if (!is_solvable(s)) return {classify_semisimple_or_levi(s), std::nullopt};
    switch (s.dim()) {
        case 1: return classify_dim1(s);
        case 2: return classify_dim2(s);
        case 3: return classify_dim3_solvable(s);
        default: return classify_dim4plus_solvable(s);
    }
}

bool certify(const Subalgebra& s, const ClassLabel& label, const Certificate& cert) {
    const Matrix& a = cert.conjugator;
    if (a.rows() != 3 || a.cols() != 3 || a.determinant() != Scalar(1)) return false;
    return conjugate(s, a) == representative_of(label);
}

ConjugacyResult conjugacy_check(const Subalgebra& s, const Subalgebra& t) {
    Classification cs = classify(s), ct = classify(t);
    if (cs.label == ct.label) {
        if (cs.certificate && ct.certificate) {
            Matrix c = cs.certificate->conjugator * ct.certificate->conjugator.inverse();
            if (c.determinant() == Scalar(1) && conjugate(s, c) == t) return Equivalent{{c}};
            throw InternalInconsistency("composed certificate does not conjugate");
        }
        return Unknown{};
    }
    if (auto d = first_difference(signature(s), signature(t))) return Distinct{*d};
    return Distinct{"label"};
}

}  // namespace sl3
