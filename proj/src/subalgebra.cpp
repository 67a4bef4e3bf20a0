#include "sl3/subalgebra.hpp"

#include <algorithm>

namespace sl3 {

namespace {

std::vector<Element> elements_of(const Subspace& s) {
    std::vector<Element> out;
    out.reserve(s.dim());
    for (const auto& v : s.basis()) out.push_back(Element::from_vec(v));
    return out;
}

Subspace space_of(const std::vector<Element>& elems) {
    std::vector<Vec> vs;
    vs.reserve(elems.size());
    for (const auto& e : elems) vs.push_back(e.vec());
    return Subspace::span(kDim, vs);
}

Vec flatten(const Matrix& m) {
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
    return v;
}

Matrix unflatten(const Vec& v, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = v[r * n + c];
    return m;
}

/// Basis vectors of `from` that extend `base`, chosen greedily in order.
std::vector<Vec> complement(const Subspace& base, const Subspace& from) {
    std::vector<Vec> out;
    Subspace acc = base;
    for (const auto& v : from.basis()) {
        if (acc.contains(v)) continue;
        out.push_back(v);
        acc = acc.sum(Subspace::span(acc.ambient_dim(), {v}));
    }
    return out;
}

/// Elements x = sum t_i b_i of S with tr(M(x) a) = 0 for all a, where M is
/// a linear representation given on the basis.
Subalgebra trace_orthogonal(const std::vector<Element>& basis, const std::vector<Matrix>& images,
                            const std::vector<Matrix>& tests) {
    if (basis.empty()) return Subalgebra::zero();
    Matrix eq(std::max<std::size_t>(tests.size(), 1), basis.size());
    for (std::size_t r = 0; r < tests.size(); ++r)
        for (std::size_t i = 0; i < basis.size(); ++i) eq(r, i) = (images[i] * tests[r]).trace();
    Subspace sol = kernel(eq);
    std::vector<Element> out;
    for (const auto& t : sol.basis()) {
        Element x;
        for (std::size_t i = 0; i < basis.size(); ++i) x += t[i] * basis[i];
        out.push_back(x);
    }
    return from_closed_space(space_of(out));
}

bool is_ideal(const Subspace& ideal, const Subspace& s) {
    return ideal.contains(bracket_space(s, ideal));
}

}  // namespace

Subalgebra from_closed_space(Subspace s) { return Subalgebra(std::move(s)); }

Subalgebra Subalgebra::span_of(const std::vector<Element>& elems) {
    Subspace s = space_of(elems);
    if (!is_closed(s)) throw std::invalid_argument("span is not closed under the bracket");
    return Subalgebra(std::move(s));
}

Subalgebra Subalgebra::full() { return Subalgebra(Subspace::full(kDim)); }

std::vector<Element> Subalgebra::basis() const { return elements_of(space_); }

Vec Subalgebra::coordinates(const Element& v) const {
    auto c = space_.coordinates(v.vec());
    if (!c) throw std::invalid_argument("element " + v.str() + " is not in the subalgebra");
    return *c;
}

Subspace bracket_space(const Subspace& a, const Subspace& b) {
    auto ea = elements_of(a), eb = elements_of(b);
    std::vector<Vec> out;
    for (const auto& u : ea)
        for (const auto& v : eb) {
            Element w = bracket(u, v);
            if (!w.is_zero()) out.push_back(w.vec());
        }
    return Subspace::span(kDim, out);
}

bool is_closed(const Subspace& s) {
    auto e = elements_of(s);
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (!s.contains(bracket(e[i], e[j]).vec())) return false;
    return true;
}

Subalgebra generate(const std::vector<Element>& seeds) {
    Subspace s = space_of(seeds);
    for (;;) {
        Subspace next = s.sum(bracket_space(s, s));
        if (next.dim() == s.dim()) return from_closed_space(std::move(s));
        s = std::move(next);
    }
}

std::vector<Subalgebra> derived_series(const Subalgebra& s) {
    std::vector<Subalgebra> out{s};
    for (;;) {
        Subspace next = bracket_space(out.back().space(), out.back().space());
        bool stable = next.dim() == out.back().dim();
        out.push_back(from_closed_space(std::move(next)));
        if (stable || out.back().dim() == 0) return out;
    }
}

std::vector<Subalgebra> lower_central_series(const Subalgebra& s) {
    std::vector<Subalgebra> out{s};
    for (;;) {
        Subspace next = bracket_space(s.space(), out.back().space());
        bool stable = next.dim() == out.back().dim();
        out.push_back(from_closed_space(std::move(next)));
        if (stable || out.back().dim() == 0) return out;
    }
}

bool is_solvable(const Subalgebra& s) { return derived_series(s).back().dim() == 0; }
bool is_nilpotent(const Subalgebra& s) { return lower_central_series(s).back().dim() == 0; }
bool is_abelian(const Subalgebra& s) { return bracket_space(s.space(), s.space()).dim() == 0; }

std::vector<std::size_t> dims(const std::vector<Subalgebra>& series) {
    std::vector<std::size_t> out;
    for (const auto& t : series) out.push_back(t.dim());
    return out;
}

Subalgebra radical(const Subalgebra& s) {
    auto basis = s.basis();
    std::vector<Matrix> images, tests;
    for (const auto& b : basis) images.push_back(to_matrix(b));
    for (const auto& w : elements_of(bracket_space(s.space(), s.space()))) tests.push_back(to_matrix(w));
    Subalgebra r = trace_orthogonal(basis, images, tests);
    if (!is_ideal(r.space(), s.space()) || !is_solvable(r))
        throw InternalInconsistency("radical failed its solvable-ideal check");
    return r;
}

std::vector<Matrix> associative_closure(const std::vector<Matrix>& gens) {
    std::size_t n = gens.empty() ? 0 : gens.front().rows();
    Subspace acc = Subspace::span(n * n, {flatten(Matrix::identity(n))});
    for (;;) {
        std::vector<Vec> more(acc.basis());
        for (const auto& b : acc.basis()) {
            Matrix mb = unflatten(b, n);
            for (const auto& g : gens) more.push_back(flatten(mb * g));
        }
        Subspace next = Subspace::span(n * n, more);
        if (next.dim() == acc.dim()) break;
        acc = std::move(next);
    }
    std::vector<Matrix> out;
    for (const auto& b : acc.basis()) out.push_back(unflatten(b, n));
    return out;
}

Matrix ad_restricted(const Subalgebra& s, const Element& v) {
    auto basis = s.basis();
    std::vector<Vec> cols;
    for (const auto& b : basis) cols.push_back(s.coordinates(bracket(v, b)));
    return Matrix::from_columns(cols, basis.size());
}

Subalgebra nilradical(const Subalgebra& s) {
    if (!is_solvable(s)) throw NotSolvable("nilradical requires a solvable subalgebra");
    auto basis = s.basis();
    if (basis.empty()) return s;
    std::vector<Matrix> ads;
    for (const auto& b : basis) ads.push_back(ad_restricted(s, b));
    Subalgebra n = trace_orthogonal(basis, ads, associative_closure(ads));
    if (!is_ideal(n.space(), s.space()) || !is_nilpotent(n))
        throw InternalInconsistency("nilradical failed its nilpotent-ideal check");
    return n;
}

Subalgebra nilpotent_matrices(const Subalgebra& s) {
    if (!is_solvable(s)) throw NotSolvable("nilpotent part requires a solvable subalgebra");
    auto basis = s.basis();
    if (basis.empty()) return s;
    std::vector<Matrix> ms;
    for (const auto& b : basis) ms.push_back(to_matrix(b));
    Subalgebra n = trace_orthogonal(basis, ms, associative_closure(ms));
    for (const auto& b : n.basis())
        if (!is_nilpotent(to_matrix(b))) throw InternalInconsistency("nilpotent part contains a non-nilpotent matrix");
    if (!is_ideal(n.space(), s.space())) throw InternalInconsistency("nilpotent part is not an ideal");
    return n;
}

namespace {

// Levi factor of the subalgebra spanned by `s` whose radical is `r`.
Subspace levi_factor(const Subspace& s, const Subspace& r) {
    if (r.dim() == 0) return s;
    Subspace rr = bracket_space(r, r);
    std::vector<Element> w;
    for (const auto& v : complement(r, s)) w.push_back(Element::from_vec(v));
    std::vector<Element> c;
    for (const auto& v : complement(rr, r)) c.push_back(Element::from_vec(v));
    const std::size_t k = w.size(), p = c.size();

    // Coordinates of brackets [w_i, w_j] against (w..., basis of r).
    std::vector<Vec> cols;
    for (const auto& e : w) cols.push_back(e.vec());
    for (const auto& v : r.basis()) cols.push_back(v);
    Matrix frame = Matrix::from_columns(cols, kDim);

    std::vector<Vec> funcs = rr.annihilator();
    auto unknown = [p](std::size_t i, std::size_t m) { return i * p + m; };
    std::vector<Vec> rows;
    Vec rhs;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            Element bij = bracket(w[i], w[j]);
            auto coeff = solve(frame, bij.vec());
            if (!coeff) throw InternalInconsistency("subalgebra not closed during Levi solve");
            Element rij = bij;
            for (std::size_t q = 0; q < k; ++q) rij -= (*coeff)[q] * w[q];
            for (const auto& f : funcs) {
                auto apply = [&f](const Element& e) {
                    Scalar acc;
                    for (std::size_t t = 0; t < kDim; ++t) acc += f[t] * e.c[t];
                    return acc;
                };
                Vec row(k * p);
                for (std::size_t m = 0; m < p; ++m) {
                    row[unknown(j, m)] += apply(bracket(w[i], c[m]));
                    row[unknown(i, m)] -= apply(bracket(w[j], c[m]));
                    Scalar fc = apply(c[m]);
                    for (std::size_t q = 0; q < k; ++q) row[unknown(q, m)] -= (*coeff)[q] * fc;
                }
                rows.push_back(std::move(row));
                rhs.push_back(-apply(rij));
            }
        }
    Vec t(k * p);
    if (!rows.empty() && k * p > 0) {
        auto sol = solve(Matrix::from_rows(rows, k * p), rhs);
        if (!sol) throw InternalInconsistency("Levi closure equations have no solution");
        t = *sol;
    }
    std::vector<Vec> lifted(rr.basis());
    for (std::size_t i = 0; i < k; ++i) {
        Element li = w[i];
        for (std::size_t m = 0; m < p; ++m) li += t[unknown(i, m)] * c[m];
        lifted.push_back(li.vec());
    }
    return levi_factor(Subspace::span(kDim, lifted), rr);
}

}  // namespace

LeviDecomposition levi_subalgebra(const Subalgebra& s) {
    Subalgebra r = radical(s);
    if (r.dim() == s.dim()) return {Subalgebra::zero(), r};
    if (r.dim() == 0) return {s, r};
    Subspace l = levi_factor(s.space(), r.space());
    if (!is_closed(l) || l.dim() + r.dim() != s.dim() || l.intersect(r.space()).dim() != 0)
        throw InternalInconsistency("Levi factor failed its complement check");
    Subalgebra la = from_closed_space(l);
    if (radical(la).dim() != 0) throw InternalInconsistency("Levi factor is not semisimple");
    return {la, r};
}

namespace {

Matrix killing_form(const Subalgebra& l) {
    auto basis = l.basis();
    std::vector<Matrix> ads;
    for (const auto& b : basis) ads.push_back(ad_restricted(l, b));
    Matrix k(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) k(i, j) = (ads[i] * ads[j]).trace();
    return k;
}

}  // namespace

std::optional<Sl2Triple> sl2_triple(const Subalgebra& l) {
    if (l.dim() != 3 || radical(l).dim() != 0) throw std::invalid_argument("sl2_triple needs a 3-dimensional semisimple subalgebra");
    auto basis = l.basis();
    Matrix kf = killing_form(l);
    auto form = [&](const Vec& a, const Vec& b) {
        Scalar acc;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) acc += a[i] * kf(i, j) * b[j];
        return acc;
    };
    // Candidate planes spanned by pairs of basis and pairwise-sum vectors.
    std::vector<Vec> cands;
    for (std::size_t i = 0; i < 3; ++i) {
        Vec v(3);
        v[i] = 1;
        cands.push_back(v);
    }
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) cands.push_back(cands[i] + cands[j]);
    std::optional<Vec> iso;
    for (std::size_t a = 0; a < cands.size() && !iso; ++a) {
        if (form(cands[a], cands[a]).is_zero()) {
            iso = cands[a];
            break;
        }
        for (std::size_t b = a + 1; b < cands.size() && !iso; ++b) {
            Scalar qa = form(cands[a], cands[a]), qab = form(cands[a], cands[b]), qb = form(cands[b], cands[b]);
            // qb t^2 + 2 qab t + qa = 0 for u = a-vector + t b-vector
            if (qb.is_zero()) continue;
            auto roots = quadratic_roots(Scalar(2) * qab / qb, qa / qb);
            if (!roots) continue;
            Vec u = cands[a] + roots->front().value * cands[b];
            if (!sl3::is_zero(u)) iso = u;
        }
    }
    if (!iso) return std::nullopt;
    Element e;
    for (std::size_t i = 0; i < 3; ++i) e += (*iso)[i] * basis[i];

    // f0 with [e, [e, f0]] = -2e, then h = [e, f0], then f with [e, f] = h, [h, f] = -2f.
    Matrix ade = ad_restricted(l, e);
    auto f0 = solve(ade * ade, l.coordinates(Scalar(-2) * e));
    if (!f0) return std::nullopt;
    Element f0e;
    for (std::size_t i = 0; i < 3; ++i) f0e += (*f0)[i] * basis[i];
    Element h = bracket(e, f0e);
    Matrix adh = ad_restricted(l, h);
    Matrix sys(6, 3);
    Vec rhs(6);
    Vec hc = l.coordinates(h);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            sys(r, c) = ade(r, c);
            sys(3 + r, c) = adh(r, c) + (r == c ? Scalar(2) : Scalar(0));
        }
        rhs[r] = hc[r];
    }
    auto fc = solve(sys, rhs);
    if (!fc) return std::nullopt;
    Element f;
    for (std::size_t i = 0; i < 3; ++i) f += (*fc)[i] * basis[i];
    if (bracket(h, e) != Scalar(2) * e || bracket(h, f) != Scalar(-2) * f || bracket(e, f) != h)
        throw InternalInconsistency("sl2-triple relations failed");
    return Sl2Triple{e, h, f};
}

std::vector<Scalar> weight_multiset(const Subalgebra& l) {
    if (l.dim() != 3 || radical(l).dim() != 0)
        throw std::invalid_argument("weight_multiset needs a 3-dimensional semisimple subalgebra");
    auto basis = l.basis();
    Matrix kinv = killing_form(l).inverse();
    std::vector<Matrix> ads;
    for (const auto& b : basis) ads.push_back(ad_matrix(b));
    Matrix cas(kDim, kDim);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (!kinv(i, j).is_zero()) cas += kinv(i, j) * (ads[i] * ads[j]);
    // The Casimir acts on V(n) by n(n+2)/8 when built from the Killing form.
    std::vector<Scalar> out;
    std::size_t total = 0;
    for (long n = 0; n <= 4; ++n) {
        Matrix shifted = cas;
        Scalar cn = Scalar::frac(n * (n + 2), 8);
        for (std::size_t d = 0; d < kDim; ++d) shifted(d, d) -= cn;
        std::size_t k = kernel(shifted).dim();
        if (k % static_cast<std::size_t>(n + 1) != 0)
            throw InternalInconsistency("Casimir eigenspace has the wrong dimension");
        for (std::size_t m = 0; m < k / static_cast<std::size_t>(n + 1); ++m)
            for (long w = -n; w <= n; w += 2) out.emplace_back(w);
        total += k;
    }
    if (total != kDim) throw InternalInconsistency("Casimir eigenspaces do not exhaust sl3");
    std::sort(out.begin(), out.end());
    return out;
}

Subalgebra conjugate(const Subalgebra& s, const Matrix& A) {
    Matrix inv = A.inverse();
    std::vector<Element> out;
    for (const auto& b : s.basis()) out.push_back(conjugate(b, A, inv));
    return from_closed_space(space_of(out));
}

Subalgebra involution_image(const Subalgebra& s) {
    std::vector<Element> out;
    for (const auto& b : s.basis()) out.push_back(chevalley_involution(b));
    return from_closed_space(space_of(out));
}

Subspace common_kernel(const Subspace& s) {
    std::vector<Vec> rows;
    for (const auto& v : s.basis()) {
        Matrix m = to_matrix(Element::from_vec(v));
        for (std::size_t r = 0; r < 3; ++r) rows.push_back(m.row(r));
    }
    if (rows.empty()) return Subspace::full(3);
    return kernel(Matrix::from_rows(rows, 3));
}

Subspace image_sum(const Subspace& s) {
    std::vector<Vec> cols;
    for (const auto& v : s.basis()) {
        Matrix m = to_matrix(Element::from_vec(v));
        for (std::size_t c = 0; c < 3; ++c) cols.push_back(m.column(c));
    }
    return Subspace::span(3, cols);
}

}  // namespace sl3
