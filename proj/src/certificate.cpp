// Conjugators onto class representatives.
//
// Each strategy reduces "A^{-1} S A = R" to linear conditions on the entries
// of A: element pivots s A = A r for normalized elements that any conjugator
// can be made to match, and subspace pivots A U_R inside U_S for the kernel,
// image and flag data of the nilpotent part. The determinant is then fixed
// inside the solution space by a cube root or by solving det(P + tQ) = 1.
// Every candidate is checked with certify() before it is returned.

#include "internal.hpp"
#include "sl3/errors.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <random>

namespace sl3::detail {

namespace {

using Check = std::function<bool(const Matrix&)>;

Matrix unflatten(const Vec& v, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = v[n * i + j];
    return m;
}

// Linear conditions on the entries of an n x n matrix A.
class LinearSystem {
public:
    explicit LinearSystem(std::size_t n = 3) : n_(n) {}

    /// s A = A r
    void intertwine(const Matrix& s, const Matrix& r) {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                Vec row(n_ * n_);
                for (std::size_t k = 0; k < n_; ++k) {
                    row[n_ * k + j] += s(i, k);
                    row[n_ * i + k] -= r(k, j);
                }
                rows_.push_back(std::move(row));
            }
    }

    /// A u lies in target.
    void maps_into(const Vec& u, const Subspace& target) {
        for (const auto& a : target.annihilator()) {
            Vec row(n_ * n_);
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j) row[n_ * i + j] = a[i] * u[j];
            rows_.push_back(std::move(row));
        }
    }

    void maps_into(const Subspace& from, const Subspace& target) {
        for (const auto& u : from.basis()) maps_into(u, target);
    }

    std::vector<Matrix> solutions() const {
        std::vector<Matrix> out;
        if (rows_.empty()) {
            for (std::size_t k = 0; k < n_ * n_; ++k) {
                Vec v(n_ * n_);
                v[k] = 1;
                out.push_back(unflatten(v, n_));
            }
            return out;
        }
        Subspace k = kernel(Matrix::from_rows(rows_, n_ * n_));
        for (const auto& v : k.basis()) out.push_back(unflatten(v, n_));
        return out;
    }

private:
    std::size_t n_;
    std::vector<Vec> rows_;
};

// Deterministic spread of members of a linear space of matrices.
std::vector<Matrix> members(const std::vector<Matrix>& space, std::uint64_t seed, int random_count = 24) {
    std::vector<Matrix> out;
    if (space.empty()) return out;
    Matrix sum = space[0];
    for (std::size_t k = 1; k < space.size(); ++k) sum += space[k];
    out.push_back(sum);
    for (const auto& b : space) out.push_back(b);
    for (std::size_t i = 0; i < space.size(); ++i)
        for (std::size_t j = i + 1; j < space.size(); ++j) {
            out.push_back(space[i] + space[j]);
            out.push_back(space[i] - space[j]);
        }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int k = 0; k < random_count; ++k) {
        Matrix m = Scalar(coef(rng)) * space[0];
        for (std::size_t j = 1; j < space.size(); ++j) m += Scalar(coef(rng)) * space[j];
        out.push_back(m);
    }
    return out;
}

// Coefficients of det(p + t q) as a polynomial in t (degree <= 3).
std::array<Scalar, 4> det_pencil(const Matrix& p, const Matrix& q) {
    Matrix v(4, 4);
    Vec vals(4);
    for (long t = 0; t < 4; ++t) {
        for (long k = 0; k < 4; ++k) v(t, k) = pow(Scalar(t), static_cast<unsigned>(k));
        vals[t] = (p + Scalar(t) * q).determinant();
    }
    auto c = solve(v, vals);
    if (!c) throw InternalInconsistency("singular interpolation");
    return {(*c)[0], (*c)[1], (*c)[2], (*c)[3]};
}

std::vector<Scalar> pencil_roots(std::array<Scalar, 4> c) {
    c[0] -= Scalar(1);
    std::optional<std::vector<Root>> roots;
    if (!c[3].is_zero()) {
        roots = roots_in_field(c[2] / c[3], c[1] / c[3], c[0] / c[3]);
    } else if (!c[2].is_zero()) {
        roots = quadratic_roots(c[1] / c[2], c[0] / c[2]);
    } else if (!c[1].is_zero()) {
        return {-c[0] / c[1]};
    }
    std::vector<Scalar> out;
    if (roots)
        for (const auto& r : *roots) out.push_back(r.value);
    return out;
}

// A member of the solution space with determinant 1 that passes the check.
std::optional<Matrix> unit_det(const std::vector<Matrix>& space, const Check& ok) {
    auto cands = members(space, 7);
    std::vector<Matrix> invertible;
    for (const auto& c : cands) {
        Scalar d = c.determinant();
        if (d.is_zero()) continue;
        invertible.push_back(c);
        if (auto r = cbrt_in_field(d.inverse())) {
            Matrix a = *r * c;
            if (ok(a)) return a;
        }
    }
    if (invertible.empty()) return std::nullopt;
    // Not a cube: move along pencils P + tQ inside the space.
    std::vector<Matrix> pool(cands.begin(), cands.begin() + std::min<std::size_t>(cands.size(), 14));
    for (const auto& p : pool)
        for (const auto& q : pool) {
            if (&p == &q) continue;
            for (const auto& t : pencil_roots(det_pencil(p, q))) {
                Matrix a = p + t * q;
                if (a.determinant() == Scalar(1) && ok(a)) return a;
            }
        }
    return std::nullopt;
}

std::optional<Matrix> from_pivots(const std::vector<std::pair<Matrix, Matrix>>& pivots, const Check& ok) {
    LinearSystem sys;
    for (const auto& [s, r] : pivots) sys.intertwine(s, r);
    return unit_det(sys.solutions(), ok);
}

Matrix mat(const Element& e) { return to_matrix(e); }

Subspace column_space(const Matrix& m) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    return Subspace::span(m.rows(), cols);
}

Scalar repeated_eigenvalue(const Matrix& g) {
    for (const auto& r : eigenvalues(g))
        if (r.multiplicity == 2) return r.value;
    throw InternalInconsistency("expected a repeated eigenvalue");
}

// For b with eigenvalues (m, m, -2m), m != 0: the semisimple part of b / m,
// that is I - 3 P with P the projection onto the -2m eigenline.
Matrix normalized_semisimple_part(const Matrix& b) {
    Scalar m = repeated_eigenvalue(b);
    Matrix d = b - m * Matrix::identity(3);
    Matrix p = (Scalar(9) * m * m).inverse() * (d * d);
    return Matrix::identity(3) - Scalar(3) * p;
}

// z1 spanning [S, S] and z2 with [z1, z2] = z1.
std::vector<Matrix> k2_frame(const Subalgebra& s) {
    Subspace d = bracket_space(s.space(), s.space());
    Element z1 = Element::from_vec(d.basis().front());
    Element z2 = outside(s, d);
    Scalar c = Subalgebra::span_of({z1}).coordinates(bracket(z1, z2))[0];
    return {mat(z1), mat(c.inverse() * z2)};
}

// An element of an abelian nilpotent pair whose square is nonzero.
Matrix square_nonzero(const Subalgebra& s) {
    auto b = s.basis();
    for (const auto& e : {b[0], b[1], b[0] + b[1]}) {
        Matrix m = mat(e);
        if (!(m * m).is_zero()) return m;
    }
    throw InternalInconsistency("no element with nonzero square");
}

// Complement z scaled so its weights on the nilradical are {1, 2}, and the
// weight-1 vector.
std::vector<Matrix> l3n_frame(const Subalgebra& s) {
    Subalgebra n = nilradical(s);
    Element z = outside(s, n.space());
    auto e = expanded_eigenvalues(action_on(n, z));
    Scalar m = e[1] == Scalar(2) * e[0] ? e[0] : e[1];
    z = m.inverse() * z;
    Matrix a = action_on(n, z) - Matrix::identity(2);
    Vec c = kernel(a).basis().front();
    auto nb = n.basis();
    Element n1 = c[0] * nb[0] + c[1] * nb[1];
    return {mat(z), mat(n1)};
}

std::optional<Matrix> j4_certificate(const Matrix& gs, const Matrix& gr, const Check& ok) {
    auto es = expanded_eigenvalues(gs), er = expanded_eigenvalues(gr);
    std::sort(es.begin(), es.end());
    for (const auto& r : er) {
        if (r.is_zero()) continue;
        Scalar lambda = es[0] / r;
        std::vector<Scalar> scaled;
        for (const auto& x : er) scaled.push_back(lambda * x);
        std::sort(scaled.begin(), scaled.end());
        if (scaled != es) continue;
        if (auto a = from_pivots({{gs, lambda * gr}}, ok)) return a;
    }
    return std::nullopt;
}

// Cartan subalgebra of a solvable S: generalized null space of ad x for an
// x of minimal such null space among a deterministic candidate list.
Subalgebra cartan_subalgebra(const Subalgebra& s) {
    auto b = s.basis();
    std::vector<Element> xs(b.begin(), b.end());
    Element all;
    for (std::size_t i = 0; i < b.size(); ++i) all += Scalar(static_cast<long>(i + 1)) * b[i];
    xs.push_back(all);
    std::optional<Subspace> best;
    for (const auto& x : xs) {
        Matrix m = ad_restricted(s, x);
        Matrix p = Matrix::identity(s.dim());
        for (std::size_t k = 0; k < s.dim(); ++k) p = p * m;
        Subspace k = kernel(p);
        if (best && best->dim() <= k.dim()) continue;
        std::vector<Vec> vs;
        for (const auto& c : k.basis()) {
            Element e;
            for (std::size_t i = 0; i < b.size(); ++i) e += c[i] * b[i];
            vs.push_back(e.vec());
        }
        best = Subspace::span(kDim, vs);
    }
    return from_closed_space(*best);
}

// Columns: common eigenvectors of a toral subalgebra with a regular element.
std::optional<Matrix> eigenbasis(const Subalgebra& h) {
    auto b = h.basis();
    for (long w = 1; w <= 5; ++w) {
        Element x = b[0];
        for (std::size_t i = 1; i < b.size(); ++i) x += Scalar(w * static_cast<long>(i)) * b[i];
        Matrix m = mat(x);
        std::vector<Root> ev;
        try {
            ev = eigenvalues(m);
        } catch (const FieldExtensionRequired&) {
            return std::nullopt;
        }
        if (ev.size() != 3) continue;
        std::vector<Vec> cols;
        for (const auto& r : ev) cols.push_back(kernel(m - r.value * Matrix::identity(3)).basis().front());
        return Matrix::from_columns(cols, 3);
    }
    return std::nullopt;
}

std::optional<Matrix> torus_certificate(const Subalgebra& s, const Subalgebra& r, const Check& ok) {
    Subalgebra hs = cartan_subalgebra(s), hr = cartan_subalgebra(r);
    if (hs.dim() != hr.dim()) return std::nullopt;
    auto ps = eigenbasis(hs), pr = eigenbasis(hr);
    if (!ps || !pr) return std::nullopt;
    Matrix pr_inv = pr->inverse();
    std::array<std::size_t, 3> perm{0, 1, 2};
    do {
        Matrix pi(3, 3);
        for (std::size_t k = 0; k < 3; ++k) pi(perm[k], k) = 1;
        Matrix a = *ps * pi * pr_inv;
        Matrix d = Matrix::identity(3);
        d(0, 0) = a.determinant().inverse();
        Matrix fixed = *ps * pi * d * pr_inv;
        if (ok(fixed)) return fixed;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

struct Flag {
    Subspace v1, v2;
};

std::optional<Flag> flag_of(const Subalgebra& s) {
    Subalgebra n = nilpotent_matrices(s);
    if (n.dim() != 3) return std::nullopt;
    Subspace v1 = common_kernel(n.space());
    Subspace v2 = preimage_flag(n, v1);
    if (v1.dim() != 1 || v2.dim() != 2) return std::nullopt;
    return Flag{v1, v2};
}

std::optional<Matrix> flag_certificate(const Subalgebra& s, const Subalgebra& r, const Check& ok) {
    auto fs = flag_of(s), fr = flag_of(r);
    if (!fs || !fr) return std::nullopt;
    LinearSystem sys;
    sys.maps_into(fr->v1, fs->v1);
    sys.maps_into(fr->v2, fs->v2);
    return unit_det(sys.solutions(), ok);
}

// Extends independent vectors to a basis of Q(i)^3 with standard vectors.
Matrix complete_basis(std::vector<Vec> cols) {
    for (std::size_t k = 0; k < 3 && cols.size() < 3; ++k) {
        Vec e(3);
        e[k] = 1;
        if (!Subspace::span(3, cols).contains(e)) cols.push_back(e);
    }
    return Matrix::from_columns(cols, 3);
}

// S = N + <z> with N of type K1_3 or K1_4. First map N onto R's nilpotent
// part by a kernel/image condition, then conjugate the complement inside the
// Levi factor of the parabolic normalizing that part.
std::optional<Matrix> parabolic_certificate(const Subalgebra& s, const Subalgebra& r, const Check& ok) {
    Subalgebra ns = nilpotent_matrices(s), nr = nilpotent_matrices(r);
    if (ns.dim() != 2 || nr.dim() != 2) return std::nullopt;
    const bool line = common_kernel(nr.space()).dim() == 1;
    Subspace ur = line ? image_sum(nr.space()) : common_kernel(nr.space());
    Subspace us = line ? image_sum(ns.space()) : common_kernel(ns.space());
    if (ur.dim() != us.dim()) return std::nullopt;
    LinearSystem sys;
    sys.maps_into(ur, us);
    std::optional<Matrix> a0;
    for (const auto& c : members(sys.solutions(), 3, 4))
        if (!c.determinant().is_zero()) {
            a0 = c;
            break;
        }
    if (!a0) return std::nullopt;

    // In the adapted basis F the nilpotent part is the first row (line case)
    // or the last column (plane case).
    Matrix f = complete_basis(ur.basis());
    Matrix fi = f.inverse();
    Matrix zs = fi * a0->inverse() * mat(outside(s, ns.space())) * *a0 * f;
    Matrix zr = fi * mat(outside(r, nr.space())) * f;
    const std::size_t single = line ? 0 : 2;
    const std::array<std::size_t, 2> blk = line ? std::array<std::size_t, 2>{1, 2} : std::array<std::size_t, 2>{0, 1};
    Matrix ms(2, 2), mr(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            ms(i, j) = zs(blk[i], blk[j]);
            mr(i, j) = zr(blk[i], blk[j]);
        }
    std::vector<Scalar> lambdas;
    const Scalar& as = zs(single, single);
    const Scalar& ar = zr(single, single);
    if (!ar.is_zero()) {
        lambdas.push_back(as / ar);
    } else if (!mr.determinant().is_zero()) {
        if (auto l = sqrt_in_field(ms.determinant() / mr.determinant())) {
            lambdas.push_back(*l);
            lambdas.push_back(-*l);
        }
    }
    for (const auto& lambda : lambdas) {
        LinearSystem qs(2);
        qs.intertwine(ms, lambda * mr);
        for (const auto& qm : members(qs.solutions(), 5, 8)) {
            if (qm.determinant().is_zero()) continue;
            Matrix p = Matrix::identity(3);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) p(blk[i], blk[j]) = qm(i, j);
            Matrix a = *a0 * f * p * fi;
            p(single, single) = a.determinant().inverse();
            a = *a0 * f * p * fi;
            if (ok(a)) return a;
        }
    }
    return std::nullopt;
}

std::optional<Matrix> attempt(const Subalgebra& s, const ClassLabel& label) {
    const Subalgebra r = representative_of(label);
    const Check ok = [&](const Matrix& a) { return certify(s, label, {a}); };
    auto first = [](const Subalgebra& x) { return mat(x.basis().front()); };
    switch (label.tag) {
        case Label::J1:
        case Label::J2:
            return from_pivots({{first(s), first(r)}}, ok);
        case Label::J3: {
            Matrix gs = first(s), gr = first(r);
            return from_pivots({{repeated_eigenvalue(gs).inverse() * gs, repeated_eigenvalue(gr).inverse() * gr}}, ok);
        }
        case Label::J4:
            return j4_certificate(first(s), first(r), ok);
        case Label::K1_1:
            return from_pivots({{square_nonzero(s), square_nonzero(r)}}, ok);
        case Label::K1_2: {
            Subalgebra ns = nilpotent_matrices(s), nr = nilpotent_matrices(r);
            Matrix bs = mat(outside(s, ns.space())), br = mat(outside(r, nr.space()));
            return from_pivots({{normalized_semisimple_part(bs), normalized_semisimple_part(br)},
                                {first(ns), first(nr)}},
                               ok);
        }
        case Label::K1_3: {
            LinearSystem sys;
            sys.maps_into(image_sum(r.space()), image_sum(s.space()));
            return unit_det(sys.solutions(), ok);
        }
        case Label::K1_4: {
            LinearSystem sys;
            sys.maps_into(common_kernel(r.space()), common_kernel(s.space()));
            return unit_det(sys.solutions(), ok);
        }
        case Label::K1_5:
        case Label::L3Z_1:
        case Label::M8_1:
        case Label::M8_2:
            return torus_certificate(s, r, ok);
        case Label::K2_1:
        case Label::K2_2:
        case Label::K2_3:
        case Label::K2_4: {
            auto fs = k2_frame(s), fr = k2_frame(r);
            LinearSystem sys;
            sys.intertwine(fs[1], fr[1]);
            if (fr[0].rank() == 2) {
                sys.intertwine(fs[0], fr[0]);
            } else {
                // Pinning a rank-one z1 exactly would fix its scale, which
                // changes the determinant class; match its kernel and image.
                sys.maps_into(kernel(fr[0]), kernel(fs[0]));
                sys.maps_into(column_space(fr[0]), column_space(fs[0]));
            }
            return unit_det(sys.solutions(), ok);
        }
        case Label::L3N_1: {
            auto fs = l3n_frame(s), fr = l3n_frame(r);
            return from_pivots({{fs[0], fr[0]}, {fs[1], fr[1]}}, ok);
        }
        case Label::L2_1:
        case Label::L2_2:
        case Label::L3Q_1:
        case Label::L3Q_2:
        case Label::L3_1:
        case Label::L3_2:
        case Label::L4_1:
        case Label::L4_2:
            return parabolic_certificate(s, r, ok);
        case Label::L5_1:
        case Label::M12_1:
        case Label::M13_1:
        case Label::M13Z_2:
        case Label::M13T_2:
        case Label::M14_1:
        case Label::B:
            return flag_certificate(s, r, ok);
        default:
            return std::nullopt;
    }
}

}  // namespace

std::optional<Certificate> find_certificate(const Subalgebra& s, const ClassLabel& label) {
    std::optional<Matrix> a;
    try {
        a = attempt(s, label);
    } catch (const FieldExtensionRequired&) {
        return std::nullopt;
    }
    if (!a || !certify(s, label, {*a})) return std::nullopt;
    return Certificate{*a};
}

}  // namespace sl3::detail
