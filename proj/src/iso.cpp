#include "sl3/iso.hpp"

#include <random>

namespace sl3 {

// ---------------------------------------------------------------- StructureConstants

StructureConstants::StructureConstants(std::size_t dim, std::vector<std::vector<Vec>> table)
    : dim_(dim), table_(std::move(table)) {
    if (table_.size() != dim_) throw std::invalid_argument("structure table has the wrong size");
    for (const auto& row : table_) {
        if (row.size() != dim_) throw std::invalid_argument("structure table has the wrong size");
        for (const auto& v : row)
            if (v.size() != dim_) throw std::invalid_argument("structure table has the wrong size");
    }
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if (!sl3::is_zero(table_[i][j] + table_[j][i]))
                throw std::invalid_argument("structure constants are not antisymmetric");
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) {
                Vec ei(dim_), ej(dim_), ek(dim_);
                ei[i] = ej[j] = ek[k] = Scalar(1);
                Vec jac = bracket(ei, bracket(ej, ek)) + bracket(ej, bracket(ek, ei)) +
                          bracket(ek, bracket(ei, ej));
                if (!sl3::is_zero(jac)) throw std::invalid_argument("structure constants violate the Jacobi identity");
            }
}

StructureConstants StructureConstants::from_relations(
    std::size_t dim, const std::vector<std::tuple<std::size_t, std::size_t, Vec>>& rels) {
    std::vector<std::vector<Vec>> t(dim, std::vector<Vec>(dim, Vec(dim)));
    for (const auto& [i, j, v] : rels) {
        t[i][j] = v;
        t[j][i] = Scalar(-1) * v;
    }
    return {dim, std::move(t)};
}

Vec StructureConstants::bracket(const Vec& u, const Vec& v) const {
    Vec r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j].is_zero()) continue;
            Scalar s = u[i] * v[j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!table_[i][j][k].is_zero()) r[k] += s * table_[i][j][k];
        }
    }
    return r;
}

Matrix StructureConstants::ad(const Vec& u) const {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < dim_; ++j) {
        Vec ej(dim_);
        ej[j] = Scalar(1);
        cols.push_back(bracket(u, ej));
    }
    return Matrix::from_columns(cols, dim_);
}

StructureConstants StructureConstants::rebase(const Matrix& T) const {
    Matrix inv = T.inverse();
    std::vector<std::vector<Vec>> t(dim_, std::vector<Vec>(dim_));
    for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t b = 0; b < dim_; ++b) t[a][b] = inv * bracket(T.column(a), T.column(b));
    return {dim_, std::move(t)};
}

StructureConstants structure_constants_of(const Subalgebra& s) {
    auto basis = s.basis();
    std::size_t n = basis.size();
    std::vector<std::vector<Vec>> t(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = s.coordinates(bracket(basis[i], basis[j]));
    return {n, std::move(t)};
}

// ---------------------------------------------------------------- IsoType

std::string to_string(IsoTag t) {
    switch (t) {
        case IsoTag::J: return "J";
        case IsoTag::K1: return "K1";
        case IsoTag::K2: return "K2";
        case IsoTag::L1: return "L1";
        case IsoTag::L2: return "L2";
        case IsoTag::L3: return "L3";
        case IsoTag::L4: return "L4";
        case IsoTag::L5: return "L5";
        case IsoTag::M8: return "M8";
        case IsoTag::M12: return "M12";
        case IsoTag::M13: return "M13";
        case IsoTag::M14: return "M14";
        case IsoTag::BOREL5: return "BOREL5";
        case IsoTag::A1: return "A1";
        case IsoTag::A1_PLUS_J: return "A1_PLUS_J";
        case IsoTag::A1_SEMI_K1: return "A1_SEMI_K1";
        case IsoTag::A1_SEMI_L2: return "A1_SEMI_L2";
        case IsoTag::SL3: return "SL3";
    }
    return "?";
}

std::string IsoType::str() const {
    std::string s = to_string(tag);
    if (param) s += "(" + param->str() + ")";
    return s;
}

StructureConstants standard_structure(const IsoType& t) {
    bool wants_param = t.tag == IsoTag::L3 || t.tag == IsoTag::M13;
    if (wants_param != t.param.has_value())
        throw InvalidParameter("parameter present exactly for L3 and M13");
    auto v = [](std::initializer_list<Scalar> xs) { return Vec(xs); };
    const Scalar a = t.param.value_or(Scalar(0));
    switch (t.tag) {
        case IsoTag::J: return StructureConstants::from_relations(1, {});
        case IsoTag::K1: return StructureConstants::from_relations(2, {});
        case IsoTag::K2: return StructureConstants::from_relations(2, {{0, 1, v({1, 0})}});
        case IsoTag::L1: return StructureConstants::from_relations(3, {});
        case IsoTag::L2:
            return StructureConstants::from_relations(3, {{2, 0, v({1, 0, 0})}, {2, 1, v({0, 1, 0})}});
        case IsoTag::L3:
            return StructureConstants::from_relations(3, {{2, 0, v({0, 1, 0})}, {2, 1, v({a, 1, 0})}});
        case IsoTag::L4:
            return StructureConstants::from_relations(3, {{2, 0, v({0, 1, 0})}, {2, 1, v({1, 0, 0})}});
        case IsoTag::L5: return StructureConstants::from_relations(3, {{2, 0, v({0, 1, 0})}});
        case IsoTag::M8:
            return StructureConstants::from_relations(4, {{0, 1, v({0, 1, 0, 0})}, {2, 3, v({0, 0, 0, 1})}});
        case IsoTag::M12:
            return StructureConstants::from_relations(4, {{3, 0, v({1, 0, 0, 0})},
                                                          {3, 1, v({0, 2, 0, 0})},
                                                          {3, 2, v({0, 0, 1, 0})},
                                                          {2, 0, v({0, 1, 0, 0})}});
        case IsoTag::M13:
            return StructureConstants::from_relations(4, {{3, 0, v({1, 0, a, 0})},
                                                          {3, 1, v({0, 1, 0, 0})},
                                                          {3, 2, v({1, 0, 0, 0})},
                                                          {2, 0, v({0, 1, 0, 0})}});
        case IsoTag::M14:
            return StructureConstants::from_relations(4, {{3, 0, v({0, 0, 1, 0})},
                                                          {3, 2, v({1, 0, 0, 0})},
                                                          {2, 0, v({0, 1, 0, 0})}});
        default: throw InvalidParameter("no standard structure for " + to_string(t.tag));
    }
}

// ---------------------------------------------------------------- identification

namespace {

Subspace bspace(const StructureConstants& sc, const Subspace& a, const Subspace& b) {
    std::vector<Vec> out;
    for (const auto& u : a.basis())
        for (const auto& v : b.basis()) out.push_back(sc.bracket(u, v));
    return Subspace::span(sc.dim(), out);
}

Subspace abstract_nilradical(const StructureConstants& sc) {
    std::size_t n = sc.dim();
    std::vector<Matrix> ads;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n);
        e[i] = Scalar(1);
        ads.push_back(sc.ad(e));
    }
    auto tests = associative_closure(ads);
    Matrix eq(tests.size(), n);
    for (std::size_t r = 0; r < tests.size(); ++r)
        for (std::size_t i = 0; i < n; ++i) eq(r, i) = (ads[i] * tests[r]).trace();
    return kernel(eq);
}

/// First standard basis vector outside `s`.
Vec outside(const Subspace& s) {
    for (std::size_t i = 0; i < s.ambient_dim(); ++i) {
        Vec e(s.ambient_dim());
        e[i] = Scalar(1);
        if (!s.contains(e)) return e;
    }
    throw InternalInconsistency("no vector outside a proper subspace");
}

/// Matrix of ad z on the subspace spanned by `basis` (which must be ad z invariant
/// modulo the span of `tail`); columns are coordinates against basis + tail.
Matrix action_on(const StructureConstants& sc, const Vec& z, const std::vector<Vec>& basis,
                 const std::vector<Vec>& tail) {
    std::vector<Vec> frame(basis);
    frame.insert(frame.end(), tail.begin(), tail.end());
    Matrix f = Matrix::from_columns(frame, sc.dim());
    Matrix a(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        auto c = solve(f, sc.bracket(z, basis[j]));
        if (!c) throw InternalInconsistency("subspace is not invariant");
        for (std::size_t i = 0; i < basis.size(); ++i) a(i, j) = (*c)[i];
    }
    return a;
}

bool is_scalar(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i == j ? m(i, j) != m(0, 0) : !m(i, j).is_zero()) return false;
    return true;
}

IsoType identify_dim3(const StructureConstants& sc) {
    Subspace all = Subspace::full(3);
    Subspace d = bspace(sc, all, all);
    if (d.dim() == 0) return {IsoTag::L1, {}};
    if (d.dim() == 1) {
        if (bspace(sc, all, d).dim() == 0) return {IsoTag::L5, {}};
        return {IsoTag::L3, Scalar(0)};
    }
    if (d.dim() != 2 || bspace(sc, d, d).dim() != 0) throw NotSolvable("3-dimensional algebra is not solvable");
    Matrix a = action_on(sc, outside(d), d.basis(), {});
    if (is_scalar(a)) return {IsoTag::L2, {}};
    Scalar tr = a.trace();
    if (tr.is_zero()) return {IsoTag::L4, {}};
    Matrix an = tr.inverse() * a;
    return {IsoTag::L3, -an.determinant()};
}

IsoType identify_dim4(const StructureConstants& sc) {
    Subspace all = Subspace::full(4);
    Subspace n = abstract_nilradical(sc);
    if (n.dim() == 3) {
        Subspace z = bspace(sc, n, n);
        if (z.dim() != 1) throw UnrecognizedType("4-dimensional algebra with abelian 3-dimensional nilradical");
        std::vector<Vec> comp;
        Subspace acc = z;
        for (const auto& v : n.basis())
            if (!acc.contains(v)) {
                comp.push_back(v);
                acc = acc.sum(Subspace::span(4, {v}));
            }
        Matrix a = action_on(sc, outside(n), comp, z.basis());
        Scalar tr = a.trace();
        if (!tr.is_zero()) {
            Matrix an = tr.inverse() * a;
            if (is_scalar(an)) return {IsoTag::M12, {}};
            return {IsoTag::M13, -an.determinant()};
        }
        if (!a.is_zero() && is_semisimple(a)) return {IsoTag::M14, {}};
        throw UnrecognizedType("4-dimensional algebra with Heisenberg nilradical and nilpotent action");
    }
    if (n.dim() == 2) {
        Subspace d = bspace(sc, all, all);
        if (bspace(sc, n, n).dim() == 0 && n.contains(d)) {
            // S/N abelian acting on N; M8 when the action is a 2-dimensional toral algebra.
            std::vector<Vec> comp;
            Subspace acc = n;
            for (const auto& v : all.basis())
                if (!acc.contains(v)) {
                    comp.push_back(v);
                    acc = acc.sum(Subspace::span(4, {v}));
                }
            std::vector<Matrix> acts;
            std::vector<Vec> flat;
            for (const auto& c : comp) {
                Matrix m = action_on(sc, c, n.basis(), {});
                acts.push_back(m);
                flat.push_back({m(0, 0), m(0, 1), m(1, 0), m(1, 1)});
            }
            bool toral = Subspace::span(4, flat).dim() == 2 && is_semisimple(acts[0]) && is_semisimple(acts[1]) &&
                         acts[0] * acts[1] == acts[1] * acts[0];
            if (toral) return {IsoTag::M8, {}};
        }
        throw UnrecognizedType("4-dimensional algebra with 2-dimensional nilradical outside M8");
    }
    throw UnrecognizedType("4-dimensional solvable algebra outside M8, M12, M13, M14");
}

}  // namespace

IsoType identify_solvable(const StructureConstants& sc) {
    std::size_t n = sc.dim();
    if (n == 0 || n > 4) throw UnsupportedDimension("identify_solvable handles dimensions 1 to 4");
    // derived series
    Subspace s = Subspace::full(n);
    while (s.dim() > 0) {
        Subspace next = bspace(sc, s, s);
        if (next.dim() == s.dim()) throw NotSolvable("algebra is not solvable");
        s = std::move(next);
    }
    switch (n) {
        case 1: return {IsoTag::J, {}};
        case 2: return {bspace(sc, Subspace::full(2), Subspace::full(2)).dim() == 0 ? IsoTag::K1 : IsoTag::K2, {}};
        case 3: return identify_dim3(sc);
        default: return identify_dim4(sc);
    }
}

// ---------------------------------------------------------------- oracle

bool is_isomorphism(const StructureConstants& a, const StructureConstants& b, const Matrix& T) {
    std::size_t n = a.dim();
    if (b.dim() != n || T.rows() != n || T.cols() != n) return false;
    if (T.determinant().is_zero()) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (T * a(i, j) != b.bracket(T.column(i), T.column(j))) return false;
    return true;
}

namespace {

std::vector<Vec> candidate_vectors(std::size_t n, const std::vector<Scalar>& scales) {
    std::vector<Vec> units;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n);
        e[i] = Scalar(1);
        units.push_back(e);
    }
    std::vector<Vec> base(units);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            base.push_back(units[i] + units[j]);
            base.push_back(units[i] - units[j]);
        }
    std::vector<Vec> out;
    for (const auto& s : scales)
        for (const auto& v : base) out.push_back(s * v);
    return out;
}

// All T with T z = w and T[z, e_j] = [w, T e_j]; tries a few members of the
// affine solution space.
std::optional<Matrix> try_pivot(const StructureConstants& a, const StructureConstants& b, const Vec& z,
                                const Vec& w, std::mt19937_64& rng) {
    std::size_t n = a.dim();
    auto idx = [n](std::size_t r, std::size_t c) { return r * n + c; };  // T(r, c)
    std::vector<Vec> rows;
    Vec rhs;
    for (std::size_t r = 0; r < n; ++r) {
        Vec row(n * n);
        for (std::size_t c = 0; c < n; ++c) row[idx(r, c)] = z[c];
        rows.push_back(row);
        rhs.push_back(w[r]);
    }
    Matrix adw = b.ad(w);
    for (std::size_t j = 0; j < n; ++j) {
        Vec ej(n);
        ej[j] = Scalar(1);
        Vec lhs = a.bracket(z, ej);  // T applied to this, minus adw * T e_j
        for (std::size_t r = 0; r < n; ++r) {
            Vec row(n * n);
            for (std::size_t c = 0; c < n; ++c) row[idx(r, c)] += lhs[c];
            for (std::size_t k = 0; k < n; ++k) row[idx(k, j)] -= adw(r, k);
            rows.push_back(row);
            rhs.push_back(Scalar(0));
        }
    }
    Matrix sys = Matrix::from_rows(rows, n * n);
    auto part = solve(sys, rhs);
    if (!part) return std::nullopt;
    Subspace hom = kernel(sys);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int attempt = 0; attempt < 6; ++attempt) {
        Vec x = *part;
        if (attempt > 0)
            for (const auto& k : hom.basis()) x = x + Scalar(coef(rng)) * k;
        Matrix T(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) T(r, c) = x[idx(r, c)];
        if (is_isomorphism(a, b, T)) return T;
        if (hom.dim() == 0) break;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Matrix> iso_oracle(const StructureConstants& a, const StructureConstants& b, std::uint64_t seed) {
    std::size_t n = a.dim();
    if (b.dim() != n) return std::nullopt;
    Matrix id = Matrix::identity(n);
    if (is_isomorphism(a, b, id)) return id;
    std::mt19937_64 rng(seed);

    // Deterministic pass: pin one basis direction z of a to a structured w in b.
    std::vector<Scalar> scales;
    for (long p : {1, -1, 2, -2, 3, -3}) scales.emplace_back(p);
    for (auto [p, q] : {std::pair{1L, 2L}, {-1L, 2L}, {1L, 3L}, {-1L, 3L}, {2L, 3L}, {-2L, 3L}, {3L, 2L}, {-3L, 2L}})
        scales.push_back(Scalar::frac(p, q));
    // Tz = w forces ad z and ad w to share a characteristic polynomial and
    // w to lie outside [b, b] whenever z lies outside [a, a].
    Subspace all = Subspace::full(n);
    Subspace da = bspace(a, all, all), db = bspace(b, all, all);
    auto zs = candidate_vectors(n, {Scalar(1)});
    auto ws = candidate_vectors(n, scales);
    std::vector<Poly> wpolys;
    for (const auto& w : ws) wpolys.push_back(b.ad(w).charpoly());
    auto compatible = [&](const Vec& z, const Poly& pz, const Vec& w, const Poly& pw) {
        return pz == pw && da.contains(z) == db.contains(w);
    };
    for (const auto& z : zs) {
        if (da.contains(z)) continue;
        Poly pz = a.ad(z).charpoly();
        for (std::size_t k = 0; k < ws.size(); ++k)
            if (compatible(z, pz, ws[k], wpolys[k]))
                if (auto t = try_pivot(a, b, z, ws[k], rng)) return t;
    }

    // Random pass.
    std::uniform_int_distribution<long> small(-3, 3), den(1, 3);
    for (int k = 0; k < 400; ++k) {
        Vec z(n), w(n);
        for (std::size_t i = 0; i < n; ++i) {
            z[i] = Scalar(small(rng));
            w[i] = Scalar::frac(small(rng), den(rng));
        }
        if (sl3::is_zero(z) || sl3::is_zero(w) || da.contains(z)) continue;
        if (!compatible(z, a.ad(z).charpoly(), w, b.ad(w).charpoly())) continue;
        if (auto t = try_pivot(a, b, z, w, rng)) return t;
    }
    return std::nullopt;
}

}  // namespace sl3
