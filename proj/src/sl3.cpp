#include "sl3/sl3.hpp"

namespace sl3 {

Element Element::from_vec(const Vec& v) {
    if (v.size() != kDim) throw std::invalid_argument("coordinate vector must have length 8");
    Element e;
    for (std::size_t k = 0; k < kDim; ++k) e.c[k] = v[k];
    return e;
}

bool Element::is_zero() const {
    for (const auto& s : c)
        if (!s.is_zero()) return false;
    return true;
}

Element& Element::operator+=(const Element& o) {
    for (std::size_t k = 0; k < kDim; ++k) c[k] += o.c[k];
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (std::size_t k = 0; k < kDim; ++k) c[k] -= o.c[k];
    return *this;
}

Element operator*(const Scalar& s, Element e) {
    for (auto& x : e.c) x *= s;
    return e;
}

Element Element::operator-() const { return Scalar(-1) * *this; }

std::string Element::str() const {
    static const char* names[kDim] = {"h1", "h2", "x1", "x2", "x3", "y1", "y2", "y3"};
    std::string out;
    for (std::size_t k = 0; k < kDim; ++k) {
        const Scalar& s = c[k];
        if (s.is_zero()) continue;
        std::string coeff;
        if (s == Scalar(1)) {
            coeff = out.empty() ? "" : "+";
        } else if (s == Scalar(-1)) {
            coeff = "-";
        } else if (s.is_real()) {
            coeff = (sgn(s.re()) > 0 && !out.empty() ? "+" : "") + s.str() + "*";
        } else {
            coeff = (out.empty() ? "(" : "+(") + s.str() + ")*";
        }
        out += coeff + names[k];
    }
    return out.empty() ? "0" : out;
}

Matrix to_matrix(const Element& v) {
    const auto& c = v.c;
    Matrix m(3, 3);
    m(0, 0) = c[H1];
    m(1, 1) = c[H2] - c[H1];
    m(2, 2) = -c[H2];
    m(0, 1) = c[X1];
    m(1, 2) = c[X2];
    m(0, 2) = -c[X3];
    m(1, 0) = c[Y1];
    m(2, 1) = c[Y2];
    m(2, 0) = -c[Y3];
    return m;
}

Element from_matrix(const Matrix& m) {
    if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("expected a 3x3 matrix");
    if (!m.trace().is_zero()) throw NotTraceless("matrix has nonzero trace " + m.trace().str());
    Element v;
    v.c[H1] = m(0, 0);
    v.c[H2] = -m(2, 2);
    v.c[X1] = m(0, 1);
    v.c[X2] = m(1, 2);
    v.c[X3] = -m(0, 2);
    v.c[Y1] = m(1, 0);
    v.c[Y2] = m(2, 1);
    v.c[Y3] = -m(2, 0);
    return v;
}

BracketTable::BracketTable() {
    std::array<Matrix, kDim> mats;
    for (std::size_t k = 0; k < kDim; ++k) mats[k] = to_matrix(Element::basis(static_cast<Coord>(k)));
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < kDim; ++j)
            t_[i][j] = from_matrix(mats[i] * mats[j] - mats[j] * mats[i]);

    auto br = [this](const Element& u, const Element& v) {
        Element r;
        for (std::size_t i = 0; i < kDim; ++i) {
            if (u.c[i].is_zero()) continue;
            for (std::size_t j = 0; j < kDim; ++j)
                if (!v.c[j].is_zero()) r += (u.c[i] * v.c[j]) * t_[i][j];
        }
        return r;
    };
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < kDim; ++j) {
            if (!(t_[i][j] + t_[j][i]).is_zero())
                throw InternalInconsistency("bracket table is not antisymmetric");
            for (std::size_t k = 0; k < kDim; ++k) {
                const Element a = Element::basis(static_cast<Coord>(i));
                const Element b = Element::basis(static_cast<Coord>(j));
                const Element c = Element::basis(static_cast<Coord>(k));
                if (!(br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b))).is_zero())
                    throw InternalInconsistency("bracket table violates the Jacobi identity");
            }
        }
}

const BracketTable& BracketTable::get() {
    static const BracketTable table;
    return table;
}

Element bracket(const Element& u, const Element& v) {
    const auto& t = BracketTable::get();
    Element r;
    for (std::size_t i = 0; i < kDim; ++i) {
        if (u.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < kDim; ++j) {
            if (v.c[j].is_zero()) continue;
            const Element& b = t(i, j);
            Scalar s = u.c[i] * v.c[j];
            for (std::size_t k = 0; k < kDim; ++k)
                if (!b.c[k].is_zero()) r.c[k] += s * b.c[k];
        }
    }
    return r;
}

Element chevalley_involution(const Element& v) {
    Element r;
    r.c[H1] = -v.c[H1];
    r.c[H2] = -v.c[H2];
    r.c[X1] = -v.c[Y1];
    r.c[X2] = -v.c[Y2];
    r.c[X3] = -v.c[Y3];
    r.c[Y1] = -v.c[X1];
    r.c[Y2] = -v.c[X2];
    r.c[Y3] = -v.c[X3];
    return r;
}

Matrix ad_matrix(const Element& v) {
    Matrix m(kDim, kDim);
    for (std::size_t j = 0; j < kDim; ++j) {
        Element col = bracket(v, Element::basis(static_cast<Coord>(j)));
        for (std::size_t i = 0; i < kDim; ++i) m(i, j) = col.c[i];
    }
    return m;
}

Scalar trace_form(const Element& u, const Element& v) {
    return (to_matrix(u) * to_matrix(v)).trace();
}

Element conjugate(const Element& v, const Matrix& A, const Matrix& A_inv) {
    return from_matrix(A_inv * to_matrix(v) * A);
}

Matrix random_sl3(std::mt19937_64& rng, int factors) {
    std::uniform_int_distribution<long> entry(-2, 2);
    std::uniform_int_distribution<std::size_t> pos(0, 2);
    Matrix a = Matrix::identity(3);
    for (int k = 0; k < factors; ++k) {
        std::size_t r = pos(rng), c = pos(rng);
        if (r == c) c = (c + 1) % 3;
        Matrix u = Matrix::identity(3);
        u(r, c) = Scalar(mpq_class(entry(rng)), mpq_class(entry(rng)));
        a = a * u;
    }
    return a;
}

}  // namespace sl3
