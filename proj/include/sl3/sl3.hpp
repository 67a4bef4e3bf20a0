#pragma once

// The ambient algebra sl3 in its Chevalley basis. Coordinates are always
// ordered (h1, h2, x1, x2, x3, y1, y2, y3). The matrix realization is
//
//     [ a    c    -e ]
//     [ c'   b-a   d ]      = a h1 + b h2 + c x1 + d x2 + e x3
//     [ -e'  d'   -b ]        + c' y1 + d' y2 + e' y3
//
// so x3 and y3 carry a minus sign.

#include "sl3/exact.hpp"

#include <array>
#include <random>
#include <string>

namespace sl3 {

enum Coord : std::size_t { H1 = 0, H2, X1, X2, X3, Y1, Y2, Y3 };
inline constexpr std::size_t kDim = 8;

struct Element {
    std::array<Scalar, kDim> c{};

    static Element basis(Coord k) {
        Element e;
        e.c[k] = Scalar(1);
        return e;
    }
    static Element from_vec(const Vec& v);
    Vec vec() const { return {c.begin(), c.end()}; }

    bool is_zero() const;

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Scalar& s, Element e);
    Element operator-() const;
    friend bool operator==(const Element&, const Element&) = default;

    /// e.g. "h1+2*h2-1/3*x3"; "0" for zero.
    std::string str() const;
};

inline const Element h1 = Element::basis(H1), h2 = Element::basis(H2);
inline const Element x1 = Element::basis(X1), x2 = Element::basis(X2), x3 = Element::basis(X3);
inline const Element y1 = Element::basis(Y1), y2 = Element::basis(Y2), y3 = Element::basis(Y3);

Matrix to_matrix(const Element& v);
/// Throws NotTraceless.
Element from_matrix(const Matrix& m);

/// Structure constants computed once from the matrix realization.
/// Antisymmetry and the Jacobi identity are checked when the table is built.
class BracketTable {
public:
    static const BracketTable& get();
    const Element& operator()(std::size_t i, std::size_t j) const { return t_[i][j]; }

private:
    BracketTable();
    std::array<std::array<Element, kDim>, kDim> t_;
};

Element bracket(const Element& u, const Element& v);

/// theta(x_i) = -y_i, theta(y_i) = -x_i, theta(h_j) = -h_j. Equals -transpose.
Element chevalley_involution(const Element& v);

/// Matrix of ad v = [v, .] on coordinates.
Matrix ad_matrix(const Element& v);

/// tr(to_matrix(u) to_matrix(v)), the trace form of the defining representation.
Scalar trace_form(const Element& u, const Element& v);

/// A^{-1} v A.
Element conjugate(const Element& v, const Matrix& A, const Matrix& A_inv);
inline Element conjugate(const Element& v, const Matrix& A) {
    return conjugate(v, A, A.inverse());
}

/// A random element of SL(3, Q(i)): a product of elementary unipotent
/// matrices with small Gaussian-integer entries.
Matrix random_sl3(std::mt19937_64& rng, int factors = 6);

}  // namespace sl3
