#pragma once

// Exact arithmetic over the Gaussian rationals Q(i) and the small dense
// linear algebra built on top of it. Nothing in here rounds.

#include "sl3/errors.hpp"

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sl3 {

/// An element re + im*i of Q(i). Both parts are kept in lowest terms by GMP.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
    Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    /// p/q as a real scalar.
    static Scalar frac(long p, long q) { return Scalar(mpq_class(p, q)); }
    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return {re_, -im_}; }
    /// re^2 + im^2.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return {-re_, -im_}; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    /// The global total order: real part first, then imaginary part.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    /// Text form of the scalar grammar: `INT`, `INT/INT`, optionally followed
    /// by `+INT/INT*i` or `-INT/INT*i`.
    std::string str() const;
    static Scalar parse(std::string_view text);

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Scalar pow(Scalar base, unsigned exp);

/// A square root in Q(i) if one exists. Of the two roots, returns the one
/// that is larger in the (Re, Im) order.
std::optional<Scalar> sqrt_in_field(const Scalar& s);

/// The cube root in Q(i) if there is one. It is unique: Q(i) has no
/// primitive cube roots of unity.
std::optional<Scalar> cbrt_in_field(const Scalar& s);

struct Root {
    Scalar value;
    int multiplicity = 1;
    friend bool operator==(const Root&, const Root&) = default;
};

/// Roots of t^3 + c2 t^2 + c1 t + c0 with multiplicities, sorted in the
/// global order. nullopt when the cubic does not split over Q(i).
std::optional<std::vector<Root>> roots_in_field(const Scalar& c2, const Scalar& c1,
                                                const Scalar& c0);

/// Roots of t^2 + c1 t + c0, same conventions.
std::optional<std::vector<Root>> quadratic_roots(const Scalar& c1, const Scalar& c0);

/// Dense polynomial over Q(i), coefficients low degree first, no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Scalar> coeffs);
    static Poly monomial(const Scalar& c, std::size_t degree);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar{}; }
    Scalar lead() const { return c_.empty() ? Scalar{} : c_.back(); }

    Scalar operator()(const Scalar& t) const;
    Poly derivative() const;
    Poly monic() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly&, const Poly&) = default;

    /// Quotient and remainder.
    std::pair<Poly, Poly> divmod(const Poly& d) const;

private:
    void trim();
    std::vector<Scalar> c_;
};

Poly gcd(Poly a, Poly b);
/// p / gcd(p, p'), made monic.
Poly squarefree_part(const Poly& p);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<std::vector<Scalar>>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<Scalar> row(std::size_t r) const;
    std::vector<Scalar> column(std::size_t c) const;

    bool is_zero() const;
    Scalar trace() const;
    Matrix transpose() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, Matrix m);
    friend std::vector<Scalar> operator*(const Matrix& m, const std::vector<Scalar>& v);
    friend bool operator==(const Matrix&, const Matrix&) = default;

    Scalar determinant() const;
    /// Throws std::domain_error when singular.
    Matrix inverse() const;
    std::size_t rank() const;
    /// Characteristic polynomial det(tI - M), monic of degree rows().
    Poly charpoly() const;
    /// p(M) for a polynomial p.
    Matrix evaluate(const Poly& p) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> a_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

struct RrefResult {
    std::size_t rank = 0;
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form.
RrefResult rref(const Matrix& m);

class Subspace;
/// Null space {v : m v = 0}.
Subspace kernel(const Matrix& m);

/// Some x with m x = b (free variables set to zero), or nullopt.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

/// Characteristic polynomial coefficients of a 3x3 matrix:
/// det(tI - m) = t^3 + c2 t^2 + c1 t + c0.
struct Cubic {
    Scalar c2, c1, c0;
};
Cubic charpoly3(const Matrix& m);

/// Eigenvalues with algebraic multiplicity; throws FieldExtensionRequired.
std::vector<Root> eigenvalues(const Matrix& m);

bool is_nilpotent(const Matrix& m);
/// Diagonalizable over C (minimal polynomial squarefree). Field-independent.
bool is_semisimple(const Matrix& m);

using Vec = std::vector<Scalar>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
bool is_zero(const Vec& v);

/// A linear subspace of Q(i)^n held by its RREF basis, so equal subspaces
/// have identical representations.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
    static Subspace full(std::size_t ambient);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v in the RREF basis; nullopt if v is not in the span.
    std::optional<Vec> coordinates(const Vec& v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    /// Linear functionals (as row vectors) vanishing exactly on this subspace.
    std::vector<Vec> annihilator() const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;
};

}  // namespace sl3
