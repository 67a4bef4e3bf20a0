#include "sl3/exact.hpp"

#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <regex>

namespace sl3 {

// ---------------------------------------------------------------- Scalar

Scalar Scalar::inverse() const {
    mpq_class n = norm();
    if (sgn(n) == 0) throw std::domain_error("division by zero scalar");
    return {re_ / n, -im_ / n};
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (sgn(o.im_) == 0) {
        if (sgn(o.re_) == 0) throw std::domain_error("division by zero scalar");
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Scalar::str() const {
    std::string out = re_.get_str();
    if (sgn(im_) != 0) {
        mpq_class a = abs(im_);
        out += sgn(im_) > 0 ? "+" : "-";
        out += a.get_num().get_str() + "/" + a.get_den().get_str() + "*i";
    }
    return out;
}

Scalar Scalar::parse(std::string_view text) {
    static const std::regex grammar(R"(^(-?\d+)(?:/(\d+))?(?:([+-])(\d+)(?:/(\d+))?\*i)?$)");
    std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, grammar)) throw ParseError("malformed scalar '" + s + "'");
    auto frac = [&](const std::string& num, const std::string& den) {
        mpz_class d = den.empty() ? mpz_class(1) : mpz_class(den);
        if (d == 0) throw ParseError("zero denominator in '" + s + "'");
        mpq_class q(mpz_class(num), d);
        q.canonicalize();
        return q;
    };
    mpq_class re = frac(m[1].str(), m[2].str());
    mpq_class im = 0;
    if (m[3].matched) {
        im = frac(m[4].str(), m[5].str());
        if (m[3].str() == "-") im = -im;
    }
    return {re, im};
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar pow(Scalar base, unsigned exp) {
    Scalar r(1);
    while (exp) {
        if (exp & 1U) r *= base;
        base *= base;
        exp >>= 1U;
    }
    return r;
}

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return mpq_class(rn, rd);
}

}  // namespace

std::optional<Scalar> sqrt_in_field(const Scalar& s) {
    if (s.is_real()) {
        if (sgn(s.re()) >= 0) {
            auto r = rational_sqrt(s.re());
            if (!r) return std::nullopt;
            return Scalar(*r);
        }
        auto r = rational_sqrt(-s.re());
        if (!r) return std::nullopt;
        return Scalar(mpq_class(0), *r);
    }
    // (x + yi)^2 = a + bi with x^2 = (a + |s|)/2, y = b/(2x); b != 0 forces x != 0.
    auto m = rational_sqrt(s.norm());
    if (!m) return std::nullopt;
    auto x = rational_sqrt((s.re() + *m) / 2);
    if (!x) return std::nullopt;
    mpq_class y = s.im() / (2 * *x);
    return Scalar(*x, y);
}

std::optional<std::vector<Root>> quadratic_roots(const Scalar& c1, const Scalar& c0) {
    Scalar disc = c1 * c1 - Scalar(4) * c0;
    if (disc.is_zero()) return std::vector<Root>{{-c1 / Scalar(2), 2}};
    auto s = sqrt_in_field(disc);
    if (!s) return std::nullopt;
    std::vector<Root> out{{(-c1 + *s) / Scalar(2), 1}, {(-c1 - *s) / Scalar(2), 1}};
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return a.value < b.value; });
    return out;
}

namespace {

using BigFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<120>>;
using BigComplex = boost::multiprecision::cpp_complex<120>;

BigFloat to_big(const mpq_class& q) {
    return BigFloat(q.get_num().get_str().c_str()) / BigFloat(q.get_den().get_str().c_str());
}

BigComplex to_big(const Scalar& s) { return {to_big(s.re()), to_big(s.im())}; }

mpz_class round_to_mpz(const BigFloat& x) {
    auto r = boost::multiprecision::round(x).convert_to<boost::multiprecision::cpp_int>();
    return mpz_class(r.str());
}

mpz_class lcm_denominators(const std::vector<Scalar>& cs) {
    mpz_class l = 1;
    for (const auto& c : cs) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den().get_mpz_t());
    }
    return l;
}

// A root of a squarefree monic cubic lying in Q(i), if any. After the
// substitution t = u/L (L clearing all denominators) every such root has u a
// Gaussian integer, so high-precision approximations rounded at scale L give
// every candidate; each candidate is checked exactly.
std::optional<Scalar> field_root_of_squarefree_cubic(const Poly& p) {
    const auto& c = p.coeffs();
    mpz_class L = lcm_denominators(c);
    std::vector<BigComplex> bc;
    for (const auto& s : c) bc.push_back(to_big(s));
    auto eval = [&](const BigComplex& z) { return ((z + bc[2]) * z + bc[1]) * z + bc[0]; };

    // Durand-Kerner from the usual non-real starting ring.
    using BF = BigFloat;
    BF bound = 1;
    for (int k = 0; k < 3; ++k) bound = std::max(bound, BF(BF(1) + abs(bc[k])));
    BigComplex seed(BF("0.4"), BF("0.9"));
    std::vector<BigComplex> z{seed, seed * seed, seed * seed * seed};
    for (auto& w : z) w *= bound;
    BF tol = BF(1) / pow(BF(10), 90);
    for (int it = 0; it < 2000; ++it) {
        BF change = 0;
        for (int k = 0; k < 3; ++k) {
            BigComplex denom(1);
            for (int j = 0; j < 3; ++j)
                if (j != k) denom *= (z[k] - z[j]);
            if (abs(denom) == 0) denom = BigComplex(tol);
            BigComplex step = eval(z[k]) / denom;
            z[k] -= step;
            change = std::max(change, BF(abs(step)));
        }
        if (change < tol * bound) break;
    }

    BF scale(L.get_str().c_str());
    for (const auto& w : z) {
        mpz_class ur = round_to_mpz(w.real() * scale);
        mpz_class ui = round_to_mpz(w.imag() * scale);
        for (int dr = -1; dr <= 1; ++dr) {
            for (int di = -1; di <= 1; ++di) {
                Scalar cand(mpq_class(ur + dr, L), mpq_class(ui + di, L));
                if (p(cand).is_zero()) return cand;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

namespace {

// An integer root of f(X) = 4X^3 - 3mX - c in [lo, hi], where f is monotone
// on that interval (increasing when up is set).
std::optional<mpz_class> monotone_root(const mpz_class& m, const mpz_class& c, mpz_class lo,
                                       mpz_class hi, bool up) {
    auto f = [&](const mpz_class& x) -> mpz_class { return 4 * x * x * x - 3 * m * x - c; };
    while (lo <= hi) {
        mpz_class mid = lo + (hi - lo) / 2;
        int v = sgn(f(mid));
        if (v == 0) return mid;
        if ((v < 0) == up)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return std::nullopt;
}

}  // namespace

// Exact: write s = G / D with G a Gaussian integer. A cube root X + Yi of G
// has X^2 + Y^2 = M := cbrt(|G|^2) and 4X^3 - 3MX = Re G, so X is an integer
// root of a real cubic found by bisection on its three monotone pieces.
std::optional<Scalar> cbrt_in_field(const Scalar& s) {
    if (s.is_zero()) return Scalar(0);
    mpz_class D = lcm_denominators({s});
    mpz_class D2 = D * D;
    mpq_class gr = s.re() * D * D2, gi = s.im() * D * D2;
    mpz_class a = gr.get_num(), b = gi.get_num();
    mpz_class norm = a * a + b * b, M;
    if (!mpz_root(M.get_mpz_t(), norm.get_mpz_t(), 3)) return std::nullopt;
    mpz_class r = sqrt(M) + 1;          // |X| <= sqrt(M)
    mpz_class t1 = sqrt(M) / 2;         // floor(sqrt(M)/2) <= critical point
    mpz_class t2 = t1 + 1;              // beyond it
    std::vector<mpz_class> xs;
    for (auto root : {monotone_root(M, a, -r, -t2, true), monotone_root(M, a, -t1, t1, false),
                      monotone_root(M, a, t2, r, true)})
        if (root) xs.push_back(*root);
    Scalar g{mpq_class(a), mpq_class(b)};
    for (const auto& x : xs) {
        mpz_class y2 = M - x * x;
        if (sgn(y2) < 0 || !mpz_perfect_square_p(y2.get_mpz_t())) continue;
        mpz_class y = sqrt(y2);
        for (int sign : {1, -1}) {
            Scalar cand(mpq_class(x), mpq_class(sign * y));
            if (cand * cand * cand == g) return cand / Scalar(mpq_class(D));
        }
    }
    return std::nullopt;
}

std::optional<std::vector<Root>> roots_in_field(const Scalar& c2, const Scalar& c1,
                                                const Scalar& c0) {
    Poly p({c0, c1, c2, Scalar(1)});
    Poly g = gcd(p, p.derivative());
    std::vector<Root> out;
    if (g.degree() == 2) {
        out.push_back({-c2 / Scalar(3), 3});
        return out;
    }
    if (g.degree() == 1) {
        Scalar r = -g.coeff(0);  // g is monic
        out.push_back({r, 2});
        out.push_back({-c2 - Scalar(2) * r, 1});
    } else {
        Scalar r;
        if (c0.is_zero()) {
            r = Scalar(0);
        } else {
            auto found = field_root_of_squarefree_cubic(p);
            if (!found) return std::nullopt;
            r = *found;
        }
        // deflate: t^3 + c2 t^2 + c1 t + c0 = (t - r)(t^2 + q1 t + q0)
        Scalar q1 = c2 + r;
        Scalar q0 = c1 + r * q1;
        auto rest = quadratic_roots(q1, q0);
        if (!rest) return std::nullopt;
        out.push_back({r, 1});
        for (const auto& x : *rest) out.push_back(x);
    }
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return a.value < b.value; });
    return out;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Scalar& c, std::size_t degree) {
    std::vector<Scalar> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Poly::operator()(const Scalar& t) const {
    Scalar acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Scalar> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Scalar(static_cast<long>(k)) * c_[k];
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (c_.empty()) return {};
    Scalar inv = c_.back().inverse();
    std::vector<Scalar> d(c_);
    for (auto& x : d) x *= inv;
    return Poly(std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
    return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) - b.coeff(k);
    return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Scalar> rem(c_);
    int dd = d.degree();
    if (degree() < dd) return {Poly{}, *this};
    std::vector<Scalar> q(static_cast<std::size_t>(degree() - dd + 1));
    Scalar inv = d.lead().inverse();
    for (int k = degree(); k >= dd; --k) {
        Scalar f = rem[static_cast<std::size_t>(k)] * inv;
        q[static_cast<std::size_t>(k - dd)] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
    }
    return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly squarefree_part(const Poly& p) {
    if (p.degree() <= 0) return p.monic();
    Poly g = gcd(p, p.derivative());
    return p.divmod(g).first.monic();
}

// ---------------------------------------------------------------- Vec

Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
    return r;
}

Vec operator*(const Scalar& s, const Vec& v) {
    Vec r(v);
    for (auto& x : r) x *= s;
    return r;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<Scalar>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
    return {a_.begin() + static_cast<long>(r * cols_), a_.begin() + static_cast<long>((r + 1) * cols_)};
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
    std::vector<Scalar> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Scalar Matrix::trace() const {
    Scalar t;
    for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) t += (*this)(k, k);
    return t;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in product");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
        }
    return r;
}

Matrix operator*(const Scalar& s, Matrix m) {
    for (auto& x : m.a_) x *= s;
    return m;
}

std::vector<Scalar> operator*(const Matrix& m, const std::vector<Scalar>& v) {
    if (m.cols_ != v.size()) throw std::invalid_argument("shape mismatch in matrix-vector product");
    std::vector<Scalar> r(m.rows_);
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j)
            if (!m(i, j).is_zero() && !v[j].is_zero()) r[i] += m(i, j) * v[j];
    return r;
}

Scalar Matrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    if (rows_ == 3) {
        const Matrix& m = *this;
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }
    Matrix w(*this);
    Scalar det(1);
    std::size_t n = rows_;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && w(p, c).is_zero()) ++p;
        if (p == n) return Scalar(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w(p, j), w(c, j));
            det = -det;
        }
        det *= w(c, c);
        Scalar inv = w(c, c).inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (w(r, c).is_zero()) continue;
            Scalar f = w(r, c) * inv;
            for (std::size_t j = c; j < n; ++j) w(r, j) -= f * w(c, j);
        }
    }
    return det;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = rows_;
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
        aug(r, n + r) = Scalar(1);
    }
    RrefResult rr = rref(aug);
    for (std::size_t k = 0; k < n; ++k)
        if (rr.reduced(k, k) != Scalar(1)) throw std::domain_error("singular matrix");
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = rr.reduced(r, n + c);
    return inv;
}

std::size_t Matrix::rank() const { return rref(*this).rank; }

Poly Matrix::charpoly() const {
    if (rows_ != cols_) throw std::invalid_argument("charpoly of non-square matrix");
    // Faddeev-LeVerrier; exact in characteristic zero.
    std::size_t n = rows_;
    std::vector<Scalar> c(n + 1);
    c[n] = Scalar(1);
    Matrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = (*this) * mk;
        for (std::size_t d = 0; d < n; ++d) mk(d, d) += c[n - k + 1];
        c[n - k] = -((*this) * mk).trace() / Scalar(static_cast<long>(k));
    }
    return Poly(std::move(c));
}

Matrix Matrix::evaluate(const Poly& p) const {
    Matrix acc(rows_, cols_);
    const auto& cs = p.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc = acc * (*this);
        for (std::size_t d = 0; d < rows_; ++d) acc(d, d) += *it;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
        os << "]";
    }
    return os << "]";
}

RrefResult rref(const Matrix& m) {
    RrefResult out;
    out.reduced = m;
    Matrix& w = out.reduced;
    std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && w(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(w(p, j), w(r, j));
        Scalar inv = w(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j) w(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || w(i, c).is_zero()) continue;
            Scalar f = w(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!w(r, j).is_zero()) w(i, j) -= f * w(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

Subspace kernel(const Matrix& m) {
    RrefResult rr = rref(m);
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n);
        v[f] = Scalar(1);
        for (std::size_t k = 0; k < rr.pivots.size(); ++k) v[rr.pivots[k]] = -rr.reduced(k, f);
        basis.push_back(std::move(v));
    }
    return Subspace::span(n, basis);
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    RrefResult rr = rref(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
    std::vector<Scalar> x(m.cols());
    for (std::size_t k = 0; k < rr.pivots.size(); ++k) x[rr.pivots[k]] = rr.reduced(k, m.cols());
    return x;
}

Cubic charpoly3(const Matrix& m) {
    if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("charpoly3 needs a 3x3 matrix");
    Scalar tr = m.trace();
    Scalar minors = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) -
                    m(0, 2) * m(2, 0) + m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    return {-tr, minors, -m.determinant()};
}

std::vector<Root> eigenvalues(const Matrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return {};
    if (n == 1) return {{m(0, 0), 1}};
    if (n == 2) {
        auto r = quadratic_roots(-m.trace(), m.determinant());
        if (!r) throw FieldExtensionRequired("eigenvalues outside Q(i)");
        return *r;
    }
    if (n == 3) {
        Cubic c = charpoly3(m);
        auto r = roots_in_field(c.c2, c.c1, c.c0);
        if (!r) throw FieldExtensionRequired("eigenvalues outside Q(i)");
        return *r;
    }
    throw std::invalid_argument("eigenvalues implemented for size <= 3");
}

bool is_nilpotent(const Matrix& m) {
    Matrix p = m;
    for (std::size_t k = 1; k < m.rows(); ++k) p = p * m;
    return p.is_zero();
}

bool is_semisimple(const Matrix& m) { return m.evaluate(squarefree_part(m.charpoly())).is_zero(); }

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    RrefResult rr = rref(Matrix::from_rows(vectors, ambient));
    for (std::size_t r = 0; r < rr.rank; ++r) s.basis_.push_back(rr.reduced.row(r));
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t k = 0; k < ambient; ++k) {
        Vec v(ambient);
        v[k] = Scalar(1);
        s.basis_.push_back(std::move(v));
    }
    return s;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    // RREF basis: the coefficient of row k is read off at its pivot column.
    Vec coeffs(basis_.size());
    Vec rest(v);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        std::size_t p = 0;
        while (basis_[k][p].is_zero()) ++p;
        coeffs[k] = v[p];
        if (!coeffs[k].is_zero())
            for (std::size_t j = 0; j < ambient_; ++j)
                if (!basis_[k][j].is_zero()) rest[j] -= coeffs[k] * basis_[k][j];
    }
    if (!sl3::is_zero(rest)) return std::nullopt;
    return coeffs;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [&](const Vec& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& other) const {
    std::vector<Vec> all(basis_);
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, all);
}

std::vector<Vec> Subspace::annihilator() const {
    if (basis_.empty()) return full(ambient_).basis();
    return kernel(Matrix::from_rows(basis_, ambient_)).basis();
}

Subspace Subspace::intersect(const Subspace& other) const {
    std::vector<Vec> eqs = annihilator();
    auto more = other.annihilator();
    eqs.insert(eqs.end(), more.begin(), more.end());
    if (eqs.empty()) return full(ambient_);
    return kernel(Matrix::from_rows(eqs, ambient_));
}

}  // namespace sl3
