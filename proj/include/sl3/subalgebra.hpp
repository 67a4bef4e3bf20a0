#pragma once

// Subalgebras of sl3 as bracket-closed subspaces of the 8-dimensional
// coordinate space, plus the structural pieces the classifier needs:
// derived and lower central series, radical, nilradical, Levi factor and
// the sl2 weights of a Levi factor on sl3.

#include "sl3/sl3.hpp"

#include <optional>
#include <vector>

namespace sl3 {

class Subalgebra {
public:
    Subalgebra() : space_(kDim) {}

    /// Span of the given elements with no closure step. Throws
    /// std::invalid_argument if the span is not bracket-closed.
    static Subalgebra span_of(const std::vector<Element>& elems);
    static Subalgebra zero() { return {}; }
    static Subalgebra full();

    std::size_t dim() const { return space_.dim(); }
    const Subspace& space() const { return space_; }
    /// The RREF basis as elements.
    std::vector<Element> basis() const;

    bool contains(const Element& v) const { return space_.contains(v.vec()); }
    bool contains(const Subalgebra& o) const { return space_.contains(o.space_); }
    /// Coordinates in the RREF basis; throws std::invalid_argument if v is outside.
    Vec coordinates(const Element& v) const;

    friend bool operator==(const Subalgebra&, const Subalgebra&) = default;

private:
    explicit Subalgebra(Subspace s) : space_(std::move(s)) {}
    friend Subalgebra from_closed_space(Subspace s);
    Subspace space_;
};

/// Wraps a subspace already known to be closed (not rechecked).
Subalgebra from_closed_space(Subspace s);

bool is_closed(const Subspace& s);

/// Smallest subalgebra containing the seeds.
Subalgebra generate(const std::vector<Element>& seeds);

/// span [A, B].
Subspace bracket_space(const Subspace& a, const Subspace& b);

/// Both series end at the first zero term or, when they stabilize above
/// zero, with the repeated term (so sl3 gives dims 8, 8).
std::vector<Subalgebra> derived_series(const Subalgebra& s);
std::vector<Subalgebra> lower_central_series(const Subalgebra& s);
bool is_solvable(const Subalgebra& s);
bool is_nilpotent(const Subalgebra& s);
bool is_abelian(const Subalgebra& s);

/// Dimensions of a series, for signatures.
std::vector<std::size_t> dims(const std::vector<Subalgebra>& series);

/// Maximal solvable ideal: elements trace-orthogonal to [S, S] in the defining
/// representation. Checked to be a solvable ideal before returning.
Subalgebra radical(const Subalgebra& s);

/// Maximal nilpotent ideal of a solvable S (its ad-nilpotent elements).
/// Throws NotSolvable.
Subalgebra nilradical(const Subalgebra& s);

/// Elements of a solvable S that are nilpotent as 3x3 matrices. For solvable
/// S this is an ideal. Throws NotSolvable.
Subalgebra nilpotent_matrices(const Subalgebra& s);

struct LeviDecomposition {
    Subalgebra semisimple;
    Subalgebra radical;
};

/// S = L + R with L semisimple and R = radical(S). L is found by solving the
/// closure condition for a graph over a complement of R, linearly modulo
/// [R, R] and recursing down the derived series of R.
LeviDecomposition levi_subalgebra(const Subalgebra& s);

struct Sl2Triple {
    Element e, h, f;
};

/// An sl2-triple spanning a 3-dimensional semisimple L, when L is split over
/// Q(i). nullopt if no isotropic vector of the Killing form was found.
std::optional<Sl2Triple> sl2_triple(const Subalgebra& l);

/// Eigenvalues, with multiplicity, of ad h on sl3 for the standard Cartan
/// element h of a 3-dimensional semisimple L (normalized by [h, e] = 2e).
/// Computed from the Casimir operator of L so that no splitting is needed.
/// Sorted in the global order.
std::vector<Scalar> weight_multiset(const Subalgebra& l);

/// A^{-1} S A.
Subalgebra conjugate(const Subalgebra& s, const Matrix& A);

/// Image of S under the Chevalley involution.
Subalgebra involution_image(const Subalgebra& s);

/// Intersection of the kernels of the matrices of S, inside Q(i)^3.
Subspace common_kernel(const Subspace& s);
/// Sum of the images of the matrices of S, inside Q(i)^3.
Subspace image_sum(const Subspace& s);

/// Matrices of ad_S restricted to S, in the RREF basis of S.
Matrix ad_restricted(const Subalgebra& s, const Element& v);

/// Basis of the unital associative algebra generated by the given square
/// matrices (as flattened vectors in a Subspace of dimension n*n).
std::vector<Matrix> associative_closure(const std::vector<Matrix>& gens);

}  // namespace sl3
