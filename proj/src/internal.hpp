#pragma once

// Internal helpers shared by the classification pipeline and the
// certificate engine.

#include "sl3/classify.hpp"

#include <optional>
#include <vector>

namespace sl3::detail {

/// A verified certificate, or nullopt when none was found.
std::optional<Certificate> find_certificate(const Subalgebra& s, const ClassLabel& label);

/// Eigenvalues repeated by multiplicity. Throws FieldExtensionRequired.
std::vector<Scalar> expanded_eigenvalues(const Matrix& m);

/// First RREF basis element of S outside the subspace.
Element outside(const Subalgebra& s, const Subspace& inner);

/// ad z restricted to the ideal n, in n's RREF basis.
Matrix action_on(const Subalgebra& n, const Element& z);

/// {v : n v in v1 for every n in N}.
Subspace preimage_flag(const Subalgebra& n, const Subspace& v1);

}  // namespace sl3::detail
