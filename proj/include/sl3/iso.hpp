#pragma once

// Abstract isomorphism types of the small solvable Lie algebras that occur
// inside sl3, read off from structure constants alone.
//
// Standard forms (all other brackets of basis vectors vanish):
//   K2       [z1,z2] = z1
//   L2       [z3,z1] = z1, [z3,z2] = z2
//   L3(a)    [z3,z1] = z2, [z3,z2] = a z1 + z2
//   L4       [z3,z1] = z2, [z3,z2] = z1
//   L5       [z3,z1] = z2
//   M8       [z1,z2] = z2, [z3,z4] = z4
//   M12      [z4,z1] = z1, [z4,z2] = 2 z2, [z4,z3] = z3, [z3,z1] = z2
//   M13(a)   [z4,z1] = z1 + a z3, [z4,z2] = z2, [z4,z3] = z1, [z3,z1] = z2
//   M14      [z4,z1] = z3, [z4,z3] = z1, [z3,z1] = z2

#include "sl3/subalgebra.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace sl3 {

class StructureConstants {
public:
    StructureConstants() = default;
    /// table[i][j] = coordinates of [e_i, e_j]. Throws std::invalid_argument
    /// unless antisymmetric and Jacobi.
    StructureConstants(std::size_t dim, std::vector<std::vector<Vec>> table);

    /// Builds from the nonzero relations [e_i, e_j] = v (0-based indices);
    /// antisymmetric partners are filled in.
    static StructureConstants from_relations(std::size_t dim,
                                             const std::vector<std::tuple<std::size_t, std::size_t, Vec>>& rels);

    std::size_t dim() const { return dim_; }
    const Vec& operator()(std::size_t i, std::size_t j) const { return table_[i][j]; }
    Vec bracket(const Vec& u, const Vec& v) const;
    /// Matrix of ad u.
    Matrix ad(const Vec& u) const;

    /// Structure constants in the basis given by the columns of T.
    StructureConstants rebase(const Matrix& T) const;

    friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<std::vector<Vec>> table_;
};

/// Brackets of the RREF basis of S, re-expressed in that basis.
StructureConstants structure_constants_of(const Subalgebra& s);

enum class IsoTag {
    J, K1, K2, L1, L2, L3, L4, L5, M8, M12, M13, M14,
    BOREL5, A1, A1_PLUS_J, A1_SEMI_K1, A1_SEMI_L2, SL3
};

struct IsoType {
    IsoTag tag = IsoTag::J;
    std::optional<Scalar> param;  // exactly for L3 and M13

    std::string str() const;
    friend bool operator==(const IsoType&, const IsoType&) = default;
};

std::string to_string(IsoTag t);

/// The standard form of a solvable type of dimension <= 4.
/// Throws InvalidParameter when the parameter is missing or superfluous.
StructureConstants standard_structure(const IsoType& t);

/// Isomorphism type of a solvable algebra of dimension 1 to 4.
/// Throws NotSolvable, UnsupportedDimension, UnrecognizedType (a dimension-4
/// type outside M8, M12, M13(a), M14) and FieldExtensionRequired.
IsoType identify_solvable(const StructureConstants& sc);

/// Looks for an invertible T (columns = images of a's basis in b's basis)
/// with T[u, v] = [Tu, Tv]. A returned map is verified exactly. nullopt only
/// means the search was inconclusive.
std::optional<Matrix> iso_oracle(const StructureConstants& a, const StructureConstants& b,
                                 std::uint64_t seed = 0);

/// True when T is an invertible bracket-preserving map from a to b.
bool is_isomorphism(const StructureConstants& a, const StructureConstants& b, const Matrix& T);

}  // namespace sl3
