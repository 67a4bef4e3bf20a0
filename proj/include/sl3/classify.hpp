#pragma once

// Classification of subalgebras of sl3 up to conjugation by SL(3).
//
// Every subalgebra gets exactly one ClassLabel naming a class representative
// (see representative_of). Continuous families carry a canonical parameter.
// Where possible a Certificate A with det A = 1 and A^{-1} S A equal to the
// representative is produced and checked before it is returned.

#include "sl3/iso.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sl3 {

enum class Label {
    J1, J2, J3, J4,
    K1_1, K1_2, K1_3, K1_4, K1_5,
    K2_1, K2_2, K2_3, K2_4,
    L2_1, L2_2, L3Q_1, L3Q_2, L3N_1, L3Z_1, L3_1, L3_2, L4_1, L4_2, L5_1,
    M8_1, M8_2, M12_1, M13_1, M13Z_2, M13T_2, M14_1,
    B,
    A1_1, A1_2, A1J_1, A1K1_1, A1K1_2, A1L2_1, A1L2_2,
    SL3
};

/// Every label, in declaration order.
const std::vector<Label>& all_labels();
std::string label_name(Label l);
/// Throws ParseError for unknown names.
Label label_from_name(const std::string& name);
/// True for the families J4, K2_4, L3_1, L3_2, M13_1.
bool has_param(Label l);

struct ClassLabel {
    Label tag = Label::J1;
    std::optional<Scalar> param;

    /// e.g. "K1_3", "J4(-4)", "L3_1(1/3)".
    std::string str() const;
    /// Inverse of str(); throws ParseError.
    static ClassLabel parse(const std::string& text);
    friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

struct Certificate {
    Matrix conjugator;
};

struct Signature {
    std::size_t dim = 0;
    std::vector<std::size_t> derived_dims;
    std::vector<std::size_t> lcs_dims;
    std::size_t nilradical_dim = 0;  // of the radical
    std::size_t common_kernel_dim = 0;
    std::size_t image_sum_dim = 0;
    /// Largest rank of a nilpotent matrix in the radical's nilpotent ideal.
    std::size_t max_nilpotent_rank = 0;
    std::shared_ptr<const Signature> levi_radical_signature;  // Levi-decomposable only
    std::optional<std::vector<Scalar>> weight_multiset;      // when a 3-dim Levi factor exists
    /// Common kernel and image sum of the radical's nilpotent ideal.
    std::size_t nil_common_kernel_dim = 0;
    std::size_t nil_image_sum_dim = 0;

    /// Name of the first field that differs, or nullopt when equal. Nested
    /// radical fields are reported as "levi_radical_signature.<field>".
    friend std::optional<std::string> first_difference(const Signature& a, const Signature& b);
    friend bool operator==(const Signature& a, const Signature& b) { return !first_difference(a, b); }
};

Signature signature(const Subalgebra& s);

/// Minimum of the defined members of {a, 1/a, 1-a, 1/(1-a), a/(a-1), (a-1)/a}.
Scalar canonicalize_J4(const Scalar& a);
/// min(a, 1/a); 0 maps to 0. Throws InvalidParameter for a = 1 or -1.
Scalar canonicalize_L3(const Scalar& a);

/// The stored class representative. Throws InvalidParameter when the
/// parameter is missing, superfluous, excluded or not canonical.
Subalgebra representative_of(const ClassLabel& label);

/// Abstract isomorphism type of the class (for L3 and M13 with parameter).
IsoType iso_type_of(const ClassLabel& label);

struct Classification {
    ClassLabel label;
    std::optional<Certificate> certificate;
};

/// Throws FieldExtensionRequired, UnrecognizedType, std::invalid_argument for
/// the zero subalgebra.
Classification classify(const Subalgebra& s);

Classification classify_dim1(const Subalgebra& s);
Classification classify_dim2(const Subalgebra& s);
Classification classify_dim3_solvable(const Subalgebra& s);
Classification classify_dim4plus_solvable(const Subalgebra& s);
ClassLabel classify_semisimple_or_levi(const Subalgebra& s);

/// det = 1 and conjugator^{-1} S conjugator = representative_of(label).
bool certify(const Subalgebra& s, const ClassLabel& label, const Certificate& cert);

struct Equivalent {
    Certificate certificate;  // conjugator^{-1} S conjugator = T
};
struct Distinct {
    std::string field;
};
struct Unknown {};
using ConjugacyResult = std::variant<Equivalent, Distinct, Unknown>;

ConjugacyResult conjugacy_check(const Subalgebra& s, const Subalgebra& t);

/// Deterministic sample of canonical parameters for a family label (n values,
/// respecting exclusions); empty for labels without a parameter.
std::vector<Scalar> sample_params(Label l, std::size_t n);

}  // namespace sl3
