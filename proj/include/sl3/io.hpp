#pragma once

// Text documents for the command line: input matrices and reports, as YAML.
//
// Input:
//   matrices:                  # at least one traceless 3x3 matrix, row-major
//     - [[0, 1, 0], [0, 0, 0], [0, 0, 0]]
//     - [["1/2", 0, 0], [0, "-1/2+1/1*i", 0], [0, 0, "0-1/1*i"]]
//   closure: generate          # optional; "span" requires the span to be closed
//
// Every entry uses the scalar grammar of Scalar::parse.

#include "sl3/classify.hpp"
#include "sl3/verify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sl3::io {

struct InputDocument {
    std::vector<Matrix> matrices;
    bool generate = true;  // false: the matrices must already span a subalgebra

    friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// Throws ParseError (malformed text or entries) and NotTraceless.
InputDocument parse_input(const std::string& text);
/// As parse_input; an unreadable file is a ParseError.
InputDocument load_input(const std::string& path);
std::string serialize(const InputDocument& doc);

/// Throws ParseError when closure is "span" and the span is not closed, and
/// std::invalid_argument for the zero subalgebra.
Subalgebra subalgebra_of(const InputDocument& doc);

/// The input document whose matrices are the RREF basis of S.
InputDocument document_of(const Subalgebra& s);

struct ClassificationReport {
    ClassLabel label;
    std::string iso_type;
    Signature signature;
    std::optional<Matrix> certificate;
    /// certify passed, or there is no certificate.
    bool verified = true;

    friend bool operator==(const ClassificationReport& a, const ClassificationReport& b) {
        return a.label == b.label && a.iso_type == b.iso_type && a.signature == b.signature &&
               a.certificate == b.certificate && a.verified == b.verified;
    }
};

ClassificationReport make_report(const Subalgebra& s);
std::string serialize(const ClassificationReport& r);
/// Inverse of serialize; throws ParseError.
ClassificationReport parse_report(const std::string& text);

std::string serialize(const Signature& sig);
std::string serialize(const ConjugacyResult& r, const ClassLabel& a, const ClassLabel& b);
std::string serialize(const std::vector<CheckResult>& checks, const SuiteOptions& opts);

/// error: {kind: ..., message: ...}
std::string error_document(const std::string& kind, const std::string& message);

}  // namespace sl3::io
