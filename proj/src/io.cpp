#include "sl3/io.hpp"

#include "sl3/errors.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <sstream>

namespace sl3::io {

namespace {

Scalar scalar_of(const YAML::Node& n) {
    if (!n.IsScalar()) throw ParseError("expected a scalar entry");
    return Scalar::parse(n.as<std::string>());
}

Matrix matrix_of(const YAML::Node& n) {
    if (!n.IsSequence() || n.size() != 3) throw ParseError("a matrix must be a list of 3 rows");
    Matrix m(3, 3);
    for (std::size_t r = 0; r < 3; ++r) {
        const YAML::Node row = n[r];
        if (!row.IsSequence() || row.size() != 3) throw ParseError("a matrix row must have 3 entries");
        for (std::size_t c = 0; c < 3; ++c) m(r, c) = scalar_of(row[c]);
    }
    return m;
}

YAML::Node load(const std::string& text) {
    try {
        return YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
}

void emit_matrix(YAML::Emitter& out, const Matrix& m) {
    out << YAML::Flow << YAML::BeginSeq;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << YAML::BeginSeq;
        for (std::size_t c = 0; c < m.cols(); ++c) out << m(r, c).str();
        out << YAML::EndSeq;
    }
    out << YAML::EndSeq;
}

void emit_dims(YAML::Emitter& out, const std::vector<std::size_t>& v) {
    out << YAML::Flow << YAML::BeginSeq;
    for (auto d : v) out << d;
    out << YAML::EndSeq;
}

void emit_signature(YAML::Emitter& out, const Signature& s) {
    out << YAML::BeginMap;
    out << YAML::Key << "dim" << YAML::Value << s.dim;
    out << YAML::Key << "derived_dims" << YAML::Value;
    emit_dims(out, s.derived_dims);
    out << YAML::Key << "lcs_dims" << YAML::Value;
    emit_dims(out, s.lcs_dims);
    out << YAML::Key << "nilradical_dim" << YAML::Value << s.nilradical_dim;
    out << YAML::Key << "common_kernel_dim" << YAML::Value << s.common_kernel_dim;
    out << YAML::Key << "image_sum_dim" << YAML::Value << s.image_sum_dim;
    out << YAML::Key << "max_nilpotent_rank" << YAML::Value << s.max_nilpotent_rank;
    out << YAML::Key << "levi_radical_signature" << YAML::Value;
    if (s.levi_radical_signature)
        emit_signature(out, *s.levi_radical_signature);
    else
        out << YAML::Null;
    out << YAML::Key << "weight_multiset" << YAML::Value;
    if (s.weight_multiset) {
        out << YAML::Flow << YAML::BeginSeq;
        for (const auto& w : *s.weight_multiset) out << w.str();
        out << YAML::EndSeq;
    } else {
        out << YAML::Null;
    }
    out << YAML::Key << "nil_common_kernel_dim" << YAML::Value << s.nil_common_kernel_dim;
    out << YAML::Key << "nil_image_sum_dim" << YAML::Value << s.nil_image_sum_dim;
    out << YAML::EndMap;
}

std::size_t count_of(const YAML::Node& n, const char* key) {
    const YAML::Node v = n[key];
    if (!v || !v.IsScalar()) throw ParseError(std::string("missing field ") + key);
    return v.as<std::size_t>();
}

std::vector<std::size_t> dims_of(const YAML::Node& n, const char* key) {
    const YAML::Node v = n[key];
    if (!v || !v.IsSequence()) throw ParseError(std::string("missing list ") + key);
    std::vector<std::size_t> out;
    for (const auto& d : v) out.push_back(d.as<std::size_t>());
    return out;
}

Signature signature_of(const YAML::Node& n) {
    if (!n.IsMap()) throw ParseError("signature must be a map");
    Signature s;
    s.dim = count_of(n, "dim");
    s.derived_dims = dims_of(n, "derived_dims");
    s.lcs_dims = dims_of(n, "lcs_dims");
    s.nilradical_dim = count_of(n, "nilradical_dim");
    s.common_kernel_dim = count_of(n, "common_kernel_dim");
    s.image_sum_dim = count_of(n, "image_sum_dim");
    s.max_nilpotent_rank = count_of(n, "max_nilpotent_rank");
    if (const YAML::Node l = n["levi_radical_signature"]; l && !l.IsNull())
        s.levi_radical_signature = std::make_shared<const Signature>(signature_of(l));
    if (const YAML::Node w = n["weight_multiset"]; w && !w.IsNull()) {
        std::vector<Scalar> ws;
        for (const auto& x : w) ws.push_back(scalar_of(x));
        s.weight_multiset = std::move(ws);
    }
    s.nil_common_kernel_dim = count_of(n, "nil_common_kernel_dim");
    s.nil_image_sum_dim = count_of(n, "nil_image_sum_dim");
    return s;
}

std::string text_of(const YAML::Emitter& out) { return std::string(out.c_str()) + "\n"; }

}  // namespace

InputDocument parse_input(const std::string& text) {
    YAML::Node root = load(text);
    if (!root.IsMap()) throw ParseError("document must be a map with a matrices list");
    const YAML::Node ms = root["matrices"];
    if (!ms || !ms.IsSequence() || ms.size() == 0) throw ParseError("matrices must be a nonempty list");
    InputDocument doc;
    try {
        for (const auto& m : ms) doc.matrices.push_back(matrix_of(m));
        if (const YAML::Node c = root["closure"]) {
            std::string mode = c.as<std::string>();
            if (mode == "generate")
                doc.generate = true;
            else if (mode == "span")
                doc.generate = false;
            else
                throw ParseError("closure must be generate or span");
        }
    } catch (const YAML::Exception& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    for (const auto& m : doc.matrices)
        if (!m.trace().is_zero()) throw NotTraceless("matrix has nonzero trace " + m.trace().str());
    return doc;
}

InputDocument load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_input(ss.str());
}

std::string serialize(const InputDocument& doc) {
    YAML::Emitter out;
    out << YAML::BeginMap << YAML::Key << "matrices" << YAML::Value << YAML::BeginSeq;
    for (const auto& m : doc.matrices) emit_matrix(out, m);
    out << YAML::EndSeq;
    out << YAML::Key << "closure" << YAML::Value << (doc.generate ? "generate" : "span");
    out << YAML::EndMap;
    return text_of(out);
}

Subalgebra subalgebra_of(const InputDocument& doc) {
    std::vector<Element> elems;
    for (const auto& m : doc.matrices) elems.push_back(from_matrix(m));
    if (doc.generate) return generate(elems);
    try {
        return Subalgebra::span_of(elems);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("span is not a subalgebra: ") + e.what());
    }
}

InputDocument document_of(const Subalgebra& s) {
    InputDocument doc;
    for (const auto& e : s.basis()) doc.matrices.push_back(to_matrix(e));
    doc.generate = false;
    return doc;
}

ClassificationReport make_report(const Subalgebra& s) {
    Classification c = classify(s);
    ClassificationReport r;
    r.label = c.label;
    r.iso_type = iso_type_of(c.label).str();
    r.signature = signature(s);
    if (c.certificate) {
        r.certificate = c.certificate->conjugator;
        r.verified = certify(s, c.label, *c.certificate);
    }
    return r;
}

std::string serialize(const ClassificationReport& r) {
    YAML::Emitter out;
    out << YAML::BeginMap;
    out << YAML::Key << "label" << YAML::Value << r.label.str();
    out << YAML::Key << "family" << YAML::Value << label_name(r.label.tag);
    out << YAML::Key << "params" << YAML::Value << YAML::Flow << YAML::BeginSeq;
    if (r.label.param) out << r.label.param->str();
    out << YAML::EndSeq;
    out << YAML::Key << "iso_type" << YAML::Value << r.iso_type;
    out << YAML::Key << "signature" << YAML::Value;
    emit_signature(out, r.signature);
    out << YAML::Key << "certificate" << YAML::Value;
    if (r.certificate)
        emit_matrix(out, *r.certificate);
    else
        out << YAML::Null;
    out << YAML::Key << "verified" << YAML::Value << r.verified;
    out << YAML::EndMap;
    return text_of(out);
}

ClassificationReport parse_report(const std::string& text) {
    YAML::Node root = load(text);
    try {
        if (!root.IsMap()) throw ParseError("report must be a map");
        ClassificationReport r;
        r.label = ClassLabel::parse(root["label"].as<std::string>());
        r.iso_type = root["iso_type"].as<std::string>();
        r.signature = signature_of(root["signature"]);
        if (const YAML::Node c = root["certificate"]; c && !c.IsNull()) r.certificate = matrix_of(c);
        r.verified = root["verified"].as<bool>();
        return r;
    } catch (const YAML::Exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
}

std::string serialize(const Signature& sig) {
    YAML::Emitter out;
    out << YAML::BeginMap << YAML::Key << "signature" << YAML::Value;
    emit_signature(out, sig);
    out << YAML::EndMap;
    return text_of(out);
}

std::string serialize(const ConjugacyResult& r, const ClassLabel& a, const ClassLabel& b) {
    YAML::Emitter out;
    out << YAML::BeginMap;
    out << YAML::Key << "label_a" << YAML::Value << a.str();
    out << YAML::Key << "label_b" << YAML::Value << b.str();
    if (const auto* e = std::get_if<Equivalent>(&r)) {
        out << YAML::Key << "result" << YAML::Value << "Equivalent";
        out << YAML::Key << "certificate" << YAML::Value;
        emit_matrix(out, e->certificate.conjugator);
    } else if (const auto* d = std::get_if<Distinct>(&r)) {
        out << YAML::Key << "result" << YAML::Value << "Distinct";
        out << YAML::Key << "field" << YAML::Value << d->field;
    } else {
        out << YAML::Key << "result" << YAML::Value << "Unknown";
    }
    out << YAML::EndMap;
    return text_of(out);
}

std::string serialize(const std::vector<CheckResult>& checks, const SuiteOptions& opts) {
    YAML::Emitter out;
    bool all = true;
    out << YAML::BeginMap;
    out << YAML::Key << "samples" << YAML::Value << opts.samples;
    out << YAML::Key << "seed" << YAML::Value << opts.seed;
    out << YAML::Key << "checks" << YAML::Value << YAML::BeginSeq;
    for (const auto& c : checks) {
        all = all && c.pass;
        std::ostringstream secs;
        secs.precision(3);
        secs << std::fixed << c.seconds;
        out << YAML::BeginMap;
        out << YAML::Key << "name" << YAML::Value << c.name;
        out << YAML::Key << "pass" << YAML::Value << c.pass;
        out << YAML::Key << "seconds" << YAML::Value << secs.str();
        out << YAML::Key << "detail" << YAML::Value << c.detail;
        out << YAML::EndMap;
    }
    out << YAML::EndSeq;
    out << YAML::Key << "all_pass" << YAML::Value << all;
    out << YAML::EndMap;
    return text_of(out);
}

std::string error_document(const std::string& kind, const std::string& message) {
    YAML::Emitter out;
    out << YAML::BeginMap << YAML::Key << "error" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "kind" << YAML::Value << kind;
    out << YAML::Key << "message" << YAML::Value << message;
    out << YAML::EndMap << YAML::EndMap;
    return text_of(out);
}

}  // namespace sl3::io
