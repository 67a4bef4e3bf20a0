#include "sl3/classify.hpp"

#include "sl3/errors.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace sl3 {

namespace {

struct LabelInfo {
    Label tag;
    const char* name;
    bool param;
};

constexpr std::array<LabelInfo, 40> kLabels{{
    {Label::J1, "J1", false},         {Label::J2, "J2", false},
    {Label::J3, "J3", false},         {Label::J4, "J4", true},
    {Label::K1_1, "K1_1", false},     {Label::K1_2, "K1_2", false},
    {Label::K1_3, "K1_3", false},     {Label::K1_4, "K1_4", false},
    {Label::K1_5, "K1_5", false},     {Label::K2_1, "K2_1", false},
    {Label::K2_2, "K2_2", false},     {Label::K2_3, "K2_3", false},
    {Label::K2_4, "K2_4", true},      {Label::L2_1, "L2_1", false},
    {Label::L2_2, "L2_2", false},     {Label::L3Q_1, "L3Q_1", false},
    {Label::L3Q_2, "L3Q_2", false},   {Label::L3N_1, "L3N_1", false},
    {Label::L3Z_1, "L3Z_1", false},   {Label::L3_1, "L3_1", true},
    {Label::L3_2, "L3_2", true},      {Label::L4_1, "L4_1", false},
    {Label::L4_2, "L4_2", false},     {Label::L5_1, "L5_1", false},
    {Label::M8_1, "M8_1", false},     {Label::M8_2, "M8_2", false},
    {Label::M12_1, "M12_1", false},   {Label::M13_1, "M13_1", true},
    {Label::M13Z_2, "M13Z_2", false}, {Label::M13T_2, "M13T_2", false},
    {Label::M14_1, "M14_1", false},   {Label::B, "B", false},
    {Label::A1_1, "A1_1", false},     {Label::A1_2, "A1_2", false},
    {Label::A1J_1, "A1J_1", false},   {Label::A1K1_1, "A1K1_1", false},
    {Label::A1K1_2, "A1K1_2", false}, {Label::A1L2_1, "A1L2_1", false},
    {Label::A1L2_2, "A1L2_2", false}, {Label::SL3, "SL3", false},
}};

const LabelInfo& info(Label l) {
    for (const auto& i : kLabels)
        if (i.tag == l) return i;
    throw InternalInconsistency("unknown label");
}

Scalar q(long p, long d = 1) { return Scalar::frac(p, d); }

Subalgebra span(std::vector<Element> es) { return Subalgebra::span_of(es); }

// 1/(1-a) etc. for the J4 orbit; undefined members are skipped.
std::vector<Scalar> j4_orbit(const Scalar& a) {
    std::vector<Scalar> out{a, Scalar(1) - a};
    if (!a.is_zero()) {
        out.push_back(a.inverse());
        out.push_back((a - Scalar(1)) / a);
    }
    if (a != Scalar(1)) {
        out.push_back((Scalar(1) - a).inverse());
        out.push_back(a / (a - Scalar(1)));
    }
    return out;
}

// Rank of a generic element of the nilpotent ideal N: 0, 1 or 2. The square
// of sum t_i n_i vanishes identically iff every n_i^2 and n_i n_j + n_j n_i do.
std::size_t generic_nilpotent_rank(const Subalgebra& n) {
    if (n.dim() == 0) return 0;
    std::vector<Matrix> ms;
    for (const auto& b : n.basis()) ms.push_back(to_matrix(b));
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i; j < ms.size(); ++j)
            if (!(ms[i] * ms[j] + ms[j] * ms[i]).is_zero()) return 2;
    return 1;
}

}  // namespace

const std::vector<Label>& all_labels() {
    static const std::vector<Label> all = [] {
        std::vector<Label> v;
        for (const auto& i : kLabels) v.push_back(i.tag);
        return v;
    }();
    return all;
}

std::string label_name(Label l) { return info(l).name; }

Label label_from_name(const std::string& name) {
    for (const auto& i : kLabels)
        if (name == i.name) return i.tag;
    throw ParseError("unknown class label '" + name + "'");
}

bool has_param(Label l) { return info(l).param; }

std::string ClassLabel::str() const {
    std::string s = label_name(tag);
    if (param) s += "(" + param->str() + ")";
    return s;
}

ClassLabel ClassLabel::parse(const std::string& text) {
    auto open = text.find('(');
    if (open == std::string::npos) return {label_from_name(text), std::nullopt};
    if (text.back() != ')') throw ParseError("bad class label '" + text + "'");
    return {label_from_name(text.substr(0, open)), Scalar::parse(text.substr(open + 1, text.size() - open - 2))};
}

std::optional<std::string> first_difference(const Signature& a, const Signature& b) {
    if (a.dim != b.dim) return "dim";
    if (a.derived_dims != b.derived_dims) return "derived_dims";
    if (a.lcs_dims != b.lcs_dims) return "lcs_dims";
    if (a.nilradical_dim != b.nilradical_dim) return "nilradical_dim";
    if (a.common_kernel_dim != b.common_kernel_dim) return "common_kernel_dim";
    if (a.image_sum_dim != b.image_sum_dim) return "image_sum_dim";
    if (a.max_nilpotent_rank != b.max_nilpotent_rank) return "max_nilpotent_rank";
    if (bool(a.levi_radical_signature) != bool(b.levi_radical_signature)) return "levi_radical_signature";
    if (a.levi_radical_signature) {
        if (auto d = first_difference(*a.levi_radical_signature, *b.levi_radical_signature))
            return "levi_radical_signature." + *d;
    }
    if (a.weight_multiset != b.weight_multiset) return "weight_multiset";
    if (a.nil_common_kernel_dim != b.nil_common_kernel_dim) return "nil_common_kernel_dim";
    if (a.nil_image_sum_dim != b.nil_image_sum_dim) return "nil_image_sum_dim";
    return std::nullopt;
}

Signature signature(const Subalgebra& s) {
    Signature sig;
    sig.dim = s.dim();
    sig.derived_dims = dims(derived_series(s));
    sig.lcs_dims = dims(lower_central_series(s));
    Subalgebra rad = radical(s);
    Subalgebra nil = rad.dim() ? nilpotent_matrices(rad) : Subalgebra::zero();
    sig.nilradical_dim = rad.dim() ? nilradical(rad).dim() : 0;
    sig.common_kernel_dim = common_kernel(s.space()).dim();
    sig.image_sum_dim = image_sum(s.space()).dim();
    sig.max_nilpotent_rank = generic_nilpotent_rank(nil);
    sig.nil_common_kernel_dim = common_kernel(nil.space()).dim();
    sig.nil_image_sum_dim = image_sum(nil.space()).dim();
    if (rad.dim() != s.dim()) {
        if (rad.dim() > 0) sig.levi_radical_signature = std::make_shared<Signature>(signature(rad));
        Subalgebra levi = levi_subalgebra(s).semisimple;
        if (levi.dim() == 3) sig.weight_multiset = weight_multiset(levi);
    }
    return sig;
}

Scalar canonicalize_J4(const Scalar& a) {
    auto orbit = j4_orbit(a);
    return *std::min_element(orbit.begin(), orbit.end());
}

Scalar canonicalize_L3(const Scalar& a) {
    if (a == Scalar(1) || a == Scalar(-1)) throw InvalidParameter("L3 parameter must differ from 1 and -1");
    if (a.is_zero()) return a;
    return std::min(a, a.inverse());
}

namespace {

void require_param(const ClassLabel& l) {
    if (has_param(l.tag) != bool(l.param))
        throw InvalidParameter(label_name(l.tag) + (l.param ? " takes no parameter" : " needs a parameter"));
}

}  // namespace

Subalgebra representative_of(const ClassLabel& label) {
    require_param(label);
    const Scalar a = label.param.value_or(Scalar());
    auto sc = [](const Scalar& c, const Element& e) { return c * e; };
    switch (label.tag) {
        case Label::J1: return span({x1 + x2});
        case Label::J2: return span({x1});
        case Label::J3: return span({h1 + sc(2, h2) + x1});
        case Label::J4:
            if (canonicalize_J4(a) != a) throw InvalidParameter("J4 parameter " + a.str() + " is not canonical");
            return span({h1 + sc(a, h2)});
        case Label::K1_1: return span({x1 + x2, x3});
        case Label::K1_2: return span({x1, h1 + sc(2, h2)});
        case Label::K1_3: return span({x1, x3});
        case Label::K1_4: return span({x1, y2});
        case Label::K1_5: return span({h1, h2});
        case Label::K2_1: return span({x1 + x2, h1 + h2});
        case Label::K2_2: return span({x1, sc(q(-1, 3), h1) + sc(q(1, 3), h2) + x3});
        case Label::K2_3: return span({x1, sc(q(-2, 3), h1) + sc(q(-1, 3), h2) + y2});
        case Label::K2_4: return span({x1, sc(a, h1) + sc(Scalar(2) * a + Scalar(1), h2)});
        case Label::L2_1: return span({x1, x3, sc(2, h1) + h2});
        case Label::L2_2: return span({x1, y2, h1 - h2});
        case Label::L3Q_1: return span({x1, x3, sc(2, h1) + h2 + x2});
        case Label::L3Q_2: return span({y1, y3, sc(2, h1) + h2 + x2});
        case Label::L3N_1: return span({x1 + x2, x3, h1 + h2});
        case Label::L3Z_1: return span({x1, h1, h2});
        case Label::L3_1:
        case Label::L3_2:
            if (canonicalize_L3(a) != a) throw InvalidParameter("L3 parameter " + a.str() + " is not canonical");
            if (label.tag == Label::L3_1) return span({x1, x3, sc(a - Scalar(1), h1) + sc(a, h2)});
            return span({x1, y2, h1 + sc(a, h2)});
        case Label::L4_1: return span({x1, x3, h2});
        case Label::L4_2: return span({x1, y2, h1 + h2});
        case Label::L5_1: return span({x1, x2, x3});
        case Label::M8_1: return span({x1, x3, h1, h2});
        case Label::M8_2: return span({x1, y2, h1, h2});
        case Label::M12_1: return span({x1, x2, x3, h1 + h2});
        case Label::M13_1:
            if (a == Scalar(1) || a == Scalar(-1) || a == q(1, 2))
                throw InvalidParameter("M13_1 parameter must differ from 1, -1 and 1/2");
            return span({x1, x2, x3, sc(a, h1) + h2});
        case Label::M13Z_2: return span({x2, y1, y3, sc(2, h1) + h2});
        case Label::M13T_2: return span({x1, x2, x3, h1});
        case Label::M14_1: return span({x1, x2, x3, h1 - h2});
        case Label::B: return span({x1, x2, x3, h1, h2});
        case Label::A1_1: return span({x3, y3, h1 + h2});
        case Label::A1_2: return span({x1 + x2, sc(2, y1) + sc(2, y2), sc(2, h1) + sc(2, h2)});
        case Label::A1J_1: return span({x3, y3, h1 + h2, h1 - h2});
        case Label::A1K1_1: return span({x3, y3, h1 + h2, x1, y2});
        case Label::A1K1_2: return span({x3, y3, h1 + h2, x2, y1});
        case Label::A1L2_1: return span({x3, y3, h1 + h2, h1 - h2, x1, y2});
        case Label::A1L2_2: return span({x3, y3, h1 + h2, h1 - h2, x2, y1});
        case Label::SL3: return Subalgebra::full();
    }
    throw InternalInconsistency("unhandled label");
}

IsoType iso_type_of(const ClassLabel& label) {
    require_param(label);
    const Scalar a = label.param.value_or(Scalar());
    switch (label.tag) {
        case Label::J1: case Label::J2: case Label::J3: case Label::J4: return {IsoTag::J, {}};
        case Label::K1_1: case Label::K1_2: case Label::K1_3: case Label::K1_4: case Label::K1_5:
            return {IsoTag::K1, {}};
        case Label::K2_1: case Label::K2_2: case Label::K2_3: case Label::K2_4: return {IsoTag::K2, {}};
        case Label::L2_1: case Label::L2_2: return {IsoTag::L2, {}};
        case Label::L3Q_1: case Label::L3Q_2: return {IsoTag::L3, q(-1, 4)};
        case Label::L3N_1: return {IsoTag::L3, q(-2, 9)};
        case Label::L3Z_1: return {IsoTag::L3, Scalar(0)};
        case Label::L3_1: case Label::L3_2: {
            Scalar d = Scalar(9) * (a - Scalar(1)) * (a - Scalar(1));
            return {IsoTag::L3, -(Scalar(2) * a - Scalar(1)) * (a - Scalar(2)) / d};
        }
        case Label::L4_1: case Label::L4_2: return {IsoTag::L4, {}};
        case Label::L5_1: return {IsoTag::L5, {}};
        case Label::M8_1: case Label::M8_2: return {IsoTag::M8, {}};
        case Label::M12_1: return {IsoTag::M12, {}};
        case Label::M13_1: {
            Scalar d = (a + Scalar(1)) * (a + Scalar(1));
            return {IsoTag::M13, (Scalar(2) * a - Scalar(1)) * (a - Scalar(2)) / d};
        }
        case Label::M13Z_2: return {IsoTag::M13, Scalar(0)};
        case Label::M13T_2: return {IsoTag::M13, Scalar(2)};
        case Label::M14_1: return {IsoTag::M14, {}};
        case Label::B: return {IsoTag::BOREL5, {}};
        case Label::A1_1: case Label::A1_2: return {IsoTag::A1, {}};
        case Label::A1J_1: return {IsoTag::A1_PLUS_J, {}};
        case Label::A1K1_1: case Label::A1K1_2: return {IsoTag::A1_SEMI_K1, {}};
        case Label::A1L2_1: case Label::A1L2_2: return {IsoTag::A1_SEMI_L2, {}};
        case Label::SL3: return {IsoTag::SL3, {}};
    }
    throw InternalInconsistency("unhandled label");
}

std::vector<Scalar> sample_params(Label l, std::size_t n) {
    if (!has_param(l)) return {};
    static const std::vector<Scalar> pool{
        Scalar(2), Scalar(3), Scalar(-2), q(1, 3), Scalar(5), q(-3, 2), Scalar(1) + Scalar::i(), q(2, 5),
        Scalar(7), q(-5, 3), Scalar(0), Scalar::i(), q(3, 4), Scalar(-4), q(7, 2), Scalar(2) - Scalar::i(),
        Scalar(11), q(-1, 5), q(5, 7), Scalar(13)};
    std::vector<Scalar> out;
    for (const auto& p : pool) {
        if (out.size() == n) break;
        Scalar v = p;
        if (l == Label::J4) v = canonicalize_J4(p);
        if (l == Label::L3_1 || l == Label::L3_2) v = canonicalize_L3(p);
        if (l == Label::M13_1 && v == q(1, 2)) continue;
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
}

}  // namespace sl3
