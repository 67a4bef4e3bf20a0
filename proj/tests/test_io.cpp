#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl3/errors.hpp"
#include "sl3/io.hpp"

#include <random>

namespace sl3 {
namespace {

ClassLabel lab(Label l) { return {l, std::nullopt}; }
ClassLabel lab(Label l, Scalar p) { return {l, p}; }

std::string data(const std::string& name) { return std::string(SL3_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("input documents parse and classify") {
    auto doc = io::load_input(data("principal_nilpotent.yaml"));
    REQUIRE(doc.matrices.size() == 1);
    CHECK(doc.generate);
    CHECK(classify(io::subalgebra_of(doc)).label == lab(Label::J1));

    auto cartan = io::load_input(data("cartan.yaml"));
    CHECK_FALSE(cartan.generate);
    CHECK(classify(io::subalgebra_of(cartan)).label == lab(Label::K1_5));

    auto g = io::subalgebra_of(io::load_input(data("gaussian_entries.yaml")));
    CHECK(g.dim() == 2);
    CHECK(io::parse_input(io::serialize(cartan)) == cartan);
}

TEST_CASE("input errors") {
    CHECK_THROWS_AS(io::load_input(data("not_traceless.yaml")), NotTraceless);
    CHECK_THROWS_AS(io::load_input(data("malformed.yaml")), ParseError);
    CHECK_THROWS_AS(io::load_input(data("does_not_exist.yaml")), ParseError);
    CHECK_THROWS_AS(io::parse_input("matrices: [[[1, 0, 0], [0, x, 0], [0, 0, -1]]]"), ParseError);
    CHECK_THROWS_AS(io::parse_input("matrices: ["), ParseError);
    CHECK_THROWS_AS(io::parse_input("- 1\n- 2\n"), ParseError);
    CHECK_THROWS_AS(io::parse_input("matrices: []"), ParseError);
    CHECK_THROWS_AS(io::parse_input("matrices: [[[0,1,0],[0,0,0],[0,0,0]]]\nclosure: maybe"), ParseError);
    // x1 and y1 span no subalgebra
    auto open = io::parse_input("matrices: [[[0,1,0],[0,0,0],[0,0,0]], [[0,0,0],[1,0,0],[0,0,0]]]\nclosure: span");
    CHECK_THROWS_AS(io::subalgebra_of(open), ParseError);
    open.generate = true;
    CHECK(io::subalgebra_of(open).dim() == 3);
}

TEST_CASE("report round trip") {
    std::mt19937_64 rng(7);
    std::vector<ClassLabel> labels = {lab(Label::J1),        lab(Label::J4, canonicalize_J4(Scalar::frac(1, 3))),
                                      lab(Label::K1_3),      lab(Label::L3_1, canonicalize_L3(Scalar(2) + Scalar::i())),
                                      lab(Label::A1K1_1),    lab(Label::A1L2_1),
                                      lab(Label::M13Z_2),    lab(Label::SL3)};
    for (const auto& l : labels) {
        CAPTURE(l.str());
        Subalgebra s = conjugate(representative_of(l), random_sl3(rng));
        auto r = io::make_report(s);
        CHECK(r.label == l);
        CHECK(r.verified);
        auto text = io::serialize(r);
        CHECK(io::parse_report(text) == r);
    }
    // Levi labels carry a nested radical signature and weights
    auto levi = io::make_report(representative_of(lab(Label::A1L2_1)));
    CHECK(levi.signature.levi_radical_signature);
    CHECK(levi.signature.weight_multiset);
    CHECK_THROWS_AS(io::parse_report("label: [1"), ParseError);
    CHECK_THROWS_AS(io::parse_report("label: J1\n"), ParseError);
}

TEST_CASE("representative documents classify back") {
    for (Label l : all_labels()) {
        ClassLabel c = has_param(l) ? lab(l, sample_params(l, 1).front()) : lab(l);
        CAPTURE(c.str());
        auto doc = io::parse_input(io::serialize(io::document_of(representative_of(c))));
        CHECK(classify(io::subalgebra_of(doc)).label == c);
    }
}

TEST_CASE("conjugacy documents") {
    auto k3 = representative_of(lab(Label::K1_3));
    auto k4 = representative_of(lab(Label::K1_4));
    auto r = conjugacy_check(k3, k4);
    REQUIRE(std::holds_alternative<Distinct>(r));
    CHECK(std::get<Distinct>(r).field == "common_kernel_dim");
    auto text = io::serialize(r, lab(Label::K1_3), lab(Label::K1_4));
    CHECK(text.find("result: Distinct") != std::string::npos);
    CHECK(text.find("field: common_kernel_dim") != std::string::npos);

    std::mt19937_64 rng(3);
    auto t = conjugate(k3, random_sl3(rng));
    auto e = conjugacy_check(k3, t);
    CHECK_FALSE(std::holds_alternative<Distinct>(e));
    CHECK(io::serialize(e, lab(Label::K1_3), lab(Label::K1_3)).find("result: Equivalent") != std::string::npos);
}

TEST_CASE("error documents") {
    auto doc = io::error_document("NotTraceless", "matrix has nonzero trace 1");
    CHECK(doc.find("kind: NotTraceless") != std::string::npos);
    CHECK(doc.find("message:") != std::string::npos);
}

}  // namespace sl3

namespace sl3 {

TEST_CASE("suite is deterministic given samples and seed") {
    auto profile = [](const std::vector<CheckResult>& cs) {
        std::vector<std::pair<std::string, bool>> out;
        for (const auto& c : cs) out.emplace_back(c.name, c.pass);
        return out;
    };
    auto details = [](const std::vector<CheckResult>& cs) {
        std::vector<std::string> out;
        for (const auto& c : cs) out.push_back(c.detail);
        out.pop_back();  // wall-clock total
        return out;
    };
    auto a = run_acceptance({2, 11});
    auto b = run_acceptance({2, 11});
    auto c = run_acceptance({2, 12});
    CHECK(details(a) == details(b));
    CHECK(profile(a) == profile(c));
}

}  // namespace sl3
