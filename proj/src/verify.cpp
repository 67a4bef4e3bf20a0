#include "sl3/verify.hpp"

#include "sl3/errors.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <sstream>

namespace sl3 {

bool conjugates_onto(const Subalgebra& s, const Subalgebra& t, const Matrix& A) {
    return A.determinant().is_one() && conjugate(s, A) == t;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

CheckResult run_check(const std::string& name, double limit, const std::function<Outcome()>& body) {
    auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (o.pass && secs >= limit) {
        std::ostringstream os;
        os << "took " << secs << " s, limit " << limit << " s";
        o = fail(os.str());
    }
    return {name, o.pass, secs, o.detail};
}

ClassLabel make(Label l, std::optional<Scalar> p = std::nullopt) { return {l, std::move(p)}; }

std::vector<ClassLabel> sampled_labels(std::size_t per_family) {
    std::vector<ClassLabel> out;
    for (Label l : all_labels()) {
        if (!has_param(l)) {
            out.push_back(make(l));
            continue;
        }
        for (const auto& p : sample_params(l, per_family)) out.push_back(make(l, p));
    }
    return out;
}

Subalgebra span(std::vector<Element> gens) { return Subalgebra::span_of(gens); }

Scalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 6), coin(0, 2);
    Scalar s = Scalar::frac(num(rng), den(rng));
    if (coin(rng) == 0) s += Scalar::frac(num(rng), den(rng)) * Scalar::i();
    return s;
}

std::vector<Scalar> j4_orbit(const Scalar& a) {
    Scalar one(1);
    return {a, one / a, one - a, one / (one - a), a / (a - one), (a - one) / a};
}

// Labels of a family of subalgebras; two members must share a label exactly
// when the rule says they are conjugate.
Outcome pairwise_rule(const std::string& what, const std::vector<Scalar>& params,
                      const std::function<Subalgebra(const Scalar&)>& member,
                      const std::function<bool(const Scalar&, const Scalar&)>& rule, std::mt19937_64& rng) {
    std::vector<ClassLabel> labels;
    for (const auto& a : params) labels.push_back(classify(conjugate(member(a), random_sl3(rng))).label);
    for (std::size_t i = 0; i < params.size(); ++i) {
        for (std::size_t j = 0; j < params.size(); ++j) {
            bool same = labels[i] == labels[j];
            if (same != rule(params[i], params[j])) {
                return fail(what + ": alpha=" + params[i].str() + " (" + labels[i].str() + ") vs beta=" +
                            params[j].str() + " (" + labels[j].str() + ")");
            }
        }
    }
    return {true, std::to_string(params.size()) + " parameters, all pairs"};
}

bool central_one_dim_radical(const Subalgebra& s) {
    if (is_solvable(s)) return false;
    Subalgebra r = radical(s);
    if (r.dim() != 1) return false;
    for (const auto& u : s.basis())
        for (const auto& v : r.basis())
            if (!bracket(u, v).is_zero()) return false;
    return true;
}

}  // namespace

std::vector<CheckResult> run_acceptance(const SuiteOptions& opts) {
    const double unlimited = std::numeric_limits<double>::infinity();
    auto suite_start = Clock::now();
    std::vector<CheckResult> out;
    const auto labels = sampled_labels(8);

    out.push_back(run_check("representative round trip", 5.0, [&] {
        for (const auto& cl : labels) {
            auto got = classify(representative_of(cl)).label;
            if (!(got == cl)) return fail(cl.str() + " classified as " + got.str());
        }
        return Outcome{true, std::to_string(labels.size()) + " representatives"};
    }));

    out.push_back(run_check("conjugation stability", 30.0, [&] {
        std::mt19937_64 rng(opts.seed);
        std::size_t certified = 0, total = 0;
        for (const auto& cl : labels) {
            Subalgebra rep = representative_of(cl);
            for (std::size_t k = 0; k < opts.samples; ++k) {
                Subalgebra s = conjugate(rep, random_sl3(rng));
                auto c = classify(s);
                ++total;
                if (!(c.label == cl)) return fail("conjugate of " + cl.str() + " classified as " + c.label.str());
                if (c.certificate) {
                    if (!certify(s, c.label, *c.certificate))
                        return fail("certificate rejected for a conjugate of " + cl.str());
                    ++certified;
                }
            }
        }
        return Outcome{true, std::to_string(total) + " conjugates, " + std::to_string(certified) + " certified"};
    }));

    out.push_back(run_check("isomorphism fixtures", unlimited, [&] {
        auto fixtures = iso_fixtures();
        for (const auto& f : fixtures)
            if (auto err = check_iso_fixture(f); !err.empty()) return fail(err);
        return Outcome{true, std::to_string(fixtures.size()) + " explicit isomorphisms"};
    }));

    out.push_back(run_check("equivalence rules", unlimited, [&] {
        std::mt19937_64 rng(opts.seed + 3);
        auto j4 = [](const Scalar& a) { return span({h1 + a * h2}); };
        // Worked orbit.
        std::vector<Scalar> worked{5, Scalar::frac(1, 5), -4, Scalar::frac(-1, 4), Scalar::frac(5, 4),
                                   Scalar::frac(4, 5)};
        for (const auto& a : worked) {
            if (!(canonicalize_J4(a) == Scalar(-4))) return fail("worked orbit: " + a.str());
            if (!(classify(j4(a)).label == make(Label::J4, Scalar(-4))))
                return fail("worked orbit classification: " + a.str());
        }
        // Random orbits.
        for (int n = 0; n < 30;) {
            Scalar a = random_scalar(rng);
            if (a.is_zero() || a.is_one()) continue;
            ++n;
            auto orbit = j4_orbit(a);
            Scalar c = canonicalize_J4(a);
            ClassLabel want = classify(j4(a)).label;
            for (const auto& m : orbit) {
                if (!(canonicalize_J4(m) == c)) return fail("J4 orbit of " + a.str() + " splits at " + m.str());
                if (!(classify(conjugate(j4(m), random_sl3(rng))).label == want))
                    return fail("J4 classification splits the orbit of " + a.str());
            }
            Scalar b = a + 1;
            while (b.is_zero() || b.is_one() || std::find(orbit.begin(), orbit.end(), b) != orbit.end()) b += 1;
            if (canonicalize_J4(b) == c) return fail("J4: " + b.str() + " joins the orbit of " + a.str());
            if (classify(j4(b)).label == want) return fail("J4 classification merges " + a.str() + ", " + b.str());
        }
        // alpha = beta or alpha*beta = 1 for both three-dimensional families.
        std::vector<Scalar> l3{0, 2, Scalar::frac(1, 2), 3, Scalar::frac(1, 3), -2, Scalar::frac(-1, 2),
                               Scalar(1) + Scalar::i(), (Scalar(1) + Scalar::i()).inverse(), Scalar::frac(5, 7),
                               Scalar::frac(7, 5)};
        auto l3_rule = [](const Scalar& a, const Scalar& b) { return a == b || (a * b).is_one(); };
        auto r1 = pairwise_rule(
            "L3 first family", l3, [](const Scalar& a) { return span({x1, x3, (a - 1) * h1 + a * h2}); },
            l3_rule, rng);
        if (!r1.pass) return r1;
        auto r2 = pairwise_rule(
            "L3 second family", l3, [](const Scalar& a) { return span({x1, y2, h1 + a * h2}); }, l3_rule, rng);
        if (!r2.pass) return r2;
        // M13: conjugate exactly when alpha = beta.
        std::vector<Scalar> m13{0, 2, Scalar::frac(1, 2), 3, Scalar::frac(1, 3), -2, Scalar::frac(-1, 2),
                                Scalar(1) + Scalar::i(), Scalar::frac(5, 7), Scalar::frac(7, 5), 4};
        auto r3 = pairwise_rule(
            "M13 family", m13, [](const Scalar& a) { return span({x1, x2, x3, a * h1 + h2}); },
            [](const Scalar& a, const Scalar& b) { return a == b; }, rng);
        if (!r3.pass) return r3;
        return Outcome{true, "J4 worked orbit + 30 random orbits; L3 and M13 rules on all pairs"};
    }));

    out.push_back(run_check("branching multisets", unlimited, [&] {
        std::mt19937_64 rng(opts.seed + 4);
        auto sorted = [](std::vector<Scalar> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        const std::vector<std::pair<Label, std::vector<Scalar>>> cases{
            {Label::A1_1, sorted({2, 0, -2, 1, -1, 1, -1, 0})},
            {Label::A1_2, sorted({2, 0, -2, 4, 2, 0, -2, -4})}};
        for (const auto& [l, want] : cases) {
            Subalgebra rep = representative_of(make(l));
            for (const auto& s : {rep, conjugate(rep, random_sl3(rng))}) {
                auto got = sorted(weight_multiset(s));
                if (got != want) return fail(label_name(l) + ": unexpected weight multiset");
            }
        }
        return Outcome{true, "A1_1 and A1_2, representative and a random conjugate"};
    }));

    out.push_back(run_check("involution swap", unlimited, [&] {
        for (auto [a, b] : {std::pair{Label::A1K1_1, Label::A1K1_2}, std::pair{Label::A1L2_1, Label::A1L2_2}}) {
            Subalgebra ra = representative_of(make(a)), rb = representative_of(make(b));
            if (!(involution_image(ra) == rb) || !(involution_image(rb) == ra))
                return fail(label_name(a) + " and " + label_name(b) + " are not swapped");
            if (ra == rb) return fail(label_name(a) + " is fixed");
        }
        return Outcome{true, "A1K1 and A1L2 pairs"};
    }));

    out.push_back(run_check("explicit conjugators", unlimited, [&] {
        // Every stated pair must hold. Known errata are still checked as
        // stated; they fail here and their corrected forms are listed
        // alongside so the report shows both.
        auto fixtures = conjugator_fixtures();
        std::size_t bad = 0;
        std::set<std::string> reasons;
        std::string first;
        for (const auto& f : fixtures) {
            auto err = check_conjugator_fixture(f);
            if (err.empty()) continue;
            ++bad;
            if (first.empty()) first = err;
            reasons.insert(f.erratum.empty() ? err : f.erratum);
        }
        if (bad == 0) return Outcome{true, std::to_string(fixtures.size()) + " conjugators"};
        std::string why = std::to_string(bad) + " of " + std::to_string(fixtures.size()) + " stated pairs fail:";
        for (const auto& r : reasons) why += " [" + r + "]";
        return fail(why);
    }));

    out.push_back(run_check("inequivalence separation", unlimited, [&] {
        std::mt19937_64 rng(opts.seed + 8);
        std::vector<std::pair<ClassLabel, ClassLabel>> pairs;
        auto all_pairs = [&](const std::vector<ClassLabel>& group) {
            for (std::size_t i = 0; i < group.size(); ++i)
                for (std::size_t j = i + 1; j < group.size(); ++j) pairs.emplace_back(group[i], group[j]);
        };
        all_pairs({make(Label::K1_1), make(Label::K1_2), make(Label::K1_3), make(Label::K1_4), make(Label::K1_5)});
        std::vector<ClassLabel> k2{make(Label::K2_1), make(Label::K2_2), make(Label::K2_3)};
        for (const auto& p : sample_params(Label::K2_4, 3)) k2.push_back(make(Label::K2_4, p));
        all_pairs(k2);
        for (auto [a, b] : {std::pair{Label::L2_1, Label::L2_2}, std::pair{Label::L4_1, Label::L4_2},
                            std::pair{Label::L3Q_1, Label::L3Q_2}, std::pair{Label::M8_1, Label::M8_2},
                            std::pair{Label::M13T_2, Label::M13Z_2}, std::pair{Label::A1K1_1, Label::A1K1_2},
                            std::pair{Label::A1L2_1, Label::A1L2_2}})
            pairs.emplace_back(make(a), make(b));
        pairs.emplace_back(make(Label::M13T_2), make(Label::M13_1, Scalar(0)));
        for (const auto& p : sample_params(Label::M13_1, 3)) pairs.emplace_back(make(Label::M13Z_2), make(Label::M13_1, p));
        for (const auto& p : sample_params(Label::L3_1, 3)) pairs.emplace_back(make(Label::L3_1, p), make(Label::L3_2, p));
        for (const auto& [a, b] : pairs) {
            auto s = conjugate(representative_of(a), random_sl3(rng));
            auto t = conjugate(representative_of(b), random_sl3(rng));
            if (!std::holds_alternative<Distinct>(conjugacy_check(s, t)))
                return fail(a.str() + " vs " + b.str() + " not reported Distinct");
        }
        return Outcome{true, std::to_string(pairs.size()) + " pairs"};
    }));

    out.push_back(run_check("uniqueness remarks", unlimited, [&] {
        std::size_t gl2_table = 0, gl2_found = 0, l4_table = 0, l4_found = 0;
        for (const auto& cl : sampled_labels(4)) {
            IsoType t = iso_type_of(cl);
            Subalgebra rep = representative_of(cl);
            gl2_table += t.tag == IsoTag::A1_PLUS_J;
            l4_table += t.tag == IsoTag::L4;
            gl2_found += rep.dim() == 4 && central_one_dim_radical(rep);
            if (rep.dim() == 3 && is_solvable(rep))
                l4_found += identify_solvable(structure_constants_of(rep)).tag == IsoTag::L4;
        }
        if (gl2_table != 1 || gl2_found != 1)
            return fail("gl2 copies: " + std::to_string(gl2_table) + " by table, " + std::to_string(gl2_found) +
                        " by structure");
        if (l4_table != 2 || l4_found != 2)
            return fail("L4 copies: " + std::to_string(l4_table) + " by table, " + std::to_string(l4_found) +
                        " by structure");
        return Outcome{true, "one gl2 class, two L4 classes"};
    }));

    double total = std::chrono::duration<double>(Clock::now() - suite_start).count();
    std::ostringstream os;
    os << "suite took " << total << " s";
    out.push_back({"suite under 60 s", total < 60.0, total, os.str()});
    return out;
}

}  // namespace sl3
