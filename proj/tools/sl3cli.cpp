// sl3: classify subalgebras of sl3 up to SL(3) conjugacy.
//
// Exit codes: 0 success, 1 verify-paper found a failing check,
// 2 field extension required, 3 input error, 4 internal inconsistency.

#include "sl3/errors.hpp"
#include "sl3/io.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>

namespace {

using namespace sl3;

constexpr int kFieldExtension = 2;
constexpr int kInputError = 3;
constexpr int kInternal = 4;

int report_error(const std::string& kind, const std::string& message, int code) {
    std::cerr << io::error_document(kind, message);
    return code;
}

// Maps library exceptions onto the exit-code contract.
int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const FieldExtensionRequired& e) {
        return report_error("FieldExtensionRequired", e.what(), kFieldExtension);
    } catch (const NotTraceless& e) {
        return report_error("NotTraceless", e.what(), kInputError);
    } catch (const ParseError& e) {
        return report_error("ParseError", e.what(), kInputError);
    } catch (const InvalidParameter& e) {
        return report_error("InvalidParameter", e.what(), kInputError);
    } catch (const UnrecognizedType& e) {
        return report_error("UnrecognizedType", e.what(), kInternal);
    } catch (const InternalInconsistency& e) {
        return report_error("InternalInconsistency", e.what(), kInternal);
    } catch (const std::invalid_argument& e) {
        return report_error("InvalidInput", e.what(), kInputError);
    } catch (const std::exception& e) {
        return report_error("InternalInconsistency", e.what(), kInternal);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classify subalgebras of sl3 up to SL(3) conjugacy, exactly over Q(i)"};
    app.require_subcommand(1);

    std::string file, file_b, label_text, param_text;
    SuiteOptions opts;

    auto* classify_cmd = app.add_subcommand("classify", "Classify the subalgebra generated by the matrices in a file");
    classify_cmd->add_option("file", file, "Input document")->required();

    auto* verify_cmd = app.add_subcommand("verify-paper", "Run the acceptance suite");
    verify_cmd->add_option("--samples", opts.samples, "Random conjugates per representative")
        ->capture_default_str();
    verify_cmd->add_option("--seed", opts.seed, "Random seed")->capture_default_str();

    auto* conj_cmd = app.add_subcommand("conjugacy", "Decide whether two subalgebras are SL(3)-conjugate");
    conj_cmd->add_option("file_a", file, "First input document")->required();
    conj_cmd->add_option("file_b", file_b, "Second input document")->required();

    auto* inv_cmd = app.add_subcommand("invariants", "Print the conjugacy invariants of a subalgebra");
    inv_cmd->add_option("file", file, "Input document")->required();

    auto* rep_cmd = app.add_subcommand("representative", "Print a class representative as an input document");
    rep_cmd->add_option("label", label_text, "Class label, e.g. K1_3 or L3_1")->required();
    rep_cmd->add_option("--param", param_text, "Family parameter, e.g. 1/3 or 1+2/1*i");

    CLI11_PARSE(app, argc, argv);

    if (*classify_cmd) {
        return guarded([&] {
            auto s = io::subalgebra_of(io::load_input(file));
            std::cout << io::serialize(io::make_report(s));
            return 0;
        });
    }
    if (*verify_cmd) {
        return guarded([&] {
            auto checks = run_acceptance(opts);
            std::cout << io::serialize(checks, opts);
            for (const auto& c : checks)
                if (!c.pass) return 1;
            return 0;
        });
    }
    if (*conj_cmd) {
        return guarded([&] {
            auto s = io::subalgebra_of(io::load_input(file));
            auto t = io::subalgebra_of(io::load_input(file_b));
            auto result = conjugacy_check(s, t);
            std::cout << io::serialize(result, classify(s).label, classify(t).label);
            return 0;
        });
    }
    if (*inv_cmd) {
        return guarded([&] {
            auto s = io::subalgebra_of(io::load_input(file));
            std::cout << io::serialize(signature(s));
            return 0;
        });
    }
    return guarded([&] {
        ClassLabel label = label_text.find('(') != std::string::npos
                               ? ClassLabel::parse(label_text)
                               : ClassLabel{label_from_name(label_text), std::nullopt};
        if (!param_text.empty()) label.param = Scalar::parse(param_text);
        std::cout << io::serialize(io::document_of(representative_of(label)));
        return 0;
    });
}
