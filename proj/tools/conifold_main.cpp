// conifold: command-line front end.
//
//   conifold analyze  --poly "x1 + x1^-1" [--kmax N]
//   conifold validate --poly-file w.txt
//   conifold moments  --poly "..." --kmax 200 [--csv out.csv]
//   conifold toric    --fan P2 | --fan-file fan.json [--moments 300]
//
// Exit status: 0 ok, 1 hypothesis violated, 2 input error, 3 numerical failure.

#include "conifold/errors.hpp"
#include "conifold/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace conifold;

enum ExitCode { kOk = 0, kHypothesis = 1, kInput = 2, kNumerical = 3 };

struct Settings {
    std::string poly;
    std::string poly_file;
    std::optional<int> dimension;
    double tol = SolverOptions{}.gradient_tolerance;
    int max_iter = SolverOptions{}.max_iterations;
    std::optional<int> kmax;
    std::string format = "json";
    std::string fan;
    std::string fan_file;
    std::optional<int> toric_moments;
    std::string csv;
};

SolverOptions solver_options(const Settings& s)
{
    SolverOptions opts;
    opts.gradient_tolerance = s.tol;
    opts.max_iterations = s.max_iter;
    opts.validate();
    return opts;
}

LaurentPolynomial load_polynomial(const Settings& s)
{
    if (!s.poly.empty() && !s.poly_file.empty())
        throw Error(ErrorCode::InvalidInput, "give either --poly or --poly-file, not both");
    if (!s.poly.empty())
        return parse_polynomial(s.poly, s.dimension);
    if (s.poly_file.empty())
        throw Error(ErrorCode::InvalidInput, "a polynomial is required (--poly or --poly-file)");
    const std::string text = read_text_file(s.poly_file);
    // A file holding a JSON object uses the JSON term form.
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return polynomial_from_json(Json::parse(text));
        } catch (const Json::exception& e) {
            throw Error(ErrorCode::InvalidInput, s.poly_file + ": " + e.what());
        }
    }
    return parse_polynomial(text, s.dimension);
}

Json header(const char* command)
{
    Json doc;
    doc["tool_version"] = kToolVersion;
    doc["command"] = command;
    return doc;
}

Json moment_summary(const MomentSequence& seq)
{
    Json doc;
    doc["kmax"] = seq.kmax;
    doc["period"] = seq.period ? Json(*seq.period) : Json(nullptr);
    doc["nonzero_count"] = seq.support.size();
    if (!seq.support.empty()) {
        const int last = seq.support.back();
        doc["last_nonzero_k"] = last;
        doc["last_nonzero_value"] = to_string(seq.values[static_cast<std::size_t>(last)]);
    }
    return doc;
}

void emit_text(const Json& value, const std::string& prefix, std::ostream& out)
{
    if (value.is_object()) {
        for (const auto& [key, child] : value.items())
            emit_text(child, prefix.empty() ? key : prefix + "." + key, out);
    } else if (value.is_array() && !value.empty() && (value.front().is_object() || value.front().is_array())) {
        for (std::size_t i = 0; i < value.size(); ++i)
            emit_text(value[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
}

void emit(const Json& doc, const Settings& s)
{
    if (s.format == "text")
        emit_text(doc, "", std::cout);
    else
        std::cout << doc.dump(2) << '\n';
}

int run_validate(const Settings& s)
{
    const LaurentPolynomial w = load_polynomial(s);
    const SupportValidation v = validate_support(w);
    Json doc = header("validate");
    doc["input_echo"] = serialize(w);
    doc["validation"] = to_json(v);
    emit(doc, s);
    if (!v.origin_interior) {
        std::cerr << "conifold: origin is not strictly inside the Newton polytope\n";
        return kHypothesis;
    }
    return kOk;
}

int run_analyze(const Settings& s)
{
    const LaurentPolynomial w = load_polynomial(s);
    const SolverOptions opts = solver_options(s);
    const SupportValidation v = validate_support(w);
    Json doc = header("analyze");
    doc["input_echo"] = serialize(w);
    doc["validation"] = to_json(v);
    if (!v.origin_interior) {
        emit(doc, s);
        std::cerr << "conifold: origin is not strictly inside the Newton polytope\n";
        return kHypothesis;
    }
    doc["conifold"] = to_json(find_conifold_point(w, opts));
    if (s.kmax) {
        const MomentSequence seq = moment_sequence(w, *s.kmax);
        doc["moments"] = moment_summary(seq);
        doc["dk"] = to_json(dk_report(w, seq, opts));
    }
    emit(doc, s);
    return kOk;
}

int run_moments(const Settings& s)
{
    const LaurentPolynomial w = load_polynomial(s);
    const SolverOptions opts = solver_options(s);
    const int kmax = s.kmax.value_or(100);
    const SupportValidation v = validate_support(w);
    Json doc = header("moments");
    doc["input_echo"] = serialize(w);
    doc["validation"] = to_json(v);
    const MomentSequence seq = moment_sequence(w, kmax);
    if (!s.csv.empty()) {
        std::ofstream out(s.csv, std::ios::binary);
        if (!out)
            throw Error(ErrorCode::InvalidInput, "cannot write " + s.csv);
        out << moments_csv(seq);
    }
    doc["moments"] = to_json(seq);
    if (!v.origin_interior) {
        emit(doc, s);
        std::cerr << "conifold: origin is not strictly inside the Newton polytope\n";
        return kHypothesis;
    }
    doc["dk"] = to_json(dk_report(w, seq, opts));
    emit(doc, s);
    return kOk;
}

int run_toric(const Settings& s)
{
    if (s.fan.empty() == s.fan_file.empty())
        throw Error(ErrorCode::InvalidInput, "give exactly one of --fan or --fan-file");
    const FanInput fan = s.fan.empty() ? load_fan_file(s.fan_file) : builtin_fan(s.fan);
    const LaurentPolynomial w = potential_from_fan(fan);
    const SolverOptions opts = solver_options(s);
    const SupportValidation v = validate_support(w);

    Json doc = header("toric");
    doc["fan"] = fan_to_json(fan);
    doc["input_echo"] = serialize(w);
    doc["validation"] = to_json(v);
    if (!v.origin_interior) {
        emit(doc, s);
        std::cerr << "conifold: rays do not surround the origin (fan not complete?)\n";
        return kHypothesis;
    }
    doc["toric"] = to_json(toric_report(fan, opts));
    const std::optional<int> kmax = s.toric_moments ? s.toric_moments : s.kmax;
    if (kmax) {
        const MomentSequence seq = moment_sequence(w, *kmax);
        doc["moments"] = moment_summary(seq);
        doc["dk"] = to_json(dk_report(w, seq, opts));
    }
    emit(doc, s);
    return kOk;
}

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::HypothesisViolated:
    case ErrorCode::NoCertificate:
        return kHypothesis;
    case ErrorCode::MaxIterations:
    case ErrorCode::NotPositiveDefinite:
    case ErrorCode::OverflowRisk:
        return kNumerical;
    default:
        return kInput;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    Settings s;
    CLI::App app{"Conifold point, moments and toric bounds of positive Laurent polynomials", "conifold"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kToolVersion);

    app.add_option("--poly", s.poly, "Polynomial text, e.g. \"x1 + x1^-1\"");
    app.add_option("--poly-file", s.poly_file, "File with polynomial text or JSON term form");
    app.add_option("--dim", s.dimension, "Declared number of variables")->check(CLI::PositiveNumber);
    app.add_option("--tol", s.tol, "Gradient tolerance relative to max(1, W)")->check(CLI::PositiveNumber);
    app.add_option("--max-iter", s.max_iter, "Newton iteration budget")->check(CLI::PositiveNumber);
    app.add_option("--kmax", s.kmax, "Highest moment index")->check(CLI::NonNegativeNumber);
    app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "text"}));

    auto* analyze = app.add_subcommand("analyze", "Hypothesis check, conifold point, optional moments");
    auto* validate = app.add_subcommand("validate", "Newton polytope hypothesis check only");
    auto* moments = app.add_subcommand("moments", "Exact moment sequence and growth estimate");
    moments->add_option("--csv", s.csv, "Also write k,M_k as CSV to this path");
    auto* toric = app.add_subcommand("toric", "Toric Fano potential from a fan and its bounds");
    toric->add_option("--fan", s.fan, "Builtin fan name");
    toric->add_option("--fan-file", s.fan_file, "Fan JSON file");
    toric->add_option("--moments", s.toric_moments, "Also compute moments up to this index")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }

    try {
        if (*validate)
            return run_validate(s);
        if (*analyze)
            return run_analyze(s);
        if (*moments)
            return run_moments(s);
        return run_toric(s);
    } catch (const MaxIterationsError& e) {
        Json doc;
        doc["tool_version"] = kToolVersion;
        doc["error"] = Json{{"code", to_string(e.code())}, {"message", e.what()}};
        doc["trace"] = to_json(e.trace());
        std::cout << doc.dump(2) << '\n';
        std::cerr << "conifold: " << e.what() << '\n';
        return kNumerical;
    } catch (const Error& e) {
        std::cerr << "conifold: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "conifold: internal error: " << e.what() << '\n';
        return kNumerical;
    }
}
