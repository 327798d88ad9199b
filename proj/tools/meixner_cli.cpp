// Command-line surface: construct parameter points, list polynomials, dump
// the difference operators, and run the verification suites with
// machine-readable JSON output. Exit code 0 means every executed check
// passed; 1 means a check failed or a candidate was invalid; 2 is an
// input/usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "meixner/errors.hpp"
#include "meixner/json_io.hpp"
#include "meixner/operators.hpp"
#include "meixner/orthogonality.hpp"
#include "meixner/parameter_space.hpp"
#include "meixner/verify.hpp"

namespace {

using namespace meixner;

struct Options {
    std::string family;
    std::string spec_source;
    std::string beta;  // empty: 1, or the beta stored in a --spec file
    int maxdeg = 3;
    int grid = 3;
    std::string tolerance = "1e-10";
    int truncation_cap = 512;
    unsigned long seed = 12345;
    std::string out;
    bool unchecked = false;
};

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        values.push_back(parse_rational(item));
    }
    return values;
}

// "triangular:c1,c2,..." | "geometric:q,d" | "gram:c1,...[;m1,m2,...]"
MeixnerPoint point_from_family(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos) {
        throw BadParameter("family shorthand must look like name:args, got " + text);
    }
    const std::string name = text.substr(0, colon);
    const std::string args = text.substr(colon + 1);
    if (name == "triangular") {
        return family_triangular(parse_rational_list(args));
    }
    if (name == "geometric") {
        const std::vector<Rational> parts = parse_rational_list(args);
        if (parts.size() != 2 || parts[1].get_den() != 1) {
            throw BadParameter("geometric shorthand needs q,d");
        }
        return family_geometric(parts[0], static_cast<int>(parts[1].get_num().get_si()));
    }
    if (name == "gram") {
        const std::size_t semi = args.find(';');
        if (semi == std::string::npos) {
            return from_weights(parse_rational_list(args));
        }
        return from_weights(parse_rational_list(args.substr(0, semi)),
                            parse_rational_list(args.substr(semi + 1)));
    }
    throw BadParameter("unknown family '" + name + "'");
}

nlohmann::json load_spec_json(const std::string& source) {
    std::string text = source;
    const std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) {
        throw BadParameter("empty --spec argument");
    }
    if (text[start] != '{') {
        std::ifstream file(source);
        if (!file) {
            throw BadParameter("cannot open spec file: " + source);
        }
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    }
    return nlohmann::json::parse(text);
}

void require_one_source(const Options& opts) {
    if (opts.family.empty() == opts.spec_source.empty()) {
        throw std::invalid_argument("exactly one of --family and --spec is required");
    }
}

MeixnerSpec resolve_spec(const Options& opts) {
    require_one_source(opts);
    if (!opts.family.empty()) {
        return MeixnerSpec(point_from_family(opts.family),
                           parse_rational(opts.beta.empty() ? "1" : opts.beta));
    }
    const nlohmann::json parsed = load_spec_json(opts.spec_source);
    if (parsed.contains("point")) {
        MeixnerSpec spec = spec_from_json(parsed, !opts.unchecked);
        if (opts.beta.empty()) {
            return spec;
        }
        return MeixnerSpec(spec.point(), parse_rational(opts.beta));
    }
    return MeixnerSpec(point_from_json(parsed, !opts.unchecked),
                       parse_rational(opts.beta.empty() ? "1" : opts.beta));
}

void emit(const Options& opts, const nlohmann::json& payload) {
    const std::string text = payload.dump(2) + "\n";
    if (opts.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(opts.out);
        if (!file) {
            throw BadParameter("cannot open output file: " + opts.out);
        }
        file << text;
    }
}

int cmd_construct(const Options& opts) {
    require_one_source(opts);
    MeixnerPoint point = [&] {
        if (!opts.family.empty()) {
            return point_from_family(opts.family);
        }
        nlohmann::json parsed = load_spec_json(opts.spec_source);
        if (parsed.contains("point")) {
            parsed = parsed.at("point");
        }
        return point_from_json(parsed, false);
    }();
    const std::vector<ParameterCheck> checks = parameter_check_report(
        point.dimension(), point.c0(), point.c(), point.c_tilde(), point.U());
    bool valid = true;
    nlohmann::json check_json = nlohmann::json::array();
    for (const ParameterCheck& check : checks) {
        valid = valid && check.pass;
        nlohmann::json entry{{"identity", check.condition}, {"pass", check.pass}};
        if (!check.details.empty()) {
            entry["witness"] = check.details;
        }
        check_json.push_back(std::move(entry));
    }
    emit(opts, {{"point", point_to_json(point)},
                {"valid", valid},
                {"checks", std::move(check_json)}});
    return valid ? 0 : 1;
}

int cmd_polys(const Options& opts) {
    const MeixnerSpec spec = resolve_spec(opts);
    nlohmann::json entries = nlohmann::json::array();
    for (const MultiIndex& n : indices_total_at_most(spec.dimension(), opts.maxdeg)) {
        entries.push_back({{"n", multi_index_to_json(n)},
                           {"polynomial",
                            polynomial_to_json(hypergeometric_polynomial(spec, n))}});
    }
    emit(opts, {{"spec", spec_to_json(spec)}, {"polynomials", std::move(entries)}});
    return 0;
}

int cmd_dump_operators(const Options& opts) {
    const MeixnerSpec spec = resolve_spec(opts);
    nlohmann::json variable = nlohmann::json::array();
    nlohmann::json degree = nlohmann::json::array();
    for (int i = 1; i <= spec.dimension(); ++i) {
        variable.push_back(
            {{"i", i}, {"operator", operator_to_json(build_variable_operator(spec, i))}});
        degree.push_back(
            {{"i", i}, {"operator", operator_to_json(build_degree_operator(spec, i))}});
    }
    emit(opts, {{"spec", spec_to_json(spec)},
                {"variable_operators", std::move(variable)},
                {"degree_operators", std::move(degree)}});
    return 0;
}

std::vector<SparsePolynomial> sample_polynomials(int d, unsigned long seed, int count,
                                                 int max_degree) {
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    std::vector<SparsePolynomial> samples;
    for (int s = 0; s < count; ++s) {
        SparsePolynomial p(d);
        for (int t = 0; t < 2 * d + 2; ++t) {
            std::vector<int> exponent(static_cast<std::size_t>(d), 0);
            int budget = max_degree;
            for (int i = 0; i < d; ++i) {
                std::uniform_int_distribution<int> pick(0, budget);
                exponent[static_cast<std::size_t>(i)] = pick(rng);
                budget -= exponent[static_cast<std::size_t>(i)];
            }
            std::uniform_int_distribution<int> numerator(-8, 8);
            std::uniform_int_distribution<int> denominator(1, 5);
            p.add_term(MultiIndex(exponent), make_rational(numerator(rng), denominator(rng)));
        }
        samples.push_back(std::move(p));
    }
    return samples;
}

int cmd_verify(const Options& opts) {
    const MeixnerSpec spec = resolve_spec(opts);
    VerificationReport report = verify_cross_representation(spec, opts.maxdeg, opts.grid);
    report.merge(verify_duality(spec, opts.grid));
    report.merge(verify_bispectrality(spec, opts.maxdeg, opts.grid));
    report.merge(verify_commutativity(
        spec, sample_polynomials(spec.dimension(), opts.seed, 5, 4)));
    if (spec.dimension() == 1) {
        report.merge(verify_classical_reduction(spec, std::max(opts.maxdeg, 4),
                                                std::max(opts.grid, 4)));
    }
    emit(opts, {{"spec", spec_to_json(spec)},
                {"all_passed", report.all_passed()},
                {"failures", report.failure_count()},
                {"report", report.to_json()}});
    return report.all_passed() ? 0 : 1;
}

int cmd_orthogonality(const Options& opts) {
    const MeixnerSpec spec = resolve_spec(opts);
    const VerificationReport report = verify_orthogonality(
        spec, opts.maxdeg, parse_rational(opts.tolerance), opts.truncation_cap);
    emit(opts, {{"spec", spec_to_json(spec)},
                {"all_passed", report.all_passed()},
                {"failures", report.failure_count()},
                {"report", report.to_json()}});
    return report.all_passed() ? 0 : 1;
}

void add_common_options(CLI::App* cmd, Options& opts, bool wants_beta) {
    cmd->add_option("--family", opts.family,
                    "family shorthand: triangular:c1,c2,... | geometric:q,d | "
                    "gram:c1,...[;mixing]");
    cmd->add_option("--spec", opts.spec_source, "inline JSON or a path to a JSON file");
    cmd->add_flag("--unchecked", opts.unchecked, "skip membership validation of --spec input");
    cmd->add_option("--out", opts.out, "write JSON output to this file instead of stdout");
    if (wants_beta) {
        cmd->add_option("--beta", opts.beta, "beta parameter (rational, default 1)");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multivariate Meixner polynomials: exact construction and verification"};
    app.require_subcommand(1);
    Options opts;

    CLI::App* construct = app.add_subcommand(
        "construct", "validate a parameter point and emit it with the full check report");
    add_common_options(construct, opts, false);

    CLI::App* polys = app.add_subcommand(
        "polys", "emit the polynomials for all |n| <= maxdeg in graded lexicographic order");
    add_common_options(polys, opts, true);
    polys->add_option("--maxdeg", opts.maxdeg, "largest total degree |n| (default 3)")
        ->check(CLI::NonNegativeNumber);

    CLI::App* dump = app.add_subcommand("dump-operators",
                                        "emit both operator families term by term");
    add_common_options(dump, opts, true);

    CLI::App* verify = app.add_subcommand(
        "verify",
        "run the representation, duality, eigenvalue, and commutativity checks");
    add_common_options(verify, opts, true);
    verify->add_option("--maxdeg", opts.maxdeg, "largest total degree |n| (default 3)")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--grid", opts.grid, "lattice box edge for pointwise checks")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", opts.seed, "seed for the random commutativity samples");

    CLI::App* orth = app.add_subcommand(
        "orthogonality", "verify the weighted inner products against the closed-form norms");
    add_common_options(orth, opts, true);
    orth->add_option("--maxdeg", opts.maxdeg, "largest total degree |n| (default 3)")
        ->check(CLI::NonNegativeNumber);
    orth->add_option("--tol", opts.tolerance, "tail tolerance (rational, default 1e-10)");
    orth->add_option("--truncation-cap", opts.truncation_cap,
                     "largest |x| shell before giving up (default 512)")
        ->check(CLI::NonNegativeNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) {
            return cmd_construct(opts);
        }
        if (polys->parsed()) {
            return cmd_polys(opts);
        }
        if (dump->parsed()) {
            return cmd_dump_operators(opts);
        }
        if (verify->parsed()) {
            return cmd_verify(opts);
        }
        if (orth->parsed()) {
            return cmd_orthogonality(opts);
        }
    } catch (const NotInParameterSet& error) {
        nlohmann::json payload{{"error", error.what()}, {"violations", error.violations()}};
        std::cout << payload.dump(2) << "\n";
        return 1;
    } catch (const Error& error) {
        std::cout << nlohmann::json{{"error", error.what()}}.dump(2) << "\n";
        return 1;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
    return 2;
}
