// Command-line front end: parses coefficient input, dispatches to the
// library, and prints one JSON document per invocation on standard output.
// Exit codes: 0 success / all checks pass, 1 computation or verification
// failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "s2op/json_io.hpp"
#include "s2op/operators.hpp"
#include "s2op/verify.hpp"

namespace {

using s2op::Complex;

Complex parsePair(const std::string& flag, const std::string& text) {
    try {
        std::size_t used = 0;
        const double re = std::stod(text, &used);
        if (used == text.size()) return Complex(re, 0.0);
        if (text[used] != ',') throw std::invalid_argument(text);
        std::size_t used2 = 0;
        const std::string rest = text.substr(used + 1);
        const double im = std::stod(rest, &used2);
        if (used2 != rest.size()) throw std::invalid_argument(text);
        return Complex(re, im);
    } catch (const std::exception&) {
        throw s2op::Error(s2op::ErrorCode::UsageError,
                          flag + " expects RE,IM but got \"" + text + "\"");
    }
}

s2op::CoefficientSeries parseInlineCoeffs(const std::string& text) {
    Eigen::VectorXcd coeffs(std::count(text.begin(), text.end(), ';') + 1);
    std::size_t start = 0;
    Eigen::Index n = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find(';', start);
        const std::string item =
            text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        coeffs[n++] = parsePair("--coeffs", item);
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return s2op::CoefficientSeries(coeffs.head(n));
}

struct SeriesInput {
    std::string path;
    std::string inlineCoeffs;

    void attach(CLI::App* cmd) {
        cmd->add_option("--in", path, "series JSON file {\"coeffs\": [[re, im], ...]}");
        cmd->add_option("--coeffs", inlineCoeffs, "inline coefficients re,im;re,im;...");
    }

    s2op::CoefficientSeries load() const {
        if (path.empty() == inlineCoeffs.empty()) {
            throw s2op::Error(s2op::ErrorCode::UsageError,
                              "exactly one of --in or --coeffs is required");
        }
        return path.empty() ? parseInlineCoeffs(inlineCoeffs)
                            : s2op::json::seriesFromJsonFile(path);
    }
};

s2op::SpaceTag parseSpace(const std::string& name, double beta) {
    if (name == "hardy") return s2op::SpaceTag::hardy();
    if (name == "bergman") return s2op::SpaceTag::bergman(beta);
    if (name == "dirichlet") return s2op::SpaceTag::dirichlet();
    if (name == "s2") return s2op::SpaceTag::s2();
    throw s2op::Error(s2op::ErrorCode::UsageError,
                      "--space expects hardy|bergman|dirichlet|s2 but got \"" + name + "\"");
}

void printEstimate(const s2op::OperatorNormEstimate& est) {
    std::cout << "{\"lowerBound\":" << s2op::json::formatNumber(est.lowerBound)
              << ",\"paperLower\":" << s2op::json::formatNumber(est.paperLower)
              << ",\"paperUpper\":" << s2op::json::formatNumber(est.paperUpper)
              << ",\"sectionSize\":" << est.sectionSize << "}\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical workbench for multiplication and weighted composition operators "
                 "on the Hilbert space S^2 of the unit disk"};
    app.require_subcommand(1);

    SeriesInput normIn, matrixIn, opnormIn, wconormIn, spectrumIn, membershipIn, isometryIn,
        compactnessIn, factorIn;
    std::string spaceName = "s2";
    double beta = 0.0;
    std::string wText, lambdaText, aText, csvPath;
    double theta = 0.0, tol = -1.0;
    int section = 60, budget = -1, samples = 512;
    std::uint64_t seed = 42;
    int trials = 500;

    CLI::App* norm = app.add_subcommand("norm", "series norm in a chosen space");
    normIn.attach(norm);
    norm->add_option("--space", spaceName, "hardy|bergman|dirichlet|s2")->capture_default_str();
    norm->add_option("--beta", beta, "Bergman weight (needs beta > -1)");

    CLI::App* kernel = app.add_subcommand("kernel", "reproducing kernel norm at a point");
    kernel->add_option("--space", spaceName, "hardy|bergman|dirichlet|s2")->capture_default_str();
    kernel->add_option("--beta", beta, "Bergman weight (needs beta > -1)");
    kernel->add_option("--w", wText, "kernel point RE,IM")->required();
    kernel->add_option("--budget", budget, "S^2 kernel partial-sum budget (default: tail < 1e-12)");

    CLI::App* matrix = app.add_subcommand("matrix", "finite-section matrix of M_psi or W_{psi,phi}");
    matrixIn.attach(matrix);
    matrix->add_option("--section", section, "section size N")->capture_default_str();
    matrix->add_option("--a", aText, "automorphism parameter RE,IM (selects W_{psi,phi})");
    matrix->add_option("--theta", theta, "automorphism rotation angle");

    CLI::App* opnorm = app.add_subcommand("opnorm", "multiplier norm sandwich");
    opnormIn.attach(opnorm);
    opnorm->add_option("--section", section, "section size N")->capture_default_str();

    CLI::App* wconorm = app.add_subcommand("wconorm", "weighted composition norm sandwich");
    wconormIn.attach(wconorm);
    wconorm->add_option("--section", section, "section size N")->capture_default_str();
    wconorm->add_option("--a", aText, "automorphism parameter RE,IM")->required();
    wconorm->add_option("--theta", theta, "automorphism rotation angle")->capture_default_str();

    CLI::App* spectrum = app.add_subcommand("spectrum", "sample the image psi(closed disk)");
    spectrumIn.attach(spectrum);
    spectrum->add_option("--samples", samples, "angular sample count")->capture_default_str();
    spectrum->add_option("--csv", csvPath, "write imageSamples as re,im rows");

    CLI::App* membership = app.add_subcommand("membership", "spectrum membership certificate");
    membershipIn.attach(membership);
    membership->add_option("--lambda", lambdaText, "query point RE,IM")->required();
    membership->add_option("--budget", budget, "reciprocal series budget")->capture_default_str();
    membership->add_option("--tol", tol, "inside margin epsIn (default: derivative guard)");

    CLI::App* isometry = app.add_subcommand("isometry", "isometry defect of a multiplier symbol");
    isometryIn.attach(isometry);

    CLI::App* compactness = app.add_subcommand("compactness", "column norms ||psi e_n||, n = 1..N");
    compactnessIn.attach(compactness);
    compactness->add_option("--section", section, "diagnostic length N")->capture_default_str();

    CLI::App* factor = app.add_subcommand("factor", "synthetic division by (z - w)");
    factorIn.attach(factor);
    factor->add_option("--w", wText, "division point RE,IM")->required();

    CLI::App* verify = app.add_subcommand("verify", "run the seeded theorem harness");
    verify->add_option("--seed", seed, "harness seed")->capture_default_str();
    verify->add_option("--trials", trials, "trials per theorem")->capture_default_str();
    verify->add_option("--tol", tol, "harness tolerance (default 1e-9)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (norm->parsed()) {
            const s2op::SpaceTag space = parseSpace(spaceName, beta);
            std::cout << s2op::json::toJson(s2op::seriesNorm(space, normIn.load())) << "\n";
        } else if (kernel->parsed()) {
            const s2op::SpaceTag space = parseSpace(spaceName, beta);
            const Complex w = parsePair("--w", wText);
            const int kernelBudget = (budget > 0) ? budget : s2op::s2KernelBudget(w, 1e-12);
            const double normSquared = s2op::kernelNormSquared(space, w, kernelBudget);
            std::cout << "{\"space\":\"" << space.name() << "\",\"beta\":"
                      << (space.kind == s2op::SpaceKind::Bergman
                              ? s2op::json::formatNumber(space.beta)
                              : "null")
                      << ",\"w\":[" << s2op::json::formatNumber(w.real()) << ","
                      << s2op::json::formatNumber(w.imag())
                      << "],\"budget\":" << kernelBudget
                      << ",\"normSquared\":" << s2op::json::formatNumber(normSquared) << "}\n";
        } else if (matrix->parsed()) {
            const s2op::CoefficientSeries psi = matrixIn.load();
            if (aText.empty()) {
                std::cout << s2op::json::toJson(s2op::multiplierMatrix(
                                 psi.truncated(std::max(psi.budget(), section)), section))
                          << "\n";
            } else {
                const s2op::DiskAutomorphism phi(parsePair("--a", aText), theta);
                std::cout << s2op::json::toJson(s2op::weightedCompositionMatrix(psi, phi, section))
                          << "\n";
            }
        } else if (opnorm->parsed()) {
            const s2op::CoefficientSeries psi = opnormIn.load();
            printEstimate(
                s2op::mopNormBounds(psi.truncated(std::max(psi.budget(), section)), section));
        } else if (wconorm->parsed()) {
            const s2op::DiskAutomorphism phi(parsePair("--a", aText), theta);
            printEstimate(s2op::wcoNormBounds(wconormIn.load(), phi, section));
        } else if (spectrum->parsed()) {
            const s2op::SpectrumReport report =
                s2op::spectrumSample(spectrumIn.load(), 64, samples);
            if (!csvPath.empty()) {
                std::ofstream csv(csvPath);
                if (!csv) {
                    throw s2op::Error(s2op::ErrorCode::InvalidInput,
                                      "cannot open csv output: " + csvPath);
                }
                s2op::json::writeCsv(csv, report.imageSamples);
            }
            std::cout << s2op::json::toJson(report) << "\n";
        } else if (membership->parsed()) {
            const s2op::CoefficientSeries psi = membershipIn.load();
            const Complex lambda = parsePair("--lambda", lambdaText);
            const double margin = (tol > 0.0) ? tol : s2op::defaultMembershipMargin(psi);
            const int recBudget = (budget > 0) ? budget : 256;
            std::cout << s2op::json::toJson(
                             s2op::spectrumMembership(psi, lambda, margin, recBudget))
                      << "\n";
        } else if (isometry->parsed()) {
            std::cout << "{\"defect\":"
                      << s2op::json::formatNumber(s2op::isometryDefect(isometryIn.load()))
                      << "}\n";
        } else if (compactness->parsed()) {
            const s2op::CoefficientSeries psi = compactnessIn.load();
            const std::vector<double> values = s2op::compactnessDiagnostic(
                psi.truncated(std::max(psi.budget(), 2 * section)), section);
            std::cout << "{\"values\":[";
            double minimum = values.empty() ? 0.0 : values.front();
            for (std::size_t i = 0; i < values.size(); ++i) {
                if (i > 0) std::cout << ",";
                std::cout << s2op::json::formatNumber(values[i]);
                minimum = std::min(minimum, values[i]);
            }
            std::cout << "],\"min\":" << s2op::json::formatNumber(minimum) << "}\n";
        } else if (factor->parsed()) {
            const s2op::LinearDivision division =
                s2op::divideByLinear(factorIn.load(), parsePair("--w", wText));
            std::cout << "{\"quotient\":" << s2op::json::toJson(division.quotient)
                      << ",\"remainder\":[" << s2op::json::formatNumber(division.remainder.real())
                      << "," << s2op::json::formatNumber(division.remainder.imag()) << "]}\n";
        } else if (verify->parsed()) {
            s2op::TrialConfig config;
            config.seed = seed;
            config.trials = trials;
            if (tol > 0.0) config.tolerance = tol;
            const std::vector<s2op::TheoremReport> reports = s2op::runAll(config);
            std::cout << s2op::json::toJson(reports, config) << "\n";
            for (const s2op::TheoremReport& report : reports) {
                if (!report.passed()) return 1;
            }
        }
        return 0;
    } catch (const s2op::Error& e) {
        if (e.code() == s2op::ErrorCode::UsageError) {
            std::cerr << e.what() << "\n";
            return 2;
        }
        nlohmann::ordered_json error;
        error["error"] = s2op::errorCodeName(e.code());
        error["detail"] = e.what();
        std::cout << error.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        nlohmann::ordered_json error;
        error["error"] = "Internal";
        error["detail"] = e.what();
        std::cout << error.dump() << "\n";
        return 1;
    }
}
