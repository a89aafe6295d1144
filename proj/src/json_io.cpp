#include "s2op/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace s2op::json {

namespace {

void appendEscaped(std::string& out, const std::string& text) {
    out += '"';
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default: out += c;
        }
    }
    out += '"';
}

std::string pair(Complex z) {
    return "[" + formatNumber(z.real()) + "," + formatNumber(z.imag()) + "]";
}

}  // namespace

std::string formatNumber(double x) {
    if (!std::isfinite(x)) {
        throw Error(ErrorCode::InvalidInput, "cannot serialize a non-finite number");
    }
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", x);
    return buffer;
}

std::string toJson(const CoefficientSeries& f) {
    std::string out = "{\"coeffs\":[";
    for (int n = 0; n <= f.budget(); ++n) {
        if (n > 0) out += ',';
        out += pair(f[n]);
    }
    out += "]}";
    return out;
}

std::string toJson(const NormReport& report) {
    std::string out = "{\"space\":";
    appendEscaped(out, report.space.name());
    out += ",\"beta\":";
    out += (report.space.kind == SpaceKind::Bergman) ? formatNumber(report.space.beta) : "null";
    out += ",\"value\":" + formatNumber(report.value);
    out += ",\"budget\":" + std::to_string(report.budget) + "}";
    return out;
}

std::string toJson(const FiniteSectionMatrix& matrix) {
    std::string out = "{\"n\":" + std::to_string(matrix.sectionSize) + ",\"entries\":[";
    bool first = true;
    for (Eigen::Index row = 0; row < matrix.entries.rows(); ++row) {
        for (Eigen::Index col = 0; col < matrix.entries.cols(); ++col) {
            if (!first) out += ',';
            first = false;
            out += pair(matrix.entries(row, col));
        }
    }
    out += "]}";
    return out;
}

std::string toJson(const MembershipQuery& query) {
    std::string out = "{\"lambda\":" + pair(query.lambda) + ",\"verdict\":";
    appendEscaped(out, membershipVerdictName(query.verdict));
    out += ",\"certificate\":{\"c\":" + formatNumber(query.certificate.c);
    out += ",\"resolventNormBound\":" + formatNumber(query.certificate.resolventNormBound);
    out += ",\"residual\":" + formatNumber(query.certificate.residual) + "}}";
    return out;
}

std::string toJson(const SpectrumReport& report) {
    std::string out = "{\"imageSamples\":[";
    for (std::size_t i = 0; i < report.imageSamples.size(); ++i) {
        if (i > 0) out += ',';
        out += pair(report.imageSamples[i]);
    }
    out += "],\"queries\":[";
    for (std::size_t i = 0; i < report.queries.size(); ++i) {
        if (i > 0) out += ',';
        out += toJson(report.queries[i]);
    }
    out += "]}";
    return out;
}

std::string toJson(const std::vector<TheoremReport>& reports, const TrialConfig& config) {
    std::string out = "{\"config\":{\"seed\":" + std::to_string(config.seed);
    out += ",\"trials\":" + std::to_string(config.trials);
    out += ",\"maxDegree\":" + std::to_string(config.maxDegree);
    out += ",\"coefficientScale\":" + formatNumber(config.coefficientScale);
    out += ",\"tolerance\":" + formatNumber(config.tolerance);
    out += "},\"reports\":[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const TheoremReport& report = reports[i];
        if (i > 0) out += ',';
        out += "{\"theoremId\":";
        appendEscaped(out, report.theoremId);
        out += ",\"trials\":" + std::to_string(report.trials);
        out += ",\"failures\":[";
        for (std::size_t k = 0; k < report.failures.size(); ++k) {
            const TrialFailure& failure = report.failures[k];
            if (k > 0) out += ',';
            out += "{\"input\":";
            appendEscaped(out, failure.input);
            out += ",\"measured\":" + formatNumber(failure.measured);
            out += ",\"bound\":" + formatNumber(failure.bound) + "}";
        }
        out += "],\"maxSlack\":" + formatNumber(report.maxSlack) + "}";
    }
    out += "]}";
    return out;
}

void writeCsv(std::ostream& out, const std::vector<Complex>& points) {
    out << "re,im\n";
    for (Complex z : points) {
        out << formatNumber(z.real()) << ',' << formatNumber(z.imag()) << '\n';
    }
}

CoefficientSeries seriesFromJson(const std::string& text) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidInput, std::string("series JSON parse error: ") + e.what());
    }
    if (!parsed.is_object() || !parsed.contains("coeffs") || !parsed["coeffs"].is_array() ||
        parsed["coeffs"].empty()) {
        throw Error(ErrorCode::InvalidInput,
                    "series JSON must be {\"coeffs\": [[re, im], ...]} with at least one entry");
    }
    const auto& coeffs = parsed["coeffs"];
    Eigen::VectorXcd out(coeffs.size());
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        const auto& entry = coeffs[n];
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number()) {
            throw Error(ErrorCode::InvalidInput, "series coefficient must be a [re, im] pair");
        }
        out[static_cast<Eigen::Index>(n)] =
            Complex(entry[0].get<double>(), entry[1].get<double>());
    }
    return CoefficientSeries(std::move(out));
}

CoefficientSeries seriesFromJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::InvalidInput, "cannot open series file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return seriesFromJson(buffer.str());
}

}  // namespace s2op::json
