#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "s2op/operators.hpp"
#include "s2op/verify.hpp"

namespace s2op::json {

/// All writers emit keys in the documented fixed order and format numbers
/// with 17 significant digits, so equal values serialize to equal bytes.
std::string formatNumber(double x);

std::string toJson(const CoefficientSeries& f);                    // {"coeffs": [[re, im], ...]}
std::string toJson(const NormReport& report);                      // {"space","beta","value","budget"}
std::string toJson(const FiniteSectionMatrix& matrix);             // {"n","entries"} row-major
std::string toJson(const SpectrumReport& report);                  // {"imageSamples","queries"}
std::string toJson(const MembershipQuery& query);
std::string toJson(const std::vector<TheoremReport>& reports, const TrialConfig& config);

/// "re,im" header plus one row per image sample.
void writeCsv(std::ostream& out, const std::vector<Complex>& points);

CoefficientSeries seriesFromJson(const std::string& text);
CoefficientSeries seriesFromJsonFile(const std::string& path);

}  // namespace s2op::json
