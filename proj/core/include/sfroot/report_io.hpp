#pragma once

// Line-delimited JSON reports: one record per line, stable key order, big
// integers and rationals as decimal strings, reals tagged with their binary
// precision and rounding direction. Wall-clock fields are never written.

#include "sfroot/bounds.hpp"
#include "sfroot/caseanalysis.hpp"
#include "sfroot/counting.hpp"
#include "sfroot/scan.hpp"

#include <string>
#include <string_view>

namespace sfroot::io {

std::string to_lines(const scan::ScanReport& r);
scan::ScanReport scan_from_lines(std::string_view text);

// Columns p,value,class; metadata on leading '#' lines.
std::string to_csv(const scan::ScanReport& r);

std::string to_lines(const cases::ProofReport& r);
cases::ProofReport proof_from_lines(std::string_view text);

std::string to_lines(const cases::Omega13Record& r);
std::string to_lines(const cases::LadderResult& r);

std::string to_line(const cases::CaseCertificate& c);
std::string to_line(const bounds::BoundEvaluation& e);
std::string to_line(const bounds::ThresholdResult& t);
std::string to_line(const counting::CountResult& c);

std::string rational_text(const bounds::Rational& q);
bounds::Rational rational_from_text(std::string_view text);

} // namespace sfroot::io
