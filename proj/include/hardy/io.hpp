#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hardy/cone.hpp"
#include "hardy/constants.hpp"
#include "hardy/extremal.hpp"
#include "hardy/norms.hpp"
#include "hardy/report.hpp"

namespace hardy::io {

/// Key order is part of the machine format, so every object is ordered.
using Json = nlohmann::ordered_json;

/// Thrown for malformed JSON input (wrong shape, missing keys).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full round-trip precision.
std::string number(double x);

Json to_json(const StepFunction& f);
Json to_json(const PiecewiseFunction& f);
Json to_json(const NormReport& r);
Json to_json(const SharpConstants& s);
Json to_json(const SearchResult& r);
Json to_json(const FamilyScan& s);
Json to_json(const KepsRow& r);
Json to_json(const VerificationReport& r);

/// {"breakpoints": [...], "values": [...]}
StepFunction step_from_json(const Json& j);
/// {"pieces": [{"lo", "hi", "kind", "coeffs"}]}; an infinite hi is null.
PiecewiseFunction piecewise_from_json(const Json& j);

std::string csv_header(const NormReport&);
std::string csv_row(const NormReport& r);

/// Joins already-formatted cells with commas.
std::string csv_line(const std::vector<std::string>& cells);

}  // namespace hardy::io
