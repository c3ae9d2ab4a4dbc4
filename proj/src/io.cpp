#include "hardy/io.hpp"

#include <cmath>
#include <cstdio>

namespace hardy::io {

namespace {

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing key '") + key + "'");
  }
  return j.at(key);
}

std::vector<double> number_array(const Json& j, const char* key) {
  const Json& arr = member(j, key);
  if (!arr.is_array()) throw FormatError(std::string("'") + key + "' must be an array");
  std::vector<double> out;
  for (const Json& x : arr) {
    if (!x.is_number()) throw FormatError(std::string("'") + key + "' must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json to_json(const StepFunction& f) {
  Json j;
  j["breakpoints"] = std::vector<double>(f.breakpoints().begin(), f.breakpoints().end());
  j["values"] = std::vector<double>(f.values().begin(), f.values().end());
  return j;
}

Json to_json(const PiecewiseFunction& f) {
  Json pieces = Json::array();
  for (const Piece& piece : f.pieces()) {
    Json p;
    p["lo"] = piece.lo;
    p["hi"] = finite_or_null(piece.hi);
    p["kind"] = std::string(kind_name(piece.kind()));
    p["coeffs"] = piece.coeffs();
    pieces.push_back(std::move(p));
  }
  Json j;
  j["pieces"] = std::move(pieces);
  return j;
}

Json to_json(const NormReport& r) {
  Json j;
  j["p"] = r.p;
  j["norm_f"] = finite_or_null(r.norm_f);
  j["norm_hardy_osc"] = finite_or_null(r.norm_hardy_osc);
  j["norm_dual_osc"] = finite_or_null(r.norm_dual_osc);
  j["ratio_dual"] = finite_or_null(r.ratio_dual);
  j["ratio_hardy"] = finite_or_null(r.ratio_hardy);
  j["ratio_dual_over_hardy"] = finite_or_null(r.ratio_dual_over_hardy);
  return j;
}

Json to_json(const SharpConstants& s) {
  Json j;
  j["p"] = s.p;
  j["dual_lower"] = s.dual_lower;
  j["dual_upper"] = s.dual_upper;
  j["hardy_lower"] = s.hardy_lower;
  j["hardy_upper"] = s.hardy_upper;
  j["compare_lower"] = s.compare_lower;
  j["compare_upper"] = s.compare_upper;
  return j;
}

Json to_json(const SearchResult& r) {
  Json j;
  j["p"] = r.p;
  j["mode"] = std::string(mode_name(r.mode));
  j["best_ratio"] = finite_or_null(r.best_ratio);
  j["extreme_ratio"] = finite_or_null(r.extreme_ratio);
  j["iterations"] = r.iterations;
  j["winning_restart"] = r.winning_restart;
  j["best_function"] = to_json(r.best_function);
  Json trace = Json::array();
  for (const TracePoint& t : r.trace) trace.push_back(Json::array({t.iteration, t.ratio}));
  j["trace"] = std::move(trace);
  return j;
}

Json to_json(const FamilyScan& s) {
  Json j;
  j["p"] = s.p;
  j["q_list"] = s.q_list;
  j["ratios_test1"] = s.ratios_test1;
  j["ratios_test2"] = s.ratios_test2;
  j["eps_check"] = s.eps_check;
  return j;
}

Json to_json(const KepsRow& r) {
  Json j;
  j["eps"] = r.eps;
  j["norm_dual_image"] = r.norm_dual_image;
  j["norm_sqrd_image"] = r.norm_sqrd_image;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["check_name"] = r.check_name;
  j["samples"] = r.samples;
  j["worst_violation"] = finite_or_null(r.worst_violation);
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  j["details"] = r.details;
  return j;
}

StepFunction step_from_json(const Json& j) {
  return StepFunction(number_array(j, "breakpoints"), number_array(j, "values"));
}

PiecewiseFunction piecewise_from_json(const Json& j) {
  const Json& arr = member(j, "pieces");
  if (!arr.is_array()) throw FormatError("'pieces' must be an array");
  std::vector<Piece> pieces;
  for (const Json& p : arr) {
    const Json& lo = member(p, "lo");
    const Json& hi = member(p, "hi");
    const Json& kind = member(p, "kind");
    if (!lo.is_number() || !(hi.is_number() || hi.is_null()) || !kind.is_string()) {
      throw FormatError("piece needs numeric lo, numeric-or-null hi and a kind string");
    }
    const std::vector<double> coeffs = number_array(p, "coeffs");
    pieces.push_back(Piece::from_coeffs(lo.get<double>(), hi.is_null() ? kInfinity : hi.get<double>(),
                                        kind_from_name(kind.get<std::string>()), coeffs));
  }
  return PiecewiseFunction(std::move(pieces));
}

std::string csv_header(const NormReport&) {
  return "p,norm_f,norm_hardy_osc,norm_dual_osc,ratio_dual,ratio_hardy,ratio_dual_over_hardy";
}

std::string csv_row(const NormReport& r) {
  return csv_line({number(r.p), number(r.norm_f), number(r.norm_hardy_osc), number(r.norm_dual_osc),
                   number(r.ratio_dual), number(r.ratio_hardy), number(r.ratio_dual_over_hardy)});
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += ',';
    out += cells[i];
  }
  return out;
}

}  // namespace hardy::io
