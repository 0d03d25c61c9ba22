// Text and JSON renderings of model summaries and expansions.
#pragma once

#include "walks/asymptotics.hpp"
#include "walks/diagonal.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace walks {

nlohmann::json surd_json(const SurdConstant& c);
nlohmann::json minimal_point_json(const StepSet& s, const MinimalPoint& p);
nlohmann::json terms_json(const AsymptoticExpansion& e, int digits);
nlohmann::json rational_json(const RationalFunctionSpec& spec);

struct ReportInput {
  std::string model;
  const StepSet* steps = nullptr;
  const AsymptoticExpansion* walks = nullptr;
  const AsymptoticExpansion* excursions = nullptr;
  bool emit_rational = false;
  int digits = 12;
};

nlohmann::json report_json(const ReportInput& in);
std::string report_text(const ReportInput& in);

/// `(even + odd·(-1)^n) · n^{-p} · b^n`, dropping whichever part is zero.
std::string term_text(const ExpansionTerm& t, int dimension, long base);
/// Exponent of n for term l as text, e.g. `-3/2`.
std::string n_power_text(int dimension, int l);

}  // namespace walks
