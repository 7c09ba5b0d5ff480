#pragma once

#include <json.hpp>

#include "holext/exttest.hpp"
#include "holext/reconstruct.hpp"

namespace holext {

using Json = nlohmann::ordered_json;

Json to_json(cplx z);
Json to_json(const CPoint& p);
Json to_json(const MomentReport& r);
Json to_json(const MomentSweep& s);
Json to_json(const BunchSummary& b, bool with_lines = false);
Json to_json(const PoleTestReport& r);
Json to_json(const CircleFamilyReport& f);
Json to_json(const SliceVerdict& s);
Json to_json(const ClassificationReport& r);
/// Coefficients as a list of {nu, mu, re, im}.
Json to_json(const ExtensionModel& m);
Json to_json(const AgDecomposition& d);
Json to_json(const ForelliReport& r);
Json to_json(const CrossSectionReport& r);

/// Top-level report {"test", "params", "residuals", "scale", "verdict"}.
Json make_report(std::string_view test, Json params, Json residuals, double scale, Verdict verdict);

}  // namespace holext
