#include "holext/report_json.hpp"

namespace holext {

Json to_json(cplx z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const CPoint& p) {
  Json out = Json::array();
  for (const auto& c : p.coords()) out.push_back(to_json(c));
  return out;
}

Json to_json(const MomentReport& r) {
  return Json{{"line", r.line_id},         {"n_samples", r.n_samples},
              {"residual", r.residual},    {"scale", r.scale},
              {"negative_coefficients", r.residuals}, {"verdict", to_string(r.verdict)}};
}

Json to_json(const MomentSweep& s) {
  Json poles = Json::array();
  for (std::size_t k = 0; k < s.t.size(); ++k)
    poles.push_back(Json{{"t", to_json(s.t[k])}, {"moment", to_json(s.values[k])}});
  return Json{{"residual", s.residual}, {"scale", s.scale}, {"poles", poles}, {"verdict", to_string(s.verdict)}};
}

Json to_json(const BunchSummary& b, bool with_lines) {
  Json out{{"point", to_json(b.point)},
           {"requested", b.requested},
           {"tested", b.tested},
           {"skipped_tangent", b.skipped_tangent},
           {"skipped_vertical", b.skipped_vertical},
           {"n_samples", b.n_samples},
           {"worst_relative_residual", b.worst_residual},
           {"verdict", to_string(b.verdict)}};
  if (with_lines) {
    Json lines = Json::array();
    for (const auto& r : b.reports) lines.push_back(Json{{"residual", r.residual}, {"scale", r.scale}});
    out["lines"] = lines;
  }
  return out;
}

Json to_json(const PoleTestReport& r) {
  return Json{{"radius", r.circle.radius()}, {"pole_bound", r.pole_bound}, {"residual", r.residual},
              {"scale", r.scale},            {"noise_floor", r.noise_floor}, {"verdict", to_string(r.verdict)}};
}

Json to_json(const CircleFamilyReport& f) {
  Json worst = nullptr;
  const PoleTestReport* w = nullptr;
  for (const auto& t : f.tests) {
    if (w == nullptr || t.ratio() > w->ratio()) w = &t;
  }
  if (w != nullptr) worst = to_json(*w);
  return Json{{"label", f.label},
              {"center", to_json(f.center)},
              {"horicycle", f.horicycle},
              {"bunch_fallback", f.bunch_fallback},
              {"radii_used", f.radii_used},
              {"radii_skipped", f.radii_skipped},
              {"tests", f.tests.size()},
              {"worst_bound_ratio", f.worst_ratio},
              {"worst_test", worst},
              {"verdict", to_string(f.verdict)}};
}

Json to_json(const SliceVerdict& s) {
  Json out{{"nu", s.nu},       {"check", s.check},
           {"residual", s.residual}, {"scale", s.scale},
           {"noise_floor", s.noise_floor}, {"verdict", to_string(s.verdict)}};
  if (s.order) out["vanishing_order"] = Json{{"k", s.order->k}, {"exponent", s.order->exponent}};
  return out;
}

Json to_json(const ClassificationReport& r) {
  Json fams = Json::array();
  for (const auto& f : r.families) fams.push_back(to_json(f));
  Json slices = Json::array();
  for (const auto& s : r.slices) slices.push_back(to_json(s));
  return Json{{"a", to_json(r.a)},
              {"b", to_json(r.b)},
              {"normalized", r.normalized},
              {"normalization_offset", r.normalization_offset},
              {"a1", to_json(r.a1)},
              {"b1", to_json(r.b1)},
              {"n_phi", r.n_phi},
              {"f_scale", r.f_scale},
              {"tol", r.tol},
              {"bunch_a", to_json(r.bunch_a)},
              {"bunch_b", to_json(r.bunch_b)},
              {"families", fams},
              {"slices", slices},
              {"classification", to_string(r.classification)},
              {"notes", r.notes},
              {"sampling", r.sampling}};
}

Json to_json(const ExtensionModel& m) {
  Json coeffs = Json::array();
  for (int nu = 0; nu <= m.V; ++nu) {
    for (int mu = 0; mu <= m.M; ++mu) {
      const cplx c = m.coeff(nu, mu);
      coeffs.push_back(Json{{"nu", nu}, {"mu", mu}, {"re", c.real()}, {"im", c.imag()}});
    }
  }
  return Json{{"V", m.V},
              {"M", m.M},
              {"n_phi", m.n_phi},
              {"f_scale", m.f_scale},
              {"boundary_error", m.boundary_error},
              {"boundary_points", m.boundary_points},
              {"slice_spreads", m.spreads},
              {"coefficients", coeffs}};
}

Json to_json(const AgDecomposition& d) {
  Json h = Json::array();
  for (const auto& hj : d.h) {
    Json row = Json::array();
    for (const auto& c : hj) row.push_back(to_json(c));
    h.push_back(row);
  }
  return Json{{"nu", d.nu},
              {"M", d.M},
              {"h", h},
              {"rms_residual", d.rms_residual},
              {"max_residual", d.max_residual},
              {"condition", d.condition},
              {"n_samples", d.n_samples}};
}

Json to_json(const ForelliReport& r) {
  return Json{{"lines", r.lines},   {"samples", r.samples}, {"worst_residual", r.worst_residual},
              {"scale", r.scale},   {"tol", r.tol},         {"verdict", to_string(r.verdict)}};
}

Json to_json(const CrossSectionReport& r) {
  Json planes = Json::array();
  for (const auto& p : r.planes) {
    Json pj{{"origin", to_json(p.plane.origin())},
            {"e1", to_json(p.plane.e1())},
            {"e2", to_json(p.plane.e2())},
            {"classification", to_string(p.classification)}};
    if (p.model) pj["boundary_error"] = p.model->boundary_error;
    if (!p.failure.empty()) pj["failure"] = p.failure;
    planes.push_back(pj);
  }
  return Json{{"planes", planes},
              {"line_points", r.line_points.size()},
              {"max_disagreement", r.max_disagreement},
              {"all_in_A", r.all_in_A},
              {"origin_on_line", r.origin_on_line}};
}

Json make_report(std::string_view test, Json params, Json residuals, double scale, Verdict verdict) {
  return Json{{"test", test},
              {"params", std::move(params)},
              {"residuals", std::move(residuals)},
              {"scale", scale},
              {"verdict", to_string(verdict)}};
}

}  // namespace holext
