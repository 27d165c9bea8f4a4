#include "cuspbound/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace cusp {

namespace {

std::string pad(std::string text, size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

std::string join_flow(const FlowVector& alpha) {
  std::string out;
  for (int i = 0; i < alpha.dimension(); ++i) {
    if (i > 0) out += ", ";
    out += format_rational(alpha.entry(i));
  }
  return out;
}

}  // namespace

Json flow_to_json(const FlowVector& alpha) {
  Json entries = Json::array();
  for (const Rational& x : alpha.entries()) {
    entries.push_back(format_rational(x));
  }
  return Json{{"d", alpha.dimension()}, {"alpha", std::move(entries)}};
}

Json report_to_json(const BoundReport& report) {
  Json per_k = Json::array();
  for (const PerKBound& row : report.per_k) {
    per_k.push_back(Json{{"k", row.k},
                         {"m_k", row.m},
                         {"C_k", format_rational(row.slope)},
                         {"bound", format_rational(row.bound)},
                         {"witness", row.witness.rep.to_one_line()}});
  }
  Json out{{"flow", flow_to_json(report.flow)},
           {"total", format_rational(report.total)},
           {"borel", format_rational(report.borel)},
           {"whole_cusp", format_rational(report.whole_cusp)},
           {"per_k", std::move(per_k)}};
  if (report.phi_all) {
    out["phi_all"] = Json{{"m", report.phi_all->m},
                          {"z_first", format_rational(report.phi_all->z_first)},
                          {"z_last", format_rational(report.phi_all->z_last)}};
  }
  out["degenerate"] = report.degenerate;
  return out;
}

Json hull_to_json(const HullBoundary& boundary,
                  const CrossingResult& crossing) {
  Json vertices = Json::array();
  for (const HullVertex& v : boundary.vertices) {
    vertices.push_back(Json{{"step", v.step},
                            {"psi", format_rational(v.point.psi)},
                            {"h", format_rational(v.point.h)},
                            {"witness", v.witness.rep.to_one_line()}});
  }
  Json edges = Json::array();
  for (const HullEdge& e : boundary.edges) {
    edges.push_back(Json{{"step", e.step},
                         {"slope", format_rational(e.slope)},
                         {"width", format_rational(e.width)}});
  }
  Json cross{{"f", format_rational(crossing.f)},
             {"c_lo", format_rational(crossing.c_lo)},
             {"c_hi", format_rational(crossing.c_hi)},
             {"vertex", crossing.vertex_hit
                            ? Json(crossing.vertex_hit->rep.to_one_line())
                            : Json(nullptr)},
             {"degenerate", crossing.degenerate}};
  return Json{{"flow", flow_to_json(boundary.flow)},
              {"k", boundary.k},
              {"vertices", std::move(vertices)},
              {"edges", std::move(edges)},
              {"collapsed_steps", boundary.collapsed_steps},
              {"crossing", std::move(cross)}};
}

Json verification_to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const CheckResult& check : report.checks) {
    checks.push_back(Json{{"name", check.name},
                          {"expected", check.expected},
                          {"actual", check.actual},
                          {"pass", check.pass}});
  }
  return Json{{"flow", flow_to_json(report.flow)},
              {"degenerate", report.degenerate},
              {"all_pass", report.all_pass},
              {"checks", std::move(checks)}};
}

std::string report_to_csv(const BoundReport& report) {
  std::string out = "k,m_k,C_k,bound,witness\n";
  for (const PerKBound& row : report.per_k) {
    out += std::to_string(row.k) + ',' + std::to_string(row.m) + ',' +
           format_rational(row.slope) + ',' + format_rational(row.bound) +
           ",\"" + row.witness.rep.to_one_line() + "\"\n";
  }
  return out;
}

std::string hull_to_csv(const HullBoundary& boundary) {
  std::string out = "s,psi,h,slope,d_s\n";
  for (size_t i = 0; i < boundary.vertices.size(); ++i) {
    const HullVertex& v = boundary.vertices[i];
    out += std::to_string(v.step) + ',' + format_rational(v.point.psi) + ',' +
           format_rational(v.point.h) + ',';
    if (i < boundary.edges.size()) {
      out += format_rational(boundary.edges[i].slope) + ',' +
             format_rational(boundary.edges[i].width);
    } else {
      out += ',';
    }
    out += '\n';
  }
  return out;
}

std::string report_to_table(const BoundReport& report) {
  std::ostringstream out;
  out << "flow: " << join_flow(report.flow) << "  (d = "
      << report.flow.dimension() << ")\n";
  if (report.degenerate) out << "degenerate: zero flow\n";
  out << "total entropy     " << format_rational(report.total) << '\n';
  out << "borel bound       " << format_rational(report.borel) << '\n';
  out << "whole-cusp bound  " << format_rational(report.whole_cusp) << '\n';
  out << pad("k", 4) << pad("m_k", 5) << pad("C_k", 8) << pad("bound", 10)
      << "witness\n";
  for (const PerKBound& row : report.per_k) {
    out << pad(std::to_string(row.k), 4) << pad(std::to_string(row.m), 5)
        << pad(format_rational(row.slope), 8)
        << pad(format_rational(row.bound), 10)
        << row.witness.rep.to_one_line() << '\n';
  }
  if (report.phi_all) {
    out << "phi_all: m = " << report.phi_all->m << ", z_first = "
        << format_rational(report.phi_all->z_first) << ", z_last = "
        << format_rational(report.phi_all->z_last) << '\n';
  }
  return out.str();
}

std::string hull_to_table(const HullBoundary& boundary,
                          const CrossingResult& crossing) {
  std::ostringstream out;
  out << "flow: " << join_flow(boundary.flow) << "  (d = "
      << boundary.flow.dimension() << ", k = " << boundary.k << ")\n";
  out << pad("s", 4) << pad("psi", 10) << pad("h", 10) << pad("slope", 10)
      << pad("width", 10) << "witness\n";
  for (size_t i = 0; i < boundary.vertices.size(); ++i) {
    const HullVertex& v = boundary.vertices[i];
    out << pad(std::to_string(v.step), 4)
        << pad(format_rational(v.point.psi), 10)
        << pad(format_rational(v.point.h), 10);
    if (i < boundary.edges.size()) {
      out << pad(format_rational(boundary.edges[i].slope), 10)
          << pad(format_rational(boundary.edges[i].width), 10);
    } else {
      out << pad("-", 10) << pad("-", 10);
    }
    out << v.witness.rep.to_one_line() << '\n';
  }
  if (!boundary.collapsed_steps.empty()) {
    out << "collapsed steps:";
    for (int s : boundary.collapsed_steps) out << ' ' << s;
    out << '\n';
  }
  out << "crossing: f = " << format_rational(crossing.f) << ", c in ["
      << format_rational(crossing.c_lo) << ", "
      << format_rational(crossing.c_hi) << "]";
  if (crossing.vertex_hit) {
    out << " at vertex " << crossing.vertex_hit->rep.to_one_line();
  }
  if (crossing.degenerate) out << " (degenerate)";
  out << '\n';
  return out.str();
}

std::string verification_to_table(const VerificationReport& report) {
  std::ostringstream out;
  out << "flow: " << join_flow(report.flow) << "  (d = "
      << report.flow.dimension() << ")\n";
  size_t width = 0;
  for (const CheckResult& check : report.checks) {
    width = std::max(width, check.name.size());
  }
  for (const CheckResult& check : report.checks) {
    out << (check.pass ? "PASS  " : "FAIL  ") << pad(check.name, width + 2);
    if (check.pass) {
      out << check.expected << '\n';
    } else {
      out << "expected " << check.expected << ", got " << check.actual << '\n';
    }
  }
  out << "result: " << (report.all_pass ? "PASS" : "FAIL") << " ("
      << report.checks.size() << " checks)\n";
  return out.str();
}

std::string hull_to_svg(const HullBoundary& boundary,
                        const CrossingResult& crossing) {
  const int width = 640, height = 480, margin = 48;
  const Rational psi_min = boundary.vertices.front().point.psi;
  const Rational psi_max = boundary.vertices.back().point.psi;
  const Rational h_max = boundary.vertices.back().point.h;
  const Rational x_span = psi_max > psi_min ? Rational(psi_max - psi_min)
                                            : Rational(1);
  const Rational y_span = h_max > 0 ? h_max : Rational(1);
  auto x_pos = [&](const Rational& psi) {
    return Rational(Rational(margin) +
                    (psi - psi_min) / x_span * (width - 2 * margin));
  };
  auto y_pos = [&](const Rational& h) {
    return Rational(Rational(height - margin) -
                    h / y_span * (height - 2 * margin));
  };
  auto x_of = [&](const Rational& psi) { return decimal_string(x_pos(psi), 2); };
  auto y_of = [&](const Rational& h) { return decimal_string(y_pos(h), 2); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  out << "  <!-- k = " << boundary.k << ", psi in ["
      << format_rational(psi_min) << ", " << format_rational(psi_max)
      << "], h in [0, " << format_rational(h_max) << "] -->\n";
  // Axis psi = 0.
  out << "  <line x1=\"" << x_of(Rational(0)) << "\" y1=\"" << margin
      << "\" x2=\"" << x_of(Rational(0)) << "\" y2=\"" << height - margin
      << "\" stroke=\"#c0c0c0\" stroke-dasharray=\"6,4\"/>\n";
  // Base line h = 0.
  out << "  <line x1=\"" << margin << "\" y1=\"" << y_of(Rational(0))
      << "\" x2=\"" << width - margin << "\" y2=\"" << y_of(Rational(0))
      << "\" stroke=\"#c0c0c0\"/>\n";
  out << "  <polyline fill=\"none\" stroke=\"#202020\" stroke-width=\"2\" "
         "points=\"";
  for (size_t i = 0; i < boundary.vertices.size(); ++i) {
    if (i > 0) out << ' ';
    out << x_of(boundary.vertices[i].point.psi) << ','
        << y_of(boundary.vertices[i].point.h);
  }
  out << "\"/>\n";
  for (const HullVertex& v : boundary.vertices) {
    out << "  <circle cx=\"" << x_of(v.point.psi) << "\" cy=\""
        << y_of(v.point.h) << "\" r=\"4\" fill=\"#202020\"/>\n";
    out << "  <text x=\"" << x_of(v.point.psi) << "\" y=\""
        << decimal_string(y_pos(v.point.h) - 10, 2)
        << "\" font-size=\"11\" text-anchor=\"middle\">s=" << v.step
        << "</text>\n";
  }
  out << "  <circle cx=\"" << x_of(Rational(0)) << "\" cy=\""
      << y_of(crossing.f) << "\" r=\"5\" fill=\"none\" stroke=\"#c02020\" "
         "stroke-width=\"2\"/>\n";
  out << "  <text x=\"" << x_of(Rational(0)) << "\" y=\"" << margin - 8
      << "\" font-size=\"12\" text-anchor=\"middle\">f = "
      << format_rational(crossing.f) << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace cusp
