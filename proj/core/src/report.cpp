#include "srk/report.hpp"

#include <nlohmann/json.hpp>

namespace srk {

namespace {

using ordered = nlohmann::ordered_json;

}  // namespace

std::string report_to_json(const HarnessResult& result) {
  ordered meta;
  meta["family"] = result.config.family;
  meta["count"] = result.config.count;
  meta["seed"] = result.config.seed;
  meta["radius"] = format_real(result.config.radius);
  meta["min_imag"] = format_real(result.config.min_imag);
  ordered tolerances;
  tolerances["equality"] = format_real(result.config.tolerances.equality);
  tolerances["strict_margin"] =
      format_real(result.config.tolerances.strict_margin);
  tolerances["violation"] = format_real(result.config.tolerances.violation);
  tolerances["scale"] = format_real(result.config.tolerances.scale);
  meta["tolerances"] = tolerances;

  ordered records = ordered::array();
  for (const SPRecord& r : result.records) {
    ordered entry;
    entry["name"] = r.name;
    entry["lhs"] = format_real(r.lhs);
    entry["rhs"] = format_real(r.rhs);
    entry["residual"] = format_real(r.residual);
    entry["q"] = to_string(r.q);
    entry["q0"] = to_string(r.q0);
    entry["classification"] = to_string(r.classification);
    records.push_back(std::move(entry));
  }

  ordered summary;
  summary["record_count"] = result.summary.record_count;
  summary["min_residual"] = format_real(result.summary.min_residual);
  summary["equality_count"] = result.summary.equality_count;
  summary["strict_count"] = result.summary.strict_count;
  summary["indeterminate_count"] = result.summary.indeterminate_count;
  summary["violation_count"] = result.summary.violation_count;

  ordered root;
  root["meta"] = std::move(meta);
  root["records"] = std::move(records);
  root["summary"] = std::move(summary);
  return root.dump(2);
}

std::string rigidity_to_json(const RigidityReport& report) {
  ordered j;
  j["fixed_point"] = report.fixed_point;
  j["differential_identity"] = report.differential_identity;
  j["cullen_one"] = report.cullen_one;
  j["spherical_applicable"] = report.spherical_applicable;
  if (report.spherical_applicable) {
    j["spherical_one"] = report.spherical_one;
  }
  j["quotient_identity"] = report.quotient_identity;
  j["identity"] = report.identity;
  return j.dump(2);
}

std::string zeros_to_json(const std::vector<ZeroSphere>& zeros) {
  ordered j = ordered::array();
  for (const ZeroSphere& z : zeros) {
    ordered entry;
    entry["x0"] = format_real(z.x0);
    entry["y0"] = format_real(z.y0);
    entry["multiplicity"] = z.multiplicity;
    entry["whole_sphere"] = z.whole_sphere;
    if (!z.whole_sphere) {
      entry["point"] = to_string(z.point);
    }
    entry["residual"] = format_real(z.residual);
    j.push_back(std::move(entry));
  }
  return j.dump(2);
}

std::string fixed_points_to_json(const FixedPointSet& fps) {
  ordered j;
  j["identity"] = fps.identity;
  ordered points = ordered::array();
  for (const Quaternion& p : fps.points) {
    points.push_back(to_string(p));
  }
  j["points"] = std::move(points);
  return j.dump(2);
}

}  // namespace srk
