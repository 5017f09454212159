#include "srk_cli/dispatch.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "srk/errors.hpp"
#include "srk/mobius.hpp"
#include "srk/report.hpp"
#include "srk/schwarz_pick.hpp"
#include "srk/serialization.hpp"
#include "srk/slice_calculus.hpp"

namespace srk_cli {
namespace {

using namespace srk;
using ordered = nlohmann::ordered_json;

/// Inline literal, or the contents of a file when prefixed with '@'.
std::string load_arg(const std::string& text) {
  if (!text.empty() && text.front() == '@') {
    const std::string path = text.substr(1);
    std::ifstream in(path);
    if (!in) {
      throw srk::ParseError("cannot read file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  return text;
}

double tolerance_scale() {
  const char* raw = std::getenv("SRK_TOLERANCE_SCALE");
  if (raw == nullptr || *raw == '\0') {
    return 1.0;
  }
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(value > 0.0)) {
    throw srk::ParseError("SRK_TOLERANCE_SCALE must be a positive number");
  }
  return value;
}

bool is_plain_series(const RegularQuotient& Q) {
  return Q.denom().degree() == 0 &&
         norm(Q.denom().coeff(0) - Quaternion::one()) == 0.0;
}

void print_value(std::ostream& out, const std::string& format,
                 const Quaternion& v) {
  if (format == "json") {
    ordered j;
    j["value"] = to_string(v);
    out << j.dump(2) << "\n";
  } else {
    out << to_string(v) << "\n";
  }
}

void print_real(std::ostream& out, const std::string& format, double v) {
  if (format == "json") {
    ordered j;
    j["value"] = format_real(v);
    out << j.dump(2) << "\n";
  } else {
    out << format_real(v) << "\n";
  }
}

void print_summary_line(std::ostream& out, const HarnessSummary& s) {
  out << "records " << s.record_count << " min_residual "
      << format_real(s.min_residual) << " equality " << s.equality_count
      << " strict " << s.strict_count << " indeterminate "
      << s.indeterminate_count << " violations " << s.violation_count << "\n";
}

}  // namespace

int dispatch(std::vector<std::string> args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"algebra and verification of quaternionic slice regular maps",
               "srk"};
  app.require_subcommand(1);
  int status = 0;

  std::string format = "text";
  app.add_option("--format", format, "output form for single values")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  struct {
    std::string f, g, q, p, q0, u = "1", v, a, denom, numer, literal, matrix;
    std::string side = "left", route = "symm", kind, action = "right";
    std::string family = "mobius", out_path;
    int count = 100, order = 8, threads = 0, budget = 100;
    std::uint64_t seed = 1;
    double radius = 0.95, min_imag = 0.05;
  } o;

  const std::string series_help = "series literal (JSON array) or @file";
  const std::string function_help = "series or quotient literal, or @file";

  auto* c_eval = app.add_subcommand(
      "eval", "Evaluate a series or regular quotient at a point");
  c_eval->add_option("--f", o.f, function_help)->required();
  c_eval->add_option("--q", o.q, "evaluation point, form w+xi+yj+zk")
      ->required();
  c_eval->callback([&] {
    const RegularQuotient F = parse_function(load_arg(o.f));
    print_value(out, format, eval_quotient(F, parse_quaternion(o.q)));
  });

  auto* c_mul = app.add_subcommand("mul", "*-product of two series");
  c_mul->add_option("--f", o.f, series_help)->required();
  c_mul->add_option("--g", o.g, series_help)->required();
  c_mul->callback([&] {
    const StarSeries f = parse_series(load_arg(o.f));
    const StarSeries g = parse_series(load_arg(o.g));
    out << serialize_series(star_mul(f, g)) << "\n";
  });

  auto* c_conj = app.add_subcommand("conj", "Regular conjugate of a series");
  c_conj->add_option("--f", o.f, series_help)->required();
  c_conj->callback([&] {
    out << serialize_series(conjugate(parse_series(load_arg(o.f)))) << "\n";
  });

  auto* c_symm = app.add_subcommand("symm", "Symmetrization of a series");
  c_symm->add_option("--f", o.f, series_help)->required();
  c_symm->callback([&] {
    out << serialize_series(symmetrize(parse_series(load_arg(o.f)))) << "\n";
  });

  auto* c_recip = app.add_subcommand(
      "recip", "Regular reciprocal, emitted as a quotient literal");
  c_recip->add_option("--f", o.f, function_help)->required();
  c_recip->callback([&] {
    out << serialize_quotient(reciprocal(parse_function(load_arg(o.f))))
        << "\n";
  });

  auto* c_quot = app.add_subcommand(
      "quotient", "Build a regular quotient and optionally evaluate it");
  c_quot->add_option("--denom", o.denom, series_help);
  c_quot->add_option("--numer", o.numer, series_help);
  c_quot->add_option("--side", o.side, "which side carries the inverse")
      ->check(CLI::IsMember({"left", "right"}))
      ->capture_default_str();
  c_quot->add_option("--Q", o.literal, "quotient literal or @file");
  c_quot->add_option("--q", o.q, "evaluation point");
  c_quot
      ->add_option("--route", o.route,
                   "evaluation route; both compares the routes")
      ->check(CLI::IsMember({"symm", "transform", "both"}))
      ->capture_default_str();
  c_quot->callback([&] {
    if (o.literal.empty() && (o.denom.empty() || o.numer.empty())) {
      throw srk::ParseError(
          "quotient: provide --Q or both --denom and --numer");
    }
    const RegularQuotient Q =
        o.literal.empty()
            ? RegularQuotient(o.side == "left" ? QuotientSide::left
                                               : QuotientSide::right,
                              parse_series(load_arg(o.denom)),
                              parse_series(load_arg(o.numer)))
            : parse_quotient(load_arg(o.literal));
    if (o.q.empty()) {
      out << serialize_quotient(Q) << "\n";
      return;
    }
    const Quaternion q = parse_quaternion(o.q);
    if (o.route == "symm") {
      print_value(out, format, eval_quotient(Q, q));
    } else if (o.route == "transform") {
      print_value(out, format, eval_via_transform(Q, q));
    } else {
      const Quaternion a = eval_quotient(Q, q);
      const Quaternion b = eval_via_transform(Q, q);
      const double diff = norm(a - b);
      const double bound =
          1e-10 * tolerance_scale() * (1.0 + std::max(norm(a), norm(b)));
      ordered j;
      j["symm"] = to_string(a);
      j["transform"] = to_string(b);
      j["difference"] = format_real(diff);
      j["agree"] = diff <= bound;
      out << j.dump(2) << "\n";
      if (diff > bound) {
        status = 2;
      }
    }
  });

  auto* c_mob = app.add_subcommand("mobius", "Regular Moebius operations");
  c_mob->require_subcommand(1);

  auto* c_mob_eval =
      c_mob->add_subcommand("eval", "Evaluate the map with center q0, unit u");
  c_mob_eval->add_option("--q0", o.q0, "center, |q0| < 1")->required();
  c_mob_eval->add_option("--u", o.u, "unit factor")->capture_default_str();
  c_mob_eval->add_option("--q", o.q, "evaluation point")->required();
  c_mob_eval->callback([&] {
    const RegularMobius M =
        make_regular_mobius(parse_quaternion(o.q0), parse_quaternion(o.u));
    print_value(out, format, eval_regular_mobius(M, parse_quaternion(o.q)));
  });

  auto* c_mob_fix = c_mob->add_subcommand(
      "fix", "The map fixing q0 with unit parameter v, as {q0, u}");
  c_mob_fix->add_option("--q0", o.q0, "fixed point, |q0| < 1")->required();
  c_mob_fix->add_option("--v", o.v, "unit parameter; 1 gives the identity")
      ->required();
  c_mob_fix->callback([&] {
    const RegularMobius M =
        mobius_fixing(parse_quaternion(o.q0), parse_quaternion(o.v));
    ordered j;
    j["q0"] = to_string(M.q0);
    j["u"] = to_string(M.u);
    out << j.dump(2) << "\n";
  });

  auto* c_mob_fp = c_mob->add_subcommand(
      "fixed-points", "Fixed points in the ball of the map with center a");
  c_mob_fp->add_option("--a", o.a, "center, |a| < 1")->required();
  c_mob_fp->add_option("--u", o.u, "unit factor")->capture_default_str();
  c_mob_fp->callback([&] {
    const RegularMobius M =
        make_regular_mobius(parse_quaternion(o.a), parse_quaternion(o.u));
    out << fixed_points_to_json(fixed_points(M)) << "\n";
  });

  auto* c_mob_act = c_mob->add_subcommand(
      "act", "Apply a 2x2 matrix to a function as a fractional action");
  c_mob_act->add_option("--f", o.f, function_help)->required();
  c_mob_act->add_option("--matrix", o.matrix, "2x2 JSON matrix or @file")
      ->required();
  c_mob_act->add_option("--action", o.action, "which action to apply")
      ->check(CLI::IsMember({"right", "left"}))
      ->capture_default_str();
  c_mob_act->callback([&] {
    const RegularQuotient F = parse_function(load_arg(o.f));
    const QuatMatrix2 A = parse_matrix(load_arg(o.matrix));
    const RegularQuotient R =
        o.action == "right" ? right_action(F, A) : left_action(A, F);
    out << serialize_quotient(R) << "\n";
  });

  auto* c_derive = app.add_subcommand(
      "derive", "Slice derivative, spherical pair, or difference quotient");
  c_derive->add_option("--kind", o.kind, "cullen | spherical | R")
      ->required()
      ->check(CLI::IsMember({"cullen", "spherical", "R"}));
  c_derive->add_option("--f", o.f, function_help)->required();
  c_derive->add_option("--q0", o.q0,
                       "base point; required for spherical and R");
  c_derive->callback([&] {
    const RegularQuotient F = parse_function(load_arg(o.f));
    const bool plain = is_plain_series(F);
    ordered j;
    if (o.kind == "cullen") {
      if (plain) {
        const StarSeries d = cullen_derivative(F.numer());
        j["series"] = ordered::parse(serialize_series(d));
        if (!o.q0.empty()) {
          j["value"] = to_string(eval(d, parse_quaternion(o.q0)));
        }
      } else {
        const RegularQuotient d = cullen_derivative(F);
        j["quotient"] = ordered::parse(serialize_quotient(d));
        if (!o.q0.empty()) {
          j["value"] = to_string(eval_quotient(d, parse_quaternion(o.q0)));
        }
      }
    } else if (o.kind == "spherical") {
      if (o.q0.empty()) {
        throw srk::ParseError("derive --kind spherical requires --q0");
      }
      const Quaternion q0 = parse_quaternion(o.q0);
      const SphericalPair sp =
          plain ? spherical_pair(F.numer(), q0) : spherical_pair(F, q0);
      j["value"] = to_string(sp.value);
      j["derivative"] = to_string(sp.derivative);
      j["x0"] = format_real(sp.x0);
      j["y0"] = format_real(sp.y0);
    } else {
      if (o.q0.empty()) {
        throw srk::ParseError("derive --kind R requires --q0");
      }
      const Quaternion q0 = parse_quaternion(o.q0);
      if (plain) {
        j["series"] =
            ordered::parse(serialize_series(diff_quotient(F.numer(), q0)));
      } else {
        j["quotient"] =
            ordered::parse(serialize_quotient(diff_quotient(F, q0)));
      }
    }
    out << j.dump(2) << "\n";
  });

  auto* c_expand = app.add_subcommand(
      "expand", "Taylor or spherical expansion coefficients around q0");
  c_expand->add_option("--kind", o.kind, "taylor | spherical")
      ->required()
      ->check(CLI::IsMember({"taylor", "spherical"}));
  c_expand->add_option("--f", o.f, series_help)->required();
  c_expand->add_option("--q0", o.q0, "expansion center")->required();
  c_expand->add_option("--order", o.order, "truncation order")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  c_expand->callback([&] {
    const StarSeries f = parse_series(load_arg(o.f));
    const Quaternion q0 = parse_quaternion(o.q0);
    const std::vector<Quaternion> coeffs =
        o.kind == "taylor" ? taylor_coefficients(f, q0, o.order)
                           : spherical_expansion(f, q0, o.order).coeffs;
    ordered arr = ordered::array();
    for (const Quaternion& c : coeffs) {
      arr.push_back(to_string(c));
    }
    out << arr.dump(2) << "\n";
  });

  auto* c_sigma = app.add_subcommand(
      "sigma", "Distance adapted to slice regular functions");
  c_sigma->add_option("--q", o.q, "first point")->required();
  c_sigma->add_option("--p", o.p, "second point")->required();
  c_sigma->callback([&] {
    print_real(out, format,
               sigma_distance(parse_quaternion(o.q), parse_quaternion(o.p)));
  });

  auto* c_check = app.add_subcommand(
      "check-sp", "Run the Schwarz-Pick verification harness");
  c_check->add_option("--family", o.family, "self-map family to sample")
      ->check(CLI::IsMember({"mobius", "blaschke", "bounded", "mixed"}))
      ->capture_default_str();
  c_check->add_option("--count", o.count, "number of sampled maps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  c_check->add_option("--seed", o.seed, "stream seed, echoed in the report")
      ->capture_default_str();
  c_check->add_option("--radius", o.radius, "sampling radius for q and q0")
      ->capture_default_str();
  c_check->add_option("--min-imag", o.min_imag, "imaginary floor for q0")
      ->capture_default_str();
  c_check->add_option("--threads", o.threads, "worker count, 0 = hardware")
      ->capture_default_str();
  c_check->add_option("--out", o.out_path, "write the JSON report here");
  c_check->callback([&] {
    HarnessConfig cfg;
    cfg.family = o.family;
    cfg.count = o.count;
    cfg.seed = o.seed;
    cfg.radius = o.radius;
    cfg.min_imag = o.min_imag;
    cfg.threads = o.threads;
    cfg.tolerances.scale = tolerance_scale();
    const HarnessResult result = run_harness(cfg);
    const std::string json = report_to_json(result);
    if (o.out_path.empty()) {
      out << json << "\n";
    } else {
      std::ofstream file(o.out_path);
      if (!file) {
        throw srk::ParseError("cannot write " + o.out_path);
      }
      file << json << "\n";
      print_summary_line(out, result.summary);
    }
    if (result.summary.violation_count > 0) {
      status = 2;
    }
  });

  auto* c_falsify = app.add_subcommand(
      "falsify", "Search the mixed family for an inequality violation");
  c_falsify->add_option("--budget", o.budget, "number of sampled maps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  c_falsify->add_option("--seed", o.seed, "stream seed")
      ->capture_default_str();
  c_falsify->add_option("--radius", o.radius, "sampling radius")
      ->capture_default_str();
  c_falsify->callback([&] {
    HarnessConfig cfg;
    cfg.family = "mixed";
    cfg.count = o.budget;
    cfg.seed = o.seed;
    cfg.radius = o.radius;
    cfg.tolerances.scale = tolerance_scale();
    const HarnessResult result = run_harness(cfg);
    ordered j;
    j["budget"] = o.budget;
    j["seed"] = o.seed;
    j["record_count"] = result.summary.record_count;
    j["min_residual"] = format_real(result.summary.min_residual);
    j["violation_count"] = result.summary.violation_count;
    j["verdict"] = result.summary.violation_count == 0 ? "no violation found"
                                                       : "violation";
    out << j.dump(2) << "\n";
    if (result.summary.violation_count > 0) {
      status = 2;
    }
  });

  auto* c_rigid = app.add_subcommand(
      "rigidity", "Probe the identity characterizations at a fixed point");
  c_rigid->add_option("--q0", o.q0, "the fixed point")->required();
  c_rigid->add_option(
      "--v", o.v, "unit parameter; probes the Moebius map fixing q0");
  c_rigid->add_option(
      "--f", o.f, "bounded series with coefficient norm sum at most 1");
  c_rigid->callback([&] {
    if (o.v.empty() == o.f.empty()) {
      throw srk::ParseError(
          "rigidity: provide exactly one of --v and --f");
    }
    const Quaternion q0 = parse_quaternion(o.q0);
    const SelfMap f =
        o.f.empty()
            ? self_map_from_mobius(mobius_fixing(q0, parse_quaternion(o.v)))
            : self_map_from_series(parse_series(load_arg(o.f)));
    out << rigidity_to_json(check_rigidity(f, q0)) << "\n";
  });

  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (CLI::App* leaf : sub->get_subcommands({})) {
      leaf->fallthrough();
    }
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const srk::InconsistentConditions& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const srk::Error& e) {
    err << e.what() << "\n";
    return 1;
  }
  return status;
}

}  // namespace srk_cli
