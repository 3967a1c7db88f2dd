// Copyright 2026 The xsep authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xsep/closedform.hpp"
#include "xsep/montecarlo.hpp"
#include "xsep/quadrature.hpp"
#include "xsep/records.hpp"
#include "xsep/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace cf = xsep::closedform;
namespace cli = xsep::cli;

namespace {

constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

// Exact paths engage only when the parsed decimal is exactly a half-integer
// (psep) or integer (induced measure paths).
std::optional<xsep::HalfInt> as_half_integer(double alpha) {
  double t = 2 * alpha;
  if (t >= 1 && t <= 1e6 && t == std::floor(t)) return xsep::HalfInt::halves(static_cast<int>(t));
  return std::nullopt;
}

std::optional<int> as_nonneg_integer(double v) {
  if (v >= 0 && v <= 1e6 && v == std::floor(v)) return static_cast<int>(v);
  return std::nullopt;
}

cli::OutputRecord closed_record(const std::string& statistic, double alpha, double k,
                                std::optional<std::string> exact, double value) {
  cli::OutputRecord r;
  r.statistic = statistic;
  r.alpha = alpha;
  r.k = k;
  r.exact = std::move(exact);
  r.float_value = value;
  r.method = "closed";
  return r;
}

cli::OutputRecord sep_record(double alpha) {
  std::optional<std::string> exact;
  double value;
  if (auto h = as_half_integer(alpha)) {
    xsep::ExactReal p = cf::sep_prob_exact(*h);
    exact = p.str();
    value = p.to_double();
  } else {
    value = cf::sep_prob(alpha);
  }
  return closed_record("sep", alpha, 0, exact, value);
}

void emit(const std::vector<cli::OutputRecord>& records, cli::Format format) {
  std::cout << cli::render(records, format);
}

int run(int argc, char** argv) {
  CLI::App app{"separability probabilities of X-shaped two-qubit states"};
  app.require_subcommand(1);

  std::string format_name = "text";
  std::uint64_t seed = 12345;
  std::int64_t samples = 1000000;
  double tol = 1e-10;
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--seed", seed, "random seed for estimators");
  app.add_option("--samples", samples, "sample count for estimators");
  app.add_option("--tol", tol, "relative tolerance for quadrature");

  double alpha = 1.0, k = 0.0;

  auto* psep = app.add_subcommand("psep", "separability probability p(alpha)");
  psep->fallthrough();
  psep->add_option("--alpha", alpha, "measure parameter")->required();

  auto* induced = app.add_subcommand("induced", "probabilities under the (det xi)^k measure");
  induced->fallthrough();
  induced->add_option("--alpha", alpha)->required();
  induced->add_option("--k", k, "determinant power");

  auto* rel = app.add_subcommand("rel", "Pr{det xi^PT >= det xi} and complement");
  rel->fallthrough();
  rel->add_option("--alpha", alpha)->required();
  rel->add_option("--k", k, "determinant power");

  auto* integral = app.add_subcommand("integral", "closed form of the I family");
  integral->fallthrough();
  int im = -1, in = -1;
  double two_alpha = 0;
  integral->add_option("--m", im, "order m");
  integral->add_option("--n", in, "order n");
  integral->add_option("--two-alpha", two_alpha, "real order 2*alpha (n = 0)");

  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimates");
  mc_cmd->fallthrough();
  std::string stat = "sep";
  int power = 1;
  mc_cmd->add_option("--alpha", alpha)->required();
  mc_cmd->add_option("--k", k);
  mc_cmd->add_option("--stat", stat, "statistic")
      ->check(CLI::IsMember({"sep", "rel", "mindeg", "moment"}));
  mc_cmd->add_option("--power", power, "moment power");

  auto* quad_cmd = app.add_subcommand("quad", "quadrature oracle for the I family");
  quad_cmd->fallthrough();
  std::string scheme = "transformed";
  bool normalization = false;
  int qm = -1, qn = -1;
  double qa = 0;
  quad_cmd->add_option("--m", qm);
  quad_cmd->add_option("--n", qn);
  quad_cmd->add_option("--two-alpha", qa);
  quad_cmd->add_option("--scheme", scheme)->check(CLI::IsMember({"transformed", "direct"}));
  quad_cmd->add_flag("--normalization", normalization, "integrate the measure normalization");
  quad_cmd->add_option("--alpha", alpha, "alpha for --normalization");

  auto* table = app.add_subcommand("table", "tabulate probabilities over alpha and k lists");
  table->fallthrough();
  std::vector<double> alphas, ks;
  table->add_option("--alphas", alphas, "comma-separated alpha values")->delimiter(',');
  table->add_option("--ks", ks, "comma-separated k values")->delimiter(',');

  auto* verify_cmd = app.add_subcommand("verify", "run a cross-check suite");
  verify_cmd->fallthrough();
  std::string suite;
  verify_cmd->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"closed-vs-quad", "closed-vs-mc", "sampler", "identities",
                             "extremes"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help or the parse diagnostic
    return code == 0 ? 0 : kExitUsage;
  }
  cli::Format format = cli::parse_format(format_name);

  if (psep->parsed()) {
    if (!(alpha > 0)) throw CLI::ValidationError("psep", "--alpha must be positive");
    emit({sep_record(alpha)}, format);
    return 0;
  }

  if (induced->parsed() || rel->parsed()) {
    auto ia = as_nonneg_integer(alpha);
    auto ik = as_nonneg_integer(k);
    if (!ia || *ia < 1 || !ik) {
      std::cerr << "unsupported: this closed form requires integer alpha >= 1 and integer k >= 0"
                << std::endl;
      return kExitUsage;
    }
    std::vector<cli::OutputRecord> records;
    if (induced->parsed()) {
      xsep::Rational nonsep = cf::nonsep_prob_induced(*ia, *ik);
      xsep::Rational sep = xsep::Rational(1) - nonsep;
      records.push_back(closed_record("sep", alpha, k, sep.str(), sep.to_double()));
      records.push_back(closed_record("nonsep", alpha, k, nonsep.str(), nonsep.to_double()));
    } else {
      xsep::Rational below = cf::rel_nonsep_prob(*ia, *ik);
      xsep::Rational above = xsep::Rational(1) - below;
      records.push_back(closed_record("rel", alpha, k, above.str(), above.to_double()));
      records.push_back(closed_record("rel_nonsep", alpha, k, below.str(), below.to_double()));
    }
    emit(records, format);
    return 0;
  }

  if (integral->parsed()) {
    cf::IntegralSpec spec;
    std::string name;
    if (im >= 0 && in >= 0) {
      spec = cf::IntegralSpec::mn(static_cast<unsigned>(im), static_cast<unsigned>(in));
      name = "I(" + std::to_string(im) + "," + std::to_string(in) + ")";
    } else if (two_alpha > 0) {
      spec = cf::IntegralSpec::two_alpha(two_alpha / 2);
      name = "I(" + cli::fmt17(two_alpha) + ",0)";
    } else {
      throw CLI::ValidationError("integral", "give --m and --n, or --two-alpha");
    }
    std::optional<std::string> exact;
    if (spec.kind == cf::IntegralSpec::Kind::int_mn ||
        (two_alpha >= 1 && two_alpha == std::floor(two_alpha)))
      exact = cf::integral_I(spec).str();
    emit({closed_record(name, spec.kind == cf::IntegralSpec::Kind::int_mn ? 0 : spec.alpha, 0,
                        exact, cf::integral_I_f(spec))},
         format);
    return 0;
  }

  if (mc_cmd->parsed()) {
    xsep::mc::SamplerSpec s;
    s.alpha = alpha;
    s.k = k;
    s.seed = seed;
    s.n_samples = samples;
    xsep::mc::Estimate est;
    if (stat == "sep") est = xsep::mc::estimate_sep_prob(s);
    else if (stat == "rel") est = xsep::mc::estimate_rel_prob(s);
    else if (stat == "mindeg") est = xsep::mc::estimate_min_degenerate(s);
    else est = xsep::mc::estimate_det_moment(s, power);
    cli::OutputRecord r;
    r.statistic = est.statistic;
    r.alpha = alpha;
    r.k = k;
    r.float_value = est.mean;
    r.method = "mc";
    r.error = est.std_error;
    r.seed = est.seed;
    emit({r}, format);
    return 0;
  }

  if (quad_cmd->parsed()) {
    xsep::quad::QuadConfig cfg;
    cfg.rel_tol = tol;
    xsep::quad::QuadResult result;
    std::string name;
    if (normalization) {
      result = xsep::quad::quad_normalization(alpha, cfg);
      name = "1/c_alpha";
    } else {
      cf::IntegralSpec spec;
      if (qm >= 0 && qn >= 0) {
        spec = cf::IntegralSpec::mn(static_cast<unsigned>(qm), static_cast<unsigned>(qn));
        name = "I(" + std::to_string(qm) + "," + std::to_string(qn) + ")";
      } else if (qa > 0) {
        spec = cf::IntegralSpec::two_alpha(qa / 2);
        name = "I(" + cli::fmt17(qa) + ",0)";
      } else {
        throw CLI::ValidationError("quad", "give --m and --n, --two-alpha, or --normalization");
      }
      result = scheme == "direct" ? xsep::quad::quad_I_direct(spec, cfg)
                                  : xsep::quad::quad_I_transformed(spec, cfg);
    }
    cli::OutputRecord r;
    r.statistic = name;
    r.alpha = normalization ? alpha : (qa > 0 ? qa / 2 : 0);
    r.k = 0;
    r.float_value = result.value;
    r.method = "quad";
    r.error = result.est_error;
    emit({r}, format);
    return 0;
  }

  if (table->parsed()) {
    std::vector<cli::OutputRecord> records;
    for (double a : alphas) {
      for (double kk : ks) {
        auto ia = as_nonneg_integer(a);
        auto ik = as_nonneg_integer(kk);
        if (kk == 0) {
          cli::OutputRecord r = sep_record(a);
          records.push_back(r);
          if (ia && *ia >= 1) {
            xsep::Rational nonsep = cf::nonsep_prob_induced(*ia, 0);
            records.push_back(closed_record("nonsep", a, 0, nonsep.str(), nonsep.to_double()));
          }
        } else if (ia && *ia >= 1 && ik) {
          xsep::Rational nonsep = cf::nonsep_prob_induced(*ia, *ik);
          xsep::Rational sep = xsep::Rational(1) - nonsep;
          records.push_back(closed_record("sep", a, kk, sep.str(), sep.to_double()));
          records.push_back(closed_record("nonsep", a, kk, nonsep.str(), nonsep.to_double()));
        }
        // other combinations have no closed form and are omitted
      }
    }
    emit(records, app.count("--format") > 0 ? format : cli::Format::csv);
    return 0;
  }

  if (verify_cmd->parsed()) {
    xsep::verify::Options opt;
    opt.mc_samples = samples;
    opt.seed = seed;
    auto checks = xsep::verify::run_suite(suite, opt);
    std::cout << xsep::verify::format_report(checks);
    return xsep::verify::all_passed(checks) ? 0 : kExitCheckFailure;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << std::endl;
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitCheckFailure;
  }
}
