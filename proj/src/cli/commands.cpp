#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "rwci/cli.hpp"
#include "rwci/errors.hpp"
#include "rwci/gray_wyner.hpp"
#include "rwci/scalar_core.hpp"

namespace rwci::cli {

namespace {

// Exit-code carrying failure for I/O problems.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool bits = false;
  double rho = 0.0;
  double gamma = 0.0;
  double gamma_max = 0.0;
  int steps = 0;
  double sigma2 = 1.0;
  double delta = 0.0;
  double alpha = 0.0;
  std::string input;
  std::string output;
  std::string suite = "all";
};

void require_finite(double v, const char* flag) {
  if (!std::isfinite(v)) throw InputError(std::string(flag) + " must be a finite number");
}

Json header(const char* command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["tool_version"] = std::string(tool_version());
  j["command"] = command;
  return j;
}

void put_value(Json& j, double nats, bool bits) {
  j["value_nats"] = encode_number(nats);
  if (bits) j["value_bits"] = encode_number(nats / std::numbers::ln2);
}

// Shortest round-trip representation; locale independent.
std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

Json cmd_scalar(const Options& o) {
  require_finite(o.rho, "--rho");
  require_finite(o.gamma, "--gamma");
  const Correlation rho(o.rho);
  const GammaBudget gamma(o.gamma);

  Json j = header("scalar");
  j["inputs"] = {{"rho", o.rho}, {"gamma", o.gamma}};
  put_value(j, wyner_ci_scalar(rho, gamma), o.bits);
  // The construction exists only below saturation and for |rho| < 1.
  if (rho.magnitude() < 1.0 && gamma.value() <= i_of_rho(rho)) {
    const auto p = achievability_params(rho, gamma);
    j["achievability"] = {{"alpha_noise", p.alpha_noise},
                          {"sigma2_w", p.sigma2_w},
                          {"rate_nats", p.rate_nats},
                          {"leakage_nats", p.leakage_nats}};
  } else {
    j["achievability"] = nullptr;
  }
  return j;
}

Json cmd_vector(const Options& o) {
  require_finite(o.gamma, "--gamma");
  const GammaBudget gamma(o.gamma);
  std::ifstream in(o.input);
  if (!in) throw IoError("cannot read covariance file " + o.input);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed covariance JSON: ") + e.what());
  }
  const auto cov = parse_covariance(doc);
  const auto result = wyner_ci_vector(cov, gamma);

  Json j = header("vector");
  j["inputs"] = {{"input", o.input},
                 {"gamma", o.gamma},
                 {"dim_x", cov.dim_x()},
                 {"dim_y", cov.dim_y()}};
  put_value(j, result.value, o.bits);
  j["spectrum"] = result.spectrum.values();
  j["allocation"] = encode_allocation(result.allocation);
  return j;
}

Json cmd_curve(const Options& o) {
  require_finite(o.rho, "--rho");
  require_finite(o.gamma_max, "--gamma-max");
  if (o.steps < 2) throw InputError("--steps must be at least 2");
  if (o.gamma_max < 0.0) throw InputError("--gamma-max must be nonnegative");
  const Correlation rho(o.rho);
  const double mi = i_of_rho(rho);
  const double scale = o.bits ? 1.0 / std::numbers::ln2 : 1.0;
  const char* unit = o.bits ? "bits" : "nats";

  std::ostringstream csv;
  csv << "gamma,c_gamma_" << unit << ",lower_bound_" << unit << '\n';
  for (int k = 0; k <= o.steps; ++k) {
    const double g = o.gamma_max * double(k) / double(o.steps);
    const double c = wyner_ci_scalar(rho, GammaBudget(g));
    const double lower = std::max(mi - g, 0.0);
    csv << format_number(g * scale) << ',' << format_number(c * scale) << ','
        << format_number(lower * scale) << '\n';
  }

  std::ofstream out(o.output, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + o.output + " for writing");
  out << csv.str();
  out.close();
  if (!out) throw IoError("failed writing " + o.output);

  Json j = header("curve");
  j["inputs"] = {{"rho", o.rho}, {"gamma_max", o.gamma_max}, {"steps", o.steps}};
  j["output"] = o.output;
  j["rows"] = o.steps + 1;
  j["units"] = unit;
  return j;
}

Json cmd_graywyner(const Options& o) {
  for (auto [v, flag] : {std::pair{o.rho, "--rho"}, std::pair{o.sigma2, "--sigma2"},
                         std::pair{o.delta, "--delta"}, std::pair{o.alpha, "--alpha"}}) {
    require_finite(v, flag);
  }
  const Correlation rho(o.rho);
  const auto point = common_rate(o.sigma2, rho, o.delta, o.alpha);

  Json j = header("graywyner");
  j["inputs"] = {{"rho", o.rho}, {"sigma2", o.sigma2}, {"delta", o.delta}, {"alpha", o.alpha}};
  put_value(j, point.r0, o.bits);
  j["regime"] = std::string(to_string(point.regime));
  if (point.regime == GrayWynerRegime::kBlend) {
    j["nu_star"] = nu_star(rho, o.delta / o.sigma2, o.alpha).value();
  } else {
    j["nu_star"] = nullptr;
  }
  return j;
}

Json cmd_verify(const Options& o, bool& all_passed) {
  const auto reports = run_suite(suite_tasks(o.suite));
  Json list = Json::array();
  all_passed = !reports.empty();
  for (const auto& r : reports) {
    all_passed = all_passed && r.passed();
    list.push_back(encode_report(r));
  }
  Json j = header("verify");
  j["suite"] = o.suite;
  j["passed"] = all_passed;
  j["reports"] = std::move(list);
  return j;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Relaxed Wyner common information for Gaussian sources", "rwci"};
  app.require_subcommand(1);
  app.add_flag("--bits", o.bits, "Also report information quantities in bits");
  app.set_version_flag("--version", std::string(tool_version()));

  auto* scalar = app.add_subcommand("scalar", "C_gamma for a correlated Gaussian pair");
  scalar->add_option("--rho", o.rho, "Correlation coefficient")->required();
  scalar->add_option("--gamma", o.gamma, "Leakage budget I(X;Y|W) in nats")->capture_default_str();

  auto* vector = app.add_subcommand("vector", "C_gamma for Gaussian vectors from a covariance file");
  vector->add_option("--input", o.input, "Covariance JSON file")->required();
  vector->add_option("--gamma", o.gamma, "Leakage budget in nats")->capture_default_str();

  auto* curve = app.add_subcommand("curve", "Write the gamma -> C_gamma curve as CSV");
  curve->add_option("--rho", o.rho, "Correlation coefficient")->required();
  curve->add_option("--gamma-max", o.gamma_max, "Largest gamma sampled")->required();
  curve->add_option("--steps", o.steps, "Number of intervals (rows = steps + 1)")->required();
  curve->add_option("--output", o.output, "CSV output path")->required();

  auto* gw = app.add_subcommand("graywyner", "Minimal Gray-Wyner common rate");
  gw->add_option("--rho", o.rho, "Correlation coefficient")->required();
  gw->add_option("--sigma2", o.sigma2, "Source variance")->capture_default_str();
  gw->add_option("--delta", o.delta, "Mean-squared-error distortion")->required();
  gw->add_option("--alpha", o.alpha, "Private rate sum cap in nats")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the oracle verification suites");
  verify->add_option("--suite", o.suite, "scalar|waterfill|lemma3|graywyner|discrete|all")
      ->capture_default_str();

  for (auto* sub : {scalar, vector, curve, gw, verify}) sub->fallthrough();

  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend());
    if (!args.empty()) args.pop_back();  // program name
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    Json result;
    int code = kExitOk;
    if (*scalar) {
      result = cmd_scalar(o);
    } else if (*vector) {
      result = cmd_vector(o);
    } else if (*curve) {
      result = cmd_curve(o);
    } else if (*gw) {
      result = cmd_graywyner(o);
    } else {
      bool passed = false;
      result = cmd_verify(o, passed);
      if (!passed) {
        code = kExitNumerical;
        err << "verification failed\n";
      }
    }
    out << result.dump(2) << '\n';
    return code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace rwci::cli
