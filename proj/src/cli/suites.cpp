#include <future>
#include <numbers>
#include <string>

#include "rwci/cli.hpp"
#include "rwci/errors.hpp"
#include "rwci/scalar_core.hpp"

namespace rwci::cli {

namespace {

using Task = std::function<oracle::Report()>;

void add_scalar(std::vector<Task>& tasks) {
  constexpr std::size_t kGrid = 100000;
  for (double rho : {0.2, 0.5, 0.8}) {
    const double sat = i_of_rho(Correlation(rho));
    for (double frac : {0.0, 0.25, 0.5, 1.0}) {
      tasks.emplace_back([=] { return oracle::verify_scalar_achievability(rho, frac * sat, kGrid); });
    }
  }
  tasks.emplace_back([] { return oracle::verify_scalar_achievability(0.5, 0.1, kGrid); });
  tasks.emplace_back([] { return oracle::verify_scalar_duality(20240601, 500); });
}

void add_waterfill(std::vector<Task>& tasks) {
  const std::vector<std::vector<double>> spectra = {
      {0.5}, {0.9, 0.2}, {0.8, 0.8}, {0.9, 0.5, 0.2}};
  for (const auto& s : spectra) {
    for (double gamma : {0.1, 0.5, 1.0, 2.0}) {
      tasks.emplace_back(
          [=] { return oracle::verify_waterfill_grid(CanonicalSpectrum(s), gamma, 1e-3); });
    }
  }
}

void add_lemma3(std::vector<Task>& tasks) {
  for (auto [rho, lambda] : {std::pair{0.5, 0.3}, std::pair{0.7, 0.7}, std::pair{0.9, 0.2}}) {
    tasks.emplace_back([=] { return oracle::verify_lemma3_grid(rho, lambda, 500); });
  }
}

void add_graywyner(std::vector<Task>& tasks) {
  struct Instance {
    double rho, delta, alpha;
  };
  // delta e^alpha = 0.75 (blend), 0.3 (saturated), 1.5 (clamped), then mixed.
  for (const auto& in : {Instance{0.5, 0.75, 0.0}, Instance{0.5, 0.3, 0.0},
                         Instance{0.5, 1.5, 0.0}, Instance{0.5, 0.1, 0.5},
                         Instance{0.8, 0.5, 0.3}, Instance{0.3, 0.2, 0.1},
                         Instance{0.95, 0.05, 1.0}}) {
    tasks.emplace_back([=] { return oracle::verify_graywyner_dual(in.rho, in.delta, in.alpha); });
  }
}

void add_discrete(std::vector<Task>& tasks) {
  for (double a0 : {0.1, 0.25, 0.4, 0.5}) {
    tasks.emplace_back([=] { return oracle::dsbs_construction_check(a0); });
  }
  for (double gamma : {0.0, 0.1, 0.3, std::numbers::ln2}) {
    tasks.emplace_back([=] { return oracle::erasure_construction_check(gamma); });
  }
}

}  // namespace

std::vector<Task> suite_tasks(std::string_view suite) {
  std::vector<Task> tasks;
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "scalar") add_scalar(tasks), known = true;
  if (all || suite == "waterfill") add_waterfill(tasks), known = true;
  if (all || suite == "lemma3") add_lemma3(tasks), known = true;
  if (all || suite == "graywyner") add_graywyner(tasks), known = true;
  if (all || suite == "discrete") add_discrete(tasks), known = true;
  if (!known) throw InputError("unknown suite \"" + std::string(suite) + "\"");
  return tasks;
}

std::vector<oracle::Report> run_suite(const std::vector<Task>& tasks) {
  std::vector<std::future<oracle::Report>> pending;
  pending.reserve(tasks.size());
  for (const auto& t : tasks) pending.push_back(std::async(std::launch::async, t));
  std::vector<oracle::Report> reports;
  reports.reserve(tasks.size());
  for (auto& f : pending) reports.push_back(f.get());
  return reports;
}

}  // namespace rwci::cli
