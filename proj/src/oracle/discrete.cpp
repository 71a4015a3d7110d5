#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "rwci/errors.hpp"
#include "rwci/oracle.hpp"

namespace rwci::oracle {

namespace {

constexpr double kMassTolerance = 1e-12;
constexpr double kExactTolerance = 1e-12;

// Binary entropy in bits.
double binary_entropy_bits(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

std::string describe(const char* key, double value) {
  std::ostringstream os;
  os.precision(17);
  os << key << "=" << value;
  return os.str();
}

}  // namespace

DiscreteJoint::DiscreteJoint(std::array<std::size_t, 3> shape, std::vector<double> pmf)
    : shape_(shape), pmf_(std::move(pmf)) {
  if (pmf_.size() != shape_[0] * shape_[1] * shape_[2] || pmf_.empty()) {
    throw InputError("pmf size does not match its shape");
  }
  double mass = 0.0;
  for (double p : pmf_) {
    if (!(p >= 0.0) || !std::isfinite(p)) throw InputError("pmf entries must be finite and >= 0");
    mass += p;
  }
  if (std::abs(mass - 1.0) > kMassTolerance) {
    throw InputError("pmf is not normalized: total mass " + std::to_string(mass));
  }
}

double DiscreteJoint::operator()(std::size_t w, std::size_t x, std::size_t y) const {
  return pmf_[(w * shape_[1] + x) * shape_[2] + y];
}

double DiscreteJoint::entropy(VariableSet vars) const {
  if (vars == 0) return 0.0;
  const bool keep_w = vars & kW;
  const bool keep_x = vars & kX;
  const bool keep_y = vars & kY;
  const std::size_t nw = keep_w ? shape_[0] : 1;
  const std::size_t nx = keep_x ? shape_[1] : 1;
  const std::size_t ny = keep_y ? shape_[2] : 1;
  std::vector<double> marginal(nw * nx * ny, 0.0);
  for (std::size_t w = 0; w < shape_[0]; ++w) {
    for (std::size_t x = 0; x < shape_[1]; ++x) {
      for (std::size_t y = 0; y < shape_[2]; ++y) {
        const std::size_t idx =
            ((keep_w ? w : 0) * nx + (keep_x ? x : 0)) * ny + (keep_y ? y : 0);
        marginal[idx] += (*this)(w, x, y);
      }
    }
  }
  double h = 0.0;
  for (double p : marginal) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

double discrete_mutual_information(const DiscreteJoint& pmf, InformationQuery q) {
  if (q.a == 0 || q.b == 0) throw InputError("mutual information needs two nonempty groups");
  if ((q.a & q.b) || (q.a & q.given) || (q.b & q.given)) {
    throw InputError("variable groups must be disjoint");
  }
  return pmf.entropy(q.a | q.given) + pmf.entropy(q.b | q.given) -
         pmf.entropy(q.a | q.b | q.given) - pmf.entropy(q.given);
}

Report dsbs_construction_check(double a0) {
  if (!(a0 > 0.0 && a0 <= 0.5)) {
    throw InputError("DSBS disagreement probability must lie in (0, 1/2]");
  }
  Report r{"dsbs_construction", describe("a0", a0), {}, {}};

  // X = W xor N1, Y = W xor N2 with W uniform and N1, N2 iid Bernoulli(p),
  // so that Pr[X != Y] = 2p(1-p) = a0.
  const double p = 0.5 * (1.0 - std::sqrt(1.0 - 2.0 * a0));
  std::vector<double> table(8);
  for (std::size_t w = 0; w < 2; ++w) {
    for (std::size_t x = 0; x < 2; ++x) {
      for (std::size_t y = 0; y < 2; ++y) {
        const double px = (x != w) ? p : 1.0 - p;
        const double py = (y != w) ? p : 1.0 - p;
        table[(w * 2 + x) * 2 + y] = 0.5 * px * py;
      }
    }
  }
  const DiscreteJoint joint({2, 2, 2}, std::move(table));

  const double leakage = discrete_mutual_information(joint, {kX, kY, kW});
  const double rate_bits = discrete_mutual_information(joint, {kX | kY, kW, 0}) / std::numbers::ln2;
  const double wyner_bits = 1.0 + binary_entropy_bits(a0) - 2.0 * binary_entropy_bits(p);
  double disagreement = 0.0;
  for (std::size_t w = 0; w < 2; ++w) disagreement += joint(w, 0, 1) + joint(w, 1, 0);

  r.check("conditional_mi_nats", leakage, 0.0, kExactTolerance);
  r.check("common_rate_bits", rate_bits, wyner_bits, kExactTolerance);
  r.check("disagreement_probability", disagreement, a0, kExactTolerance);
  r.detail("crossover_p", p);
  return r;
}

Report erasure_construction_check(double gamma) {
  const double entropy_z = std::numbers::ln2;
  if (!(gamma >= 0.0 && gamma <= entropy_z)) {
    throw InputError("erasure check needs 0 <= gamma <= ln 2");
  }
  Report r{"erasure_construction", describe("gamma", gamma), {}, {}};

  // W = Z with probability 1-t, erased (symbol 2) with probability t.
  const double t = gamma / entropy_z;
  std::vector<double> table(3 * 2 * 2, 0.0);
  for (std::size_t z = 0; z < 2; ++z) {
    table[(z * 2 + z) * 2 + z] = 0.5 * (1.0 - t);
    table[(2 * 2 + z) * 2 + z] = 0.5 * t;
  }
  const DiscreteJoint joint({3, 2, 2}, std::move(table));

  r.check("conditional_mi_nats", discrete_mutual_information(joint, {kX, kY, kW}), gamma,
          kExactTolerance);
  r.check("common_rate_nats", discrete_mutual_information(joint, {kX | kY, kW, 0}),
          entropy_z - gamma, kExactTolerance);
  r.detail("erasure_probability", t);
  return r;
}

}  // namespace rwci::oracle
