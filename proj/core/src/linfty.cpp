#include "rinfty/linfty.hpp"

#include <fmt/format.h>

#include "rinfty/errors.hpp"
#include "rinfty/schouten.hpp"

namespace rinfty {

LInftyAlg::LInftyAlg(PolyMap brackets) : brackets_(std::move(brackets)) {
  if (!brackets_.is_zero() && brackets_.degree() != 1)
    throw InvalidInput(fmt::format("L-infinity brackets must have degree 1, got {}", brackets_.degree()));
  for (auto [m, n] : brackets_.support()) {
    if (m < 1) throw InvalidInput("L-infinity brackets need at least one input");
    if (n != 1) throw InvalidInput(fmt::format("L-infinity bracket of arity {} has an output of weight {}", m, n));
  }
}

PolyMap LInftyAlg::bracket(int arity) const { return brackets_.component(arity, 1); }

bool LInftyAlg::is_classical() const {
  for (const auto& v : basis()->declared())
    if (v.degree != 0) return false;
  for (auto [m, n] : brackets_.support())
    if (m != 2) return false;
  return true;
}

const CheckReport& LInftyAlg::certify(const TruncationPolicy& policy) {
  certificate_ = check_higher_jacobi(*this, policy);
  return *certificate_;
}

CheckReport check_higher_jacobi(const LInftyAlg& alg, const TruncationPolicy& policy) {
  PolyMap l = alg.brackets();
  if (l.is_zero()) l = PolyMap(alg.basis(), 1);
  CheckReport report = is_mc(l, policy);
  report.check = "higher-jacobi";
  if (alg.max_arity() > policy.max_arity)
    report.notes.push_back(fmt::format("brackets up to arity {} exceed the arity cap {}", alg.max_arity(),
                                       policy.max_arity));
  return report;
}

PolyMap ce_differential(const LInftyAlg& alg, const Elem& c, const TruncationPolicy& policy) {
  if (!alg.is_classical())
    throw InvalidInput("ce_differential: needs a Lie algebra in degree 0 with only l_2");
  if (c.shift() != Shift::outputs()) throw InvalidInput("ce_differential: cochain must have shift -1");
  auto deg = c.homogeneous_degree();
  if (!deg && !c.is_zero()) throw InvalidInput("ce_differential: cochain is not homogeneous");

  const auto& basis = alg.basis();
  const PolyMap& l2 = alg.brackets();
  PolyMap out(basis, deg.value_or(1) - 1);
  const Elem truncated = c.truncated(policy.max_weight);
  for (int a = 0; a < static_cast<int>(basis->dimension()); ++a) {
    Elem value(basis, Shift::outputs());
    for (const auto& [w, coef] : truncated.terms()) {
      // ad_a acts on each factor in place; a has even degree in this case.
      // Weight p picks up (-1)^p so that the map agrees with phi_1.
      const Rational sc = w.size() % 2 == 0 ? coef : Rational(-coef);
      for (std::size_t i = 0; i < w.size(); ++i) {
        const int pair[2] = {a, w[i]};
        Elem ad = l2.evaluate(pair);
        for (const auto& [o, oc] : ad.terms()) {
          Word factors = w;
          factors[i] = o.front();
          value.add_factors(factors, sc * oc);
        }
      }
    }
    out.add(Word{a}, value);
  }
  return out;
}

CheckReport check_hamiltonian_morphism(const LInftyAlg& alg, const std::vector<std::pair<Elem, Elem>>& samples,
                                       const TruncationPolicy& policy) {
  CheckReport report;
  report.check = "hamiltonian-morphism";
  report.policy = policy;
  const SchoutenAlg s = schouten_extend(alg, policy);
  const PolyMap& l = alg.brackets();
  const auto& basis = *alg.basis();

  for (const auto& [x, y] : samples) {
    ++report.cases;
    const std::string label = fmt::format("x = {}, y = {}", x.to_string(), y.to_string());
    const PolyMap dx = ce_differential(alg, x, policy);
    const PolyMap dy = ce_differential(alg, y, policy);
    const PolyMap lhs = big_bracket(dx, dy);
    const PolyMap rhs = ce_differential(alg, s.schouten_bracket(x, y), policy);
    const PolyMap diff = (lhs - rhs).truncated_outputs(policy.max_weight);
    for (const auto& [in, v] : diff.table())
      report.fail("[d x, d y] - d [x,y]", label + ", a = " + word_to_string(basis, in), v.to_string());
    for (const auto* arg : {&dx, &dy}) {
      const PolyMap cocycle = differential(l, *arg).truncated_outputs(policy.max_weight);
      for (const auto& [in, v] : cocycle.table())
        report.fail("cocycle [l_2, d x]", label + ", input " + word_to_string(basis, in), v.to_string());
    }
  }
  return report;
}

}  // namespace rinfty
