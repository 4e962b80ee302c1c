#pragma once

// r-infinity matrices, the canonical L-infinity morphism
//   phi_n(x_1 ... x_n)(y) = L_{n+p}(x_1, ..., x_n, N(y)),  y in S^p(g[1]),
// and the transfer mu' = phi(e^r) producing a triangular L-infinity bialgebra.

#include <map>
#include <stdexcept>
#include <vector>

#include "rinfty/schouten.hpp"

namespace rinfty {

/// Truncated formal power series in lambda. Orders above cap are dropped.
template <class T>
class LambdaSeries {
 public:
  explicit LambdaSeries(int cap) : cap_(cap) {}

  int cap() const { return cap_; }
  const std::map<int, T>& coefficients() const { return coefficients_; }
  const T* at(int order) const {
    auto it = coefficients_.find(order);
    return it == coefficients_.end() ? nullptr : &it->second;
  }
  void set(int order, T value) {
    if (order <= cap_) coefficients_.insert_or_assign(order, std::move(value));
  }
  bool operator==(const LambdaSeries&) const = default;

 private:
  int cap_;
  std::map<int, T> coefficients_;
};

using RMatrix = LambdaSeries<Elem>;

/// One slot of N(y): a generator of g[1] viewed as a weight-1 element of
/// S^(g[-1])[2].
struct SlotWord {
  Rational coefficient;
  std::vector<Elem> slots;
};

/// N: S(g[1]) -> S(S^(g[-1])[2]), the algebra morphism induced by the
/// inclusion of generators; a weight-p word becomes p singleton slots.
std::vector<SlotWord> n_map(const Elem& y);

struct PhiValue {
  PolyMap map;
  bool certified = true;  // false when n + p exceeded the arity cap
  std::vector<std::string> diagnostics;
};

/// phi_n(x_1 ... x_n) as an element of B of degree sum |x_i| + 1 (degrees in
/// S^(g[-1])[2]). Outputs are truncated at weight W.
PhiValue canonical_phi(std::span<const Elem> xs, const SchoutenAlg& s, const TruncationPolicy& policy);

/// l_1(r) + 1/2! l_2(r r) + 1/3! l_3(r r r) + ... = 0 order by order in
/// lambda up to L, reported per order and output weight. Throws InvalidInput
/// for a lambda^0 term (curved input) or a coefficient that is not of degree
/// one in S^(g[-1])[1].
CheckReport check_generalized_mc(const RMatrix& r, const SchoutenAlg& s);

/// The compatibility conditions of an L-infinity morphism from S^(g[-1])[1]
/// to (B+, d = [l, -]) for phi, on all tuples of basis words within the caps:
///   d phi_n(x) + 1/2 sum_{k, sigma} (-1)^eps [phi_k(..), phi_{n-k}(..)]
///     + sum_{m, tau} (-1)^{|x_tau|} phi_{n-m+1}(l_m(..) x_tau(m+1) .. x_tau(n)) = 0
/// with eps = |x_sigma| + |x_s(1)| + ... + |x_s(k)|.
CheckReport check_linfty_morphism(const SchoutenAlg& s, const TruncationPolicy& policy);

struct BialgebraStructure {
  LambdaSeries<PolyMap> mu;  // order 0 is l, order p >= 1 is mu'_p
  RMatrix r;
  TruncationPolicy policy;
  bool classical_mode = false;
  CheckReport mc;           // [mu, mu] = 0
  CheckReport mc_deformed;  // d mu' + 1/2 [mu', mu'] = 0
  CheckReport degrees;      // every mu_mn entry has degree 1
};

class TransferRejected : public std::runtime_error {
 public:
  explicit TransferRejected(CheckReport report)
      : std::runtime_error("r does not satisfy the generalized Maurer-Cartan equation"), report_(std::move(report)) {}
  const CheckReport& report() const { return report_; }

 private:
  CheckReport report_;
};

/// mu' = phi(e^r) = phi_1(r) + 1/2! phi_2(r r) + ..., assembled order by
/// order, with mu = mu' + l verified. Throws TransferRejected when r fails
/// check_generalized_mc.
BialgebraStructure transfer(const RMatrix& r, const SchoutenAlg& s, const TruncationPolicy& policy);

/// [mu, mu] = 0 order by order for a lambda series of degree-1 maps.
CheckReport is_mc(const LambdaSeries<PolyMap>& mu, const TruncationPolicy& policy);

}  // namespace rinfty
