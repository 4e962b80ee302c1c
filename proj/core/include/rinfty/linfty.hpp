#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rinfty/polymap.hpp"

namespace rinfty {

/// L-infinity algebra on g: higher brackets l_k : S^k(g[1]) -> g[1] of degree
/// one, stored as the (k, 1) components of a degree-1 element of B.
class LInftyAlg {
 public:
  /// Throws InvalidInput unless brackets has degree 1, inputs of weight >= 1
  /// and weight-1 outputs only.
  explicit LInftyAlg(PolyMap brackets);

  const BasisPtr& basis() const { return brackets_.basis(); }
  const PolyMap& brackets() const { return brackets_; }
  PolyMap bracket(int arity) const;
  int max_arity() const { return brackets_.max_arity(); }

  /// g concentrated in degree 0 with only l_2 nonzero: an ordinary Lie algebra.
  bool is_classical() const;

  /// Runs check_higher_jacobi and keeps the report.
  const CheckReport& certify(const TruncationPolicy& policy);
  const std::optional<CheckReport>& certificate() const { return certificate_; }
  bool certified() const { return certificate_ && certificate_->passed(); }

 private:
  PolyMap brackets_;
  std::optional<CheckReport> certificate_;
};

/// [l, l] = 0 within the caps, i.e. all higher Jacobi identities up to arity A.
CheckReport check_higher_jacobi(const LInftyAlg& alg, const TruncationPolicy& policy);

/// a |-> (-1)^p ad_a(c) for c of weight p: the Chevalley-Eilenberg
/// coboundary of the 0-cochain c with values in S(g[-1]), for a classical Lie
/// algebra, signed to agree with phi_1. c must be homogeneous with shift -1. Throws InvalidInput for a non-classical algebra.
PolyMap ce_differential(const LInftyAlg& alg, const Elem& c, const TruncationPolicy& policy);

/// For each pair (x, y): [d_CE x, d_CE y] = d_CE [x, y]_S with the Schouten
/// bracket, and the cocycle conditions [l_2, d_CE x] = 0 = [l_2, d_CE y].
CheckReport check_hamiltonian_morphism(const LInftyAlg& alg, const std::vector<std::pair<Elem, Elem>>& samples,
                                       const TruncationPolicy& policy);

}  // namespace rinfty
