#pragma once

// The L-infinity structure on the completed symmetric algebra S^(g[-1])[1]
// obtained by extending each l_k as a graded multiderivation of S(g[-1]).
// Completion is handled by truncating every result at symmetric weight W.

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "rinfty/linfty.hpp"

namespace rinfty {

class SchoutenAlg {
 public:
  SchoutenAlg(LInftyAlg base, TruncationPolicy policy);

  const LInftyAlg& base() const { return *base_; }
  const TruncationPolicy& policy() const { return policy_; }
  const BasisPtr& basis() const { return base_->basis(); }

  /// L_k(a_1, ..., a_k) for k = args.size(), multilinear in shift -1
  /// elements; outputs above weight W are dropped.
  ///
  /// On words: sum over one chosen factor c_i per argument w_i of
  ///   koszul(w_1 ... w_k -> c_1 ... c_k R_1 ... R_k) l_k(c_1 ... c_k) R_1 ... R_k
  /// where R_i is w_i with c_i removed. A constant argument gives 0.
  Elem bracket(std::span<const Elem> args) const;
  Elem bracket_words(std::span<const Word> args) const;

  /// Graded Lie bracket on S^(g[-1])[1] underlying L_2:
  ///   [x, y]_S = (-1)^{|x|+1} L_2(x, y), |x| the degree in S^(g[-1])[2].
  /// For a Lie algebra this is the classical Schouten bracket of multivectors.
  Elem schouten_bracket(const Elem& x, const Elem& y) const;

 private:
  Elem compute_words(std::span<const Word> args) const;

  struct Memo {
    std::mutex mutex;
    std::map<std::vector<Word>, Elem> values;
  };

  std::shared_ptr<const LInftyAlg> base_;
  TruncationPolicy policy_;
  std::shared_ptr<Memo> memo_;  // shared between copies; insertion is serialized
};

/// Throws InvalidInput when alg has not been certified.
SchoutenAlg schouten_extend(const LInftyAlg& alg, const TruncationPolicy& policy);

/// Higher Jacobi identities of {L_k}: for every tuple of canonical words of
/// total weight <= W and length <= A,
///   sum_i sum_{sigma in Sh(i, n-i)} koszul(sigma) L_{n-i+1}(L_i(a_s(1..i)), a_s(i+1..n)) = 0.
CheckReport check_schouten_linfty(const SchoutenAlg& s);

/// Degree of a homogeneous shift -1 element in S^(g[-1])[2]; this is also its
/// degree as an m = 0 element of B.
std::optional<int> suspended_degree(const Elem& a);

/// Non-decreasing tuples (as index lists into `words`) of length n with total
/// weight at most max_weight.
std::vector<std::vector<int>> word_tuples(const std::vector<Word>& words, int n, int max_weight);

/// Canonical shift -1 words of weight 1..max_weight.
std::vector<Word> positive_words(const GradedBasis& basis, int max_weight);

}  // namespace rinfty
