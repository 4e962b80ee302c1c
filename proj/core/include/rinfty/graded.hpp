#pragma once

// Graded linear algebra over Q: bases, shifts, Koszul signs, shuffles,
// canonical graded-symmetric words and sparse elements of S(g[s]).

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rinfty/rational.hpp"

namespace rinfty {

struct BasisVec {
  std::string id;
  int degree = 0;  // native degree in g

  bool operator==(const BasisVec&) const = default;
};

/// A finite homogeneous basis of g. Vectors are addressed by their *rank*:
/// the position in the canonical order (native degree, declared position).
/// Since every shift moves all degrees by the same amount, this order is the
/// canonical factor order of words under any shift.
class GradedBasis {
 public:
  explicit GradedBasis(std::vector<BasisVec> vectors);

  std::size_t dimension() const { return by_rank_.size(); }
  const BasisVec& at(int rank) const { return by_rank_.at(static_cast<std::size_t>(rank)); }
  int degree(int rank) const { return at(rank).degree; }
  std::optional<int> rank_of(std::string_view id) const;

  /// Vectors in the order they were declared.
  const std::vector<BasisVec>& declared() const { return declared_; }

  bool operator==(const GradedBasis& other) const { return declared_ == other.declared_; }

 private:
  std::vector<BasisVec> declared_;
  std::vector<BasisVec> by_rank_;
};

using BasisPtr = std::shared_ptr<const GradedBasis>;

BasisPtr make_basis(std::vector<BasisVec> vectors);

/// g[s]: a vector of native degree d has degree d - s.
struct Shift {
  int offset = 0;

  constexpr int shifted(int native_degree) const { return native_degree - offset; }
  constexpr bool operator==(const Shift&) const = default;

  static constexpr Shift inputs() { return Shift{1}; }    // g[1]
  static constexpr Shift outputs() { return Shift{-1}; }  // g[-1]
};

/// Canonical graded-symmetric monomial: ascending ranks. Odd factors never
/// repeat. The empty word is the unit 1 of S^0.
using Word = std::vector<int>;

constexpr bool odd(int d) { return (d & 1) != 0; }

int word_degree(const GradedBasis& basis, const Word& w, Shift shift);
int word_parity(const GradedBasis& basis, const Word& w, Shift shift);
std::string word_to_string(const GradedBasis& basis, const Word& w);

/// (-1)^{sum d_i d_j} over inverted pairs. perm[pos] is the index of the item
/// placed at position pos; degrees are given in pre-permutation order.
int koszul_sign(std::span<const int> perm, std::span<const int> degrees);

/// All (k,l)-shuffles as 0-based permutations: increasing on the first k and
/// on the last l slots. There are C(k+l, k) of them.
std::vector<std::vector<int>> shuffles(int k, int l);

struct SignedWord {
  Word word;
  int sign = 1;
};

/// Sorts ranks into canonical order, tracking the Koszul sign of the sorting
/// permutation on shifted degrees. nullopt when an odd factor repeats.
std::optional<SignedWord> normalize_ranks(const GradedBasis& basis, std::span<const int> ranks, Shift shift);

/// Same, for factors named by BasisVec. Throws InvalidInput if a factor does
/// not belong to the basis.
std::optional<SignedWord> normalize_word(const GradedBasis& basis, std::span<const BasisVec> factors, Shift shift);

/// All canonical words of the given weight.
std::vector<Word> words_of_weight(const GradedBasis& basis, int weight, Shift shift);

/// Sparse rational combination of canonical words sharing one shift.
class Elem {
 public:
  using Terms = std::map<Word, Rational>;

  Elem(BasisPtr basis, Shift shift) : basis_(std::move(basis)), shift_(shift) {}

  static Elem unit(BasisPtr basis, Shift shift);
  static Elem generator(BasisPtr basis, Shift shift, int rank);
  static Elem monomial(BasisPtr basis, Shift shift, const Word& w, const Rational& c = 1);

  const BasisPtr& basis() const { return basis_; }
  Shift shift() const { return shift_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c times the canonical word w.
  void add_term(const Word& w, const Rational& c);
  /// Adds c times the product of the listed factors, normalizing with sign.
  void add_factors(std::span<const int> ranks, const Rational& c);

  Elem& operator+=(const Elem& other);
  Elem& operator-=(const Elem& other);
  Elem& operator*=(const Rational& c);
  friend Elem operator+(Elem a, const Elem& b) { return a += b; }
  friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
  friend Elem operator*(const Rational& c, Elem a) { return a *= c; }
  Elem operator-() const;

  bool operator==(const Elem& other) const;

  /// Degree shared by all terms, if any; nullopt for non-homogeneous
  /// elements and for zero.
  std::optional<int> homogeneous_degree() const;
  int max_weight() const;

  /// Reinterprets every word under another shift with sign +1.
  Elem reshift(Shift shift) const;
  /// Drops words of weight above max_weight.
  Elem truncated(int max_weight) const;
  Elem weight_part(int weight) const;

  std::string to_string() const;

 private:
  BasisPtr basis_;
  Shift shift_;
  Terms terms_;
};

/// Multiplication in S(g[s]); graded commutative and associative.
Elem sym_product(const Elem& a, const Elem& b);

void require_same_space(const Elem& a, const Elem& b, const char* op);

}  // namespace rinfty
