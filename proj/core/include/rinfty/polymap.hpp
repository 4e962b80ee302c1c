#pragma once

// Sparse elements of B = prod_{m,n} Hom(S^m(g[1]), S^n(g[-1]))[2] and the
// big bracket on them.

#include <map>
#include <set>
#include <utility>

#include "rinfty/graded.hpp"
#include "rinfty/report.hpp"

namespace rinfty {

/// A multilinear map stored by its values on canonical input words (shift
/// +1), each value an Elem of shift -1. The component (m, n) is the part with
/// input weight m and output weight n.
///
/// `degree` is the degree in B. An entry w -> v is homogeneous when every
/// output word has degree deg(w) + degree + 2 (the [2] shift of Hom).
class PolyMap {
 public:
  using Table = std::map<Word, Elem>;

  PolyMap(BasisPtr basis, int degree) : basis_(std::move(basis)), degree_(degree) {}

  /// The m = 0 element whose only value is a (an element of S(g[-1]));
  /// its B-degree is deg(a) - 2.
  static PolyMap constant(const Elem& a);

  const BasisPtr& basis() const { return basis_; }
  int degree() const { return degree_; }
  const Table& table() const { return table_; }
  bool is_zero() const { return table_.empty(); }

  /// Accumulates value into the entry for a canonical input word. Throws
  /// InvalidInput on a non-canonical word, a wrong shift, or a degree that
  /// breaks homogeneity.
  void add(const Word& input, const Elem& value);
  /// Same, for an arbitrary factor list; normalizes with the Koszul sign.
  void add_factors(std::span<const int> input, const Elem& value);

  /// Value on an arbitrary ordering of input factors.
  Elem evaluate(std::span<const int> input) const;
  /// Linear extension to a shift +1 element.
  Elem apply(const Elem& x) const;

  std::set<std::pair<int, int>> support() const;
  int max_arity() const;
  bool in_b_plus() const;

  PolyMap& operator+=(const PolyMap& other);
  PolyMap& operator-=(const PolyMap& other);
  PolyMap& operator*=(const Rational& c);
  friend PolyMap operator+(PolyMap a, const PolyMap& b) { return a += b; }
  friend PolyMap operator-(PolyMap a, const PolyMap& b) { return a -= b; }
  friend PolyMap operator*(const Rational& c, PolyMap a) { return a *= c; }

  bool operator==(const PolyMap& other) const;

  PolyMap truncated_outputs(int max_weight) const;
  PolyMap component(int m, int n) const;

  std::string to_string() const;

 private:
  void check_entry(const Word& input, const Elem& value) const;

  BasisPtr basis_;
  int degree_;
  Table table_;
};

/// (f o g)(x_1..x_n) = sum over (k,l)-shuffles of
///   (-1)^eps f(x_s(1)..x_s(k) g(x_s(k+1)..x_s(n))_(1)) g(...)_(2)
/// with eps = koszul(sigma) + |g| (|x_s(1)| + ... + |x_s(k)|), where the
/// Sweedler split peels one cogenerator off the output word of g.
PolyMap circle(const PolyMap& f, const PolyMap& g);

/// [f, g] = f o g - (-1)^{|f||g|} g o f.
PolyMap big_bracket(const PolyMap& f, const PolyMap& g);

/// d gamma = [l, gamma].
PolyMap differential(const PolyMap& l, const PolyMap& gamma);

/// Maurer-Cartan check of a degree-1 element: lists every nonzero value of
/// [mu, mu] on input words of weight <= max_arity with output weight <=
/// max_weight, plus B+ membership (m, n >= 1). Throws InvalidInput when
/// mu.degree() != 1.
CheckReport is_mc(const PolyMap& mu, const TruncationPolicy& policy);

/// Adds one failure per (input word, output weight) where value is nonzero
/// within the caps (input weight <= A, output weight <= W). Returns the
/// number of nonzero values beyond the caps.
std::size_t report_nonzero(const PolyMap& value, const std::string& label, const TruncationPolicy& policy,
                           CheckReport& report);

/// Reports every entry whose output words do not have degree
/// deg(input) + expected_degree + 2.
void check_entry_degrees(const PolyMap& f, int expected_degree, const std::string& label, CheckReport& report);

}  // namespace rinfty
