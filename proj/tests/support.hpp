#pragma once

#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rinfty/algebra_file.hpp"
#include "rinfty/transfer.hpp"

namespace rinfty {

inline void PrintTo(const Elem& e, std::ostream* os) { *os << e.to_string(); }
inline void PrintTo(const PolyMap& f, std::ostream* os) { *os << f.to_string(); }

}  // namespace rinfty

namespace rinfty::test {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(RINFTY_FIXTURE_DIR) / (name + ".yaml");
}

inline AlgebraSpec load(const std::string& name) { return parse_algebra(fixture(name)); }

/// c * (product of the named generators), normalized.
inline Elem word(const BasisPtr& b, Shift s, const std::vector<std::string>& ids, const Rational& c = 1) {
  std::vector<int> r;
  for (const auto& id : ids) r.push_back(*b->rank_of(id));
  Elem e(b, s);
  e.add_factors(r, c);
  return e;
}

inline Elem out(const BasisPtr& b, const std::vector<std::string>& ids, const Rational& c = 1) {
  return word(b, Shift::outputs(), ids, c);
}

inline Elem in(const BasisPtr& b, const std::vector<std::string>& ids, const Rational& c = 1) {
  return word(b, Shift::inputs(), ids, c);
}

/// l(ins) += c * target
inline void set_bracket(PolyMap& l, const std::vector<std::string>& ins, const std::string& target, const Rational& c = 1) {
  const auto& b = l.basis();
  std::vector<int> r;
  for (const auto& id : ins) r.push_back(*b->rank_of(id));
  l.add_factors(r, out(b, {target}, c));
}

/// A certified Lie algebra in degree 0 from dense structure constants
/// c[i][j][k] = coefficient of e_k in [e_i, e_j].
using Structure = std::vector<std::vector<std::vector<int>>>;

inline LInftyAlg lie_from_constants(const Structure& c) {
  const int n = static_cast<int>(c.size());
  std::vector<BasisVec> vecs;
  for (int i = 0; i < n; ++i) vecs.push_back({"e" + std::to_string(i), 0});
  auto b = make_basis(vecs);
  PolyMap l(b, 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Elem v(b, Shift::outputs());
      for (int k = 0; k < n; ++k)
        if (c[i][j][k]) v.add_term(Word{k}, c[i][j][k]);
      if (!v.is_zero()) l.add(Word{i, j}, v);
    }
  return LInftyAlg(l);
}

/// Dense constants read off the stored l_2 table of a degree-0 algebra.
inline Structure constants_of(const LInftyAlg& alg) {
  const int n = static_cast<int>(alg.basis()->dimension());
  Structure c(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
  for (const auto& [w, v] : alg.brackets().table()) {
    if (w.size() != 2) continue;
    for (const auto& [o, coef] : v.terms()) {
      const int k = o.front();
      c[w[0]][w[1]][k] = static_cast<int>(coef.get_num().get_si());
      c[w[1]][w[0]][k] = -c[w[0]][w[1]][k];
    }
  }
  return c;
}

inline Structure random_structure(std::mt19937& rng, int n, int range = 1) {
  std::uniform_int_distribution<int> coef(-range, range);
  Structure c(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        c[i][j][k] = rng() % 3 == 0 ? coef(rng) : 0;
        c[j][i][k] = -c[i][j][k];
      }
  return c;
}

/// Random element of S(g[-1]) with the given weight, coefficients in
/// [-2, 2].
inline Elem random_elem(std::mt19937& rng, const BasisPtr& b, int weight) {
  Elem e(b, Shift::outputs());
  for (const auto& w : words_of_weight(*b, weight, Shift::outputs()))
    if (rng() % 2) e.add_term(w, static_cast<int>(rng() % 5) - 2);
  return e;
}

/// Random sparse homogeneous map of B-degree deg with input and output
/// weights in [min_in, max_in] and [min_out, max_out].
inline PolyMap random_map(std::mt19937& rng, const BasisPtr& b, int deg, int min_in, int max_in, int min_out,
                          int max_out, int density = 3) {
  PolyMap f(b, deg);
  std::vector<Word> outs;
  for (int w = min_out; w <= max_out; ++w)
    for (auto& o : words_of_weight(*b, w, Shift::outputs())) outs.push_back(o);
  for (int m = min_in; m <= max_in; ++m) {
    for (const auto& w : words_of_weight(*b, m, Shift::inputs())) {
      if (rng() % density != 0) continue;
      const int target = word_degree(*b, w, Shift::inputs()) + deg + 2;
      Elem v(b, Shift::outputs());
      for (const auto& o : outs)
        if (word_degree(*b, o, Shift::outputs()) == target && rng() % 2) v.add_term(o, static_cast<int>(rng() % 5) - 2);
      if (!v.is_zero()) f.add(w, v);
    }
  }
  return f;
}

inline oracle::Multivector to_multivector(const Elem& e) {
  oracle::Multivector m;
  for (const auto& [w, c] : e.terms()) m[w] = c;
  return m;
}

/// Every canonical word of the tensor's weight agrees with e, and e has no
/// higher-weight part.
inline ::testing::AssertionResult matches(const Elem& e, const oracle::Tensor& t, const Rational& scale = 1) {
  for (const auto& w : words_of_weight(*e.basis(), t.p, Shift::outputs())) {
    auto it = e.terms().find(w);
    const Rational got = it == e.terms().end() ? Rational(0) : it->second;
    const Rational want = scale * oracle::wedge_coefficient(t, w);
    if (got != want)
      return ::testing::AssertionFailure() << "word " << word_to_string(*e.basis(), w) << ": got " << to_string(got)
                                           << ", oracle " << to_string(want);
  }
  if (e.max_weight() > t.p && !e.weight_part(e.max_weight()).is_zero())
    return ::testing::AssertionFailure() << "unexpected weight " << e.max_weight();
  return ::testing::AssertionSuccess();
}

}  // namespace rinfty::test
