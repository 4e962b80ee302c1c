#include "rinfty/graded.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <fmt/format.h>

#include "rinfty/errors.hpp"

namespace rinfty {

GradedBasis::GradedBasis(std::vector<BasisVec> vectors) : declared_(std::move(vectors)) {
  std::set<std::string> seen;
  for (const auto& v : declared_) {
    if (v.id.empty()) throw InvalidInput("empty basis id");
    if (!seen.insert(v.id).second) throw InvalidInput("duplicate basis id '" + v.id + "'");
  }
  by_rank_ = declared_;
  std::stable_sort(by_rank_.begin(), by_rank_.end(),
                   [](const BasisVec& a, const BasisVec& b) { return a.degree < b.degree; });
}

std::optional<int> GradedBasis::rank_of(std::string_view id) const {
  for (std::size_t r = 0; r < by_rank_.size(); ++r)
    if (by_rank_[r].id == id) return static_cast<int>(r);
  return std::nullopt;
}

BasisPtr make_basis(std::vector<BasisVec> vectors) {
  return std::make_shared<const GradedBasis>(std::move(vectors));
}

int word_degree(const GradedBasis& basis, const Word& w, Shift shift) {
  int d = 0;
  for (int r : w) d += shift.shifted(basis.degree(r));
  return d;
}

int word_parity(const GradedBasis& basis, const Word& w, Shift shift) {
  return odd(word_degree(basis, w, shift)) ? 1 : 0;
}

std::string word_to_string(const GradedBasis& basis, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += basis.at(w[i]).id;
  }
  return out;
}

int koszul_sign(std::span<const int> perm, std::span<const int> degrees) {
  const std::size_t n = perm.size();
  if (degrees.size() != n)
    throw InvalidInput(fmt::format("koszul_sign: {} positions but {} degrees", n, degrees.size()));
  std::vector<bool> hit(n, false);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || hit[static_cast<std::size_t>(p)])
      throw InvalidInput("koszul_sign: not a permutation");
    hit[static_cast<std::size_t>(p)] = true;
  }
  int parity = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (perm[a] > perm[b] && odd(degrees[static_cast<std::size_t>(perm[a])]) &&
          odd(degrees[static_cast<std::size_t>(perm[b])]))
        parity ^= 1;
  return parity ? -1 : 1;
}

std::vector<std::vector<int>> shuffles(int k, int l) {
  if (k < 0 || l < 0) throw InvalidInput("shuffles: negative block size");
  const int n = k + l;
  std::vector<std::vector<int>> out;
  std::vector<bool> first(static_cast<std::size_t>(n), false);
  std::fill(first.begin(), first.begin() + k, true);
  // prev_permutation over a sorted-descending mask enumerates subsets in
  // lexicographic order of the chosen positions.
  do {
    std::vector<int> sigma;
    sigma.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      if (first[static_cast<std::size_t>(i)]) sigma.push_back(i);
    for (int i = 0; i < n; ++i)
      if (!first[static_cast<std::size_t>(i)]) sigma.push_back(i);
    out.push_back(std::move(sigma));
  } while (std::prev_permutation(first.begin(), first.end()));
  return out;
}

std::optional<SignedWord> normalize_ranks(const GradedBasis& basis, std::span<const int> ranks, Shift shift) {
  SignedWord out{Word(ranks.begin(), ranks.end()), 1};
  auto& w = out.word;
  // insertion sort; each adjacent swap of two odd factors flips the sign
  for (std::size_t i = 1; i < w.size(); ++i) {
    for (std::size_t j = i; j > 0 && w[j - 1] > w[j]; --j) {
      if (odd(shift.shifted(basis.degree(w[j]))) && odd(shift.shifted(basis.degree(w[j - 1])))) out.sign = -out.sign;
      std::swap(w[j - 1], w[j]);
    }
  }
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1] && odd(shift.shifted(basis.degree(w[i])))) return std::nullopt;
  return out;
}

std::optional<SignedWord> normalize_word(const GradedBasis& basis, std::span<const BasisVec> factors, Shift shift) {
  std::vector<int> ranks;
  ranks.reserve(factors.size());
  for (const auto& f : factors) {
    auto r = basis.rank_of(f.id);
    if (!r || basis.at(*r).degree != f.degree)
      throw InvalidInput("factor '" + f.id + "' does not belong to the basis");
    ranks.push_back(*r);
  }
  return normalize_ranks(basis, ranks, shift);
}

std::vector<Word> words_of_weight(const GradedBasis& basis, int weight, Shift shift) {
  std::vector<Word> out;
  const int dim = static_cast<int>(basis.dimension());
  Word cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == weight) {
      out.push_back(cur);
      return;
    }
    for (int r = start; r < dim; ++r) {
      const bool is_odd = odd(shift.shifted(basis.degree(r)));
      cur.push_back(r);
      self(self, is_odd ? r + 1 : r);
      cur.pop_back();
    }
  };
  if (weight >= 0) rec(rec, 0);
  return out;
}

Elem Elem::unit(BasisPtr basis, Shift shift) { return monomial(std::move(basis), shift, Word{}); }

Elem Elem::generator(BasisPtr basis, Shift shift, int rank) {
  return monomial(std::move(basis), shift, Word{rank});
}

Elem Elem::monomial(BasisPtr basis, Shift shift, const Word& w, const Rational& c) {
  Elem e(std::move(basis), shift);
  e.add_factors(w, c);
  return e;
}

void Elem::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Elem::add_factors(std::span<const int> ranks, const Rational& c) {
  if (c == 0) return;
  auto n = normalize_ranks(*basis_, ranks, shift_);
  if (!n) return;
  add_term(n->word, n->sign > 0 ? c : Rational(-c));
}

void require_same_space(const Elem& a, const Elem& b, const char* op) {
  if (a.basis() != b.basis() && !(*a.basis() == *b.basis()))
    throw InvalidInput(std::string(op) + ": operands live over different bases");
  if (a.shift() != b.shift())
    throw InvalidInput(fmt::format("{}: shift mismatch ({} vs {})", op, a.shift().offset, b.shift().offset));
}

Elem& Elem::operator+=(const Elem& other) {
  require_same_space(*this, other, "elem_add");
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

Elem& Elem::operator-=(const Elem& other) {
  require_same_space(*this, other, "elem_sub");
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

Elem& Elem::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

Elem Elem::operator-() const {
  Elem out = *this;
  for (auto& [w, v] : out.terms_) v = -v;
  return out;
}

bool Elem::operator==(const Elem& other) const {
  return shift_ == other.shift_ && terms_ == other.terms_ && *basis_ == *other.basis_;
}

std::optional<int> Elem::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [w, c] : terms_) {
    int d = word_degree(*basis_, w, shift_);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

int Elem::max_weight() const {
  int m = -1;
  for (const auto& [w, c] : terms_) m = std::max(m, static_cast<int>(w.size()));
  return m;
}

Elem Elem::reshift(Shift shift) const {
  Elem out(basis_, shift);
  for (const auto& [w, c] : terms_) out.add_factors(w, c);
  return out;
}

Elem Elem::truncated(int max_weight) const {
  Elem out(basis_, shift_);
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) <= max_weight) out.terms_.emplace(w, c);
  return out;
}

Elem Elem::weight_part(int weight) const {
  Elem out(basis_, shift_);
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) == weight) out.terms_.emplace(w, c);
  return out;
}

std::string Elem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + rinfty::to_string(c) + ")" + word_to_string(*basis_, w);
  }
  return out;
}

Elem sym_product(const Elem& a, const Elem& b) {
  require_same_space(a, b, "sym_product");
  Elem out(a.basis(), a.shift());
  std::vector<int> buf;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      buf.assign(wa.begin(), wa.end());
      buf.insert(buf.end(), wb.begin(), wb.end());
      out.add_factors(buf, ca * cb);
    }
  }
  return out;
}

}  // namespace rinfty
