#include "rinfty/schouten.hpp"

#include <numeric>

#include <fmt/format.h>

#include "rinfty/errors.hpp"

namespace rinfty {

std::optional<int> suspended_degree(const Elem& a) {
  auto d = a.homogeneous_degree();
  if (!d) return std::nullopt;
  return *d - 2;
}

std::vector<Word> positive_words(const GradedBasis& basis, int max_weight) {
  std::vector<Word> out;
  for (int w = 1; w <= max_weight; ++w)
    for (auto& word : words_of_weight(basis, w, Shift::outputs())) out.push_back(std::move(word));
  return out;
}

std::vector<std::vector<int>> word_tuples(const std::vector<Word>& words, int n, int max_weight) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start, int weight) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < static_cast<int>(words.size()); ++i) {
      const int w = static_cast<int>(words[static_cast<std::size_t>(i)].size());
      if (weight + w > max_weight) continue;
      cur.push_back(i);
      self(self, i, weight + w);
      cur.pop_back();
    }
  };
  if (n >= 1) rec(rec, 0, 0);
  return out;
}

SchoutenAlg::SchoutenAlg(LInftyAlg base, TruncationPolicy policy)
    : base_(std::make_shared<const LInftyAlg>(std::move(base))), policy_(policy), memo_(std::make_shared<Memo>()) {}

SchoutenAlg schouten_extend(const LInftyAlg& alg, const TruncationPolicy& policy) {
  if (!alg.certified()) throw InvalidInput("schouten_extend: the L-infinity algebra has not been certified");
  return SchoutenAlg(alg, policy);
}

Elem SchoutenAlg::bracket_words(std::span<const Word> args) const {
  std::vector<Word> key(args.begin(), args.end());
  {
    std::lock_guard lock(memo_->mutex);
    auto it = memo_->values.find(key);
    if (it != memo_->values.end()) return it->second;
  }
  Elem value = compute_words(args);
  std::lock_guard lock(memo_->mutex);
  return memo_->values.try_emplace(std::move(key), std::move(value)).first->second;
}

Elem SchoutenAlg::compute_words(std::span<const Word> args) const {
  const auto& basis = *base_->basis();
  Elem out(base_->basis(), Shift::outputs());
  const int k = static_cast<int>(args.size());
  if (k == 0) return out;
  for (const auto& w : args)
    if (w.empty()) return out;

  const PolyMap& l = base_->brackets();
  bool has_arity = false;
  for (const auto& [in, v] : l.table())
    if (static_cast<int>(in.size()) == k) has_arity = true;
  if (!has_arity) return out;

  std::vector<int> concat, parity, offsets;
  for (const auto& w : args) {
    offsets.push_back(static_cast<int>(concat.size()));
    for (int r : w) {
      concat.push_back(r);
      parity.push_back(odd(Shift::outputs().shifted(basis.degree(r))) ? 1 : 0);
    }
  }
  const int total = static_cast<int>(concat.size());

  std::vector<int> choice(static_cast<std::size_t>(k), 0);
  std::vector<int> perm, chosen, factors;
  std::vector<bool> taken;
  while (true) {
    perm.clear();
    chosen.clear();
    taken.assign(static_cast<std::size_t>(total), false);
    for (int i = 0; i < k; ++i) {
      const int pos = offsets[static_cast<std::size_t>(i)] + choice[static_cast<std::size_t>(i)];
      perm.push_back(pos);
      chosen.push_back(concat[static_cast<std::size_t>(pos)]);
      taken[static_cast<std::size_t>(pos)] = true;
    }
    for (int p = 0; p < total; ++p)
      if (!taken[static_cast<std::size_t>(p)]) perm.push_back(p);

    Elem head = l.evaluate(chosen);
    if (!head.is_zero()) {
      const int sign = koszul_sign(perm, parity);
      for (const auto& [o, oc] : head.terms()) {
        factors.assign(o.begin(), o.end());
        for (int p = k; p < total; ++p) factors.push_back(concat[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])]);
        if (static_cast<int>(factors.size()) <= policy_.max_weight) out.add_factors(factors, sign > 0 ? oc : Rational(-oc));
      }
    }

    int i = k - 1;
    while (i >= 0) {
      if (++choice[static_cast<std::size_t>(i)] < static_cast<int>(args[static_cast<std::size_t>(i)].size())) break;
      choice[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

Elem SchoutenAlg::bracket(std::span<const Elem> args) const {
  Elem out(base_->basis(), Shift::outputs());
  for (const auto& a : args)
    if (a.shift() != Shift::outputs()) throw InvalidInput("Schouten bracket: arguments must have shift -1");
  const std::size_t k = args.size();
  std::vector<Elem::Terms::const_iterator> it(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (args[i].is_zero()) return out;
    it[i] = args[i].terms().begin();
  }
  std::vector<Word> words(k);
  while (true) {
    Rational coef = 1;
    for (std::size_t i = 0; i < k; ++i) {
      words[i] = it[i]->first;
      coef *= it[i]->second;
    }
    Elem v = bracket_words(words);
    if (!v.is_zero()) out += coef * std::move(v);

    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++it[i] != args[i].terms().end()) break;
      it[i] = args[i].terms().begin();
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

Elem SchoutenAlg::schouten_bracket(const Elem& x, const Elem& y) const {
  Elem out(base_->basis(), Shift::outputs());
  // split x by degree so the sign is well defined on each homogeneous part
  std::map<int, Elem> parts;
  for (const auto& [w, c] : x.terms())
    parts.try_emplace(word_degree(*basis(), w, Shift::outputs()), basis(), Shift::outputs()).first->second.add_term(w, c);
  for (const auto& [deg, part] : parts) {
    const Elem args[2] = {part, y};
    Elem v = bracket(args);
    if (!odd(deg - 2)) v *= -1;
    out += v;
  }
  return out;
}

CheckReport check_schouten_linfty(const SchoutenAlg& s) {
  CheckReport report;
  report.check = "schouten-linfty";
  report.policy = s.policy();
  const auto& basis = *s.basis();
  const int max_n = s.policy().max_arity;
  const std::vector<Word> words = positive_words(basis, s.policy().max_weight);
  std::vector<int> wparity;
  for (const auto& w : words) wparity.push_back(word_parity(basis, w, Shift::outputs()));

  for (int n = 1; n <= max_n; ++n) {
    for (const auto& tuple : word_tuples(words, n, s.policy().max_weight)) {
      ++report.cases;
      std::vector<int> parity;
      for (int idx : tuple) parity.push_back(wparity[static_cast<std::size_t>(idx)]);
      Elem total(s.basis(), Shift::outputs());
      for (int i = 1; i <= n; ++i) {
        for (const auto& sigma : shuffles(i, n - i)) {
          const int sign = koszul_sign(sigma, parity);
          std::vector<Word> inner;
          for (int j = 0; j < i; ++j) inner.push_back(words[static_cast<std::size_t>(tuple[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)])])]);
          Elem in = s.bracket_words(inner);
          if (in.is_zero()) continue;
          std::vector<Elem> outer{in};
          for (int j = i; j < n; ++j)
            outer.push_back(Elem::monomial(s.basis(), Shift::outputs(),
                                           words[static_cast<std::size_t>(tuple[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)])])]));
          Elem v = s.bracket(outer);
          total += sign > 0 ? v : -v;
        }
      }
      if (!total.is_zero()) {
        std::string args;
        for (int idx : tuple) args += (args.empty() ? "" : ", ") + word_to_string(basis, words[static_cast<std::size_t>(idx)]);
        report.fail(fmt::format("Jacobiator J_{}", n), "(" + args + ")", total.to_string());
      }
    }
  }
  if (s.base().max_arity() > max_n)
    report.notes.push_back(fmt::format("brackets up to arity {} exceed the arity cap {}", s.base().max_arity(), max_n));
  return report;
}

}  // namespace rinfty
