#include "rinfty/transfer.hpp"

#include <fmt/format.h>

#include "rinfty/errors.hpp"

namespace rinfty {

namespace {

// Ordered compositions of total into exactly parts positive integers.
std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (static_cast<int>(cur.size()) == parts) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int p = 1; p <= left - (parts - static_cast<int>(cur.size()) - 1); ++p) {
      cur.push_back(p);
      self(self, left - p);
      cur.pop_back();
    }
  };
  if (parts >= 1) rec(rec, total);
  return out;
}

int phi_degree(std::span<const Elem> xs) {
  int deg = 1;
  for (const auto& x : xs) {
    auto d = suspended_degree(x);
    if (!d) throw InvalidInput("canonical_phi: arguments must be homogeneous");
    deg += *d;
  }
  return deg;
}

}  // namespace

std::vector<SlotWord> n_map(const Elem& y) {
  if (y.shift() != Shift::inputs()) throw InvalidInput("n_map: argument must have shift +1");
  std::vector<SlotWord> out;
  for (const auto& [w, c] : y.terms()) {
    SlotWord sw{c, {}};
    for (int r : w) sw.slots.push_back(Elem::generator(y.basis(), Shift::outputs(), r));
    out.push_back(std::move(sw));
  }
  return out;
}

PhiValue canonical_phi(std::span<const Elem> xs, const SchoutenAlg& s, const TruncationPolicy& policy) {
  const BasisPtr& basis = s.basis();
  for (const auto& x : xs)
    if (x.is_zero()) return PhiValue{PolyMap(basis, 1), true, {}};
  PhiValue out{PolyMap(basis, phi_degree(xs)), true, {}};
  const int n = static_cast<int>(xs.size());
  const int top = s.base().max_arity();
  for (int p = 1; n + p <= top; ++p) {
    if (n + p > policy.max_arity) {
      out.certified = false;
      out.diagnostics.push_back(fmt::format("uncertified beyond cap: phi_{} needs l_{} > A = {}", n, n + p,
                                            policy.max_arity));
      break;
    }
    for (const Word& y : words_of_weight(*basis, p, Shift::inputs())) {
      std::vector<Elem> args(xs.begin(), xs.end());
      for (const auto& slot : n_map(Elem::monomial(basis, Shift::inputs(), y))) {
        auto full = args;
        full.insert(full.end(), slot.slots.begin(), slot.slots.end());
        Elem v = s.bracket(full).truncated(policy.max_weight);
        v *= slot.coefficient;
        if (!v.weight_part(0).is_zero())
          out.diagnostics.push_back(fmt::format("weight-0 output on {}: phi leaves B+", word_to_string(*basis, y)));
        out.map.add(y, v);
      }
    }
  }
  return out;
}

CheckReport check_generalized_mc(const RMatrix& r, const SchoutenAlg& s) {
  const TruncationPolicy& policy = s.policy();
  CheckReport report;
  report.check = "generalized-maurer-cartan";
  report.policy = policy;
  if (r.at(0)) throw InvalidInput("r has a lambda^0 term: curved input is not supported");
  for (const auto& [order, coef] : r.coefficients()) {
    if (order < 0) throw InvalidInput("r has a negative lambda order");
    if (coef.shift() != Shift::outputs()) throw InvalidInput("r coefficients must have shift -1");
    if (coef.is_zero()) continue;
    auto d = coef.homogeneous_degree();
    if (!d || *d != 2)
      throw InvalidInput(fmt::format("r at lambda^{} must have degree 1 in S^(g[-1])[1]", order));
  }

  const int top = s.base().max_arity();
  for (int q = 1; q <= policy.max_lambda; ++q) {
    Elem total(s.basis(), Shift::outputs());
    for (int k = 1; k <= std::min(q, std::min(top, policy.max_arity)); ++k) {
      for (const auto& parts : compositions(q, k)) {
        std::vector<Elem> args;
        for (int p : parts) {
          const Elem* c = r.at(p);
          if (!c) break;
          args.push_back(*c);
        }
        if (static_cast<int>(args.size()) != k) continue;
        Elem v = s.bracket(args);
        v *= 1 / factorial(k);
        total += v;
      }
    }
    ++report.cases;
    for (int w = 0; w <= policy.max_weight; ++w) {
      Elem part = total.weight_part(w);
      if (!part.is_zero()) report.fail(fmt::format("lambda^{} weight {}", q, w), "MC(r)", part.to_string());
    }
  }
  if (top > policy.max_arity)
    report.notes.push_back(fmt::format("brackets up to arity {} exceed the arity cap {}; higher terms uncertified",
                                       top, policy.max_arity));
  return report;
}

CheckReport check_linfty_morphism(const SchoutenAlg& s, const TruncationPolicy& policy) {
  CheckReport report;
  report.check = "linfty-morphism";
  report.policy = policy;
  const BasisPtr& basis = s.basis();
  const PolyMap& l = s.base().brackets();
  const std::vector<Word> words = positive_words(*basis, policy.max_weight);

  std::map<std::vector<Word>, PolyMap> phi_cache;
  auto phi_words = [&](const std::vector<Word>& ws) -> const PolyMap& {
    auto it = phi_cache.find(ws);
    if (it != phi_cache.end()) return it->second;
    std::vector<Elem> xs;
    for (const auto& w : ws) xs.push_back(Elem::monomial(basis, Shift::outputs(), w));
    return phi_cache.emplace(ws, canonical_phi(xs, s, policy).map).first->second;
  };

  for (int n = 1; n <= policy.max_arity; ++n) {
    for (const auto& tuple : word_tuples(words, n, policy.max_weight)) {
      ++report.cases;
      std::vector<Word> xs;
      std::vector<int> parity;
      for (int idx : tuple) {
        xs.push_back(words[static_cast<std::size_t>(idx)]);
        parity.push_back(word_parity(*basis, xs.back(), Shift::outputs()));
      }
      const PolyMap& phi_n = phi_words(xs);
      PolyMap total = differential(l, phi_n);

      PolyMap quadratic(basis, 0);
      for (int k = 1; k < n; ++k) {
        for (const auto& sigma : shuffles(k, n - k)) {
          int sign = koszul_sign(sigma, parity);
          std::vector<Word> first, second;
          for (int j = 0; j < k; ++j) {
            first.push_back(xs[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)])]);
            if (parity[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)])]) sign = -sign;
          }
          for (int j = k; j < n; ++j) second.push_back(xs[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)])]);
          PolyMap b = big_bracket(phi_words(first), phi_words(second));
          quadratic += sign > 0 ? b : Rational(-1) * b;
        }
      }
      quadratic *= Rational(1, 2);
      total += quadratic;

      for (int m = 1; m <= n; ++m) {
        for (const auto& tau : shuffles(m, n - m)) {
          const int sign = koszul_sign(tau, parity);
          std::vector<Word> inner;
          for (int j = 0; j < m; ++j) inner.push_back(xs[static_cast<std::size_t>(tau[static_cast<std::size_t>(j)])]);
          Elem lm = s.bracket_words(inner);
          if (lm.is_zero()) continue;
          // phi is multilinear; expand l_m(..) by homogeneous degree
          std::map<int, Elem> parts;
          for (const auto& [w, c] : lm.terms())
            parts.try_emplace(word_degree(*basis, w, Shift::outputs()), basis, Shift::outputs())
                .first->second.add_term(w, c);
          for (const auto& [deg, part] : parts) {
            std::vector<Elem> args{part};
            for (int j = m; j < n; ++j)
              args.push_back(Elem::monomial(basis, Shift::outputs(), xs[static_cast<std::size_t>(tau[static_cast<std::size_t>(j)])]));
            PolyMap v = canonical_phi(args, s, policy).map;
            total += sign > 0 ? v : Rational(-1) * v;
          }
        }
      }

      std::string label;
      for (const auto& w : xs) label += (label.empty() ? "" : ", ") + word_to_string(*basis, w);
      CheckReport local;
      report_nonzero(total.truncated_outputs(policy.max_weight), fmt::format("phi_{} compatibility", n), policy,
                     local);
      for (auto& f : local.failures) report.fail(f.where, "(" + label + ") on " + f.input, f.value);
    }
  }
  if (s.base().max_arity() > policy.max_arity)
    report.notes.push_back("brackets beyond the arity cap are not covered");
  return report;
}

CheckReport is_mc(const LambdaSeries<PolyMap>& mu, const TruncationPolicy& policy) {
  CheckReport report;
  report.check = "maurer-cartan (lambda series)";
  report.policy = policy;
  const int cap = std::min(mu.cap(), policy.max_lambda);
  for (const auto& [order, m] : mu.coefficients()) {
    if (!m.is_zero() && m.degree() != 1)
      throw InvalidInput(fmt::format("is_mc: lambda^{} coefficient has degree {}", order, m.degree()));
    for (auto [a, b] : m.support())
      if (a < 1 || b < 1)
        report.fail(fmt::format("B+ membership, lambda^{} component ({},{})", order, a, b), "-",
                    a < 1 ? "component without inputs" : "component with empty output (curved)");
  }
  if (mu.coefficients().empty()) return report;
  const BasisPtr& basis = mu.coefficients().begin()->second.basis();
  std::size_t beyond = 0;
  for (int q = 0; q <= cap; ++q) {
    ++report.cases;
    PolyMap sq(basis, 2);
    for (const auto& [a, ma] : mu.coefficients()) {
      const PolyMap* mb = mu.at(q - a);
      if (!mb || q - a < 0) continue;
      sq += big_bracket(ma, *mb);
    }
    beyond += report_nonzero(sq, fmt::format("lambda^{} [mu,mu]", q), policy, report);
  }
  if (beyond) report.notes.push_back(fmt::format("{} nonzero value(s) beyond the caps are uncertified", beyond));
  return report;
}

BialgebraStructure transfer(const RMatrix& r, const SchoutenAlg& s, const TruncationPolicy& policy) {
  CheckReport mce = check_generalized_mc(r, s);
  if (!mce.passed()) throw TransferRejected(std::move(mce));

  const BasisPtr& basis = s.basis();
  const LInftyAlg& alg = s.base();
  BialgebraStructure out{LambdaSeries<PolyMap>(policy.max_lambda), r, policy, false, {}, {}, {}};
  out.classical_mode = alg.is_classical();

  PolyMap l = alg.brackets();
  if (l.is_zero()) l = PolyMap(basis, 1);
  out.mu.set(0, l);

  std::vector<std::string> notes;
  for (int q = 1; q <= policy.max_lambda; ++q) {
    PolyMap mq(basis, 1);
    for (int n = 1; n <= q; ++n) {
      if (n > policy.max_arity) {
        notes.push_back(fmt::format("phi_{} at lambda^{} beyond the arity cap", n, q));
        break;
      }
      for (const auto& parts : compositions(q, n)) {
        std::vector<Elem> args;
        for (int p : parts) {
          const Elem* c = r.at(p);
          if (!c) break;
          args.push_back(*c);
        }
        if (static_cast<int>(args.size()) != n) continue;
        PhiValue v = canonical_phi(args, s, policy);
        notes.insert(notes.end(), v.diagnostics.begin(), v.diagnostics.end());
        v.map *= 1 / factorial(n);
        mq += v.map;
      }
    }
    if (!mq.is_zero()) out.mu.set(q, std::move(mq));
  }

  out.mc = is_mc(out.mu, policy);
  out.mc.notes.insert(out.mc.notes.end(), notes.begin(), notes.end());
  if (out.classical_mode)
    out.mc.notes.push_back("classical mode: Lie algebra in degree 0, phi = phi_1 = d_CE");

  out.mc_deformed.check = "deformed maurer-cartan";
  out.mc_deformed.policy = policy;
  for (int q = 1; q <= policy.max_lambda; ++q) {
    ++out.mc_deformed.cases;
    PolyMap total(basis, 2);
    if (const PolyMap* mq = out.mu.at(q)) total += differential(l, *mq);
    PolyMap quad(basis, 2);
    for (int a = 1; a < q; ++a) {
      const PolyMap* ma = out.mu.at(a);
      const PolyMap* mb = out.mu.at(q - a);
      if (ma && mb) quad += big_bracket(*ma, *mb);
    }
    quad *= Rational(1, 2);
    total += quad;
    report_nonzero(total, fmt::format("lambda^{} d mu' + 1/2 [mu',mu']", q), policy, out.mc_deformed);
  }

  out.degrees.check = "bialgebra degrees";
  out.degrees.policy = policy;
  for (const auto& [q, m] : out.mu.coefficients()) check_entry_degrees(m, 1, fmt::format("lambda^{} mu", q), out.degrees);
  return out;
}

}  // namespace rinfty
