#include "rinfty/polymap.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "rinfty/errors.hpp"

namespace rinfty {

namespace {

// Shift +1 and shift -1 give every basis vector the same parity.
bool odd_rank(const GradedBasis& basis, int rank) { return odd(basis.degree(rank) + 1); }

bool is_canonical(const GradedBasis& basis, const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] < w[i - 1]) return false;
    if (w[i] == w[i - 1] && odd_rank(basis, w[i])) return false;
  }
  return true;
}

}  // namespace

PolyMap PolyMap::constant(const Elem& a) {
  if (a.shift() != Shift::outputs()) throw InvalidInput("PolyMap::constant: value must have shift -1");
  auto deg = a.homogeneous_degree();
  if (!deg && !a.is_zero()) throw InvalidInput("PolyMap::constant: value is not homogeneous");
  PolyMap out(a.basis(), deg.value_or(2) - 2);
  if (!a.is_zero()) out.table_.emplace(Word{}, a);
  return out;
}

void PolyMap::check_entry(const Word& input, const Elem& value) const {
  if (value.shift() != Shift::outputs()) throw InvalidInput("PolyMap: values must have shift -1");
  if (!(*value.basis() == *basis_)) throw InvalidInput("PolyMap: value over a different basis");
  if (!is_canonical(*basis_, input)) throw InvalidInput("PolyMap: input word is not canonical");
  const int want = word_degree(*basis_, input, Shift::inputs()) + degree_ + 2;
  for (const auto& [w, c] : value.terms()) {
    const int got = word_degree(*basis_, w, Shift::outputs());
    if (got != want)
      throw InvalidInput(fmt::format("PolyMap: value {} on input {} has degree {}, expected {} for a degree-{} map",
                                     word_to_string(*basis_, w), word_to_string(*basis_, input), got, want, degree_));
  }
}

void PolyMap::add(const Word& input, const Elem& value) {
  if (value.is_zero()) return;
  check_entry(input, value);
  auto it = table_.find(input);
  if (it == table_.end()) {
    table_.emplace(input, value);
    return;
  }
  it->second += value;
  if (it->second.is_zero()) table_.erase(it);
}

void PolyMap::add_factors(std::span<const int> input, const Elem& value) {
  auto n = normalize_ranks(*basis_, input, Shift::inputs());
  if (!n || value.is_zero()) return;
  add(n->word, n->sign > 0 ? value : -value);
}

Elem PolyMap::evaluate(std::span<const int> input) const {
  Elem out(basis_, Shift::outputs());
  auto n = normalize_ranks(*basis_, input, Shift::inputs());
  if (!n) return out;
  auto it = table_.find(n->word);
  if (it == table_.end()) return out;
  out = it->second;
  if (n->sign < 0) out *= -1;
  return out;
}

Elem PolyMap::apply(const Elem& x) const {
  if (x.shift() != Shift::inputs()) throw InvalidInput("apply: argument must have shift +1");
  Elem out(basis_, Shift::outputs());
  for (const auto& [w, c] : x.terms()) {
    auto it = table_.find(w);
    if (it != table_.end()) out += c * it->second;
  }
  return out;
}

std::set<std::pair<int, int>> PolyMap::support() const {
  std::set<std::pair<int, int>> out;
  for (const auto& [in, v] : table_)
    for (const auto& [w, c] : v.terms()) out.emplace(static_cast<int>(in.size()), static_cast<int>(w.size()));
  return out;
}

int PolyMap::max_arity() const {
  int m = -1;
  for (const auto& [in, v] : table_) m = std::max(m, static_cast<int>(in.size()));
  return m;
}

bool PolyMap::in_b_plus() const {
  for (auto [m, n] : support())
    if (m < 1 || n < 1) return false;
  return true;
}

PolyMap& PolyMap::operator+=(const PolyMap& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) degree_ = other.degree_;
  if (other.degree_ != degree_) throw InvalidInput("PolyMap sum: degree mismatch");
  for (const auto& [in, v] : other.table_) add(in, v);
  return *this;
}

PolyMap& PolyMap::operator-=(const PolyMap& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) degree_ = other.degree_;
  if (other.degree_ != degree_) throw InvalidInput("PolyMap difference: degree mismatch");
  for (const auto& [in, v] : other.table_) add(in, -v);
  return *this;
}

PolyMap& PolyMap::operator*=(const Rational& c) {
  if (c == 0) {
    table_.clear();
    return *this;
  }
  for (auto& [in, v] : table_) v *= c;
  return *this;
}

bool PolyMap::operator==(const PolyMap& other) const {
  if (is_zero() && other.is_zero()) return true;
  return degree_ == other.degree_ && table_ == other.table_;
}

PolyMap PolyMap::truncated_outputs(int max_weight) const {
  PolyMap out(basis_, degree_);
  for (const auto& [in, v] : table_) {
    Elem t = v.truncated(max_weight);
    if (!t.is_zero()) out.table_.emplace(in, std::move(t));
  }
  return out;
}

PolyMap PolyMap::component(int m, int n) const {
  PolyMap out(basis_, degree_);
  for (const auto& [in, v] : table_) {
    if (static_cast<int>(in.size()) != m) continue;
    Elem t = v.weight_part(n);
    if (!t.is_zero()) out.table_.emplace(in, std::move(t));
  }
  return out;
}

std::string PolyMap::to_string() const {
  if (table_.empty()) return "0";
  std::string out;
  for (const auto& [in, v] : table_)
    out += fmt::format("  {} -> {}\n", word_to_string(*basis_, in), v.to_string());
  return out;
}

namespace {

// Candidate inputs of f o g: (F minus one factor) union Y for entries F of f
// and Y of g. A superset of the support; exact values come from the shuffle sum.
std::set<Word> circle_candidates(const PolyMap& f, const PolyMap& g) {
  std::set<Word> out;
  const auto& basis = *f.basis();
  std::set<int> g_outputs;
  for (const auto& [y, v] : g.table())
    for (const auto& [u, c] : v.terms()) g_outputs.insert(u.begin(), u.end());
  std::vector<int> buf;
  for (const auto& [fin, fv] : f.table()) {
    for (std::size_t i = 0; i < fin.size(); ++i) {
      if (i > 0 && fin[i] == fin[i - 1]) continue;
      if (!g_outputs.count(fin[i])) continue;
      for (const auto& [y, gv] : g.table()) {
        buf.clear();
        for (std::size_t j = 0; j < fin.size(); ++j)
          if (j != i) buf.push_back(fin[j]);
        buf.insert(buf.end(), y.begin(), y.end());
        if (auto n = normalize_ranks(basis, buf, Shift::inputs())) out.insert(n->word);
      }
    }
  }
  return out;
}

}  // namespace

PolyMap circle(const PolyMap& f, const PolyMap& g) {
  if (!(*f.basis() == *g.basis())) throw InvalidInput("circle: maps over different bases");
  PolyMap out(f.basis(), f.degree() + g.degree());
  if (f.is_zero() || g.is_zero()) return out;
  const auto& basis = *f.basis();

  std::set<int> f_arities, g_arities;
  for (const auto& [in, v] : f.table()) f_arities.insert(static_cast<int>(in.size()));
  for (const auto& [in, v] : g.table()) g_arities.insert(static_cast<int>(in.size()));
  const bool g_odd = odd(g.degree());

  std::vector<int> parity;
  std::vector<int> xs, ys, f_in, rest;
  for (const Word& w : circle_candidates(f, g)) {
    const int n = static_cast<int>(w.size());
    parity.assign(w.size(), 0);
    for (int i = 0; i < n; ++i) parity[static_cast<std::size_t>(i)] = odd_rank(basis, w[static_cast<std::size_t>(i)]);

    Elem value(f.basis(), Shift::outputs());
    for (int k = 0; k <= n; ++k) {
      const int l = n - k;
      if (!f_arities.count(k + 1) || !g_arities.count(l)) continue;
      for (const auto& sigma : shuffles(k, l)) {
        int sign = koszul_sign(sigma, parity);
        xs.clear();
        ys.clear();
        int x_parity = 0;
        for (int i = 0; i < k; ++i) {
          xs.push_back(w[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])]);
          x_parity ^= parity[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])];
        }
        for (int i = k; i < n; ++i) ys.push_back(w[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])]);
        if (g_odd && x_parity) sign = -sign;

        Elem gy = g.evaluate(ys);
        for (const auto& [u, cu] : gy.terms()) {
          int before = 0;  // parity of the factors preceding u[i]
          for (std::size_t i = 0; i < u.size(); ++i) {
            const int pi = odd_rank(basis, u[i]);
            const int split_sign = (pi && before) ? -1 : 1;
            before ^= pi;
            f_in.assign(xs.begin(), xs.end());
            f_in.push_back(u[i]);
            Elem fx = f.evaluate(f_in);
            if (fx.is_zero()) continue;
            rest.clear();
            for (std::size_t j = 0; j < u.size(); ++j)
              if (j != i) rest.push_back(u[j]);
            const Rational coef = cu * (sign * split_sign);
            for (const auto& [fw, fc] : fx.terms()) {
              std::vector<int> prod(fw.begin(), fw.end());
              prod.insert(prod.end(), rest.begin(), rest.end());
              value.add_factors(prod, fc * coef);
            }
          }
        }
      }
    }
    if (!value.is_zero()) out.add(w, value);
  }
  return out;
}

PolyMap big_bracket(const PolyMap& f, const PolyMap& g) {
  PolyMap out = circle(f, g);
  PolyMap back = circle(g, f);
  if (odd(f.degree()) && odd(g.degree()))
    out += back;
  else
    out -= back;
  return out;
}

PolyMap differential(const PolyMap& l, const PolyMap& gamma) { return big_bracket(l, gamma); }

void check_entry_degrees(const PolyMap& f, int expected_degree, const std::string& label, CheckReport& report) {
  const auto& basis = *f.basis();
  for (const auto& [in, v] : f.table()) {
    const int want = word_degree(basis, in, Shift::inputs()) + expected_degree + 2;
    for (const auto& [w, c] : v.terms()) {
      ++report.cases;
      const int got = word_degree(basis, w, Shift::outputs());
      if (got != want)
        report.fail(fmt::format("{} component ({},{})", label, in.size(), w.size()), word_to_string(basis, in),
                    fmt::format("output {} has degree {} (map degree {}), expected map degree {}",
                                word_to_string(basis, w), got, got - word_degree(basis, in, Shift::inputs()) - 2,
                                expected_degree));
    }
  }
}

std::size_t report_nonzero(const PolyMap& value, const std::string& label, const TruncationPolicy& policy,
                           CheckReport& report) {
  const auto& basis = *value.basis();
  std::size_t beyond = 0;
  for (const auto& [in, v] : value.table()) {
    const int m = static_cast<int>(in.size());
    std::map<int, Elem> by_weight;
    for (const auto& [w, c] : v.terms()) {
      const int n = static_cast<int>(w.size());
      if (m > policy.max_arity || n > policy.max_weight) {
        ++beyond;
        continue;
      }
      by_weight.try_emplace(n, value.basis(), Shift::outputs()).first->second.add_term(w, c);
    }
    for (const auto& [n, val] : by_weight)
      report.fail(fmt::format("{} component ({},{})", label, m, n), word_to_string(basis, in), val.to_string());
  }
  return beyond;
}

CheckReport is_mc(const PolyMap& mu, const TruncationPolicy& policy) {
  if (mu.degree() != 1)
    throw InvalidInput(fmt::format("is_mc: element has degree {}, a Maurer-Cartan element needs degree 1", mu.degree()));
  CheckReport report;
  report.check = "maurer-cartan";
  report.policy = policy;
  const auto& basis = *mu.basis();

  for (auto [m, n] : mu.support())
    if (m < 1 || n < 1)
      report.fail(fmt::format("B+ membership, component ({},{})", m, n), "-",
                  m < 1 ? "component without inputs" : "component with empty output (curved)");
  check_entry_degrees(mu, 1, "degree", report);

  const PolyMap sq = big_bracket(mu, mu);
  for (int m = 0; m <= policy.max_arity; ++m) report.cases += words_of_weight(basis, m, Shift::inputs()).size();
  const std::size_t beyond = report_nonzero(sq, "[mu,mu]", policy, report);
  if (beyond)
    report.notes.push_back(fmt::format("{} nonzero value(s) of [mu,mu] beyond the caps are uncertified", beyond));
  return report;
}

}  // namespace rinfty
