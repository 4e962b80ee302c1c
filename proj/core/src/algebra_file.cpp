#include "rinfty/algebra_file.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

namespace rinfty {

const char* kind_name(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Syntax: return "syntax";
    case ParseErrorKind::UnknownId: return "unknown-id";
    case ParseErrorKind::DuplicateGenerator: return "duplicate-generator";
    case ParseErrorKind::NonRational: return "non-rational";
    case ParseErrorKind::DegreeMismatch: return "degree-mismatch";
    case ParseErrorKind::VanishingWord: return "vanishing-word";
    case ParseErrorKind::Io: return "io";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::string source, int line, int column, const std::string& message)
    : InvalidInput(fmt::format("{}:{}:{}: {} error: {}", source, line, column, kind_name(kind), message)),
      kind_(kind),
      source_(std::move(source)),
      line_(line),
      column_(column),
      message_(message) {}

bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
  return *a.algebra.basis() == *b.algebra.basis() && a.algebra.brackets() == b.algebra.brackets() &&
         a.rmatrix == b.rmatrix && a.policy == b.policy;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(ParseErrorKind kind, const YAML::Node& at, const std::string& msg) const {
    const YAML::Mark m = at.IsDefined() ? at.Mark() : YAML::Mark::null_mark();
    const bool known = !m.is_null();
    throw ParseError(kind, source_, known ? m.line + 1 : 0, known ? m.column + 1 : 0, msg);
  }

  AlgebraSpec run(const YAML::Node& root) {
    if (!root.IsMap()) fail(ParseErrorKind::Syntax, root, "top level must be a mapping");
    for (const auto& kv : root) {
      const auto key = kv.first.as<std::string>();
      if (key != "generators" && key != "brackets" && key != "rmatrix" && key != "policy")
        fail(ParseErrorKind::Syntax, kv.first, "unknown section '" + key + "'");
    }

    basis_ = parse_generators(root["generators"]);
    PolyMap l(basis_, 1);
    if (const auto node = root["brackets"]) {
      if (!node.IsSequence()) fail(ParseErrorKind::Syntax, node, "'brackets' must be a list");
      for (const auto& entry : node) parse_bracket(entry, l);
    }
    AlgebraSpec spec{LInftyAlg(std::move(l)), std::nullopt, std::nullopt};
    if (const auto node = root["rmatrix"]) spec.rmatrix = parse_rmatrix(node);
    if (const auto node = root["policy"]) spec.policy = parse_policy(node);
    return spec;
  }

 private:
  int as_int(const YAML::Node& node, const char* what) const {
    if (!node.IsScalar()) fail(ParseErrorKind::Syntax, node, fmt::format("{} must be an integer", what));
    try {
      return node.as<int>();
    } catch (const YAML::Exception&) {
      fail(ParseErrorKind::Syntax, node, fmt::format("{} must be an integer, got '{}'", what, node.Scalar()));
    }
  }

  Rational as_rational(const YAML::Node& node) const {
    if (!node.IsScalar()) fail(ParseErrorKind::NonRational, node, "coefficient must be a scalar");
    try {
      return parse_rational(node.Scalar());
    } catch (const InvalidInput&) {
      fail(ParseErrorKind::NonRational, node, "coefficient '" + node.Scalar() + "' is not of the form p or p/q");
    }
  }

  int rank(const YAML::Node& node) const {
    if (!node.IsScalar()) fail(ParseErrorKind::Syntax, node, "generator id must be a scalar");
    auto r = basis_->rank_of(node.Scalar());
    if (!r) fail(ParseErrorKind::UnknownId, node, "unknown generator '" + node.Scalar() + "'");
    return *r;
  }

  std::vector<int> ranks(const YAML::Node& node, const char* what) const {
    if (!node || !node.IsSequence() || node.size() == 0)
      fail(ParseErrorKind::Syntax, node ? node : YAML::Node(), fmt::format("{} must be a non-empty list of ids", what));
    std::vector<int> out;
    for (const auto& id : node) out.push_back(rank(id));
    return out;
  }

  YAML::Node require(const YAML::Node& map, const char* key, const YAML::Node& owner) const {
    if (!map.IsMap()) fail(ParseErrorKind::Syntax, owner, "entry must be a mapping");
    YAML::Node slot = map[key];
    if (!slot) fail(ParseErrorKind::Syntax, owner, fmt::format("entry is missing '{}'", key));
    return slot;
  }

  BasisPtr parse_generators(const YAML::Node& node) const {
    if (!node) throw ParseError(ParseErrorKind::Syntax, source_, 1, 1, "missing 'generators'");
    if (!node.IsSequence() || node.size() == 0) fail(ParseErrorKind::Syntax, node, "'generators' must be a non-empty list");
    std::vector<BasisVec> vecs;
    std::map<std::string, bool> seen;
    for (const auto& g : node) {
      const YAML::Node id = require(g, "id", g);
      if (!id.IsScalar() || id.Scalar().empty()) fail(ParseErrorKind::Syntax, id, "generator id must be a non-empty name");
      const std::string name = id.Scalar();
      if (name.find_first_of(" *,:{}[]") != std::string::npos)
        fail(ParseErrorKind::Syntax, id, "generator id '" + name + "' contains a reserved character");
      if (!seen.emplace(name, true).second) fail(ParseErrorKind::DuplicateGenerator, id, "generator '" + name + "' declared twice");
      vecs.push_back({name, as_int(require(g, "degree", g), "degree")});
    }
    return make_basis(std::move(vecs));
  }

  void parse_bracket(const YAML::Node& entry, PolyMap& l) const {
    const std::vector<int> in = ranks(require(entry, "in", entry), "'in'");
    const int k = static_cast<int>(in.size());
    if (const auto arity = entry["arity"]; arity && as_int(arity, "arity") != k)
      fail(ParseErrorKind::Syntax, arity, fmt::format("arity {} does not match {} inputs", arity.Scalar(), k));
    int input_degree = 0;
    for (int r : in) input_degree += basis_->degree(r);
    const int expected = input_degree - k + 2;

    const YAML::Node out = require(entry, "out", entry);
    if (!out.IsMap() || out.size() == 0) fail(ParseErrorKind::Syntax, out, "'out' must map output ids to coefficients");
    Elem value(basis_, Shift::outputs());
    for (const auto& kv : out) {
      const int r = rank(kv.first);
      if (basis_->degree(r) != expected)
        fail(ParseErrorKind::DegreeMismatch, kv.first,
             fmt::format("output '{}' has degree {}, but l_{} on these inputs lands in degree {}", kv.first.Scalar(),
                         basis_->degree(r), k, expected));
      value.add_term(Word{r}, as_rational(kv.second));
    }
    if (!normalize_ranks(*basis_, in, Shift::inputs()))
      fail(ParseErrorKind::VanishingWord, entry["in"], "input word repeats an odd factor and vanishes");
    l.add_factors(in, value);
  }

  RMatrix parse_rmatrix(const YAML::Node& node) const {
    if (!node.IsSequence()) fail(ParseErrorKind::Syntax, node, "'rmatrix' must be a list");
    std::map<int, Elem> coeffs;
    for (const auto& term : node) {
      const YAML::Node order_node = require(term, "order", term);
      const int order = as_int(order_node, "order");
      if (order < 1) fail(ParseErrorKind::Syntax, order_node, "lambda order must be at least 1");
      const std::vector<int> word = ranks(require(term, "word", term), "'word'");
      if (const auto weight = term["weight"]; weight && as_int(weight, "weight") != static_cast<int>(word.size()))
        fail(ParseErrorKind::Syntax, weight, fmt::format("weight {} does not match a word of {} factors", weight.Scalar(), word.size()));
      int degree = 0;
      for (int f : word) degree += Shift::outputs().shifted(basis_->degree(f));
      if (degree != 2)
        fail(ParseErrorKind::DegreeMismatch, term["word"],
             fmt::format("r-matrix term has degree {} in S(g[-1]); it must be 2", degree));
      if (!normalize_ranks(*basis_, word, Shift::outputs()))
        fail(ParseErrorKind::VanishingWord, term["word"], "word repeats an odd factor and vanishes");
      coeffs.try_emplace(order, basis_, Shift::outputs()).first->second.add_factors(word, as_rational(require(term, "coef", term)));
    }
    std::erase_if(coeffs, [](const auto& kv) { return kv.second.is_zero(); });
    RMatrix r(coeffs.empty() ? 0 : coeffs.rbegin()->first);
    for (auto& [order, e] : coeffs) r.set(order, std::move(e));
    return r;
  }

  TruncationPolicy parse_policy(const YAML::Node& node) const {
    if (!node.IsMap()) fail(ParseErrorKind::Syntax, node, "'policy' must be a mapping");
    TruncationPolicy p;
    for (const auto& kv : node) {
      const auto key = kv.first.as<std::string>();
      const int v = as_int(kv.second, key.c_str());
      if (v < 1) fail(ParseErrorKind::Syntax, kv.second, key + " must be positive");
      if (key == "max_weight") p.max_weight = v;
      else if (key == "max_lambda") p.max_lambda = v;
      else if (key == "max_arity") p.max_arity = v;
      else fail(ParseErrorKind::Syntax, kv.first, "unknown policy key '" + key + "'");
    }
    return p;
  }

  std::string source_;
  BasisPtr basis_;
};

}  // namespace

AlgebraSpec parse_algebra_text(std::string_view text, const std::string& source) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ParseError(ParseErrorKind::Syntax, source, e.mark.line + 1, e.mark.column + 1, e.msg);
  }
  try {
    return Parser(source).run(root);
  } catch (const ParseError&) {
    throw;
  } catch (const YAML::Exception& e) {
    throw ParseError(ParseErrorKind::Syntax, source, e.mark.line + 1, e.mark.column + 1, e.msg);
  }
}

AlgebraSpec parse_algebra(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(ParseErrorKind::Io, path.string(), 0, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_text(buf.str(), path.string());
}

std::string serialize_algebra(const AlgebraSpec& spec) {
  const auto& basis = *spec.algebra.basis();
  auto ids = [&](const Word& w) {
    std::vector<std::string> out;
    for (int r : w) out.push_back(basis.at(r).id);
    return out;
  };

  YAML::Emitter em;
  em << YAML::BeginMap;
  em << YAML::Key << "generators" << YAML::Value << YAML::BeginSeq;
  for (const auto& v : basis.declared())
    em << YAML::Flow << YAML::BeginMap << YAML::Key << "id" << YAML::Value << v.id << YAML::Key << "degree"
       << YAML::Value << v.degree << YAML::EndMap;
  em << YAML::EndSeq;

  if (!spec.algebra.brackets().is_zero()) {
    em << YAML::Key << "brackets" << YAML::Value << YAML::BeginSeq;
    for (const auto& [in, value] : spec.algebra.brackets().table()) {
      em << YAML::Flow << YAML::BeginMap << YAML::Key << "in" << YAML::Value << ids(in) << YAML::Key << "out"
         << YAML::Value << YAML::BeginMap;
      for (const auto& [w, c] : value.terms()) em << YAML::Key << basis.at(w.front()).id << YAML::Value << to_string(c);
      em << YAML::EndMap << YAML::EndMap;
    }
    em << YAML::EndSeq;
  }

  if (spec.rmatrix) {
    em << YAML::Key << "rmatrix" << YAML::Value << YAML::BeginSeq;
    for (const auto& [order, e] : spec.rmatrix->coefficients())
      for (const auto& [w, c] : e.terms())
        em << YAML::Flow << YAML::BeginMap << YAML::Key << "order" << YAML::Value << order << YAML::Key << "weight"
           << YAML::Value << w.size() << YAML::Key << "word" << YAML::Value << ids(w) << YAML::Key << "coef"
           << YAML::Value << to_string(c) << YAML::EndMap;
    em << YAML::EndSeq;
  }

  if (spec.policy)
    em << YAML::Key << "policy" << YAML::Value << YAML::Flow << YAML::BeginMap << YAML::Key << "max_weight"
       << YAML::Value << spec.policy->max_weight << YAML::Key << "max_lambda" << YAML::Value << spec.policy->max_lambda
       << YAML::Key << "max_arity" << YAML::Value << spec.policy->max_arity << YAML::EndMap;
  em << YAML::EndMap;
  return std::string(em.c_str()) + "\n";
}

}  // namespace rinfty
