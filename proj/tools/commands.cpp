#include "commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rinfty/algebra_file.hpp"
#include "rinfty/report_file.hpp"

namespace rinfty::cli {
namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(ParseErrorKind::Io, path.string(), 0, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TruncationPolicy resolve_policy(const CommandOptions& o, const AlgebraSpec& spec) {
  TruncationPolicy p = spec.policy.value_or(TruncationPolicy{});
  if (o.max_weight) p.max_weight = *o.max_weight;
  if (o.max_lambda) p.max_lambda = *o.max_lambda;
  if (o.max_arity) p.max_arity = *o.max_arity;
  if (p.max_weight < 1 || p.max_lambda < 1 || p.max_arity < 1) throw UsageError("truncation caps must be positive");
  return p;
}

const RMatrix& require_rmatrix(const AlgebraSpec& spec, const std::string& command) {
  if (!spec.rmatrix) throw UsageError(command + " needs an 'rmatrix' section in the algebra file");
  return *spec.rmatrix;
}

void run_transfer(const RMatrix& r, const SchoutenAlg& s, const TruncationPolicy& policy, ReportDoc& doc) {
  try {
    BialgebraStructure b = transfer(r, s, policy);
    doc.checks.push_back(check_generalized_mc(r, s));
    doc.checks.push_back(std::move(b.mc));
    doc.checks.push_back(std::move(b.mc_deformed));
    doc.checks.push_back(std::move(b.degrees));
    doc.mu = std::move(b.mu);
  } catch (const TransferRejected& e) {
    doc.checks.push_back(e.report());
  }
}

}  // namespace

CommandResult run_command(const CommandOptions& o) {
  static const char* const known[] = {"check-linfty", "check-rmatrix", "check-morphism", "transfer", "report"};
  if (std::find(std::begin(known), std::end(known), o.command) == std::end(known))
    throw UsageError("unknown command '" + o.command + "'");
  if (o.format != "text" && o.format != "machine") throw UsageError("--format must be text or machine");
  if (o.fixture.empty()) throw UsageError("no algebra file given (use --fixture PATH)");

  const std::string bytes = read_file(o.fixture);
  AlgebraSpec spec = parse_algebra_text(bytes, o.fixture.string());
  const TruncationPolicy policy = resolve_policy(o, spec);
  const bool wants_r = o.command == "check-rmatrix" || o.command == "transfer";
  if (wants_r) require_rmatrix(spec, o.command);

  ReportDoc doc;
  doc.command = o.command;
  doc.input_digest = sha256_hex(bytes);
  doc.policy = policy;

  LInftyAlg& alg = spec.algebra;
  doc.checks.push_back(alg.certify(policy));
  if (alg.certified()) {
    const SchoutenAlg s = schouten_extend(alg, policy);
    if (o.command == "check-linfty" || o.command == "report") doc.checks.push_back(check_schouten_linfty(s));
    if (o.command == "check-morphism" || o.command == "report") doc.checks.push_back(check_linfty_morphism(s, policy));
    if (o.command == "check-rmatrix") doc.checks.push_back(check_generalized_mc(*spec.rmatrix, s));
    if (o.command == "transfer" || (o.command == "report" && spec.rmatrix)) run_transfer(*spec.rmatrix, s, policy, doc);
  } else {
    doc.checks.front().notes.push_back("the algebra is not L-infinity within the caps; later checks were skipped");
  }

  CommandResult result;
  result.report = o.format == "machine" ? render_machine(doc) : render_text(doc);
  result.status = doc.passed() ? kPass : kCheckFailed;
  return result;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for L-infinity algebras, r-infinity matrices and their triangular bialgebras", "rinfty"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  CommandOptions o;
  std::string output;
  const std::pair<const char*, const char*> commands[] = {
      {"check-linfty", "higher Jacobi identities and the Schouten L-infinity structure"},
      {"check-rmatrix", "generalized Maurer-Cartan equation for the r-matrix"},
      {"check-morphism", "L-infinity morphism conditions of the canonical map phi"},
      {"transfer", "transfer r to a triangular L-infinity bialgebra and verify it"},
      {"report", "every check that applies to the file"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--fixture,fixture", o.fixture, "algebra file")->required()->check(CLI::ExistingFile);
    sub->add_option("--max-weight", o.max_weight, "symmetric weight cap W")->check(CLI::PositiveNumber);
    sub->add_option("--max-lambda", o.max_lambda, "lambda-order cap L")->check(CLI::PositiveNumber);
    sub->add_option("--max-arity", o.max_arity, "arity cap A")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--output,-o", output, "write the report here instead of stdout");
    sub->callback([&o, sub] { o.command = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    const int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? kPass : kUsage;
  }

  try {
    CommandResult r = run_command(o);
    if (output.empty()) {
      out << r.report;
    } else {
      std::ofstream f(output, std::ios::binary);
      if (!(f << r.report)) throw UsageError("cannot write " + output);
    }
    if (r.status != kPass) err << "rinfty: checks failed\n";
    return r.status;
  } catch (const UsageError& e) {
    err << "rinfty: " << e.what() << "\n";
  } catch (const InvalidInput& e) {
    err << "rinfty: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace rinfty::cli
