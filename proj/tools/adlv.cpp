// Command-line front end: reduce an affine Weyl group element to an elliptic
// certificate, verify certificates, classify single elements, and run the
// exhaustive verification sweeps.
//
// Exit codes: 0 success / verified non-empty, 1 failed verdict or failed
// verification, 2 bad input or precondition failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "adlv/json_io.hpp"
#include "adlv/reduction.hpp"
#include "adlv/verification.hpp"

namespace {

using namespace adlv;

struct GroupArgs {
  std::string mode = "SL";
  int rank = 0;
};

void add_group_options(CLI::App& cmd, GroupArgs& args) {
  cmd.add_option("--group", args.mode, "Group mode: GL, SL, C2, G2")
      ->check(CLI::IsMember({"GL", "SL", "C2", "G2"}));
  cmd.add_option("--rank", args.rank, "Matrix size n for GL_n/SL_n (2 for C2/G2)");
}

std::shared_ptr<const Group> make_group(const GroupArgs& args) {
  if (args.mode == "C2") return Group::make(GroupMode::C2, 2);
  if (args.mode == "G2") return Group::make(GroupMode::G2, 2);
  if (args.rank < 2) throw std::invalid_argument("--rank is required for GL/SL");
  return Group::make(args.mode == "GL" ? GroupMode::GL : GroupMode::SL, args.rank);
}

struct ElementArgs {
  std::string mu, v, lambda, w, element;
};

void add_element_options(CLI::App& cmd, ElementArgs& args) {
  cmd.add_option("--mu", args.mu, "Dominant cocharacter, e.g. 2,1,0,-1,-2");
  cmd.add_option("--v", args.v, "Chamber word applied to mu (default identity)");
  cmd.add_option("--lambda", args.lambda, "Raw translation part (alternative to --mu)");
  cmd.add_option("--w", args.w, "Finite part as a generator word or [one-line]");
  cmd.add_option("element", args.element, "Element as t[lambda] * w[word]");
}

AffineElement build_element(const std::shared_ptr<const Group>& G, const ElementArgs& args) {
  if (!args.element.empty()) return parse_affine(args.element, G);
  if (args.w.empty()) throw std::invalid_argument("--w (or a positional element) is required");
  FiniteElement w = parse_finite(args.w, G->weyl());
  if (!args.lambda.empty()) {
    if (!args.mu.empty() || !args.v.empty())
      throw std::invalid_argument("--lambda excludes --mu/--v");
    return AffineElement(G, parse_cocharacter(args.lambda), w);
  }
  if (args.mu.empty()) throw std::invalid_argument("either --mu or --lambda is required");
  Cocharacter mu = parse_cocharacter(args.mu);
  if (!is_dominant(G->weyl(), mu))
    throw std::invalid_argument("--mu must be dominant; pass raw --lambda instead");
  FiniteElement v =
      args.v.empty() ? G->weyl().identity() : parse_finite(args.v, G->weyl());
  AffineElement x(G, act(v, mu), w);
  // Cross-check the requested chamber against the recomputed decomposition.
  if (act(x.chamber_part(), x.dominant_part()) != x.lambda() ||
      x.dominant_part() != decompose(G->weyl(), act(v, mu)).mu)
    throw std::invalid_argument("inconsistent (v, mu) decomposition");
  return x;
}

void print_certificate_text(std::ostream& os, const ReductionCertificate& cert) {
  os << "start:    " << cert.start().str() << "  (" << cert.start().group().name()
     << ", kappa " << cert.kappa().value << ")\n";
  int i = 0;
  for (const ReductionStep& step : cert.steps()) {
    os << "step " << ++i << ":   s" << step.generator << "  case " << case_name(step.label)
       << "  -> " << step.after.str() << "   lengths [" << step.lengths.lx << ", "
       << step.lengths.lsx << ", " << step.lengths.lxs << ", " << step.lengths.lsxs
       << "]\n";
  }
  os << "terminal: " << cert.terminal().str()
     << (cert.terminal_elliptic() ? "  (elliptic)" : "  (NOT elliptic)") << "\n";
}

int cmd_reduce(const GroupArgs& group_args, const ElementArgs& element_args,
               std::optional<long long> kappa, const std::string& format,
               const std::string& out_path) {
  auto G = make_group(group_args);
  AffineElement x = build_element(G, element_args);
  ReductionCertificate cert = reduce(x);
  if (VerifyResult vr = verify_certificate(cert); !vr) {
    std::cerr << "internal error: emitted certificate failed verification at step "
              << vr.failed_step << ": " << vr.reason << "\n";
    return 2;
  }

  std::string payload = to_json(cert).dump(2) + "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << payload;
  }
  if (format == "json")
    std::cout << payload;
  else
    print_certificate_text(std::cout, cert);

  KottwitzPoint b{G->mode(), kappa.value_or(0)};
  bool nonempty = cert.verdict(b);
  if (format != "json")
    std::cout << "verdict:  " << (nonempty ? "non-empty" : "empty (Kottwitz mismatch)")
              << " for kappa_b = " << b.value << "\n";
  return nonempty ? 0 : 1;
}

int cmd_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    return 2;
  }
  nlohmann::json j;
  ReductionCertificate cert = [&] {
    try {
      in >> j;
      return certificate_from_json(j);
    } catch (const std::exception& e) {
      throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
    }
  }();
  VerifyResult vr = verify_certificate(cert);
  if (!vr) {
    std::cout << "FAIL at step " << vr.failed_step << ": " << vr.reason << "\n";
    return 1;
  }
  std::cout << "OK: " << cert.steps().size() << " steps, terminal "
            << (cert.terminal_elliptic() ? "elliptic" : "not elliptic") << "\n";
  return 0;
}

int cmd_classify(const GroupArgs& group_args, const ElementArgs& element_args,
                 const std::string& format) {
  auto G = make_group(group_args);
  AffineElement x = build_element(G, element_args);
  const CoxeterSystem& W = G->weyl();

  nlohmann::json j;
  j["element"] = x.str();
  j["group"] = G->name();
  j["additive"] = is_additive(x);
  j["reuman_type"] = is_reuman_type(x);
  j["elliptic"] = is_elliptic(x.finite_part());
  j["dominant"] = is_dominant(W, x.lambda());
  j["regular"] = is_regular(W, x.lambda());
  j["kappa"] = kottwitz_point(x).value;
  j["length_oracle"] = affine_length_oracle(x);
  if (x.lambda().is_zero() || is_regular_dominant(W, x.dominant_part()))
    j["length"] = affine_length(x);
  j["finite_length"] = x.finite_part().length();

  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& [key, value] : j.items())
      std::cout << key << ": " << value.dump() << "\n";
  }
  return 0;
}

int cmd_sweep(const GroupArgs& group_args, const std::string& suite, SweepOptions opt,
              const std::vector<std::string>& mu_args, const std::string& format) {
  auto G = make_group(group_args);
  for (const std::string& text : mu_args) opt.mu_list.push_back(parse_cocharacter(text));
  std::vector<VerificationReport> reports = run_suite(suite, G, opt);

  nlohmann::json j = nlohmann::json::array();
  bool all_ok = true;
  for (const VerificationReport& r : reports) {
    j.push_back(to_json(r));
    all_ok &= r.passed();
    if (format != "json")
      std::cout << (r.skipped ? "[skip] " : (r.passed() ? "[pass] " : "[FAIL] ")) << r.lemma
                << " (" << r.group << "): checked " << r.checked
                << (r.counterexamples.empty()
                        ? ""
                        : ", first counterexample: " + r.counterexamples.front())
                << "\n";
  }
  if (format == "json") std::cout << j.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine Weyl group reduction certificates"};
  app.require_subcommand(1);

  GroupArgs group_args;
  ElementArgs element_args;
  std::string format = "text";
  std::string out_path;
  std::optional<long long> kappa;
  std::string cert_path;
  std::string suite;
  SweepOptions sweep_opt;
  std::vector<std::string> mu_args;

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "Reduce to an elliptic certificate");
  add_group_options(*reduce_cmd, group_args);
  add_element_options(*reduce_cmd, element_args);
  long long kappa_value = 0;
  CLI::Option* kappa_opt =
      reduce_cmd->add_option("--kappa", kappa_value, "Kottwitz point of b");
  reduce_cmd->add_option("--format", format, "Output: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  reduce_cmd->add_option("--out", out_path, "Also write the certificate JSON here");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Re-verify a certificate file");
  verify_cmd->add_option("certificate", cert_path, "Certificate JSON file")->required();

  CLI::App* classify_cmd = app.add_subcommand("classify", "Print flags for one element");
  add_group_options(*classify_cmd, group_args);
  add_element_options(*classify_cmd, element_args);
  classify_cmd->add_option("--format", format, "Output: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run an exhaustive verification suite");
  add_group_options(*sweep_cmd, group_args);
  sweep_cmd->add_option("--suite", suite, "lengths, lemmas, geck-pfeiffer, reduction, invariants, all")
      ->required();
  sweep_cmd->add_option("--samples", sweep_opt.samples, "Random cocharacter count");
  sweep_cmd->add_option("--seed", sweep_opt.seed, "Random seed");
  sweep_cmd->add_option("--threads", sweep_opt.threads, "Worker cap (0: WEYL_REDUCE_THREADS)");
  sweep_cmd->add_option("--mu", mu_args, "Cocharacter(s) for the reduction suite");
  sweep_cmd->add_option("--format", format, "Output: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (reduce_cmd->parsed()) {
      if (*kappa_opt) kappa = kappa_value;
      return cmd_reduce(group_args, element_args, kappa, format, out_path);
    }
    if (verify_cmd->parsed()) return cmd_verify(cert_path);
    if (classify_cmd->parsed()) return cmd_classify(group_args, element_args, format);
    if (sweep_cmd->parsed()) return cmd_sweep(group_args, suite, sweep_opt, mu_args, format);
  } catch (const ReductionStuckError& e) {
    std::cerr << "finding: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
