#include "qmds/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qmds/code.hpp"
#include "qmds/entropy.hpp"
#include "qmds/io.hpp"
#include "qmds/sim.hpp"
#include "qmds/verify.hpp"

namespace qmds::cli {

namespace {

/// Where a command gets its code from: a descriptor file or inline flags.
struct CodeSource {
  std::string path;
  std::size_t n = 0, k = 0, d = 0;
  std::uint32_t q = 0;
  std::vector<std::int64_t> alphas;
  CLI::Option* path_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  CLI::Option* q_opt = nullptr;
  CLI::Option* alphas_opt = nullptr;
};

void add_inline_code_options(CLI::App* cmd, CodeSource& src, bool required) {
  src.n_opt = cmd->add_option("--n", src.n, "code length (coded qudits)");
  auto* k = cmd->add_option("--k", src.k, "source qudits");
  auto* d = cmd->add_option("--d", src.d, "minimum distance");
  src.q_opt = cmd->add_option("--q", src.q, "prime field size (default: smallest prime >= n)");
  src.alphas_opt = cmd->add_option("--alphas", src.alphas, "evaluation points a1,a2,...")->delimiter(',');
  if (required) {
    src.n_opt->required();
    k->required();
    d->required();
  } else {
    src.n_opt->needs(k)->needs(d);
  }
}

void add_code_options(CLI::App* cmd, CodeSource& src) {
  src.path_opt = cmd->add_option("--code", src.path, "JSON code descriptor file");
  add_inline_code_options(cmd, src, false);
  src.path_opt->excludes(src.n_opt)->excludes(src.q_opt)->excludes(src.alphas_opt);
}

QuantumMdsCode load_code(const CodeSource& src) {
  if (src.path_opt && src.path_opt->count()) {
    std::ifstream in(src.path);
    if (!in) throw std::invalid_argument("cannot open code descriptor '" + src.path + "'");
    return code_from_json(Json::parse(in));
  }
  if (!src.n_opt->count()) throw std::invalid_argument("a code is required: pass --code FILE or --n/--k/--d");
  CodeParams p{src.n, src.k, src.d, src.q_opt->count() ? src.q : default_field_size(src.n)};
  if (src.alphas_opt->count()) return QuantumMdsCode::construct(p, src.alphas);
  return QuantumMdsCode::construct(p);
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot write '" + out_path + "'");
  file << text;
}

std::string code_label(const CodeParams& p) {
  return "[[" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.d) + "]]_" +
         std::to_string(p.q);
}

void print_report(const Report& report, const std::string& prefix, std::ostream& os) {
  for (const auto& c : report.checks) {
    os << (c.passed() ? "PASS  " : "FAIL  ") << prefix << c.name << "  [" << c.instances << " checked";
    if (!c.passed()) os << ", " << c.violations << " violations";
    os << "]\n";
    for (const auto& ex : c.examples) os << "        " << ex << '\n';
  }
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

int cmd_construct(const CodeSource& src, const std::string& out_path, std::ostream& out) {
  const QuantumMdsCode code = load_code(src);
  emit(code_to_json(code).dump(2) + "\n", out_path, out);
  return kSuccess;
}

int cmd_profile(const CodeSource& src, const std::string& format, bool extended_r,
                const std::string& out_path, std::ostream& out) {
  const QuantumMdsCode code = load_code(src);
  const EntropyProfile profile = full_profile(code, extended_r);
  if (format == "csv")
    emit(profile_to_csv(profile), out_path, out);
  else
    emit(profile_to_json(profile).dump(2) + "\n", out_path, out);
  return kSuccess;
}

int cmd_verify(const CodeSource& src, const std::string& oracle, bool inequalities,
               const std::string& out_path, std::ostream& out) {
  const QuantumMdsCode code = load_code(src);
  const bool use_lemma = oracle != "statevec";
  const bool use_statevec = oracle != "lemma";

  std::ostringstream os;
  bool ok = true;
  os << "code " << code_label(code.params()) << " " << code_to_json(code).dump() << '\n';

  const auto run_suites = [&](const EntropyProfile& profile, const std::string& tag) {
    Report r = check_profile_properties(profile);
    r.append(check_decoding_condition(profile));
    if (inequalities) {
      r.append(check_entropy_inequalities(profile));
      r.append(product_state_checks(profile));
    }
    print_report(r, tag, os);
    ok = ok && r.passed();
  };

  std::optional<EntropyProfile> lemma;
  if (use_lemma) {
    lemma = full_profile(code);
    run_suites(*lemma, "[lemma] ");
  }
  if (use_statevec) {
    const StatevecProfile sv = statevec_profile(code);
    print_report(sv.report, "[statevec] ", os);
    ok = ok && sv.report.passed();
    run_suites(sv.profile, "[statevec] ");
    if (lemma) {
      const OracleComparison cmp = compare_oracles(*lemma, sv);
      print_report(cmp.report, "[both] ", os);
      ok = ok && cmp.report.passed();
      os << "max oracle delta " << std::scientific << std::setprecision(3) << cmp.max_delta << " over "
         << cmp.subsystems << " subsystems\n";
    }
  }
  os << "result " << (ok ? "PASS" : "FAIL") << '\n';
  emit(os.str(), out_path, out);
  return ok ? kSuccess : kVerificationFailed;
}

int cmd_decode_test(const CodeSource& src, const std::vector<std::size_t>& erasures, bool all,
                    const std::string& out_path, std::ostream& out) {
  const QuantumMdsCode code = load_code(src);
  std::vector<DecodeOutcome> outcomes;
  if (!erasures.empty() && !all) {
    outcomes.push_back(run_decode(code, encode_state(code), erasures));
  } else {
    outcomes = run_all_decodes(code);
  }

  std::ostringstream os;
  os << "code " << code_label(code.params()) << '\n';
  bool ok = true;
  for (const auto& o : outcomes) {
    os << (o.passed() ? "PASS" : "FAIL") << "  erased {" << join(o.erased) << "}  fidelity " << std::fixed
       << std::setprecision(12) << o.fidelity << '\n';
    ok = ok && o.passed();
  }
  os << "result " << (ok ? "PASS" : "FAIL") << " (" << outcomes.size() << " patterns)\n";
  emit(os.str(), out_path, out);
  return ok ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum MDS code construction and subsystem-entropy verification", "qmds"};
  app.require_subcommand(1, 1);

  std::string out_path;

  CodeSource construct_src;
  auto* construct = app.add_subcommand("construct", "build a code and print its JSON descriptor");
  add_inline_code_options(construct, construct_src, true);
  construct->add_option("--out", out_path, "write to file instead of stdout");

  CodeSource profile_src;
  std::string format = "json";
  bool extended_r = false;
  auto* profile = app.add_subcommand("profile", "entropy of every subsystem (subspace-intersection oracle)");
  add_code_options(profile, profile_src);
  profile->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  profile->add_flag("--extended-R", extended_r, "also report subsystems holding part of R (no expected value)");
  profile->add_option("--out", out_path, "write to file instead of stdout");

  CodeSource verify_src;
  std::string oracle = "both";
  bool inequalities = false;
  auto* verify = app.add_subcommand("verify", "check the entropy formula and its supporting identities");
  add_code_options(verify, verify_src);
  verify->add_option("--oracle", oracle, "lemma, statevec or both")
      ->check(CLI::IsMember({"lemma", "statevec", "both"}));
  verify->add_flag("--inequalities", inequalities, "also run the entropy-inequality and product-state suites");
  verify->add_option("--out", out_path, "write to file instead of stdout");

  CodeSource decode_src;
  std::vector<std::size_t> erasures;
  bool all = false;
  auto* decode = app.add_subcommand("decode-test", "simulate erasure decoding and report fidelities");
  add_code_options(decode, decode_src);
  auto* erasures_opt = decode->add_option("--erasures", erasures, "erased coded qudits i,j,... (1-based)")
                           ->delimiter(',');
  decode->add_flag("--all", all, "every erasure pattern of size d-1 (default)")->excludes(erasures_opt);
  decode->add_option("--out", out_path, "write to file instead of stdout");

  std::size_t fig_k = 0, fig_d = 0;
  auto* figure = app.add_subcommand("figure", "closed-form (size, entropy) curve as CSV");
  figure->add_option("--k", fig_k, "source qudits")->required();
  figure->add_option("--d", fig_d, "minimum distance")->required();
  figure->add_option("--out", out_path, "write to file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidInput;
  }

  try {
    if (*construct) return cmd_construct(construct_src, out_path, out);
    if (*profile) return cmd_profile(profile_src, format, extended_r, out_path, out);
    if (*verify) return cmd_verify(verify_src, oracle, inequalities, out_path, out);
    if (*decode) {
      if (erasures_opt->count() && erasures.empty())
        throw std::invalid_argument("--erasures needs at least one index");
      return cmd_decode_test(decode_src, erasures, all, out_path, out);
    }
    if (*figure) {
      emit(figure_csv(fig_k, fig_d), out_path, out);
      return kSuccess;
    }
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kInvalidInput;
}

}  // namespace qmds::cli
