#include "qnm/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <ostream>

#include <CLI11.hpp>

#include "qnm/attack.hpp"
#include "qnm/constructions.hpp"
#include "qnm/design.hpp"
#include "qnm/io.hpp"
#include "qnm/weyl.hpp"

namespace qnm::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::size_t parse_index(std::string_view s, const char* what) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw UsageError(std::string("invalid ") + what + " '" + std::string(s) + "'");
  return v;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << text;
  else
    write_text(out_path, text);
}

struct GenOptions {
  std::size_t p = 2;
  std::size_t qudits = 1;
  std::size_t d = 2;
  std::size_t n = 1;
  std::uint64_t seed = 0;
  std::string from = "clifford";
  std::string out;
};

struct CertifyOptions {
  std::string input;
  double tol = kDefaultTol;
  std::string mode = "trace";
  std::string out;
};

struct AttackOptions {
  std::string scheme;
  std::string adversary;
  std::string out;
};

struct BoundsOptions {
  std::size_t d = 2;
  double theta = 0.0;
  double delta = 0.01;
};

int cmd_gen(const std::string& kind, const GenOptions& o, std::ostream& out) {
  UnitaryEnsemble e = [&] {
    if (kind == "pauli") return pauli_ensemble(o.p, o.qudits);
    if (kind == "clifford") return clifford_prime(o.p);
    return sample_design(SamplerConfig{.d = o.d, .n_samples = o.n, .seed = o.seed,
                                       .source = parse_sample_source(o.from)});
  }();
  emit(dump(ensemble_to_json(e)), o.out, out);
  return kPass;
}

int cmd_certify(const CertifyOptions& o, std::ostream& out, std::ostream& err) {
  if (o.mode != "trace" && o.mode != "multiplicative" && o.mode != "both")
    throw UsageError("--mode must be trace, multiplicative or both");
  if (!(o.tol >= 0.0)) throw UsageError("--tol must be nonnegative");
  const std::string text = read_text(o.input);
  const UnitaryEnsemble e = ensemble_from_json(parse_json(text));
  const CertificationReport r = certify_design(e, o.tol);
  Json body = report_to_json(r);
  body["mode"] = o.mode;
  bool pass = false;
  if (o.mode == "trace")
    pass = r.passes_2design_trace;
  else if (o.mode == "multiplicative")
    pass = r.passes_2design_multiplicative;
  else
    pass = r.passes_2design_trace && r.passes_2design_multiplicative;
  body["passes"] = pass;
  emit(dump(report_file("certification", std::move(body), sha256_hex(text))), o.out, out);
  if (!pass)
    err << "ensemble is not a 2-design at tol " << o.tol << " (" << o.mode << " mode)\n";
  return pass ? kPass : kCertifyFail;
}

int cmd_attack(const AttackOptions& o, std::ostream& out) {
  const std::string text = read_text(o.scheme);
  const EncryptionScheme scheme(ensemble_from_json(parse_json(text)));
  AttackReport r = [&] {
    if (o.adversary.starts_with("weyl:")) {
      const std::string_view rest = std::string_view(o.adversary).substr(5);
      const auto comma = rest.find(',');
      if (comma == std::string_view::npos) throw UsageError("weyl adversary expects weyl:<a>,<b>");
      return pauli_attack(scheme, parse_index(rest.substr(0, comma), "Weyl exponent"),
                          parse_index(rest.substr(comma + 1), "Weyl exponent"));
    }
    return attack_report(scheme, parse_adversary(o.adversary, scheme.dim()));
  }();
  Json body = attack_report_to_json(r);
  body["adversary"] = o.adversary;
  std::string digest_input = text;
  digest_input.push_back('\0');
  digest_input += o.adversary;
  emit(dump(report_file("attack", std::move(body), sha256_hex(digest_input))), o.out, out);
  return kPass;
}

int cmd_bounds(const BoundsOptions& o, std::ostream& out, std::ostream& err) {
  if (o.d < 2) throw UsageError("--d must be at least 2");
  const double d = static_cast<double>(o.d);
  const std::size_t clifford_size = o.d * o.d * o.d * o.d * o.d - o.d * o.d * o.d;
  Json j{{"d", o.d},
         {"theta", o.theta},
         {"delta", o.delta},
         {"rank_bound", rank_lower_bound(o.d)},
         {"conjectured_rank_bound", o.d * o.d * (o.d * o.d - 1)},
         {"key_bits_4logd", 4.0 * std::log2(d)},
         {"key_bits_5logd", 5.0 * std::log2(d)},
         {"clifford_design_size", clifford_size},
         {"clifford_key_bits", std::log2(static_cast<double>(clifford_size))}};
  int code = kPass;
  try {
    j["entropy_bound_bits"] = entropy_bound(o.d, o.theta);
  } catch (const DomainError& e) {
    j["entropy_bound_bits"] = nullptr;
    err << "entropy bound: " << e.what() << "\n";
    code = kUsage;
  }
  try {
    j["recommended_n"] = recommended_n(o.d, o.theta, o.delta);
  } catch (const DomainError& e) {
    j["recommended_n"] = nullptr;
    err << "recommended_n: " << e.what() << "\n";
  }
  out << dump(j);
  return code;
}

}  // namespace

double default_tolerance() {
  const char* env = std::getenv("QNM_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTol;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v >= 0.0)) throw UsageError("QNM_TOL is not a nonnegative number");
  return v;
}

KrausChannel parse_adversary(const std::string& spec, std::size_t d) {
  auto load_matrix = [](const std::string& path) { return matrix_from_json(parse_json(read_text(path))); };

  if (spec == "identity") return identity_channel(d);
  if (spec == "depolarize") return depolarizing_channel(d);
  if (spec.starts_with("replace:")) {
    const std::string arg = spec.substr(8);
    if (arg == "tau") return depolarizing_channel(d);
    if (!arg.empty() && std::all_of(arg.begin(), arg.end(), [](char c) { return std::isdigit(c); })) {
      const std::size_t k = parse_index(arg, "basis index");
      if (k >= d) throw UsageError("replace: basis index out of range");
      return constant_channel(ket_bra(d, k, k));
    }
    return constant_channel(load_matrix(arg));
  }
  if (spec.starts_with("weyl:")) {
    const std::string_view rest = std::string_view(spec).substr(5);
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw UsageError("weyl adversary expects weyl:<a>,<b>");
    return unitary_channel(weyl(WeylIndex(d, parse_index(rest.substr(0, comma), "Weyl exponent"),
                                          parse_index(rest.substr(comma + 1), "Weyl exponent"))));
  }
  if (spec.starts_with("unitary:")) {
    const ComplexMatrix u = load_matrix(spec.substr(8));
    if (!is_square(u) || !(unitarity_defect(u) <= kUnitarityIngestTol))
      throw ValidationError("unitary adversary is not a unitary matrix");
    return unitary_channel(u);
  }
  const std::string path = spec.starts_with("kraus:") ? spec.substr(6) : spec;
  if (!std::filesystem::exists(path)) throw UsageError("unknown adversary '" + spec + "'");
  return kraus_from_json(parse_json(read_text(path)));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build, certify and attack non-malleable quantum encryption schemes (unitary 2-designs)", "qnm"};
  app.require_subcommand(1);

  GenOptions gen_opts;
  CertifyOptions cert_opts;
  AttackOptions atk_opts;
  BoundsOptions bnd_opts;

  auto* gen = app.add_subcommand("gen", "Generate an ensemble file");
  gen->require_subcommand(1);
  auto* gen_pauli = gen->add_subcommand("pauli", "Weyl/Pauli one-time pad on n qudits of prime dimension p");
  gen_pauli->add_option("--p", gen_opts.p, "Prime local dimension")->required();
  gen_pauli->add_option("--n", gen_opts.qudits, "Number of qudits")->capture_default_str();
  gen_pauli->add_option("-o,--out", gen_opts.out, "Output file (default stdout)");
  auto* gen_cliff = gen->add_subcommand("clifford", "Clifford group modulo phases at prime p <= 5");
  gen_cliff->add_option("--p", gen_opts.p, "Prime dimension")->required();
  gen_cliff->add_option("-o,--out", gen_opts.out, "Output file (default stdout)");
  auto* gen_sampled = gen->add_subcommand("sampled", "N i.i.d. draws from the Clifford group or Haar measure");
  gen_sampled->add_option("--d", gen_opts.d, "Dimension")->required();
  gen_sampled->add_option("--n", gen_opts.n, "Number of draws")->required();
  gen_sampled->add_option("--seed", gen_opts.seed, "Seed")->capture_default_str();
  gen_sampled->add_option("--from", gen_opts.from, "Source: clifford or haar")->capture_default_str();
  gen_sampled->add_option("-o,--out", gen_opts.out, "Output file (default stdout)");

  auto* certify = app.add_subcommand("certify", "Certify an ensemble file as a unitary 2-design");
  certify->add_option("input", cert_opts.input, "Ensemble file")->required();
  certify->add_option("--tol", cert_opts.tol, "Pass tolerance (default QNM_TOL or 1e-9)");
  certify->add_option("--mode", cert_opts.mode, "trace, multiplicative or both")->capture_default_str();
  certify->add_option("-o,--out", cert_opts.out, "Report file (default stdout)");

  auto* attack = app.add_subcommand("attack", "Effective channel of an adversary against a scheme");
  attack->add_option("--scheme", atk_opts.scheme, "Ensemble file")->required();
  attack->add_option("--adv", atk_opts.adversary, "Adversary preset or Kraus file")->required();
  attack->add_option("-o,--out", atk_opts.out, "Report file (default stdout)");

  auto* bounds = app.add_subcommand("bounds", "Rank, entropy and sample-size bounds");
  bounds->add_option("--d", bnd_opts.d, "Dimension")->required();
  bounds->add_option("--theta", bnd_opts.theta, "Approximation parameter")->capture_default_str();
  bounds->add_option("--delta", bnd_opts.delta, "Failure probability for recommended_n")->capture_default_str();

  std::vector<const char*> argv{"qnm"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    cert_opts.tol = default_tolerance();
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      const std::string kind = gen_pauli->parsed() ? "pauli" : gen_cliff->parsed() ? "clifford" : "sampled";
      return cmd_gen(kind, gen_opts, out);
    }
    if (certify->parsed()) return cmd_certify(cert_opts, out, err);
    if (attack->parsed()) return cmd_attack(atk_opts, out);
    return cmd_bounds(bnd_opts, out, err);
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace qnm::cli
