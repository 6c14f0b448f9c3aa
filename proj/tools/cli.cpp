#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "copos/copos.hpp"

namespace copos::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { plain, json };

Json rationals(std::span<const Rational> v) {
  Json arr = Json::array();
  for (const auto& c : v) arr.push_back(to_string(c));
  return arr;
}

// Flat key/value report. Exact quantities are always strings.
void emit(const Json& report, Format format, std::ostream& out) {
  if (format == Format::json) {
    out << report.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : report.items()) {
    out << key << ": ";
    if (value.is_array()) {
      out << '[';
      bool first = true;
      for (const auto& e : value) {
        out << (first ? "" : ", ") << (e.is_string() ? e.get<std::string>() : e.dump());
        first = false;
      }
      out << ']';
    } else if (value.is_string()) {
      out << value.get<std::string>();
    } else {
      out << value.dump();
    }
    out << '\n';
  }
}

std::int64_t elapsed_us(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
}

// max_n == 0 selects the method's own default limit.
std::size_t limit_for(MinimizationMethod method, std::size_t max_n) {
  if (max_n != 0) return max_n;
  return method == MinimizationMethod::oracle ? kDefaultOracleMaxN : kDefaultLcpMaxN;
}

MinimizationResult minimize(const SymmetricIntMatrix& m, MinimizationMethod method, std::size_t max_n) {
  const std::size_t limit = limit_for(method, max_n);
  return method == MinimizationMethod::oracle ? face_enumerate_min(m, limit) : solve_box_qp_lcp(m, limit);
}

// Runs the other minimizer and compares the optimal values.
void cross_check(const SymmetricIntMatrix& m, const MinimizationResult& primary, std::size_t max_n) {
  const MinimizationMethod other = primary.method == MinimizationMethod::oracle ? MinimizationMethod::lcp_enumeration
                                                                                : MinimizationMethod::oracle;
  const MinimizationResult second = minimize(m, other, max_n);
  if (second.gamma != primary.gamma)
    throw Error(std::string("minimizers disagree: ") + to_string(primary.method) + " gives " +
                to_string(primary.gamma) + ", " + to_string(other) + " gives " + to_string(second.gamma));
}

void add_encoding(Json& report, const EncodingStats& stats) {
  report["n"] = stats.n;
  report["L"] = stats.L;
  report["d"] = to_string(stats.d);
}

struct Options {
  std::string method = "lcp";
  std::string scheme = "fixed";
  std::string format = "plain";
  std::size_t max_n = 0;
  bool paranoid = false;
  std::string matrix_path;
  std::string vector_path;
  std::string output;
  unsigned k = 1;
  std::size_t n = 2;
  std::string kind = "symmetric";
  std::uint64_t seed = 0;
  std::uint64_t bound = 9;
  bool audit = false;
};

Format format_of(const Options& o) { return o.format == "json" ? Format::json : Format::plain; }

MinimizationMethod method_of(const Options& o) {
  return o.method == "oracle" ? MinimizationMethod::oracle : MinimizationMethod::lcp_enumeration;
}

int cmd_check(const Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const SymmetricIntMatrix m = parse_matrix(read_file(o.matrix_path));
  const MinimizationResult min = minimize(m, method_of(o), o.max_n);
  if (o.paranoid) cross_check(m, min, o.max_n);
  const EncodingStats stats = encoding_length(m);
  const bool copositive = sgn(min.gamma) >= 0;
  const Rational threshold = gamma_threshold(stats.L);

  Json report;
  report["command"] = "check";
  report["verdict"] = copositive ? "copositive" : "not-copositive";
  report["gamma"] = to_string(min.gamma);
  report["argmin"] = rationals(min.argmin);
  add_encoding(report, stats);
  report["gamma_threshold"] = to_string(threshold);
  report["gap_ok"] = copositive || min.gamma <= threshold;
  report["method"] = to_string(min.method);
  if (o.paranoid) report["cross_check"] = "agree";
  report["timing_us"] = elapsed_us(start);
  emit(report, format_of(o), out);
  return copositive ? kExitCopositive : kExitNotCopositive;
}

int cmd_certify(const Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const SymmetricIntMatrix m = parse_matrix(read_file(o.matrix_path));
  const CertificateScheme scheme = o.scheme == "dyadic" ? CertificateScheme::dyadic : CertificateScheme::fixed_denominator;
  CertifyOptions options;
  options.method = method_of(o);
  options.max_n = limit_for(options.method, o.max_n);

  Json report;
  report["command"] = "certify";
  CertificateReport cert;
  try {
    cert = certify_noncopositive(m, scheme, options);
  } catch (const CopositiveInput& e) {
    report["verdict"] = "copositive";
    report["gamma"] = to_string(Rational(0));
    add_encoding(report, encoding_length(m));
    report["message"] = e.what();
    report["timing_us"] = elapsed_us(start);
    emit(report, format_of(o), out);
    return kExitNoCertificate;
  }
  if (o.paranoid) {
    MinimizationResult primary;
    primary.gamma = cert.gamma;
    primary.method = cert.method;
    cross_check(m, primary, o.max_n);
    if (!verify_certificate(m, cert.y).valid) throw Error("constructed certificate failed verification");
  }

  report["verdict"] = "not-copositive";
  report["gamma"] = to_string(cert.gamma);
  report["argmin"] = rationals(cert.argmin);
  add_encoding(report, encoding_length(m));
  report["method"] = to_string(cert.method);
  report["scheme"] = to_string(cert.scheme);
  report["spacing_denominator"] = to_string(cert.spacing_denominator);
  report["certificate"] = rationals(cert.y);
  report["value"] = to_string(cert.value);
  report["measured_bits"] = cert.measured_bits;
  report["bound_17L^(3/2)"] =
      within_complexity_bound(cert.measured_bits, cert.L, CertificateScheme::fixed_denominator) ? "ok" : "exceeded";
  report["bound_10L^(3/2)"] =
      within_complexity_bound(cert.measured_bits, cert.L, CertificateScheme::dyadic) ? "ok" : "exceeded";
  report["bound_ok"] = cert.bound_bits_ok;
  if (o.paranoid) report["cross_check"] = "agree";
  report["timing_us"] = elapsed_us(start);
  if (!o.output.empty()) {
    write_file(o.output, serialize_vector(cert.y));
    report["certificate_file"] = o.output;
  }
  emit(report, format_of(o), out);
  return kExitNotCopositive;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const SymmetricIntMatrix m = parse_matrix(read_file(o.matrix_path));
  const RationalVector y = parse_vector(read_file(o.vector_path));
  const Verification v = verify_certificate(m, y);
  Json report;
  report["command"] = "verify";
  report["valid"] = v.valid;
  report["value"] = to_string(v.value);
  if (!v.valid) report["reason"] = v.reason;
  emit(report, format_of(o), out);
  return v.valid ? kExitCopositive : kExitNotCopositive;
}

void write_matrix(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
  } else {
    write_file(o.output, text);
  }
}

std::string audit_lines(const SymmetricIntMatrix& m, std::optional<std::uint64_t> published) {
  std::string text = "# L (per-entry count): " + std::to_string(encoding_length(m).L) + "\n";
  if (published) text += "# L (closed form 3k+10+n(n+1)/2-3): " + std::to_string(*published) + "\n";
  return text;
}

int cmd_gen_adversarial(const Options& o, std::ostream& out, std::size_t n) {
  const AdversarialInstance inst = adversarial_instance(o.k, n);
  std::string text = serialize_matrix(inst.matrix);
  if (o.audit) text += audit_lines(inst.matrix, inst.published_L);
  write_matrix(o, text, out);
  return 0;
}

int cmd_gen_random(const Options& o, std::ostream& out) {
  const auto kind = parse_instance_kind(o.kind);
  if (!kind) throw ParseError("unknown instance kind '" + o.kind + "'");
  const SymmetricIntMatrix m = random_instance(*kind, o.n, o.bound, o.seed);
  std::string text = "# random " + std::string(to_string(*kind)) + " n=" + std::to_string(o.n) +
                     " bound=" + std::to_string(o.bound) + " seed=" + std::to_string(o.seed) + "\n";
  text += serialize_matrix(m);
  if (o.audit) text += audit_lines(m, std::nullopt);
  write_matrix(o, text, out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact copositivity checks and short non-copositivity certificates for symmetric integer matrices",
               "copos"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"plain", "json"}));
  };
  auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--method", o.method, "Minimizer used for the box minimum")
        ->check(CLI::IsMember({"lcp", "oracle"}));
    sub->add_flag("--paranoid", o.paranoid, "Run both minimizers and require exact agreement");
    sub->add_option("--max-n", o.max_n, "Largest dimension accepted for exhaustive enumeration (default 12 for lcp, 10 for oracle)")
        ->check(CLI::Range(1, 31));
  };

  CLI::App* check = app.add_subcommand("check", "Decide copositivity and report the exact box minimum");
  check->add_option("matrix", o.matrix_path, "Matrix file")->required();
  add_solver(check);
  add_common(check);

  CLI::App* certify = app.add_subcommand("certify", "Construct a short non-copositivity certificate");
  certify->add_option("matrix", o.matrix_path, "Matrix file")->required();
  certify->add_option("--scheme", o.scheme, "Rounding grid")->check(CLI::IsMember({"fixed", "dyadic"}));
  certify->add_option("-o,--output", o.output, "Write the certificate vector to this file");
  add_solver(certify);
  add_common(certify);

  CLI::App* verify = app.add_subcommand("verify", "Check that a vector certifies non-copositivity");
  verify->add_option("matrix", o.matrix_path, "Matrix file")->required();
  verify->add_option("vector", o.vector_path, "Vector file, one p/q per line")->required();
  add_common(verify);

  CLI::App* gen = app.add_subcommand("gen", "Generate matrix files");
  gen->require_subcommand(1);
  CLI::App* gen_adv = gen->add_subcommand("remark-b", "2x2 matrix forcing certificates of at least k+1 bits");
  gen_adv->alias("adversarial");
  gen_adv->add_option("--k", o.k, "Family parameter")->required()->check(CLI::Range(1u, 4096u));
  CLI::App* gen_embed = gen->add_subcommand("embed", "Adversarial matrix padded with zeros to n x n");
  gen_embed->add_option("--k", o.k, "Family parameter")->required()->check(CLI::Range(1u, 4096u));
  gen_embed->add_option("--n", o.n, "Dimension of the padded matrix")->required()->check(CLI::Range(2, 4096));
  CLI::App* gen_random = gen->add_subcommand("random", "Seeded random instance");
  gen_random->add_option("--kind", o.kind, "Instance family")->check(CLI::IsMember({"symmetric", "nonnegative", "psd"}));
  gen_random->add_option("--n", o.n, "Dimension")->required()->check(CLI::Range(1, 4096));
  gen_random->add_option("--seed", o.seed, "Generator seed");
  gen_random->add_option("--bound", o.bound, "Entry bound")->check(CLI::Range(1, 1 << 30));
  for (CLI::App* sub : {gen_adv, gen_embed, gen_random}) {
    sub->add_option("-o,--output", o.output, "Output file (default: standard output)");
    sub->add_flag("--audit", o.audit, "Append encoding-length comments");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "copos: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*certify) return cmd_certify(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*gen_adv) return cmd_gen_adversarial(o, out, 2);
    if (*gen_embed) return cmd_gen_adversarial(o, out, o.n);
    if (*gen_random) return cmd_gen_random(o, out);
  } catch (const Error& e) {
    err << "copos: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace copos::cli
