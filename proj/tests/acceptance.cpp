// Acceptance suite: one line per criterion, non-zero exit if any fails.
// All comparisons are exact (rational or integer); there are no tolerances.

#include <chrono>
#include <unistd.h>

#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "copos/copos.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace copos;

namespace {

constexpr std::size_t kRandomInstances = 200;
constexpr std::uint64_t kSeedBase = 20240601;

struct Instance {
  SymmetricIntMatrix matrix{1};
  EncodingStats stats;
  MinimizationResult lcp;
  MinimizationResult oracle;
};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

std::vector<Instance> g_random;
double g_setup_seconds = 0;

void prepare() {
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < kRandomInstances; ++i) {
    Instance inst;
    inst.matrix = random_instance(InstanceKind::symmetric, 1 + i % 4, 9, kSeedBase + i);
    inst.stats = encoding_length(inst.matrix);
    inst.lcp = solve_box_qp_lcp(inst.matrix);
    inst.oracle = face_enumerate_min(inst.matrix);
    g_random.push_back(std::move(inst));
  }
  g_setup_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool copositive(const Instance& inst) { return sgn(inst.oracle.gamma) >= 0; }

void criterion_dichotomy(Outcome& o) {
  std::size_t zero = 0;
  std::size_t negative = 0;
  for (const auto& inst : g_random) {
    const Rational& gamma = inst.lcp.gamma;
    if (sgn(gamma) == 0) {
      ++zero;
    } else if (gamma <= gamma_threshold(inst.stats.L)) {
      ++negative;
    } else {
      o.fail("gamma " + to_string(gamma) + " strictly between threshold and 0");
    }
  }
  if (g_setup_seconds >= 60) o.fail("minimization of all instances took over a minute");
  o.detail << zero << " copositive, " << negative << " with gamma <= -2^(-2L+1); minimization time "
           << static_cast<long>(g_setup_seconds * 1000) << " ms";
}

void criterion_agreement(Outcome& o) {
  std::size_t compared = 0;
  for (const auto& inst : g_random) {
    ++compared;
    if (inst.lcp.gamma != inst.oracle.gamma) o.fail("gamma mismatch on " + serialize_matrix(inst.matrix));
    if ((sgn(inst.lcp.gamma) >= 0) != (sgn(inst.oracle.gamma) >= 0)) o.fail("verdict mismatch");
  }
  for (unsigned k = 1; k <= 5; ++k) {
    const auto m = adversarial_matrix(k);
    ++compared;
    if (solve_box_qp_lcp(m).gamma != face_enumerate_min(m).gamma) o.fail("family k=" + std::to_string(k));
  }
  o.detail << compared << " instances compared exactly";
}

void criterion_theorem_bound(Outcome& o) {
  std::size_t certified = 0;
  std::uint64_t worst_fixed_num = 0;
  std::uint64_t worst_fixed_L = 1;
  for (const auto& inst : g_random) {
    if (copositive(inst)) continue;
    ++certified;
    const CertificateReport fixed = certify_noncopositive(inst.matrix, CertificateScheme::fixed_denominator);
    const CertificateReport dyadic = certify_noncopositive(inst.matrix, CertificateScheme::dyadic);
    if (sgn(fixed.value) >= 0) o.fail("fixed certificate not negative");
    if (sgn(dyadic.value) >= 0) o.fail("dyadic certificate not negative");
    const Integer L3 = Integer(static_cast<unsigned long>(inst.stats.L)) * inst.stats.L * inst.stats.L;
    const Integer fb = Integer(static_cast<unsigned long>(fixed.measured_bits));
    const Integer db = Integer(static_cast<unsigned long>(dyadic.measured_bits));
    if (!(fb * fb <= 289 * L3)) o.fail("fixed bits " + std::to_string(fixed.measured_bits) + " exceed 17 L^(3/2)");
    if (!(db * db <= 100 * L3)) o.fail("dyadic bits " + std::to_string(dyadic.measured_bits) + " exceed 10 L^(3/2)");
    if (!fixed.bound_bits_ok || !dyadic.bound_bits_ok) o.fail("report verdict disagrees");
    // track the largest bits/L^(3/2) ratio via bits^2/L^3
    if (fixed.measured_bits * fixed.measured_bits * worst_fixed_L * worst_fixed_L * worst_fixed_L >
        worst_fixed_num * worst_fixed_num * inst.stats.L * inst.stats.L * inst.stats.L) {
      worst_fixed_num = fixed.measured_bits;
      worst_fixed_L = inst.stats.L;
    }
  }
  if (certified == 0) o.fail("no non-copositive instances");
  o.detail << certified << " certified under both schemes; tightest fixed case " << worst_fixed_num << " bits at L="
           << worst_fixed_L;
}

void criterion_adversarial(Outcome& o) {
  for (unsigned k = 1; k <= 5; ++k) {
    const auto m = adversarial_matrix(k);
    const std::string tag = "k=" + std::to_string(k);
    if (face_enumerate_min(m).gamma != -1) o.fail(tag + " oracle gamma != -1");
    if (solve_box_qp_lcp(m).gamma != -1) o.fail(tag + " lcp gamma != -1");
    for (CertificateScheme scheme : {CertificateScheme::fixed_denominator, CertificateScheme::dyadic}) {
      const CertificateReport r = certify_noncopositive(m, scheme);
      if (!in_certificate_cone(k, r.y)) o.fail(tag + " certificate outside the cone");
      if (r.measured_bits < k + 1) o.fail(tag + " certificate shorter than k+1 bits");
    }
  }
  o.detail << "k=1..5: gamma=-1, certificates in (1/2^(k+1), 3/2^(k+1)), >= k+1 bits";
}

void criterion_encoding(Outcome& o) {
  for (unsigned k = 1; k <= 5; ++k) {
    const AdversarialInstance inst = adversarial_instance(k);
    const std::uint64_t L = encoding_length(inst.matrix).L;
    if (L != 3 * k + 11) o.fail("k=" + std::to_string(k) + " L=" + std::to_string(L));
    o.detail << "k=" << k << ": L=" << L << " (quoted " << inst.published_L << ") ";
  }
  o.detail << "- the quoted closed form 3k+10 omits one sign bit";
}

void criterion_determinants(Outcome& o) {
  std::size_t bases = 0;
  for (const auto& inst : g_random) {
    const Integer bound = determinant_bound(inst.stats.L);
    for_each_complementary_pattern(build_system(inst.matrix), [&](const PatternOutcome& p) {
      if (p.det == 0) return;
      ++bases;
      if (abs(p.det) > bound) o.fail("|det B| = " + p.det.get_str() + " above 2^(2L-1)");
    });
    for (const auto& sol : enumerate_complementary_solutions(inst.matrix)) {
      if (sol.basis_det && !check_basis_determinant_bound(sol, inst.stats)) o.fail("recorded basis over bound");
    }
  }
  o.detail << bases << " nonsingular complementary bases checked";
}

void criterion_classifier(Outcome& o) {
  std::size_t checked = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const std::size_t n = 1 + i % 4;
    if (!is_copositive(random_instance(InstanceKind::nonnegative, n, 9, kSeedBase + 5000 + i)))
      o.fail("nonnegative instance classified non-copositive");
    if (!is_copositive(random_instance(InstanceKind::psd, n, 3, kSeedBase + 6000 + i)))
      o.fail("psd instance classified non-copositive");
    checked += 2;
  }
  std::size_t negative_diag = 0;
  auto has_negative_diagonal = [](const SymmetricIntMatrix& m) {
    for (std::size_t i = 0; i < m.dim(); ++i)
      if (m(i, i) < 0) return true;
    return false;
  };
  for (const auto& inst : g_random) {
    if (!has_negative_diagonal(inst.matrix)) continue;
    ++negative_diag;
    if (copositive(inst)) o.fail("negative diagonal classified copositive");
  }
  for (std::uint64_t i = 0; i < 50; ++i) {
    const std::size_t n = 1 + i % 4;
    const auto base = random_instance(InstanceKind::nonnegative, n, 9, kSeedBase + 7000 + i);
    std::vector<Integer> upper(base.upper().begin(), base.upper().end());
    // diagonal entry (j, j) sits at offset j*n - j(j-1)/2
    const std::size_t j = i % n;
    upper[j * n - j * (j - 1) / 2] = -1 - static_cast<long>(i % 9);
    ++negative_diag;
    if (is_copositive(SymmetricIntMatrix::from_upper(n, std::move(upper))))
      o.fail("negative diagonal classified copositive");
  }
  o.detail << checked << " nonnegative/psd copositive, " << negative_diag << " negative-diagonal non-copositive";
}

void criterion_kkt(Outcome& o) {
  std::size_t witnesses = 0;
  for (const auto& inst : g_random) {
    if (copositive(inst)) continue;
    const ComplementarySolution w = kkt_witness(inst.matrix, inst.lcp.argmin);
    const LcpSystem sys = build_system(inst.matrix);
    for (const auto& problem : validate_solution(sys, w.s)) o.fail(problem);
    Rational sum_y = 0;
    for (const auto& c : w.y()) sum_y += c;
    if (quadratic_form(inst.matrix, w.x()) != -sum_y) o.fail("x^T M x != -e^T y");
    ++witnesses;
  }
  o.detail << witnesses << " witnesses satisfy the linear system, complementarity and x^T M x = -e^T y";
}

void criterion_purification(Outcome& o) {
  std::size_t runs = 0;
  std::size_t moved = 0;
  auto process = [&](const SymmetricIntMatrix& m) {
    const LcpSystem sys = build_system(m);
    const auto sols = enumerate_complementary_solutions(m);
    for (std::size_t a = 0; a < sols.size(); ++a) {
      for (std::size_t b = a + 1; b < sols.size(); ++b) {
        if (!testing::shares_complementary_pattern(sys, sols[a].s, sols[b].s)) continue;
        RationalVector mid(sys.cols());
        for (std::size_t j = 0; j < mid.size(); ++j) mid[j] = (sols[a].s[j] + sols[b].s[j]) / 2;
        const ComplementarySolution start = make_solution(std::move(mid));
        const PurifyResult p = purify_to_bfs(sys, start);
        ++runs;
        if (p.steps > 0) ++moved;
        if (p.steps > 2 * sys.n) o.fail("more than 2n steps");
        if (quadratic_form(m, p.solution.x()) != quadratic_form(m, start.x())) o.fail("Q changed");
        if (!testing::support_columns_independent(sys, p.solution.support)) o.fail("support columns dependent");
        if (!validate_solution(sys, p.solution.s).empty()) o.fail("output not feasible/complementary");
      }
    }
  };
  for (const auto& inst : g_random) process(inst.matrix);
  // entries in {-1, 0, 1} produce degenerate faces with many shared patterns
  for (std::uint64_t i = 0; i < 100; ++i) process(random_instance(InstanceKind::symmetric, 1 + i % 3, 1, kSeedBase + 9000 + i));
  if (moved == 0) o.fail("no start needed purification");
  o.detail << runs << " midpoints purified (" << moved << " needed at least one step)";
}

void criterion_cli(Outcome& o) {
  const fs::path dir = fs::temp_directory_path() / ("copos_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string matrix = (dir / "k3.txt").string();
  const std::string cert = (dir / "k3_cert.txt").string();
  auto run = [&](std::vector<std::string> args, int expected, const std::string& label) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    if (code != expected)
      o.fail(label + " exited " + std::to_string(code) + " (expected " + std::to_string(expected) + ") " + err.str());
    return out.str();
  };
  run({"gen", "remark-b", "--k", "3", "-o", matrix}, 0, "gen");
  run({"check", matrix}, cli::kExitNotCopositive, "check");
  run({"check", matrix, "--method", "oracle", "--paranoid"}, cli::kExitNotCopositive, "check --paranoid");
  run({"certify", matrix, "--scheme", "fixed", "-o", cert}, cli::kExitNotCopositive, "certify");
  const std::string verified = run({"verify", matrix, cert}, 0, "verify");
  run({"certify", matrix, "--scheme", "dyadic", "-o", cert}, cli::kExitNotCopositive, "certify dyadic");
  run({"verify", matrix, cert}, 0, "verify dyadic");
  if (verified.find("valid: true") == std::string::npos) o.fail("verify report lacks 'valid: true'");
  fs::remove_all(dir);
  o.detail << "gen -> check(1) -> certify(1) -> verify(0) on k=3";
}

}  // namespace

int main() {
  prepare();
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"C1  dichotomy gamma = 0 or gamma <= -2^(-2L+1)", criterion_dichotomy},
      {"C2  lcp enumeration and face oracle agree", criterion_agreement},
      {"C3  certificate negative, 17 L^(3/2) / 10 L^(3/2) bounds", criterion_theorem_bound},
      {"C4  adversarial family", criterion_adversarial},
      {"C5  encoding length 3k+11", criterion_encoding},
      {"C6  |det B| <= 2^(2L-1)", criterion_determinants},
      {"C7  classifier sanity", criterion_classifier},
      {"C8  KKT witness", criterion_kkt},
      {"C9  purification", criterion_purification},
      {"C10 CLI round trip", criterion_cli},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      check(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " : " << o.detail.str() << std::endl;
    if (!o.pass) ++failures;
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
