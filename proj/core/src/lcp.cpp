#include "copos/lcp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "copos/error.hpp"

namespace copos {

const char* to_string(MinimizationMethod method) {
  switch (method) {
    case MinimizationMethod::lcp_enumeration:
      return "lcp";
    case MinimizationMethod::oracle:
      return "oracle";
  }
  return "unknown";
}

RationalMatrix LcpSystem::submatrix(std::span<const std::size_t> columns) const {
  RationalMatrix out(rows(), columns.size());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t k = 0; k < columns.size(); ++k) out(r, k) = Rational(at(r, columns[k]));
  }
  return out;
}

RationalVector LcpSystem::residual(std::span<const Rational> s) const {
  if (s.size() != cols()) throw DimensionMismatch("residual: solution length must be 4n");
  RationalVector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    Rational acc = -Rational(b[r]);
    for (std::size_t c = 0; c < cols(); ++c) {
      if (at(r, c) != 0 && sgn(s[c]) != 0) acc += Rational(at(r, c)) * s[c];
    }
    out[r] = acc;
  }
  return out;
}

LcpSystem build_system(const SymmetricIntMatrix& m) {
  LcpSystem sys;
  sys.n = m.dim();
  sys.matrix = m;
  const std::size_t n = sys.n;
  sys.a.assign(sys.rows() * sys.cols(), Integer(0));
  sys.b.assign(sys.rows(), Integer(0));
  auto set = [&](std::size_t r, std::size_t c, const Integer& value) { sys.a[r * sys.cols() + c] = value; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) set(i, sys.x_col(j), -m(i, j));
    set(i, sys.y_col(i), Integer(-1));
    set(i, sys.u_col(i), Integer(1));
    set(n + i, sys.x_col(i), Integer(1));
    set(n + i, sys.v_col(i), Integer(1));
    sys.b[n + i] = 1;
  }
  return sys;
}

std::vector<std::size_t> support_of(std::span<const Rational> s) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < s.size(); ++j)
    if (sgn(s[j]) > 0) out.push_back(j);
  return out;
}

ComplementarySolution make_solution(RationalVector s) {
  ComplementarySolution sol;
  sol.support = support_of(s);
  sol.s = std::move(s);
  return sol;
}

std::vector<std::string> validate_solution(const LcpSystem& sys, std::span<const Rational> s) {
  std::vector<std::string> problems;
  if (s.size() != sys.cols()) {
    problems.push_back("solution has length " + std::to_string(s.size()) + ", expected " +
                       std::to_string(sys.cols()));
    return problems;
  }
  const RationalVector res = sys.residual(s);
  for (std::size_t r = 0; r < res.size(); ++r) {
    if (sgn(res[r]) != 0) problems.push_back("row " + std::to_string(r) + " of A s = b violated");
  }
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (sgn(s[j]) < 0) problems.push_back("coordinate " + std::to_string(j) + " is negative");
  }
  const std::size_t n = sys.n;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(s[sys.x_col(i)]) != 0 && sgn(s[sys.u_col(i)]) != 0)
      problems.push_back("x_" + std::to_string(i) + " u_" + std::to_string(i) + " != 0");
    if (sgn(s[sys.y_col(i)]) != 0 && sgn(s[sys.v_col(i)]) != 0)
      problems.push_back("y_" + std::to_string(i) + " v_" + std::to_string(i) + " != 0");
  }
  if (problems.empty()) {
    const auto x = s.subspan(0, n);
    const auto y = s.subspan(n, n);
    Rational sum_y = 0;
    for (const auto& c : y) sum_y += c;
    if (quadratic_form(sys.matrix, x) != -sum_y) problems.push_back("x^T M x != -e^T y");
  }
  return problems;
}

void for_each_complementary_pattern(const LcpSystem& sys, const std::function<void(const PatternOutcome&)>& visit,
                                    std::size_t max_n) {
  const std::size_t n = sys.n;
  if (n > max_n || n > 31)
    throw LimitExceeded("complementary enumeration limited to n <= " + std::to_string(max_n) + ", got n = " +
                        std::to_string(n));
  const std::uint64_t count = std::uint64_t{1} << (2 * n);
  const RationalVector rhs(sys.b.begin(), sys.b.end());
  PatternOutcome outcome;
  for (std::uint64_t pattern = 0; pattern < count; ++pattern) {
    outcome.pattern = pattern;
    outcome.columns.clear();
    for (std::size_t i = 0; i < n; ++i) {
      outcome.columns.push_back(((pattern >> i) & 1u) ? sys.x_col(i) : sys.u_col(i));
      outcome.columns.push_back(((pattern >> (n + i)) & 1u) ? sys.y_col(i) : sys.v_col(i));
    }
    std::sort(outcome.columns.begin(), outcome.columns.end());

    const Elimination e = eliminate(sys.submatrix(outcome.columns), rhs);
    // The chosen columns are integral, so the determinant is an integer.
    outcome.det = e.determinant->get_num();
    outcome.s.reset();
    if (e.consistent) {
      RationalVector s = zeros(sys.cols());
      for (std::size_t k = 0; k < outcome.columns.size(); ++k) s[outcome.columns[k]] = e.solution[k];
      outcome.s = std::move(s);
    }
    visit(outcome);
  }
}

namespace {

struct LexLess {
  bool operator()(const RationalVector& a, const RationalVector& b) const { return lex_less(a, b); }
};

}  // namespace

std::vector<ComplementarySolution> enumerate_complementary_solutions(const SymmetricIntMatrix& m, std::size_t max_n) {
  const LcpSystem sys = build_system(m);
  std::vector<ComplementarySolution> out;
  std::map<RationalVector, std::size_t, LexLess> seen;
  for_each_complementary_pattern(
      sys,
      [&](const PatternOutcome& p) {
        if (!p.s || !is_nonnegative(*p.s)) return;
        auto [it, inserted] = seen.try_emplace(*p.s, out.size());
        if (inserted) {
          ComplementarySolution sol = make_solution(*p.s);
          sol.pattern = p.pattern;
          out.push_back(std::move(sol));
        }
        ComplementarySolution& sol = out[it->second];
        if (!sol.basis && p.det != 0) {
          sol.basis = p.columns;
          sol.basis_det = p.det;
          sol.pattern = p.pattern;
        }
      },
      max_n);
  return out;
}

MinimizationResult solve_box_qp_lcp(const SymmetricIntMatrix& m, std::size_t max_n) {
  std::vector<ComplementarySolution> solutions = enumerate_complementary_solutions(m, max_n);
  const std::size_t n = m.dim();
  std::size_t best = 0;
  Rational best_value;
  for (std::size_t k = 0; k < solutions.size(); ++k) {
    const Rational value = quadratic_form(m, solutions[k].x());
    if (k == 0 || value < best_value ||
        (value == best_value && lex_less(solutions[k].x(), solutions[best].x()))) {
      best = k;
      best_value = value;
    }
  }
  MinimizationResult result;
  result.gamma = best_value;
  result.argmin.assign(solutions[best].s.begin(), solutions[best].s.begin() + static_cast<std::ptrdiff_t>(n));
  result.witness = std::move(solutions[best]);
  result.method = MinimizationMethod::lcp_enumeration;
  return result;
}

ComplementarySolution kkt_witness(const SymmetricIntMatrix& m, std::span<const Rational> xbar) {
  const std::size_t n = m.dim();
  if (xbar.size() != n) throw DimensionMismatch("kkt_witness: point has wrong length");
  if (!in_unit_box(xbar)) throw DomainError("kkt_witness: point lies outside [0,1]^n");

  const RationalVector mx = multiply(m, xbar);
  RationalVector s(4 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational y = sgn(mx[i]) < 0 ? Rational(-mx[i]) : Rational(0);
    s[i] = xbar[i];
    s[n + i] = y;
    s[2 * n + i] = mx[i] + y;
    s[3 * n + i] = 1 - xbar[i];
  }

  const LcpSystem sys = build_system(m);
  for (const auto& r : sys.residual(s)) {
    if (sgn(r) != 0) throw std::logic_error("kkt_witness: assembled point violates A s = b");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(s[i]) != 0 && sgn(s[2 * n + i]) != 0)
      throw ComplementarityViolation("x_" + std::to_string(i) + " > 0 but (Mx)_" + std::to_string(i) +
                                     " > 0: point is not a KKT point");
    if (sgn(s[n + i]) != 0 && sgn(s[3 * n + i]) != 0)
      throw ComplementarityViolation("x_" + std::to_string(i) + " < 1 but (Mx)_" + std::to_string(i) +
                                     " < 0: point is not a KKT point");
  }
  return make_solution(std::move(s));
}

PurifyResult purify_to_bfs(const LcpSystem& sys, const ComplementarySolution& start) {
  if (auto problems = validate_solution(sys, start.s); !problems.empty())
    throw DomainError("purify_to_bfs: input is not a feasible complementary solution (" + problems.front() + ")");

  const std::size_t n = sys.n;
  RationalVector s = start.s;
  std::size_t steps = 0;
  for (;;) {
    const std::vector<std::size_t> support = support_of(s);
    const std::optional<RationalVector> kernel = kernel_vector(sys.submatrix(support));
    if (!kernel) break;

    RationalVector dir = zeros(sys.cols());
    bool has_negative = false;
    for (std::size_t k = 0; k < support.size(); ++k) {
      dir[support[k]] = (*kernel)[k];
      has_negative = has_negative || sgn((*kernel)[k]) < 0;
    }
    if (!has_negative) {
      for (auto& c : dir) c = -c;
    }

    // x^T M x = -e^T y on the whole segment, so a direction that changes
    // e^T y would contradict the KKT property of the start.
    Rational y_shift = 0;
    for (std::size_t i = 0; i < n; ++i) y_shift += dir[sys.y_col(i)];
    if (sgn(y_shift) != 0) throw std::logic_error("purify_to_bfs: kernel direction changes the objective");

    std::optional<Rational> step;
    for (std::size_t j : support) {
      if (sgn(dir[j]) >= 0) continue;
      Rational ratio = s[j] / -dir[j];
      if (!step || ratio < *step) step = ratio;
    }
    for (std::size_t j : support) s[j] += *step * dir[j];
    ++steps;
    if (steps > 4 * n) throw std::logic_error("purify_to_bfs: support failed to shrink");
  }

  PurifyResult result;
  result.solution = make_solution(std::move(s));
  result.steps = steps;
  return result;
}

bool check_basis_determinant_bound(const ComplementarySolution& sol, const EncodingStats& stats) {
  if (!sol.basis_det) throw DomainError("solution carries no basis determinant");
  return abs(*sol.basis_det) <= determinant_bound(stats.L);
}

}  // namespace copos
