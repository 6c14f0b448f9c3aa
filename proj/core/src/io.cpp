#include "copos/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "copos/error.hpp"

namespace copos {

namespace {

// Non-comment, non-blank lines with comments stripped.
std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

bool is_integer_token(std::string_view t) {
  std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view t) {
  if (!is_integer_token(t)) throw ParseError("not an integer: '" + std::string(t) + "'");
  std::string digits(t[0] == '+' ? t.substr(1) : t);
  return Integer(digits, 10);
}

}  // namespace

SymmetricIntMatrix parse_matrix(std::string_view text) {
  std::vector<std::string> tokens;
  for (const auto& line : content_lines(text)) {
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  if (tokens.empty()) throw ParseError("matrix file is empty");
  const Integer n_big = parse_integer(tokens[0]);
  if (n_big < 1 || n_big > 4096) throw ParseError("matrix dimension must be between 1 and 4096");
  const std::size_t n = n_big.get_ui();
  const std::size_t given = tokens.size() - 1;

  std::vector<Integer> values;
  values.reserve(given);
  for (std::size_t k = 1; k < tokens.size(); ++k) values.push_back(parse_integer(tokens[k]));

  try {
    if (given == n * (n + 1) / 2) return SymmetricIntMatrix::from_upper(n, std::move(values));
    if (given == n * n) {
      std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = values[i * n + j];
      return SymmetricIntMatrix::from_rows(rows);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  throw ParseError("expected " + std::to_string(n * n) + " (full) or " + std::to_string(n * (n + 1) / 2) +
                   " (upper-triangular) entries for n = " + std::to_string(n) + ", got " + std::to_string(given));
}

std::string serialize_matrix(const SymmetricIntMatrix& m) {
  std::ostringstream os;
  const std::size_t n = m.dim();
  os << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << '\n';
  }
  return os.str();
}

Rational parse_rational(std::string_view token) {
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(token));
  const std::string_view den = token.substr(slash + 1);
  if (den.empty() || den[0] == '-' || den[0] == '+') throw ParseError("bad denominator in '" + std::string(token) + "'");
  const Integer d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(token) + "'");
  return make_rational(parse_integer(token.substr(0, slash)), d);
}

RationalVector parse_vector(std::string_view text) {
  RationalVector v;
  for (const auto& line : content_lines(text)) {
    std::istringstream ls(line);
    std::string tok;
    std::string extra;
    ls >> tok;
    if (ls >> extra) throw ParseError("vector files hold one rational per line");
    v.push_back(parse_rational(tok));
  }
  if (v.empty()) throw ParseError("vector file is empty");
  return v;
}

std::string serialize_vector(std::span<const Rational> v) {
  std::string out;
  for (const auto& c : v) out += to_string(c) + "\n";
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << contents;
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace copos
