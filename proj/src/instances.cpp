// kmfeas: randomized projection solvers for linear feasibility (Ax <= b).
// SPDX-License-Identifier: MIT

#include "kmfeas/instances.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>

#include "kmfeas/errors.hpp"
#include "kmfeas/rng.hpp"

namespace kmfeas {

namespace {

// Instance generation consumes RNG stream 2; row sampling and coordinate
// draws inside the solvers use streams 0 and 1 of the same seed.
constexpr std::uint64_t kInstanceStream = 2;

double draw_entry(RandomKind kind, Rng& rng) {
  return kind == RandomKind::correlated ? rng.next_uniform(0.9, 1.0)
                                        : rng.next_gaussian();
}

}  // namespace

GeneratedInstance gen_random(const RandomSpec& spec) {
  if (spec.m < 1 || spec.n < 1) {
    throw parameter_error("gen_random needs m >= 1 and n >= 1");
  }
  if (!(spec.mix_sigma >= 0.0 && spec.mix_sigma <= 1.0)) {
    throw parameter_error("gen_random needs mix_sigma in [0, 1], got " +
                          std::to_string(spec.mix_sigma));
  }
  Rng rng(spec.seed, kInstanceStream);
  GeneratedInstance out;
  out.problem.A = DenseMatrix(spec.m, spec.n);
  for (double& e : out.problem.A.data) e = draw_entry(spec.kind, rng);
  out.x1.resize(spec.n);
  for (double& e : out.x1) e = draw_entry(spec.kind, rng);
  out.x2.resize(spec.n);
  for (double& e : out.x2) e = draw_entry(spec.kind, rng);

  const DenseVector ax1 = matvec(out.problem.A, out.x1);
  const DenseVector ax2 = matvec(out.problem.A, out.x2);
  out.problem.b.resize(spec.m);
  for (std::size_t i = 0; i < spec.m; ++i) {
    out.problem.b[i] = spec.mix_sigma * ax1[i] + (1.0 - spec.mix_sigma) * ax2[i];
  }
  out.problem.normalized = false;
  return out;
}

FeasibilityProblem svm_to_feasibility(const DenseMatrix& points,
                                      const std::vector<int>& labels,
                                      double margin) {
  if (points.rows == 0 || points.cols == 0) {
    throw degenerate_error("svm_to_feasibility: empty data");
  }
  if (labels.size() != points.rows) {
    throw dimension_error("svm_to_feasibility: " + std::to_string(labels.size()) +
                          " labels for " + std::to_string(points.rows) + " points");
  }
  if (!(margin >= 0.0)) {
    throw parameter_error("svm_to_feasibility: margin must be nonnegative");
  }
  FeasibilityProblem p;
  p.A = DenseMatrix(points.rows, points.cols);
  p.b.assign(points.rows, -margin);
  for (std::size_t i = 0; i < points.rows; ++i) {
    if (labels[i] != 1 && labels[i] != -1) {
      throw parameter_error("svm_to_feasibility: label at row " + std::to_string(i) +
                            " must be +1 or -1, got " + std::to_string(labels[i]));
    }
    const double s = -static_cast<double>(labels[i]);
    const double* src = points.row(i);
    double* dst = p.A.row(i);
    for (std::size_t j = 0; j < points.cols; ++j) dst[j] = s * src[j];
  }
  return p;
}

FeasibilityProblem lp_to_feasibility(const LpInstance& lp) {
  const std::size_t p = lp.A.rows;
  const std::size_t q = lp.A.cols;
  if (p == 0 || q == 0) throw dimension_error("lp_to_feasibility: empty LP matrix");
  if (lp.b.size() != p) {
    throw dimension_error("lp_to_feasibility: b has length " + std::to_string(lp.b.size()) +
                          ", expected " + std::to_string(p));
  }
  if (lp.l.size() != q || lp.u.size() != q || lp.c.size() != q) {
    throw dimension_error("lp_to_feasibility: l, u, c must all have length " +
                          std::to_string(q));
  }
  for (std::size_t j = 0; j < q; ++j) {
    if (std::isfinite(lp.l[j]) && std::isfinite(lp.u[j]) && lp.l[j] > lp.u[j]) {
      throw parameter_error("lp_to_feasibility: bounds cross at column " + std::to_string(j));
    }
  }

  std::size_t rows = 2 * p + 1;
  for (std::size_t j = 0; j < q; ++j) {
    if (std::isfinite(lp.u[j])) ++rows;
    if (std::isfinite(lp.l[j])) ++rows;
  }

  FeasibilityProblem out;
  out.A = DenseMatrix(rows, q);
  out.b.assign(rows, 0.0);
  std::size_t r = 0;
  for (std::size_t i = 0; i < p; ++i, ++r) {  // Ax <= b
    for (std::size_t j = 0; j < q; ++j) out.A.at(r, j) = lp.A.at(i, j);
    out.b[r] = lp.b[i];
  }
  for (std::size_t i = 0; i < p; ++i, ++r) {  // -Ax <= -b
    for (std::size_t j = 0; j < q; ++j) out.A.at(r, j) = -lp.A.at(i, j);
    out.b[r] = -lp.b[i];
  }
  for (std::size_t j = 0; j < q; ++j) {  // x_j <= u_j
    if (!std::isfinite(lp.u[j])) continue;
    out.A.at(r, j) = 1.0;
    out.b[r] = lp.u[j];
    ++r;
  }
  for (std::size_t j = 0; j < q; ++j) {  // -x_j <= -l_j
    if (!std::isfinite(lp.l[j])) continue;
    out.A.at(r, j) = -1.0;
    out.b[r] = -lp.l[j];
    ++r;
  }
  for (std::size_t j = 0; j < q; ++j) out.A.at(r, j) = lp.c[j];  // c^T x <= p*
  out.b[r] = lp.p_star;
  return out;
}

// --- file I/O ----------------------------------------------------------------

namespace {

struct Token {
  std::string text;
  std::size_t line = 0;
};

// Tokenize a file: '#' starts a comment; separators are whitespace, plus
// commas in CSV mode. Keeps line numbers for error messages.
std::vector<Token> tokenize_file(const std::string& path, bool commas) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open '" + path + "' for reading");
  std::vector<Token> tokens;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::string cur;
    auto flush = [&]() {
      if (!cur.empty()) {
        tokens.push_back({cur, line_no});
        cur.clear();
      }
    };
    for (char ch : line) {
      const bool sep = std::isspace(static_cast<unsigned char>(ch)) ||
                       (commas && ch == ',');
      if (sep) {
        flush();
      } else {
        cur.push_back(ch);
      }
    }
    flush();
  }
  return tokens;
}

class TokenReader {
 public:
  TokenReader(std::vector<Token> tokens, std::string path)
      : tokens_(std::move(tokens)), path_(std::move(path)) {}

  const Token& take(const char* what) {
    if (pos_ >= tokens_.size()) {
      const std::size_t last = tokens_.empty() ? 0 : tokens_.back().line;
      throw parse_error("'" + path_ + "': unexpected end of file after line " +
                        std::to_string(last) + " while reading " + what);
    }
    return tokens_[pos_++];
  }

  std::size_t take_count(const char* what) {
    const Token& t = take(what);
    std::size_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size() || value == 0) {
      throw parse_error("'" + path_ + "' line " + std::to_string(t.line) +
                        ": expected a positive integer for " + what + ", got '" +
                        t.text + "'");
    }
    return value;
  }

  double take_double(const char* what, bool allow_inf) {
    const Token& t = take(what);
    if (allow_inf) {
      if (t.text == "inf" || t.text == "+inf") {
        return std::numeric_limits<double>::infinity();
      }
      if (t.text == "-inf") return -std::numeric_limits<double>::infinity();
    }
    const char* begin = t.text.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end != begin + t.text.size() || t.text.empty()) {
      throw parse_error("'" + path_ + "' line " + std::to_string(t.line) +
                        ": expected a number for " + what + ", got '" + t.text + "'");
    }
    if (!std::isfinite(value) && !allow_inf) {
      throw parse_error("'" + path_ + "' line " + std::to_string(t.line) +
                        ": non-finite entry for " + what);
    }
    return value;
  }

  void expect_done() {
    if (pos_ < tokens_.size()) {
      const Token& t = tokens_[pos_];
      throw parse_error("'" + path_ + "' line " + std::to_string(t.line) +
                        ": trailing data '" + t.text + "' after the expected layout");
    }
  }

 private:
  std::vector<Token> tokens_;
  std::string path_;
  std::size_t pos_ = 0;
};

// Shortest representation that parses back to the same bits.
std::string format_exact(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_row(std::ofstream& out, const double* v, std::size_t n, char sep) {
  for (std::size_t j = 0; j < n; ++j) {
    if (j != 0) out << sep;
    out << format_exact(v[j]);
  }
  out << '\n';
}

}  // namespace

FeasibilityProblem read_problem(const std::string& path, FileFormat format) {
  TokenReader reader(tokenize_file(path, format == FileFormat::csv), path);
  const std::size_t m = reader.take_count("the row count m");
  const std::size_t n = reader.take_count("the column count n");
  FeasibilityProblem p;
  p.A = DenseMatrix(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      p.A.at(i, j) = reader.take_double("a matrix entry", false);
    }
  }
  p.b.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    p.b[i] = reader.take_double("a right-hand-side entry", false);
  }
  reader.expect_done();
  return p;
}

void write_problem(const FeasibilityProblem& p, const std::string& path,
                   FileFormat format) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open '" + path + "' for writing");
  const char sep = format == FileFormat::csv ? ',' : ' ';
  out << p.m() << sep << p.n() << '\n';
  for (std::size_t i = 0; i < p.m(); ++i) write_row(out, p.A.row(i), p.n(), sep);
  write_row(out, p.b.data(), p.m(), sep);
  if (!out) throw io_error("failed writing '" + path + "'");
}

LpInstance read_lp(const std::string& path) {
  TokenReader reader(tokenize_file(path, false), path);
  const std::size_t p = reader.take_count("the constraint count p");
  const std::size_t q = reader.take_count("the variable count q");
  LpInstance lp;
  lp.A = DenseMatrix(p, q);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      lp.A.at(i, j) = reader.take_double("a matrix entry", false);
    }
  }
  lp.b.resize(p);
  for (std::size_t i = 0; i < p; ++i) {
    lp.b[i] = reader.take_double("a right-hand-side entry", false);
  }
  lp.l.resize(q);
  for (std::size_t j = 0; j < q; ++j) {
    lp.l[j] = reader.take_double("a lower bound", true);
  }
  lp.u.resize(q);
  for (std::size_t j = 0; j < q; ++j) {
    lp.u[j] = reader.take_double("an upper bound", true);
  }
  lp.c.resize(q);
  for (std::size_t j = 0; j < q; ++j) {
    lp.c[j] = reader.take_double("an objective coefficient", false);
  }
  lp.p_star = reader.take_double("the optimal value", false);
  reader.expect_done();
  return lp;
}

void write_lp(const LpInstance& lp, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open '" + path + "' for writing");
  out << lp.A.rows << ' ' << lp.A.cols << '\n';
  for (std::size_t i = 0; i < lp.A.rows; ++i) {
    write_row(out, lp.A.row(i), lp.A.cols, ' ');
  }
  write_row(out, lp.b.data(), lp.b.size(), ' ');
  write_row(out, lp.l.data(), lp.l.size(), ' ');
  write_row(out, lp.u.data(), lp.u.size(), ' ');
  write_row(out, lp.c.data(), lp.c.size(), ' ');
  out << format_exact(lp.p_star) << '\n';
  if (!out) throw io_error("failed writing '" + path + "'");
}

}  // namespace kmfeas
