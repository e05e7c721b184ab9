#include "matgerm/germfile.hpp"

#include <fstream>
#include <sstream>

#include "matgerm/parser.hpp"

namespace matgerm {

namespace {

struct Line {
  long number = 0;
  std::string text;  // comment-stripped, untrimmed (columns stay meaningful)
};

std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  long number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back({number, raw});
  }
  return out;
}

// Splits on whitespace; returns (token, 1-based column) pairs.
std::vector<std::pair<std::string, long>> tokens_of(const std::string& s) {
  std::vector<std::pair<std::string, long>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    if (i >= s.size()) break;
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    out.push_back({s.substr(start, i - start), long(start) + 1});
  }
  return out;
}

long parse_positive(const std::string& tok, long line, long col, const char* what) {
  try {
    std::size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw GermFileError(line, col, std::string("expected positive integer ") + what +
                                       ", got '" + tok + "'");
  }
}

PolyMatrix parse_matrix_block(const std::vector<Line>& lines, std::size_t& pos, long n,
                              long p, const std::vector<std::string>& varnames,
                              const char* what) {
  PolyMatrix m(int(n), int(p), int(varnames.size()));
  for (long i = 0; i < n; ++i) {
    if (pos >= lines.size())
      throw GermFileError(lines.empty() ? 1 : lines.back().number, 1,
                          std::string("missing ") + what + " row " + std::to_string(i + 1));
    const Line& ln = lines[pos++];
    // split on commas, tracking the column of each cell
    std::vector<std::pair<std::string, long>> cells;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = ln.text.find(',', start);
      std::string cell = ln.text.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      cells.push_back({cell, long(start) + 1});
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (long(cells.size()) != p)
      throw GermFileError(ln.number, 1,
                          std::string(what) + " row has " + std::to_string(cells.size()) +
                              " entries, expected " + std::to_string(p));
    for (long j = 0; j < p; ++j) {
      try {
        m.at(int(i), int(j)) = parse_polynomial(cells[j].first, varnames);
      } catch (const ParseError& e) {
        throw GermFileError(ln.number, cells[j].second + long(e.position), e.message);
      }
    }
  }
  return m;
}

}  // namespace

GermFile parse_germ_file(const std::string& text) {
  std::vector<Line> lines = significant_lines(text);
  std::size_t pos = 0;
  GermFile f;

  auto expect_header = [&](const char* name) -> std::pair<Line, std::string> {
    if (pos >= lines.size())
      throw GermFileError(lines.empty() ? 1 : lines.back().number, 1,
                          std::string("missing '") + name + ":' line");
    Line ln = lines[pos];
    std::string prefix = std::string(name) + ":";
    auto first = ln.text.find_first_not_of(" \t");
    if (ln.text.compare(first, prefix.size(), prefix) != 0)
      throw GermFileError(ln.number, long(first) + 1,
                          std::string("expected '") + name + ":' header");
    ++pos;
    return {ln, ln.text.substr(first + prefix.size())};
  };

  auto [vars_line, vars_rest] = expect_header("vars");
  for (auto& [tok, col] : tokens_of(vars_rest)) {
    (void)col;
    f.germ.varnames.push_back(tok);
  }
  if (f.germ.varnames.empty())
    throw GermFileError(vars_line.number, 1, "no variable names given");

  if (pos < lines.size()) {
    const std::string& t = lines[pos].text;
    auto first = t.find_first_not_of(" \t");
    if (t.compare(first, 8, "weights:") == 0) {
      Line ln = lines[pos++];
      std::vector<long> w;
      for (auto& [tok, col] : tokens_of(t.substr(first + 8)))
        w.push_back(parse_positive(tok, ln.number, long(first) + 8 + col, "weight"));
      if (w.size() != f.germ.varnames.size())
        throw GermFileError(ln.number, 1, "weights count differs from variable count");
      f.weights = WeightSystem(std::move(w));
    }
  }

  auto [mat_line, mat_rest] = expect_header("matrix");
  auto shape = tokens_of(mat_rest);
  if (shape.size() != 2)
    throw GermFileError(mat_line.number, 1, "matrix header needs two dimensions: N P");
  long n = parse_positive(shape[0].first, mat_line.number, shape[0].second, "row count");
  long p = parse_positive(shape[1].first, mat_line.number, shape[1].second, "column count");
  if (p != n + 1)
    throw GermFileError(mat_line.number, 1,
                        "matrix must have shape N x (N+1), got " + std::to_string(n) +
                            " x " + std::to_string(p));
  f.germ.m = parse_matrix_block(lines, pos, n, p, f.germ.varnames, "matrix");

  if (pos < lines.size()) {
    const std::string& t = lines[pos].text;
    auto first = t.find_first_not_of(" \t");
    if (t.compare(first, 12, "deformation:") != 0)
      throw GermFileError(lines[pos].number, long(first) + 1,
                          "unexpected content after the matrix block");
    ++pos;
    f.deformation = parse_matrix_block(lines, pos, n, p, f.germ.varnames, "deformation");
  }
  if (pos < lines.size())
    throw GermFileError(lines[pos].number, 1, "unexpected trailing content");

  try {
    f.germ.validate();
  } catch (const std::exception& e) {
    throw GermFileError(mat_line.number, 1, e.what());
  }
  return f;
}

GermFile load_germ_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open germ file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_germ_file(buf.str());
}

std::string print_germ_file(const GermFile& f) {
  std::ostringstream os;
  os << "vars:";
  for (const auto& v : f.germ.varnames) os << " " << v;
  os << "\n";
  if (f.weights) {
    os << "weights:";
    for (long w : f.weights->weights()) os << " " << w;
    os << "\n";
  }
  os << "matrix: " << f.germ.n() << " " << f.germ.p() << "\n";
  auto print_block = [&](const PolyMatrix& m) {
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) {
        if (j) os << ", ";
        os << to_string(m.at(i, j), f.germ.varnames);
      }
      os << "\n";
    }
  };
  print_block(f.germ.m);
  if (f.deformation) {
    os << "deformation:\n";
    print_block(*f.deformation);
  }
  return os.str();
}

}  // namespace matgerm
