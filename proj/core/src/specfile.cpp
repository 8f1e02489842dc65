#include "tfp/specfile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "tfp/errors.hpp"
#include "tfp/parse.hpp"

namespace tfp {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string strip_comment(const std::string& line) {
  size_t h = line.find('#');
  return strip(h == std::string::npos ? line : line.substr(0, h));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<long long> parse_int_row(const std::string& s, const std::string& where) {
  std::vector<long long> out;
  for (const std::string& tok : split_ws(s)) {
    try {
      out.push_back(std::stoll(tok));
    } catch (...) {
      throw ConfigError("bad integer '" + tok + "' in " + where);
    }
  }
  return out;
}

std::vector<Rational> parse_rational_row(const std::string& s, const std::string& where) {
  std::vector<Rational> out;
  for (const std::string& tok : split_ws(s)) {
    try {
      out.push_back(rational_from_string(tok));
    } catch (const ParseError& e) {
      throw ConfigError(std::string(e.what()) + " in " + where);
    }
  }
  return out;
}

}  // namespace

SpecFile SpecFile::parse_text(const std::string& text) {
  SpecFile f;
  std::istringstream in(text);
  std::string raw, section;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("unterminated section header at line " + std::to_string(lineno));
      section = strip(line.substr(1, line.size() - 2));
      continue;
    }
    std::string where = "line " + std::to_string(lineno);
    if (section == "grading") {
      f.grading_rows.push_back(parse_int_row(line, where));
    } else if (section == "sizes") {
      size_t colon = line.find(':');
      if (colon == std::string::npos) throw ConfigError("sizes line needs 'key: value'");
      std::string key = strip(line.substr(0, colon));
      auto row = parse_int_row(line.substr(colon + 1), where);
      std::vector<int> v(row.begin(), row.end());
      if (key == "s")
        f.s = v;
      else if (key == "t")
        f.t = v;
      else
        throw ConfigError("unknown sizes key '" + key + "'");
    } else if (section == "ideal I") {
      f.ideal_I_lines.push_back(line);
    } else if (section == "ideal J") {
      f.ideal_J_lines.push_back(line);
    } else if (section == "weights") {
      size_t colon = line.find(':');
      if (colon == std::string::npos) throw ConfigError("weights line needs 'key: value'");
      std::string key = strip(line.substr(0, colon));
      auto row = parse_rational_row(line.substr(colon + 1), where);
      if (key == "w1")
        f.w1 = row;
      else if (key == "w2")
        f.w2 = row;
      else
        throw ConfigError("unknown weights key '" + key + "'");
    } else if (section == "map") {
      size_t eq = line.find('=');
      if (eq == std::string::npos) throw ConfigError("map line needs 'var = polynomial'");
      f.map_lines.emplace_back(strip(line.substr(0, eq)), strip(line.substr(eq + 1)));
    } else if (section.empty()) {
      throw ConfigError("data before any section header at line " + std::to_string(lineno));
    } else {
      throw ConfigError("unknown section '" + section + "'");
    }
  }
  return f;
}

SpecFile SpecFile::parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

TfpSpec SpecFile::to_tfp_spec() const {
  if (s.empty() || t.empty()) throw ConfigError("spec needs [sizes] with s and t");
  if (s.size() != t.size()) throw ConfigError("s and t must have equal length");
  int r = static_cast<int>(s.size());
  if (grading_rows.empty()) return simple_spec(r, s, t);
  int dim = static_cast<int>(grading_rows.size());
  for (const auto& row : grading_rows)
    if (static_cast<int>(row.size()) != r)
      throw ConfigError("[grading] rows must have r = " + std::to_string(r) + " columns");
  std::vector<DegreeVector> cols(r, DegreeVector(dim));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < dim; ++j) cols[i][j] = grading_rows[j][i];
  return validate_spec(cols, s, t);
}

std::vector<Polynomial> SpecFile::ideal_I(const TfpSpec& spec) const {
  std::vector<Polynomial> out;
  for (const auto& line : ideal_I_lines) out.push_back(parse_polynomial(line, spec.x_ring));
  return out;
}

std::vector<Polynomial> SpecFile::ideal_J(const TfpSpec& spec) const {
  std::vector<Polynomial> out;
  for (const auto& line : ideal_J_lines) out.push_back(parse_polynomial(line, spec.y_ring));
  return out;
}

namespace {

VarName var_from_token(const std::string& token) {
  size_t us = token.find('_');
  if (us == std::string::npos || us == 0)
    throw ConfigError("variable '" + token + "' needs tag_index form");
  VarName v;
  v.tag = token.substr(0, us);
  size_t pos = us;
  while (pos != std::string::npos && pos < token.size()) {
    size_t next = token.find('_', pos + 1);
    std::string idx = token.substr(pos + 1, next == std::string::npos
                                                ? std::string::npos
                                                : next - pos - 1);
    try {
      v.indices.push_back(std::stoi(idx));
    } catch (...) {
      throw ConfigError("bad index in variable '" + token + "'");
    }
    pos = next;
  }
  return v;
}

}  // namespace

PolynomialMap SpecFile::to_map() const {
  if (map_lines.empty()) throw ConfigError("spec has no [map] section");
  // Source ring: left-hand variables in order of first appearance.
  std::vector<VarName> source_vars;
  for (const auto& [lhs, rhs] : map_lines) source_vars.push_back(var_from_token(lhs));
  RingSpec source = RingSpec::create(source_vars);

  // Target ring: right-hand variables in order of first appearance.
  std::vector<VarName> target_vars;
  std::vector<std::string> seen;
  for (const auto& [lhs, rhs] : map_lines) {
    std::string tok;
    auto flush = [&] {
      if (tok.empty()) return;
      bool is_var = std::isalpha(static_cast<unsigned char>(tok[0])) &&
                    tok.find('_') != std::string::npos;
      if (is_var && std::find(seen.begin(), seen.end(), tok) == seen.end()) {
        seen.push_back(tok);
        target_vars.push_back(var_from_token(tok));
      }
      tok.clear();
    };
    for (char c : rhs) {
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
        tok.push_back(c);
      else
        flush();
    }
    flush();
  }
  RingSpec target = RingSpec::create(target_vars);

  std::vector<Polynomial> images;
  for (const auto& [lhs, rhs] : map_lines) images.push_back(parse_polynomial(rhs, target));
  return PolynomialMap::create(std::move(source), std::move(target), std::move(images));
}

}  // namespace tfp
