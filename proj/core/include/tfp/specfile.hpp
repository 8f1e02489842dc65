#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tfp/oracle.hpp"
#include "tfp/rational.hpp"
#include "tfp/tfp.hpp"

namespace tfp {

// Line-oriented spec file: "[section]" headers, "key: value" or bare data
// lines inside, "#" comments, UTF-8. Sections used by the CLI:
//   [grading]  rows of the A matrix (d rows, r integer columns)
//   [sizes]    s: ... / t: ...
//   [ideal I]  one x-ring polynomial per line
//   [ideal J]  one y-ring polynomial per line
//   [weights]  w1: ... / w2: ...
//   [map]      lines "var = polynomial"
struct SpecFile {
  std::vector<std::vector<long long>> grading_rows;
  std::vector<int> s, t;
  std::vector<std::string> ideal_I_lines, ideal_J_lines;
  std::optional<std::vector<Rational>> w1, w2;
  std::vector<std::pair<std::string, std::string>> map_lines;

  static SpecFile parse_file(const std::filesystem::path& path);
  static SpecFile parse_text(const std::string& text);

  bool has_tfp_data() const { return !s.empty() && !t.empty(); }
  bool has_map() const { return !map_lines.empty(); }

  /// Builds the TfpSpec from [grading]/[sizes]; identity grading when
  /// [grading] is absent.
  TfpSpec to_tfp_spec() const;

  std::vector<Polynomial> ideal_I(const TfpSpec& spec) const;
  std::vector<Polynomial> ideal_J(const TfpSpec& spec) const;

  /// Builds the polynomial map from the [map] section. Source variables in
  /// order of first appearance on the left; target variables in order of
  /// first appearance on the right.
  PolynomialMap to_map() const;
};

}  // namespace tfp
