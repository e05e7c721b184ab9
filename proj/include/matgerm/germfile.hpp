#pragma once

#include <optional>
#include <string>

#include "matgerm/germ.hpp"

namespace matgerm {

struct GermFileError : std::runtime_error {
  GermFileError(long line, long col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ": " + msg),
        line(line),
        col(col),
        message(msg) {}
  long line;
  long col;
  std::string message;
};

/// Line-oriented germ description:
///   vars: x y z
///   weights: 3 8 7          (optional)
///   matrix: N P
///   <N lines of P comma-separated polynomial expressions>
///   deformation:            (optional; N more matrix lines)
/// '#' starts a comment anywhere on a line.
struct GermFile {
  GermPresentation germ;
  std::optional<WeightSystem> weights;
  std::optional<PolyMatrix> deformation;
};

GermFile parse_germ_file(const std::string& text);
GermFile load_germ_file(const std::string& path);

/// Prints in the same format; parse(print(x)) == x.
std::string print_germ_file(const GermFile& f);

}  // namespace matgerm
