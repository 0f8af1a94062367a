#pragma once

#include "logsplit/parser.hpp"
#include "logsplit/witness.hpp"

#include <optional>
#include <string>

namespace logsplit {

/// Parsed textual inputs sharing one base field.
struct Problem {
  int m = 0;
  FieldConfig cfg;
  std::optional<RatFun> f;
  std::optional<RatFun> h;
  BaseElem e;
};

struct ProblemText {
  /// "y^(m) = f"; for construct a bare left side like "y''" only fixes m
  std::string equation;
  std::string h;
  std::string e = "0";
  /// "Q", "Qt" or "auto" (Qt iff t occurs in any input)
  std::string field = "auto";
};

/// Parses the inputs. When need_witness is set and no equation is given, m is
/// one more than the largest x-index in h.
Problem load_problem(const ProblemText &in, bool need_equation, bool need_witness);

/// x_i rewritten as y with i quotes (y^(i) beyond the third).
std::string in_y_notation(const std::string &s);

/// "y^(m) = f" for the f of construct_f.
std::string equation_text(int m, const RatFun &f);

} // namespace logsplit
