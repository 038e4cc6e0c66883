#ifndef GCALC_GCM_HPP
#define GCALC_GCM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcalc/courant.hpp"
#include "gcalc/errors.hpp"
#include "gcalc/forms.hpp"
#include "gcalc/jacobi.hpp"
#include "gcalc/wade.hpp"

namespace gcalc {

// Diagnostic with location; code is "E_SYNTAX" or "E_SEMANTIC".
struct ParseError : Error {
  ParseError(std::string code_, int line_, int col_, const std::string& msg)
      : Error("[" + code_ + "] line " + std::to_string(line_) + ", col " +
              std::to_string(col_) + ": " + msg),
        code(std::move(code_)),
        line(line_),
        col(col_) {}
  std::string code;
  int line;
  int col;
};

struct LiftStep {
  enum Kind { Cotangent, Tangent, Fiber } kind = Cotangent;
  bool reversed = false;
  long r = 1;
};

// A parsed .gcm structure description.
struct StructureFile {
  ChartPtr declared_chart;
  std::vector<LiftStep> lifts;
  ChartPtr chart;  // declared chart with lifts applied

  std::optional<OneForm> oneform;
  std::optional<Parity> jacobi_parity;
  std::optional<JacobiTriple> jacobi;
  std::optional<SuperPolynomial> hamiltonian;  // on `chart`
  std::optional<CourantSpec> courant;
  std::map<std::string, WadeSection> sections;

  // Canonical rendering; parse(print(s)) reproduces the structure.
  std::string print() const;
};

StructureFile parse_gcm(const std::string& text);
StructureFile parse_gcm_file(const std::string& path);

// Polynomial in the canonical textual grammar over a chart's generators.
SuperPolynomial parse_polynomial(const ChartPtr& chart,
                                 const std::string& text);

}  // namespace gcalc

#endif
