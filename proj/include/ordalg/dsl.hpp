#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ordalg/algebra.hpp"

namespace ordalg {

struct NamedPoset {
  std::string name;
  /// Elements labelled by their declared names, in declaration order.
  FinPoset poset;
};

/// An `ineq` or `eq` declaration; an equality stands for two inequations.
struct Axiom {
  bool equality = false;
  std::string label;
  std::string context;
  Term lhs;
  Term rhs;
};

struct NamedAlgebra {
  std::string name;
  std::string carrier;
  FiniteAlgebra algebra;
};

/// Contents of a theory file.
struct TheoryFile {
  std::vector<NamedPoset> posets;
  std::shared_ptr<const Signature> signature = std::make_shared<const Signature>();
  /// Poset name of each symbol's arity.
  std::vector<std::string> arity_names;
  bool coherent = false;
  std::vector<Axiom> axioms;
  std::vector<NamedAlgebra> algebras;

  const FinPoset* find_poset(const std::string& name) const;
  const NamedAlgebra* find_algebra(const std::string& name) const;
  /// The axioms with equalities expanded.
  Theory theory() const;

  /// Same declarations, in the same order, with identical contents.
  bool operator==(const TheoryFile& other) const;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

/// Reads the theory language:
///
///   poset P { elems a b c ; le a b ; le b c }
///   signature { op plus : P ; op at : Q }
///   coherent
///   ineq unit : Q |- x <= at(x)
///   eq comm : D |- plus(x,y) = plus(y,x)
///   algebra A on P { op at [a] = b ; ... }
///
/// Statements end at a newline or `;`; `#` starts a comment. Throws ParseError.
TheoryFile parse_theory(std::string_view text);

/// Reads a file; throws Error when it cannot be opened.
TheoryFile parse_theory_file(const std::string& path);

/// Canonical text; parse_theory(print_theory(f)) == f.
std::string print_theory(const TheoryFile& f);

}  // namespace ordalg
