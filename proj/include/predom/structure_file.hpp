#pragma once

// Line-oriented text format for predomains, preCuntz semigroups and models.
//
//   kind predomain | precuntz | model
//   elements bot a c b          (points p q for models)
//   rel bot a
//   zero bot                    (precuntz)
//   add a b c                   (precuntz: a + b = c, every ordered pair)
//   fn f: p=1/2 q=0             (model)
//
// '#' starts a comment. emit() writes the canonical form: no comments,
// relation pairs and the full addition table in row-major element order.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "predom/cstar_model.hpp"
#include "predom/cuntz.hpp"
#include "predom/error.hpp"
#include "predom/predomain.hpp"

namespace predom {

enum class StructureKind { Predomain, PreCuntz, Model };

std::string_view kind_name(StructureKind k);

/// Error at a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string const& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct NamedFn {
  std::string           name;
  std::vector<Rational> values;
};

struct StructureFile {
  StructureKind              kind;
  Carrier                    elements;  // points for models
  Relation                   rel;
  std::optional<std::size_t> zero;
  std::vector<std::size_t>   add;  // row-major
  std::vector<NamedFn>       fns;

  /// Throws NotAPredomain when the relation fails the axioms.
  Predomain predomain() const;
  /// Throws PreconditionError unless the file describes a preCuntz semigroup.
  PreCuntz precuntz() const;
  MonoidTable monoid() const;
  FinXModel   model() const;
  /// Throws PreconditionError when no fn has that name.
  PositiveElement fn(std::string_view name) const;
};

/// Throws ParseError; semantic validation (axioms) is left to the caller.
StructureFile parse_structure(std::string_view text);
/// Throws Error when the file cannot be read.
StructureFile read_structure(std::string const& path);

std::string emit_structure(StructureFile const& s);

StructureFile predomain_file(Predomain const& p);

}  // namespace predom
