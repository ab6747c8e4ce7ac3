#pragma once

#include "nalc/kb.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nalc {

struct SourceSpan {
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  int length = 0;
};

struct ParseError {
  enum class Kind : std::uint8_t { Lex, Syntax, DegreeRange, DuplicateDefinition, Validation };
  SourceSpan span;
  std::string message;
  Kind kind = Kind::Syntax;
};

std::string to_string(ParseError::Kind k);
// "3:14: syntax error: expected ')'"
std::string format_error(const ParseError& e);

class ParseFailure : public std::runtime_error {
 public:
  explicit ParseFailure(std::vector<ParseError> errors);
  const std::vector<ParseError>& errors() const { return errors_; }

 private:
  std::vector<ParseError> errors_;
};

// All of these throw ParseFailure.
Concept parse_concept(std::string_view text);
// "C(a)" or "R(a,b)".
Assertion parse_assertion(std::string_view text);
// "[assert] C(a) >= n <= m" or with "<= n >= m".
NeutrosophicAssertion parse_query(std::string_view text);
// Whole KB file; collects every error, then validates.
KnowledgeBase parse_kb(std::string_view text);

std::string format_concept(const Concept& c);
std::string format_axiom(const TerminologicalAxiom& ax);
// Re-parseable KB text.
std::string format_kb(const KnowledgeBase& kb);

}  // namespace nalc
