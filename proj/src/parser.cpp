#include "nalc/parser.hpp"

#include <map>
#include <optional>
#include <set>

namespace nalc {

std::string to_string(ParseError::Kind k) {
  switch (k) {
    case ParseError::Kind::Lex: return "lex";
    case ParseError::Kind::Syntax: return "syntax";
    case ParseError::Kind::DegreeRange: return "degree-range";
    case ParseError::Kind::DuplicateDefinition: return "duplicate-definition";
    case ParseError::Kind::Validation: return "validation";
  }
  return "error";
}

std::string format_error(const ParseError& e) {
  return std::to_string(e.span.line) + ":" + std::to_string(e.span.column) + ": " + to_string(e.kind) +
         " error: " + e.message;
}

ParseFailure::ParseFailure(std::vector<ParseError> errors)
    : std::runtime_error(errors.empty() ? "parse error" : format_error(errors.front())), errors_(std::move(errors)) {}

namespace {

enum class Tok { LParen, RParen, Comma, Ident, Number, Geq, Leq, Lt, Gt, Eq, End };

struct Token {
  Tok kind;
  std::string text;
  int column;  // 1-based
};

bool ident_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9') || c == '*'; }
bool number_char(char c) { return (c >= '0' && c <= '9') || c == '.' || c == '/'; }

const std::set<std::string>& reserved() {
  static const std::set<std::string> r{"top", "bot", "and", "or", "not", "all", "some"};
  return r;
}

struct Stop {};  // abandons the current line after an error was recorded

class LineParser {
 public:
  LineParser(std::string_view line, int line_no, std::vector<ParseError>& errors)
      : line_(line), line_no_(line_no), errors_(errors) {}

  // false when lexing failed (error recorded)
  bool lex() {
    std::size_t i = 0;
    while (i < line_.size()) {
      char c = line_[i];
      int col = static_cast<int>(i) + 1;
      if (c == '#') break;
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
        continue;
      }
      auto single = [&](Tok k) {
        tokens_.push_back({k, std::string(1, c), col});
        ++i;
      };
      if (c == '(') single(Tok::LParen);
      else if (c == ')') single(Tok::RParen);
      else if (c == ',') single(Tok::Comma);
      else if (c == '=') single(Tok::Eq);
      else if (c == '>' || c == '<') {
        bool eq = i + 1 < line_.size() && line_[i + 1] == '=';
        Tok k = c == '>' ? (eq ? Tok::Geq : Tok::Gt) : (eq ? Tok::Leq : Tok::Lt);
        tokens_.push_back({k, std::string(line_.substr(i, eq ? 2 : 1)), col});
        i += eq ? 2 : 1;
      } else if (ident_start(c)) {
        std::size_t j = i;
        while (j < line_.size() && ident_char(line_[j])) ++j;
        tokens_.push_back({Tok::Ident, std::string(line_.substr(i, j - i)), col});
        i = j;
      } else if (number_char(c) || c == '-') {
        std::size_t j = i + 1;
        while (j < line_.size() && number_char(line_[j])) ++j;
        tokens_.push_back({Tok::Number, std::string(line_.substr(i, j - i)), col});
        i = j;
      } else {
        std::size_t len = 1;
        // keep multi-byte UTF-8 sequences whole
        if (static_cast<unsigned char>(c) >= 0x80)
          while (i + len < line_.size() && (static_cast<unsigned char>(line_[i + len]) & 0xC0) == 0x80) ++len;
        errors_.push_back({{line_no_, col, static_cast<int>(len)},
                           "unexpected character '" + std::string(line_.substr(i, len)) + "'", ParseError::Kind::Lex});
        return false;
      }
    }
    end_column_ = static_cast<int>(line_.size()) + 1;
    return true;
  }

  bool empty() const { return tokens_.empty(); }

  const Token& peek(std::size_t ahead = 0) const {
    static const Token end{Tok::End, "", 0};
    return pos_ + ahead < tokens_.size() ? tokens_[pos_ + ahead] : end;
  }

  [[noreturn]] void fail(const std::string& msg, ParseError::Kind kind = ParseError::Kind::Syntax) {
    const Token& t = peek();
    SourceSpan span = t.kind == Tok::End ? SourceSpan{line_no_, std::max(1, end_column_ - 1), 0}
                                         : SourceSpan{line_no_, t.column, static_cast<int>(t.text.size())};
    std::string found = t.kind == Tok::End ? "end of line" : "'" + t.text + "'";
    errors_.push_back({span, msg + ", found " + found, kind});
    throw Stop{};
  }

  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    return tokens_[pos_++];
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail("expected end of line");
  }

  bool accept_keyword(const char* kw) {
    if (peek().kind == Tok::Ident && peek().text == kw) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string name(const char* what) {
    const Token& t = peek();
    if (t.kind != Tok::Ident) fail(std::string("expected ") + what);
    if (reserved().count(t.text)) fail(std::string("expected ") + what + " (keyword is reserved)");
    ++pos_;
    return t.text;
  }

  Concept expr() {
    const Token& t = peek();
    if (t.kind == Tok::Ident) {
      if (t.text == "top") return ++pos_, Concept::top();
      if (t.text == "bot") return ++pos_, Concept::bottom();
      return Concept::atomic(name("concept"));
    }
    if (t.kind != Tok::LParen) fail("expected concept");
    ++pos_;
    const Token& op = peek();
    if (op.kind != Tok::Ident) fail("expected one of and, or, not, all, some");
    Concept out;
    if (accept_keyword("and")) {
      Concept l = expr();
      out = Concept::conj(l, expr());
    } else if (accept_keyword("or")) {
      Concept l = expr();
      out = Concept::disj(l, expr());
    } else if (accept_keyword("not")) {
      out = Concept::negation(expr());
    } else if (accept_keyword("all")) {
      std::string r = name("role name");
      out = Concept::forall(r, expr());
    } else if (accept_keyword("some")) {
      std::string r = name("role name");
      out = Concept::exists(r, expr());
    } else {
      fail("expected one of and, or, not, all, some");
    }
    expect(Tok::RParen, "')'");
    return out;
  }

  // C(a) | R(a,b)
  Assertion assertion() {
    if (peek().kind == Tok::Ident && peek(1).kind == Tok::LParen && peek(2).kind == Tok::Ident &&
        peek(3).kind == Tok::Comma) {
      std::string role = name("role name");
      expect(Tok::LParen, "'('");
      std::string a = name("individual");
      expect(Tok::Comma, "','");
      std::string b = name("individual");
      expect(Tok::RParen, "')'");
      return Assertion::of_role(role, Object::individual(a), Object::individual(b));
    }
    Concept c = expr();
    expect(Tok::LParen, "'(' before the individual");
    std::string a = name("individual");
    expect(Tok::RParen, "')'");
    return Assertion::of_concept(c, Object::individual(a));
  }

  Degree degree() {
    const Token& t = peek();
    if (t.kind != Tok::Number) fail("expected degree");
    ++pos_;
    SourceSpan span{line_no_, t.column, static_cast<int>(t.text.size())};
    std::string_view body = t.text;
    bool negative = !body.empty() && body.front() == '-';
    if (negative) body.remove_prefix(1);
    auto d = Degree::parse(body);
    if (!d) {
      errors_.push_back({span, "malformed degree '" + t.text + "'", ParseError::Kind::Lex});
      throw Stop{};
    }
    if (negative || !d->in_unit_interval()) {
      // recorded, parsing continues
      errors_.push_back({span, "degree " + t.text + " lies outside [0,1]", ParseError::Kind::DegreeRange});
      return Degree::zero();
    }
    return *d;
  }

  NeutrosophicAssertion bounded() {
    NeutrosophicAssertion out;
    out.assertion = assertion();
    if (peek().kind == Tok::Geq) {
      ++pos_;
      out.sign = NeutrosophicAssertion::Sign::GeqLeq;
      out.bounds.n = degree();
      expect(Tok::Leq, "'<='");
      out.bounds.m = degree();
    } else if (peek().kind == Tok::Leq) {
      ++pos_;
      out.sign = NeutrosophicAssertion::Sign::LeqGeq;
      out.bounds.n = degree();
      expect(Tok::Geq, "'>='");
      out.bounds.m = degree();
    } else {
      fail("expected '>=' or '<='");
    }
    return out;
  }

  int column() const { return peek().column; }
  int line_no() const { return line_no_; }

 private:
  std::string_view line_;
  int line_no_;
  std::vector<ParseError>& errors_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int end_column_ = 1;
};

template <class F>
auto parse_single(std::string_view text, F&& body) {
  std::vector<ParseError> errors;
  if (text.find('\n') != std::string_view::npos)
    throw ParseFailure({{{1, static_cast<int>(text.find('\n')) + 1, 1}, "unexpected line break", ParseError::Kind::Lex}});
  LineParser p(text, 1, errors);
  using R = decltype(body(p));
  std::optional<R> out;
  if (p.lex()) {
    try {
      out = body(p);
      p.expect_end();
    } catch (const Stop&) {
    }
  }
  if (!errors.empty()) throw ParseFailure(std::move(errors));
  return *out;
}

}  // namespace

Concept parse_concept(std::string_view text) {
  return parse_single(text, [](LineParser& p) { return p.expr(); });
}

Assertion parse_assertion(std::string_view text) {
  return parse_single(text, [](LineParser& p) { return p.assertion(); });
}

NeutrosophicAssertion parse_query(std::string_view text) {
  return parse_single(text, [](LineParser& p) {
    p.accept_keyword("assert");
    return p.bounded();
  });
}

KnowledgeBase parse_kb(std::string_view text) {
  KnowledgeBase kb;
  std::vector<ParseError> errors;
  std::map<std::string, SourceSpan> lhs_spans;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    ++line_no;
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    LineParser p(line, line_no, errors);
    if (!p.lex() || p.empty()) continue;
    try {
      if (p.accept_keyword("assert")) {
        auto a = p.bounded();
        p.expect_end();
        kb.assertions.push_back(std::move(a));
      } else if (p.peek().kind == Tok::Ident && (p.peek().text == "spec" || p.peek().text == "define")) {
        const bool spec = p.peek().text == "spec";
        p.accept_keyword(spec ? "spec" : "define");
        SourceSpan span{line_no, p.column(), static_cast<int>(p.peek().text.size())};
        std::string lhs = p.name("atomic concept");
        p.expect(spec ? Tok::Lt : Tok::Eq, spec ? "'<'" : "'='");
        Concept rhs = p.expr();
        p.expect_end();
        if (auto [it, fresh] = lhs_spans.emplace(lhs, span); !fresh) {
          errors.push_back({span,
                            "concept " + lhs + " already has an axiom (line " + std::to_string(it->second.line) + ")",
                            ParseError::Kind::DuplicateDefinition});
          continue;
        }
        kb.terminology.push_back(
            {lhs, spec ? TerminologicalAxiom::Kind::Specialization : TerminologicalAxiom::Kind::Definition, rhs});
      } else {
        p.fail("expected 'assert', 'spec' or 'define'");
      }
    } catch (const Stop&) {
    }
  }
  if (errors.empty()) {
    for (const auto& v : validate(kb)) {
      SourceSpan span{1, 1, 0};
      if (!v.names.empty()) {
        std::string key = v.names.front();
        if (v.kind == Violation::Kind::StarCollision) key.pop_back();
        if (auto it = lhs_spans.find(key); it != lhs_spans.end()) span = it->second;
      }
      errors.push_back({span, v.message, ParseError::Kind::Validation});
    }
  }
  if (!errors.empty()) throw ParseFailure(std::move(errors));
  return kb;
}

std::string format_concept(const Concept& c) { return c.text(); }

std::string format_axiom(const TerminologicalAxiom& ax) {
  return (ax.kind == TerminologicalAxiom::Kind::Specialization ? "spec " + ax.lhs + " < " : "define " + ax.lhs + " = ") +
         ax.rhs.text();
}

std::string format_kb(const KnowledgeBase& kb) {
  std::string out;
  for (const auto& a : kb.assertions) out += "assert " + format_neutrosophic(a) + "\n";
  for (const auto& ax : kb.terminology) out += format_axiom(ax) + "\n";
  return out;
}

}  // namespace nalc
