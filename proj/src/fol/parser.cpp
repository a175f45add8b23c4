#include "folbench/fol/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "folbench/errors.hpp"

namespace folbench::fol {
namespace {

enum class Tok {
  Ident,
  LParen,
  RParen,
  Comma,
  Dot,
  Not,
  And,
  Or,
  Xor,
  Implies,
  Iff,
  Forall,
  Exists,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

struct Symbol {
  std::string_view text;
  Tok kind;
};

// Longest spellings first so that "<->" wins over "<" prefixes etc.
constexpr Symbol kSymbols[] = {
    {"<->", Tok::Iff},     {"<=>", Tok::Iff},     {"↔", Tok::Iff},    {"⇔", Tok::Iff},
    {"->", Tok::Implies},  {"=>", Tok::Implies},  {"→", Tok::Implies}, {"⇒", Tok::Implies},
    {"∀", Tok::Forall},    {"∃", Tok::Exists},    {"¬", Tok::Not},    {"∧", Tok::And},
    {"∨", Tok::Or},        {"⊕", Tok::Xor},       {"&&", Tok::And},   {"||", Tok::Or},
    {"!", Tok::Not},       {"~", Tok::Not},       {"&", Tok::And},    {"|", Tok::Or},
    {"(", Tok::LParen},    {")", Tok::RParen},    {",", Tok::Comma},  {".", Tok::Dot},
    {":", Tok::Dot},
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_'; }

std::vector<Token> tokenize(std::string_view in) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < in.size()) {
    const auto c = static_cast<unsigned char>(in[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < in.size() && ident_char(static_cast<unsigned char>(in[j]))) ++j;
      std::string word(in.substr(i, j - i));
      Tok kind = Tok::Ident;
      if (word == "forall") kind = Tok::Forall;
      else if (word == "exists") kind = Tok::Exists;
      out.push_back({kind, std::move(word), i});
      i = j;
      continue;
    }
    bool matched = false;
    for (const auto& sym : kSymbols) {
      if (in.substr(i, sym.text.size()) == sym.text) {
        out.push_back({sym.kind, std::string(sym.text), i});
        i += sym.text.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      // Report the whole UTF-8 sequence of the offending character.
      std::size_t len = 1;
      if (c >= 0xF0) len = 4;
      else if (c >= 0xE0) len = 3;
      else if (c >= 0xC0) len = 2;
      throw SyntaxError(i, "a formula token", "'" + std::string(in.substr(i, len)) + "'");
    }
  }
  out.push_back({Tok::End, "", in.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view input, const Signature* sig, const ParseOptions& opts)
      : tokens_(tokenize(input)), sig_(sig), opts_(opts) {}

  ParseResult run() {
    Formula f = parse_iff();
    expect(Tok::End, "end of input");
    return ParseResult{std::move(f), std::move(warnings_), std::move(used_)};
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool accept(Tok t) {
    if (peek().kind != t) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok t, const char* what) {
    if (peek().kind != t) fail(what);
    return next();
  }
  [[noreturn]] void fail(const char* expected) const {
    const auto& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(t.pos, expected, found);
  }

  Formula parse_iff() {
    Formula lhs = parse_implies();
    if (accept(Tok::Iff)) return Formula::iff(std::move(lhs), parse_iff());
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (accept(Tok::Implies)) return Formula::implies(std::move(lhs), parse_implies());
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    for (;;) {
      if (accept(Tok::Or)) {
        lhs = Formula::disj(std::move(lhs), parse_and());
      } else if (peek().kind == Tok::Xor) {
        const auto at = next().pos;
        if (!opts_.expand_xor) throw XorRejected(at);
        Formula rhs = parse_and();
        lhs = Formula::conj(Formula::disj(lhs, rhs),
                            Formula::negation(Formula::conj(lhs, rhs)));
      } else {
        return lhs;
      }
    }
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (accept(Tok::And)) lhs = Formula::conj(std::move(lhs), parse_unary());
    return lhs;
  }

  Formula parse_unary() {
    const auto& t = peek();
    switch (t.kind) {
      case Tok::Not:
        next();
        return Formula::negation(parse_unary());
      case Tok::Forall:
      case Tok::Exists: {
        const Quantifier q = t.kind == Tok::Forall ? Quantifier::Forall : Quantifier::Exists;
        next();
        const auto& var = expect(Tok::Ident, "a variable after the quantifier");
        if (sig_ && sig_->declares(var.text))
          throw SyntaxError(var.pos, "a variable name", "declared symbol '" + var.text + "'");
        accept(Tok::Dot);
        if (std::find(bound_.begin(), bound_.end(), var.text) != bound_.end())
          warnings_.push_back("variable '" + var.text + "' at offset " + std::to_string(var.pos) +
                              " shadows an outer binder");
        bound_.push_back(var.text);
        Formula body = parse_iff();
        bound_.pop_back();
        return Formula::quantified(q, var.text, std::move(body));
      }
      case Tok::LParen: {
        next();
        Formula inner = parse_iff();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident:
        return parse_atom();
      default:
        fail("a formula");
    }
  }

  Formula parse_atom() {
    const Token name = next();
    std::vector<Term> args;
    if (accept(Tok::LParen)) {
      if (peek().kind != Tok::RParen) {
        args.push_back(parse_term());
        while (accept(Tok::Comma)) args.push_back(parse_term());
      }
      expect(Tok::RParen, "')' or ','");
    }
    if (sig_) {
      auto arity = sig_->predicate_arity(name.text);
      if (!arity) throw UnknownSymbol(name.text);
      if (*arity != args.size()) throw ArityMismatch(name.text, *arity, args.size());
    }
    note_predicate(name, args.size());
    return Formula::atom(name.text, std::move(args));
  }

  Term parse_term() {
    const Token& name = expect(Tok::Ident, "a term");
    const std::string text = name.text;
    if (accept(Tok::LParen)) {
      std::vector<Term> args;
      args.push_back(parse_term());
      while (accept(Tok::Comma)) args.push_back(parse_term());
      expect(Tok::RParen, "')' or ','");
      if (sig_) {
        auto arity = sig_->function_arity(text);
        if (!arity) throw UnknownSymbol(text);
        if (*arity != args.size()) throw ArityMismatch(text, *arity, args.size());
      }
      try {
        used_.add_function(text, args.size());
      } catch (const InvalidSignature&) {
        throw SyntaxError(name.pos, "consistent use of '" + text + "'", "conflicting use");
      }
      return Term::function(text, std::move(args));
    }
    if (std::find(bound_.begin(), bound_.end(), text) != bound_.end()) return Term::variable(text);
    if (sig_) {
      if (sig_->has_constant(text)) {
        used_.add_constant(text);
        return Term::constant(text);
      }
      if (sig_->declares(text))
        throw SyntaxError(name.pos, "a term", "non-constant symbol '" + text + "'");
      return Term::variable(text);
    }
    try {
      used_.add_constant(text);
    } catch (const InvalidSignature&) {
      throw SyntaxError(name.pos, "consistent use of '" + text + "'", "conflicting use");
    }
    return Term::constant(text);
  }

  void note_predicate(const Token& name, std::size_t arity) {
    try {
      used_.add_predicate(name.text, arity);
    } catch (const InvalidSignature&) {
      if (auto prev = used_.predicate_arity(name.text))
        throw ArityMismatch(name.text, *prev, arity);
      throw SyntaxError(name.pos, "consistent use of '" + name.text + "'", "conflicting use");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Signature* sig_;
  ParseOptions opts_;
  std::vector<std::string> bound_;
  std::vector<std::string> warnings_;
  Signature used_;
};

}  // namespace

ParseResult parse_formula_detailed(std::string_view input, const Signature& sig,
                                   const ParseOptions& opts) {
  return Parser(input, &sig, opts).run();
}

Formula parse_formula(std::string_view input, const Signature& sig, const ParseOptions& opts) {
  return parse_formula_detailed(input, sig, opts).formula;
}

ParseResult parse_formula_inferring(std::string_view input, const ParseOptions& opts) {
  return Parser(input, nullptr, opts).run();
}

}  // namespace folbench::fol
