/*
 * Copyright 2026 The mmtk Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "mmtk/syntax/parser.hpp"

#include <charconv>
#include <map>

#include "lexer.hpp"

namespace mmtk::syntax {

namespace {

struct Operator {
  Uri symbol;
  int precedence;
  Fixity fixity;
  bool isInfix() const {
    return fixity == Fixity::Infix || fixity == Fixity::InfixLeft || fixity == Fixity::InfixRight;
  }
};

constexpr int kArrowPrecedence = -1;

class TermParser {
 public:
  TermParser(Lexer& lex, const Scope& scope, const Context& ctx) : lex_(lex), scope_(scope) {
    for (const auto& d : ctx) bound_.push_back(d.name);
  }

  Term parseTerm() { return parseOp(kArrowPrecedence, std::nullopt); }

 private:
  bool isBound(const std::string& name) const {
    return std::find(bound_.rbegin(), bound_.rend(), name) != bound_.rend();
  }

  const Notation* notationToken(const Token& t) const {
    if (t.kind != Tok::Name || isBound(t.text)) return nullptr;
    return scope_.notationByDelimiter(t.text);
  }

  std::optional<Operator> binaryOrPostfix(const Token& t) {
    if (t.kind == Tok::Arrow) return Operator{primitive("arrow", t), kArrowPrecedence, Fixity::InfixRight};
    const Notation* n = notationToken(t);
    if (!n || n->fixity == Fixity::Prefix) return std::nullopt;
    return Operator{n->symbol, n->precedence, n->fixity};
  }

  Uri primitive(const std::string& name, const Token& at) {
    auto it = primitives_.find(name);
    if (it != primitives_.end()) return it->second;
    auto u = scope_.lookup(name);
    if (!u) throw Error(ErrorKind::UnresolvedName, "'" + name + "' is not visible (needed for this notation)", lex_.ref(at));
    primitives_.emplace(name, *u);
    return *u;
  }

  static bool sameChain(const Operator& a, const Operator& b) {
    return a.fixity == b.fixity && (a.fixity == Fixity::InfixLeft || a.fixity == Fixity::InfixRight);
  }

  Term parseOp(int minPrec, const std::optional<Operator>& context) {
    Term lhs = parseUnary();
    std::optional<Operator> previous;
    while (true) {
      const Token& t = lex_.peek();
      auto op = binaryOrPostfix(t);
      if (!op || op->precedence < minPrec) break;
      if (op->isInfix()) {
        for (const Operator* other : std::initializer_list<const Operator*>{previous ? &*previous : nullptr,
                                                                       context ? &*context : nullptr}) {
          if (other && other->isInfix() && other->precedence == op->precedence && !sameChain(*other, *op))
            throw Error(ErrorKind::NonAssociativeChain,
                        "operators of precedence " + std::to_string(op->precedence) +
                            " cannot be chained without parentheses at '" + t.text + "'",
                        lex_.ref(t));
        }
      }
      Token opToken = lex_.next();
      if (op->fixity == Fixity::Postfix) {
        lhs = Term::app(Term::sym(op->symbol), {lhs});
      } else {
        int rhsMin = op->fixity == Fixity::InfixRight ? op->precedence : op->precedence + 1;
        Term rhs = parseOp(rhsMin, op);
        lhs = Term::app(Term::sym(op->symbol), {lhs, rhs});
      }
      previous = op;
    }
    return lhs;
  }

  bool atomStart(const Token& t) const {
    switch (t.kind) {
      case Tok::LParen:
      case Tok::AbsUri:
      case Tok::RelUri:
        return true;
      case Tok::Name:
        return notationToken(t) == nullptr;
      default:
        return false;
    }
  }

  Term parseUnary() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::LBracket || t.kind == Tok::LBrace) return parseBinder();
    if (const Notation* n = notationToken(t); n && n->fixity == Fixity::Prefix) {
      lex_.next();
      Term operand = parseOp(n->precedence, std::nullopt);
      return Term::app(Term::sym(n->symbol), {operand});
    }
    if (!atomStart(t)) lex_.fail(t, std::string("expected a term, found ") + describe(t.kind) +
                                        (t.text.empty() ? "" : " '" + t.text + "'"));
    Term head = parseAtom();
    std::vector<Term> args;
    while (atomStart(lex_.peek())) args.push_back(parseAtom());
    if (args.empty()) return head;
    return Term::app(head, std::move(args));
  }

  Term parseBinder() {
    Token open = lex_.next();
    const bool pi = open.kind == Tok::LBrace;
    const Tok close = pi ? Tok::RBrace : Tok::RBracket;
    Token name = lex_.next();
    if (name.kind != Tok::Name || !isValidName(name.text)) lex_.fail(name, "expected a variable name");
    VarDecl decl{name.text, std::nullopt, std::nullopt};
    if (lex_.peek().kind == Tok::Colon) {
      lex_.next();
      decl.type = parseTerm();
    }
    Token closing = lex_.next();
    if (closing.kind != close) lex_.fail(closing, std::string("expected ") + describe(close));
    Uri binder = primitive(pi ? "Pi" : "lambda", open);
    bound_.push_back(decl.name);
    Term body = parseOp(kArrowPrecedence, std::nullopt);
    bound_.pop_back();
    return Term::bind(Term::sym(binder), {std::move(decl)}, std::move(body));
  }

  Term parseAtom() {
    Token t = lex_.next();
    switch (t.kind) {
      case Tok::LParen: {
        Term inner = parseTerm();
        Token close = lex_.next();
        if (close.kind != Tok::RParen) lex_.fail(close, "expected ')'");
        return inner;
      }
      case Tok::AbsUri:
        return Term::sym(symbolUri(Uri::parse(t.text), t));
      case Tok::RelUri:
        return Term::sym(symbolUri(Uri::parse(scope_.ns() + "?" + t.text), t));
      case Tok::Name: {
        if (isBound(t.text)) return Term::var(t.text);
        if (auto u = scope_.lookup(t.text)) return Term::sym(*u);
        throw Error(ErrorKind::UnresolvedName, "unknown name '" + t.text + "' at " + lex_.ref(t).toString(), lex_.ref(t));
      }
      default:
        lex_.fail(t, "expected an atom");
    }
  }

  Uri symbolUri(Uri u, const Token& t) const {
    if (!u.isSymbol()) lex_.fail(t, "symbol URI expected: " + u.str());
    return u;
  }

  Lexer& lex_;
  const Scope& scope_;
  std::vector<std::string> bound_;
  std::map<std::string, Uri> primitives_;
};

Term wrapErrors(const std::function<Term()>& f, const std::string& file) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MalformedUri)
      throw Error(ErrorKind::SyntaxError, file + ": " + e.message());
    throw;
  }
}

class DocumentParser {
 public:
  DocumentParser(std::string_view source, const Library& lib, const std::optional<std::string>& expected,
                 const std::string& file)
      : lex_(source, file), lib_(lib), expected_(expected) {
    lookup_ = [this](const Uri& u) -> TheoryPtr {
      if (auto it = local_.find(u); it != local_.end()) return it->second;
      return lib_.theory(u);
    };
  }

  std::vector<Module> parse() {
    readNamespace();
    while (lex_.peek().kind != Tok::End) {
      Token kw = lex_.next();
      if (kw.kind == Tok::Name && kw.text == "theory")
        parseTheory(kw);
      else if (kw.kind == Tok::Name && kw.text == "view")
        parseView(kw);
      else if (kw.kind == Tok::Name && kw.text == "namespace")
        lex_.fail(kw, "only one namespace directive per document is supported");
      else
        lex_.fail(kw, "expected 'theory' or 'view'");
    }
    return std::move(out_);
  }

  void readNamespace() {
    const Token& first = lex_.peek();
    if (first.kind == Tok::Name && first.text == "namespace") {
      lex_.next();
      Token word = lex_.rawWord();
      std::string ns = word.text;
      if (ns.size() >= 2 && ns.front() == '<' && ns.back() == '>') ns = ns.substr(1, ns.size() - 2);
      try {
        Uri check(ns);
      } catch (const Error& e) {
        lex_.fail(word, "invalid namespace: " + e.message());
      }
      if (expected_ && ns.rfind(*expected_, 0) != 0)
        lex_.fail(word, "namespace " + ns + " is outside the expected namespace " + *expected_);
      ns_ = ns;
    } else if (expected_) {
      ns_ = *expected_;
    } else {
      lex_.fail(first, "document must start with a namespace directive");
    }
  }

  Token expect(Tok kind, const std::string& what) {
    Token t = lex_.next();
    if (t.kind != kind) lex_.fail(t, std::string("expected ") + what + ", found " + describe(t.kind) +
                                         (t.text.empty() ? "" : " '" + t.text + "'"));
    return t;
  }

  Token expectName() {
    Token t = expect(Tok::Name, "a name");
    if (!isValidName(t.text)) lex_.fail(t, "invalid name '" + t.text + "'");
    return t;
  }

  Uri moduleRef() {
    Token t = lex_.next();
    Uri u;
    try {
      switch (t.kind) {
        case Tok::AbsUri: u = Uri::parse(t.text); break;
        case Tok::RelUri: u = Uri::parse(ns_ + "?" + t.text); break;
        case Tok::Name: u = Uri(ns_, t.text); break;
        default: lex_.fail(t, "expected a module reference");
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::MalformedUri) throw;
      lex_.fail(t, e.message());
    }
    if (!u.isModule()) lex_.fail(t, "module URI expected: " + u.str());
    try {
      lookup_(u);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotFound) throw;
      throw Error(ErrorKind::UnresolvedName, "unknown module " + u.str() + " at " + lex_.ref(t).toString(), lex_.ref(t));
    }
    return u;
  }

  void checkNewModule(const Uri& u, const Token& at) {
    for (const auto& m : out_)
      if (moduleUri(m) == u)
        throw Error(ErrorKind::DuplicateDeclaration, "module " + u.str() + " declared twice", lex_.ref(at));
  }

  Term term(const Scope& scope) {
    TermParser p(lex_, scope, Context{});
    return wrapErrors([&] { return p.parseTerm(); }, lex_.file());
  }

  void parseTheory(const Token& kw) {
    Token name = expectName();
    auto th = std::make_shared<Theory>();
    th->uri = Uri(ns_, name.text);
    checkNewModule(th->uri, name);
    if (lex_.peek().kind == Tok::Colon) {
      lex_.next();
      th->meta = moduleRef();
    }
    expect(Tok::Equals, "'='");
    expect(Tok::LBrace, "'{'");
    Scope scope(*th, lookup_);
    while (lex_.peek().kind != Tok::RBrace) {
      Token first = expectName();
      if (first.text == "include" && isModuleRefStart(lex_.peek())) {
        Uri from = moduleRef();
        SourceRef ref = lex_.ref(first);
        if (lex_.peek().kind == Tok::Dot) ref = lex_.ref(first, lex_.next());
        th->declarations.push_back(Include{from, ref});
        scope = Scope(*th, lookup_);
        continue;
      }
      Constant c = parseConstant(first, th->uri, scope);
      if (th->findConstant(c.name))
        throw Error(ErrorKind::DuplicateDeclaration, "constant " + c.name + " declared twice in " + th->uri.str(),
                    c.source);
      scope.declareLocal(th->uri, c);
      th->declarations.push_back(std::move(c));
    }
    Token close = lex_.next();
    if (lex_.peek().kind == Tok::Dot) close = lex_.next();
    th->source = lex_.ref(kw, close);
    local_[th->uri] = th;
    out_.push_back(*th);
  }

  static bool isModuleRefStart(const Token& t) {
    return t.kind == Tok::AbsUri || t.kind == Tok::RelUri || t.kind == Tok::Name;
  }

  Constant parseConstant(const Token& name, const Uri& theory, const Scope& scope) {
    Constant c;
    c.name = name.text;
    if (lex_.peek().kind == Tok::Colon) {
      lex_.next();
      c.type = term(scope);
    }
    if (lex_.peek().kind == Tok::Equals) {
      lex_.next();
      c.definiens = term(scope);
    }
    if (lex_.peek().kind == Tok::Notation) {
      Token marker = lex_.next();
      Notation n;
      n.symbol = theory / c.name;
      n.fixity = *fixityFromString(marker.text);
      n.arity = n.isInfix() ? 2 : 1;
      n.delimiter = lex_.rawWord().text;
      Token prec = expect(Tok::Name, "a precedence");
      auto [ptr, ec] = std::from_chars(prec.text.data(), prec.text.data() + prec.text.size(), n.precedence);
      if (ec != std::errc() || ptr != prec.text.data() + prec.text.size())
        lex_.fail(prec, "precedence must be a natural number");
      try {
        n.validate();
      } catch (const Error& e) {
        lex_.fail(marker, e.message());
      }
      c.notation = n;
    }
    Token dot = expect(Tok::Dot, "'.' after declaration of " + c.name);
    c.source = lex_.ref(name, dot);
    return c;
  }

  void parseView(const Token& kw) {
    Token name = expectName();
    View v;
    v.uri = Uri(ns_, name.text);
    checkNewModule(v.uri, name);
    expect(Tok::Colon, "':'");
    v.from = moduleRef();
    expect(Tok::Arrow, "'->'");
    v.to = moduleRef();
    expect(Tok::Equals, "'='");
    expect(Tok::LBrace, "'{'");
    Scope scope(*lookup_(v.to), lookup_);
    while (lex_.peek().kind != Tok::RBrace) {
      Token key = expectName();
      expect(Tok::Equals, "'='");
      Term value = term(scope);
      expect(Tok::Dot, "'.'");
      if (!v.assignments.emplace(key.text, value).second)
        throw Error(ErrorKind::DuplicateDeclaration, "assignment to " + key.text + " given twice", lex_.ref(key));
    }
    Token close = lex_.next();
    if (lex_.peek().kind == Tok::Dot) close = lex_.next();
    v.source = lex_.ref(kw, close);
    out_.push_back(std::move(v));
  }

 private:
  Lexer lex_;
  const Library& lib_;
  std::optional<std::string> expected_;
  std::string ns_;
  TheoryLookup lookup_;
  std::map<Uri, TheoryPtr> local_;
  std::vector<Module> out_;
};

}  // namespace

std::vector<Module> parseDocument(std::string_view source, const Library& lib,
                                  const std::optional<std::string>& expectedNamespace, const std::string& file) {
  DocumentParser p(source, lib, expectedNamespace, file);
  return p.parse();
}

Term parseTerm(std::string_view s, const Scope& scope, const Context& ctx) {
  Lexer lex(s, "<term>");
  TermParser p(lex, scope, ctx);
  return wrapErrors(
      [&] {
        Term t = p.parseTerm();
        const Token& rest = lex.peek();
        if (rest.kind != Tok::End) lex.fail(rest, "unexpected " + std::string(describe(rest.kind)) + " '" + rest.text + "'");
        return t;
      },
      "<term>");
}

Term parseTerm(std::string_view s, const Theory& scope, const Library& lib, const Context& ctx) {
  return parseTerm(s, Scope(scope, lib), ctx);
}

std::vector<Uri> scanModules(std::string_view source, const std::optional<std::string>& expectedNamespace,
                             const std::string& file) {
  Lexer lex(source, file);
  std::string ns;
  const Token& first = lex.peek();
  if (first.kind == Tok::Name && first.text == "namespace") {
    lex.next();
    ns = lex.rawWord().text;
    if (ns.size() >= 2 && ns.front() == '<' && ns.back() == '>') ns = ns.substr(1, ns.size() - 2);
  } else if (expectedNamespace) {
    ns = *expectedNamespace;
  } else {
    return {};
  }
  std::vector<Uri> out;
  int depth = 0;
  while (true) {
    Token t = lex.next();
    if (t.kind == Tok::End) break;
    if (t.kind == Tok::LBrace) ++depth;
    if (t.kind == Tok::RBrace) --depth;
    if (t.kind == Tok::Notation) lex.rawWord();
    if (depth == 0 && t.kind == Tok::Name && (t.text == "theory" || t.text == "view")) {
      Token name = lex.next();
      if (name.kind == Tok::Name && isValidName(name.text)) {
        try {
          out.emplace_back(ns, name.text);
        } catch (const Error&) {
        }
      }
    }
  }
  return out;
}

}  // namespace mmtk::syntax
