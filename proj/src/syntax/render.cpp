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

#include "mmtk/syntax/render.hpp"

#include <sstream>

#include "lexer.hpp"
#include "mmtk/syntax/scope.hpp"

namespace mmtk::syntax {

std::string escapeHtml(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

namespace {

constexpr int kArrowPrecedence = -1;

enum class Side { None, Left, Right };

// Where a subterm is printed: the weakest operator it may expose, the
// operator that follows it (if any), and the chain it sits in.
struct Slot {
  int min = kArrowPrecedence;
  std::optional<int> follow;
  bool atomOnly = false;
  int chainPrec = 0;
  Fixity chainFixity = Fixity::Infix;
  Side side = Side::None;
};

struct Op {
  Uri symbol;
  std::string delimiter;
  Fixity fixity;
  int precedence;
  bool isInfix() const {
    return fixity == Fixity::Infix || fixity == Fixity::InfixLeft || fixity == Fixity::InfixRight;
  }
  int rightMin() const { return fixity == Fixity::InfixRight ? precedence : precedence + 1; }
};

bool lexableName(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!isNameChar(c)) return false;
  return s.find("->") == std::string::npos;
}

class TermRenderer {
 public:
  TermRenderer(const Style& style, const Library& lib, const std::optional<Scope>& scope, bool html,
               std::string owner, std::string component)
      : style_(style), lib_(lib), scope_(scope), html_(html), owner_(std::move(owner)),
        component_(std::move(component)) {}

  std::string render(const Term& t, const Context& ctx) {
    for (const auto& d : ctx) bound_.push_back(d.name);
    Position p;
    std::string s = node(t, Slot{}, p);
    bound_.resize(bound_.size() - ctx.size());
    return s;
  }

 private:
  bool isBound(const std::string& n) const {
    return std::find(bound_.rbegin(), bound_.rend(), n) != bound_.rend();
  }

  std::string text(std::string_view s) const { return html_ ? escapeHtml(s) : std::string(s); }

  std::string span(const Position& p, const std::string& cls, const std::string& inner) const {
    if (!html_) return inner;
    return "<span class=\"" + cls + "\" data-mmt-owner=\"" + escapeHtml(owner_) + "\" data-mmt-component=\"" +
           escapeHtml(component_) + "\" data-mmt-position=\"" + positionToString(p) + "\">" + inner + "</span>";
  }

  bool isPrimitive(const Uri& u, const char* name) const {
    if (scope_) {
      if (isBound(name)) return false;
      auto found = scope_->lookup(name);
      return found && *found == u;
    }
    return u.symbol() == name;
  }

  std::optional<Notation> notationOf(const Uri& u) const {
    if (auto it = style_.notations.find(u); it != style_.notations.end()) return it->second;
    if (!style_.useDeclared) return std::nullopt;
    if (scope_) {
      const Notation* n = scope_->notationFor(u);
      return n ? std::optional<Notation>(*n) : std::nullopt;
    }
    try {
      auto c = lib_.constant(u);
      return c->notation;
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  std::optional<Op> operatorFor(const Term& t) const {
    if (!t.isApp() || !t.head().isSym()) return std::nullopt;
    const Uri& u = t.head().uri();
    const std::size_t n = t.args().size();
    if (n == 2 && isPrimitive(u, "arrow")) return Op{u, "->", Fixity::InfixRight, kArrowPrecedence};
    auto nt = notationOf(u);
    if (!nt) return std::nullopt;
    if (n != (nt->isInfix() ? 2u : 1u)) return std::nullopt;
    if (isBound(nt->delimiter)) return std::nullopt;
    if (scope_) {
      const Notation* visible = scope_->notationByDelimiter(nt->delimiter);
      if (!visible || visible->symbol != u) return std::nullopt;
    }
    return Op{u, nt->delimiter, nt->fixity, nt->precedence};
  }

  std::string symbolText(const Uri& u) const {
    if (scope_ && u.symbol()) {
      const std::string& name = *u.symbol();
      auto found = scope_->lookup(name);
      if (found && *found == u && !isBound(name) && lexableName(name) && !scope_->notationByDelimiter(name))
        return name;
    }
    return "<" + u.str() + ">";
  }

  static bool chainConflict(const Slot& slot, const Op& child) {
    if (slot.side == Side::None || slot.chainPrec != child.precedence) return false;
    if (slot.side == Side::Left)
      return !(slot.chainFixity == Fixity::InfixLeft && child.fixity == Fixity::InfixLeft);
    return !(slot.chainFixity == Fixity::InfixRight && child.fixity == Fixity::InfixRight);
  }

  bool needsParens(const Term& t, const Slot& slot) const {
    switch (t.kind()) {
      case Term::Kind::SymRef:
      case Term::Kind::Var:
        return false;
      case Term::Kind::Bind:
        return slot.atomOnly || slot.follow.has_value();
      case Term::Kind::App:
        break;
    }
    if (slot.atomOnly) return true;
    auto op = operatorFor(t);
    if (!op) return false;
    switch (op->fixity) {
      case Fixity::Prefix:
        return slot.follow && *slot.follow >= op->precedence;
      case Fixity::Postfix:
        return op->precedence < slot.min;
      default:
        return op->precedence < slot.min || chainConflict(slot, *op) ||
               (slot.follow && *slot.follow >= op->rightMin());
    }
  }

  std::string node(const Term& t, const Slot& slot, Position& p) {
    if (needsParens(t, slot)) return text("(") + bare(t, Slot{}, p) + text(")");
    return bare(t, slot, p);
  }

  std::string child(const Term& t, const Slot& slot, Position& p, std::size_t i) {
    p.push_back(i);
    std::string s = node(t, slot, p);
    p.pop_back();
    return s;
  }

  std::string delimiterSpan(const Op& op, Position& p) {
    p.push_back(0);
    std::string s = span(p, "mmt-op", text(op.delimiter));
    p.pop_back();
    return s;
  }

  std::string bare(const Term& t, const Slot& slot, Position& p) {
    switch (t.kind()) {
      case Term::Kind::SymRef:
        return span(p, "mmt-sym", text(symbolText(t.uri())));
      case Term::Kind::Var:
        return span(p, "mmt-var", text(t.name()));
      case Term::Kind::Bind:
        return span(p, "mmt-bind", binding(t, slot, p));
      case Term::Kind::App:
        break;
    }
    auto op = operatorFor(t);
    std::string out;
    if (!op) {
      Slot atom;
      atom.atomOnly = true;
      out = child(t.head(), atom, p, 0);
      for (std::size_t i = 0; i < t.args().size(); ++i) out += " " + child(t.args()[i], atom, p, i + 1);
      return span(p, "mmt-app", out);
    }
    switch (op->fixity) {
      case Fixity::Prefix: {
        Slot s{op->precedence, slot.follow};
        out = delimiterSpan(*op, p) + " " + child(t.args()[0], s, p, 1);
        break;
      }
      case Fixity::Postfix: {
        Slot s{slot.min, op->precedence};
        out = child(t.args()[0], s, p, 1) + " " + delimiterSpan(*op, p);
        break;
      }
      default: {
        Slot left{slot.min, op->precedence, false, op->precedence, op->fixity, Side::Left};
        Slot right{op->rightMin(), slot.follow, false, op->precedence, op->fixity, Side::Right};
        out = child(t.args()[0], left, p, 1) + " " + delimiterSpan(*op, p) + " " + child(t.args()[1], right, p, 2);
        break;
      }
    }
    return span(p, "mmt-app", out);
  }

  // Multi-variable bindings print as nested binders; only the first opening
  // bracket carries the binder's position.
  std::string binding(const Term& t, const Slot& slot, Position& p) {
    const Uri* binder = t.binder().isSym() ? &t.binder().uri() : nullptr;
    const bool lambda = binder && isPrimitive(*binder, "lambda");
    const bool pi = binder && !lambda && isPrimitive(*binder, "Pi");
    std::string out;
    std::string open = pi ? "{" : "[", close = pi ? "}" : "]";
    if (!lambda && !pi) {
      // no concrete syntax for other binders: print the binder applied to a
      // lambda-style binding
      Slot atom;
      atom.atomOnly = true;
      out = child(t.binder(), atom, p, 0) + " ";
    }
    std::size_t pushed = 0;
    const auto& vars = t.vars();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      std::string bracket = text(open);
      if (i == 0 && (lambda || pi)) {
        p.push_back(0);
        bracket = span(p, "mmt-binder", bracket);
        p.pop_back();
      }
      out += bracket + text(vars[i].name);
      if (vars[i].type) out += text(":") + child(*vars[i].type, Slot{}, p, i + 1);
      out += text(close) + " ";
      bound_.push_back(vars[i].name);
      ++pushed;
    }
    Slot body{kArrowPrecedence, slot.follow};
    out += child(t.body(), body, p, vars.size() + 1);
    bound_.resize(bound_.size() - pushed);
    return out;
  }

  const Style& style_;
  const Library& lib_;
  const std::optional<Scope>& scope_;
  bool html_;
  std::string owner_;
  std::string component_;
  std::vector<std::string> bound_;
};

std::optional<Scope> scopeFor(const std::optional<Uri>& owner, const Library& lib) {
  if (!owner || !owner->module()) return std::nullopt;
  try {
    ModulePtr m = lib.module(owner->moduleUri());
    if (const auto* th = std::get_if<Theory>(m.get())) return Scope(*th, lib);
    const auto& v = std::get<View>(*m);
    return Scope(*lib.theory(v.to), lib);
  } catch (const Error&) {
    return std::nullopt;
  }
}

bool htmlTarget(const Style& style, std::optional<Target> target) {
  return target.value_or(style.target) == Target::Html;
}

std::string renderIn(const Term& t, const Style& style, const Library& lib, const std::optional<Scope>& scope,
                     bool html, const std::string& owner, const std::string& component) {
  TermRenderer r(style, lib, scope, html, owner, component);
  return r.render(t, Context{});
}

std::string renderConstant(const Constant& c, const Uri& theory, const Style& style, const Library& lib,
                           const std::optional<Scope>& scope, bool html) {
  const Uri uri = theory / c.name;
  auto esc = [&](std::string_view s) { return html ? escapeHtml(s) : std::string(s); };
  std::string out;
  if (html) out += "<div class=\"mmt-constant\" data-mmt-uri=\"" + escapeHtml(uri.str()) + "\">";
  out += html ? "<span class=\"mmt-name\">" + escapeHtml(c.name) + "</span>" : c.name;
  if (c.type) out += esc(" : ") + renderIn(*c.type, style, lib, scope, html, uri.str(), "type");
  if (c.definiens) out += esc(" = ") + renderIn(*c.definiens, style, lib, scope, html, uri.str(), "definiens");
  if (c.notation) {
    const Notation& n = *c.notation;
    out += esc(" # " + std::string(to_string(n.fixity)) + " " + n.delimiter + " " + std::to_string(n.precedence));
  }
  out += ".";
  if (html) out += "</div>";
  return out;
}

std::string renderInclude(const Include& i, bool html) {
  if (!html) return "include <" + i.from.str() + ">";
  return "<div class=\"mmt-include\"><span class=\"mmt-keyword\">include</span> " + escapeHtml("<" + i.from.str() + ">") +
         "</div>";
}

}  // namespace

std::string renderTerm(const Term& t, const Style& style, const Library& lib, const RenderOptions& opts) {
  auto scope = scopeFor(opts.owner, lib);
  TermRenderer r(style, lib, scope, htmlTarget(style, opts.target), opts.owner ? opts.owner->str() : "",
                 opts.component);
  return r.render(t, opts.context);
}

std::string renderDeclaration(const Declaration& d, const Uri& theory, const Style& style, const Library& lib,
                              std::optional<Target> target) {
  const bool html = htmlTarget(style, target);
  if (const auto* i = std::get_if<Include>(&d)) return renderInclude(*i, html);
  return renderConstant(std::get<Constant>(d), theory, style, lib, scopeFor(theory, lib), html);
}

std::string renderTheory(const Theory& t, const Style& style, const Library& lib, std::optional<Target> target) {
  const bool html = htmlTarget(style, target);
  std::optional<Scope> scope;
  try {
    scope = Scope(t, lib);
  } catch (const Error&) {
  }
  std::string head = "theory " + *t.uri.module();
  if (t.meta) head += " : <" + t.meta->str() + ">";
  head += " = {";
  std::ostringstream out;
  if (html) {
    out << "<div class=\"mmt-theory\" data-mmt-uri=\"" << escapeHtml(t.uri.str()) << "\">\n<div class=\"mmt-header\">"
        << escapeHtml(head) << "</div>\n";
  } else {
    out << head << "\n";
  }
  for (const auto& d : t.declarations) {
    out << "  ";
    if (const auto* i = std::get_if<Include>(&d))
      out << renderInclude(*i, html);
    else
      out << renderConstant(std::get<Constant>(d), t.uri, style, lib, scope, html);
    out << "\n";
  }
  out << (html ? "<div class=\"mmt-footer\">}</div>\n</div>\n" : "}\n");
  return out.str();
}

std::string renderView(const View& v, const Style& style, const Library& lib, std::optional<Target> target) {
  const bool html = htmlTarget(style, target);
  std::optional<Scope> scope;
  try {
    scope = Scope(*lib.theory(v.to), lib);
  } catch (const Error&) {
  }
  std::string head = "view " + *v.uri.module() + " : <" + v.from.str() + "> -> <" + v.to.str() + "> = {";
  std::ostringstream out;
  if (html) {
    out << "<div class=\"mmt-view\" data-mmt-uri=\"" << escapeHtml(v.uri.str()) << "\">\n<div class=\"mmt-header\">"
        << escapeHtml(head) << "</div>\n";
  } else {
    out << head << "\n";
  }
  for (const auto& [key, value] : v.assignments) {
    const std::string owner = (v.uri / key).str();
    out << "  ";
    if (html) out << "<div class=\"mmt-assignment\" data-mmt-uri=\"" << escapeHtml(owner) << "\">";
    out << (html ? escapeHtml(key) : key) << " = " << renderIn(value, style, lib, scope, html, owner, "definiens") << ".";
    if (html) out << "</div>";
    out << "\n";
  }
  out << (html ? "<div class=\"mmt-footer\">}</div>\n</div>\n" : "}\n");
  return out.str();
}

std::string renderModule(const Module& m, const Style& style, const Library& lib, std::optional<Target> target) {
  if (const auto* t = std::get_if<Theory>(&m)) return renderTheory(*t, style, lib, target);
  return renderView(std::get<View>(m), style, lib, target);
}

}  // namespace mmtk::syntax
