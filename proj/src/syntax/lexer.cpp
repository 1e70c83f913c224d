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

#include "lexer.hpp"

#include <cctype>

#include "mmtk/kernel/module.hpp"

namespace mmtk::syntax {

const char* describe(Tok t) {
  switch (t) {
    case Tok::Name: return "name";
    case Tok::AbsUri: return "URI";
    case Tok::RelUri: return "relative URI";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::Equals: return "'='";
    case Tok::Arrow: return "'->'";
    case Tok::Notation: return "notation";
    case Tok::End: return "end of input";
  }
  return "token";
}

bool isNameChar(char c) {
  switch (c) {
    case '(': case ')': case '[': case ']': case '{': case '}': case ':': case '.':
    case '=': case '#': case '<': case '>': case '?': case '"': case '\0':
      return false;
    default:
      return !std::isspace(static_cast<unsigned char>(c));
  }
}

Lexer::Lexer(std::string_view source, std::string file) : src_(source), file_(std::move(file)) {}

void Lexer::advance(std::size_t n) {
  for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
    // columns count code points, not bytes
    unsigned char c = static_cast<unsigned char>(src_[pos_]);
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((c & 0xC0) != 0x80) {
      ++column_;
    }
    ++pos_;
  }
}

void Lexer::skipTrivia() {
  while (pos_ < src_.size()) {
    if (std::isspace(static_cast<unsigned char>(cur()))) {
      advance();
      continue;
    }
    if (cur() == '#') {
      std::size_t p = pos_ + 1;
      while (p < src_.size() && (src_[p] == ' ' || src_[p] == '\t')) ++p;
      std::size_t q = p;
      while (q < src_.size() && std::isalpha(static_cast<unsigned char>(src_[q]))) ++q;
      if (fixityFromString(src_.substr(p, q - p))) return;
      while (pos_ < src_.size() && cur() != '\n') advance();
      continue;
    }
    return;
  }
}

const Token& Lexer::peek() {
  if (!buffered_) buffered_ = scan();
  return *buffered_;
}

Token Lexer::next() {
  if (buffered_) {
    Token t = std::move(*buffered_);
    buffered_.reset();
    return t;
  }
  return scan();
}

Token Lexer::rawWord() {
  skipTrivia();
  Token t;
  t.kind = Tok::Name;
  t.line = line_;
  t.column = column_;
  while (pos_ < src_.size() && !std::isspace(static_cast<unsigned char>(cur()))) {
    t.text += cur();
    advance();
  }
  t.endLine = line_;
  t.endColumn = column_;
  if (t.text.empty()) fail(t, "expected a word");
  return t;
}

Token Lexer::scan() {
  skipTrivia();
  Token t;
  t.line = line_;
  t.column = column_;
  auto finish = [&](Tok kind, std::size_t len) {
    t.kind = kind;
    if (t.text.empty()) t.text = std::string(src_.substr(pos_, len));
    advance(len);
    t.endLine = line_;
    t.endColumn = column_;
    return t;
  };
  if (pos_ >= src_.size()) return finish(Tok::End, 0);
  switch (cur()) {
    case '(': return finish(Tok::LParen, 1);
    case ')': return finish(Tok::RParen, 1);
    case '[': return finish(Tok::LBracket, 1);
    case ']': return finish(Tok::RBracket, 1);
    case '{': return finish(Tok::LBrace, 1);
    case '}': return finish(Tok::RBrace, 1);
    case ':': return finish(Tok::Colon, 1);
    case '.': return finish(Tok::Dot, 1);
    case '=': return finish(Tok::Equals, 1);
    case '#': {
      advance();
      while (cur() == ' ' || cur() == '\t') advance();
      std::size_t start = pos_;
      while (std::isalpha(static_cast<unsigned char>(cur()))) advance();
      t.kind = Tok::Notation;
      t.text = std::string(src_.substr(start, pos_ - start));
      t.endLine = line_;
      t.endColumn = column_;
      return t;
    }
    case '<': {
      auto close = src_.find('>', pos_);
      if (close == std::string_view::npos) fail(t, "unterminated URI");
      t.text = std::string(src_.substr(pos_ + 1, close - pos_ - 1));
      return finish(Tok::AbsUri, close - pos_ + 1);
    }
    case '?': {
      std::size_t p = pos_;
      std::string text;
      for (int part = 0; part < 2 && p < src_.size() && src_[p] == '?'; ++part) {
        std::size_t q = p + 1;
        while (q < src_.size() && isNameChar(src_[q]) && src_.substr(q, 2) != "->") ++q;
        if (q == p + 1) break;
        if (part) text += '?';
        text += std::string(src_.substr(p + 1, q - p - 1));
        p = q;
      }
      if (text.empty()) fail(t, "malformed relative URI");
      t.text = text;
      return finish(Tok::RelUri, p - pos_);
    }
    default:
      break;
  }
  if (startsWith("->")) return finish(Tok::Arrow, 2);
  std::size_t p = pos_;
  while (p < src_.size() && isNameChar(src_[p]) && src_.substr(p, 2) != "->") ++p;
  if (p == pos_) {
    t.text = std::string(1, cur());
    fail(t, "unexpected character '" + t.text + "'");
  }
  return finish(Tok::Name, p - pos_);
}

SourceRef Lexer::ref(const Token& from, const Token& to) const {
  return SourceRef{file_, from.line, from.column, to.endLine, to.endColumn};
}

void Lexer::fail(const Token& at, const std::string& message) const {
  throw Error(ErrorKind::SyntaxError, file_ + ":" + std::to_string(at.line) + ":" + std::to_string(at.column) + ": " + message,
              ref(at));
}

}  // namespace mmtk::syntax
