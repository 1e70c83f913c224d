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

#ifndef MMTK_SYNTAX_LEXER_HPP
#define MMTK_SYNTAX_LEXER_HPP

#include <optional>
#include <string>
#include <string_view>

#include "mmtk/kernel/error.hpp"

namespace mmtk::syntax {

enum class Tok {
  Name,
  AbsUri,  // <scheme:...>, text without the angle brackets
  RelUri,  // ?Module or ?Module?symbol, text without the leading '?'
  LParen, RParen, LBracket, RBracket, LBrace, RBrace,
  Colon, Dot, Equals, Arrow,
  Notation,  // '#' followed by a fixity keyword; text is the keyword
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1, column = 1;
  std::size_t endLine = 1, endColumn = 1;
};

const char* describe(Tok t);

/// Pull lexer with one token of lookahead. `#` starts a line comment unless
/// it is followed by a fixity keyword, in which case it marks a notation.
class Lexer {
 public:
  Lexer(std::string_view source, std::string file);

  const Token& peek();
  Token next();
  /// Reads the next whitespace-delimited word verbatim. Must not be called
  /// while a token is buffered.
  Token rawWord();

  SourceRef ref(const Token& from, const Token& to) const;
  SourceRef ref(const Token& t) const { return ref(t, t); }
  [[noreturn]] void fail(const Token& at, const std::string& message) const;
  const std::string& file() const { return file_; }

 private:
  Token scan();
  void skipTrivia();
  char cur() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  bool startsWith(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }
  void advance(std::size_t n = 1);

  std::string_view src_;
  std::string file_;
  std::size_t pos_ = 0, line_ = 1, column_ = 1;
  std::optional<Token> buffered_;
};

bool isNameChar(char c);

}  // namespace mmtk::syntax

#endif
