// Copyright 2026 The ospec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OSPEC_LEXER_H_
#define OSPEC_LEXER_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ospec/error.h"

namespace ospec {

enum class TokenKind {
  kIdentifier,
  kVariable,   // text holds the name without the trailing '?'
  kInteger,
  kAnonymous,  // "_"
  kKeyword,    // package import new exe return not #minimize
  kPunct,      // :- . , : ; { } ( ) [ ] *
  kOperator,   // == != < > <= >= + - =
};

struct Token {
  TokenKind kind = TokenKind::kPunct;
  std::string text;
  std::int64_t value = 0;
  SourceLocation where;

  bool Is(TokenKind k, std::string_view t) const {
    return kind == k && text == t;
  }
  bool IsPunct(std::string_view t) const { return Is(TokenKind::kPunct, t); }
  bool IsKeyword(std::string_view t) const { return Is(TokenKind::kKeyword, t); }
  bool IsOperator(std::string_view t) const { return Is(TokenKind::kOperator, t); }

  friend bool operator==(const Token& a, const Token& b) {
    return a.kind == b.kind && a.text == b.text && a.value == b.value;
  }
};

// Splits specification source into tokens. '%' starts a comment running to
// the end of the line. Throws Error(Stage::kLex) on unrecognized input.
std::vector<Token> Tokenize(std::string_view source);

bool IsReservedKeyword(std::string_view word);

}  // namespace ospec

#endif  // OSPEC_LEXER_H_
