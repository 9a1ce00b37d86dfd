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

#include "ospec/lexer.h"

#include <array>
#include <cctype>
#include <charconv>

namespace ospec {

namespace {

constexpr std::array<std::string_view, 6> kKeywords = {
    "package", "import", "new", "exe", "return", "not"};

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  std::vector<Token> Run() {
    std::vector<Token> tokens;
    while (true) {
      SkipSpaceAndComments();
      if (pos_ >= src_.size()) break;
      tokens.push_back(Next());
    }
    return tokens;
  }

 private:
  char Peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void Advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void SkipSpaceAndComments() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
      } else if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') Advance();
      } else {
        break;
      }
    }
  }

  Token Make(TokenKind kind, std::string text, SourceLocation where) {
    Token t;
    t.kind = kind;
    t.text = std::move(text);
    t.where = where;
    return t;
  }

  Token Next() {
    const SourceLocation where{line_, column_};
    const char c = Peek();

    if (IsIdentStart(c)) {
      const std::size_t start = pos_;
      while (IsIdentChar(Peek())) Advance();
      std::string word(src_.substr(start, pos_ - start));
      if (Peek() == '?') {
        Advance();
        return Make(TokenKind::kVariable, std::move(word), where);
      }
      if (word == "_") return Make(TokenKind::kAnonymous, "_", where);
      if (IsReservedKeyword(word)) {
        return Make(TokenKind::kKeyword, std::move(word), where);
      }
      return Make(TokenKind::kIdentifier, std::move(word), where);
    }

    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(Peek()))) Advance();
      std::string_view digits = src_.substr(start, pos_ - start);
      Token t = Make(TokenKind::kInteger, std::string(digits), where);
      auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), t.value);
      if (ec != std::errc()) {
        throw Error(Stage::kLex, "integer literal out of range: " + t.text,
                    where);
      }
      return t;
    }

    if (c == '#') {
      const std::size_t start = pos_;
      Advance();
      while (IsIdentChar(Peek())) Advance();
      std::string word(src_.substr(start, pos_ - start));
      if (word == "#minimize") return Make(TokenKind::kKeyword, word, where);
      throw Error(Stage::kLex, "unknown directive '" + word + "'", where);
    }

    // Two-character tokens first.
    const char n = Peek(1);
    auto two = [&](std::string text, TokenKind kind) {
      Advance();
      Advance();
      return Make(kind, std::move(text), where);
    };
    if (c == ':' && n == '-') return two(":-", TokenKind::kPunct);
    if (c == '=' && n == '=') return two("==", TokenKind::kOperator);
    if (c == '!' && n == '=') return two("!=", TokenKind::kOperator);
    if (c == '<' && n == '=') return two("<=", TokenKind::kOperator);
    if (c == '>' && n == '=') return two(">=", TokenKind::kOperator);

    switch (c) {
      case '.': case ',': case ':': case ';': case '{': case '}':
      case '(': case ')': case '[': case ']': case '*':
        Advance();
        return Make(TokenKind::kPunct, std::string(1, c), where);
      case '<': case '>': case '+': case '-': case '=':
        Advance();
        return Make(TokenKind::kOperator, std::string(1, c), where);
      default:
        break;
    }
    std::string shown = std::isprint(static_cast<unsigned char>(c))
                            ? std::string(1, c)
                            : "\\x" + std::to_string(static_cast<unsigned char>(c));
    throw Error(Stage::kLex, "unexpected character '" + shown + "'", where);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

bool IsReservedKeyword(std::string_view word) {
  for (std::string_view k : kKeywords) {
    if (k == word) return true;
  }
  return false;
}

std::vector<Token> Tokenize(std::string_view source) {
  return Lexer(source).Run();
}

}  // namespace ospec
