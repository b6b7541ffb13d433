// Copyright 2026 The Jeopardy Authors
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

#include "jeopardy/lexer.h"

#include <cctype>
#include <map>

namespace jeopardy::frontend {

namespace {

const std::map<std::string_view, TokenKind>& keywords() {
  static const std::map<std::string_view, TokenKind> kKeywords = {
      {"data", TokenKind::KwData}, {"main", TokenKind::KwMain},
      {"case", TokenKind::KwCase}, {"of", TokenKind::KwOf},
      {"invert", TokenKind::KwInvert}, {"let", TokenKind::KwLet},
      {"in", TokenKind::KwIn},
  };
  return kKeywords;
}

bool isNameChar(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '-' || c == '\'' || c == '_';
}

class Lexer {
 public:
  Lexer(std::string_view source, LexOptions options) : src_(source), options_(options) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skipTrivia();
      if (pos_ >= src_.size()) {
        out.push_back({TokenKind::End, "", spanFrom(line_, col_)});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  SourceSpan spanFrom(int line, int col) const {
    return {line, col, line_, col_ > 1 ? col_ - 1 : col_};
  }

  void skipTrivia() {
    while (pos_ < src_.size()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '-' && peek(1) == '-') {
        while (pos_ < src_.size() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  Token simple(TokenKind kind, std::size_t length, int line, int col) {
    std::string text(src_.substr(pos_, length));
    for (std::size_t i = 0; i < length; ++i) advance();
    return {kind, std::move(text), spanFrom(line, col)};
  }

  Token next() {
    int line = line_, col = col_;
    char c = peek();
    switch (c) {
      case '[':
        if (peek(1) == ']') return simple(TokenKind::Nil, 2, line, col);
        return simple(TokenKind::LBracket, 1, line, col);
      case ']': return simple(TokenKind::RBracket, 1, line, col);
      case '(': return simple(TokenKind::LParen, 1, line, col);
      case ')': return simple(TokenKind::RParen, 1, line, col);
      case '=': return simple(TokenKind::Equals, 1, line, col);
      case '.': return simple(TokenKind::Dot, 1, line, col);
      case ':': return simple(TokenKind::Colon, 1, line, col);
      case ',': return simple(TokenKind::Comma, 1, line, col);
      case ';': return simple(TokenKind::Semicolon, 1, line, col);
      case '-':
        if (peek(1) == '>') return simple(TokenKind::Arrow, 2, line, col);
        break;
      default: break;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      advance();
      // A '-' that begins "->" or "--" ends the name.
      while (isNameChar(peek()) && !(peek() == '-' && (peek(1) == '>' || peek(1) == '-'))) {
        advance();
      }
      std::string text(src_.substr(start, pos_ - start));
      auto kw = keywords().find(text);
      TokenKind kind = kw == keywords().end() ? TokenKind::Name : kw->second;
      return {kind, std::move(text), spanFrom(line, col)};
    }
    if (c == '%' && options_.allowFreshNames &&
        std::isdigit(static_cast<unsigned char>(peek(1)))) {
      std::size_t start = pos_;
      advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
      return {TokenKind::Fresh, std::string(src_.substr(start, pos_ - start)),
              spanFrom(line, col)};
    }
    std::string shown = std::isprint(static_cast<unsigned char>(c))
                            ? std::string(1, c)
                            : "\\x" + std::to_string(static_cast<unsigned char>(c));
    throw LexError("unexpected character '" + shown + "'", {line, col, line, col});
  }

  std::string_view src_;
  LexOptions options_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::string_view describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::Name: return "name";
    case TokenKind::Fresh: return "fresh name";
    case TokenKind::KwData: return "'data'";
    case TokenKind::KwMain: return "'main'";
    case TokenKind::KwCase: return "'case'";
    case TokenKind::KwOf: return "'of'";
    case TokenKind::KwInvert: return "'invert'";
    case TokenKind::KwLet: return "'let'";
    case TokenKind::KwIn: return "'in'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::Nil: return "'[]'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Equals: return "'='";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Colon: return "':'";
    case TokenKind::Comma: return "','";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Arrow: return "'->'";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view source, LexOptions options) {
  return Lexer(source, options).run();
}

}  // namespace jeopardy::frontend
