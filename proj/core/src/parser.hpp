#pragma once

// Tokenizer and recursive-descent parser shared by terms and laws.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rlat/term.hpp"

namespace rlat::detail {

  enum class Tok {
    ident,
    number,
    lparen,
    rparen,
    lbrack,
    rbrack,
    star,
    backslash,
    slash,
    amp,
    bar,
    caret,
    eq,
    le,
    ge,
    comma,
    implies,
    andand,
    end
  };

  struct Token {
    Tok         kind;
    std::string text;
    std::size_t pos;
  };

  class Parser {
   public:
    Parser(std::string_view text, std::vector<std::string>& var_names);

    Term parse_term();

    [[nodiscard]] Tok peek() const {
      return _toks[_i].kind;
    }
    Token next() {
      return _toks[_i++];
    }
    void expect(Tok kind, char const* what);
    [[noreturn]] void error(std::string const& msg) const;

   private:
    Term parse_join();
    Term parse_meet();
    Term parse_res();
    Term parse_prod();
    Term parse_pow();
    Term parse_primary();

    std::string_view          _text;
    std::vector<Token>        _toks;
    std::size_t               _i = 0;
    std::vector<std::string>& _vars;
  };

}  // namespace rlat::detail
