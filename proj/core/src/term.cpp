#include "rlat/term.hpp"

#include <algorithm>
#include <cctype>

#include "parser.hpp"

namespace rlat {

  ////////////////////////////////////////////////////////////////////////
  // Term
  ////////////////////////////////////////////////////////////////////////

  Term Term::variable(std::size_t index) {
    Term t;
    t._nodes.push_back({Op::var, 0, 0, static_cast<std::uint32_t>(index)});
    return t;
  }

  Term Term::unit() {
    Term t;
    t._nodes.push_back({Op::unit});
    return t;
  }

  Term Term::f() {
    Term t;
    t._nodes.push_back({Op::f});
    return t;
  }

  Term Term::binary(Op op, Term const& lhs, Term const& rhs) {
    Term t;
    t._nodes.reserve(lhs._nodes.size() + rhs._nodes.size() + 1);
    t._nodes = lhs._nodes;
    auto const offset = static_cast<std::uint32_t>(lhs._nodes.size());
    for (Node n : rhs._nodes) {
      if (n.op != Op::var && n.op != Op::unit && n.op != Op::f) {
        n.lhs += offset;
        n.rhs += offset;
      }
      t._nodes.push_back(n);
    }
    t._nodes.push_back({op,
                        offset - 1,
                        static_cast<std::uint32_t>(t._nodes.size() - 1),
                        0});
    return t;
  }

  Term power(Term const& t, std::size_t k) {
    if (k == 0) {
      return Term::unit();
    }
    Term acc = t;
    for (std::size_t i = 1; i < k; ++i) {
      acc = acc * t;
    }
    return acc;
  }

  Term Term::map_vars(std::vector<std::size_t> const& new_index) const {
    Term t = *this;
    for (auto& n : t._nodes) {
      if (n.op == Op::var) {
        n.var = static_cast<std::uint32_t>(new_index.at(n.var));
      }
    }
    return t;
  }

  std::size_t Term::num_vars() const {
    std::size_t k = 0;
    for (auto const& n : _nodes) {
      if (n.op == Op::var) {
        k = std::max<std::size_t>(k, n.var + 1);
      }
    }
    return k;
  }

  bool Term::uses_f() const {
    return std::any_of(_nodes.begin(), _nodes.end(), [](Node const& n) {
      return n.op == Op::f;
    });
  }

  std::string Term::to_string(std::vector<std::string> const& names) const {
    std::vector<std::string> out(_nodes.size());
    auto wrap = [&](std::uint32_t i) {
      Op op = _nodes[i].op;
      if (op == Op::var || op == Op::unit || op == Op::f) {
        return out[i];
      }
      return "(" + out[i] + ")";
    };
    for (std::size_t i = 0; i < _nodes.size(); ++i) {
      Node const& n = _nodes[i];
      switch (n.op) {
        case Op::var:
          out[i] = n.var < names.size() ? names[n.var]
                                        : "v" + std::to_string(n.var);
          break;
        case Op::unit: out[i] = "e"; break;
        case Op::f: out[i] = "f"; break;
        case Op::mult: out[i] = wrap(n.lhs) + "*" + wrap(n.rhs); break;
        case Op::lres: out[i] = wrap(n.lhs) + "\\" + wrap(n.rhs); break;
        case Op::rres: out[i] = wrap(n.lhs) + "/" + wrap(n.rhs); break;
        case Op::join: out[i] = wrap(n.lhs) + " | " + wrap(n.rhs); break;
        case Op::meet: out[i] = wrap(n.lhs) + " & " + wrap(n.rhs); break;
      }
    }
    return out.back();
  }

  Elem Term::eval_fast(FiniteResiduatedLattice const& alg,
                       std::span<Elem const>          a,
                       std::vector<Elem>&             v) const {
    v.resize(_nodes.size());
    for (std::size_t i = 0; i < _nodes.size(); ++i) {
      Node const& n = _nodes[i];
      switch (n.op) {
        case Op::var: v[i] = a[n.var]; break;
        case Op::unit: v[i] = alg.unit(); break;
        case Op::f: v[i] = *alg.f_const(); break;
        case Op::mult: v[i] = alg.mult(v[n.lhs], v[n.rhs]); break;
        case Op::lres: v[i] = alg.lres(v[n.lhs], v[n.rhs]); break;
        case Op::rres: v[i] = alg.rres(v[n.lhs], v[n.rhs]); break;
        case Op::join: v[i] = alg.join(v[n.lhs], v[n.rhs]); break;
        case Op::meet: v[i] = alg.meet(v[n.lhs], v[n.rhs]); break;
      }
    }
    return v.back();
  }

  Elem Term::eval(FiniteResiduatedLattice const& alg,
                  std::span<Elem const>          assignment) const {
    if (num_vars() > assignment.size()) {
      fail(ErrorKind::UnboundVariable,
           "term has " + std::to_string(num_vars())
               + " variables but the assignment has "
               + std::to_string(assignment.size()));
    }
    if (uses_f() && !alg.f_const()) {
      fail(ErrorKind::MissingConstantF,
           "algebra " + alg.name() + " has no constant f");
    }
    for (Elem x : assignment) {
      if (x >= alg.size()) {
        fail(ErrorKind::UnknownLabel, "assignment value out of range");
      }
    }
    std::vector<Elem> scratch;
    return eval_fast(alg, assignment, scratch);
  }

  Elem eval_term(FiniteResiduatedLattice const& alg,
                 Term const&                    term,
                 std::span<Elem const>          assignment) {
    return term.eval(alg, assignment);
  }

  Term parse_term(std::string_view text, std::vector<std::string>& var_names) {
    detail::Parser p(text, var_names);
    Term           t = p.parse_term();
    p.expect(detail::Tok::end, "end of input");
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parser
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    Parser::Parser(std::string_view text, std::vector<std::string>& vars)
        : _text(text), _vars(vars) {
      std::size_t i = 0;
      auto        push = [&](Tok k, std::size_t len) {
        _toks.push_back({k, std::string(text.substr(i, len)), i});
        i += len;
      };
      while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
          ++i;
        } else if (c >= 'a' && c <= 'z') {
          std::size_t j = i + 1;
          while (j < text.size()
                 && std::isdigit(static_cast<unsigned char>(text[j]))) {
            ++j;
          }
          push(Tok::ident, j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
          std::size_t j = i;
          while (j < text.size()
                 && std::isdigit(static_cast<unsigned char>(text[j]))) {
            ++j;
          }
          push(Tok::number, j - i);
        } else if (text.substr(i, 2) == "<=") {
          push(Tok::le, 2);
        } else if (text.substr(i, 2) == ">=") {
          push(Tok::ge, 2);
        } else if (text.substr(i, 2) == "=>") {
          push(Tok::implies, 2);
        } else if (text.substr(i, 2) == "&&") {
          push(Tok::andand, 2);
        } else {
          switch (c) {
            case '(': push(Tok::lparen, 1); break;
            case ')': push(Tok::rparen, 1); break;
            case '[': push(Tok::lbrack, 1); break;
            case ']': push(Tok::rbrack, 1); break;
            case '*': push(Tok::star, 1); break;
            case '\\': push(Tok::backslash, 1); break;
            case '/': push(Tok::slash, 1); break;
            case '&': push(Tok::amp, 1); break;
            case '|': push(Tok::bar, 1); break;
            case '^': push(Tok::caret, 1); break;
            case '=': push(Tok::eq, 1); break;
            case ',': push(Tok::comma, 1); break;
            default:
              fail(ErrorKind::SyntaxError,
                   "unexpected character '" + std::string(1, c)
                       + "' at column " + std::to_string(i + 1));
          }
        }
      }
      _toks.push_back({Tok::end, "", text.size()});
    }

    void Parser::error(std::string const& msg) const {
      fail(ErrorKind::SyntaxError,
           msg + " at column " + std::to_string(_toks[_i].pos + 1) + " in '"
               + std::string(_text) + "'");
    }

    void Parser::expect(Tok kind, char const* what) {
      if (peek() != kind) {
        error(std::string("expected ") + what);
      }
      ++_i;
    }

    Term Parser::parse_term() {
      return parse_join();
    }

    Term Parser::parse_join() {
      Term t = parse_meet();
      while (peek() == Tok::bar) {
        next();
        t = t | parse_meet();
      }
      return t;
    }

    Term Parser::parse_meet() {
      Term t = parse_res();
      while (peek() == Tok::amp) {
        next();
        t = t & parse_res();
      }
      return t;
    }

    // '/' associates to the left and '\' to the right, so x/y/z is
    // (x/y)/z and x\y\z is x\(y\z).
    Term Parser::parse_res() {
      Term t = parse_prod();
      while (true) {
        if (peek() == Tok::slash) {
          next();
          t = rdiv(t, parse_prod());
        } else if (peek() == Tok::backslash) {
          next();
          return ldiv(t, parse_res());
        } else {
          return t;
        }
      }
    }

    Term Parser::parse_prod() {
      Term t = parse_pow();
      while (peek() == Tok::star) {
        next();
        t = t * parse_pow();
      }
      return t;
    }

    Term Parser::parse_pow() {
      Term t = parse_primary();
      while (peek() == Tok::caret) {
        next();
        if (peek() != Tok::number) {
          error("expected exponent");
        }
        Token       tok = next();
        std::size_t k   = std::stoul(tok.text);
        if (k > 64) {
          error("exponent too large");
        }
        t = power(t, k);
      }
      return t;
    }

    Term Parser::parse_primary() {
      Token tok = next();
      switch (tok.kind) {
        case Tok::ident: {
          if (tok.text == "e") {
            return Term::unit();
          }
          if (tok.text == "f") {
            return Term::f();
          }
          auto it = std::find(_vars.begin(), _vars.end(), tok.text);
          if (it == _vars.end()) {
            _vars.push_back(tok.text);
            return Term::variable(_vars.size() - 1);
          }
          return Term::variable(static_cast<std::size_t>(it - _vars.begin()));
        }
        case Tok::lparen: {
          Term t = parse_join();
          expect(Tok::rparen, "')'");
          return t;
        }
        case Tok::lbrack: {
          Term t = parse_join();
          expect(Tok::rbrack, "']'");
          return t;
        }
        default: --_i; error("expected a term");
      }
    }

  }  // namespace detail
}  // namespace rlat
