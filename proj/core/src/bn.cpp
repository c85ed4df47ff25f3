#include "rlat/bn.hpp"

#include <algorithm>

#include <regex>

#include "rlat/error.hpp"

namespace rlat {

  Rational parse_rational(std::string const& text) {
    static std::regex const frac(R"(\s*([+-]?\d+)(?:/(\d+))?\s*)");
    static std::regex const dec(R"(\s*([+-]?)(\d*)\.(\d+)\s*)");
    std::smatch m;
    if (std::regex_match(text, m, frac)) {
      std::string whole = m[1].str();
      auto sign = whole[0] == '-' || whole[0] == '+' ? 1U : 0U;
      whole.erase(sign, std::min(whole.find_first_not_of('0', sign), whole.size() - 1) - sign);
      Rational q{boost::multiprecision::cpp_int(whole)};
      if (m[2].matched) {
        std::string den = m[2].str();
        den.erase(0, std::min(den.find_first_not_of('0'), den.size() - 1));
        boost::multiprecision::cpp_int d(den);
        if (d == 0) {
          fail(ErrorKind::SyntaxError, "zero denominator in '" + text + "'");
        }
        q /= Rational(d);
      }
      return q;
    }
    if (std::regex_match(text, m, dec)) {
      std::string digits = m[2].str() + m[3].str();
      // a leading zero would make cpp_int read octal
      digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
      boost::multiprecision::cpp_int num(digits.empty() ? "0" : digits);
      boost::multiprecision::cpp_int den = 1;
      for (auto i = m[3].length(); i > 0; --i) {
        den *= 10;
      }
      Rational q(num, den);
      return m[1].str() == "-" ? Rational(-q) : q;
    }
    fail(ErrorKind::SyntaxError, "not a rational number: '" + text + "'");
  }

  std::string to_string(Rational const& q) {
    return q.str();
  }

  BnElement BnElement::neg_pair(std::uint32_t n, Rational x) {
    if (n < 2) {
      fail(ErrorKind::ParameterMismatch, "B_n needs n >= 2");
    }
    check(x <= 0, "pair coordinate must be <= 0");
    return {Tag::neg_pair, n, std::move(x)};
  }

  BnElement BnElement::pos(std::uint32_t n, Rational q) {
    if (n < 2) {
      fail(ErrorKind::ParameterMismatch, "B_n needs n >= 2");
    }
    check(q >= 0, "positive part must be >= 0");
    return {Tag::pos, n, std::move(q)};
  }

  std::string BnElement::to_string() const {
    if (_tag == Tag::pos) {
      return _value.str();
    }
    Rational nx = _value * _n;
    return "<" + nx.str() + "," + _value.str() + ">";
  }

  bool bn_leq(BnElement const& x, BnElement const& y) {
    if (x.n() != y.n()) {
      fail(ErrorKind::ParameterMismatch, "elements of B_n for different n");
    }
    if (x.tag() != y.tag()) {
      return x.tag() == BnElement::Tag::pos;
    }
    return x.value() <= y.value();
  }

  namespace {
    using T = BnElement::Tag;

    Rational min0(Rational const& q) {
      return q < 0 ? q : Rational(0);
    }
    Rational max0(Rational const& q) {
      return q > 0 ? q : Rational(0);
    }

    BnElement mult(BnElement const& a, BnElement const& b) {
      auto const n = a.n();
      if (a.tag() == T::neg_pair && b.tag() == T::neg_pair) {
        return BnElement::neg_pair(n, a.value() + b.value());
      }
      if (a.tag() == T::pos && b.tag() == T::neg_pair) {
        return BnElement::pos(n, max0(a.value() + b.value()));
      }
      if (a.tag() == T::neg_pair && b.tag() == T::pos) {
        return BnElement::pos(n, max0(a.value() * n + b.value()));
      }
      return BnElement::pos(n, 0);
    }

    // a\b
    BnElement lres(BnElement const& a, BnElement const& b) {
      auto const n = a.n();
      if (a.tag() == T::neg_pair && b.tag() == T::neg_pair) {
        return BnElement::neg_pair(n, min0(b.value() - a.value()));
      }
      if (a.tag() == T::pos && b.tag() == T::neg_pair) {
        return BnElement::unit(n);
      }
      if (a.tag() == T::neg_pair && b.tag() == T::pos) {
        return BnElement::pos(n, b.value() - a.value() * n);
      }
      return BnElement::neg_pair(n, min0(b.value() - a.value()));
    }

    // a/b
    BnElement rres(BnElement const& a, BnElement const& b) {
      auto const n = a.n();
      if (a.tag() == T::neg_pair && b.tag() == T::neg_pair) {
        return BnElement::neg_pair(n, min0(a.value() - b.value()));
      }
      if (a.tag() == T::neg_pair && b.tag() == T::pos) {
        return BnElement::unit(n);
      }
      if (a.tag() == T::pos && b.tag() == T::neg_pair) {
        return BnElement::pos(n, a.value() - b.value());
      }
      return BnElement::neg_pair(n, min0((a.value() - b.value()) / n));
    }
  }  // namespace

  BnElement bn_op(BnOp op, BnElement const& x, BnElement const& y, bool mirror) {
    if (x.n() != y.n()) {
      fail(ErrorKind::ParameterMismatch, "elements of B_n for different n");
    }
    switch (op) {
      case BnOp::join:
        return bn_leq(x, y) ? y : x;
      case BnOp::meet:
        return bn_leq(x, y) ? x : y;
      case BnOp::mult:
        return mirror ? mult(y, x) : mult(x, y);
      case BnOp::lres:
        return mirror ? rres(y, x) : lres(x, y);
      case BnOp::rres:
        return mirror ? lres(y, x) : rres(x, y);
    }
    fail(ErrorKind::CheckFailed, "unknown B_n operation");
  }

  BnElement bn_power(BnElement const& x, std::size_t k, bool mirror) {
    BnElement acc = BnElement::unit(x.n());
    for (std::size_t i = 0; i < k; ++i) {
      acc = bn_op(BnOp::mult, acc, x, mirror);
    }
    return acc;
  }

  namespace {
    bool lt(BnElement const& a, BnElement const& b) {
      return bn_leq(a, b) && !(a == b);
    }
  }  // namespace

  BnReport bn_verify(std::uint32_t n, std::vector<Rational> const& grid, bool mirror) {
    if (n < 2) {
      fail(ErrorKind::ParameterMismatch, "B_n needs n >= 2");
    }
    if (grid.empty()) {
      fail(ErrorKind::ParameterMismatch, "empty grid");
    }
    BnReport r;
    r.n      = n;
    r.mirror = mirror;
    auto op  = [&](BnOp o, BnElement const& a, BnElement const& b) {
      return bn_op(o, a, b, mirror);
    };
    BnElement const e = BnElement::unit(n);

    // (a)
    BnElement const g = BnElement::neg_pair(n, -1);
    BnElement const u = BnElement::pos(n, n);
    BnElement const w = mirror ? op(BnOp::rres, op(BnOp::mult, u, g), u)
                               : op(BnOp::lres, u, op(BnOp::mult, g, u));
    BnElement const gn = bn_power(g, n, mirror);
    r.witness_value        = w.to_string();
    r.witness_equals_power = w == gn;
    r.power_strict         = lt(gn, bn_power(g, n - 1, mirror));

    std::vector<BnElement> xs;
    for (auto const& q : grid) {
      if (q <= 0) {
        xs.push_back(BnElement::neg_pair(n, q));
      }
      if (q >= 0) {
        xs.push_back(BnElement::pos(n, q));
      }
    }
    r.elements = xs.size();
    for (auto const& x : xs) {
      r.integral = r.integral && bn_leq(x, e);
    }

    // (b)  B_n: (x&e)^n <= lam_y(x), (x&e) <= rho_y(x); mirrored exponents
    // for B*_n.
    auto lam = [&](BnElement const& y, BnElement const& x) {
      return op(BnOp::meet, op(BnOp::lres, y, op(BnOp::mult, x, y)), e);
    };
    auto rho = [&](BnElement const& y, BnElement const& x) {
      return op(BnOp::meet, op(BnOp::rres, op(BnOp::mult, y, x), y), e);
    };
    std::size_t const lam_exp = mirror ? 1 : n;
    std::size_t const rho_exp = mirror ? n : 1;
    for (auto const& x : xs) {
      BnElement xe = op(BnOp::meet, x, e);
      for (auto const& y : xs) {
        ++r.ham_pairs;
        if (r.ham_failure) {
          continue;
        }
        BnElement l = lam(y, x), p = rho(y, x);
        BnElement pl = bn_power(xe, lam_exp, mirror), pr = bn_power(xe, rho_exp, mirror);
        if (!bn_leq(pl, l)) {
          r.ham_failure = "(x&e)^" + std::to_string(lam_exp) + " = " + pl.to_string()
                          + " > lam_y(x) = " + l.to_string() + " at x = " + x.to_string()
                          + ", y = " + y.to_string();
        } else if (!bn_leq(pr, p)) {
          r.ham_failure = "(x&e)^" + std::to_string(rho_exp) + " = " + pr.to_string()
                          + " > rho_y(x) = " + p.to_string() + " at x = " + x.to_string()
                          + ", y = " + y.to_string();
        }
      }
    }
    // Exponent actually needed by the second inequality on this sample.
    for (std::size_t k = 1; k <= n + 1 && !r.second_exponent; ++k) {
      bool ok = true;
      for (auto const& x : xs) {
        BnElement pk = bn_power(op(BnOp::meet, x, e), k, mirror);
        for (auto const& y : xs) {
          ok = ok && bn_leq(pk, mirror ? lam(y, x) : rho(y, x));
        }
      }
      if (ok) {
        r.second_exponent = k;
      }
    }

    // (c)
    for (auto const& x : xs) {
      for (auto const& y : xs) {
        BnElement xy = op(BnOp::mult, x, y);
        for (auto const& z : xs) {
          ++r.residuation_triples;
          if (r.residuation_failure) {
            continue;
          }
          bool a = bn_leq(xy, z);
          bool b = bn_leq(y, op(BnOp::lres, x, z));
          bool c = bn_leq(x, op(BnOp::rres, z, y));
          if (a != b || a != c) {
            r.residuation_failure = "residuation fails at x = " + x.to_string()
                                    + ", y = " + y.to_string() + ", z = " + z.to_string();
          }
        }
      }
    }
    return r;
  }

}  // namespace rlat
