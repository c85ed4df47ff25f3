#include "rlat/law.hpp"

#include <algorithm>
#include <regex>

#include "parser.hpp"

namespace rlat {

  std::string_view to_string(LawKind kind) noexcept {
    switch (kind) {
      case LawKind::identity: return "identity";
      case LawKind::inequality: return "inequality";
      case LawKind::quasi_identity: return "quasi-identity";
    }
    return "?";
  }

  namespace {
    using detail::Parser;
    using detail::Tok;

    std::vector<Atom> parse_chain(Parser& p) {
      std::vector<Atom> out;
      Term              lhs = p.parse_term();
      bool              any = false;
      while (p.peek() == Tok::eq || p.peek() == Tok::le
             || p.peek() == Tok::ge) {
        Tok  rel = p.next().kind;
        Term rhs = p.parse_term();
        if (rel == Tok::eq) {
          out.push_back({lhs, rhs, Relation::eq});
        } else if (rel == Tok::le) {
          out.push_back({lhs, rhs, Relation::leq});
        } else {
          out.push_back({rhs, lhs, Relation::leq});
        }
        lhs = std::move(rhs);
        any = true;
      }
      if (!any) {
        p.error("expected '=', '<=' or '>='");
      }
      return out;
    }

    std::string atom_string(Atom const& a, std::vector<std::string> const& v) {
      return a.lhs.to_string(v) + (a.rel == Relation::eq ? " = " : " <= ")
             + a.rhs.to_string(v);
    }

    bool atom_holds(FiniteResiduatedLattice const& alg,
                    Atom const&                    a,
                    std::span<Elem const>          x,
                    std::vector<Elem>&             scratch,
                    Elem&                          l,
                    Elem&                          r) {
      l = a.lhs.eval_fast(alg, x, scratch);
      r = a.rhs.eval_fast(alg, x, scratch);
      return a.rel == Relation::eq ? l == r : alg.leq(l, r);
    }
  }  // namespace

  std::string Law::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < premises.size(); ++i) {
      s += (i == 0 ? "" : ", ") + atom_string(premises[i], var_names);
    }
    if (!premises.empty()) {
      s += " => ";
    }
    for (std::size_t i = 0; i < conclusions.size(); ++i) {
      s += (i == 0 ? "" : " && ") + atom_string(conclusions[i], var_names);
    }
    return s;
  }

  Law parse_law(std::string_view                text,
                std::string                     name,
                std::vector<std::string> const& preferred_order) {
    std::vector<std::string> vars = preferred_order;
    Parser                   p(text, vars);
    std::vector<Atom>        first = parse_chain(p);
    Law                      law;
    law.name = std::move(name);
    bool comma_seen = false;
    while (p.peek() == Tok::comma || p.peek() == Tok::andand) {
      comma_seen |= (p.next().kind == Tok::comma);
      auto more = parse_chain(p);
      first.insert(first.end(), more.begin(), more.end());
    }
    if (p.peek() == Tok::implies) {
      p.next();
      law.premises    = std::move(first);
      law.conclusions = parse_chain(p);
      while (p.peek() == Tok::andand) {
        p.next();
        auto more = parse_chain(p);
        law.conclusions.insert(law.conclusions.end(), more.begin(), more.end());
      }
    } else {
      if (comma_seen) {
        p.error("',' separates premises and must be followed by '=>'");
      }
      law.conclusions = std::move(first);
    }
    p.expect(Tok::end, "end of input");

    // Drop preferred names that do not occur and renumber densely.
    std::vector<bool> used(vars.size(), false);
    auto mark = [&used](Term const& t) {
      for (auto const& n : t.nodes()) {
        if (n.op == Op::var) {
          used[n.var] = true;
        }
      }
    };
    for (auto const* list : {&law.premises, &law.conclusions}) {
      for (auto const& a : *list) {
        mark(a.lhs);
        mark(a.rhs);
      }
    }
    std::vector<std::size_t> remap(vars.size(), 0);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (used[i]) {
        remap[i] = law.var_names.size();
        law.var_names.push_back(vars[i]);
      }
    }
    for (auto* list : {&law.premises, &law.conclusions}) {
      for (auto& a : *list) {
        a.lhs = a.lhs.map_vars(remap);
        a.rhs = a.rhs.map_vars(remap);
      }
    }
    if (!law.premises.empty()) {
      law.kind = LawKind::quasi_identity;
    } else if (std::any_of(law.conclusions.begin(),
                           law.conclusions.end(),
                           [](Atom const& a) { return a.rel == Relation::leq; })) {
      law.kind = LawKind::inequality;
    } else {
      law.kind = LawKind::identity;
    }
    return law;
  }

  LawResult check_law(FiniteResiduatedLattice const& alg,
                      Law const&                     law,
                      std::size_t                    var_cap) {
    if (var_cap > max_var_cap) {
      fail(ErrorKind::VariableCapExceeded,
           "variable cap " + std::to_string(var_cap) + " exceeds the maximum "
               + std::to_string(max_var_cap));
    }
    std::size_t const k = law.num_vars();
    if (k > var_cap) {
      fail(ErrorKind::VariableCapExceeded,
           "law " + law.name + " has " + std::to_string(k)
               + " variables, cap is " + std::to_string(var_cap));
    }
    for (auto const* list : {&law.premises, &law.conclusions}) {
      for (auto const& a : *list) {
        if ((a.lhs.uses_f() || a.rhs.uses_f()) && !alg.f_const()) {
          fail(ErrorKind::MissingConstantF,
               "algebra " + alg.name() + " has no constant f");
        }
      }
    }
    std::size_t const n = alg.size();
    std::vector<Elem> x(k, 0);
    std::vector<Elem> scratch;
    LawResult         result;
    Elem              l = 0, r = 0;
    while (true) {
      ++result.assignments;
      bool premises_hold = true;
      for (auto const& a : law.premises) {
        if (!atom_holds(alg, a, x, scratch, l, r)) {
          premises_hold = false;
          break;
        }
      }
      if (premises_hold) {
        for (std::size_t c = 0; c < law.conclusions.size(); ++c) {
          if (!atom_holds(alg, law.conclusions[c], x, scratch, l, r)) {
            result.holds             = false;
            result.counterexample    = x;
            result.failed_conclusion = c;
            result.lhs_value         = l;
            result.rhs_value         = r;
            return result;
          }
        }
      }
      std::size_t i = k;
      while (i > 0) {
        --i;
        if (++x[i] < n) {
          break;
        }
        x[i] = 0;
        if (i == 0) {
          return result;
        }
      }
      if (k == 0) {
        return result;
      }
    }
  }

  std::string format_assignment(FiniteResiduatedLattice const& alg,
                                Law const&                     law,
                                std::vector<Elem> const&       a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
      s += (i == 0 ? "" : ", ") + law.var_names[i] + "=" + alg.label(a[i]);
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Catalog
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::string> const order = {"x", "y", "z", "u", "v", "w"};

    std::string lam(std::string const& u, std::string const& t) {
      return "((" + u + "\\((" + t + ")*" + u + "))&e)";
    }
    std::string rho(std::string const& u, std::string const& t) {
      return "(((" + u + "*(" + t + "))/" + u + ")&e)";
    }
    std::string lams(std::string const& u, std::string const& t) {
      return "((((" + t + ")\\" + u + ")\\" + u + ")&e)";
    }
    std::string rhos(std::string const& u, std::string const& t) {
      return "((" + u + "/(" + u + "/(" + t + ")))&e)";
    }

    Law make(std::string const& name, std::string const& text) {
      return parse_law(text, name, order);
    }

    std::vector<Law> build_catalog() {
      std::string const jx  = "(x|y)\\x";
      std::string const jy  = "(x|y)\\y";
      std::string const xj  = "x/(x|y)";
      std::string const yj  = "y/(x|y)";
      std::string const ylx = "(y\\x)&e";
      std::string const xly = "(x\\y)&e";
      std::string const xry = "(x/y)&e";
      std::string const yrx = "(y/x)&e";

      std::vector<Law> c;
      c.push_back(make("LP", "((x\\y)&e) | ((y\\x)&e) = e"));
      c.push_back(make("RP", "((x/y)&e) | ((y/x)&e) = e"));
      c.push_back(make("SEM1", lam("u", jx) + " | " + rho("v", jy) + " = e"));
      c.push_back(make("SEM2", lam("u", xj) + " | " + rho("v", yj) + " = e"));
      c.push_back(make("SEM3A", lams("u", jx) + " | " + rhos("v", jy) + " = e"));
      c.push_back(make("SEM3B", lams("u", xj) + " | " + rhos("v", yj) + " = e"));
      c.push_back(make("SEMQ",
                       "x | y = e => " + lam("u", "x") + " | " + rho("v", "y")
                           + " = e"));
      c.push_back(make("SEMQ_STAR",
                       "x | y = e => " + lams("u", "x") + " | "
                           + rhos("v", "y") + " = e"));
      c.push_back(make("SEM_ALT_L", lam("u", ylx) + " | " + rho("v", xly) + " = e"));
      c.push_back(make("SEM_ALT_R", lam("u", xry) + " | " + rho("v", yrx) + " = e"));
      c.push_back(make("SEM_ALT_L_STAR",
                       lams("u", ylx) + " | " + rhos("v", xly) + " = e"));
      c.push_back(make("SEM_ALT_R_STAR",
                       lams("u", xry) + " | " + rhos("v", yrx) + " = e"));
      c.push_back(make("KUHR_IRL",
                       "((x\\y)\\u)\\[([w/(w/[((y\\x)\\z)\\z])]\\u)\\u] = e"));
      c.push_back(ham_law(1, 1));
      c.push_back(ham_abs_law(1, 1));
      c.push_back(make("WEAK_ABELIAN", "(x&e)^2*y <= y*x"));
      c.push_back(make("SQUARES", "x^2 | y^2 = (x|y)^2"));
      c.push_back(make("GMV", "x/((y\\x)&e) = x|y = ((x/y)&e)\\x"));
      c.push_back(make("GMV_Q", "x <= y => x/(y\\x) = y = (x/y)\\x"));
      c.push_back(make("GBL", "((x/y)&e)*y = x&y = y*((y\\x)&e)"));
      c.push_back(make("GBL_Q", "x <= y => (x/y)*y = x = y*(y\\x)"));
      c.push_back(make("E_CYCLIC", "x\\e = e/x"));
      c.push_back(make("INTEGRAL", "x <= e"));
      c.push_back(make("COMMUTATIVE", "x*y = y*x"));
      c.push_back(make("INVERTIBLE", "(e/x)*x = e = x*(x\\e)"));
      return c;
    }

    std::string ham_text(std::string const& base, std::size_t m, std::size_t n) {
      return "(" + base + ")^" + std::to_string(m) + " <= " + lam("y", "x")
             + " && (" + base + ")^" + std::to_string(n)
             + " <= " + rho("y", "x");
    }
  }  // namespace

  Law ham_law(std::size_t m, std::size_t n) {
    std::string name = m == 1 && n == 1 ? "HAM"
                                        : "HAM(" + std::to_string(m) + ","
                                              + std::to_string(n) + ")";
    if (m == 0 || n == 0) {
      fail(ErrorKind::UnknownName, "HAM exponents must be positive");
    }
    return make(name, ham_text("x&e", m, n));
  }

  Law ham_abs_law(std::size_t m, std::size_t n) {
    std::string name = m == 1 && n == 1 ? "HAM_ABS"
                                        : "HAM_ABS(" + std::to_string(m) + ","
                                              + std::to_string(n) + ")";
    if (m == 0 || n == 0) {
      fail(ErrorKind::UnknownName, "HAM_ABS exponents must be positive");
    }
    return make(name, ham_text("x&(e/x)&e", m, n));
  }

  std::vector<Law> const& law_catalog() {
    static std::vector<Law> const catalog = build_catalog();
    return catalog;
  }

  Law catalog_law(std::string_view name) {
    static std::regex const param(R"((HAM|HAM_ABS)\((\d+),(\d+)\))");
    std::string const       s(name);
    std::smatch             m;
    if (std::regex_match(s, m, param)) {
      std::size_t a = std::stoul(m[2]), b = std::stoul(m[3]);
      if (a > 64 || b > 64) {
        fail(ErrorKind::UnknownName, "exponent too large in " + s);
      }
      return m[1] == "HAM" ? ham_law(a, b) : ham_abs_law(a, b);
    }
    for (auto const& law : law_catalog()) {
      if (law.name == s) {
        return law;
      }
    }
    fail(ErrorKind::UnknownName, "no catalog law named '" + s + "'");
  }

}  // namespace rlat

namespace rlat {
  bool satisfies(FiniteResiduatedLattice const& alg, std::string_view name) {
    Law law = catalog_law(name);
    return check_law(alg, law, std::max(default_var_cap, law.num_vars())).holds;
  }
}  // namespace rlat
