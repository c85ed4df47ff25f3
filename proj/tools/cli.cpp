#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "rlat/rlat.hpp"

namespace rlat::cli {

  namespace {
    std::string const default_grid = "-2,-1,-1/2,-1/3,0,1/3,1/2,1,2";

    std::string read_file(std::string const& path) {
      std::ifstream in(path);
      std::stringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    FiniteResiduatedLattice load_algebra(std::string const& arg) {
      if (std::filesystem::is_regular_file(arg)) {
        return parse_algebra(read_file(arg));
      }
      return builtin(arg);
    }

    LabeledLattice load_lattice(std::string const& arg) {
      if (std::filesystem::is_regular_file(arg)) {
        return parse_lattice(read_file(arg));
      }
      LabeledLattice out{arg, {}, builtin_lattice(arg)};
      for (std::size_t i = 0; i < out.lattice.size(); ++i) {
        out.labels.push_back(std::to_string(i));
      }
      return out;
    }

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    std::vector<std::string> split(std::string const& text, char sep) {
      std::vector<std::string> out;
      std::string              cur;
      for (char c : text) {
        if (c == sep) {
          out.push_back(cur);
          cur.clear();
        } else if (c != ' ' && c != '{' && c != '}') {
          cur += c;
        }
      }
      if (!cur.empty()) {
        out.push_back(cur);
      }
      return out;
    }

    std::string node_list(FiniteResiduatedLattice const& alg,
                          ConvLattice const&             lat,
                          std::vector<std::size_t> const& nodes) {
      std::string s;
      for (auto i : nodes) {
        s += (s.empty() ? "" : " ") + alg.format(lat.members(i));
      }
      return s.empty() ? "(none)" : s;
    }

    void print_conv(FiniteResiduatedLattice const& alg, ConvLattice const& lat,
                    std::ostream& out) {
      out << "convex subalgebras of " << alg.name() << ": " << lat.size() << "\n";
      for (std::size_t i = 0; i < lat.size(); ++i) {
        out << "  " << i << " " << alg.format(lat.members(i)) << " = C["
            << alg.label(lat.generator(i)) << "]\n";
      }
      out << "covers:";
      for (auto [lo, hi] : lat.lattice().cover_pairs()) {
        out << " " << lo << "<" << hi;
      }
      out << "\n";
    }

    int cmd_check(std::string const& file, std::ostream& out) {
      auto alg = load_algebra(file);
      auto f   = alg.flags();
      out << alg.name() << ": " << alg.size() << " elements, unit "
          << alg.label(alg.unit()) << "\n";
      out << "e-cyclic: " << yes_no(f.e_cyclic) << "\n"
          << "integral: " << yes_no(f.integral) << "\n"
          << "commutative: " << yes_no(f.commutative) << "\n"
          << "chain: " << yes_no(f.chain) << "\n"
          << "f at bottom: " << yes_no(f.bounded) << "\n";
      return ok;
    }

    int cmd_conv(std::string const& file, std::ostream& out) {
      auto alg = load_algebra(file);
      print_conv(alg, all_convex_subalgebras(alg), out);
      return ok;
    }

    int cmd_spectrum(std::string const& file, std::ostream& out) {
      auto alg  = load_algebra(file);
      auto lat  = all_convex_subalgebras(alg);
      auto spec = annotate_spectrum(alg, lat);
      out << "primes: " << node_list(alg, lat, prime_nodes(lat)) << "\n";
      out << "minimal primes: " << node_list(alg, lat, minimal_prime_nodes(alg, lat))
          << "\n";
      out << "polars:\n";
      for (std::size_t a = 0; a < alg.size(); ++a) {
        auto x = static_cast<Elem>(a);
        out << "  " << alg.label(x) << "^perp = " << alg.format(polar(alg, Subset::singleton(x)))
            << "\n";
      }
      out << "values:\n";
      for (std::size_t a = 0; a < alg.size(); ++a) {
        if (static_cast<Elem>(a) == alg.unit()) {
          continue;
        }
        out << "  " << alg.label(static_cast<Elem>(a)) << ": "
            << node_list(alg, lat, spec.values_of[a]) << "\n";
      }
      auto dp = double_polar_boolean(alg, lat);
      out << "double polars (" << dp.nodes.size() << ", boolean: " << yes_no(dp.boolean)
          << "): " << node_list(alg, lat, dp.nodes) << "\n";
      return ok;
    }

    int cmd_normal(std::string const& file, std::ostream& out) {
      auto alg    = load_algebra(file);
      auto lat    = all_convex_subalgebras(alg);
      auto normal = all_normal(alg, lat);
      out << "normal convex subalgebras (" << normal.size()
          << "): " << node_list(alg, lat, normal) << "\n";
      for (std::size_t i = 0; i < lat.size(); ++i) {
        auto nc = is_normal(alg, lat.members(i));
        if (!nc.normal) {
          out << "  " << alg.format(lat.members(i)) << " fails under "
              << to_string(*nc.witness_kind) << " with x=" << alg.label(nc.witness->first)
              << ", u=" << alg.label(nc.witness->second) << "\n";
        }
      }
      auto oracle = congruences_oracle(alg);
      out << "congruences: " << oracle.congruences.size()
          << (oracle.exhaustive ? "" : " (principal joins)") << "\n";
      check_normal_congruence_bijection(alg, lat);
      return ok;
    }

    int cmd_semilinear(std::string const& file, std::string const& route,
                       std::ostream& out) {
      auto alg = load_algebra(file);
      auto res = is_semilinear(alg, semilinear_route(route));
      out << alg.name() << ": " << (res.semilinear ? "semilinear" : "not semilinear")
          << "\n";
      out << "LP: " << yes_no(res.lp) << ", RP: " << yes_no(res.rp) << "\n";
      for (auto const& [name, v] : res.verdicts) {
        out << "  " << name << ": " << (v ? "holds" : "fails") << "\n";
      }
      for (auto const& n : res.notices) {
        out << "note: " << n << "\n";
      }
      auto lat = all_convex_subalgebras(alg);
      if (res.semilinear) {
        out << "decomposition: " << node_list(alg, lat, res.decomposition) << "\n";
        return ok;
      }
      if (res.counterexample) {
        auto law = catalog_law("SEM1");
        out << "counterexample to SEM1: "
            << format_assignment(alg, law, res.counterexample->counterexample) << "\n";
      }
      if (!res.non_normal_minimal_primes.empty()) {
        out << "non-normal minimal primes: "
            << node_list(alg, lat, res.non_normal_minimal_primes) << "\n";
      }
      return property_fails;
    }

    int cmd_hamiltonian(std::string const& file, std::ostream& out) {
      auto alg = load_algebra(file);
      auto h   = hamiltonian_degree(alg);
      if (!h.hamiltonian()) {
        out << "none\n";
        return property_fails;
      }
      out << "(" << *h.m << "," << *h.n << ")\n";
      return ok;
    }

    int cmd_identity(std::string const& file, std::string const& law_name,
                     std::string const& expr, std::size_t max_vars, std::ostream& out,
                     std::ostream& err) {
      if (law_name.empty() == expr.empty()) {
        err << "identity: give exactly one of --law and --expr\n";
        return input_error;
      }
      auto alg = load_algebra(file);
      Law  law = law_name.empty() ? parse_law(expr) : catalog_law(law_name);
      auto res = check_law(alg, law, max_vars);
      out << law.to_string() << "\n";
      if (res.holds) {
        out << "holds (" << res.assignments << " assignments)\n";
        return ok;
      }
      out << "fails at " << format_assignment(alg, law, res.counterexample) << ": "
          << alg.label(res.lhs_value) << " vs " << alg.label(res.rhs_value) << "\n";
      return property_fails;
    }

    int cmd_quotient(std::string const& file, std::string const& by, std::ostream& out) {
      auto   alg = load_algebra(file);
      Subset s;
      for (auto const& l : split(by, ',')) {
        s.insert(alg.element(l));
      }
      Subset h = convex_closure(alg, s).members;
      auto   nc = is_normal(alg, h);
      if (!nc.normal) {
        out << alg.format(h) << " is not normal: " << to_string(*nc.witness_kind)
            << " with x=" << alg.label(nc.witness->first)
            << ", u=" << alg.label(nc.witness->second) << "\n";
        return property_fails;
      }
      auto q = quotient(alg, h);
      out << write_algebra(q.algebra);
      return ok;
    }

    int cmd_enumerate(std::string const& lattice, std::size_t max_size, bool integral,
                      std::vector<std::string> const& laws, std::ostream& out,
                      std::ostream& err) {
      std::vector<FiniteLattice> lats;
      std::string                prefix = "alg";
      if (!lattice.empty()) {
        auto ll = load_lattice(lattice);
        lats.push_back(ll.lattice);
        prefix = ll.name;
      } else if (max_size > 0) {
        if (max_size > expansion_size_limit) {
          err << "enumerate: --max-size is limited to " << expansion_size_limit << "\n";
          return input_error;
        }
        lats = all_lattices(max_size);
      } else {
        err << "enumerate: give --lattice or --max-size\n";
        return input_error;
      }
      std::size_t count = 0;
      for (std::size_t i = 0; i < lats.size(); ++i) {
        SearchSpec spec;
        spec.lattice          = lats[i];
        spec.require_integral = integral;
        spec.laws             = laws;
        spec.name_prefix = lattice.empty() ? prefix + std::to_string(i) : prefix;
        for (auto const& alg : expansions(spec)) {
          out << write_algebra(alg, false) << "\n";
          ++count;
        }
      }
      out << count << " models\n";
      return ok;
    }

    int cmd_bn(std::uint32_t n, std::string const& grid_text, bool mirror,
               std::ostream& out) {
      std::vector<Rational> grid;
      for (auto const& p : split(grid_text, ',')) {
        grid.push_back(parse_rational(p));
      }
      auto r = bn_verify(n, grid, mirror);
      out << (mirror ? "B*_" : "B_") << n << ", " << r.elements << " sample elements\n";
      out << "witness: " << r.witness_value << " (equals g^" << n << ": "
          << yes_no(r.witness_equals_power) << ", g^" << n << " < g^" << n - 1 << ": "
          << yes_no(r.power_strict) << ")\n";
      out << "ham pairs: " << r.ham_pairs << ", "
          << (r.ham_failure ? "fails at " + *r.ham_failure : std::string("all hold")) << "\n";
      if (r.second_exponent) {
        out << "second exponent on sample: " << *r.second_exponent << "\n";
      }
      out << "residuation triples: " << r.residuation_triples << ", "
          << (r.residuation_failure ? "fails at " + *r.residuation_failure
                                    : std::string("all hold"))
          << "\n";
      out << "integral: " << yes_no(r.integral) << "\n";
      return r.ok() ? ok : property_fails;
    }

    int cmd_export(std::string const& file, bool conv, std::ostream& out) {
      auto alg = load_algebra(file);
      out << (conv ? export_dot(alg, all_convex_subalgebras(alg)) : export_dot(alg));
      return ok;
    }

    int cmd_report(std::string const& file, std::ostream& out) {
      out << to_json(report_structured(load_algebra(file)));
      return ok;
    }
  }  // namespace

  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite residuated lattice toolkit", "rlat"};
    app.require_subcommand(1);

    std::string file, route = "all", law, expr, by, lattice, grid = default_grid;
    std::size_t max_vars = default_var_cap, max_size = 0;
    std::uint32_t n = 2;
    bool integral = false, mirror = false, dot = false, conv = false;
    std::vector<std::string> laws;

    auto file_arg = [&](CLI::App* sub) {
      sub->add_option("file", file, "algebra file or builtin name")->required();
      return sub;
    };
    auto* check_cmd = file_arg(app.add_subcommand("check", "validate and print flags"));
    auto* conv_cmd  = file_arg(app.add_subcommand("conv", "lattice of convex subalgebras"));
    auto* spec_cmd  = file_arg(app.add_subcommand("spectrum", "primes, polars, values"));
    auto* norm_cmd  = file_arg(app.add_subcommand("normal", "normal subalgebras, congruences"));
    auto* sem_cmd   = file_arg(app.add_subcommand("semilinear", "decide semilinearity"));
    sem_cmd->add_option("--route", route, "identity, spectral, bruteforce or all");
    auto* ham_cmd = file_arg(app.add_subcommand("hamiltonian", "Hamiltonian degree"));
    auto* id_cmd  = file_arg(app.add_subcommand("identity", "check a law"));
    id_cmd->add_option("--law", law, "catalog law name");
    id_cmd->add_option("--expr", expr, "law text");
    id_cmd->add_option("--max-vars", max_vars, "variable cap")->check(CLI::Range(1, 6));
    auto* quo_cmd = file_arg(app.add_subcommand("quotient", "quotient by C[ELEMENTS]"));
    quo_cmd->add_option("--by", by, "comma separated labels")->required();
    auto* en_cmd = app.add_subcommand("enumerate", "enumerate expansions of lattices");
    en_cmd->add_option("--lattice", lattice, "lattice file or builtin lattice name");
    en_cmd->add_option("--max-size", max_size, "all lattices up to this size");
    en_cmd->add_flag("--integral", integral, "unit is the top");
    en_cmd->add_option("--law", laws, "required catalog law");
    auto* bn_cmd = app.add_subcommand("bn", "exact checks on the chain B_n");
    bn_cmd->add_option("--n", n, "n >= 2")->check(CLI::Range(2, 64));
    bn_cmd->add_option("--grid", grid, "comma separated rationals");
    bn_cmd->add_flag("--mirror", mirror, "use the opposite multiplication");
    auto* ex_cmd = file_arg(app.add_subcommand("export", "Graphviz output"));
    ex_cmd->add_flag("--dot", dot, "DOT format (the only format)");
    ex_cmd->add_flag("--conv", conv, "export the convex subalgebra lattice");
    auto* rep_cmd = file_arg(app.add_subcommand("report", "JSON report"));

    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? ok : input_error;
    }

    try {
      if (check_cmd->parsed()) return cmd_check(file, out);
      if (conv_cmd->parsed()) return cmd_conv(file, out);
      if (spec_cmd->parsed()) return cmd_spectrum(file, out);
      if (norm_cmd->parsed()) return cmd_normal(file, out);
      if (sem_cmd->parsed()) return cmd_semilinear(file, route, out);
      if (ham_cmd->parsed()) return cmd_hamiltonian(file, out);
      if (id_cmd->parsed()) return cmd_identity(file, law, expr, max_vars, out, err);
      if (quo_cmd->parsed()) return cmd_quotient(file, by, out);
      if (en_cmd->parsed()) return cmd_enumerate(lattice, max_size, integral, laws, out, err);
      if (bn_cmd->parsed()) return cmd_bn(n, grid, mirror, out);
      if (ex_cmd->parsed()) return cmd_export(file, conv, out);
      if (rep_cmd->parsed()) return cmd_report(file, out);
    } catch (Error const& e) {
      if (e.kind() == ErrorKind::CheckFailed) {
        err << "internal check failed: " << e.what() << "\n";
        return property_fails;
      }
      err << e.what() << "\n";
      return input_error;
    }
    return input_error;
  }

}  // namespace rlat::cli
