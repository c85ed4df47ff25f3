#include "rlat/report.hpp"

#include <json.hpp>

#include "rlat/convexity.hpp"
#include "rlat/law.hpp"
#include "rlat/normality.hpp"
#include "rlat/spectrum.hpp"
#include "rlat/structures.hpp"

namespace rlat {

  using nlohmann::json;

  namespace {
    std::vector<std::string> names_of(FiniteResiduatedLattice const& alg, Subset s) {
      std::vector<std::string> out;
      s.for_each([&](Elem x) { out.push_back(alg.label(x)); });
      return out;
    }

    template <typename T>
    json opt(std::optional<T> const& v) {
      return v ? json(*v) : json(nullptr);
    }

    template <typename T>
    std::optional<T> get_opt(json const& j) {
      if (j.is_null()) {
        return std::nullopt;
      }
      return j.get<T>();
    }
  }  // namespace

  AlgebraReport report_structured(FiniteResiduatedLattice const& alg) {
    AlgebraReport r;
    r.name   = alg.name();
    r.size   = alg.size();
    r.labels = alg.labels();
    r.unit   = alg.label(alg.unit());
    r.flags  = alg.flags();

    auto const cls = classify(alg);
    r.is_gbl       = cls.is_gbl;
    r.is_gmv       = cls.is_gmv;
    r.is_lgroup    = cls.is_lgroup;
    r.invertibles  = names_of(alg, cls.invertibles);
    r.integrals    = names_of(alg, cls.integrals);

    for (auto const& law : law_catalog()) {
      auto res = check_law(alg, law, std::max(law.num_vars(), default_var_cap));
      r.laws.push_back({law.name, res.holds,
                        res.holds ? "" : format_assignment(alg, law, res.counterexample)});
    }

    if (!alg.flags().e_cyclic) {
      r.notices.push_back("not e-cyclic: convex subalgebra analysis skipped");
      return r;
    }
    auto const lat    = all_convex_subalgebras(alg);
    auto const spec   = annotate_spectrum(alg, lat);
    auto const normal = all_normal(alg, lat);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      ConvNodeReport node;
      node.members       = names_of(alg, lat.members(i));
      node.generator     = alg.label(lat.generator(i));
      node.prime         = spec.is_prime[i];
      node.minimal_prime = spec.is_minimal_prime[i];
      node.polar         = spec.is_polar[i];
      node.normal        = std::find(normal.begin(), normal.end(), i) != normal.end();
      for (std::size_t a = 0; a < alg.size(); ++a) {
        auto const& v = spec.values_of[a];
        if (std::find(v.begin(), v.end(), i) != v.end()) {
          node.value_of.push_back(alg.label(static_cast<Elem>(a)));
        }
      }
      r.conv_nodes.push_back(std::move(node));
    }
    for (auto [lo, hi] : lat.lattice().cover_pairs()) {
      r.conv_edges.emplace_back(lo, hi);
    }

    auto const sem = is_semilinear(alg, SemilinearRoute::all);
    r.semilinear        = sem.semilinear;
    r.semilinear_routes = sem.verdicts;
    r.decomposition     = sem.decomposition;
    r.notices.insert(r.notices.end(), sem.notices.begin(), sem.notices.end());

    auto const ham = hamiltonian_degree(alg);
    if (ham.hamiltonian()) {
      r.hamiltonian = std::make_pair(*ham.m, *ham.n);
    }
    r.hamiltonian_star_agrees = ham.star_agrees();
    auto const mc             = martinez_conditions(alg);
    r.martinez                = mc.cond_i;
    return r;
  }

  std::string to_json(AlgebraReport const& r) {
    json j;
    j["name"]   = r.name;
    j["size"]   = r.size;
    j["labels"] = r.labels;
    j["unit"]   = r.unit;
    j["flags"]  = {{"e_cyclic", r.flags.e_cyclic},       {"integral", r.flags.integral},
                   {"commutative", r.flags.commutative}, {"chain", r.flags.chain},
                   {"bounded", r.flags.bounded}};
    json nodes  = json::array();
    for (auto const& n : r.conv_nodes) {
      nodes.push_back({{"members", n.members},
                       {"generator", n.generator},
                       {"prime", n.prime},
                       {"minimal_prime", n.minimal_prime},
                       {"polar", n.polar},
                       {"normal", n.normal},
                       {"value_of", n.value_of}});
    }
    j["conv"]    = {{"nodes", nodes}, {"edges", r.conv_edges}};
    j["classes"] = {{"gbl", r.is_gbl},
                    {"gmv", r.is_gmv},
                    {"lgroup", r.is_lgroup},
                    {"invertibles", r.invertibles},
                    {"integrals", r.integrals}};
    j["semilinear"] = {{"verdict", opt(r.semilinear)},
                       {"routes", r.semilinear_routes},
                       {"decomposition", r.decomposition}};
    j["notices"]     = r.notices;
    j["hamiltonian"] = {{"degree", r.hamiltonian ? json(*r.hamiltonian) : json(nullptr)},
                        {"star_agrees", opt(r.hamiltonian_star_agrees)}};
    j["martinez"]    = opt(r.martinez);
    json laws        = json::object();
    for (auto const& l : r.laws) {
      laws[l.name] = {{"holds", l.holds}, {"counterexample", l.counterexample}};
    }
    j["laws"] = laws;
    return j.dump(2) + "\n";
  }

  AlgebraReport report_from_json(std::string const& text) {
    json          j;
    AlgebraReport r;
    try {
      j        = json::parse(text);
      r.name   = j.at("name").get<std::string>();
      r.size   = j.at("size").get<std::size_t>();
      r.labels = j.at("labels").get<std::vector<std::string>>();
      r.unit   = j.at("unit").get<std::string>();
      auto const& f       = j.at("flags");
      r.flags.e_cyclic    = f.at("e_cyclic").get<bool>();
      r.flags.integral    = f.at("integral").get<bool>();
      r.flags.commutative = f.at("commutative").get<bool>();
      r.flags.chain       = f.at("chain").get<bool>();
      r.flags.bounded     = f.at("bounded").get<bool>();
      for (auto const& n : j.at("conv").at("nodes")) {
        ConvNodeReport node;
        node.members       = n.at("members").get<std::vector<std::string>>();
        node.generator     = n.at("generator").get<std::string>();
        node.prime         = n.at("prime").get<bool>();
        node.minimal_prime = n.at("minimal_prime").get<bool>();
        node.polar         = n.at("polar").get<bool>();
        node.normal        = n.at("normal").get<bool>();
        node.value_of      = n.at("value_of").get<std::vector<std::string>>();
        r.conv_nodes.push_back(std::move(node));
      }
      r.conv_edges =
          j.at("conv").at("edges").get<std::vector<std::pair<std::size_t, std::size_t>>>();
      auto const& c = j.at("classes");
      r.is_gbl      = c.at("gbl").get<bool>();
      r.is_gmv      = c.at("gmv").get<bool>();
      r.is_lgroup   = c.at("lgroup").get<bool>();
      r.invertibles = c.at("invertibles").get<std::vector<std::string>>();
      r.integrals   = c.at("integrals").get<std::vector<std::string>>();
      auto const& s       = j.at("semilinear");
      r.semilinear        = get_opt<bool>(s.at("verdict"));
      r.semilinear_routes = s.at("routes").get<std::map<std::string, bool>>();
      r.decomposition     = s.at("decomposition").get<std::vector<std::size_t>>();
      r.notices           = j.at("notices").get<std::vector<std::string>>();
      auto const& h       = j.at("hamiltonian");
      r.hamiltonian = get_opt<std::pair<std::size_t, std::size_t>>(h.at("degree"));
      r.hamiltonian_star_agrees = get_opt<bool>(h.at("star_agrees"));
      r.martinez                = get_opt<bool>(j.at("martinez"));
      // Laws are stored by name; restore catalog order.
      auto const& laws = j.at("laws");
      for (auto const& law : law_catalog()) {
        if (laws.contains(law.name)) {
          auto const& l = laws.at(law.name);
          r.laws.push_back({law.name, l.at("holds").get<bool>(),
                            l.at("counterexample").get<std::string>()});
        }
      }
    } catch (json::exception const& e) {
      fail(ErrorKind::SyntaxError, std::string("report: ") + e.what());
    }
    return r;
  }

}  // namespace rlat
