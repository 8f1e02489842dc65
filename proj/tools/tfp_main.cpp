// tfp: command-line front end for the toric fiber product library.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tfp/errors.hpp"
#include "tfp/grading.hpp"
#include "tfp/groebner.hpp"
#include "tfp/models.hpp"
#include "tfp/oracle.hpp"
#include "tfp/parse.hpp"
#include "tfp/specfile.hpp"
#include "tfp/tfp.hpp"
#include "tfp/verify.hpp"

namespace {

using namespace tfp;

/// Output order: multidegree (when a grading applies), then the canonical
/// polynomial order, then text.
void print_sorted(std::vector<Polynomial> polys, const MultiGrading* grading) {
  std::stable_sort(polys.begin(), polys.end(), [&](const Polynomial& a, const Polynomial& b) {
    if (grading && !a.is_zero() && !b.is_zero() && grading->is_homogeneous(a) &&
        grading->is_homogeneous(b)) {
      DegreeVector ua = grading->monomial_degree(a.terms()[0].mon);
      DegreeVector ub = grading->monomial_degree(b.terms()[0].mon);
      if (ua != ub) return ua < ub;
    }
    int c = Polynomial::cmp(a, b);
    if (c != 0) return c < 0;
    return to_string(a) < to_string(b);
  });
  polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
  for (const Polynomial& p : polys) std::cout << to_string(p) << "\n";
}

std::vector<int> csv_ints(const std::string& s) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

TfpSpec spec_from(const std::string& spec_path, int r, const std::string& s,
                  const std::string& t, SpecFile* file_out) {
  if (!spec_path.empty()) {
    SpecFile f = SpecFile::parse_file(spec_path);
    if (file_out) *file_out = f;
    return f.to_tfp_spec();
  }
  if (r <= 0 || s.empty() || t.empty())
    throw ConfigError("need either --spec FILE or --r/--s/--t");
  return simple_spec(r, csv_ints(s), csv_ints(t));
}

void print_table(const HilbertTable& table) {
  for (const auto& [u, count] : table) {
    std::cout << "(";
    for (size_t i = 0; i < u.size(); ++i) std::cout << (i ? "," : "") << u[i];
    std::cout << "): " << count << "\n";
  }
}

int run_cli(int argc, char** argv) {
  CLI::App app{"toric fiber products of multigraded ideals"};
  app.require_subcommand(1);

  std::string spec_path, side = "x", out_base, config_path, what = "z";
  std::string facets, dims, group = "z2", tree, filter;
  int r = 0, bound = 4;
  std::string s_csv, t_csv;

  auto add_spec_opts = [&](CLI::App* cmd) {
    cmd->add_option("--spec", spec_path, "spec file");
    cmd->add_option("--r", r, "number of grading classes");
    cmd->add_option("--s", s_csv, "comma-separated s vector");
    cmd->add_option("--t", t_csv, "comma-separated t vector");
  };

  CLI::App* validate = app.add_subcommand("validate", "solve the positivity certificate");
  add_spec_opts(validate);

  CLI::App* quad = app.add_subcommand("quad", "print Quad_B");
  add_spec_opts(quad);

  CLI::App* lift_cmd = app.add_subcommand("lift", "print the lift of an ideal");
  add_spec_opts(lift_cmd);
  lift_cmd->add_option("--side", side, "x or y")->check(CLI::IsMember({"x", "y"}));

  CLI::App* product = app.add_subcommand("product", "print Lift(F) u Lift(G) u Quad_B");
  add_spec_opts(product);

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "reduced Groebner basis of a kernel or contraction");
  add_spec_opts(oracle_cmd);

  CLI::App* hilbert = app.add_subcommand("hilbert", "standard monomial tables");
  add_spec_opts(hilbert);
  hilbert->add_option("--bound", bound, "max omega-degree (default 4)");
  hilbert->add_option("--side", what, "z, x, y or hadamard")
      ->check(CLI::IsMember({"z", "x", "y", "hadamard"}));

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--config", config_path, "case file (defaults to the built-in suite)");
  verify_cmd->add_option("--out", out_base, "write BASE.txt and BASE.jsonl reports");
  verify_cmd->add_option("--filter", filter, "only run cases whose name contains this");

  CLI::App* model = app.add_subcommand("model", "statistical model builders");
  model->require_subcommand(1);
  CLI::App* m_hier = model->add_subcommand("hierarchical", "hierarchical model map");
  m_hier->add_option("--facets", facets, "facets, e.g. 1,2;2,3")->required();
  m_hier->add_option("--d", dims, "state counts")->required();
  CLI::App* m_hidden = model->add_subcommand("hidden", "hidden-variable model map");
  m_hidden->add_option("--facets", facets, "facets")->required();
  m_hidden->add_option("--d", dims, "state counts")->required();
  std::string hidden_nodes;
  m_hidden->add_option("--hidden", hidden_nodes, "hidden nodes, e.g. 2,4")->required();
  CLI::App* m_chain = model->add_subcommand("chain", "partially hidden Markov chain generators");
  m_chain->add_option("--d", dims, "odd-length state counts")->required();
  CLI::App* m_segre = model->add_subcommand("segre", "2x2 minors of all flattenings");
  m_segre->add_option("--d", dims, "tensor format")->required();
  CLI::App* m_phylo = model->add_subcommand("phylo", "group-based phylogenetic model map");
  m_phylo->add_option("--group", group, "trivial, z2, z3, z4 or z2xz2");
  m_phylo->add_option("--tree", tree, "rooted tree, e.g. ((1,2),3)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) {
      SpecFile file;
      TfpSpec spec = spec_from(spec_path, r, s_csv, t_csv, &file);
      std::cout << "r: " << spec.r << "\n";
      std::cout << "omega:";
      for (const Rational& w : spec.omega) std::cout << " " << rational_to_string(w);
      std::cout << "\n";
      std::cout << "grading: " << (spec.independent ? "INDEPENDENT" : "DEPENDENT") << "\n";
      return 0;
    }
    if (*quad) {
      TfpSpec spec = spec_from(spec_path, r, s_csv, t_csv, nullptr);
      print_sorted(quad_B(spec), &spec.z_grading);
      return 0;
    }
    if (*lift_cmd) {
      SpecFile file;
      TfpSpec spec = spec_from(spec_path, r, s_csv, t_csv, &file);
      std::vector<Polynomial> out;
      if (side == "x")
        for (const Polynomial& f : file.ideal_I(spec))
          for (Polynomial& p : lift(f, Side::X, spec)) out.push_back(std::move(p));
      else
        for (const Polynomial& g : file.ideal_J(spec))
          for (Polynomial& p : lift(g, Side::Y, spec)) out.push_back(std::move(p));
      print_sorted(std::move(out), &spec.z_grading);
      return 0;
    }
    if (*product) {
      SpecFile file;
      TfpSpec spec = spec_from(spec_path, r, s_csv, t_csv, &file);
      print_sorted(tfp_generators(file.ideal_I(spec), file.ideal_J(spec), spec),
                   &spec.z_grading);
      return 0;
    }
    if (*oracle_cmd) {
      if (spec_path.empty()) throw ConfigError("oracle needs --spec FILE");
      SpecFile file = SpecFile::parse_file(spec_path);
      ComputeLimits limits = ComputeLimits::from_env();
      if (file.has_map()) {
        PolynomialMap map = file.to_map();
        print_sorted(kernel(map, limits).generators, nullptr);
      } else {
        TfpSpec spec = file.to_tfp_spec();
        auto I = file.ideal_I(spec);
        auto J = file.ideal_J(spec);
        std::vector<Polynomial> joint;
        std::vector<int> xmap(spec.x_ring.size()), ymap(spec.y_ring.size());
        for (int v = 0; v < spec.x_ring.size(); ++v) xmap[v] = spec.xy_of_x(v);
        for (int v = 0; v < spec.y_ring.size(); ++v) ymap[v] = spec.xy_of_y(v);
        for (const Polynomial& f : I) joint.push_back(reindex(f, spec.xy_ring, xmap));
        for (const Polynomial& g : J) joint.push_back(reindex(g, spec.xy_ring, ymap));
        print_sorted(contract(phi_B(spec), joint, limits).generators, &spec.z_grading);
      }
      return 0;
    }
    if (*hilbert) {
      SpecFile file;
      TfpSpec spec = spec_from(spec_path, r, s_csv, t_csv, &file);
      ComputeLimits limits = ComputeLimits::from_env();
      auto I = file.ideal_I(spec);
      auto J = file.ideal_J(spec);
      auto table_of = [&](std::span<const Polynomial> gens, const RingSpec& ring,
                          const MultiGrading& grading) {
        GroebnerBasis gb =
            gens.empty() ? GroebnerBasis{ring, {}, TermOrder::grevlex(ring), true}
                         : buchberger(gens, TermOrder::grevlex(ring), limits);
        return standard_monomial_table(gb, grading, bound);
      };
      if (what == "x") {
        print_table(table_of(I, spec.x_ring, spec.x_grading));
      } else if (what == "y") {
        print_table(table_of(J, spec.y_ring, spec.y_grading));
      } else if (what == "hadamard") {
        print_table(hadamard_hilbert(table_of(I, spec.x_ring, spec.x_grading),
                                     table_of(J, spec.y_ring, spec.y_grading)));
      } else {
        auto gens = tfp_generators(I, J, spec);
        print_table(table_of(gens, spec.z_ring, spec.z_grading));
      }
      return 0;
    }
    if (*verify_cmd) {
      std::vector<CaseSpec> cases =
          config_path.empty() ? acceptance_cases() : parse_cases(config_path);
      if (!filter.empty()) {
        std::vector<CaseSpec> kept;
        for (CaseSpec& c : cases)
          if (c.name.find(filter) != std::string::npos) kept.push_back(std::move(c));
        cases = std::move(kept);
      }
      SuiteReport suite = run_cases(cases);
      std::cout << suite.text();
      if (!out_base.empty()) {
        std::ofstream txt(out_base + ".txt");
        txt << suite.text();
        std::ofstream jsonl(out_base + ".jsonl");
        jsonl << suite.jsonl();
      }
      return suite.ok() ? 0 : 1;
    }
    if (*model) {
      if (*m_hier || *m_hidden) {
        SimplicialComplex delta = [&] {
          std::vector<std::vector<int>> fs;
          std::string part;
          std::istringstream in(facets);
          int n = 0;
          while (std::getline(in, part, ';')) {
            fs.push_back(csv_ints(part));
            for (int v : fs.back()) n = std::max(n, v);
          }
          return SimplicialComplex::create(n, fs);
        }();
        ModelDims d = ModelDims::create(csv_ints(dims));
        PolynomialMap map = *m_hier ? hierarchical_map(delta, d)
                                    : hidden_map(delta, d, csv_ints(hidden_nodes));
        std::cout << "[map]\n";
        for (int v = 0; v < map.source.size(); ++v)
          std::cout << map.source.var(v).str() << " = " << to_string(map.images[v]) << "\n";
        return 0;
      }
      if (*m_chain) {
        std::vector<int> d = csv_ints(dims);
        if (d.size() % 2 == 0) throw ConfigError("chain needs an odd-length d");
        int n = (static_cast<int>(d.size()) - 1) / 2;
        print_sorted(chain_generators(n, ModelDims::create(d)), nullptr);
        return 0;
      }
      if (*m_segre) {
        print_sorted(segre_flattening_minors(ModelDims::create(csv_ints(dims))), nullptr);
        return 0;
      }
      if (*m_phylo) {
        PolynomialMap map =
            group_based_map(FiniteGroup::named(group), RootedTree::parse(tree));
        std::cout << "[map]\n";
        for (int v = 0; v < map.source.size(); ++v)
          std::cout << map.source.var(v).str() << " = " << to_string(map.images[v]) << "\n";
        return 0;
      }
    }
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run_cli(argc, argv); }
