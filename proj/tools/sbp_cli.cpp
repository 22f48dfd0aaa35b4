#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sepbox/alter.hpp"
#include "sepbox/census.hpp"
#include "sepbox/classify.hpp"
#include "sepbox/error.hpp"
#include "sepbox/expected.hpp"
#include "sepbox/io.hpp"
#include "sepbox/products.hpp"
#include "sepbox/symmetry.hpp"
#include "sepbox/table.hpp"

using namespace sepbox;
using json = nlohmann::json;

namespace {

CensusCatalog& catalog() {
  static CensusCatalog c;
  return c;
}

/// A path to a .dg/.json file, or a catalogue name such as DCyc[4] or ATD[8,2].
Digraph input(const std::string& arg) {
  if (std::filesystem::exists(arg)) return io::load(arg);
  return catalog().get(arg).digraph;
}

void emit(const Digraph& g, const std::string& out, const std::string& comment) {
  if (out.empty() || out == "-")
    std::cout << io::format_dg(g, comment);
  else
    io::save(g, out, comment);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_generators(const PermGroup& g, const std::string& indent = "  ") {
  for (const auto& p : g.generators()) std::cout << indent << p.cycle_string() << '\n';
}

json evidence_json(const SymmetryType& t) {
  const auto& e = t.evidence;
  return {{"tag", to_string(t.tag)},
          {"vertex_orbits", e.vertex_orbits},
          {"edge_orbits", e.edge_orbits},
          {"dart_orbits", e.dart_orbits},
          {"group_order", to_string(e.group_order)},
          {"vs", to_string(e.vs)},
          {"dart_stab_nontrivial", e.dart_stab_nontrivial},
          {"klein_local", e.klein_local}};
}

std::vector<std::pair<CensusEntry, CensusEntry>> read_pairs(const std::string& path) {
  const auto doc = json::parse(read_text(path));
  const auto& list = doc.is_object() ? doc.at("pairs") : doc;
  std::vector<std::pair<CensusEntry, CensusEntry>> out;
  for (const auto& item : list) {
    if (item.is_string()) {
      const auto& e = catalog().get(item.get<std::string>());
      out.emplace_back(e, e);
    } else if (item.is_array() && item.size() == 2) {
      out.emplace_back(catalog().get(item[0].get<std::string>()), catalog().get(item[1].get<std::string>()));
    } else {
      throw Error(ErrorKind::Parse, "pairs entries must be a name or a [name, name] array");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separated box products of digraphs and their symmetries"};
  app.require_subcommand(1);

  std::string a, b, out;
  auto binary = [&](const char* name, const char* help, Digraph (*op)(const Digraph&, const Digraph&)) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("A", a, "first factor")->required();
    cmd->add_option("B", b, "second factor")->required();
    cmd->add_option("-o,--out", out, "output file (.dg or .json)");
    cmd->callback([&, op, name] { emit(op(input(a), input(b)), out, std::string(name) + " " + a + " " + b); });
  };
  binary("sbp", "separated box product", &sbp);
  binary("box", "Cartesian product", &box_product);

  auto unary = [&](const char* name, const char* help, Digraph (*op)(const Digraph&)) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("G", a, "digraph")->required();
    cmd->add_option("-o,--out", out, "output file (.dg or .json)");
    cmd->callback([&, op, name] { emit(op(input(a)), out, std::string(name) + " " + a); });
  };
  unary("cdc", "canonical double cover", &cdc);
  unary("dartdig", "dart digraph", &dart_digraph);
  unary("a2d", "A2D of a graph", &a2d);
  unary("a2g", "A2G of a graph", &a2g);
  unary("named", "write a named digraph (K4, K33, cube, petersen, tutte8, DCyc<n>, ATD[n,i])",
        [](const Digraph& g) { return g; });

  Vertex seed = 0;
  auto* component = app.add_subcommand("component", "component containing a vertex");
  component->add_option("G", a, "digraph")->required();
  component->add_option("--seed", seed, "seed vertex");
  component->add_option("-o,--out", out, "output file");
  component->callback([&] {
    const auto c = extract_component(input(a), seed);
    std::ostringstream note;
    note << "component of " << a << " containing " << seed << "; vertices";
    for (auto v : c.vertices) note << ' ' << v;
    emit(c.digraph, out, note.str());
  });

  std::vector<Vertex> witness;
  auto* alter = app.add_subcommand("alter", "alter-perimeter and classes");
  alter->add_option("G", a, "digraph")->required();
  alter->add_option("--witness", witness, "print a sum-zero walk between two vertices")->expected(2);
  alter->callback([&] {
    const auto g = input(a);
    if (!witness.empty()) {
      const auto walk = sum_zero_walk(g, witness[0], witness[1]);
      if (!walk) {
        std::cout << "none\n";
        return;
      }
      std::cout << walk->vertices.front();
      for (std::size_t i = 0; i < walk->length(); ++i)
        std::cout << (walk->signs[i] > 0 ? " -> " : " <- ") << walk->vertices[i + 1];
      std::cout << "\nsum 0, length " << walk->length() << '\n';
      return;
    }
    const auto lab = alter_labeling(g);
    std::cout << "perimeter " << lab.perimeter << "\nmodulus " << lab.modulus << '\n';
    for (Vertex v = 0; v < g.order(); ++v) std::cout << v << ' ' << lab.class_of[v] << '\n';
  });

  bool order_only = false, orbits = false;
  auto* aut = app.add_subcommand("aut", "automorphism group");
  aut->add_option("G", a, "digraph")->required();
  aut->add_flag("--order", order_only, "print only the order");
  aut->add_flag("--orbits", orbits, "print vertex orbits");
  aut->callback([&] {
    const auto g = input(a);
    const auto r = automorphism_group(g);
    std::cout << "order " << to_string(r.order) << '\n';
    if (order_only) return;
    std::cout << "generators\n";
    print_generators(r.group);
    if (orbits) {
      std::cout << "orbits\n";
      for (const auto& o : r.group.orbits()) {
        std::cout << ' ';
        for (auto v : o) std::cout << ' ' << v;
        std::cout << '\n';
      }
    }
  });

  auto* iso = app.add_subcommand("iso", "isomorphism test");
  iso->add_option("A", a, "first digraph")->required();
  iso->add_option("B", b, "second digraph")->required();
  iso->callback([&] {
    const auto r = find_isomorphism(input(a), input(b));
    if (!r) {
      std::cout << "not isomorphic\n";
      return;
    }
    std::cout << "isomorphic\n";
    for (Vertex v = 0; v < r->degree(); ++v) std::cout << v << ' ' << (*r)[v] << '\n';
  });

  auto* rev = app.add_subcommand("reversal", "find a reversal");
  rev->add_option("G", a, "digraph")->required();
  rev->callback([&] {
    const auto r = find_reversal(input(a));
    if (!r.exists) {
      std::cout << "not reversible\n";
      return;
    }
    std::cout << "reversible\n  " << r.witness->cycle_string() << '\n';
  });

  std::string g1_opt, g2_opt;
  auto* expected = app.add_subcommand("expected", "expected symmetries of a product");
  expected->add_option("A", a, "first factor");
  expected->add_option("B", b, "second factor");
  expected->add_option("--g1", g1_opt, "first factor");
  expected->add_option("--g2", g2_opt, "second factor");
  expected->callback([&] {
    const auto first = input(g1_opt.empty() ? a : g1_opt);
    const auto second = input(g2_opt.empty() ? b : g2_opt);
    const auto type = expected_type(first, second);
    std::cout << "clause " << type.clause << "\nexpected " << to_string(type.tag) << '\n';
    const auto e = build_expected_group(first, second, automorphism_group(first).group,
                                        automorphism_group(second).group);
    std::cout << "lifted generators\n";
    for (const auto& p : e.lifted) std::cout << "  " << p.cycle_string() << '\n';
    if (e.sigma) std::cout << "sigma\n  " << e.sigma->cycle_string() << '\n';
    if (e.tau) std::cout << "tau\n  " << e.tau->cycle_string() << '\n';
    if (e.mu) std::cout << "mu\n  " << e.mu->cycle_string() << '\n';
    std::cout << "order on product " << to_string(e.on_product.order()) << '\n'
              << "component " << e.component.size() << " vertices, order " << to_string(e.on_component.order())
              << '\n';
    if (hash_product_warning(first, second)) std::cout << "warning: components may differ\n";
  });

  auto* a2gg = app.add_subcommand("a2ggroups", "groups A and B acting on A2D of a cubic bipartite graph");
  a2gg->add_option("G", a, "cubic graph")->required();
  a2gg->callback([&] {
    const auto lambda = input(a);
    const auto G = automorphism_group(lambda).group;
    const auto r = build_a2g_groups(lambda, G);
    const auto ag = a2g(lambda);
    std::cout << "|G| " << to_string(G.order()) << "\n|H| " << to_string(r.H.order()) << "\nalpha "
              << r.alpha.cycle_string() << "\n|A| " << to_string(r.A.order()) << "\n|B| " << to_string(r.B.order())
              << "\nB dart-transitive on a2g: " << (is_transitive_on(r.B, Action::Darts, ag) ? "yes" : "no") << '\n';
  });

  auto* classify = app.add_subcommand("classify", "symmetry type of a tetravalent graph");
  classify->add_option("G", a, "graph (an orientation is replaced by its underlying graph)")->required();
  classify->callback([&] {
    auto g = input(a);
    if (!is_graph(g)) g = underlying(g);
    std::cout << evidence_json(symmetry_type(g)).dump(2) << '\n';
  });

  std::size_t gen_order = 0;
  std::string gen_dir;
  auto* gen = app.add_subcommand("gen", "generate the census of a given order");
  gen->add_option("--order", gen_order, "number of vertices")->required();
  gen->add_option("--out", gen_dir, "directory for one .dg file per entry");
  gen->callback([&] {
    const auto entries = generate_atd(gen_order);
    if (!gen_dir.empty()) std::filesystem::create_directories(gen_dir);
    for (const auto& e : entries) {
      std::cout << e.local_name << ' ' << e.name << " AP " << e.alter_perimeter
                << (e.reversible ? " reversible" : " non-reversible") << '\n';
      if (!gen_dir.empty())
        io::save(e.digraph, std::filesystem::path(gen_dir) / (e.local_name + ".dg"), e.name);
    }
  });

  bool force = false;
  auto* ing = app.add_subcommand("ingest", "validate a census file");
  ing->add_option("FILE", a, "census file")->required()->check(CLI::ExistingFile);
  ing->add_flag("--force", force, "load even when validation fails");
  ing->callback([&] {
    const auto e = ingest(a, force);
    const auto report = validate_entry(e.digraph);
    std::cout << e.name << ": " << e.digraph.order() << " vertices, AP " << e.alter_perimeter
              << (e.reversible ? ", reversible" : ", non-reversible") << (e.is_graph ? ", graph" : "") << '\n';
    if (!report.ok()) std::cout << "warning: " << report.problems() << '\n';
  });

  std::string mode = "t1", pairs, expect;
  bool pow2 = false;
  unsigned threads = 0;
  auto* table = app.add_subcommand("table", "product table as CSV");
  table->add_option("--mode", mode, "t1, t2, t3 or t4")->check(CLI::IsMember({"t1", "t2", "t3", "t4"}));
  table->add_option("--pairs", pairs, "JSON list of names or [name, name] pairs")->required();
  table->add_option("--out", out, "CSV output (default stdout)");
  table->add_option("--expect", expect, "reference CSV; exit non-zero on mismatch");
  table->add_flag("--pow2", pow2, "print large powers of two as 2^k");
  table->add_option("--threads", threads, "worker threads (0: all cores)");
  int status = 0;
  table->callback([&] {
    const auto rows = run_table(read_pairs(pairs), parse_table_mode(mode), threads);
    const auto csv = to_csv(rows, pow2);
    if (out.empty())
      std::cout << csv;
    else
      std::ofstream(out) << csv;
    if (!expect.empty()) {
      const auto reference = read_text(expect);
      const auto diffs = compare_csv(csv, reference, false);
      for (const auto& d : diffs) std::cerr << "mismatch: " << d << '\n';
      if (!diffs.empty()) status = 3;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
