#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bct/campaigns.hpp"
#include "bct/corpus.hpp"
#include "bct/csbe.hpp"
#include "bct/families.hpp"
#include "bct/invariants.hpp"
#include "bct/io.hpp"
#include "bct/topology.hpp"

namespace {

using nlohmann::json;

bct::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bct::Error("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return bct::parse_graph_file(buffer.str()).graph;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw bct::Error("cannot write '" + out_path + "'");
  out << text;
}

json edge_json(const bct::Edge& e) { return json::array({e.first, e.second}); }

json sequence_json(const bct::EliminationSequence& seq) {
  json steps = json::array();
  for (const auto& s : seq.steps) {
    json step;
    step["edge"] = edge_json(s.edge);
    step["simple_endpoint"] =
        s.simple_endpoint ? json(*s.simple_endpoint) : json(nullptr);
    step["closed_neighborhood"] = s.closed_neighborhood;
    step["isolated"] = s.isolated_created;
    steps.push_back(std::move(step));
  }
  return json{{"steps", std::move(steps)},
              {"residual_vertices", seq.residual_vertices}};
}

json betti_json(const bct::BettiTable& bt) {
  json out = json::object();
  for (auto [d, r] : bt.ranks) out[std::to_string(d)] = r;
  return out;
}

json report_json(const bct::CampaignReport& r) {
  json out;
  out["schema"] = r.schema;
  out["campaign"] = r.campaign_id;
  out["corpus"] = r.corpus_description;
  out["capacity"] = r.capacity_note;
  out["instances_checked"] = r.instances_checked;
  out["runtime_seconds"] = r.runtime_seconds;
  out["violations"] = json::array();
  for (const auto& v : r.violations)
    out["violations"].push_back(
        {{"graph", v.graph_text}, {"computed", v.computed}, {"expected", v.expected}});
  return out;
}

std::vector<int> parse_params(const std::string& family, const std::string& text) {
  std::map<std::string, int> named;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw bct::Error("parameter '" + item + "' is not of the form k=v");
    named[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
  }
  static const std::map<std::string, std::vector<std::string>> order{
      {"K", {"n", "m"}}, {"P", {"n"}},  {"C", {"k"}},  {"star", {"q"}},
      {"S222", {}},      {"R", {"p", "n"}}, {"B4", {}}, {"Hn", {"n"}},
      {"Bp", {"p"}},     {"DS2", {}},   {"Hk", {"k"}}, {"fig2", {}}};
  auto it = order.find(family);
  if (it == order.end()) throw bct::Error("unknown family '" + family + "'");
  std::vector<int> params;
  for (const auto& key : it->second) {
    auto found = named.find(key);
    if (found == named.end())
      throw bct::Error("family '" + family + "' needs parameter " + key);
    params.push_back(found->second);
    named.erase(found);
  }
  if (!named.empty())
    throw bct::Error("unexpected parameter '" + named.begin()->first + "'");
  return params;
}

int run(int argc, char** argv) {
  CLI::App app{"biclique partitions, elimination sequences and homology of "
               "1-subdivision graphs"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a named family graph");
  std::string family, params_text, base_path, out_path;
  gen->add_option("--family", family, "family name")->required();
  gen->add_option("--params", params_text, "comma list of k=v parameters");
  gen->add_option("--base", base_path, "base graph file (family B4)");
  gen->add_option("-o,--output", out_path, "output file (default stdout)");

  // invariants
  auto* inv = app.add_subcommand("invariants", "exact desk-scale invariants");
  std::string inv_file, which = "bp,gamma,gammai,im";
  bool no_singletons = false, inv_json = false;
  inv->add_option("file", inv_file)->required();
  inv->add_option("--which", which, "comma list from bp,gamma,gammai,im");
  inv->add_flag("--no-singletons", no_singletons,
                "forbid singleton blocks in biclique partitions");
  inv->add_flag("--json", inv_json);

  // csbe
  auto* csbe_cmd = app.add_subcommand("csbe", "complete simple biclique elimination");
  std::string csbe_file;
  bool csbe_json = false;
  csbe_cmd->add_option("file", csbe_file)->required();
  csbe_cmd->add_flag("--json", csbe_json);

  // homotopy
  auto* hom = app.add_subcommand("homotopy", "homotopy type of Ind(S(B))");
  std::string hom_file;
  bool hom_json = false;
  hom->add_option("file", hom_file)->required();
  hom->add_flag("--json", hom_json);

  // reg
  auto* reg_cmd = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
  std::string reg_file, reg_of = "graph";
  bool reg_json = false;
  reg_cmd->add_option("file", reg_file)->required();
  reg_cmd->add_option("--of", reg_of, "graph | subdivision");
  reg_cmd->add_flag("--json", reg_json);

  // homology
  auto* hml = app.add_subcommand("homology", "reduced GF(2) Betti numbers");
  std::string hml_file, complex_kind = "ind";
  bool hml_json = false, hml_facets = false;
  hml->add_option("file", hml_file)->required();
  hml->add_option("--complex", complex_kind, "ind | ind-subdivision | dual");
  hml->add_flag("--json", hml_json);
  hml->add_flag("--facets", hml_facets, "also print the facet lines");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification campaign");
  std::string campaign;
  bool verify_json = false;
  bct::CampaignParams cp;
  int max_n = -1, count = -1;
  std::uint64_t seed = 1;
  verify->add_option("campaign", campaign, "one of T1..T10")->required();
  verify->add_option("--max-n", max_n);
  verify->add_option("--seed", seed);
  verify->add_option("--count", count);
  verify->add_flag("--json", verify_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*gen) {
    std::optional<bct::Graph> base;
    if (!base_path.empty()) base = load_graph(base_path);
    auto g = bct::generate_family(family, parse_params(family, params_text), base);
    emit(bct::write_graph_file(g), out_path);
    return 0;
  }

  if (*inv) {
    auto g = load_graph(inv_file);
    json out;
    std::stringstream text;
    std::stringstream in(which);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item == "bp") {
        auto bp = bct::biclique_partition_number(g, !no_singletons);
        if (!bp.feasible) {
          out["bp"] = nullptr;
          text << "bp = infeasible (no singleton blocks allowed)\n";
        } else {
          out["bp"] = bp.size;
          json blocks = json::array();
          for (const auto& b : bp.witness.blocks)
            blocks.push_back({{"left", b.left}, {"right", b.right}});
          out["bp_witness"] = std::move(blocks);
          text << "bp = " << bp.size << "\n";
        }
      } else if (item == "gamma") {
        auto d = bct::domination_number(g);
        out["gamma"] = d.size;
        out["gamma_witness"] = d.witness;
        text << "gamma = " << d.size << "\n";
      } else if (item == "gammai") {
        auto d = bct::independence_domination_number(g);
        out["gammai"] = d.size;
        out["gammai_witness"] = d.witness_set;
        text << "gammai = " << d.size << "\n";
      } else if (item == "im") {
        auto m = bct::induced_matching_number(g);
        out["im"] = m.size;
        json edges = json::array();
        for (const auto& e : m.witness.edges) edges.push_back(edge_json(e));
        out["im_witness"] = std::move(edges);
        text << "im = " << m.size << "\n";
      } else {
        throw bct::Error("unknown invariant '" + item + "'");
      }
    }
    std::cout << (inv_json ? out.dump(2) + "\n" : text.str());
    return 0;
  }

  if (*csbe_cmd) {
    auto g = load_graph(csbe_file);
    auto outcome = bct::find_csbe_sequence(g);
    if (csbe_json) {
      json out;
      out["csbe"] = outcome.is_csbe_graph();
      if (outcome.sequence) out["sequence"] = sequence_json(*outcome.sequence);
      if (outcome.refusal_state) {
        out["refusal_graph"] = bct::write_graph_file(*outcome.refusal_state);
        json partial = json::array();
        for (const auto& e : outcome.partial) partial.push_back(edge_json(e));
        out["partial"] = std::move(partial);
      }
      std::cout << out.dump(2) << "\n";
    } else if (outcome.sequence) {
      std::cout << "CSBE-graph: sequence of length "
                << outcome.sequence->steps.size() << "\n";
      for (const auto& s : outcome.sequence->steps)
        std::cout << "  " << s.edge.first << " " << s.edge.second << "\n";
    } else {
      std::cout << "not a CSBE-graph (refusal after " << outcome.partial.size()
                << " steps)\n";
    }
    return 0;
  }

  if (*hom) {
    auto g = load_graph(hom_file);
    auto report = bct::homotopy_type_of_subdivision(g);
    std::string kind = report.kind == bct::HomotopyKind::Sphere ? "sphere"
                       : report.kind == bct::HomotopyKind::Contractible
                           ? "contractible"
                           : "unknown";
    if (hom_json) {
      json out;
      out["kind"] = kind;
      if (report.kind == bct::HomotopyKind::Sphere)
        out["dimension"] = report.sphere_dimension;
      out["certificate"] = report.certificate;
      if (report.csbe_sequence)
        out["sequence"] = sequence_json(*report.csbe_sequence);
      if (report.greedy_sequence)
        out["greedy_sequence"] = sequence_json(*report.greedy_sequence);
      if (report.refusal_state)
        out["refusal_graph"] = bct::write_graph_file(*report.refusal_state);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "Ind(S(B)) is " << kind;
      if (report.kind == bct::HomotopyKind::Sphere)
        std::cout << " of dimension " << report.sphere_dimension;
      std::cout << " (" << report.certificate << ")\n";
    }
    return 0;
  }

  if (*reg_cmd) {
    auto g = load_graph(reg_file);
    if (reg_of != "graph" && reg_of != "subdivision")
      throw bct::Error("--of must be graph or subdivision");
    int value = reg_of == "subdivision" ? bct::regularity(bct::subdivide(g).graph)
                                        : bct::regularity(g);
    if (reg_json)
      std::cout << json{{"of", reg_of}, {"reg", value}}.dump(2) << "\n";
    else
      std::cout << "reg = " << value << "\n";
    return 0;
  }

  if (*hml) {
    auto g = load_graph(hml_file);
    bct::SimplicialComplex x;
    if (complex_kind == "ind")
      x = bct::independence_complex(g);
    else if (complex_kind == "ind-subdivision")
      x = bct::independence_complex(bct::subdivide(g).graph);
    else if (complex_kind == "dual")
      x = bct::alexander_dual(bct::independence_complex(g));
    else
      throw bct::Error("--complex must be ind, ind-subdivision or dual");
    auto bt = bct::reduced_betti_numbers(x);
    if (hml_json) {
      json out;
      out["complex"] = complex_kind;
      out["betti"] = betti_json(bt);
      if (hml_facets) {
        json fs = json::array();
        for (const auto& f : bct::facets(x)) fs.push_back(f);
        out["facets"] = std::move(fs);
      }
      std::cout << out.dump(2) << "\n";
    } else {
      if (bt.all_zero()) std::cout << "all reduced Betti numbers vanish\n";
      for (auto [d, r] : bt.ranks)
        std::cout << "betti[" << d << "] = " << r << "\n";
      if (hml_facets)
        for (const auto& f : bct::facets(x)) {
          std::cout << "f";
          for (const auto& l : f) std::cout << " " << l;
          std::cout << "\n";
        }
    }
    return 0;
  }

  if (*verify) {
    cp.max_n = max_n;
    cp.seed = seed;
    cp.count = count;
    auto report = bct::run_campaign(campaign, cp);
    if (verify_json) {
      std::cout << report_json(report).dump(2) << "\n";
    } else {
      std::cout << report.campaign_id << ": " << report.corpus_description
                << "\n  instances: " << report.instances_checked
                << "\n  capacity: " << report.capacity_note << "\n  runtime: "
                << report.runtime_seconds << " s\n  result: "
                << (report.passed()
                        ? "PASS"
                        : "FAIL (" + std::to_string(report.violations.size()) +
                              " violations)")
                << "\n";
      for (const auto& v : report.violations)
        std::cout << "  violation: computed " << v.computed << "; expected "
                  << v.expected << "\n" << v.graph_text;
    }
    return report.passed() ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const bct::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
