// chromafun: chromatic polynomials, stable partitions, natural bijections
// between coloring sets, relative CBS bijections, and cardinality analysis
// of periodic countable graphs.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "chromafun/cache.hpp"
#include "chromafun/cbs.hpp"
#include "chromafun/chromatic.hpp"
#include "chromafun/functor.hpp"
#include "chromafun/generators.hpp"
#include "chromafun/infinite.hpp"
#include "chromafun/json_io.hpp"
#include "chromafun/partitions.hpp"

using namespace chromafun;
using nlohmann::json;

namespace {

// Exit codes: 0 ok, 2 input/parse, 3 resource limit, 4 precondition.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;
constexpr int kExitPrecondition = 4;

struct RunConfig {
  int vertex_limit = kDefaultVertexLimit;
  long long coloring_budget = kDefaultColoringBudget;
  int probe_bound = kDefaultProbeBound;
  std::string cache_path;
  std::string output_format = "json";

  bool table() const { return output_format == "table"; }
};

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string poly_pretty(const IntPolynomial& p) { return p.to_string(); }

json st_difference(const StVector& st1, const StVector& st2) {
  int upper = std::max(st1.max_block_count(), st2.max_block_count());
  for (int k = 0; k <= upper; ++k) {
    if (st1.at(k) != st2.at(k)) return json(k);
  }
  return json(nullptr);
}

json decomposition_json(const StVector& st) {
  json out = json::array();
  for (const auto& [k, count] : st.counts) {
    out.push_back(json{{"k", k}, {"count", count.str()}});
  }
  return out;
}

class CacheSession {
 public:
  CacheSession(const RunConfig& config, ChromaticSolver& solver) : solver_(solver) {
    const char* env = std::getenv("CHROMAFUN_CACHE");
    std::string path = env ? env : config.cache_path;
    if (!path.empty()) {
      cache_.emplace(path);
      cache_->seed_solver(solver_);
    }
  }
  ~CacheSession() {
    if (cache_) cache_->absorb(solver_);
  }

 private:
  ChromaticSolver& solver_;
  std::optional<PolynomialCache> cache_;
};

int cmd_chrompoly(const RunConfig& config, const std::string& graph6) {
  FiniteGraph g = parse_graph6(graph6);
  ChromaticSolver solver(config.vertex_limit);
  CacheSession session(config, solver);
  IntPolynomial p = solver.polynomial(g);
  if (config.table()) {
    std::cout << "graph6: " << emit_graph6(g) << "\n";
    std::cout << "chi(G, t) = " << poly_pretty(p) << "\n";
  } else {
    json out = polynomial_to_json(p);
    out["graph6"] = emit_graph6(g);
    print_json(out);
  }
  return kExitOk;
}

int cmd_equiv(const RunConfig& config, const std::string& graph6_a,
              const std::string& graph6_b) {
  FiniteGraph g1 = parse_graph6(graph6_a);
  FiniteGraph g2 = parse_graph6(graph6_b);
  ChromaticSolver solver(config.vertex_limit);
  CacheSession session(config, solver);
  IntPolynomial p1 = solver.polynomial(g1);
  IntPolynomial p2 = solver.polynomial(g2);
  StVector st1 = to_falling_factorial(p1);
  StVector st2 = to_falling_factorial(p2);
  bool equivalent = p1 == p2;
  if (config.table()) {
    std::cout << (equivalent ? "equivalent" : "not equivalent") << "\n";
    std::cout << "chi(G1) = " << poly_pretty(p1) << "\n";
    std::cout << "chi(G2) = " << poly_pretty(p2) << "\n";
    if (!equivalent) {
      std::cout << "first differing k: " << st_difference(st1, st2) << "\n";
    }
  } else {
    json out{{"equivalent", equivalent},
             {"graph6", json::array({emit_graph6(g1), emit_graph6(g2)})},
             {"st", json::array({st_vector_to_json(st1), st_vector_to_json(st2)})},
             {"decomposition",
              json::array({decomposition_json(st1), decomposition_json(st2)})}};
    if (!equivalent) out["first_differing_k"] = st_difference(st1, st2);
    print_json(out);
  }
  return kExitOk;
}

int cmd_natiso(const RunConfig& config, const std::string& graph6_a,
               const std::string& graph6_b, int max_colors) {
  FiniteGraph g1 = parse_graph6(graph6_a);
  FiniteGraph g2 = parse_graph6(graph6_b);
  NaturalBijection bijection = build_natural_bijection(g1, g2, config.vertex_limit);
  bool natural = verify_naturality_through(bijection, max_colors, config.coloring_budget);
  json out{{"graph6", json::array({emit_graph6(g1), emit_graph6(g2)})},
           {"matching", matching_to_json(bijection)},
           {"naturality", json{{"verified_max_colors", max_colors}, {"holds", natural}}}};
  if (config.table()) {
    std::cout << "matching: " << out["matching"].dump() << "\n";
    std::cout << "naturality through " << max_colors << " colors: "
              << (natural ? "verified" : "FAILED") << "\n";
  } else {
    print_json(out);
  }
  return natural ? kExitOk : kExitPrecondition;
}

json periodic_colorings_json(const StripSpec& spec, int n) {
  json list = json::array();
  for (const auto& coloring : enumerate_strip_colorings(spec, n)) {
    list.push_back(periodic_coloring_to_json(coloring));
  }
  return list;
}

int cmd_strip(const RunConfig& config, const std::string& fixture_or_path, int n) {
  CountableGraph graph = [&]() -> CountableGraph {
    try {
      return fixture_by_name(fixture_or_path);
    } catch (const precondition_error&) {
      std::ifstream in(fixture_or_path);
      if (!in) {
        throw parse_error("no such fixture or readable file: " + fixture_or_path, 0);
      }
      json j;
      try {
        in >> j;
      } catch (const json::exception& e) {
        throw parse_error(std::string("invalid StripSpec JSON: ") + e.what(), 0);
      }
      return strip_spec_from_json(j);
    }
  }();

  json out;
  out["input"] = fixture_or_path;
  out["colors"] = n;
  if (std::holds_alternative<CompleteMinusEdgeGraph>(graph)) {
    auto report = complete_minus_edge_report();
    out["cardinality"] = cardinality_to_json(count_colorings(graph, n));
    out["chromatic_number"] = "infinite";
    out["report"] = json{{"stable_partitions", report.stable_partition_count},
                         {"partition_1", report.partition_1},
                         {"partition_2", report.partition_2},
                         {"block_cardinalities", report.block_cardinalities},
                         {"decomposition", report.decomposition},
                         {"isomorphic_to_complete", report.isomorphic_to_complete}};
    print_json(out);
    return kExitOk;
  }

  Cardinality cardinality = count_colorings(graph, n);
  out["cardinality"] = cardinality_to_json(cardinality);
  auto chromatic = chromatic_number_countable(graph);
  out["chromatic_number"] = chromatic ? json(*chromatic) : json("infinite");

  if (const auto* spec = std::get_if<StripSpec>(&graph)) {
    if (cardinality.is_finite() && cardinality.count > 0) {
      out["colorings"] = periodic_colorings_json(*spec, n);
    } else if (cardinality == Cardinality::continuum()) {
      ContinuumWitness witness = continuum_witness(*spec, n, config.probe_bound / 8);
      out["witness"] = json{
          {"state", witness.state_coloring},
          {"branch_a", witness.coloring_a.cell_coloring(witness.diverge_cell)},
          {"branch_b", witness.coloring_b.cell_coloring(witness.diverge_cell)},
          {"diverge_cell", witness.diverge_cell},
          {"coloring_a", periodic_coloring_to_json(witness.coloring_a)},
          {"coloring_b", periodic_coloring_to_json(witness.coloring_b)}};
    }
  } else if (cardinality.is_finite() && cardinality.count > 0) {
    // The wheel: center color forces the spokes.
    out["colorings"] =
        json::array({"center 0, every spoke 1", "center 1, every spoke 0"});
  }
  if (config.table()) {
    std::cout << "cardinality: " << cardinality.to_string() << "\n";
    std::cout << "chromatic number: " << out["chromatic_number"].dump() << "\n";
  } else {
    print_json(out);
  }
  return kExitOk;
}

int cmd_corpus(const RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw parse_error("cannot open corpus file: " + path, 0);
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);

  struct LineResult {
    bool skipped = false;
    bool failed = false;
    std::string message;
    std::string graph6;
    StVector st;
  };
  std::vector<LineResult> results(lines.size());

  // One worker (and one solver cache) per hardware thread; assembly stays
  // ordered by line number.
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(),
                                                     lines.size() ? lines.size() : 1));
  std::vector<std::future<void>> futures;
  for (std::size_t w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w]() {
      ChromaticSolver solver(config.vertex_limit);
      for (std::size_t i = w; i < lines.size(); i += workers) {
        std::string text = lines[i];
        if (text.empty()) {
          results[i].skipped = true;
          continue;
        }
        try {
          FiniteGraph g = parse_graph6(text);
          results[i].graph6 = emit_graph6(g);
          results[i].st = to_falling_factorial(solver.polynomial(g));
        } catch (const std::exception& e) {
          results[i].failed = true;
          results[i].message = e.what();
        }
      }
    }));
  }
  for (auto& f : futures) f.get();

  struct ClassInfo {
    std::string representative;
    std::vector<std::size_t> lines;
  };
  std::vector<std::pair<StVector, ClassInfo>> classes;
  json errors = json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (r.skipped) continue;
    if (r.failed) {
      errors.push_back(json{{"line", i + 1}, {"message", r.message}});
      continue;
    }
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const auto& entry) { return entry.first == r.st; });
    if (it == classes.end()) {
      classes.push_back({r.st, {r.graph6, {i + 1}}});
    } else {
      it->second.lines.push_back(i + 1);
    }
  }
  json class_list = json::array();
  for (const auto& [st, info] : classes) {
    class_list.push_back(json{{"st", st_vector_to_json(st)["st"]},
                              {"size", info.lines.size()},
                              {"representative", info.representative},
                              {"lines", info.lines}});
  }
  json out{{"classes", class_list}, {"errors", errors}};
  if (config.table()) {
    for (const auto& entry : class_list) {
      std::cout << "class size " << entry["size"] << " rep " << entry["representative"]
                << "\n";
    }
    for (const auto& err : errors) {
      std::cout << "error line " << err["line"] << ": " << err["message"] << "\n";
    }
  } else {
    print_json(out);
  }
  return errors.empty() ? kExitOk : kExitParse;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ',')) {
    if (part.empty()) continue;
    try {
      out.push_back(std::stoi(part));
    } catch (...) {
      throw parse_error("invalid integer list: " + text, 0);
    }
  }
  return out;
}

int cmd_cbs(const RunConfig& config, const std::string& graph6_a,
            const std::string& graph6_b, const std::string& phi_text,
            const std::string& psi_text, int m, int n) {
  FiniteGraph g1 = parse_graph6(graph6_a);
  FiniteGraph g2 = parse_graph6(graph6_b);
  GraphHom phi{g1, g2, parse_int_list(phi_text)};
  GraphHom psi{g2, g1, parse_int_list(psi_text)};
  if (m > n) throw precondition_error("need m <= n");
  std::vector<int> id(m);
  for (int i = 0; i < m; ++i) id[i] = i;
  Injection f(m, n, id);
  ChromaticCbsResult result = chromatic_cbs(g1, g2, phi, psi, f, config.coloring_budget);
  auto pairs = [](const std::vector<int>& r) {
    json out = json::array();
    for (std::size_t i = 0; i < r.size(); ++i) out.push_back(json::array({i, r[i]}));
    return out;
  };
  json out{{"m", m},
           {"n", n},
           {"r_m", pairs(result.cbs.r1)},
           {"r_n", pairs(result.cbs.r2)}};
  print_json(out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chromatic polynomials, chromatic functors, and countable strips"};
  app.require_subcommand(1);

  RunConfig config;
  app.add_option("--limit", config.vertex_limit, "vertex limit for exact computations")
      ->capture_default_str();
  app.add_option("--budget", config.coloring_budget, "coloring enumeration budget")
      ->capture_default_str();
  app.add_option("--probe", config.probe_bound, "probe bound for infinite-graph checks")
      ->capture_default_str();
  app.add_option("--cache", config.cache_path,
                 "polynomial cache file (env CHROMAFUN_CACHE overrides)");
  app.add_option("--format", config.output_format, "output format: json or table")
      ->check(CLI::IsMember({"json", "table"}));

  std::string graph_a, graph_b, hom_phi, hom_psi, path;
  int colors = 3;
  int m = 2, n = 3;

  auto* chrompoly = app.add_subcommand("chrompoly", "chromatic polynomial of a graph6 graph");
  chrompoly->add_option("graph6", graph_a)->required();

  auto* equiv = app.add_subcommand("equiv", "decide chromatic equivalence of two graphs");
  equiv->add_option("graph6_1", graph_a)->required();
  equiv->add_option("graph6_2", graph_b)->required();

  auto* natiso = app.add_subcommand("natiso",
                                    "construct and certify a natural bijection");
  natiso->add_option("graph6_1", graph_a)->required();
  natiso->add_option("graph6_2", graph_b)->required();
  natiso->add_option("max_colors", colors, "verify naturality through this color count")
      ->required();

  auto* strip = app.add_subcommand("strip", "cardinality analysis of a countable graph");
  strip->add_option("fixture", graph_a, "fixture name or StripSpec JSON file")->required();
  strip->add_option("colors", colors)->required();

  auto* corpus = app.add_subcommand("corpus", "group a graph6 file by St vector");
  corpus->add_option("file", path)->required();

  auto* cbs = app.add_subcommand("cbs", "relative CBS bijections between coloring sets");
  cbs->add_option("graph6_1", graph_a)->required();
  cbs->add_option("graph6_2", graph_b)->required();
  cbs->add_option("--phi", hom_phi, "surjective hom g1 ->> g2, comma-separated images")
      ->required();
  cbs->add_option("--psi", hom_psi, "surjective hom g2 ->> g1, comma-separated images")
      ->required();
  cbs->add_option("--m", m)->required();
  cbs->add_option("--n", n)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (chrompoly->parsed()) return cmd_chrompoly(config, graph_a);
    if (equiv->parsed()) return cmd_equiv(config, graph_a, graph_b);
    if (natiso->parsed()) return cmd_natiso(config, graph_a, graph_b, colors);
    if (strip->parsed()) return cmd_strip(config, graph_a, colors);
    if (corpus->parsed()) return cmd_corpus(config, path);
    if (cbs->parsed()) return cmd_cbs(config, graph_a, graph_b, hom_phi, hom_psi, m, n);
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitParse;
  } catch (const resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const precondition_error& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitOk;
}
