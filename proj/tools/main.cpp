#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "conex/cycles.hpp"
#include "conex/embedding.hpp"
#include "conex/enumerate.hpp"
#include "conex/families.hpp"
#include "conex/formulas.hpp"
#include "conex/graph6.hpp"
#include "conex/oracle.hpp"
#include "conex/report.hpp"
#include "conex/tree.hpp"
#include "conex/verify.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitCap = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

conex::Graph first_graph(const std::string& path) {
  auto graphs = conex::graph6_decode_lines(read_file(path));
  if (graphs.empty()) throw std::runtime_error("no graph6 line in " + path);
  return graphs.front();
}

void emit_graph(const conex::Graph& g, const std::string& format, const std::string& meta) {
  if (format == "g6")
    std::cout << conex::graph6_encode(g) << "\n";
  else if (format == "dot")
    std::cout << conex::to_dot(g);
  else
    throw CLI::ValidationError("--out must be g6 or dot");
  std::cerr << meta << " vertices=" << g.order() << " edges=" << g.edge_count() << "\n";
}

struct Opt {
  long long value = 0;
  bool set = false;
};

void add_opt(CLI::App* cmd, const std::string& name, Opt& o, const std::string& desc) {
  cmd->add_option_function<long long>(
         name, [&o](long long v) { o.value = v; o.set = true; }, desc)
      ->expected(1);
}

std::optional<long long> as_opt(const Opt& o) {
  if (!o.set) return std::nullopt;
  return o.value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "conex: graph families, tree-containment checks, closed-form edge bounds and\n"
      "exact brute-force extremal numbers for small hosts.\n"
      "Exit codes: 0 success (or: pattern found), 1 pattern-free / verification failed,\n"
      "2 enumeration cap or search budget exceeded, 64 usage error."};
  app.require_subcommand(1);

  // ---- construct ----
  auto* construct = app.add_subcommand(
      "construct", "Emit one graph of a named family (graph6 to stdout, metadata to stderr)");
  std::string family, out_format = "g6";
  Opt c_n, c_k, c_d, c_s, c_x, c_r, c_a, c_b;
  construct->add_option("--family", family,
                        "g|s|p|f1|f2|f3|almost-regular|complete-bipartite|union-cliques|"
                        "broom|binary-tree|path|complete")
      ->required();
  add_opt(construct, "--n", c_n, "vertex count");
  add_opt(construct, "--k", c_k, "k parameter");
  add_opt(construct, "--d", c_d, "d parameter (diameter / block size driver)");
  add_opt(construct, "--s", c_s, "s parameter (join size)");
  add_opt(construct, "--x", c_x, "x parameter (clique size)");
  add_opt(construct, "--r", c_r, "r parameter (degree / binary-tree depth driver)");
  add_opt(construct, "--a", c_a, "a parameter (component size override / bipartite side)");
  add_opt(construct, "--b", c_b, "b parameter (bipartite side)");
  construct->add_option("--out", out_format, "g6|dot (default g6)");

  // ---- check ----
  auto* check = app.add_subcommand("check", "Decide tree containment in a host graph");
  std::string host_path, pattern_path;
  bool want_witness = false;
  uint64_t budget = 0;
  check->add_option("--host", host_path, "graph6 file with the host graph")->required();
  check->add_option("--pattern", pattern_path, "graph6 file with the pattern tree")->required();
  check->add_flag("--witness", want_witness, "print the embedding as pattern->host pairs");
  check->add_option("--budget", budget, "search node budget (0 = exhaustive)");

  // ---- formula ----
  auto* formula = app.add_subcommand("formula", "Evaluate a closed-form edge bound");
  std::string fname, ffamily;
  Opt f_n, f_k, f_d, f_s, f_x, f_a, f_r;
  long long n_to = 0;
  formula->add_option("--name", fname, "kopylov|woodall|two-connected|broom-exc|family-edges")
      ->required();
  add_opt(formula, "--n", f_n, "n");
  add_opt(formula, "--k", f_k, "k");
  add_opt(formula, "--d", f_d, "d");
  add_opt(formula, "--s", f_s, "s (family-edges g)");
  add_opt(formula, "--x", f_x, "x (family-edges s/p)");
  add_opt(formula, "--a", f_a, "a (family-edges s/p override)");
  add_opt(formula, "--r", f_r, "r (family-edges almost-regular)");
  formula->add_option("--family", ffamily, "family tag for --name family-edges");
  formula->add_option("--n-to", n_to, "emit a CSV sweep n..n-to instead of one integer");

  // ---- oracle ----
  auto* oracle = app.add_subcommand("oracle", "Exact extremal number by exhaustive enumeration");
  int o_n = 0, o_workers = 1;
  std::string o_forbid;
  bool o_connected = false, o_witnesses = false, o_force = false;
  oracle->add_option("--n", o_n, "host order (<= 9, or <= 10 with --force)")->required();
  oracle->add_option("--forbid", o_forbid, "tree.g6 file | path:K | cycle-ge:K | cycle:K")
      ->required();
  oracle->add_flag("--connected", o_connected, "restrict hosts to connected graphs");
  oracle->add_flag("--witnesses", o_witnesses, "include extremal witnesses in the record");
  oracle->add_flag("--force", o_force, "allow n = 10");
  oracle->add_option("--workers", o_workers, "worker threads (default 1)");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "Run a verification suite (JSON to stdout)");
  std::string suite;
  int v_max_n = -1, v_workers = 4;
  std::string v_c = "-12,-8,-4,0";
  verify->add_option("--suite", suite,
                     "eq1|thm2.2|thm2.3-lb|thm1.3-lower|thm1.2|prop2.1|prop5.1|claim3.1|"
                     "edge-identities|gamma|enum-counts")
      ->required();
  verify->add_option("--max-n", v_max_n, "range cap (suite-specific default)");
  verify->add_option("--workers", v_workers, "worker threads for enum-counts");
  verify->add_option("--c", v_c, "comma-separated c values for claim3.1");

  // ---- report ----
  auto* report = app.add_subcommand("report", "Emit finite-k ratio reports");
  bool r_gamma = false;
  std::string r_k = "50,100,200", r_out = "json";
  report->add_flag("--gamma", r_gamma, "emit the gamma ratio report");
  report->add_option("--k", r_k, "comma-separated k list");
  report->add_option("--out", r_out, "json|csv");

  CLI11_PARSE(app, argc, argv);

  auto parse_int_list = [](const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) out.push_back(std::stoi(item));
    return out;
  };

  try {
    if (construct->parsed()) {
      conex::FamilyParams p;
      p.family = family;
      p.n = as_opt(c_n);
      p.k = as_opt(c_k);
      p.d = as_opt(c_d);
      p.s = as_opt(c_s);
      p.x = as_opt(c_x);
      p.r = as_opt(c_r);
      p.a = as_opt(c_a);
      p.b = as_opt(c_b);
      conex::Graph g = conex::make_family(p);
      emit_graph(g, out_format, "family=" + family);
      return 0;
    }

    if (check->parsed()) {
      conex::Graph host = first_graph(host_path);
      conex::Tree pattern(first_graph(pattern_path));
      conex::EmbedOptions opts;
      opts.max_nodes = budget;
      conex::EmbedResult res = conex::find_tree_embedding(host, pattern, opts);
      switch (res.outcome) {
        case conex::SearchOutcome::found:
          if (want_witness)
            for (size_t i = 0; i < res.witness->map.size(); ++i)
              std::cout << i << " " << res.witness->map[i] << "\n";
          std::cerr << "contains (nodes=" << res.nodes << ")\n";
          return 0;
        case conex::SearchOutcome::absent:
          std::cerr << "free (nodes=" << res.nodes << ")\n";
          return 1;
        case conex::SearchOutcome::budget_exceeded:
          std::cerr << "budget exceeded (nodes=" << res.nodes << ")\n";
          return kExitCap;
      }
    }

    if (formula->parsed()) {
      auto evaluate = [&](long long n) -> long long {
        if (fname == "kopylov") return conex::kopylov_ex_c_path(n, f_k.value);
        if (fname == "woodall") return conex::woodall_ex_long_cycle(n, f_k.value);
        if (fname == "two-connected") return conex::two_connected_bound(n, f_k.value);
        if (fname == "broom-exc") {
          conex::BroomExc b = conex::broom_ex_c(n, f_k.value, f_d.value);
          if (b.f3_undefined)
            std::cerr << "warning: d=(k+3)/2 with odd d; F3 undefined, max over defined "
                         "families\n";
          return b.edges;
        }
        if (fname == "family-edges") {
          if (ffamily == "g") return conex::g_family_edges(n, f_k.value, f_s.value);
          if (ffamily == "s" || ffamily == "p") {
            long long a = f_a.set ? f_a.value : conex::a_x(static_cast<int>(f_k.value),
                                                           static_cast<int>(f_x.value));
            return ffamily == "s" ? conex::s_family_edges(n, f_x.value, a)
                                  : conex::p_family_edges(n, f_x.value, a);
          }
          if (ffamily == "f1") return conex::f1_edges(n, f_d.value);
          if (ffamily == "f2") return conex::f2_edges(n, f_d.value);
          if (ffamily == "f3") return conex::f3_edges(n, f_d.value);
          if (ffamily == "almost-regular") return conex::almost_regular_edges(n, f_r.value);
          if (ffamily == "union-cliques") return conex::union_cliques_edges(n, f_k.value);
          throw CLI::ValidationError("unknown --family for family-edges: " + ffamily);
        }
        throw CLI::ValidationError("unknown --name: " + fname);
      };
      if (!f_n.set) throw CLI::ValidationError("--n is required");
      if (n_to > 0) {
        std::cout << "n,value\n";
        for (long long n = f_n.value; n <= n_to; ++n)
          std::cout << n << "," << evaluate(n) << "\n";
      } else {
        std::cout << evaluate(f_n.value) << "\n";
      }
      return 0;
    }

    if (oracle->parsed()) {
      bool is_spec = o_forbid.rfind("path:", 0) == 0 || o_forbid.rfind("cycle-ge:", 0) == 0 ||
                     o_forbid.rfind("cycle:", 0) == 0;
      conex::Forbid f = is_spec ? conex::Forbid::parse(o_forbid)
                                : conex::Forbid::tree(conex::Tree(first_graph(o_forbid)));
      conex::ExtremalRecord rec =
          conex::extremal_number(o_n, f, o_connected, o_workers, o_force);
      if (!o_witnesses) rec.witnesses.clear();
      std::cout << conex::to_json_string(rec) << "\n";
      return 0;
    }

    if (verify->parsed()) {
      conex::SuiteReport rep;
      auto n_or = [&](int d) { return v_max_n > 0 ? v_max_n : d; };
      if (suite == "eq1")
        rep = conex::verify_eq1(n_or(8));
      else if (suite == "thm2.2")
        rep = conex::verify_thm2_2(n_or(8));
      else if (suite == "thm2.3-lb")
        rep = conex::verify_thm2_3_lb(n_or(40), 20);
      else if (suite == "thm1.3-lower")
        rep = conex::verify_thm1_3_lower(13, n_or(80));
      else if (suite == "thm1.2")
        rep = conex::verify_thm1_2(12, n_or(80));
      else if (suite == "claim3.1")
        rep = conex::verify_claim3_1(12, n_or(80), parse_int_list(v_c));
      else if (suite == "prop2.1")
        rep = conex::verify_prop2_1(n_or(12));
      else if (suite == "prop5.1")
        rep = conex::verify_prop5_1(n_or(7));
      else if (suite == "edge-identities")
        rep = conex::verify_edge_identities();
      else if (suite == "gamma")
        rep = conex::verify_gamma({50, 100, 200});
      else if (suite == "enum-counts")
        rep = conex::verify_enum_counts(n_or(8), v_workers);
      else
        throw CLI::ValidationError("unknown suite: " + suite);
      std::cout << rep.to_json().dump(2) << "\n";
      return rep.pass ? 0 : 1;
    }

    if (report->parsed()) {
      if (!r_gamma) throw CLI::ValidationError("report requires --gamma");
      auto rows = conex::gamma_report(parse_int_list(r_k));
      if (r_out == "csv")
        std::cout << conex::to_csv(rows);
      else
        std::cout << conex::to_json(rows).dump(2) << "\n";
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const conex::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
