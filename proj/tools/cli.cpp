#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "swforge/binomial_rep.hpp"
#include "swforge/error.hpp"
#include "swforge/graph.hpp"
#include "swforge/inverse.hpp"
#include "swforge/nested_star.hpp"
#include "swforge/parallel.hpp"
#include "swforge/scanner.hpp"
#include "swforge/steiner.hpp"
#include "swforge/sw_index.hpp"

namespace swforge::cli {
namespace {

using nlohmann::json;

json wide_json(Wide v) {
  if (fits_u64(v)) return json(static_cast<std::uint64_t>(v));
  return json(to_string(v));
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(item, &used);
    if (used != item.size()) throw CLI::ValidationError("list", "malformed integer list: " + text);
    out.push_back(v);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::MalformedEdgeList, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedEdgeList, "cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

// Graphs from --input (edge list) or --graph6 (one per line).
std::vector<Graph> load_graphs(const std::string& input, const std::string& graph6) {
  if (!input.empty() && !graph6.empty()) throw CLI::ValidationError("--input/--graph6", "give only one graph source");
  if (!input.empty()) return {parse_edge_list(read_file(input))};
  if (graph6.empty()) throw CLI::ValidationError("--input/--graph6", "a graph source is required");
  std::vector<Graph> graphs;
  for (std::string& line : read_lines(graph6)) {
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (!line.empty()) graphs.push_back(parse_graph6(line));
  }
  return graphs;
}

json certificate_json(const InverseCertificate& c) {
  return json{{"status", "certified"},
              {"k", c.k},
              {"target", wide_json(c.target)},
              {"n", c.spec.n()},
              {"hubs", c.spec.hubs()},
              {"predicted", wide_json(c.predicted)},
              {"verified", c.verified == c.target}};
}

json unresolved_json(unsigned k, Wide target, std::uint32_t n_max) {
  return json{{"status", "unresolved"},
              {"k", k},
              {"target", wide_json(target)},
              {"n_max", n_max},
              {"note", "no nested star up to n_max; this does not prove the value is unattainable"}};
}

json report_json(const ScanReport& r) {
  json counts = json::object();
  for (const auto& [n, c] : r.graph_counts) counts[std::to_string(n)] = c;
  std::vector<std::uint64_t> attainable;
  for (const auto& [v, g] : r.attainable) attainable.push_back(v);
  return json{{"k", r.k},
              {"limit", r.limit},
              {"required_max_n", r.required_max_n},
              {"n_max_covered", r.n_max_covered},
              {"source", std::string(to_string(r.source))},
              {"complete", r.complete},
              {"exceptions_status", r.complete ? "certified" : "candidates"},
              {"exceptions", r.exceptions},
              {"exception_count", r.exceptions.size()},
              {"attainable", attainable},
              {"graph_counts", counts}};
}

void emit_graph(std::ostream& out, const Graph& g, const std::string& format) {
  if (format == "dot") out << to_dot(g);
  else if (format == "text") out << to_edge_list(g);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steiner-Wiener index toolkit: compute, construct, invert, scan and count"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string input;
  std::string graph6;
  std::string format = "json";
  unsigned k = 2;
  unsigned d = 1;
  std::string m_text;
  std::uint32_t n = 0;
  std::string hubs_text;
  std::string target_text;
  std::uint32_t n_max = 40;
  std::uint64_t limit = 0;
  std::uint64_t bound = 0;
  std::string lambdas_text;
  bool distinct = false;
  bool include_zero = false;
  bool oracle = false;
  std::uint64_t p = 2;
  unsigned k_exp = 1;
  unsigned s = 0;
  std::uint64_t max_x = 0;
  std::string terminals_text;
  std::string witnesses_path;
  std::string bound_rule = "default";

  const auto formats = CLI::IsMember({"json", "text", "dot"});

  auto* compute = app.add_subcommand("compute", "Exact SW_k of a graph");
  compute->add_option("--input", input, "Edge-list file");
  compute->add_option("--graph6", graph6, "graph6 file, one graph per line");
  compute->add_option("--k", k, "Subset size")->required();

  auto* steiner = app.add_subcommand("steiner", "Steiner distance of a terminal set");
  steiner->add_option("--input", input, "Edge-list file");
  steiner->add_option("--graph6", graph6, "graph6 file (first graph used)");
  steiner->add_option("--terminals", terminals_text, "Comma-separated vertices")->required();
  steiner->add_flag("--oracle", oracle, "Also run the exhaustive superset oracle");

  auto* construct = app.add_subcommand("construct", "Build a nested star and check its index");
  construct->add_option("--n", n, "Vertex count")->required();
  construct->add_option("--hubs", hubs_text, "Ascending hub list a,b,c");
  construct->add_option("--k", k, "Subset size")->required();
  construct->add_option("--format", format)->check(formats);

  auto* rep = app.add_subcommand("represent", "Write m as a sum of distinct C(x, d)");
  rep->add_option("--m", m_text, "Target")->required();
  rep->add_option("--d", d, "Lower index")->required();
  auto* max_x_opt = rep->add_option("--max-x", max_x, "Exclusive bound on terms");
  rep->add_option("--n", n, "Star size; terms must be < n - 1")->excludes(max_x_opt);

  auto* inv = app.add_subcommand("invert", "Find a nested star with SW_k equal to the target");
  inv->add_option("--k", k, "Subset size")->required();
  inv->add_option("--target", target_text, "Desired index value");
  inv->add_option("--n-max", n_max, "Largest star size to try");
  inv->add_option("--input", input, "Batch file: one target per line");
  inv->add_option("--format", format)->check(formats);

  auto* scn = app.add_subcommand("scan", "Exhaustive SW_k spectrum and exceptional values");
  scn->add_option("--k", k, "Subset size");
  scn->add_option("--limit", limit, "Largest value examined");
  scn->add_option("--graph6", graph6, "Corpus of graphs beyond the built-in orders");
  scn->add_option("--witnesses", witnesses_path, "Write value,graph6 CSV here");
  scn->add_option("--input", input, "Batch file: lines \"k limit\"");

  auto* cnt = app.add_subcommand("count", "Count tuples with sum lambda_i C(x_i, d) = m");
  cnt->add_option("--d", d)->required();
  cnt->add_option("--s", s, "Variable count (all coefficients 1)");
  cnt->add_option("--lambdas", lambdas_text, "Coefficients l1,l2,...");
  cnt->add_option("--m", m_text)->required();
  cnt->add_option("--B", bound, "Upper bound on variables (default ceil(m^(1/d)/100))");
  cnt->add_flag("--distinct", distinct, "Also count tuples with distinct coordinates");
  cnt->add_flag("--include-zero", include_zero, "Let variables take the value 0");

  auto* prb = app.add_subcommand("probe", "Tabulate N(m), N*(m) and N(m) m^(1-s/d)");
  prb->add_option("--d", d)->required();
  prb->add_option("--s", s, "Variable count (all coefficients 1)");
  prb->add_option("--lambdas", lambdas_text, "Coefficients l1,l2,...");
  prb->add_option("--m", m_text, "Comma-separated targets")->required();
  prb->add_option("--B", bound, "Explicit bound (overrides --bound-rule)");
  prb->add_option("--bound-rule", bound_rule, "default | root")->check(CLI::IsMember({"default", "root"}));

  auto* loc = app.add_subcommand("local", "Count residue solutions modulo p^k");
  loc->add_option("--p", p)->required();
  loc->add_option("--k-exp", k_exp)->required();
  loc->add_option("--d", d)->required();
  loc->add_option("--s", s, "Variable count (all coefficients 1)");
  loc->add_option("--lambdas", lambdas_text, "Coefficients l1,l2,...");
  loc->add_option("--m", m_text)->required();

  auto* enm = app.add_subcommand("enumerate", "Write all connected graphs on n vertices as graph6");
  enm->add_option("--n", n)->required()->check(CLI::Range(1, 10));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return 2;
  }

  auto coefficients = [&]() {
    std::vector<std::uint64_t> lambdas = parse_u64_list(lambdas_text);
    if (lambdas.empty()) {
      if (s == 0) throw CLI::ValidationError("--s/--lambdas", "give --s or --lambdas");
      lambdas.assign(s, 1);
    } else if (s != 0 && s != lambdas.size()) {
      throw CLI::ValidationError("--s", "--s disagrees with the --lambdas length");
    }
    return lambdas;
  };

  try {
    if (*compute) {
      for (const Graph& g : load_graphs(input, graph6)) {
        const SwValue v = steiner_wiener(g, k);
        out << json{{"k", k}, {"n", g.order()}, {"sw", wide_json(v.value)}}.dump() << '\n';
      }
    } else if (*steiner) {
      const auto graphs = load_graphs(input, graph6);
      if (graphs.empty()) throw CLI::ValidationError("--graph6", "no graph in file");
      std::vector<std::uint32_t> verts;
      for (std::uint64_t v : parse_u64_list(terminals_text)) verts.push_back(static_cast<std::uint32_t>(v));
      const TerminalSet ts = TerminalSet::of(verts);
      json j{{"terminals", verts}, {"steiner_distance", steiner_distance(graphs[0], ts)}};
      if (oracle) j["oracle"] = steiner_distance_oracle(graphs[0], ts);
      out << j.dump() << '\n';
    } else if (*construct) {
      const NestedStarSpec spec(n, parse_hub_list(hubs_text));
      const Graph g = build(spec);
      const Wide predicted = nested_star_closed_form(spec, k).value;
      const Wide verified = steiner_wiener(g, k).value;
      emit_graph(out, g, format);
      json j{{"n", n}, {"hubs", spec.hubs()}, {"k", k}, {"predicted", wide_json(predicted)},
             {"verified", wide_json(verified)}, {"match", predicted == verified}};
      if (format == "json") {
        j["graph6"] = encode_graph6(g);
        j["edges"] = g.edge_count();
      }
      out << j.dump() << '\n';
    } else if (*rep) {
      const Wide m = parse_wide(m_text);
      std::uint64_t bound_x = max_x;
      if (bound_x == 0) {
        if (n == 0) throw CLI::ValidationError("--max-x/--n", "give --max-x or --n");
        bound_x = n - 1;
      }
      const auto r = represent(m, d, bound_x);
      json j{{"m", wide_json(m)}, {"d", d}, {"max_x", bound_x}};
      if (r) {
        j["status"] = "found";
        j["terms"] = r->terms;
      } else {
        j["status"] = "not_found";
      }
      out << j.dump() << '\n';
    } else if (*inv) {
      std::vector<Wide> targets;
      if (!input.empty()) {
        for (const std::string& line : read_lines(input)) targets.push_back(parse_wide(line));
      } else if (!target_text.empty()) {
        targets.push_back(parse_wide(target_text));
      } else {
        throw CLI::ValidationError("--target/--input", "give --target or a batch --input file");
      }
      std::vector<std::optional<InverseCertificate>> results(targets.size());
      parallel_chunks(targets.size(), 1, [&](unsigned, std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) results[i] = invert(k, targets[i], n_max);
      });
      for (std::size_t i = 0; i < targets.size(); ++i) {
        if (results[i]) {
          emit_graph(out, build(results[i]->spec), format);
          out << certificate_json(*results[i]).dump() << '\n';
        } else {
          out << unresolved_json(k, targets[i], n_max).dump() << '\n';
        }
      }
    } else if (*scn) {
      std::vector<std::pair<unsigned, std::uint64_t>> requests;
      if (!input.empty()) {
        for (const std::string& line : read_lines(input)) {
          std::istringstream fields(line);
          unsigned rk = 0;
          std::uint64_t rl = 0;
          if (!(fields >> rk >> rl)) throw CLI::ValidationError("--input", "expected \"k limit\" per line");
          requests.emplace_back(rk, rl);
        }
      } else {
        if (scn->count("--k") == 0 || scn->count("--limit") == 0)
          throw CLI::ValidationError("scan", "--k and --limit are required");
        requests.emplace_back(k, limit);
      }
      std::ofstream csv;
      if (!witnesses_path.empty()) {
        csv.open(witnesses_path);
        if (!csv) throw Error(ErrorKind::MalformedEdgeList, "cannot write " + witnesses_path);
        csv << "k,value,graph6\n";
      }
      for (const auto& [rk, rl] : requests) {
        ScanReport report;
        if (!graph6.empty()) {
          std::ifstream corpus(graph6);
          if (!corpus) throw Error(ErrorKind::MalformedGraph6, "cannot open " + graph6);
          report = scan(rk, rl, &corpus);
        } else {
          report = scan(rk, rl);
        }
        out << report_json(report).dump() << '\n';
        if (csv.is_open())
          for (const auto& [v, g] : report.attainable) csv << rk << ',' << v << ',' << encode_graph6(g) << '\n';
      }
    } else if (*cnt) {
      CountSpec spec;
      spec.d = d;
      spec.lambdas = coefficients();
      spec.m = parse_wide(m_text);
      spec.bound = bound != 0 ? bound : CountSpec::default_bound(spec.m, d);
      spec.include_zero = include_zero;
      json j{{"d", d}, {"s", spec.lambdas.size()}, {"lambdas", spec.lambdas}, {"m", wide_json(spec.m)},
             {"B", spec.bound}, {"include_zero", include_zero}};
      j["N"] = wide_json(count_representations(spec));
      if (distinct) {
        spec.distinct = true;
        j["Nstar"] = wide_json(count_representations(spec));
      }
      out << j.dump() << '\n';
    } else if (*prb) {
      std::vector<Wide> ms;
      std::stringstream list(m_text);
      for (std::string item; std::getline(list, item, ',');) ms.push_back(parse_wide(item));
      BoundRule rule = DefaultBound{};
      if (bound != 0) rule = ExplicitBound{bound};
      else if (bound_rule == "root") rule = RootBound{};
      const auto lambdas = coefficients();
      for (const ProbeRow& row : asymptotic_probe(d, lambdas, ms, rule)) {
        out << json{{"m", wide_json(row.m)},
                    {"B", row.bound},
                    {"N", wide_json(row.all)},
                    {"Nstar", wide_json(row.distinct)},
                    {"normalized", row.normalized},
                    {"collision_share", row.collision_share}}
                   .dump()
            << '\n';
      }
    } else if (*loc) {
      LocalCountSpec spec;
      spec.p = p;
      spec.k_exp = k_exp;
      spec.d = d;
      spec.lambdas = coefficients();
      spec.m = static_cast<std::uint64_t>(parse_wide(m_text));
      const Wide count = count_local(spec);
      out << json{{"p", p}, {"k_exp", k_exp}, {"d", d}, {"t", spec.t()}, {"s", spec.lambdas.size()},
                  {"m", spec.m}, {"M", wide_json(count)}}
                 .dump()
          << '\n';
    } else if (*enm) {
      generate_connected(n, [&](const Graph& g) { out << encode_graph6(g) << '\n'; });
    }
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return 2;
  } catch (const std::logic_error& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace swforge::cli
