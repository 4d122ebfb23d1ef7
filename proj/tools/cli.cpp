#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "vdfi/serialize.hpp"
#include "vdfi/vdfi.hpp"

namespace vdfi::cli {
namespace {

struct Settings {
  std::string format = "json";
  std::string cache_dir;
  int workers = 1;
};

EnumerationOptions enumeration_options(const Settings& s) {
  EnumerationOptions opts;
  opts.workers = s.workers;
  if (const char* env = std::getenv("VDFI_CACHE_DIR"); env && *env) {
    opts.cache_dir = env;
  } else if (!s.cache_dir.empty()) {
    opts.cache_dir = s.cache_dir;
  }
  return opts;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

// Flat rendering of a JSON object: "key: value" lines, or a header row plus
// one value row for csv.
void emit(std::ostream& out, const Json& j, const std::string& format) {
  if (format == "json") {
    out << j.dump(2) << '\n';
    return;
  }
  if (format == "text") {
    for (const auto& [k, v] : j.items()) out << k << ": " << scalar_text(v) << '\n';
    return;
  }
  std::string header;
  std::string row;
  for (const auto& [k, v] : j.items()) {
    if (!header.empty()) {
      header += ',';
      row += ',';
    }
    header += k;
    std::string cell = v.is_structured() ? v.dump() : scalar_text(v);
    if (cell.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : cell) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      cell = quoted + "\"";
    }
    row += cell;
  }
  out << header << '\n' << row << '\n';
}

ChemGraph load_graph(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return parse_graph6(arg);
  std::ifstream in(arg);
  if (!in) throw Error("cannot read " + arg);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  // A graph6 file holds a single token; anything with two fields per line is an edge list.
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string a;
    std::string b;
    if (!(fields >> a)) continue;
    if (fields >> b) return parse_edge_list(text);
    return parse_graph6(a);
  }
  throw Error(arg + " contains no graph");
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!piece.empty()) out.push_back(parse_number(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto sep = text.find("..");
  std::size_t width = 2;
  if (sep == std::string::npos) {
    sep = text.find('-', 1);
    width = 1;
  }
  auto to_int = [&](const std::string& s) {
    const double v = parse_number(s);
    if (v != std::floor(v)) throw Error("range bounds must be integers: " + text);
    return static_cast<int>(v);
  };
  if (sep == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  return {to_int(text.substr(0, sep)), to_int(text.substr(sep + width))};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertex-degree-function indices of chemical graphs: bounds, extremal graphs, exhaustive checks", "vdfi"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings settings;
  app.add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache-dir", settings.cache_dir, "Enumeration cache directory (VDFI_CACHE_DIR overrides)");
  app.add_option("--workers", settings.workers, "Enumeration worker threads")->check(CLI::Range(1, 256));

  std::string graph_arg;
  std::string f_spec;
  int n = 0;
  int m = 0;
  bool thm3 = false;
  double tolerance = kDefaultTolerance;

  auto* index = app.add_subcommand("index", "H_f, Gamma_f, TI and coindex of one graph");
  index->add_option("--graph", graph_arg, "graph6 record, or a file holding graph6 or an edge list")->required();
  index->add_option("--f", f_spec, "Function spec, e.g. power:2")->required();

  auto* classify_cmd = app.add_subcommand("classify", "xi1, xi2 and the bound case of a function");
  classify_cmd->add_option("--f", f_spec)->required();
  classify_cmd->add_option("--tol", tolerance)->check(CLI::PositiveNumber);

  auto* bound = app.add_subcommand("bound", "Bound on H_f (or TI + coindex with --thm3)");
  bound->add_option("--n", n)->required();
  bound->add_option("--m", m)->required();
  bound->add_option("--f", f_spec)->required();
  bound->add_flag("--thm3", thm3, "Bound TI + coindex instead of H_f");

  auto* extremal = app.add_subcommand("extremal", "Construct a graph in the equality configuration");
  extremal->add_option("--n", n)->required();
  extremal->add_option("--m", m)->required();

  auto* verify = app.add_subcommand("verify", "Check the bound against every connected chemical (n,m)-graph");
  verify->add_option("--n", n)->required();
  verify->add_option("--m", m)->required();
  verify->add_option("--f", f_spec)->required();

  std::string family;
  std::string params;
  std::string n_range;
  std::string m_rule = "all";
  int max_enum_n = 8;
  auto* sweep_cmd = app.add_subcommand("sweep", "Bounds and enumeration results over a parameter grid (CSV)");
  sweep_cmd->add_option("--family", family)->required();
  sweep_cmd->add_option("--params", params, "Comma-separated parameters");
  sweep_cmd->add_option("--n-range", n_range, "e.g. 5..8")->required();
  sweep_cmd->add_option("--m-rule", m_rule, "all | tree | n+K | n-K");
  sweep_cmd->add_option("--max-enum-n", max_enum_n, "Largest n that is enumerated");

  double xi1 = 0;
  double xi2 = 0;
  int max_total = 100;
  auto* lemma = app.add_subcommand("lemma1", "Brute-force the Gamma_f inequality over (n2, n3)");
  lemma->add_option("--xi1", xi1)->required();
  lemma->add_option("--xi2", xi2)->required();
  lemma->add_option("--max-total", max_total);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "vdfi: " << e.what() << '\n';
    return 2;
  }

  try {
    if (index->parsed()) {
      const ChemGraph g = load_graph(graph_arg);
      const DegreeFunction f = parse_function_spec(f_spec);
      const auto ti = ti_pair(g, f);
      Json j{{"graph6", to_graph6(g)}, {"n", g.n()}, {"m", g.m()}, {"f", f.spec()}};
      j["degree_vector"] = to_json(degree_vector(g));
      j["h_f"] = json_number(h_f(g, f).value);
      j["gamma_f"] = json_number(gamma_f(g, f).value);
      j["ti"] = json_number(ti.ti.value);
      j["coindex"] = json_number(ti.coindex.value);
      emit(out, j, settings.format);
    } else if (classify_cmd->parsed()) {
      const DegreeFunction f = parse_function_spec(f_spec);
      Json j{{"f", f.spec()}};
      j.update(to_json(classify(f, tolerance)));
      emit(out, j, settings.format);
    } else if (bound->parsed()) {
      const DegreeFunction f = parse_function_spec(f_spec);
      Json j = to_json(thm3 ? theorem3_bound(n, m, f) : theorem1_bound(n, m, f));
      j["quantity"] = thm3 ? "TI+coindex" : "H_f";
      j["f"] = f.spec();
      emit(out, j, settings.format);
    } else if (extremal->parsed()) {
      const auto sol = construct_extremal(n, m);
      Json j = to_json(sol);
      if (settings.format != "json") {
        j["counts"] = sol.counts ? Json(sol.counts->degree_set() + " " + to_json(*sol.counts).dump()) : Json(nullptr);
        j["witness"] = sol.witness ? Json(to_graph6(*sol.witness)) : Json(nullptr);
      }
      emit(out, j, settings.format);
    } else if (verify->parsed()) {
      const DegreeFunction f = parse_function_spec(f_spec);
      const auto rep = verify_bound(n, m, f, enumeration_options(settings));
      emit(out, to_json(rep), settings.format);
      if (!rep.violations.empty()) {
        err << "vdfi: " << rep.violations.size() << " bound violation(s)\n";
        return 1;
      }
    } else if (sweep_cmd->parsed()) {
      const auto [lo, hi] = parse_range(n_range);
      SweepOptions opts;
      opts.enumeration = enumeration_options(settings);
      opts.max_enumeration_n = max_enum_n;
      const auto rows = sweep(parse_family_tag(family), parse_list(params), lo, hi, MRule::parse(m_rule), opts);
      if (app.get_option("--format")->count() > 0 && settings.format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows) {
          Json j{{"family", r.family}, {"parameter", json_number(r.parameter)}, {"n", r.n}, {"m", r.m},
                 {"residue", r.residue}, {"verdict", r.verdict}};
          j["bound"] = r.bound ? json_number(*r.bound) : Json(nullptr);
          j["extremal"] = r.extremal ? json_number(*r.extremal) : Json(nullptr);
          j["attained"] = r.attained ? Json(*r.attained) : Json(nullptr);
          j["violations"] = r.violations;
          j["note"] = r.note;
          arr.push_back(std::move(j));
        }
        out << arr.dump(2) << '\n';
      } else {
        write_sweep_csv(out, rows);
      }
    } else if (lemma->parsed()) {
      const bool holds = verify_lemma1(xi1, xi2, max_total);
      Json j{{"xi1", json_number(xi1)},
             {"xi2", json_number(xi2)},
             {"verdict", verdict_name(classify_xi(xi1, xi2))},
             {"max_total", max_total},
             {"holds", holds}};
      emit(out, j, settings.format);
    }
  } catch (const Error& e) {
    err << "vdfi: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "vdfi: internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace vdfi::cli
