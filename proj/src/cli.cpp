#include "lsgq/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lsgq/classify.hpp"
#include "lsgq/constructions.hpp"
#include "lsgq/errors.hpp"
#include "lsgq/report.hpp"
#include "lsgq/verify.hpp"

namespace lsgq {

namespace {

std::vector<long long> parse_pset(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
  return out;
}

/// Generator file: one generator per line.
///   <k|g|h> matrix <p> <d> <n> <n*n element codes> frob <e>
///   <k|g|h> perm <q^n images>
/// d is the degree of F_q over its prime field (d/n of the classify run).
struct GensFile {
  std::vector<SemilinearMap> k_gens;
  std::optional<SemilinearMap> g, h;
};

GensFile parse_gens_file(const std::string& path, const Field& fq, int n) {
  std::ifstream in(path);
  if (!in) throw ParseError("gens-file: cannot open " + path);
  GensFile out;
  USpace u{&fq, n};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string role, kind;
    if (!(ls >> role >> kind)) continue;
    if (role != "k" && role != "g" && role != "h")
      throw ParseError("gens-file: role must be k, g, or h in: " + line);
    SemilinearMap m;
    if (kind == "matrix") {
      long long p;
      int d, nn;
      if (!(ls >> p >> d >> nn))
        throw ParseError("gens-file: matrix needs p d n in: " + line);
      if (p != fq.p() || d != fq.d() || nn != n)
        throw ParseError("gens-file: matrix header (p,d,n) mismatch in: " +
                         line);
      std::vector<long long> codes(n * n);
      for (auto& c : codes)
        if (!(ls >> c)) throw ParseError("gens-file: short matrix in: " + line);
      std::string kw;
      long long e = 0;
      if (ls >> kw) {
        if (kw != "frob") throw ParseError("gens-file: expected frob");
        if (!(ls >> e)) throw ParseError("gens-file: frob needs an exponent");
      }
      m = SemilinearMap::from_matrix(fq, n, codes, e);
    } else if (kind == "perm") {
      std::vector<int32_t> img(u.size());
      for (auto& x : img)
        if (!(ls >> x)) throw ParseError("gens-file: short perm in: " + line);
      auto sm = semilinear_from_perm(u, Perm(img));
      if (!sm)
        throw ParseError("gens-file: permutation is not semilinear on U");
      m = *sm;
    } else {
      throw ParseError("gens-file: kind must be matrix or perm in: " + line);
    }
    if (role == "k")
      out.k_gens.push_back(m);
    else if (role == "g")
      out.g = m;
    else
      out.h = m;
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

void export_graph(const Graph& g, const VSpace* v, const std::string& format,
                  const std::string& base) {
  if (format == "dot")
    write_file(base + ".dot", to_dot(g));
  else if (format == "edges")
    write_file(base + ".edges", to_edge_list(g));
  else
    throw ArgumentOutOfRange("export format must be dot or edges");
  nlohmann::ordered_json labels = nlohmann::ordered_json::object();
  for (int venc = 0; venc < g.n(); ++venc) {
    if (v)
      labels[std::to_string(venc)] =
          "(" + std::to_string(v->a_of(venc)) + "," +
          std::to_string(v->b_of(venc)) + ")";
    else
      labels[std::to_string(venc)] = std::to_string(venc);
  }
  write_file(base + ".labels.json", labels.dump(2) + "\n");
}

int finish_suite(const SuiteResult& res, std::ostream& out) {
  out << res.summary;
  out << (res.ok ? "PASS" : "FAIL") << "\n";
  return res.ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"latin square graph quotient toolkit"};
  app.require_subcommand(1);

  Bounds bounds = Bounds::from_env();
  app.add_option("--max-field-order", bounds.max_field_order);
  app.add_option("--max-graph-vertices", bounds.max_graph_vertices);
  app.add_option("--max-group-size", bounds.max_group_size);

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  int amax = 9, rmax = 12, smax = 12;
  auto* div = verify->add_subcommand("div-lemma", "gcd identities vs oracle");
  div->add_option("--amax", amax);
  div->add_option("--rmax", rmax);
  div->add_option("--smax", smax);
  std::string pset = "2,3,5,7,11,13";
  int cs_dmax = 13;
  auto* cs = verify->add_subcommand("csets", "root sets vs brute force");
  cs->add_option("--pset", pset);
  cs->add_option("--dmax", cs_dmax);
  auto* arct = verify->add_subcommand("arc-transitivity",
                                      "lsg(H) arc-transitivity by group");
  auto* exs = verify->add_subcommand("examples", "example family structure");
  std::string which_case = "all";
  auto* cases = verify->add_subcommand("theorems", "classification witness cases");
  cases->add_option("--case", which_case);
  auto* structural =
      verify->add_subcommand("structural", "srg parameters and cross-checks");

  // classify
  auto* cla = app.add_subcommand("classify", "classify one (p,d,n,line) run");
  long long cp = 0;
  int cd = 0, cn = 1, cline = 1, ci = 0, cj = 0, cl = 0;
  std::string gens_path, out_path, export_fmt, export_base = "graph";
  bool timings = false;
  cla->add_option("-p", cp)->required();
  cla->add_option("-d", cd)->required();
  cla->add_option("-n", cn);
  cla->add_option("--line", cline)->required();
  cla->add_option("--i", ci);
  cla->add_option("--j", cj);
  cla->add_option("--l", cl);
  std::string field_config_path;
  cla->add_option("--gens-file", gens_path);
  cla->add_option("--field-config", field_config_path);
  cla->add_option("--out", out_path);
  cla->add_option("--export", export_fmt);
  cla->add_option("--export-path", export_base);
  cla->add_flag("--timings", timings);

  // scan
  auto* scan = app.add_subcommand("scan", "canonical-family parameter scan");
  long long pmax = 7;
  int dmax = 3, parallel = 1;
  std::string csv_path;
  scan->add_option("--pmax", pmax);
  scan->add_option("--dmax", dmax);
  scan->add_option("--parallel", parallel);
  scan->add_option("--csv", csv_path);

  // demo
  auto* demo = app.add_subcommand("demo", "build an example family");
  std::string family;
  std::vector<long long> dparams;
  std::string demo_export, demo_base = "demo";
  demo->add_option("family", family)->required();
  demo->add_option("params", dparams);
  demo->add_option("--export", demo_export);
  demo->add_option("--export-path", demo_base);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (div->parsed()) return finish_suite(verify_div_lemma(amax, rmax, smax),
                                            out);
    if (cs->parsed())
      return finish_suite(
          verify_csets_suite(parse_pset(pset), cs_dmax, bounds.max_field_order),
          out);
    if (arct->parsed())
      return finish_suite(
          verify_arc_transitivity_suite(bounds.max_graph_vertices), out);
    if (exs->parsed()) return finish_suite(verify_examples_suite(bounds), out);
    if (cases->parsed())
      return finish_suite(verify_theorem_cases(which_case, bounds), out);
    if (structural->parsed())
      return finish_suite(verify_structural_suite(bounds), out);

    if (cla->parsed()) {
      auto t0 = std::chrono::steady_clock::now();
      ClassificationReport rep;
      ModulusConfig field_config;
      if (!field_config_path.empty())
        field_config = ModulusConfig::parse_file(field_config_path);
      if (!gens_path.empty()) {
        if (cn < 1 || cd % cn != 0)
          throw ArgumentOutOfRange("classify: n must divide d");
        auto mod = field_config.lookup(cp, cd / cn);
        Field fq = mod ? Field(cp, cd / cn, *mod, bounds.max_field_order)
                       : Field(cp, cd / cn, bounds.max_field_order);
        GensFile gf = parse_gens_file(gens_path, fq, cn);
        StabilizerSpec spec;
        spec.line = cline;
        spec.f = &fq;
        spec.n = cn;
        spec.k_gens = gf.k_gens;
        spec.g = gf.g;
        spec.h = gf.h;
        rep = complete_quotients(cp, cd, cn, spec, bounds);
      } else {
        RunPlan plan{cp, cd, cn, cline, ci, cj, cl == 0 ? cd : cl};
        rep = run_plan(plan, bounds,
                       field_config.empty() ? nullptr : &field_config);
      }
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      std::string json = report_to_json(
          rep, timings ? std::optional<long long>(ms) : std::nullopt);
      if (!out_path.empty())
        write_file(out_path, json);
      else
        out << json;
      if (!export_fmt.empty()) {
        GroupTable h = elementary_abelian_group(cp, cd);
        VSpace v(cp, cd);
        export_graph(lsg(h, bounds.max_graph_vertices), &v, export_fmt,
                     export_base);
      }
      return 0;
    }

    if (scan->parsed()) {
      ScanResult sc = canonical_scan(pmax, dmax, bounds, parallel);
      std::ostringstream csv;
      csv << scan_csv_header();
      for (const ClassificationReport& r : sc.reports) csv << scan_csv_row(r);
      csv << "# k-constraint," << (sc.count_bounds_ok ? "PASS" : "FAIL") << "\n";
      if (!csv_path.empty()) {
        write_file(csv_path, csv.str());
        out << sc.reports.size() << " runs written to " << csv_path << "\n";
      } else {
        out << csv.str();
      }
      out << "k-constraint verdict: " << (sc.count_bounds_ok ? "PASS" : "FAIL")
          << "\n";
      return sc.count_bounds_ok ? 0 : 1;
    }

    if (demo->parsed()) {
      ExampleFamily fam;
      if (family == "lexicographic" || family == "lexi") {
        if (dparams.size() != 2)
          throw ArgumentOutOfRange("demo lexicographic m n");
        fam = lexicographic(int(dparams[0]), int(dparams[1]), bounds);
      } else if (family == "direct-product" || family == "direct") {
        if (dparams.size() != 2)
          throw ArgumentOutOfRange("demo direct-product m n");
        fam = direct_product(int(dparams[0]), int(dparams[1]), bounds);
      } else if (family == "diagonal-cayley" || family == "diag") {
        if (dparams.size() != 1)
          throw ArgumentOutOfRange("demo diagonal-cayley q");
        fam = diagonal_cayley(dparams[0], bounds);
      } else if (family == "lsg-example" || family == "lsg") {
        if (dparams.size() != 1) throw ArgumentOutOfRange("demo lsg-example q");
        fam = lsg_example(dparams[0], bounds);
      } else {
        throw ArgumentOutOfRange("demo: unknown family " + family);
      }
      out << family_to_json(fam);
      if (!demo_export.empty())
        export_graph(fam.graph, nullptr, demo_export, demo_base);
      bool ok = fam.computed_k == fam.expected_k;
      return ok ? 0 : 1;
    }
  } catch (const GoursatViolation& e) {
    err << "goursat violation: " << e.what() << "\n";
    return 3;
  } catch (const NotTransitive& e) {
    err << "not transitive: " << e.what() << "\n";
    return 4;
  } catch (const BoundExceeded& e) {
    err << "bound exceeded: " << e.what() << "\n";
    return 5;
  } catch (const CLI::Error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const ArgumentOutOfRange& e) {
    err << "invalid arguments: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace lsgq
