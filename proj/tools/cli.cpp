#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "rgl/bounds.hpp"
#include "rgl/error.hpp"
#include "rgl/graph_io.hpp"
#include "rgl/json_io.hpp"
#include "rgl/oracle.hpp"
#include "rgl/partition.hpp"
#include "rgl/pattern_expr.hpp"
#include "rgl/witnesses.hpp"

namespace rgl::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  long long node_budget = 0;

  // construct
  std::string family;
  int p = 0;
  int h_order = 0;
  int a2 = 0;
  int f_order = 0;
  std::string gamma1;
  std::vector<int> parts;
  std::string out_path;
  std::string cert_path;
  bool no_verify = false;

  // verify
  std::string cert_in;
  std::string concrete_blue;

  // bound
  std::string rule;
  long long n = 0;
  int chi = 0;
  int surplus = 0;
  std::string h_expr;
  long long ell = 0;
  bool ell_exact = false;
  int k = 0;
  int t = 0;

  // partition
  std::string graph;
  double epsilon = 0.01;
  int audit_h = 0;
  long long audit_n = 0;
  long long audit_ell = 0;

  // ramsey
  std::string red;
  std::string blue;
  int max_order = 0;
  std::string mode = "isofree";
  int jobs = 1;
};

DetectOptions detect_options(const Options& o) {
  DetectOptions d;
  if (o.node_budget > 0) d.node_budget = o.node_budget;
  return d;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot write " + path);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidArgument("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

int certificate_status(const Certificate& c) {
  if (c.pass) return kOk;
  for (const auto& s : c.transcript)
    if (s.outcome == StepOutcome::kInconclusive) return kResourceLimit;
  return kFailed;
}

void report_certificate(const Certificate& c, std::ostream& err) {
  for (const auto& s : c.transcript) err << "  [" << to_string(s.outcome) << "] " << s.name << ": " << s.detail << "\n";
  err << (c.pass ? "certificate passes: r >= " : "certificate FAILS: claimed r >= ") << c.claimed_bound << "\n";
}

int do_construct(const Options& o, std::ostream& out, std::ostream& err) {
  Certificate c;
  if (o.family == "burr") {
    c = burr_witness(o.p, o.h_order);
  } else if (o.family == "theorem2") {
    c = multipartite_k1_witness(o.p, o.a2, o.f_order);
  } else if (o.family == "corollary5") {
    const Graph gamma1 = o.gamma1.empty() ? Graph(0) : parse_graph_expr(o.gamma1);
    c = stacked_join_witness(gamma1, o.parts, o.f_order);
  } else {
    throw InvalidArgument("unknown family '" + o.family + "'");
  }
  if (!o.no_verify) {
    VerifyOptions v;
    v.detect = detect_options(o);
    c = verify_certificate(std::move(c), v);
    report_certificate(c, err);
  }
  const std::string json = certificate_to_json(c);
  if (!o.out_path.empty()) write_file(o.out_path, to_graph6(c.witness) + "\n");
  if (!o.cert_path.empty()) write_file(o.cert_path, json);
  out << json;
  return o.no_verify ? kOk : certificate_status(c);
}

int do_verify(const Options& o, std::ostream& out, std::ostream& err) {
  Certificate c = certificate_from_json(read_file(o.cert_in));
  VerifyOptions v;
  v.detect = detect_options(o);
  if (!o.concrete_blue.empty()) v.concrete_blue = parse_pattern(o.concrete_blue);
  c = verify_certificate(std::move(c), v);
  report_certificate(c, err);
  out << certificate_to_json(c);
  return certificate_status(c);
}

// l = r(K_p, H): caller value, else the literature table for cliques, else
// the oracle when H is small.
EllBound resolve_ell(const Options& o, const Graph& h, std::ostream& err) {
  if (o.ell > 0) return EllBound{o.ell, EllSource::kCaller, o.ell_exact};
  if (h.order() >= 1 && h.edge_count() == static_cast<long long>(h.order()) * (h.order() - 1) / 2) {
    if (auto known = known_clique_ramsey(o.p, h.order())) {
      err << "l = r(K_" << o.p << ", K_" << h.order() << ") = " << known->value << " (" << known->source << ")\n";
      return EllBound{known->value, EllSource::kKnownTable, true};
    }
  }
  OracleOptions opts;
  opts.detect = detect_options(o);
  opts.jobs = o.jobs;
  const auto s = ramsey_search(Pattern::clique(o.p), Pattern::explicit_graph(h), kIsomorphFreeOrderCap, opts);
  if (s.status != SearchOutcome::Status::kExact) {
    throw InvalidArgument("cannot determine l = r(K_p, H) by search; pass --ell");
  }
  err << "l = " << s.value << " (oracle)\n";
  return EllBound{s.value, EllSource::kOracle, true};
}

int h_order_of(const Options& o) {
  if (!o.h_expr.empty()) return parse_graph_expr(o.h_expr).order();
  if (o.h_order > 0) return o.h_order;
  throw InvalidArgument("pass --H or --h-order");
}

int do_bound(const Options& o, std::ostream& out, std::ostream& err) {
  std::string json;
  if (o.rule == "chvatal") {
    json = bound_to_json(chvatal_tree(o.p, static_cast<int>(o.n)));
  } else if (o.rule == "burr") {
    json = bound_to_json(burr_lower(o.chi, o.surplus, h_order_of(o)));
  } else if (o.rule == "theorem1") {
    const Graph h = o.h_expr.empty() ? Graph(0) : parse_graph_expr(o.h_expr);
    const int ho = h_order_of(o);
    const EllBound ell = o.ell > 0 || h.order() > 0 ? resolve_ell(o, h, err) : EllBound{};
    if (ell.value < 1) throw InvalidArgument("pass --ell or --H");
    json = bound_to_json(k1_union_goodness(o.p, ho, o.n, ell));
  } else if (o.rule == "theorem2") {
    json = bound_to_json(multipartite_k1_lower(o.p, o.a2, o.f_order));
  } else if (o.rule == "theorem3") {
    json = bound_to_json(multipartite_k1_union(BoundQuery{o.p, o.parts, h_order_of(o), o.n}));
  } else if (o.rule == "book") {
    json = bound_to_json(book_upper(o.p, o.k, o.t));
  } else if (o.rule == "union") {
    const Graph h = o.h_expr.empty() ? Graph(0) : parse_graph_expr(o.h_expr);
    const EllBound ell = o.ell > 0 || h.order() > 0 ? resolve_ell(o, h, err) : EllBound{};
    if (ell.value < 1) throw InvalidArgument("pass --ell or --H");
    json = bound_to_json(union_ramsey_upper(o.p, ell, h_order_of(o), o.n));
  } else if (o.rule == "thresholds") {
    json = thresholds_to_json(goodness_thresholds(o.p, o.parts, h_order_of(o)));
  } else {
    throw InvalidArgument("unknown rule '" + o.rule + "'");
  }
  out << json;
  return kOk;
}

int do_partition(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = parse_graph_expr(o.graph);
  const auto maj = degree_majorization(g);
  Json j;
  j["order"] = g.order();
  j["pivots"] = maj.pivots;
  j["majorization"] = Json::parse(partition_to_json(maj.partition));
  VertexPartition current = maj.partition;
  if (current.part_count() >= 2) {
    int moves = 0;
    current = refine_min_internal(g, current, &moves);
    Json refined = Json::parse(partition_to_json(current));
    refined["moves"] = moves;
    j["refined"] = refined;
  }
  err << "majorization found " << maj.partition.part_count() << " parts\n";
  const int a2 = o.a2 > 0 ? o.a2 : 1;
  j["stability"] = Json::parse(stability_to_json(stability_report(g, current, o.epsilon, a2)));
  if (o.audit_h > 0) {
    const int p = current.part_count() + 1;
    j["audit"] = Json::parse(audit_to_json(proof_audit(g, p, o.audit_h, o.audit_n, o.audit_ell, current)));
  }
  out << j.dump(2) << "\n";
  return kOk;
}

int do_ramsey(const Options& o, std::ostream& out, std::ostream& err) {
  OracleOptions opts;
  opts.detect = detect_options(o);
  opts.jobs = o.jobs;
  if (o.mode == "labeled") {
    opts.mode = EnumerationMode::kAllLabeled;
  } else if (o.mode != "isofree") {
    throw InvalidArgument("mode must be isofree or labeled");
  }
  opts.progress = [&err](const std::string& line) { err << line << "\n"; };
  const auto s = ramsey_search(parse_pattern(o.red), parse_pattern(o.blue), o.max_order, opts);
  out << search_to_json(s);
  switch (s.status) {
    case SearchOutcome::Status::kExact:
      err << "r = " << s.value << "\n";
      return kOk;
    case SearchOutcome::Status::kLowerBound:
      err << "r >= " << s.value << " (search limit reached)\n";
      return kFailed;
    case SearchOutcome::Status::kInconclusive:
      err << "inconclusive: " << s.note << "\n";
      return kResourceLimit;
  }
  return kFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Ramsey goodness toolkit: witnesses, bounds, partitions and exact search"};
  app.require_subcommand(1);
  app.add_option("--node-budget", o.node_budget, "Detector node budget (default: RGL_NODE_BUDGET or 1e8)");

  auto* construct = app.add_subcommand("construct", "Build and verify a lower-bound witness");
  construct->add_option("--family", o.family, "burr | theorem2 | corollary5")->required();
  construct->add_option("--p", o.p, "Clique size / part count");
  construct->add_option("--h-order", o.h_order, "Order of H (burr)");
  construct->add_option("--a2", o.a2, "Second part size (theorem2)");
  construct->add_option("--f-order", o.f_order, "Order of F");
  construct->add_option("--gamma1", o.gamma1, "First join factor (corollary5), graph name, graph6 or @file");
  construct->add_option("--parts", o.parts, "Part sizes a1,...,ap (corollary5)")->delimiter(',');
  construct->add_option("--out", o.out_path, "Write the witness as graph6");
  construct->add_option("--cert", o.cert_path, "Write the certificate JSON");
  construct->add_flag("--no-verify", o.no_verify, "Skip verification");

  auto* verify = app.add_subcommand("verify", "Re-check a certificate file");
  verify->add_option("cert", o.cert_in, "Certificate JSON")->required();
  verify->add_option("--blue", o.concrete_blue, "Concrete blue pattern replacing a symbolic one");

  auto* bound = app.add_subcommand("bound", "Evaluate a closed-form bound");
  bound->add_option("--rule", o.rule, "chvatal | burr | theorem1 | theorem2 | theorem3 | book | union | thresholds")
      ->required();
  bound->add_option("--p", o.p, "Clique size / part count");
  bound->add_option("--n", o.n, "Tree order or copy count");
  bound->add_option("--chi", o.chi, "Chromatic number (burr)");
  bound->add_option("--surplus", o.surplus, "Chromatic surplus (burr)");
  bound->add_option("--H", o.h_expr, "H as a graph name, graph6 or @file");
  bound->add_option("--h-order", o.h_order, "Order of H when --H is not given");
  bound->add_option("--ell", o.ell, "Caller-supplied l");
  bound->add_flag("--ell-exact", o.ell_exact, "The supplied l is exact, not only an upper bound");
  bound->add_option("--parts", o.parts, "Part sizes a1,...,ap")->delimiter(',');
  bound->add_option("--a2", o.a2, "Second part size (theorem2)");
  bound->add_option("--f-order", o.f_order, "Order of F (theorem2)");
  bound->add_option("--k", o.k, "Book spine (book)");
  bound->add_option("--t", o.t, "Book order (book)");
  bound->add_option("--jobs", o.jobs, "Worker threads when l is searched");

  auto* partition = app.add_subcommand("partition", "Majorize, refine and report on a graph");
  partition->add_option("--graph", o.graph, "Graph name, graph6 or @file")->required();
  partition->add_option("--epsilon", o.epsilon, "Stability tolerance");
  partition->add_option("--a2", o.a2, "Internal degree ceiling is a2 - 1");
  partition->add_option("--audit-h", o.audit_h, "Audit with |H|");
  partition->add_option("--audit-n", o.audit_n, "Audit with n");
  partition->add_option("--audit-ell", o.audit_ell, "Audit with l");

  auto* ramsey = app.add_subcommand("ramsey", "Exact search for small Ramsey numbers");
  ramsey->add_option("--red", o.red, "Red pattern")->required();
  ramsey->add_option("--blue", o.blue, "Blue pattern")->required();
  ramsey->add_option("--max", o.max_order, "Largest order to check")->required();
  ramsey->add_option("--mode", o.mode, "isofree | labeled");
  ramsey->add_option("--jobs", o.jobs, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    err << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*construct) return do_construct(o, out, err);
    if (*verify) return do_verify(o, out, err);
    if (*bound) return do_bound(o, out, err);
    if (*partition) return do_partition(o, out, err);
    if (*ramsey) return do_ramsey(o, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  }
  return kUsage;
}

}  // namespace rgl::cli
