#include "ssc/cli.hpp"

#include "ssc/complex.hpp"
#include "ssc/cycles.hpp"
#include "ssc/error.hpp"
#include "ssc/face_ring.hpp"
#include "ssc/formula.hpp"
#include "ssc/graph.hpp"
#include "ssc/report.hpp"
#include "ssc/spanning.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace ssc::cli {

namespace {

using ojson = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<int> m;
  int n = 2;
  std::string input;
  std::string format = "json";
  std::uint64_t seed = 0;
  bool timings = false;

  std::string mode = "direct";
  std::string union_rule = "pairwise";
  bool audit = false;
  std::string catalog = "paper";
  bool intersections = false;
  std::string ordering;
  bool list = false;
};

// One command result, renderable as JSON, CSV or plain text.
struct Document {
  ojson json = ojson::object();
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::vector<std::string> text;
  int exit_code = kSuccess;
};

struct Target {
  Graph graph;
  std::optional<int> m;  // set in --m mode
};

ojson edge_names(const Graph& g, EdgeSet s) {
  ojson arr = ojson::array();
  for (int e : s.members()) arr.push_back(g.edge_name(e));
  return arr;
}

std::string joined_names(const Graph& g, EdgeSet s, const char* sep = " ") {
  std::string out;
  for (int e : s.members()) out += (out.empty() ? "" : sep) + g.edge_name(e);
  return out;
}

ojson decimal_array(const FVector& f) {
  ojson arr = ojson::array();
  for (const auto& v : f.f) arr.push_back(v.str());
  return arr;
}

std::string decimal_list(const FVector& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + f[i].str();
  return s;
}

void add_source(Document& doc, const Target& t) {
  if (t.m) {
    doc.json["graph"] = "J(2," + std::to_string(*t.m) + ")";
  } else {
    doc.json["graph"] = {{"vertices", t.graph.vertex_count()}, {"edges", t.graph.edge_count()}};
  }
}

Document cmd_facets(const Target& t) {
  Document doc;
  add_source(doc, t);
  const auto trees = enumerate_spanning_trees_generic(t.graph);
  doc.json["count"] = trees.size();
  ojson facets = ojson::array();
  doc.csv_header = {"index", "edges"};
  for (std::size_t i = 0; i < trees.size(); ++i) {
    facets.push_back(edge_names(t.graph, trees[i]));
    doc.csv_rows.push_back({std::to_string(i), joined_names(t.graph, trees[i])});
    doc.text.push_back("{" + joined_names(t.graph, trees[i], ", ") + "}");
  }
  doc.json["facets"] = std::move(facets);
  doc.text.push_back(std::to_string(trees.size()) + " facets");
  return doc;
}

Document cmd_classes(const Target& t, const Options& o) {
  if (!t.m) throw UsageError("classes needs --m");
  const int m = *t.m;
  Document doc;
  add_source(doc, t);
  const PartitionReport p = verify_partition(m);
  ojson sizes = ojson::object();
  doc.csv_header = {"class", "count"};
  for (std::size_t c = 0; c < kTreeClasses.size(); ++c) {
    sizes[to_string(kTreeClasses[c])] = p.class_sizes[c];
    doc.csv_rows.push_back({to_string(kTreeClasses[c]), std::to_string(p.class_sizes[c])});
    doc.text.push_back(std::string(to_string(kTreeClasses[c])) + ": " + std::to_string(p.class_sizes[c]));
  }
  doc.json["classes"] = std::move(sizes);
  doc.json["total"] = p.total();
  doc.json["generic_count"] = p.generic_count;
  doc.json["pairwise_disjoint"] = p.pairwise_disjoint;
  doc.json["union_matches_generic"] = p.union_matches_generic;
  doc.json["partition_ok"] = p.ok();
  doc.json["failures"] = p.failures;
  doc.text.push_back("total " + std::to_string(p.total()) + ", generic " + std::to_string(p.generic_count) +
                     (p.ok() ? ", partition ok" : ", PARTITION FAILED"));
  if (o.list) {
    ojson records = ojson::array();
    for (const auto& r : enumerate_spanning_trees_jahangir(m)) {
      records.push_back({{"removed", edge_names(t.graph, r.removed)}, {"class", to_string(r.tree_class)}});
    }
    doc.json["records"] = std::move(records);
  }
  return doc;
}

Document cmd_cycles(const Target& t, const Options& o) {
  Document doc;
  add_source(doc, t);
  const bool paper = o.catalog == "paper";
  if (paper && !t.m) throw UsageError("--catalog paper needs --m");
  const CycleCatalog cat = paper ? paper_cycle_catalog(*t.m) : oracle_cycle_catalog(t.graph);
  doc.json["catalog"] = o.catalog;
  doc.json["count"] = cat.size();
  ojson entries = ojson::array();
  doc.csv_header = {"name", "beta", "simple_cycle", "edges"};
  for (const auto& e : cat.entries) {
    entries.push_back(
        {{"name", e.name}, {"beta", e.beta}, {"simple_cycle", e.is_simple_cycle}, {"edges", edge_names(t.graph, e.edges)}});
    doc.csv_rows.push_back({e.name, std::to_string(e.beta), e.is_simple_cycle ? "true" : "false",
                            joined_names(t.graph, e.edges)});
    doc.text.push_back(e.name + " (beta " + std::to_string(e.beta) + (e.is_simple_cycle ? "" : ", not a simple cycle") +
                       "): " + joined_names(t.graph, e.edges, ", "));
  }
  doc.json["entries"] = std::move(entries);
  if (o.intersections) {
    if (!paper) throw UsageError("--intersections needs --catalog paper");
    const IntersectionReport ir = intersection_sweep(*t.m);
    ojson div = ojson::array();
    for (const auto& d : ir.divergences) {
      div.push_back({{"u", d.u.str(*t.m)},
                     {"v", d.v.str(*t.m)},
                     {"relation", to_string(d.relation)},
                     {"predicted", d.predicted},
                     {"direct", d.direct}});
    }
    doc.json["intersections"] = {{"checked", ir.checked}, {"matched", ir.matched}, {"divergences", std::move(div)}};
    doc.text.push_back("intersections: " + std::to_string(ir.matched) + " of " + std::to_string(ir.checked) +
                       " pairs match");
  }
  return doc;
}

FVector f_vector_for(const Target& t, const std::string& mode, Options const& o, Document* doc) {
  if (mode == "direct") return f_vector_direct(t.graph);
  if (mode == "exact-ie") return f_vector_exact_ie(t.graph);
  if (mode != "paper") throw UsageError("unknown --mode " + mode);
  if (!t.m) throw UsageError("--mode paper needs --m");
  const ClosedFormFVector p = f_vector_paper(*t.m, o.union_rule == "exact" ? UnionRule::Exact : UnionRule::Pairwise);
  if (doc) {
    doc->json["union_rule"] = to_string(p.rule);
    if (o.audit) {
      ojson groups = ojson::array();
      for (const auto& g : p.groups)
        groups.push_back({{"subset_size", g.subset_size}, {"union_size", g.union_size}, {"count", g.count}});
      ojson terms = ojson::array();
      for (const auto& term : p.terms) {
        ojson names = ojson::array();
        for (int k : term.members) names.push_back(p.catalog.entries[k].name);
        terms.push_back({{"members", std::move(names)}, {"union_size", term.union_size}, {"sign", term.sign}});
      }
      doc->json["audit"] = {{"groups", std::move(groups)}, {"terms", std::move(terms)}};
    }
  }
  return p.f;
}

Document cmd_f_vector(const Target& t, const Options& o) {
  Document doc;
  add_source(doc, t);
  doc.json["mode"] = o.mode;
  const FVector f = f_vector_for(t, o.mode, o, &doc);
  doc.json["f_vector"] = decimal_array(f);
  doc.csv_header = {"i", "f_i"};
  for (std::size_t i = 0; i < f.size(); ++i) doc.csv_rows.push_back({std::to_string(i), f[i].str()});
  doc.text.push_back("f = (" + decimal_list(f) + ")");
  if (o.mode == "paper") {
    // Side-by-side record against the acyclic-subset oracle.
    const FVector oracle = f_vector_direct(t.graph);
    doc.json["oracle"] = decimal_array(oracle);
    ojson mismatches = ojson::array();
    for (std::size_t i = 0; i < std::max(f.size(), oracle.size()); ++i) {
      std::string a = i < f.size() ? f[i].str() : "absent", b = i < oracle.size() ? oracle[i].str() : "absent";
      if (a != b) {
        mismatches.push_back({{"index", i}, {"formula", a}, {"oracle", b}});
        doc.text.push_back("mismatch at f_" + std::to_string(i) + ": formula " + a + ", oracle " + b);
      }
    }
    doc.json["mismatch"] = !mismatches.empty();
    doc.json["mismatches"] = std::move(mismatches);
    doc.csv_header.push_back("oracle");
    for (std::size_t i = 0; i < doc.csv_rows.size(); ++i)
      doc.csv_rows[i].push_back(i < oracle.size() ? oracle[i].str() : "");
  }
  return doc;
}

Document cmd_hilbert(const Target& t, const Options& o) {
  Document doc;
  add_source(doc, t);
  doc.json["mode"] = o.mode;
  const FVector f = f_vector_for(t, o.mode, o, nullptr);
  const HilbertSeries h = hilbert_series(f);
  doc.json["f_vector"] = decimal_array(f);
  ojson num = ojson::array();
  std::string poly;
  doc.csv_header = {"power", "coefficient"};
  for (std::size_t k = 0; k < h.numerator.size(); ++k) {
    num.push_back(h.numerator[k].str());
    doc.csv_rows.push_back({std::to_string(k), h.numerator[k].str()});
    if (h.numerator[k] == 0) continue;
    std::string c = h.numerator[k].str();
    if (!poly.empty()) poly += c[0] == '-' ? " - " : " + ";
    if (c[0] == '-' && !poly.empty()) c = c.substr(1);
    poly += k == 0 ? c : c + (k == 1 ? " t" : " t^" + std::to_string(k));
  }
  doc.json["hilbert_series"] = {{"numerator", std::move(num)}, {"denominator_power", h.denominator_power}};
  doc.json["numerator_at_one"] = h.numerator_at_one().str();
  doc.text.push_back("H(t) = (" + poly + ") / (1 - t)^" + std::to_string(h.denominator_power));
  return doc;
}

Document cmd_cm(const Target& t, const Options& o) {
  std::string ordering = o.ordering.empty() ? (t.m ? "paper" : "search") : o.ordering;
  if (ordering == "paper" && !t.m) throw UsageError("--ordering paper needs --m");
  const CmVerdict v = cohen_macaulay_verdict(
      t.graph, ordering == "paper" ? OrderingStrategy::Paper : OrderingStrategy::Search, o.seed);
  Document doc;
  add_source(doc, t);
  if (v.verdict == Verdict::Unknown) {
    doc.json["cohen_macaulay"] = nullptr;
  } else {
    doc.json["cohen_macaulay"] = v.verdict == Verdict::True;
  }
  doc.json["verdict"] = to_string(v.verdict);
  doc.json["ordering"] = ordering;
  doc.json["method"] = v.method;
  doc.json["generators"] = v.facets.size();
  if (!v.note.empty()) doc.json["note"] = v.note;
  doc.csv_header = {"position", "generator"};
  if (v.certificate) {
    std::vector<EdgeSet> ordered;
    ojson cert = ojson::array();
    for (std::size_t pos = 0; pos < v.certificate->size(); ++pos) {
      const EdgeSet f = v.facets[(*v.certificate)[pos]];
      ordered.push_back(f);
      cert.push_back(edge_names(t.graph, f));
      doc.csv_rows.push_back({std::to_string(pos), joined_names(t.graph, f)});
    }
    doc.json["is_shelling"] = is_shelling(ordered);
    doc.json["certificate"] = std::move(cert);
  }
  doc.text.push_back(std::string("Cohen-Macaulay: ") + to_string(v.verdict) +
                     (v.method.empty() ? "" : " (certified by " + v.method + " ordering)"));
  if (!v.note.empty()) doc.text.push_back("note: " + v.note);
  return doc;
}

Document cmd_verify(const Target& t, const Options& o) {
  const RunReport r = t.m ? verify_jahangir(*t.m) : verify_graph(t.graph);
  Document doc;
  ojson command = {{"subcommand", "verify"}};
  if (t.m) {
    command["m"] = *t.m;
  } else {
    command["input"] = o.input;
  }
  doc.json["command"] = std::move(command);
  ojson claims = ojson::array();
  doc.csv_header = {"id", "verdict", "claimed", "claimed_source", "oracle", "oracle_source"};
  for (const auto& c : r.claims) {
    claims.push_back({{"id", c.id},
                      {"description", c.description},
                      {"claimed", c.claimed},
                      {"claimed_source", c.claimed_source},
                      {"oracle", c.oracle},
                      {"oracle_source", c.oracle_source},
                      {"verdict", to_string(c.verdict)}});
    doc.csv_rows.push_back({c.id, to_string(c.verdict), c.claimed, c.claimed_source, c.oracle, c.oracle_source});
    std::string line = std::string("[") + to_string(c.verdict) + "] " + c.id + ": " + c.description;
    if (c.verdict == ClaimVerdict::Mismatch) {
      line += " -- " + c.claimed_source + " says " + c.claimed + ", " + c.oracle_source + " says " + c.oracle;
    }
    doc.text.push_back(line);
  }
  doc.json["claims"] = std::move(claims);
  doc.json["summary"] = {{"match", r.count(ClaimVerdict::Match)},
                         {"mismatch", r.count(ClaimVerdict::Mismatch)},
                         {"unchecked", r.count(ClaimVerdict::Unchecked)}};
  if (o.timings) {
    ojson timings = ojson::object();
    for (const auto& [group, ms] : r.timings_ms) timings[group] = ms;
    doc.json["timings_ms"] = std::move(timings);
  }
  doc.exit_code = r.has_mismatch() ? kVerificationMismatch : kSuccess;
  return doc;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void render(const Document& doc, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << doc.json.dump(2) << "\n";
  } else if (format == "csv") {
    auto row = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i]);
      out << "\n";
    };
    row(doc.csv_header);
    for (const auto& r : doc.csv_rows) row(r);
  } else {
    for (const auto& line : doc.text) out << line << "\n";
  }
}

Target load_target(const Options& o) {
  if (o.n != 2) throw UsageError("only n = 2 is supported");
  if (o.m.has_value() == !o.input.empty()) throw UsageError("give exactly one of --m or --input");
  if (o.m) return {build_jahangir(*o.m), o.m};
  std::ifstream in(o.input);
  if (!in) throw UsageError("cannot read " + o.input);
  std::stringstream buf;
  buf << in.rdbuf();
  return {parse_graph(buf.str()), std::nullopt};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spanning simplicial complexes of Jahangir graphs J(2,m) and of arbitrary graphs", "jahangir"};
  Options o;
  app.add_option("--m", o.m, "Jahangir parameter m (>= 3)");
  app.add_option("--n", o.n, "Jahangir parameter n (only 2 is supported)");
  app.add_option("--input", o.input, "Graph JSON file instead of --m");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", o.seed, "Seed for ordering-search tie breaks");
  app.add_flag("--timings", o.timings, "Include wall-clock timings in verify output");
  app.require_subcommand(1);

  auto* facets = app.add_subcommand("facets", "Facets of the spanning simplicial complex");
  auto* classes = app.add_subcommand("classes", "Cutting-down classes of spanning trees of J(2,m)");
  classes->add_flag("--list", o.list, "List every record with its removed edges");
  auto* cycles = app.add_subcommand("cycles", "Cycle catalog");
  cycles->add_option("--catalog", o.catalog, "Word catalog or enumerated cycles")
      ->check(CLI::IsMember({"paper", "oracle"}));
  cycles->add_flag("--intersections", o.intersections, "Check predicted intersection sizes of all word pairs");
  auto* fvec = app.add_subcommand("f-vector", "f-vector of the spanning simplicial complex");
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of the face ring");
  for (auto* sub : {fvec, hilbert}) {
    sub->add_option("--mode", o.mode, "f-vector engine")->check(CLI::IsMember({"direct", "paper", "exact-ie"}));
    sub->add_option("--union", o.union_rule, "Union size rule for --mode paper")
        ->check(CLI::IsMember({"pairwise", "exact"}));
  }
  fvec->add_flag("--audit", o.audit, "Include the per-term audit trail of --mode paper");
  auto* cm = app.add_subcommand("cm", "Cohen-Macaulay verdict via quasi-linear quotients");
  cm->add_option("--ordering", o.ordering, "Generator ordering")->check(CLI::IsMember({"paper", "search"}));
  auto* verify = app.add_subcommand("verify", "Cross-check every claim against its oracle");
  auto* emit = app.add_subcommand("graph", "Emit the graph as a JSON edge list");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    const Target t = load_target(o);
    Document doc;
    if (facets->parsed()) doc = cmd_facets(t);
    else if (classes->parsed()) doc = cmd_classes(t, o);
    else if (cycles->parsed()) doc = cmd_cycles(t, o);
    else if (fvec->parsed()) doc = cmd_f_vector(t, o);
    else if (hilbert->parsed()) doc = cmd_hilbert(t, o);
    else if (cm->parsed()) doc = cmd_cm(t, o);
    else if (verify->parsed()) doc = cmd_verify(t, o);
    else if (emit->parsed()) {
      out << emit_graph(t.graph);
      return kSuccess;
    }
    render(doc, o.format, out);
    return doc.exit_code;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kCapacityError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "invalid parameter: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace ssc::cli
