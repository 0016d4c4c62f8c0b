#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ordram/antichain.hpp"
#include "ordram/canonize.hpp"
#include "ordram/clause_graph.hpp"
#include "ordram/colouring.hpp"
#include "ordram/fsets.hpp"
#include "ordram/ordinal.hpp"
#include "ordram/schema.hpp"
#include "ordram/structure.hpp"
#include "report.hpp"

namespace {

using namespace ordram;
using cli::Report;
using json = nlohmann::ordered_json;

struct Globals {
  bool json = false;
  bool timing = false;
};

std::string layer_text(LayerId id) {
  return "(" + std::to_string(id.component) + "," + std::to_string(id.rank) + ")";
}

ClauseGraph load_graph(const std::string& path) { return path.empty() ? standard_graph() : read_graph_file(path); }

void add_tables(Report& rep, const DescTable& desc, const DomTable& dom) {
  for (const auto& [k, v] : desc) {
    auto [i, j, l] = k;
    std::ostringstream s;
    s << "desc " << i << " " << j << " " << l << " " << v;
    rep.item("desc", s.str(), json::array({i, j, l, v}));
  }
  for (const auto& [k, v] : dom) {
    auto [i1, j1, i2, l] = k;
    std::ostringstream s;
    s << "dom " << i1 << " " << j1 << " " << i2 << " " << l << " " << v;
    rep.item("dom", s.str(), json::array({i1, j1, i2, l, v}));
  }
}

// ---- ord ----

int ord_normalize(Report& rep, const std::string& a) {
  rep.result(format(parse(a)));
  return 0;
}

int ord_cmp(Report& rep, const std::string& a, const std::string& b) {
  Cmp c = compare(parse(a), parse(b));
  rep.result(c == Cmp::LT ? "LT" : c == Cmp::EQ ? "EQ" : "GT");
  return 0;
}

int ord_cb(Report& rep, const std::string& a) {
  Ordinal x = parse(a);
  Nat r = cb_rank(x), n = n_of(x);
  rep.result("rank=" + std::to_string(r) + " n=" + std::to_string(n));
  rep.json()["rank"] = r;
  rep.json()["n"] = n;
  return 0;
}

int ord_tree_leq(Report& rep, const std::string& a, const std::string& b) {
  bool v = tree_leq(parse(a), parse(b));
  rep.result(v ? "true" : "false");
  return v ? 0 : 1;
}

int ord_cover(Report& rep, const std::string& a) {
  rep.result(format(cover(parse(a))));
  return 0;
}

int ord_layers(Report& rep, const std::string& d, Nat c) {
  Window w{parse(d), c};
  rep.set("delta", format(w.delta));
  rep.set("window", c);
  rep.set("vertices", window_size(w));
  for (Nat i = 1; i <= k_delta(w.delta); ++i)
    for (Nat j = 0; j <= component_top_rank(w.delta, i); ++j) {
      auto members = layer_members(w.delta, {i, j}, w);
      std::string text = "layer " + layer_text({i, j}) + " size=" + std::to_string(members.size()) + ":";
      json arr = json::array();
      for (const auto& m : members) {
        text += " " + format(m);
        arr.push_back(format(m));
      }
      rep.item("layers", text, json{{"component", i}, {"rank", j}, {"members", arr}});
    }
  return 0;
}

// ---- graph ----

int graph_edge(Report& rep, const std::string& path, const std::string& a, const std::string& b) {
  ClauseGraph g = load_graph(path);
  Ordinal x = parse(a), y = parse(b);
  bool v = edge(g, x, y);
  rep.result(v ? "true" : "false");
  std::string rules;
  for (const auto& r : justify(g, x, y)) rules += (rules.empty() ? "" : ",") + r;
  if (v) rep.set("rules", rules);
  return v ? 0 : 1;
}

int graph_scan(Report& rep, const std::string& path, Nat c, Nat show) {
  ClauseGraph g = load_graph(path);
  Window w{g.delta, c};
  auto tris = triangle_scan(g, w);
  rep.set("delta", format(g.delta));
  rep.set("window", c);
  rep.set("vertices", window_size(w));
  rep.set("triangles", tris.size());
  for (std::size_t i = 0; i < tris.size() && i < show; ++i) {
    const auto& t = tris[i];
    rep.item("triangle_list", "triangle " + format(t[0]) + " " + format(t[1]) + " " + format(t[2]),
             json::array({format(t[0]), format(t[1]), format(t[2])}));
  }
  return tris.empty() ? 0 : 1;
}

int graph_tables(Report& rep, const std::string& path, Nat c, Nat r_max) {
  ClauseGraph g = load_graph(path);
  CanonicalReport cr = extract_tables(g, Window{g.delta, c}, r_max);
  rep.set("window", c);
  rep.set("r_max", r_max);
  rep.set("points", cr.points);
  rep.set("largest_box", cr.largest_box);
  rep.set("normal", cr.normal);
  rep.set("uniformly_good", cr.uniformly_good);
  rep.set("ok", cr.ok);
  if (cr.normal_violation) {
    const auto& v = *cr.normal_violation;
    rep.set("normal_violation", "{" + format(v.first.first) + "," + format(v.first.second) + "} vs {" +
                                    format(v.second.first) + "," + format(v.second.second) + "}");
  }
  for (const auto& f : cr.failures)
    rep.item("failures", "failure alpha=" + format(f.alpha) + " i2=" + std::to_string(f.i2) + " l=" +
                             std::to_string(f.l) + " " + f.reason,
             json{{"alpha", format(f.alpha)}, {"i2", f.i2}, {"l", f.l}, {"reason", f.reason}});
  add_tables(rep, cr.desc, cr.dom);
  return cr.ok ? 0 : 1;
}

int graph_scarcity(Report& rep, const std::string& path, Nat c, Nat r_max) {
  ClauseGraph g = load_graph(path);
  CanonicalReport cr = extract_tables(g, Window{g.delta, c}, r_max);
  auto v = scarcity_check(cr.desc, cr.dom);
  rep.set("window", c);
  rep.set("r_max", r_max);
  rep.set("canonical", cr.ok);
  rep.set("violations", v.size());
  for (const auto& x : v)
    rep.item("violation_list", "violation item=" + std::to_string(x.item) + " " + x.detail,
             json{{"item", x.item}, {"detail", x.detail}});
  return v.empty() && cr.ok ? 0 : 1;
}

// ---- verify ----

int verify_claim2(Report& rep, const std::string& path, const std::string& theta, Nat bound) {
  ClauseGraph g = load_graph(path);
  Ordinal t = parse(theta);
  rep.set("theta", format(t));
  rep.set("bound", bound ? bound : default_bound(g));
  auto emit = [&](const ObstructionReport& r) {
    rep.item("templates_list", r.line(),
             json{{"tau", r.tmpl.tau},
                  {"jA", r.tmpl.j_a},
                  {"iB", r.tmpl.i_b},
                  {"lB", r.tmpl.l_b},
                  {"kind", kind_name(r.kind)},
                  {"exact", r.exact},
                  {"certificate", r.certificate}});
  };
  try {
    auto reports = claim2_suite(g, t, bound);
    for (const auto& r : reports) emit(r);
    rep.set("templates", reports.size());
    rep.set("resolved", reports.size());
    rep.set("unresolved", 0);
    return 0;
  } catch (const TemplateUnresolved& e) {
    for (const auto& r : e.reports()) emit(r);
    const Template& f = e.failed();
    rep.set("resolved", e.reports().size());
    rep.set("unresolved", 1);
    rep.set("failed_template", "tau=" + f.tau + " jA=" + std::to_string(f.j_a) + " iB=" + std::to_string(f.i_b) +
                                   " lB=" + std::to_string(f.l_b));
    return 1;
  }
}

int verify_canonize(Report& rep, Nat k, Nat width, Nat target, std::uint64_t seed, Nat colours, Nat r) {
  TruncatedTree tree(k, width);
  TableColouring c = random_tree_colouring(tree, colours, seed);
  rep.set("k", k);
  rep.set("width", width);
  rep.set("target", target);
  rep.set("r", r);
  rep.set("seed", seed);
  rep.set("colours", colours);
  rep.set("nodes", tree.size());
  try {
    CanonizeResult res = canonize_truncated(tree, c, target, r);
    SkeletonCheck chk = verify_skeleton(tree, c, res.skeleton, r);
    rep.set("tables_tried", res.tables_tried);
    rep.set("kept", res.skeleton.kept.size());
    rep.set("keep_width", res.skeleton.keep_width);
    for (std::size_t i = 0; i < res.skeleton.kept.size(); ++i) {
      const auto& a = res.skeleton.kept[i];
      const auto& b = res.skeleton.relabeled[i];
      rep.item("skeleton", "node " + format(a) + " -> " + format(b), json::array({format(a), format(b)}));
    }
    add_tables(rep, res.skeleton.desc, {});
    rep.set("normal", chk.ok);
    if (!chk.ok) rep.set("message", chk.message);
    return chk.ok ? 0 : 1;
  } catch (const WidthExhausted& e) {
    rep.set("width_exhausted", true);
    rep.set("tables_tried", e.tables_tried());
    rep.set("best_root_children", e.best_root_children());
    rep.set("message", std::string(e.what()));
    return 1;
  }
}

int verify_antichain(Report& rep, const std::string& input, Nat count) {
  FinSetFamily fam = read_family_file(input);
  rep.set("sets", fam.size());
  rep.set("count", count);
  try {
    auto d = distinguish(fam, count);
    for (const auto& x : d)
      rep.item("points", std::to_string(x.index) + " " + std::to_string(x.point), json::array({x.index, x.point}));
    rep.set("verified", verify_distinguished(fam, d));
    return 0;
  } catch (const NotAntichain& e) {
    rep.set("antichain", false);
    rep.set("comparable_pair", std::to_string(e.pair().first) + "," + std::to_string(e.pair().second));
    return 1;
  } catch (const StreamExhausted& e) {
    rep.set("exhausted", true);
    rep.set("achieved", e.achieved());
    return 1;
  }
}

int verify_staircase(Report& rep, Nat k, Nat width, const std::string& theta_text,
                     const std::vector<std::string>& preds, Nat r_max) {
  if (k == 0) throw OutOfRange("staircase needs k >= 1");
  Ordinal theta = theta_text.empty() ? Ordinal::omega_pow(k + 1) : parse(theta_text);
  std::vector<Nat> levels;
  std::vector<SubsetSpec> sets;
  for (Nat l = 0; l < k; ++l) {
    levels.push_back(l);
    std::string p = l < preds.size() ? preds[l] : "";
    sets.emplace_back(PredicateSet{Predicate::parse(p)});
  }
  StaircaseOptions opts;
  opts.r_max = r_max;
  auto xs = staircase(theta, levels, sets, width, opts);
  auto canon = canonical_truncation(k, width);
  bool iso = xs.size() == canon.size() && tree_isomorphic(xs, canon);
  bool inside = true;
  for (const auto& x : xs) {
    Nat l = cb_rank(x);
    if (l >= k || !subset_contains(sets[l], x)) inside = false;
  }
  rep.set("theta", format(theta));
  rep.text("# shape k=" + std::to_string(k) + " w=" + std::to_string(width));
  for (const auto& x : xs) rep.item("points", format(x), format(x));
  rep.set("size", xs.size());
  rep.set("isomorphic", iso);
  rep.set("in_sets", inside);
  return iso && inside ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordram: ordinals below w^w, the triangle-free graph on w^3*2 and its verifiers"};
  app.require_subcommand(1);
  Globals gl;
  app.add_flag("--json", gl.json, "print a JSON report");
  app.add_flag("--time", gl.timing, "append elapsed time");
  std::string command;
  std::function<int(Report&)> action;

  auto bind = [&](CLI::App* sub, std::string name, std::function<int(Report&)> f) {
    sub->callback([&, name, f] {
      command = name;
      action = f;
    });
  };

  // ord
  auto* ord = app.add_subcommand("ord", "ordinal arithmetic and structure");
  ord->require_subcommand(1);
  static std::string a, b, graph_path, theta, input;
  static Nat window = 4, r_max = 3, bound = 0, k = 2, width = 64, target = 3, colours = 2, r = 0, count = 4,
             show = 20;
  static std::uint64_t seed = 1;
  static std::vector<std::string> preds;

  auto* s = ord->add_subcommand("normalize", "print the canonical form");
  s->add_option("expr", a)->required();
  bind(s, "ord normalize", [](Report& rep) { return ord_normalize(rep, a); });

  s = ord->add_subcommand("cmp", "compare two ordinals");
  s->add_option("a", a)->required();
  s->add_option("b", b)->required();
  bind(s, "ord cmp", [](Report& rep) { return ord_cmp(rep, a, b); });

  s = ord->add_subcommand("cb", "Cantor-Bendixson rank and last coefficient");
  s->add_option("expr", a)->required();
  bind(s, "ord cb", [](Report& rep) { return ord_cb(rep, a); });

  s = ord->add_subcommand("tree-leq", "anti-tree order");
  s->add_option("beta", a)->required();
  s->add_option("alpha", b)->required();
  bind(s, "ord tree-leq", [](Report& rep) { return ord_tree_leq(rep, a, b); });

  s = ord->add_subcommand("cover", "immediate successor in the anti-tree order");
  s->add_option("expr", a)->required();
  bind(s, "ord cover", [](Report& rep) { return ord_cover(rep, a); });

  s = ord->add_subcommand("layers", "window members by layer");
  a = "w^3*2";
  s->add_option("--delta", a, "ambient ordinal")->capture_default_str();
  s->add_option("--window", window, "coefficient bound")->capture_default_str();
  bind(s, "ord layers", [](Report& rep) { return ord_layers(rep, a, window); });

  // graph
  auto* graph = app.add_subcommand("graph", "the clause graph");
  graph->require_subcommand(1);
  graph->add_option("--graph", graph_path, "clause file (default: bundled standard graph)");

  s = graph->add_subcommand("edge", "edge predicate");
  s->add_option("a", a)->required();
  s->add_option("b", b)->required();
  s->add_option("--graph", graph_path, "clause file");
  bind(s, "graph edge", [](Report& rep) { return graph_edge(rep, graph_path, a, b); });

  s = graph->add_subcommand("scan-triangles", "exhaustive triangle scan of a window");
  s->add_option("--window", window)->capture_default_str();
  s->add_option("--show", show, "triangles to list")->capture_default_str();
  s->add_option("--graph", graph_path, "clause file");
  bind(s, "graph scan-triangles", [](Report& rep) { return graph_scan(rep, graph_path, window, show); });

  s = graph->add_subcommand("tables", "extract desc and dom tables");
  s->add_option("--window", window)->capture_default_str();
  s->add_option("--rmax", r_max)->capture_default_str();
  s->add_option("--graph", graph_path, "clause file");
  bind(s, "graph tables", [](Report& rep) { return graph_tables(rep, graph_path, window, r_max); });

  s = graph->add_subcommand("scarcity", "scarcity predicates on the extracted tables");
  s->add_option("--window", window)->capture_default_str();
  s->add_option("--rmax", r_max)->capture_default_str();
  s->add_option("--graph", graph_path, "clause file");
  bind(s, "graph scarcity", [](Report& rep) { return graph_scarcity(rep, graph_path, window, r_max); });

  // verify
  auto* verify = app.add_subcommand("verify", "verification reports");
  verify->require_subcommand(1);

  s = verify->add_subcommand("claim2", "obstruction suite for independent closed copies");
  s->add_option("--theta", theta)->required();
  s->add_option("--bound", bound, "box bound (0: default)")->capture_default_str();
  s->add_option("--graph", graph_path, "clause file");
  bind(s, "verify claim2", [](Report& rep) { return verify_claim2(rep, graph_path, theta, bound); });

  s = verify->add_subcommand("canonize", "canonize a random colouring of a truncated tree");
  s->add_option("--k", k)->capture_default_str();
  s->add_option("--width", width)->capture_default_str();
  s->add_option("--target", target)->capture_default_str();
  s->add_option("--seed", seed)->capture_default_str();
  s->add_option("--colours", colours)->capture_default_str();
  s->add_option("--r", r, "kept prefix of every fan")->capture_default_str();
  bind(s, "verify canonize",
       [](Report& rep) { return verify_canonize(rep, k, width, target, seed, colours, r); });

  s = verify->add_subcommand("antichain", "distinguishing points of an antichain");
  s->add_option("--input", input)->required()->check(CLI::ExistingFile);
  s->add_option("--count", count)->capture_default_str();
  bind(s, "verify antichain", [](Report& rep) { return verify_antichain(rep, input, count); });

  s = verify->add_subcommand("staircase", "truncated closed copy of w^k");
  s->add_option("--k", k)->capture_default_str();
  s->add_option("--width", width)->capture_default_str();
  s->add_option("--theta", theta, "ambient root (default w^(k+1))");
  s->add_option("--set", preds, "predicate for level 0, 1, ... (default: full level)");
  s->add_option("--rmax", r_max)->capture_default_str();
  bind(s, "verify staircase", [](Report& rep) { return verify_staircase(rep, k, width, theta, preds, r_max); });

  // staircase has its own defaults
  s->preparse_callback([](std::size_t) {
    k = 2;
    width = 2;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Report rep(command);
  auto t0 = std::chrono::steady_clock::now();
  int code = 2;
  try {
    code = action(rep);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (gl.timing)
    rep.set("elapsed_ms",
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  rep.print(gl.json);
  return code;
}
