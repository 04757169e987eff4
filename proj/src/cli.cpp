#include "predom/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "predom/completion.hpp"
#include "predom/cstar_model.hpp"
#include "predom/cuntz.hpp"
#include "predom/dual_cone.hpp"
#include "predom/error.hpp"
#include "predom/funcspace.hpp"
#include "predom/structure_file.hpp"

namespace predom {

namespace {

  /// A kind the command cannot handle.
  class KindMismatch : public Error {
   public:
    using Error::Error;
  };

  void require_kind(StructureFile const& s, std::initializer_list<StructureKind> ok,
                    std::string const& command) {
    for (auto k : ok) {
      if (s.kind == k) {
        return;
      }
    }
    throw KindMismatch("'" + command + "' does not accept " + std::string(kind_name(s.kind))
                       + " files");
  }

  std::string yes_no(bool b) { return b ? "yes" : "no"; }

  std::string tuple(Carrier const& c, std::initializer_list<std::size_t> xs) {
    std::string out = "(";
    bool        first = true;
    for (auto x : xs) {
      out += (first ? "" : ",") + c.name(x);
      first = false;
    }
    return out + ")";
  }

  std::string set_label(Carrier const& c, Subset const& s) {
    std::string out = "{";
    bool        first = true;
    for (auto x : s.elements()) {
      out += (first ? "" : ",") + c.name(x);
      first = false;
    }
    return out + "}";
  }

  std::vector<std::string> split_commas(std::string const& text) {
    std::vector<std::string> out;
    std::stringstream        ss(text);
    std::string              item;
    while (std::getline(ss, item, ',')) {
      auto b = item.find_first_not_of(' ');
      auto e = item.find_last_not_of(' ');
      out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
    }
    return out;
  }

  FnValues parse_fn(std::string const& text, std::size_t n) {
    FnValues out;
    for (auto const& item : split_commas(text)) {
      out.push_back(parse_ext(item));
    }
    if (out.size() != n) {
      throw PreconditionError("expected " + std::to_string(n) + " values, got "
                              + std::to_string(out.size()));
    }
    return out;
  }

  std::string format_fn(FnValues const& f) {
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
      out += (i ? "," : "") + format_ext(f[i]);
    }
    return out;
  }

  std::string format_element(PositiveElement const& a) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
      out += (i ? "," : "") + format_rational(a[i]);
    }
    return out;
  }

  PositiveElement model_element(StructureFile const& s, std::string const& text) {
    for (auto const& f : s.fns) {
      if (f.name == text) {
        return s.fn(text);
      }
    }
    std::vector<Rational> values;
    for (auto const& item : split_commas(text)) {
      values.push_back(parse_rational(item));
    }
    return PositiveElement(s.model(), std::move(values));
  }

  std::vector<Rational> parse_grid(std::string const& text) {
    std::vector<Rational> out;
    for (auto const& item : split_commas(text)) {
      out.push_back(parse_rational(item));
    }
    if (out.empty()) {
      throw PreconditionError("grid is empty");
    }
    return out;
  }

  // Edges of r between distinct elements, minus those implied through a third.
  std::vector<std::pair<std::size_t, std::size_t>> reduced_edges(Relation const& r) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto [x, y] : r.pairs()) {
      if (x == y) {
        continue;
      }
      bool implied = false;
      for (auto z : (r.image(x) & r.preimage(y)).elements()) {
        implied = implied || (z != x && z != y);
      }
      if (!implied) {
        out.emplace_back(x, y);
      }
    }
    return out;
  }

  // ------------------------------------------------------------------------

  int cmd_check(StructureFile const& s, std::string const& grid_text, std::ostream& out) {
    auto const& c = s.elements;
    out << "kind: " << kind_name(s.kind) << "\n";
    out << "elements: " << c.size() << "\n";
    if (s.kind == StructureKind::Model) {
      auto const grid = parse_grid(grid_text);
      std::size_t total = 1;
      for (std::size_t x = 0; x < c.size(); ++x) {
        total *= grid.size();
        if (total > 64) {
          throw BoundExceeded("model check is limited to 64 grid functions");
        }
      }
      auto rep = validate_model_precuntz(s.model(), grid);
      out << "grid functions: " << rep.elements_checked << "\n";
      out << "transitive: " << yes_no(rep.transitive) << "\n";
      out << "zero below all: " << yes_no(rep.has_zero_below) << "\n";
      out << "interpolation: " << yes_no(rep.interpolates) << "\n";
      out << "additive: " << yes_no(rep.additive) << "\n";
      out << "addition continuous: " << yes_no(rep.addition_continuous) << "\n";
      out << "first countable: " << yes_no(rep.first_countable) << "\n";
      out << "one-sided additive: " << yes_no(rep.one_sided_additive);
      if (!rep.one_sided_additive) {
        out << ", witness";
        for (auto const& w : rep.one_sided_witness) {
          out << " (" << format_element(w) << ")";
        }
      }
      out << "\n";
      if (!rep.valid()) {
        out << "failed: " << rep.failed << ", witness";
        for (auto const& w : rep.witness) {
          out << " (" << format_element(w) << ")";
        }
        out << "\n";
      }
      out << "valid: " << yes_no(rep.valid()) << "\n";
      return rep.valid() ? kExitOk : kExitFailed;
    }

    auto const ax = validate_predomain(s.rel);
    out << "transitive: " << yes_no(ax.trans);
    if (ax.trans_witness) {
      auto [a, b, d] = *ax.trans_witness;
      out << ", witness " << tuple(c, {a, b, d});
    }
    out << "\nip0: " << yes_no(ax.ip0);
    if (ax.ip0_witness) {
      out << ", witness " << tuple(c, {*ax.ip0_witness});
    }
    out << "\nip2: " << yes_no(ax.ip2);
    if (ax.ip2_witness) {
      auto [a, b, d] = *ax.ip2_witness;
      out << ", witness " << tuple(c, {a, b, d});
    }
    out << "\nip: " << yes_no(ax.ip_full);
    if (ax.ip_full_witness) {
      out << ", witness " << set_label(c, ax.ip_full_witness->first) << " below "
          << c.name(ax.ip_full_witness->second);
    }
    out << "\npredomain: " << yes_no(ax.valid()) << "\n";
    if (!ax.valid()) {
      return kExitFailed;
    }

    auto const p    = s.predomain();
    auto const gaps = stratification_gaps(p);
    out << "stratified: " << yes_no(gaps.empty());
    if (!gaps.empty()) {
      out << ", gaps " << gaps.size();
    }
    out << "\n";
    // Each gap (a, b) comes with some a <= m << b; an m strictly above a is
    // shown when there is one.
    auto const leq = natural_preorder(p);
    for (auto [a, b] : gaps) {
      auto const ms = (leq.image(a) & p.rel().preimage(b)).elements();
      auto       m  = ms.front();
      for (auto x : ms) {
        if (!leq.holds(x, a)) {
          m = x;
          break;
        }
      }
      out << "  witness " << tuple(c, {a, b}) << " via " << c.name(m) << "\n";
    }

    if (s.kind == StructureKind::PreCuntz) {
      auto const rep = validate_precuntz(s.monoid(), s.rel);
      out << "commutative: " << yes_no(rep.commutative) << "\n";
      out << "associative: " << yes_no(rep.associative) << "\n";
      out << "identity: " << yes_no(rep.has_identity) << "\n";
      if (rep.law_witness) {
        auto [a, b, d] = *rep.law_witness;
        out << "monoid law witness: " << tuple(c, {a, b, d}) << "\n";
      }
      out << "zero below all: " << yes_no(rep.zero_below_all);
      if (rep.zero_witness) {
        out << ", witness " << tuple(c, {*rep.zero_witness});
      }
      out << "\nadditive: " << yes_no(rep.additive);
      if (rep.additive_witness) {
        auto [a, a2, b, b2] = *rep.additive_witness;
        out << ", witness " << tuple(c, {a, a2, b, b2});
      }
      out << "\naddition continuous: " << yes_no(rep.addition_continuous);
      if (rep.continuity_witness) {
        auto [a, b, d] = *rep.continuity_witness;
        out << ", witness " << tuple(c, {a, b, d});
      }
      out << "\none-sided additive: " << yes_no(rep.one_sided_additive);
      if (rep.one_sided_witness) {
        auto [a, a2, b] = *rep.one_sided_witness;
        out << ", witness " << tuple(c, {a, a2, b});
      }
      out << "\nprecuntz: " << yes_no(rep.valid()) << "\n";
      return rep.valid() ? kExitOk : kExitFailed;
    }
    return kExitOk;
  }

  int cmd_complete(StructureFile const& s, std::size_t bound, std::ostream& out) {
    require_kind(s, {StructureKind::Predomain, StructureKind::PreCuntz}, "complete");
    auto const p    = s.predomain();
    auto const comp = enumerate_round_ideals(p, bound);
    auto const k    = comp.size();
    out << "ideals: " << k << "\n";
    for (std::size_t i = 0; i < k; ++i) {
      out << "  " << i << " " << ideal_label(p, comp.ideals[i]) << "\n";
    }
    out << "waybelow:\n";
    for (std::size_t i = 0; i < k; ++i) {
      out << "  ";
      for (std::size_t j = 0; j < k; ++j) {
        out << (comp.waybelow.holds(i, j) ? '1' : '.');
      }
      out << "\n";
    }
    bool const agree = comp.waybelow == comp.leq && comp.waybelow == waybelow_oracle(comp);
    out << "waybelow = inclusion = oracle: " << yes_no(agree) << "\n";
    int code = agree ? kExitOk : kExitFailed;
    if (s.kind == StructureKind::PreCuntz) {
      auto const cm = completion_monoid(s.precuntz(), bound);
      out << "zero: " << cm.monoid.zero() << "\naddition:\n";
      for (std::size_t i = 0; i < k; ++i) {
        out << " ";
        for (std::size_t j = 0; j < k; ++j) {
          out << " " << cm.monoid.add(i, j);
        }
        out << "\n";
      }
    }
    return code;
  }

  int cmd_stratify(StructureFile const& s, std::string const& output, std::ostream& out) {
    require_kind(s, {StructureKind::Predomain}, "stratify");
    auto const text = emit_structure(predomain_file(stratify(s.predomain())));
    if (output.empty()) {
      out << text;
    } else {
      std::ofstream f(output, std::ios::binary);
      if (!f || !(f << text)) {
        throw Error("cannot write '" + output + "'");
      }
    }
    return kExitOk;
  }

  int cmd_topology(StructureFile const& s, bool dot, std::ostream& out) {
    require_kind(s, {StructureKind::Predomain, StructureKind::PreCuntz}, "topology");
    auto const  p = s.predomain();
    auto const& c = p.carrier();
    if (dot) {
      auto const comp = enumerate_round_ideals(p);
      out << "digraph predomain {\n";
      out << "  subgraph cluster_rel {\n    label=\"rel\";\n";
      for (std::size_t x = 0; x < c.size(); ++x) {
        out << "    e" << x << " [label=\"" << c.name(x) << "\"];\n";
      }
      for (auto [x, y] : reduced_edges(p.rel())) {
        out << "    e" << x << " -> e" << y << ";\n";
      }
      out << "  }\n  subgraph cluster_completion {\n    label=\"completion\";\n";
      for (std::size_t i = 0; i < comp.size(); ++i) {
        out << "    i" << i << " [label=\"" << ideal_label(p, comp.ideals[i]) << "\"];\n";
      }
      for (auto [i, j] : reduced_edges(comp.waybelow)) {
        out << "    i" << i << " -> i" << j << " [style=dashed];\n";
      }
      out << "  }\n}\n";
      return kExitOk;
    }
    auto const t = cspace_topology(p);
    out << "opens: " << t.opens().size() << "\n";
    for (auto const& u : t.opens()) {
      out << "  " << set_label(c, u) << "\n";
    }
    out << "specialization:\n";
    auto const spec = t.specialization_preorder();
    for (auto [x, y] : spec.pairs()) {
      out << "  " << c.name(x) << " <= " << c.name(y) << "\n";
    }
    bool const natural = spec == natural_preorder(p);
    out << "specialization = natural preorder: " << yes_no(natural) << "\n";
    return natural ? kExitOk : kExitFailed;
  }

  int cmd_dual(StructureFile const& s, std::string const& grid_text, std::ostream& out) {
    require_kind(s, {StructureKind::PreCuntz, StructureKind::Model}, "dual");
    if (s.kind == StructureKind::PreCuntz) {
      auto const c = s.precuntz();
      std::vector<ExtRational> grid;
      for (auto const& item : split_commas(grid_text)) {
        grid.push_back(parse_ext(item));
      }
      auto const homs  = monotone_homs(c, grid);
      auto const duals = dual_points(c, grid);
      out << "monotone homs: " << homs.size() << "\n";
      out << "lsc homs: " << duals.size() << "\n";
      for (auto const& d : duals) {
        out << "  " << format_fn(d.values()) << "\n";
      }
      for (auto const& g : homs) {
        env_hom(c, g);
      }
      out << "env keeps homs: yes\n";
      auto const pair = unseparated_pair(c, duals);
      out << "separating: " << yes_no(!pair);
      if (pair) {
        out << ", witness " << tuple(s.elements, {pair->first, pair->second});
      }
      out << "\nhat order embedding: " << yes_no(hat_order_embedding(c, duals)) << "\n";
      return kExitOk;
    }

    auto const m = s.model();
    std::vector<PositiveElement> fns;
    for (auto const& f : s.fns) {
      fns.push_back(s.fn(f.name));
    }
    auto const family = weight_family(
        m, {ExtRational(0), ExtRational(Rational(1, 2)), ExtRational(1), ExtRational::infinity()});
    bool ok = true;
    for (auto const& t : family) {
      auto rep = trace_lsc_check(t, fns);
      ok       = ok && rep.hom && rep.order_lsc && rep.norm_lsc;
    }
    out << "traces: " << family.size() << "\n";
    out << "traces are lsc homs: " << yes_no(ok) << "\n";
    bool separated = true;
    for (auto const& a : fns) {
      for (auto const& b : fns) {
        auto x = separating_point(a, b);
        separated = separated && (x.has_value() == !pointwise_leq(a, b));
      }
    }
    out << "point masses separate: " << yes_no(separated) << "\n";
    bool bidual = true;
    if (!fns.empty()) {
      auto rep = bidual_check(m, fns, family);
      out << "bidual generator: " << format_element(rep.generator) << "\n";
      bidual = rep.matches;
    }
    out << "bidual matches: " << yes_no(bidual) << "\n";
    return ok && separated && bidual ? kExitOk : kExitFailed;
  }

  int cmd_separate(StructureFile const& s, std::string const& ftext, std::string const& htext,
                   std::ostream& out) {
    require_kind(s, {StructureKind::Predomain, StructureKind::PreCuntz}, "separate");
    auto const p = s.predomain();
    auto const f = parse_fn(ftext, p.size());
    auto const h = parse_fn(htext, p.size());
    for (auto const* g : {&f, &h}) {
      if (!is_lsc(p, *g)) {
        out << "not lower semicontinuous: " << format_fn(*g) << "\n";
        return kExitFailed;
      }
    }
    if (pointwise_leq(f, h)) {
      out << "f <= g: nothing to separate\n";
      return kExitFailed;
    }
    auto const sep = separate(p, f, h);
    out << "y: " << p.carrier().name(sep.y) << "\n";
    out << "r: " << format_ext(sep.r) << "\n";
    out << "f in V(y, r): " << yes_no(in_V(f, sep.y, sep.r)) << "\n";
    out << "g in W(y, r): " << yes_no(in_W(p, h, sep.y, sep.r)) << "\n";
    return kExitOk;
  }

  int cmd_deltas(StructureFile const& s, std::string const& atext, std::string const& btext,
                 std::string const& epstext, std::ostream& out) {
    require_kind(s, {StructureKind::Model}, "deltas");
    auto const a   = model_element(s, atext);
    auto const b   = model_element(s, btext);
    auto const eps = parse_rational(epstext);
    auto const da  = find_delta_add(a, b, eps);
    auto const ds  = find_delta_split(a, b, eps);
    out << "a: " << format_element(a) << "\n";
    out << "b: " << format_element(b) << "\n";
    out << "eps: " << format_rational(eps) << "\n";
    out << "delta_add: " << format_rational(da) << "\n";
    out << "delta_split: " << format_rational(ds) << "\n";
    out << "delta_split eps/2 witness: " << format_rational(eps / 2) << "\n";
    auto const kr = kr_check(a, b, eps);
    out << "norm_dist: " << format_rational(norm_dist(a, b)) << "\n";
    if (kr.hypothesis) {
      out << "cutdown within eps: yes, delta " << format_rational(*kr.delta) << "\n";
    } else {
      out << "cutdown within eps: hypothesis false\n";
    }
    auto const cp = natural_vs_cp_preorder(a, b);
    out << "a <~ b: " << yes_no(cp.cp);
    if (cp.eps_witness) {
      out << ", eps witness " << format_rational(*cp.eps_witness);
    }
    out << "\n";
    return kExitOk;
  }

}  // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite predomains, their completions and preCuntz semigroups"};
  app.name("predom");
  app.require_subcommand(1);
  bool timings = false;
  app.add_flag("--timings", timings, "Print the elapsed time to stderr");

  std::string file;
  std::string grid = "0,1/2,1";
  std::string dual_grid = "0,1,2,inf";
  std::size_t bound = kCompletionBound;
  std::string output;
  bool        dot = false;
  std::string f_text, h_text, a_text, b_text, eps_text;

  auto* check = app.add_subcommand("check", "Validate the axioms of a structure file");
  check->add_option("file", file)->required();
  check->add_option("--grid", grid, "Grid values for model files");
  auto* format = app.add_subcommand("format", "Print the canonical form of a structure file");
  format->add_option("file", file)->required();
  auto* complete = app.add_subcommand("complete", "Round ideals and way-below");
  complete->add_option("file", file)->required();
  complete->add_option("--bound", bound, "Largest carrier to enumerate");
  auto* strat = app.add_subcommand("stratify", "Emit the stratified predomain");
  strat->add_option("file", file)->required();
  strat->add_option("-o,--output", output, "Write to a file instead of stdout");
  auto* topo = app.add_subcommand("topology", "Opens and specialization preorder");
  topo->add_option("file", file)->required();
  topo->add_flag("--dot", dot, "Graphviz output of the relation and the completion");
  auto* dual = app.add_subcommand("dual", "Dual homomorphisms and traces");
  dual->add_option("file", file)->required();
  dual->add_option("--grid", dual_grid, "Values for precuntz homs");
  auto* sep = app.add_subcommand("separate", "Separate two lsc functions");
  sep->add_option("file", file)->required();
  sep->add_option("--f", f_text, "Values of f in element order")->required();
  sep->add_option("--g", h_text, "Values of g in element order")->required();
  auto* deltas = app.add_subcommand("deltas", "Delta witnesses for cutdowns");
  deltas->add_option("file", file)->required();
  deltas->add_option("--a", a_text, "fn name or values")->required();
  deltas->add_option("--b", b_text, "fn name or values")->required();
  deltas->add_option("--eps", eps_text)->required();

  std::vector<std::string> argv_store{"predom"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) {
    argv.push_back(a.data());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto const start = std::chrono::steady_clock::now();
  int        code  = kExitOk;
  try {
    auto const s = read_structure(file);
    if (check->parsed()) {
      code = cmd_check(s, grid, out);
    } else if (format->parsed()) {
      out << emit_structure(s);
    } else if (complete->parsed()) {
      code = cmd_complete(s, bound, out);
    } else if (strat->parsed()) {
      code = cmd_stratify(s, output, out);
    } else if (topo->parsed()) {
      code = cmd_topology(s, dot, out);
    } else if (dual->parsed()) {
      code = cmd_dual(s, dual_grid, out);
    } else if (sep->parsed()) {
      code = cmd_separate(s, f_text, h_text, out);
    } else if (deltas->parsed()) {
      code = cmd_deltas(s, a_text, b_text, eps_text, out);
    }
  } catch (NotAPredomain const& e) {
    err << "predom: not a predomain: " << e.what() << "\n";
    code = kExitFailed;
  } catch (NotAPreCuntz const& e) {
    err << "predom: " << e.what() << "\n";
    code = kExitFailed;
  } catch (BoundExceeded const& e) {
    err << "predom: bound exceeded: " << e.what() << "\n";
    code = kExitBound;
  } catch (InternalInconsistency const& e) {
    err << "predom: internal inconsistency: " << e.what() << "\n";
    code = kExitFailed;
  } catch (ParseError const& e) {
    err << file << ":" << e.what() << "\n";
    code = kExitUsage;
  } catch (Error const& e) {
    err << "predom: " << e.what() << "\n";
    code = kExitUsage;
  }
  if (timings) {
    auto const ms = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    err << "time: " << ms.count() << " ms\n";
  }
  return code;
}

}  // namespace predom
