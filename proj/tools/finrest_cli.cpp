// Command-line front end: checks, constructions and cross-verifications for
// finite left restriction monoids, matched pairs, supported actions, em-sets
// and etale extensions, over canonical JSON documents.
//
// Exit codes: 0 = all checks pass, 1 = axiom failure (with witnesses),
// 2 = structural or usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "finrest.hpp"

namespace {

using namespace finrest;

constexpr int kExitPass = 0;
constexpr int kExitAxiomFailure = 1;
constexpr int kExitStructural = 2;

struct Options {
  std::string out;
  std::vector<std::string> fixtures;
  std::uint64_t max_search = 10'000'000;
  bool force_boolean = false;
};

void emit(const Options& opt, const json& payload) {
  std::string text = canonical_dump(payload);
  std::cout << text;
  if (!opt.out.empty()) {
    std::ofstream f(opt.out);
    if (!f) throw Error(Errc::usage, "cannot open output file: " + opt.out);
    f << text;
  }
}

void note(const std::string& line) { std::cerr << line << "\n"; }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(Errc::structural, "cannot read input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Inputs are file paths, "fixture:SPEC" pseudo-paths, or --fixtures entries
// consumed in order for missing positionals.
StructureDocument load_input(const Options& opt, std::vector<std::string>& args, size_t index) {
  if (index < args.size()) {
    const std::string& arg = args[index];
    if (arg.rfind("fixture:", 0) == 0) return generate(arg.substr(8));
    return parse_document(slurp(arg));
  }
  size_t fixture_index = index - args.size();
  if (fixture_index < opt.fixtures.size()) return generate(opt.fixtures[fixture_index]);
  throw Error(Errc::usage, "missing input " + std::to_string(index + 1) +
                               " (pass a file, fixture:SPEC, or --fixtures)");
}

const LeftRestrictionMonoid& as_lrm(const StructureDocument& doc) {
  if (!std::holds_alternative<LeftRestrictionMonoid>(doc.payload))
    throw Error(Errc::usage, "expected an lrm document, got kind '" + doc.kind + "'");
  return std::get<LeftRestrictionMonoid>(doc.payload);
}

SupportedAction as_action(const StructureDocument& doc) {
  if (!std::holds_alternative<SupportedAction>(doc.payload))
    throw Error(Errc::usage, "expected an action document, got kind '" + doc.kind + "'");
  return std::get<SupportedAction>(doc.payload);
}

json reports_json(const StructureDocument& doc, const std::vector<AxiomReport>& reports) {
  json arr = json::array();
  bool pass = true;
  for (const auto& r : reports) {
    arr.push_back(report_to_json(r));
    pass = pass && r.ok();
  }
  return json{{"kind", "check_result"},
              {"input", doc.meta.name.empty() ? doc.kind : doc.meta.name},
              {"pass", pass},
              {"reports", arr}};
}

void summarize(const std::vector<AxiomReport>& reports) {
  for (const auto& r : reports) {
    note(std::string(r.ok() ? "[PASS] " : "[FAIL] ") + r.structure);
    if (!r.ok())
      for (const auto& e : r.entries)
        if (!e.pass) note("       axiom " + e.axiom + (e.note.empty() ? "" : ": " + e.note));
  }
}

AxiomReport error_report(const std::string& structure, const std::string& axiom, const std::string& why) {
  AxiomReport r;
  r.structure = structure;
  AxiomEntry e;
  e.axiom = axiom;
  e.pass = false;
  e.note = why;
  r.entries.push_back(e);
  return r;
}

// The full applicable check battery for a document.
std::vector<AxiomReport> run_checks(const StructureDocument& doc, bool force_boolean,
                                    bool diagnose_all = false) {
  std::vector<AxiomReport> reports;
  const std::string& name = doc.meta.name.empty() ? doc.kind : doc.meta.name;
  std::visit(
      [&](const auto& payload) {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, FiniteMonoid>) {
          reports.push_back(check_monoid(payload, name));
        } else if constexpr (std::is_same_v<T, Semilattice>) {
          reports.push_back(check_semilattice(payload, name));
        } else if constexpr (std::is_same_v<T, BooleanAlgebra>) {
          reports.push_back(check_boolean_algebra(payload, name));
        } else if constexpr (std::is_same_v<T, LeftRestrictionMonoid>) {
          reports.push_back(check_lrm(payload, name + ":lrm"));
          if (force_boolean || (diagnose_all && payload.zero))
            reports.push_back(check_boolean_lrm(payload, name + ":boolean"));
        } else if constexpr (std::is_same_v<T, MatchedPair>) {
          if (payload.is_boolean())
            reports.push_back(check_boolean_algebra(payload.algebra(), name + ":E"));
          else
            reports.push_back(check_semilattice(payload.E, name + ":E"));
          reports.push_back(check_monoid(payload.M, name + ":M"));
          reports.push_back(check_matched_pair(payload, name + ":pair"));
          if (payload.is_boolean())
            reports.push_back(check_boolean_matched_pair(payload, name + ":boolean"));
          else if (force_boolean)
            reports.push_back(error_report(name + ":boolean", "structure",
                                           "no Boolean structure on the semilattice"));
        } else if constexpr (std::is_same_v<T, SupportedAction>) {
          reports.push_back(check_lrm(*payload.S, name + ":lrm"));
          reports.push_back(check_supported(payload, name + ":action"));
          if (payload.boolean_mode || force_boolean) {
            try {
              reports.push_back(check_boolean_supported(payload, name + ":boolean"));
            } catch (const Error& e) {
              reports.push_back(error_report(name + ":boolean", "precondition", e.what()));
            }
          }
        } else if constexpr (std::is_same_v<T, EmSet>) {
          if (payload.pair->is_boolean())
            reports.push_back(check_boolean_algebra(payload.pair->algebra(), name + ":E"));
          else
            reports.push_back(check_semilattice(payload.pair->E, name + ":E"));
          reports.push_back(check_monoid(payload.pair->M, name + ":M"));
          reports.push_back(check_matched_pair(*payload.pair, name + ":pair"));
          if (payload.boolean_flag)
            reports.push_back(check_boolean_matched_pair(*payload.pair, name + ":pair_boolean"));
          reports.push_back(check_em_set(payload, name + ":em_set"));
        }
      },
      doc.payload);
  return reports;
}

int cmd_check(const Options& opt, std::vector<std::string>& args, const std::string& kind) {
  auto doc = load_input(opt, args, 0);
  if (!kind.empty() && kind != doc.kind)
    throw Error(Errc::usage, "document kind '" + doc.kind + "' does not match --kind " + kind);
  auto reports = run_checks(doc, opt.force_boolean);
  summarize(reports);
  json out = reports_json(doc, reports);
  emit(opt, out);
  return out["pass"].get<bool>() ? kExitPass : kExitAxiomFailure;
}

int cmd_report(const Options& opt, std::vector<std::string>& args) {
  auto doc = load_input(opt, args, 0);
  auto reports = run_checks(doc, opt.force_boolean, /*diagnose_all=*/true);
  json out = reports_json(doc, reports);

  if (std::holds_alternative<LeftRestrictionMonoid>(doc.payload)) {
    const auto& s = std::get<LeftRestrictionMonoid>(doc.payload);
    json extra;
    extra["size"] = s.size();
    extra["projections"] = static_cast<int>(projections(s).size());
    extra["totals"] = static_cast<int>(totals(s).size());
    auto fact = is_factorizable(s);
    extra["factorizable"] = fact.factorizable;
    if (!fact.factorizable) extra["factorizable_witness"] = fact.witness;
    extra["partial_units"] = static_cast<int>(partial_units(s).elements.size());
    out["summary"] = extra;
  }
  summarize(reports);
  emit(opt, out);
  return out["pass"].get<bool>() ? kExitPass : kExitAxiomFailure;
}

int cmd_generate(const Options& opt, const std::string& spec) {
  auto doc = generate(spec);
  emit(opt, document_to_json(doc));
  return kExitPass;
}

int cmd_build(const Options& opt, std::vector<std::string>& args) {
  auto doc = load_input(opt, args, 0);
  if (!std::holds_alternative<MatchedPair>(doc.payload))
    throw Error(Errc::usage, "build expects a matched_pair document");
  const auto& p = std::get<MatchedPair>(doc.payload);
  std::vector<AxiomReport> reports{check_matched_pair(p, "input_pair")};
  if (p.is_boolean()) reports.push_back(check_boolean_matched_pair(p, "input_pair_boolean"));
  summarize(reports);
  for (const auto& r : reports)
    if (!r.ok()) {
      emit(opt, reports_json(doc, reports));
      return kExitAxiomFailure;
    }
  auto built = build_lrm(p);
  StructureDocument out;
  out.kind = "lrm";
  out.meta.name = (doc.meta.name.empty() ? "pair" : doc.meta.name) + ":built";
  out.meta.note = "monoid of pairs (e, class); classes keyed by least representative";
  out.payload = built.lrm;
  emit(opt, document_to_json(out));
  return kExitPass;
}

int cmd_extract(const Options& opt, std::vector<std::string>& args) {
  auto doc = load_input(opt, args, 0);
  const auto& s = as_lrm(doc);
  bool boolean = opt.force_boolean || s.zero.has_value();
  if (boolean) {
    auto report = check_boolean_lrm(s, "input_boolean");
    if (!report.ok()) {
      if (opt.force_boolean) {
        summarize({report});
        emit(opt, reports_json(doc, {report}));
        return kExitAxiomFailure;
      }
      boolean = false;  // fall back to the plain extraction
    }
  }
  auto ex = from_lrm(s, boolean);
  StructureDocument out;
  out.kind = "matched_pair";
  out.meta.name = (doc.meta.name.empty() ? "lrm" : doc.meta.name) + ":pair";
  out.payload = ex.pair;
  emit(opt, document_to_json(out));
  return kExitPass;
}

int cmd_act(const Options& opt, std::vector<std::string>& args, const std::string& lrm_path) {
  auto ydoc = load_input(opt, args, 0);
  if (!std::holds_alternative<EmSet>(ydoc.payload))
    throw Error(Errc::usage, "act expects an em_set document");
  if (lrm_path.empty()) throw Error(Errc::usage, "act requires --lrm FILE");
  std::vector<std::string> lrm_args{lrm_path};
  auto sdoc = load_input(opt, lrm_args, 0);
  auto s = std::make_shared<const LeftRestrictionMonoid>(as_lrm(sdoc));
  const auto& y = std::get<EmSet>(ydoc.payload);
  auto back = to_action(y, s);
  StructureDocument out;
  out.kind = "action";
  out.meta.name = (ydoc.meta.name.empty() ? "em_set" : ydoc.meta.name) + ":action";
  out.meta.note = "carrier is the classes (e, [y]_e) ordered by (e, least representative)";
  out.payload = back.action;
  emit(opt, document_to_json(out));
  return kExitPass;
}

int cmd_unact(const Options& opt, std::vector<std::string>& args) {
  auto doc = load_input(opt, args, 0);
  auto a = as_action(doc);
  auto y = from_action(a);
  StructureDocument out;
  out.kind = "em_set";
  out.meta.name = (doc.meta.name.empty() ? "action" : doc.meta.name) + ":em_set";
  out.meta.note = "carrier is the top support fiber in carrier order";
  out.payload = y.em;
  emit(opt, document_to_json(out));
  return kExitPass;
}

int cmd_hom(const Options& opt, std::vector<std::string>& args) {
  auto adoc = load_input(opt, args, 0);
  auto bdoc = load_input(opt, args, 1);
  auto a = as_action(adoc);
  auto b = as_action(bdoc);
  SearchLimit limit;
  limit.cap = opt.max_search;
  auto homs = enumerate_homs(a, b, limit);
  json maps = json::array();
  for (const auto& h : homs) maps.push_back(h);
  note("hom set size: " + std::to_string(homs.size()));
  emit(opt, json{{"kind", "hom_list"}, {"count", homs.size()}, {"maps", maps}});
  return kExitPass;
}

int cmd_product(const Options& opt, std::vector<std::string>& args) {
  auto adoc = load_input(opt, args, 0);
  auto bdoc = load_input(opt, args, 1);
  auto a = as_action(adoc);
  auto b = as_action(bdoc);
  auto box = box_product(a, b);
  StructureDocument out;
  out.kind = "action";
  out.meta.name = adoc.meta.name + " box " + bdoc.meta.name;
  out.meta.note = "carrier pairs in lexicographic order of (left index, right index)";
  out.payload = box.action;
  emit(opt, document_to_json(out));
  return kExitPass;
}

int cmd_exp(const Options& opt, std::vector<std::string>& args) {
  auto adoc = load_input(opt, args, 0);
  auto bdoc = load_input(opt, args, 1);
  auto a = as_action(adoc);
  auto b = as_action(bdoc);
  SearchLimit limit;
  limit.cap = opt.max_search;
  auto exp = exponential(a, b, limit);
  StructureDocument out;
  out.kind = "action";
  out.meta.name = bdoc.meta.name + "^" + adoc.meta.name;
  out.meta.note = "carrier is the disjoint union over projections e of hom(Se box A, B)";
  out.payload = exp.action;
  emit(opt, document_to_json(out));
  return kExitPass;
}

int cmd_curry(const Options& opt, std::vector<std::string>& args, const std::string& map_path) {
  auto zdoc = load_input(opt, args, 0);
  auto adoc = load_input(opt, args, 1);
  auto bdoc = load_input(opt, args, 2);
  auto z = as_action(zdoc);
  auto a = as_action(adoc);
  auto b = as_action(bdoc);
  SearchLimit limit;
  limit.cap = opt.max_search;
  auto exp = exponential(a, b, limit);
  auto zbox = box_product(z, a);
  auto ebox = box_product(exp.action, a);
  auto ev = eval_hom(exp, ebox);

  std::vector<std::vector<int>> gs;
  if (!map_path.empty()) {
    json j;
    try {
      j = json::parse(slurp(map_path));
    } catch (const json::parse_error& e) {
      throw Error(Errc::structural, std::string("map file: ") + e.what());
    }
    gs.push_back(detail::int_vector(j, "map"));
    auto hc = check_action_hom(zbox.action, b, gs[0]);
    if (!hc.ok) throw Error(Errc::precondition, "supplied map is not a homomorphism: " + hc.condition);
  } else {
    gs = enumerate_homs(zbox.action, b, limit);
  }

  auto hs = enumerate_homs(z, exp.action, limit);
  bool all_ok = true;
  json entries = json::array();
  for (const auto& g : gs) {
    auto cur = curry(exp, z, a, zbox, g);
    bool hom_ok = check_action_hom(z, exp.action, cur).ok;
    std::vector<int> recovered(zbox.action.carrier);
    for (int i = 0; i < zbox.action.carrier; ++i) {
      auto [zz, xx] = zbox.pairs[i];
      recovered[i] = ev[ebox.index_of(cur[zz], xx)];
    }
    int matches = 0;
    for (const auto& h : hs) {
      bool same = true;
      for (int i = 0; i < zbox.action.carrier && same; ++i) {
        auto [zz, xx] = zbox.pairs[i];
        same = ev[ebox.index_of(h[zz], xx)] == g[i];
      }
      if (same) ++matches;
    }
    bool ok = hom_ok && recovered == g && matches == 1;
    all_ok = all_ok && ok;
    entries.push_back(json{{"map", g}, {"curried", cur}, {"pass", ok}, {"matches", matches}});
  }
  note(std::string(all_ok ? "[PASS] " : "[FAIL] ") + "curry: " + std::to_string(gs.size()) +
       " homs, hom(Z, B^A) size " + std::to_string(hs.size()));
  emit(opt, json{{"kind", "curry_report"},
                 {"pass", all_ok},
                 {"hom_count", gs.size()},
                 {"exponential_hom_count", hs.size()},
                 {"entries", entries}});
  return all_ok ? kExitPass : kExitAxiomFailure;
}

int cmd_inv(const Options& opt, std::vector<std::string>& args) {
  auto doc = load_input(opt, args, 0);
  const auto& s = as_lrm(doc);
  auto units = partial_units(s);
  auto inv = inv_monoid(s, units);
  json witnesses = json::array();
  for (size_t i = 0; i < inv.elements.size(); ++i)
    witnesses.push_back(json{{"element", inv.elements[i]}, {"inverse", inv.elements[inv.inverse[i]]}});
  note("partial units: " + std::to_string(inv.elements.size()));
  emit(opt, json{{"kind", "partial_units"},
                 {"count", inv.elements.size()},
                 {"elements", inv.elements},
                 {"witnesses", witnesses},
                 {"inv_lrm", lrm_to_json(*inv.lrm)}});
  return kExitPass;
}

int cmd_etale(const Options& opt, std::vector<std::string>& args) {
  auto doc = load_input(opt, args, 0);
  const auto& s = as_lrm(doc);
  auto ctx = require_boolean(s);
  auto units = partial_units(s);
  SearchLimit limit;
  limit.cap = opt.max_search;
  auto result = is_etale(s, ctx, units, limit);
  json decomposition = json::array();
  for (const auto& d : result.decomposition) decomposition.push_back(d);
  note(result.etale ? "[PASS] etale" : "[FAIL] not etale, witness " + std::to_string(result.witness));
  json out{{"kind", "etale_report"}, {"etale", result.etale}, {"decomposition", decomposition}};
  if (!result.etale) out["witness"] = result.witness;
  emit(opt, out);
  return result.etale ? kExitPass : kExitAxiomFailure;
}

int cmd_extend(const Options& opt, std::vector<std::string>& args, const std::string& lrm_path) {
  auto adoc = load_input(opt, args, 0);
  if (lrm_path.empty()) throw Error(Errc::usage, "extend requires --lrm FILE");
  std::vector<std::string> lrm_args{lrm_path};
  auto sdoc = load_input(opt, lrm_args, 0);
  auto s = std::make_shared<const LeftRestrictionMonoid>(as_lrm(sdoc));
  auto a = as_action(adoc);

  auto ctx = require_boolean(*s);
  auto units = partial_units(*s);
  auto inv = inv_monoid(*s, units);
  if (a.S->monoid.mult != inv.lrm->monoid.mult || a.S->plus != inv.lrm->plus)
    throw Error(Errc::precondition, "the action is not over Inv of the supplied monoid");
  SearchLimit limit;
  limit.cap = opt.max_search;
  auto etale = is_etale(*s, ctx, units, limit);
  auto a_over_inv = a;
  a_over_inv.S = inv.lrm;
  auto ext = extend_action(inv, a_over_inv, s, ctx, etale, limit);
  if (!ext.independent)
    throw Error(Errc::precondition, "extension depends on the chosen decomposition");
  StructureDocument out;
  out.kind = "action";
  out.meta.name = (adoc.meta.name.empty() ? "inv_action" : adoc.meta.name) + ":extended";
  out.payload = ext.action;
  emit(opt, document_to_json(out));
  return kExitPass;
}

int cmd_catiso(const Options& opt, std::vector<std::string>& args) {
  auto doc = load_input(opt, args, 0);
  auto s = std::make_shared<const LeftRestrictionMonoid>(as_lrm(doc));
  auto ctx = std::make_shared<const BooleanContext>(require_boolean(*s));
  SearchLimit limit;
  limit.cap = opt.max_search;
  auto report = check_category_iso(s, standard_fixture_actions(s, ctx), limit);
  for (const auto& line : report.lines) note(line);
  json lines = json::array();
  for (const auto& line : report.lines) lines.push_back(line);
  emit(opt, json{{"kind", "catiso_report"}, {"pass", report.ok}, {"vacuous", report.vacuous}, {"lines", lines}});
  return report.ok ? kExitPass : kExitAxiomFailure;
}

int cmd_roundtrip(const Options& opt, std::vector<std::string>& args) {
  auto doc = load_input(opt, args, 0);
  if (std::holds_alternative<LeftRestrictionMonoid>(doc.payload)) {
    const auto& s = std::get<LeftRestrictionMonoid>(doc.payload);
    bool boolean = s.zero.has_value() && check_boolean_lrm(s, "probe").ok();
    auto rec = reconstruction_iso(s, boolean);
    auto iso = check_lrm_iso(s, rec.built.lrm, rec.theta, boolean);
    note(std::string(iso.ok ? "[PASS] " : "[FAIL] ") + "reconstruction on " +
         std::to_string(s.size()) + " elements");
    emit(opt, json{{"kind", "roundtrip_report"},
                   {"pass", iso.ok},
                   {"size", s.size()},
                   {"boolean", boolean},
                   {"theta", rec.theta}});
    return iso.ok ? kExitPass : kExitAxiomFailure;
  }
  if (std::holds_alternative<SupportedAction>(doc.payload)) {
    auto a = as_action(doc);
    auto rt = roundtrip_action_iso(a);
    auto iso = check_action_iso(a, rt.back.action, rt.theta);
    note(std::string(iso.ok ? "[PASS] " : "[FAIL] ") + "action round trip on carrier " +
         std::to_string(a.carrier));
    emit(opt, json{{"kind", "roundtrip_report"},
                   {"pass", iso.ok},
                   {"carrier", a.carrier},
                   {"theta", rt.theta}});
    return iso.ok ? kExitPass : kExitAxiomFailure;
  }
  throw Error(Errc::usage, "roundtrip expects an lrm or action document");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite left restriction monoids, matched pairs, supported actions"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--out", opt.out, "also write the JSON output to this file");
  app.add_option("--max-search", opt.max_search, "enumeration budget (candidate evaluations)");
  app.add_flag("--boolean", opt.force_boolean, "force the Boolean check suites");
  app.add_option("--fixtures", opt.fixtures,
                 "generator specs used for missing inputs (e.g. pt(2),powerset_lrm(2))")
      ->delimiter(',');

  std::string kind, lrm_path, map_path, gen_spec;
  std::vector<std::string> inputs;

  auto add_inputs = [&inputs](CLI::App* sub, int n) {
    sub->add_option("inputs", inputs, "input documents (paths or fixture:SPEC)")->expected(0, n);
  };

  auto* c_check = app.add_subcommand("check", "run the axiom checkers for a document");
  c_check->add_option("--kind", kind, "require this document kind");
  add_inputs(c_check, 1);
  auto* c_build = app.add_subcommand("build", "matched pair -> left restriction monoid");
  add_inputs(c_build, 1);
  auto* c_extract = app.add_subcommand("extract", "left restriction monoid -> matched pair");
  add_inputs(c_extract, 1);
  auto* c_act = app.add_subcommand("act", "em_set -> supported action (needs --lrm)");
  c_act->add_option("--lrm", lrm_path, "the monoid whose pair the em_set is over");
  add_inputs(c_act, 1);
  auto* c_unact = app.add_subcommand("unact", "factorizable action -> em_set");
  add_inputs(c_unact, 1);
  auto* c_hom = app.add_subcommand("hom", "enumerate homomorphisms between two actions");
  add_inputs(c_hom, 2);
  auto* c_product = app.add_subcommand("product", "box product of two actions");
  add_inputs(c_product, 2);
  auto* c_exp = app.add_subcommand("exp", "exponential B^A of two actions (args: A B)");
  add_inputs(c_exp, 2);
  auto* c_curry = app.add_subcommand("curry", "curry homs Z box A -> B and verify the adjunction");
  c_curry->add_option("--map", map_path, "JSON array for one hom on the box carrier");
  add_inputs(c_curry, 3);
  auto* c_inv = app.add_subcommand("inv", "partial units and the inverse monoid they form");
  add_inputs(c_inv, 1);
  auto* c_etale = app.add_subcommand("etale", "decompose every element into partial units");
  add_inputs(c_etale, 1);
  auto* c_extend = app.add_subcommand("extend", "extend an Inv(S)-action to S (needs --lrm)");
  c_extend->add_option("--lrm", lrm_path, "the etale monoid S");
  add_inputs(c_extend, 1);
  auto* c_catiso = app.add_subcommand("catiso", "verify the Inv(S)/S action category isomorphism");
  add_inputs(c_catiso, 1);
  auto* c_roundtrip = app.add_subcommand("roundtrip", "reconstruction or action round-trip isomorphism");
  add_inputs(c_roundtrip, 1);
  auto* c_report = app.add_subcommand("report", "all applicable checks plus a structure summary");
  add_inputs(c_report, 1);
  auto* c_generate = app.add_subcommand("generate", "emit a built-in fixture document");
  c_generate->add_option("spec", gen_spec, "generator spec, e.g. pt(2)")->required();

  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitStructural;
  }

  try {
    if (c_check->parsed()) return cmd_check(opt, inputs, kind);
    if (c_build->parsed()) return cmd_build(opt, inputs);
    if (c_extract->parsed()) return cmd_extract(opt, inputs);
    if (c_act->parsed()) return cmd_act(opt, inputs, lrm_path);
    if (c_unact->parsed()) return cmd_unact(opt, inputs);
    if (c_hom->parsed()) return cmd_hom(opt, inputs);
    if (c_product->parsed()) return cmd_product(opt, inputs);
    if (c_exp->parsed()) return cmd_exp(opt, inputs);
    if (c_curry->parsed()) return cmd_curry(opt, inputs, map_path);
    if (c_inv->parsed()) return cmd_inv(opt, inputs);
    if (c_etale->parsed()) return cmd_etale(opt, inputs);
    if (c_extend->parsed()) return cmd_extend(opt, inputs, lrm_path);
    if (c_catiso->parsed()) return cmd_catiso(opt, inputs);
    if (c_roundtrip->parsed()) return cmd_roundtrip(opt, inputs);
    if (c_report->parsed()) return cmd_report(opt, inputs);
    if (c_generate->parsed()) return cmd_generate(opt, gen_spec);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::no_join:
      case Errc::no_witness:
      case Errc::not_etale:
      case Errc::not_factorizable:
      case Errc::not_boolean:
        return kExitAxiomFailure;
      default:
        return kExitStructural;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStructural;
  }
  return kExitStructural;
}
