#include "cytrans/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <map>
#include <ostream>
#include <set>

#include "cytrans/errors.hpp"
#include "cytrans/keyvalue.hpp"
#include "cytrans/poly_text.hpp"
#include "cytrans/singularity.hpp"
#include "cytrans/transition.hpp"
#include "cytrans/web_graph.hpp"

namespace cytrans {

namespace {

struct Globals {
  bool csv = false;
  bool dot = false;
  std::uint64_t seed = 1;
  std::size_t budget = kDefaultPairBudget;

  AnalysisOptions analysis() const {
    AnalysisOptions o;
    o.seed = seed;
    o.buchberger.pair_budget = budget;
    return o;
  }
};

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

int cmd_analyze(const Globals& g, const std::string& file, std::ostream& out) {
  Hypersurface h = parse_hypersurface(read_text_file(file));
  SingularityReport r = analyze_singular_locus(h, g.analysis());
  if (g.csv) {
    out << report_csv_header() << "\n" << report_csv_row(stem(file), r) << "\n";
  } else {
    out << format_report(r, h);
  }
  return 0;
}

int cmd_milnor(const Globals& g, const std::string& file, std::ostream& out) {
  LocalModel m = parse_local_model(read_text_file(file));
  LocalInvariants inv = local_invariants(m, g.analysis().buchberger);
  auto mo = milnor_orlik_check(m);
  auto ca = classify_cA(m, g.analysis().buchberger);
  if (g.csv) {
    out << "name,mu,tau,hessian_corank,milnor_orlik,cA\n"
        << stem(file) << "," << inv.milnor << "," << inv.tyurina << "," << inv.hessian_corank << ","
        << (mo ? std::to_string(*mo) : "") << "," << (ca ? std::to_string(*ca) : "") << "\n";
    return 0;
  }
  out << "mu=" << inv.milnor << " tau=" << inv.tyurina << "\n";
  out << "hessian corank: " << inv.hessian_corank << "\n";
  if (inv.weighted_homogeneous) {
    out << "weights:";
    for (std::size_t i = 0; i < inv.weighted_homogeneous->first.size(); ++i)
      out << (i ? "," : " ") << inv.weighted_homogeneous->first[i].get_str();
    out << " degree " << inv.weighted_homogeneous->second.get_str() << "\n";
  }
  out << "milnor-orlik: " << (mo ? std::to_string(*mo) : "n/a") << "\n";
  out << "type: " << (ca ? (*ca == 1 ? "node (cA1)" : "cA" + std::to_string(*ca)) : "cDV, type undetermined") << "\n";
  if (mo && static_cast<std::size_t>(*mo) != inv.milnor) {
    throw InconsistentData("Milnor-Orlik value " + std::to_string(*mo) + " disagrees with mu=" +
                           std::to_string(inv.milnor));
  }
  return 0;
}

int cmd_transition(const Globals&, const std::vector<std::string>& files, bool table, std::ostream& out) {
  std::vector<std::pair<TransitionRecord, TransitionTable>> items;
  for (const auto& f : files) {
    TransitionRecord t = parse_transition(read_text_file(f));
    TransitionTable tab = compute_table(t);
    items.emplace_back(std::move(t), std::move(tab));
  }
  if (table) {
    out << table_csv_header() << "\n";
    std::set<std::string> seen;
    auto emit = [&](const Fingerprint& fp) {
      if (seen.insert(fp.name).second) out << table_csv_row(fp) << "\n";
    };
    for (const auto& [t, tab] : items) emit(tab.resolution);
    for (const auto& [t, tab] : items) emit(tab.singular);
    for (const auto& [t, tab] : items) emit(tab.smoothing);
    return 0;
  }
  bool errors = false;
  for (const auto& [t, tab] : items) {
    out << "record: " << t.name << " (" << to_string(t.type) << ")\n";
    out << "  " << format_fingerprint(tab.resolution) << "\n";
    out << "  " << format_fingerprint(tab.singular) << "\n";
    out << "  " << format_fingerprint(tab.smoothing) << "\n";
    out << "  fingerprints " << (tab.derived ? "derived" : "supplied") << "\n";
    if (auto d = dim_image_lambda_report(t)) out << "  dim im lambda: " << *d << "\n";
    auto findings = consistency_check(t);
    for (const auto& f : findings) {
      out << "  " << f.to_string() << "\n";
      errors = errors || f.severity == Finding::Severity::error;
    }
    if (findings.empty()) out << "  no findings\n";
  }
  return errors ? 1 : 0;
}

int cmd_simplicity(const Globals& g, const std::string& file, std::ostream& out) {
  TransitionRecord t = parse_transition(read_text_file(file));
  Verdict v = decide_simplicity(t, g.analysis());
  out << v.to_string() << "\n" << "rule: " << v.rule << "\n";
  return 0;
}

std::map<std::string, FieldElement> parse_values(const std::string& text, const SplittingFamily& s) {
  std::map<std::string, FieldElement> values;
  const RingPtr& ring = s.local_model().germ().ring();
  for (const auto& item : split_list(text)) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("--values expects name=value pairs");
    Polynomial p = parse_polynomial(item.substr(eq + 1), ring);
    if (!p.is_zero() && !p.is_constant()) throw ParseError("parameter value is not a constant");
    values.emplace(trim_copy(item.substr(0, eq)), p.constant_term());
  }
  return values;
}

int cmd_split_verify(const Globals& g, const std::string& file, const std::string& values, std::ostream& out) {
  TransitionRecord t = parse_transition(read_text_file(file));
  if (!t.witness) throw DomainError("record '" + t.name + "' has no [witness] section");
  const SplittingFamily& s = *t.witness;
  SplittingVerification v = values.empty() ? verify_splitting_family(s, g.analysis())
                                           : verify_splitting_family(s, parse_values(values, s), g.analysis());
  Hypersurface h(values.empty() ? s.specialize(s.values()) : s.specialize(parse_values(values, s)),
                 Ambient::affine());
  out << format_report(v.report, h);
  out << "expected nodes per point: " << v.expected << "\n";
  out << "verified: " << (v.verified ? "true" : "false") << "\n";
  if (v.verified)
    out << "total nodes: " << t.singular.count << " x " << v.report.point_count << " = "
        << t.singular.count * static_cast<long>(v.report.point_count) << "\n";
  return v.verified ? 0 : 1;
}

int cmd_cusps(const std::string& file, std::ostream& out) {
  PolynomialDocument doc = parse_document(read_text_file(file));
  if (doc.ring->size() != 1 || doc.polynomials.empty() || doc.polynomials.size() > 2)
    throw ParseError("expected one or two univariate sections B");
  std::vector<UnivariatePolynomial> bs;
  for (const auto& p : doc.polynomials) bs.push_back(UnivariatePolynomial::from_polynomial(p, 0));
  for (std::size_t i = 0; i < bs.size(); ++i) {
    CuspidalFibers c = count_cuspidal_fibers(bs[i]);
    out << "factor " << i + 1 << ": " << c.distinct_roots << " cuspidal fibres, all simple: "
        << (c.all_simple ? "true" : "false") << "\n";
  }
  if (bs.size() == 2) out << "II×II points: " << count_common_cuspidal_points(bs[0], bs[1]) << "\n";
  return 0;
}

int report_findings(const std::vector<Finding>& findings, std::ostream& out) {
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& f : findings) {
    out << f.to_string() << "\n";
    ++counts[static_cast<int>(f.severity)];
  }
  out << counts[0] << " errors, " << counts[1] << " warnings, " << counts[2] << " info\n";
  return counts[0] > 0 ? 1 : 0;
}

int cmd_web(const Globals& g, const std::string& action, const std::string& file, const std::vector<std::string>& rest,
            std::ostream& out, std::ostream& err) {
  WebGraph graph = load_web(file);
  if (action == "validate") return report_findings(validate(graph, g.analysis()), out);
  if (action == "build") {
    WebGraph built = refresh_simplicity(graph, g.analysis());
    auto findings = validate(built, g.analysis());
    built = built.with_validation(findings);
    out << format_web(built);
    auto components = connected_components(built);
    err << built.nodes().size() << " nodes, " << built.arrows().size() << " arrows, " << components.size()
        << (components.size() == 1 ? " component\n" : " components\n");
    return report_findings(findings, err);
  }
  if (action == "path") {
    if (rest.size() != 2) throw CLI::ValidationError("web path", "needs two node ids");
    auto p = path(graph, rest[0], rest[1]);
    if (!p) {
      out << "no path from " << rest[0] << " to " << rest[1] << "\n";
      return 1;
    }
    out << rest[0] << " -> " << rest[1] << ": " << p->size() << (p->size() == 1 ? " arrow" : " arrows");
    for (std::size_t i = 0; i < p->size(); ++i) out << (i ? ", " : ": ") << (*p)[i];
    out << "\n";
    return 0;
  }
  if (action == "export") {
    WebGraph built = refresh_simplicity(graph, g.analysis());
    if (g.dot)
      out << export_dot(built);
    else if (g.csv)
      out << export_csv(built);
    else
      out << format_web(built);
    return 0;
  }
  throw CLI::ValidationError("web", "unknown action '" + action + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Singularities, invariants and simplicity of Calabi-Yau geometric transitions", "cytrans"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--csv", g.csv, "CSV output");
  app.add_flag("--dot", g.dot, "DOT output (web export)");
  app.add_option("--seed", g.seed, "seed for random linear forms")->capture_default_str();
  app.add_option("--budget", g.budget, "S-pair reduction budget")->capture_default_str()->check(CLI::PositiveNumber);

  std::string file, action, values;
  std::vector<std::string> files, rest;
  bool table = false;

  auto* analyze = app.add_subcommand("analyze", "singular locus of a hypersurface (.hsf)");
  analyze->add_option("file", file)->required();
  auto* milnor = app.add_subcommand("milnor", "Milnor and Tyurina numbers of a germ (.lm)");
  milnor->add_option("file", file)->required();
  auto* transition = app.add_subcommand("transition", "invariant table and consistency findings (.tr)");
  transition->add_option("files", files)->required();
  transition->add_flag("--table", table, "CSV table h1_theta,b2,rho,b3,b4,chi");
  auto* simplicity = app.add_subcommand("simplicity", "simplicity verdict of a transition (.tr)");
  simplicity->add_option("file", file)->required();
  auto* split = app.add_subcommand("split-verify", "verify the splitting-family witness (.tr)");
  split->add_option("file", file)->required();
  split->add_option("--values", values, "override parameter values, e.g. a=0,b=0,c=0");
  auto* cusps = app.add_subcommand("cusps", "cuspidal fibres of Weierstrass sections");
  cusps->add_option("file", file)->required();
  auto* web = app.add_subcommand("web", "web graph (.web): build, validate, path, export");
  web->add_option("action", action)->required()->check(CLI::IsMember({"build", "validate", "path", "export"}));
  web->add_option("file", file)->required();
  web->add_option("args", rest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(g, file, out);
    if (milnor->parsed()) return cmd_milnor(g, file, out);
    if (transition->parsed()) return cmd_transition(g, files, table, out);
    if (simplicity->parsed()) return cmd_simplicity(g, file, out);
    if (split->parsed()) return cmd_split_verify(g, file, values, out);
    if (cusps->parsed()) return cmd_cusps(file, out);
    if (web->parsed()) return cmd_web(g, action, file, rest, out, err);
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace cytrans
