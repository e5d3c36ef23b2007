#include "qleontief/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "qleontief/combinators.hpp"
#include "qleontief/corpus.hpp"
#include "qleontief/efficiency.hpp"
#include "qleontief/io.hpp"
#include "qleontief/maximize.hpp"
#include "qleontief/oracle.hpp"

namespace qleontief::cli {
namespace {

using nlohmann::json;

struct Config {
  bool json_output = false;
  bool quiet = false;
  std::optional<double> tolerance;
  std::string utility;
  std::string subset;
  std::string downset;
  std::vector<std::string> sets;
  std::string start;
  std::string order;
  std::string upper;
  std::uint64_t seed = 42;
  std::size_t n = 500;
  bool mutate = false;
};

struct Outcome {
  int code = pass;
  json report;
  std::vector<std::string> text;
};

json header(const std::string& command) { return json{{"schema", 1}, {"command", command}}; }

std::string verdict(bool ok) { return ok ? "pass" : "fail"; }

std::string join_ids(const FinitePoset& p, const std::vector<Element>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + p.id(xs[i]);
  return s;
}

std::string cert_line(const Certificate& c, const FinitePoset& p) {
  std::string line = c.property + ": " + verdict(c.pass);
  if (!c.pass && !c.witnesses.empty()) line += " witnesses [" + join_ids(p, c.witnesses) + "]";
  if (!c.pass && !c.levels.empty()) {
    line += " level";
    for (const auto& l : c.levels) line += " " + to_string(l);
  }
  if (!c.detail.empty()) line += " (" + c.detail + ")";
  return line;
}

void add_cert(Outcome& o, json& list, const Certificate& c, const FinitePoset& p) {
  list.push_back(to_json(c, p));
  o.text.push_back(cert_line(c, p));
}

Element load_point_arg(const std::string& path, const FinitePoset& p) { return io::load_point(path, p); }

/// Interior agreement between the classical formula and the certified table
/// at every grid point whose formula interior lies on the grid.
Certificate closed_form_agreement(const ClassicalLeontief<Rational>& form, const ProductSpace& space,
                                  const Utility& certified, const std::optional<double>& tolerance) {
  const Scale scale = tolerance ? Scale::tolerant(*tolerance) : Scale::exact();
  auto same = [&](const Rational& a, const Rational& b) {
    return scale.kind() == Scale::Kind::exact_rational ? a == b : scale.equal(to_double(a), to_double(b));
  };
  std::size_t off_grid = 0;
  for (Element x = 0; x < space.size(); ++x) {
    const auto formula = form.interior(space.values(x));
    bool on_grid = true;
    for (std::size_t j = 0; j < formula.size() && on_grid; ++j) {
      const auto& f = space.factor(j);
      bool found = false;
      for (Element t = 0; t < f.size() && !found; ++t) found = same(space.value(j, t), formula[j]);
      on_grid = found;
    }
    if (!on_grid) {
      ++off_grid;
      continue;
    }
    const auto table = space.values(certified.interior(x));
    for (std::size_t j = 0; j < formula.size(); ++j) {
      if (!same(formula[j], table[j])) {
        return Certificate::failed("closed_form_agreement", {x, certified.interior(x)},
                                   "formula interior coordinate " + std::to_string(j + 1) + " is " +
                                       to_string(formula[j]));
      }
    }
  }
  Certificate cert = Certificate::passed("closed_form_agreement");
  cert.facets.emplace_back("grid_compatible", off_grid == 0);
  if (off_grid) cert.detail = std::to_string(off_grid) + " grid points have off-grid formula interiors";
  return cert;
}

Outcome run_check(const Config& cfg) {
  Outcome o;
  o.report = header("check");
  const auto loaded = io::load_utility(cfg.utility);
  const Utility& u = loaded.utility;
  const auto& p = u.domain();
  json certs = json::array();
  auto ql = certify_quasi_leontief(u);
  add_cert(o, certs, ql.certificate, p);
  const auto regular = certify_regular(u);
  add_cert(o, certs, regular, p);
  bool ok = ql.certificate.pass && regular.pass;
  if (p.is_filtered()) {
    const auto triangle = check_characterization_equivalence(u);
    add_cert(o, certs, triangle, p);
    ok = ok && triangle.pass;
  }
  if (ql.utility) {
    const auto galois = verify_galois(*ql.utility, regular.dual_table);
    add_cert(o, certs, galois, p);
    ok = ok && galois.pass;
    if (loaded.classical && loaded.space) {
      const auto agreement = closed_form_agreement(*loaded.classical, *loaded.space, *ql.utility, cfg.tolerance);
      add_cert(o, certs, agreement, p);
      ok = ok && agreement.pass;
    }
  }
  if (loaded.space) add_cert(o, certs, certify_individually(*loaded.space, u), p);
  o.report["certificates"] = std::move(certs);
  o.report["verdict"] = verdict(ok);
  o.text.insert(o.text.begin(), "verdict: " + verdict(ok));
  o.code = ok ? pass : math_failure;
  return o;
}

ElementSet load_subset(const std::string& path, const FinitePoset& p) {
  const json doc = io::read_json(path);
  try {
    if (doc.is_object() && doc.contains("members") && doc["members"].is_array()) {
      std::vector<Element> xs;
      for (const auto& m : doc["members"]) xs.push_back(io::parse_point(m, p));
      return make_set(std::move(xs));
    }
    return io::parse_downset(doc, p).members();
  } catch (const io::InputError& e) {
    throw io::InputError(path + ": " + e.what());
  }
}

json efficiency_report(const ProductSpace& space, const Utility& u, Element x) {
  const auto& p = space.poset();
  const auto pu = pu_map(space, u, x);
  json membership = json::array();
  for (bool b : pu.membership) membership.push_back(b);
  std::size_t cardinality = 1;
  for (const auto& e : pu.per_axis) cardinality *= e.size();
  const auto witness = efficiency_witness(u, x);
  return json{{"point", p.id(x)},
              {"efficient", !witness.has_value()},
              {"axis_membership", std::move(membership)},
              {"witness", witness ? json(p.id(*witness)) : json(nullptr)},
              {"pu_cardinality", cardinality}};
}

Outcome run_efficient(const Config& cfg) {
  Outcome o;
  o.report = header("efficient");
  const auto loaded = io::load_utility(cfg.utility);
  const auto& p = loaded.utility.domain();
  const ElementSet subset = cfg.subset.empty() ? p.all() : load_subset(cfg.subset, p);
  auto global = certify_quasi_leontief(loaded.utility);
  json points = json::array();
  if (global.utility) {
    const auto e = efficient_set(*global.utility, subset);
    for (Element x : e.points) points.push_back(p.id(x));
    o.report["mode"] = "global_chain";
    o.text.push_back("mode: global chain");
    o.text.push_back("efficient: " + join_ids(p, e.points));
  } else if (loaded.space) {
    const auto individual = certify_individually(*loaded.space, loaded.utility);
    if (!individual.pass) {
      o.report["certificate"] = to_json(individual, p);
      o.report["verdict"] = "fail";
      o.text.push_back("verdict: fail");
      o.text.push_back(cert_line(individual, p));
      o.code = math_failure;
      return o;
    }
    std::vector<Element> efficient;
    for (Element x : subset) {
      if (is_efficient_minimal(loaded.utility, x)) efficient.push_back(x);
    }
    for (Element x : efficient) points.push_back(p.id(x));
    o.report["mode"] = "minimal_set";
    o.text.push_back("mode: minimal set");
    o.text.push_back("efficient: " + join_ids(p, efficient));
  } else {
    o.report["certificate"] = to_json(global.certificate, p);
    o.report["verdict"] = "fail";
    o.text.push_back("verdict: fail");
    o.text.push_back(cert_line(global.certificate, p));
    o.code = math_failure;
    return o;
  }
  o.report["efficient"] = std::move(points);
  if (loaded.space) {
    const Utility& u = global.utility ? *global.utility : loaded.utility;
    json reports = json::array();
    for (Element x : subset) {
      reports.push_back(efficiency_report(*loaded.space, u, x));
      const auto& r = reports.back();
      o.text.push_back("  " + p.id(x) + (r["efficient"].get<bool>() ? " efficient" : " not efficient") +
                       " |P_u| = " + std::to_string(r["pu_cardinality"].get<std::size_t>()));
    }
    o.report["points"] = std::move(reports);
  }
  o.report["verdict"] = "pass";
  o.text.insert(o.text.begin(), "verdict: pass");
  return o;
}

Outcome run_maximize(const Config& cfg) {
  Outcome o;
  o.report = header("maximize");
  const auto loaded = io::load_utility(cfg.utility);
  const auto& p = loaded.utility.domain();
  const DownSet s = io::load_downset(cfg.downset, p);
  const auto ql = certify_quasi_leontief(loaded.utility);
  if (!ql.utility) {
    o.report["certificate"] = to_json(ql.certificate, p);
    o.report["verdict"] = "fail";
    o.text = {"verdict: fail", cert_line(ql.certificate, p)};
    o.code = math_failure;
    return o;
  }
  const Utility& u = *ql.utility;
  const auto result = argmax_over_downset(u, s);
  const auto localization = check_argmax_localization(u, s.members());
  bool ok = localization.pass;
  o.report["argmax"] = to_json(result, p);
  o.report["localization"] = to_json(localization, p);
  if (!s.generators().empty()) {
    const auto via = argmax_via_generators(u, s.generators());
    o.report["via_generators"] = to_json(via, p);
    ok = ok && via.value == result.value;
  }
  if (result.value) {
    o.text.push_back("value: " + to_string(*result.value));
    o.text.push_back("maximizers: " + join_ids(p, result.maximizers));
    if (result.largest_efficient) o.text.push_back("largest efficient: " + p.id(*result.largest_efficient));
    if (result.maximal_maximizer) o.text.push_back("maximal maximizer: " + p.id(*result.maximal_maximizer));
  } else {
    o.text.push_back("argmax: empty");
  }
  o.text.push_back(cert_line(localization, p));
  o.report["verdict"] = verdict(ok);
  o.text.insert(o.text.begin(), "verdict: " + verdict(ok));
  o.code = ok ? pass : math_failure;
  return o;
}

std::vector<std::size_t> parse_order(const std::string& text, std::size_t arity) {
  std::vector<std::size_t> order;
  if (text.empty()) return order;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long k = 0;
    try {
      k = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw io::InputError("--order: expected comma-separated axis numbers, got \"" + text + "\"");
    }
    if (pos != item.size() || k < 1 || k > arity) throw io::InputError("--order: axis out of range in \"" + text + "\"");
    order.push_back(k - 1);
  }
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() != arity || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw io::InputError("--order: \"" + text + "\" is not a permutation of 1.." + std::to_string(arity));
  }
  return order;
}

Outcome run_refine(const Config& cfg) {
  Outcome o;
  o.report = header("refine");
  const auto loaded = io::load_utility(cfg.utility);
  if (!loaded.space) throw io::InputError(cfg.utility + ": refine needs a utility on a product");
  const ProductSpace& space = *loaded.space;
  const auto& p = space.poset();
  if (cfg.sets.size() != space.arity()) {
    throw io::InputError("--sets: expected " + std::to_string(space.arity()) + " files, got " +
                         std::to_string(cfg.sets.size()));
  }
  std::vector<DownSet> sets;
  std::vector<ElementSet> per_axis;
  for (std::size_t i = 0; i < cfg.sets.size(); ++i) {
    sets.push_back(io::load_downset(cfg.sets[i], space.factor(i)));
    per_axis.push_back(sets.back().members());
  }
  const auto order = parse_order(cfg.order, space.arity());
  const ElementSet product = space.product_set(per_axis);
  const Element start = cfg.start.empty() ? maximal_argmax(loaded.utility, product) : load_point_arg(cfg.start, p);
  try {
    const auto trace = efficient_refinement(space, loaded.utility, sets, start, order);
    o.report["trace"] = to_json(trace, space);
    const bool ok = trace.checks.all();
    o.report["verdict"] = verdict(ok);
    o.text.push_back("verdict: " + verdict(ok));
    o.text.push_back("start: " + p.id(trace.start));
    for (const auto& step : trace.steps) {
      o.text.push_back("  axis " + std::to_string(step.axis + 1) + ": " + space.factor(step.axis).id(step.from) +
                       " -> " + space.factor(step.axis).id(step.to) + "  point " + p.id(step.point));
    }
    o.text.push_back("result: " + p.id(trace.result));
    o.text.push_back(std::string("checks: argmax ") + verdict(trace.checks.argmax) + ", dominated " +
                     verdict(trace.checks.dominated) + ", efficient " + verdict(trace.checks.efficient) +
                     ", invariants " + verdict(trace.checks.invariants));
    if (!trace.failure.empty()) o.text.push_back("failure: " + trace.failure);
    o.code = ok ? pass : math_failure;
  } catch (const PreconditionError& e) {
    o.report["verdict"] = "fail";
    o.report["error"] = e.what();
    o.text = {"verdict: fail", std::string("precondition: ") + e.what()};
    o.code = math_failure;
  } catch (const CertificationError& e) {
    o.report["verdict"] = "fail";
    o.report["error"] = e.what();
    o.report["certificate"] = to_json(e.certificate(), p);
    o.text = {"verdict: fail", std::string("partial utility: ") + e.what()};
    o.code = math_failure;
  }
  return o;
}

Outcome run_decompose(const Config& cfg) {
  Outcome o;
  o.report = header("decompose");
  const auto loaded = io::load_utility(cfg.utility);
  if (!loaded.space) throw io::InputError(cfg.utility + ": decompose needs a utility on a product");
  const ProductSpace& space = *loaded.space;
  const auto& p = space.poset();
  const Element upper = load_point_arg(cfg.upper, p);
  const ElementSet subset = load_subset(cfg.subset, p);
  try {
    const auto d = min_decompose(space, loaded.utility, subset, upper);
    json factors = json::array();
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
      json table = json::object();
      std::string line = "  u" + std::to_string(i + 1) + ":";
      for (Element t = 0; t < d.factors[i].size(); ++t) {
        table[space.factor(i).id(t)] = to_string(d.factors[i].evaluate(t));
        line += " " + space.factor(i).id(t) + "->" + to_string(d.factors[i].evaluate(t));
      }
      factors.push_back(std::move(table));
      o.text.push_back(line);
    }
    o.report["upper"] = p.id(upper);
    o.report["factors"] = std::move(factors);
    o.report["exact"] = d.exact();
    o.report["violation"] = d.violation ? json(p.id(*d.violation)) : json(nullptr);
    if (d.violation) o.text.push_back("violation at " + p.id(*d.violation));
    o.report["verdict"] = verdict(d.exact());
    o.text.insert(o.text.begin(), "verdict: " + verdict(d.exact()));
    o.code = d.exact() ? pass : math_failure;
  } catch (const NotUpperBoundError& e) {
    o.report["verdict"] = "fail";
    o.report["error"] = e.what();
    o.report["witness"] = p.id(e.member());
    o.text = {"verdict: fail", std::string("upper bound: ") + e.what()};
    o.code = math_failure;
  }
  return o;
}

Outcome run_corpus_command(const Config& cfg) {
  Outcome o;
  o.report = header("corpus");
  o.report["seed"] = cfg.seed;
  o.report["n"] = cfg.n;
  const auto suites = run_corpus(CorpusOptions{cfg.seed, cfg.n, cfg.mutate});
  json list = json::array();
  std::size_t total = 0;
  o.text.push_back("seed " + std::to_string(cfg.seed) + ", n " + std::to_string(cfg.n));
  for (const auto& s : suites) {
    json entry{{"name", s.name}, {"instances", s.instances}, {"inconsistencies", s.inconsistencies}};
    std::string line = "  " + s.name + ": " + std::to_string(s.instances) + " instances, " +
                       std::to_string(s.inconsistencies) + " inconsistencies";
    if (s.first_failure) {
      entry["first_failure"] = {{"index", *s.first_failure}, {"detail", s.detail}};
      line += " (first at " + std::to_string(*s.first_failure) + ": " + s.detail + ")";
    }
    total += s.inconsistencies;
    list.push_back(std::move(entry));
    o.text.push_back(line);
  }
  o.report["suites"] = std::move(list);
  o.report["inconsistencies"] = total;
  o.report["verdict"] = verdict(total == 0);
  o.text.insert(o.text.begin(), "verdict: " + verdict(total == 0));
  o.code = total == 0 ? pass : math_failure;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi-Leontief utilities on finite posets", "qleontief"};
  app.require_subcommand(1);
  Config cfg;
  app.add_flag("--json", cfg.json_output, "Emit the JSON report");
  app.add_flag("--quiet", cfg.quiet, "Suppress the report; only the exit code matters");
  app.add_option("--tolerance", cfg.tolerance, "Tolerance for closed-form comparisons")->check(CLI::NonNegativeNumber);

  auto* check = app.add_subcommand("check", "Certify a utility");
  check->add_option("utility", cfg.utility, "Utility file")->required();
  auto* efficient = app.add_subcommand("efficient", "List efficient points");
  efficient->add_option("utility", cfg.utility, "Utility file")->required();
  efficient->add_option("--subset", cfg.subset, "Restrict to a subset file");
  auto* maximize = app.add_subcommand("maximize", "Maximize over a down-set");
  maximize->add_option("utility", cfg.utility, "Utility file")->required();
  maximize->add_option("--downset", cfg.downset, "Down-set file")->required();
  auto* refine = app.add_subcommand("refine", "Refine a maximizer into an efficient maximizer");
  refine->add_option("utility", cfg.utility, "Utility file")->required();
  refine->add_option("--sets", cfg.sets, "One down-set file per factor")->required();
  refine->add_option("--start", cfg.start, "Starting maximizer file");
  refine->add_option("--order", cfg.order, "Axis order, e.g. 2,1");
  auto* decompose = app.add_subcommand("decompose", "Min-decomposition below an upper bound");
  decompose->add_option("utility", cfg.utility, "Utility file")->required();
  decompose->add_option("--upper", cfg.upper, "Upper bound point file")->required();
  decompose->add_option("--subset", cfg.subset, "Subset file")->required();
  auto* corpus = app.add_subcommand("corpus", "Run the seeded equivalence suites");
  corpus->add_option("--n", cfg.n, "Instances per suite")->capture_default_str();
  corpus->add_option("--seed", cfg.seed, "Corpus seed")->envname("QL_SEED")->capture_default_str();
  corpus->add_flag("--mutate", cfg.mutate, "Corrupt one dual entry (self-test)");

  for (auto* sub : {check, efficient, maximize, refine, decompose, corpus}) {
    sub->add_flag("--json", cfg.json_output, "Emit the JSON report");
    sub->add_flag("--quiet", cfg.quiet, "Suppress the report");
    sub->add_option("--tolerance", cfg.tolerance, "Tolerance for closed-form comparisons")
        ->check(CLI::NonNegativeNumber);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? pass : input_error;
  }

  Outcome o;
  try {
    if (check->parsed()) o = run_check(cfg);
    else if (efficient->parsed()) o = run_efficient(cfg);
    else if (maximize->parsed()) o = run_maximize(cfg);
    else if (refine->parsed()) o = run_refine(cfg);
    else if (decompose->parsed()) o = run_decompose(cfg);
    else o = run_corpus_command(cfg);
  } catch (const io::InputError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  if (!cfg.quiet) {
    if (cfg.json_output) {
      out << o.report.dump(2) << "\n";
    } else {
      for (const auto& line : o.text) out << line << "\n";
    }
  }
  return o.code;
}

}  // namespace qleontief::cli
