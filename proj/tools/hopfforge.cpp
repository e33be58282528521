// Command-line front end. Exit codes: 0 success, 1 a verification failed,
// 2 invalid input.

#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "hopfforge/json_io.hpp"

using namespace hopfforge;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int m = 12;
  bool allow_small = false;
  std::string set = "J";
  int max_rank = 2;
  std::string object = "bosonization";
  std::string basis = "theta";
  std::string kind;
  std::string I;
  std::string L;
  std::string zeta, mu, nu, tau;
  std::string lifting_file;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string input;
  std::string suite = "all";
  std::string presented;
  std::string deformed;
};

std::vector<int> ints_in(const std::string& s) {
  std::vector<int> out;
  static const std::regex num("-?[0-9]+");
  for (auto it = std::sregex_iterator(s.begin(), s.end(), num); it != std::sregex_iterator(); ++it)
    out.push_back(std::stoi(it->str()));
  return out;
}

std::vector<IndexPair> parse_pairs(const std::string& s) {
  std::vector<int> v = ints_in(s);
  if (v.size() % 2 != 0) throw ParseError("I must be a list of pairs (i,k)");
  std::vector<IndexPair> out;
  for (std::size_t j = 0; j < v.size(); j += 2) out.emplace_back(v[j], v[j + 1]);
  return out;
}

CycScalar parse_rational(const std::string& s) {
  try {
    mpq_class q(s, 10);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return CycScalar::from_mpq(q);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad coefficient '" + s + "'");
  }
}

// "i,k,q=c; ..." into (keys, coefficient)
std::vector<std::pair<std::vector<int>, CycScalar>> parse_assignments(const std::string& s, std::size_t arity) {
  std::vector<std::pair<std::vector<int>, CycScalar>> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in '" + item + "'");
    std::vector<int> key = ints_in(item.substr(0, eq));
    if (key.size() != arity) throw ParseError("wrong number of indices in '" + item + "'");
    std::string val = item.substr(eq + 1);
    val.erase(0, val.find_first_not_of(" \t"));
    val.erase(val.find_last_not_of(" \t") + 1);
    out.emplace_back(key, parse_rational(val));
  }
  return out;
}

GroupDatum group(const Options& o) { return GroupDatum::make(o.m, o.allow_small); }

Family default_family(const Options& o) {
  if (!o.kind.empty()) {
    if (o.kind.size() != 1) throw InvalidLiftingData("kind must be A, B or C");
    return family_from_char(o.kind[0]);
  }
  bool hasI = !ints_in(o.I).empty();
  bool hasL = !ints_in(o.L).empty();
  if (hasI && hasL) return Family::C;
  return hasL ? Family::B : Family::A;
}

LiftingData lifting_from_options(const Options& o, const GroupDatum& g) {
  if (!o.lifting_file.empty()) return validate_lifting(g, lifting_from_json(read_file(o.lifting_file)));
  Family f = default_family(o);
  IndexDatumI I{parse_pairs(o.I)};
  IndexDatumL L{ints_in(o.L)};
  LiftingData d = o.seed ? random_lifting(g, f, I, L, *o.seed) : zero_lifting(g, f, I, L);
  for (const auto& [k, c] : parse_assignments(o.zeta, 3)) d.zeta[{k[0], k[1], k[2]}] = c;
  for (const auto& [k, c] : parse_assignments(o.mu, 2)) d.mu[{k[0], k[1]}] = c;
  for (const auto& [k, c] : parse_assignments(o.nu, 2)) d.nu[{k[0], k[1]}] = c;
  for (const auto& [k, c] : parse_assignments(o.tau, 2)) d.tau[{k[0], k[1]}] = c;
  return validate_lifting(g, d);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) return;
  write_file(o.out, text);
  std::cout << "wrote " << o.out << "\n";
}

std::string pairs_str(const IndexDatumI& I) {
  std::string s;
  for (auto [i, k] : I.pairs) s += "(" + std::to_string(i) + "," + std::to_string(k) + ")";
  return s.empty() ? "-" : s;
}
std::string ells_str(const IndexDatumL& L) {
  std::string s;
  for (int l : L.ells) s += "(" + std::to_string(l) + ")";
  return s.empty() ? "-" : s;
}

void print_lifting(const LiftingData& d) {
  std::cout << "family " << family_char(d.kind) << "  m=" << d.m << "  I=" << pairs_str(d.I) << "  L=" << ells_str(d.L)
            << "\n";
  for (const auto& [k, c] : d.zeta)
    std::cout << "  zeta(" << k[0] << "," << k[1] << "," << k[2] << ") = " << c.pretty() << "\n";
  for (const auto& [k, c] : d.mu) std::cout << "  mu(" << k.first << "," << k.second << ") = " << c.pretty() << "\n";
  for (const auto& [k, c] : d.nu) std::cout << "  nu(" << k.first << "," << k.second << ") = " << c.pretty() << "\n";
  for (const auto& [k, c] : d.tau) std::cout << "  tau(" << k.first << "," << k.second << ") = " << c.pretty() << "\n";
}

std::string first_witness(const Report& r) {
  for (const auto& c : r.checks)
    if (!c.pass) return c.witness;
  return {};
}

// ---------------------------------------------------------------- commands

int cmd_enumerate(const Options& o) {
  GroupDatum g = group(o);
  nlohmann::json rows = nlohmann::json::array();
  if (o.set == "J") {
    for (auto [i, k] : enumerate_J(g)) {
      std::cout << i << "\t" << k << "\n";
      rows.push_back({i, k});
    }
  } else if (o.set == "I") {
    for (const auto& I : enumerate_I(g, o.max_rank)) {
      std::cout << pairs_str(I) << "\n";
      nlohmann::json r = nlohmann::json::array();
      for (auto [i, k] : I.pairs) r.push_back({i, k});
      rows.push_back(r);
    }
  } else if (o.set == "L") {
    for (const auto& L : enumerate_L(g, o.max_rank)) {
      std::cout << ells_str(L) << "\n";
      rows.push_back(L.ells);
    }
  } else if (o.set == "K") {
    for (const auto& K : enumerate_K(g, o.max_rank)) {
      std::cout << pairs_str(K.I) << "\t" << ells_str(K.L) << "\n";
      nlohmann::json r = nlohmann::json::array();
      for (auto [i, k] : K.I.pairs) r.push_back({i, k});
      rows.push_back({{"I", r}, {"L", K.L.ells}});
    }
  } else {
    throw ParseError("--set must be J, I, L or K");
  }
  std::cout << rows.size() << " rows\n";
  nlohmann::json doc = {{"schema", "enumeration/v1"}, {"m", g.m}, {"set", o.set}, {"max_rank", o.max_rank}, {"rows", rows}};
  emit(o, doc.dump() + "\n");
  return 0;
}

int cmd_construct(const Options& o) {
  GroupDatum g = group(o);
  auto F = function_algebra(g);
  const std::string& obj = o.object;
  if (obj == "H") {
    emit(o, hopfdata_to_json(o.basis == "phi" ? F->phi : F->theta, "function-algebra"));
    std::cout << "k^{D_" << g.m << "}: dim " << F->dim() << "\n";
    return 0;
  }
  if (obj == "group-algebra") {
    HopfData K = build_group_algebra(g);
    emit(o, hopfdata_to_json(K, "group-algebra"));
    std::cout << "kD_" << g.m << ": dim " << K.dim << "\n";
    return 0;
  }
  IndexDatumI I{parse_pairs(o.I)};
  IndexDatumL L{ints_in(o.L)};
  const HBasis basis = o.basis == "phi" ? HBasis::Phi : HBasis::Theta;
  auto module = [&](HBasis b) {
    if (I.pairs.empty() && L.ells.empty()) throw ParseError("--I or --L is required");
    if (L.ells.empty()) return build_M_I(g, validate_I(g, I.pairs), b);
    if (I.pairs.empty()) return build_M_L(g, validate_L(g, L.ells), b);
    return build_M_IL(g, validate_K(g, I.pairs, L.ells), b);
  };
  if (obj == "module") {
    YDModule M = module(basis);
    emit(o, ydmodule_to_json(M));
    std::cout << "module: dim " << M.dim << "\n";
    return 0;
  }
  if (obj == "nichols") {
    NicholsData B = build_nichols(module(HBasis::Theta));
    emit(o, nichols_to_json(B));
    std::cout << "Nichols algebra: dim " << B.dim << "\n";
    return 0;
  }
  if (obj == "bosonization") {
    LiftingData d = zero_lifting(g, default_family(o), I, L);
    Bosonization X = bosonize(build_nichols(family_module(g, d)));
    emit(o, hopfdata_to_json(X.A, "bosonization", &d));
    std::cout << "bosonization: dim " << X.A.dim << "\n";
    return 0;
  }
  if (obj == "presented") {
    LiftingData d = lifting_from_options(o, g);
    PresentedAlgebra P = build_presented(g, d);
    print_lifting(P.data);
    std::cout << P.confluence.to_text();
    for (const auto& label : P.relation_labels) std::cout << "  relation " << label << "\n";
    emit(o, hopfdata_to_json(P.A, "presented", &P.data));
    std::cout << "presented algebra: dim " << P.A.dim << "\n";
    return 0;
  }
  throw ParseError("unknown object '" + obj + "' (H, group-algebra, module, nichols, bosonization, presented)");
}

int cmd_deform(const Options& o) {
  GroupDatum g = group(o);
  LiftingData d = lifting_from_options(o, g);
  print_lifting(d);
  DeformationRun run = run_deformation(g, d);
  Report r = run.report;
  r.title = "deformation";
  r.add("comultiplication unchanged", run.D.comult == run.X.A.comult);
  r.add("graded infinitesimal part equals eta~", homogeneous_component(run.X.A, run.sigma, 2) == run.eta_tilde);
  Report inv = inverse_via_antipode(run.X.A, run.sigma, run.sigma_inv);
  std::cout << r.to_text();
  std::cout << "note: sigma^{-1}(a,b) = sigma(S(a),b) " << (inv.ok() ? "holds" : "does not hold")
            << (inv.ok() ? "" : " (witness " + first_witness(inv) + ")") << "; sigma^{-1} is exp(-eta~)\n";
  std::cout << "deformed algebra: dim " << run.D.dim << "\n";
  emit(o, hopfdata_to_json(run.D, "deformed", &run.data));
  return r.ok() ? 0 : 1;
}

struct Loaded {
  std::string schema;
  std::optional<HopfDocument> hopf;
  std::optional<YDModule> module;
  std::optional<NicholsData> nichols;
  std::optional<LiftingData> lifting;
};

Loaded load(const std::string& path) {
  std::string text = read_file(path);
  Loaded l;
  l.schema = schema_of(text);
  if (l.schema == "hopfdata/v1") {
    l.hopf = hopfdata_from_json(text);
    l.lifting = l.hopf->lifting;
  } else if (l.schema == "ydmodule/v1") {
    l.module = ydmodule_from_json(text);
  } else if (l.schema == "nichols/v1") {
    l.nichols = nichols_from_json(text);
  } else if (l.schema == "liftingdata/v1") {
    l.lifting = lifting_from_json(text);
  } else {
    throw ParseError("unsupported schema " + l.schema);
  }
  return l;
}

int cmd_verify(const Options& o) {
  static const std::set<std::string> suites{"hopf", "yd", "nichols", "cocycle", "coradical", "all"};
  if (!suites.count(o.suite)) throw ParseError("unknown suite " + o.suite);
  Loaded l = load(o.input);
  const bool all = o.suite == "all";
  std::optional<GroupDatum> g;
  std::optional<LiftingData> d;
  if (l.lifting) {
    g = GroupDatum::make(l.lifting->m, true);
    d = validate_lifting(*g, *l.lifting);
  }
  std::vector<Report> reports;
  bool ran = false;
  auto want = [&](const char* s) { return all || o.suite == s; };
  std::optional<DeformationRun> run;
  auto get_run = [&]() -> DeformationRun& {
    if (!run) run = run_deformation(*g, *d);
    return *run;
  };

  if (want("hopf")) {
    const HopfData* A = nullptr;
    if (l.hopf) A = &l.hopf->A;
    else if (l.schema == "liftingdata/v1") A = &get_run().D;
    if (A) {
      Report r = verify_hopf(*A);
      r.title = "hopf";
      reports.push_back(r);
      ran = true;
    }
  }
  if (want("yd")) {
    if (l.module) {
      Report r = verify_yd(*l.module);
      r.title = "yd";
      reports.push_back(r);
      ran = true;
    } else if (l.nichols) {
      Report r = verify_yd(l.nichols->M);
      r.merge(verify_yd(l.nichols->yd), "B.");
      r.title = "yd";
      reports.push_back(r);
      ran = true;
    } else if (d) {
      Report r = verify_yd(family_module(*g, *d));
      r.title = "yd";
      reports.push_back(r);
      ran = true;
    }
  }
  if (want("nichols")) {
    std::optional<NicholsData> B = l.nichols;
    if (!B && d) B = build_nichols(family_module(*g, *d));
    if (B) {
      Report r = verify_nichols(*B);
      r.title = "nichols";
      const long expect = 1L << B->d;
      r.add("dim B = 4^rank", B->dim == expect, B->dim == expect ? "" : std::to_string(B->dim));
      r.add("braided primitives = M", braided_primitives(*B).dim() == B->d);
      Bosonization X = bosonize(*B);
      r.merge(verify_bosonization(X), "bosonization.");
      r.add("coradical of B#H is degree 0", coradical_check(X.A, *X.F).ok());
      if (l.hopf && l.hopf->construction == "bosonization")
        r.add("stored algebra equals the bosonization", l.hopf->A.mult == X.A.mult && l.hopf->A.comult == X.A.comult);
      reports.push_back(r);
      ran = true;
    }
  }
  if (want("cocycle") && d) {
    DeformationRun& R = get_run();
    Report r = R.report;
    r.title = "cocycle";
    r.add("graded infinitesimal part equals eta~", homogeneous_component(R.X.A, R.sigma, 2) == R.eta_tilde);
    r.add("comultiplication unchanged", R.D.comult == R.X.A.comult);
    r.merge(check_valued_hochschild_cocycle(R.X.A, connecting_map(R.X.A, R.eta_tilde)), "connecting map.");
    if (l.hopf && l.hopf->construction == "deformed")
      r.add("stored algebra equals the deformation", l.hopf->A.mult == R.D.mult && l.hopf->A.antipode == R.D.antipode &&
                                                          l.hopf->A.comult == R.D.comult);
    if (l.hopf && l.hopf->construction == "presented") {
      PresentedAlgebra P = build_presented(*g, *d);
      r.merge(hopf_ideal_check(P), "presentation.");
      r.add("stored algebra equals the presentation", l.hopf->A.mult == P.A.mult && l.hopf->A.comult == P.A.comult);
    }
    reports.push_back(r);
    ran = true;
  }
  if (want("coradical")) {
    const HopfData* A = nullptr;
    if (l.hopf) A = &l.hopf->A;
    else if (l.schema == "liftingdata/v1") A = &get_run().D;
    if (A && A->m > 0 && A->dim % (2 * A->m) == 0) {
      GroupDatum gg = GroupDatum::make(A->m, true);
      Report r = coradical_check(*A, *function_algebra(gg));
      reports.push_back(r);
      ran = true;
    }
  }
  if (!ran) throw ParseError("suite " + o.suite + " does not apply to a " + l.schema + " document");
  bool ok = true;
  for (const auto& r : reports) {
    std::cout << r.to_text();
    ok = ok && r.ok();
  }
  std::cout << (ok ? "all checks passed" : "verification FAILED") << "\n";
  return ok ? 0 : 1;
}

int cmd_compare(const Options& o) {
  Loaded p = load(o.presented);
  Loaded q = load(o.deformed);
  if (!p.lifting) throw ParseError(o.presented + " carries no lifting data");
  if (!q.hopf && !q.lifting) throw ParseError(o.deformed + " is neither an algebra nor lifting data");
  GroupDatum g = GroupDatum::make(p.lifting->m, true);
  PresentedAlgebra P = build_presented(g, *p.lifting);
  Report pre;
  pre.title = "inputs";
  if (p.hopf) pre.add("presented file matches its lifting data", p.hopf->A.mult == P.A.mult && p.hopf->A.comult == P.A.comult);
  HopfData D = q.hopf ? q.hopf->A : run_deformation(GroupDatum::make(q.lifting->m, true), *q.lifting).D;
  std::cout << pre.to_text();
  try {
    Report r = compare_presentation_vs_deformation(P, D);
    std::cout << r.to_text();
    bool ok = r.ok() && pre.ok();
    std::cout << (ok ? "isomorphic" : "NOT isomorphic") << "\n";
    return ok ? 0 : 1;
  } catch (const MismatchWitness& e) {
    std::cout << "FAIL  relation of the presentation violated\n      witness: " << e.what() << "\n";
    return 1;
  }
}

int cmd_menu(const Options& o) {
  GroupDatum g = group(o);
  auto menu = classify_menu(g, o.max_rank);
  nlohmann::json rows = nlohmann::json::array();
  std::cout << "family\tI\tL\tdim\tparameters\n";
  for (const auto& e : menu) {
    std::cout << e.family << "\t" << pairs_str(e.I) << "\t" << ells_str(e.L) << "\t" << e.dim << "\t" << e.parameters << "\n";
    nlohmann::json I = nlohmann::json::array();
    for (auto [i, k] : e.I.pairs) I.push_back({i, k});
    rows.push_back({{"family", e.family}, {"I", I}, {"L", e.L.ells}, {"dim", e.dim}, {"parameters", e.parameters}});
  }
  std::cout << menu.size() << " entries\n";
  nlohmann::json doc = {{"schema", "menu/v1"}, {"m", g.m}, {"max_rank", o.max_rank}, {"entries", rows}};
  emit(o, doc.dump() + "\n");
  return 0;
}

int cmd_export(const Options& o) {
  std::string text = read_file(o.input);
  std::string schema = schema_of(text);
  std::string out;
  if (schema == "hopfdata/v1") {
    HopfDocument doc = hopfdata_from_json(text);
    out = hopfdata_to_json(doc.A, doc.construction, doc.lifting ? &*doc.lifting : nullptr);
  } else if (schema == "ydmodule/v1") {
    out = ydmodule_to_json(ydmodule_from_json(text));
  } else if (schema == "nichols/v1") {
    out = nichols_to_json(nichols_from_json(text));
  } else if (schema == "liftingdata/v1") {
    out = lifting_to_json(lifting_from_json(text));
  } else {
    throw ParseError("unsupported schema " + schema);
  }
  if (o.out.empty()) std::cout << out;
  else emit(o, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hopfforge: exact computations with copointed Hopf algebras over k^{D_m}"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--m", o.m, "group parameter (m = 4a >= 12)");
    c->add_flag("--allow-small-m", o.allow_small, "accept m below 12 (experiments only)");
  };
  auto lifting = [&](CLI::App* c) {
    c->add_option("--kind", o.kind, "family A, B or C");
    c->add_option("--I", o.I, "index pairs, e.g. \"(2,3),(2,9)\"");
    c->add_option("--L", o.L, "odd indices, e.g. \"3,3\"");
    c->add_option("--zeta", o.zeta, "\"i,k,q=c; ...\"");
    c->add_option("--mu", o.mu, "\"l,t=c; ...\"");
    c->add_option("--nu", o.nu, "\"l,t=c; ...\"");
    c->add_option("--tau", o.tau, "\"l,t=c; ...\"");
    c->add_option("--lifting", o.lifting_file, "liftingdata/v1 file");
    c->add_option("--seed", o.seed, "random lifting data from this seed");
  };
  auto* en = app.add_subcommand("enumerate", "list index data");
  common(en);
  en->add_option("--set", o.set, "J, I, L or K");
  en->add_option("--max-rank", o.max_rank, "maximal length");
  en->add_option("--out", o.out, "JSON output");

  auto* co = app.add_subcommand("construct", "build an object and export it");
  common(co);
  lifting(co);
  co->add_option("--object", o.object, "H, group-algebra, module, nichols, bosonization, presented");
  co->add_option("--basis", o.basis, "theta or phi (H and modules)");
  co->add_option("--out", o.out, "JSON output");

  auto* de = app.add_subcommand("deform", "cocycle deformation by lifting data");
  common(de);
  lifting(de);
  de->add_option("--out", o.out, "JSON output");

  auto* ve = app.add_subcommand("verify", "run verification suites on a JSON document");
  ve->add_option("file", o.input, "input JSON")->required();
  ve->add_option("--suite", o.suite, "hopf, yd, nichols, cocycle, coradical or all");
  ve->add_flag("--allow-small-m", o.allow_small, "accepted for symmetry with other commands");

  auto* cm = app.add_subcommand("compare", "presentation against deformation");
  cm->add_option("--presented", o.presented, "presented algebra or lifting data")->required();
  cm->add_option("--deformed", o.deformed, "deformed algebra or lifting data")->required();

  auto* me = app.add_subcommand("classify-menu", "families with dimensions and parameter counts");
  common(me);
  me->add_option("--max-rank", o.max_rank, "maximal |I|+|L|");
  me->add_option("--out", o.out, "JSON output");

  auto* ex = app.add_subcommand("export", "rewrite a JSON document canonically");
  ex->add_option("file", o.input, "input JSON")->required();
  ex->add_option("--out", o.out, "output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*en) return cmd_enumerate(o);
    if (*co) return cmd_construct(o);
    if (*de) return cmd_deform(o);
    if (*ve) return cmd_verify(o);
    if (*cm) return cmd_compare(o);
    if (*me) return cmd_menu(o);
    if (*ex) return cmd_export(o);
  } catch (const CocycleCheckFailed& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const NotACocycle& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const ConfluenceFailure& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const MismatchWitness& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
