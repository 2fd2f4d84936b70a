#include "commands.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "qbt/random.hpp"

namespace qbt::cli {

namespace {

struct RunConfig {
  std::string field_text = "fp:" + std::to_string(kDefaultPrime);
  Field field = Field::prime(kDefaultPrime);
  std::uint64_t seed = 0;
  std::size_t trials = 200;
  bool certify = false;
  bool json_output = false;
};

struct Outcome {
  json input = json::object();
  json result = json::object();
  std::vector<std::string> lines;
  int exit = kPass;
};

DimensionVector parse_dims(const std::string& text) {
  DimensionVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad integer '" + item + "' in '" + text + "'");
    }
    if (v.back() < 0) throw InputError("dimensions must be non-negative");
  }
  if (v.empty()) throw InputError("empty dimension list");
  return v;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (long long x : parse_dims(text)) out.push_back(static_cast<int>(x));
  return out;
}

std::string join(const DimensionVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

FiberOptions fiber_options(const RunConfig& cfg) {
  FiberOptions o;
  o.trials = cfg.trials;
  o.seed = cfg.seed;
  o.certify = cfg.certify;
  return o;
}

/// 1 on failure, 3 when certification was requested but not obtained, else 0.
int fiber_exit(const FiberReport& r, bool certify) {
  if (!r.passed()) return kNegative;
  if (certify && r.certification != CertificationStatus::Certified) return kInconclusive;
  return kPass;
}

std::string fiber_line(const std::string& label, const FiberReport& r) {
  std::string s = label + ": " + to_string(r.verdict) + " (" + std::to_string(r.samples) + " samples, certification " +
                  to_string(r.certification) + ")";
  if (r.witness) {
    s += " witness [";
    for (std::size_t i = 0; i < r.witness->size(); ++i) s += (i ? "," : "") + std::to_string((*r.witness)[i].residue());
    s += "]";
  }
  return s;
}

json morphism_json(const Morphism& f) {
  json j = json::array();
  for (const auto& m : f) j.push_back({{"rows", m.rows()}, {"cols", m.cols()}, {"data", to_json(m)}});
  return j;
}

Representation load_rep(const std::string& path, const RunConfig& cfg) { return representation_from_json(read_json_file(path), cfg.field); }

// --- subcommands -------------------------------------------------------------

Outcome cmd_form(const RunConfig&, const std::string& quiver, const std::string& dims, const std::string& dims2) {
  Outcome o;
  const Quiver q = parse_quiver_spec(quiver);
  const DimensionVector v = parse_dims(dims);
  if (v.size() != static_cast<std::size_t>(q.vertex_count())) throw InputError("dims must have one entry per vertex");
  o.input = {{"quiver", quiver}, {"dims", v}};
  const long long qv = tits_form(q, v);
  o.result["q"] = qv;
  o.result["kac_forces_decomposable"] = kac_forces_decomposable(q, v);
  o.lines.push_back("q=" + std::to_string(qv));
  if (!dims2.empty()) {
    const DimensionVector w = parse_dims(dims2);
    if (w.size() != v.size()) throw InputError("dims2 must have one entry per vertex");
    o.input["dims2"] = w;
    const long long e = euler_form(q, v, w);
    o.result["euler"] = e;
    o.lines.push_back("<v,w>=" + std::to_string(e));
  }
  if (q.vertex_count() == 2 && q.arrow_count() >= 3 && q == kronecker(static_cast<int>(q.arrow_count()))) {
    o.result["schur_root"] = kronecker_is_schur_root(static_cast<int>(q.arrow_count()), v);
  }
  if (qv > 1) o.lines.push_back("q > 1: every representation of dimension " + join(v) + " decomposes");
  return o;
}

Outcome cmd_rep_hom(const RunConfig& cfg, const std::string& in, const std::string& in2) {
  Outcome o;
  const Representation r1 = load_rep(in, cfg);
  const Representation r2 = in2.empty() ? r1 : load_rep(in2, cfg);
  o.input = {{"rep1", to_json(r1)}, {"rep2", to_json(r2)}};
  const auto basis = hom_basis(r1, r2);
  json b = json::array();
  for (const auto& f : basis) b.push_back(morphism_json(f));
  o.result = {{"hom_dim", basis.size()}, {"basis", b}};
  o.lines.push_back("dim Hom = " + std::to_string(basis.size()));
  return o;
}

Outcome cmd_rep_ext(const RunConfig& cfg, const std::string& in, const std::string& in2) {
  Outcome o;
  const Representation r1 = load_rep(in, cfg);
  const Representation r2 = in2.empty() ? r1 : load_rep(in2, cfg);
  if (!(r1.quiver() == r2.quiver())) throw InputError("representations live on different quivers");
  o.input = {{"rep1", to_json(r1)}, {"rep2", to_json(r2)}};
  const auto hom = static_cast<long long>(hom_basis(r1, r2).size());
  const long long ext = ext1_dim(r1, r2);
  const long long euler = euler_form(r1.quiver(), r1.dims(), r2.dims());
  o.result = {{"hom_dim", hom}, {"ext1_dim", ext}, {"euler", euler}, {"identity_holds", hom - ext == euler}};
  o.lines.push_back("dim Hom = " + std::to_string(hom) + ", dim Ext^1 = " + std::to_string(ext) + ", <v,w> = " + std::to_string(euler));
  if (hom - ext != euler) o.exit = kNegative;
  return o;
}

Outcome cmd_rep_decompose(const RunConfig& cfg, const std::string& in, const std::string& quiver, const std::string& dims, int max_trials) {
  Outcome o;
  Representation r;
  if (!in.empty()) {
    r = load_rep(in, cfg);
  } else {
    if (quiver.empty() || dims.empty()) throw InputError("rep-decompose needs --in or both --quiver and --dims");
    r = random_representation(parse_quiver_spec(quiver), parse_dims(dims), cfg.seed, cfg.field);
  }
  o.input = {{"rep", to_json(r)}, {"max_trials", max_trials}};
  const DecompositionReport rep = decompose(r, max_trials, cfg.seed);
  o.result = to_json(rep);
  o.result["verified"] = verify_decomposition(r, rep);
  o.lines.push_back(std::to_string(rep.summands.size()) + " summand(s), " + to_string(rep.certificate));
  for (std::size_t i = 0; i < rep.summands.size(); ++i) {
    o.lines.push_back("  (" + join(rep.summands[i].dims()) + ") " + to_string(rep.summand_certificates[i]));
  }
  if (rep.certificate == Certificate::HeuristicIndecomposable) o.exit = kInconclusive;
  return o;
}

Outcome cmd_check_fibers(const RunConfig& cfg, const std::string& in, const std::string& mode) {
  Outcome o;
  const PolyMatrix m = polymatrix_from_json(read_json_file(in), Field::rationals());
  o.input = {{"matrix", to_json(m)}, {"mode", mode}};
  const FiberReport r = global_full_rank(m, parse_fiber_mode(mode), fiber_options(cfg));
  o.result = to_json(r);
  o.lines.push_back(fiber_line(mode, r));
  if (!r.note.empty()) o.lines.push_back("note: " + r.note);
  o.exit = fiber_exit(r, cfg.certify);
  return o;
}

Outcome cmd_cokernel(const RunConfig& cfg, const std::string& pair_text, const std::string& rep_path, bool want_decompose, bool want_ext) {
  Outcome o;
  const LineBundlePair pair = parse_pair(pair_text);
  const Representation rep = load_rep(rep_path, cfg);
  o.input = {{"pair", {pair.n, pair.e, pair.f}}, {"rep", to_json(rep)}};
  const CokernelPresentation p = cokernel_from_rep(rep, pair, fiber_options(cfg));
  const CriteriaReport crit = cokernel_criteria(pair, p.a, p.b);
  o.result = {{"w", validate_pair(pair).w},
              {"a", p.a},
              {"b", p.b},
              {"rank", p.rank},
              {"chern", to_json(p.chern)},
              {"alpha", to_json(p.alpha)},
              {"injectivity", to_json(p.injectivity)},
              {"is_bundle", p.is_bundle()},
              {"criteria", to_json(crit)}};
  o.lines.push_back("rank " + std::to_string(p.rank) + ", c_t = " + p.chern.to_string() + ", q = " + std::to_string(crit.q));
  o.lines.push_back(fiber_line("injectivity", p.injectivity));
  for (const auto& n : crit.notes) o.lines.push_back("note: " + n);
  if (want_decompose) {
    const CokernelDecomposition d = decompose_cokernel(p, cfg.seed, kDefaultMaxTrials, fiber_options(cfg));
    json s = json::array();
    for (std::size_t i = 0; i < d.summands.size(); ++i) {
      s.push_back({{"a", d.summands[i].a}, {"b", d.summands[i].b}, {"rank", d.summands[i].rank}, {"free_factor", static_cast<bool>(d.free_factor[i])},
                   {"injectivity", to_json(d.summands[i].injectivity)}});
    }
    o.result["decomposition"] = {{"representation", to_json(d.rep_report)}, {"summands", s}, {"notes", d.notes}};
    o.lines.push_back(std::to_string(d.summands.size()) + " summand(s), " + to_string(d.rep_report.certificate));
  }
  if (want_ext) {
    ExtTable t = ext_table_cokernel(pair, p.a, p.b);
    t = pin_with_hom(t, global_hom_cokernel(p, p));
    o.result["ext_table"] = to_json(t);
    for (const auto& e : t.ext) o.lines.push_back("Ext^" + std::to_string(e.degree) + " = " + std::to_string(e.lo));
  }
  o.exit = fiber_exit(p.injectivity, cfg.certify);
  return o;
}

Outcome cmd_syzygy(const RunConfig& cfg, int n, const std::string& degrees_text, const std::string& rep_path, bool want_decompose) {
  Outcome o;
  const std::vector<int> degrees = parse_int_list(degrees_text);
  const Representation rep = load_rep(rep_path, cfg);
  o.input = {{"n", n}, {"degrees", degrees}, {"rep", to_json(rep)}};
  const SyzygyPresentation p = syzygy_from_rep(rep, n, degrees, fiber_options(cfg));
  const CriteriaReport crit = syzygy_decomposability(n, degrees, p.as, p.c);
  o.result = {{"arrow_counts", syzygy_arrow_counts(n, degrees)},
              {"multiplicities", p.as},
              {"c", p.c},
              {"rank", p.rank},
              {"chern", to_json(p.chern)},
              {"alpha", to_json(p.alpha)},
              {"surjectivity", to_json(p.surjectivity)},
              {"is_bundle", p.is_bundle()},
              {"criteria", to_json(crit)}};
  o.lines.push_back("rank " + std::to_string(p.rank) + ", c_t = " + p.chern.to_string() + ", q = " + std::to_string(crit.q));
  o.lines.push_back(fiber_line("surjectivity", p.surjectivity));
  if (want_decompose) {
    const SyzygyDecomposition d = decompose_syzygy(p, cfg.seed, kDefaultMaxTrials, fiber_options(cfg));
    json s = json::array();
    for (std::size_t i = 0; i < d.summands.size(); ++i) {
      s.push_back({{"multiplicities", d.summands[i].as}, {"c", d.summands[i].c}, {"rank", d.summands[i].rank},
                   {"free_factor", static_cast<bool>(d.free_factor[i])}, {"surjectivity", to_json(d.summands[i].surjectivity)}});
    }
    o.result["decomposition"] = {{"representation", to_json(d.rep_report)}, {"summands", s}};
    o.lines.push_back(std::to_string(d.summands.size()) + " summand(s), " + to_string(d.rep_report.certificate));
  }
  o.exit = fiber_exit(p.surjectivity, cfg.certify);
  return o;
}

Outcome cmd_monad(const RunConfig& cfg, const std::string& in, bool want_decompose, bool want_invariants) {
  Outcome o;
  const MonadData d = monad_from_json(read_json_file(in), Field::rationals());
  o.input = {{"monad", to_json(d)}};
  const RelationCheck rel = check_relations(d);
  json viol = json::array();
  for (std::size_t i = 0; i < rel.violations.size() && i < 20; ++i) {
    const auto& v = rel.violations[i];
    viol.push_back({{"k", v.k}, {"row", v.row}, {"col", v.col}, {"value", to_json(v.value)}});
  }
  o.result["relations"] = {{"ok", rel.ok}, {"violation_count", rel.violations.size()}, {"violations", viol}};
  o.lines.push_back(std::string("relations: ") + (rel.ok ? "hold" : "violated (" + std::to_string(rel.violations.size()) + " entries)"));
  const CriteriaReport crit = monad_decomposability(d.a, d.b, d.c, d.triple.m, d.triple.n);
  o.result["criteria"] = to_json(crit);
  o.lines.push_back("q = " + std::to_string(crit.q));

  const MonadFiberReport fib = monad_fibers(d, fiber_options(cfg));
  json fj = {{"note", fib.note}};
  if (fib.injectivity) fj["injectivity"] = to_json(*fib.injectivity);
  if (fib.surjectivity) fj["surjectivity"] = to_json(*fib.surjectivity);
  o.result["fibers"] = fj;
  if (fib.injectivity) o.lines.push_back(fiber_line("alpha injectivity", *fib.injectivity));
  if (fib.surjectivity) o.lines.push_back(fiber_line("beta surjectivity", *fib.surjectivity));
  if (!fib.note.empty()) o.lines.push_back("note: " + fib.note);

  if (want_invariants) {
    const MonadCohomologyInfo info = cohomology_invariants(d);
    o.result["invariants"] = {{"rank", info.rank}, {"chern", to_json(info.chern)}, {"chern_consistent", info.chern_consistent}};
    o.lines.push_back("cohomology rank " + std::to_string(info.rank) + ", c_t = " + info.chern.to_string());
  }
  if (want_decompose) {
    const MonadDecomposition dec = decompose_monad(d, cfg.seed);
    const VerdictReport v = cohomology_decomposability_verdict(d, dec);
    json s = json::array();
    for (const auto& x : dec.summands) {
      s.push_back({{"dims", {x.data.a, x.data.b, x.data.c}}, {"kind", to_string(x.kind)}, {"certificate", to_string(x.certificate)},
                   {"relations_ok", x.relations_ok}, {"rank", x.rank}});
    }
    o.result["decomposition"] = {{"representation", to_json(dec.rep_report)}, {"summands", s}};
    o.result["verdict"] = {{"verdict", to_string(v.verdict)}, {"block_mode", v.block_mode}, {"summand_ranks", v.summand_ranks},
                           {"explanation", v.explanation}};
    o.lines.push_back(to_string(v.verdict) + ": " + v.explanation);
  }
  bool fibers_ok = true;
  if (fib.injectivity && !fib.injectivity->passed()) fibers_ok = false;
  if (fib.surjectivity && !fib.surjectivity->passed()) fibers_ok = false;
  o.exit = rel.ok && fibers_ok ? kPass : kNegative;
  return o;
}

Outcome cmd_hm(const RunConfig& cfg, int p) {
  Outcome o;
  o.input = {{"p", p}};
  const HMReport r = hm_verify(p, cfg.trials, cfg.seed);
  o.result = to_json(r);
  std::string beta = "beta rows:";
  for (std::size_t i = 0; i + 1 < r.beta_entries.size(); i += 2) beta += " [" + r.beta_entries[i] + ", " + r.beta_entries[i + 1] + "]";
  o.lines.push_back(beta);
  o.lines.push_back(std::string("complex: ") + (r.complex_ok ? "yes" : "no") + ", fibers injective/surjective at " + std::to_string(r.trials) +
                    " points: " + (r.injective_ok && r.surjective_ok ? "yes" : "no"));
  o.lines.push_back(std::string("R Schur: ") + (r.r_schur ? "yes" : "no") + ", R' Schur: " + (r.r_prime_schur ? "yes" : "no"));
  o.lines.push_back("rank " + std::to_string(r.cohomology.rank) + ", c_t = " + r.cohomology.chern.to_string());
  o.lines.push_back("verdict: " + to_string(r.verdict.verdict));
  for (const auto& f : r.failures) o.lines.push_back("FAILED: " + f);
  o.exit = r.passed() ? kPass : kNegative;
  return o;
}

Outcome cmd_ext_table(const RunConfig& cfg, const std::string& pair_text, const std::string& dims, const std::string& rep_path) {
  Outcome o;
  const LineBundlePair pair = parse_pair(pair_text);
  const DimensionVector ab = parse_dims(dims);
  if (ab.size() != 2) throw InputError("--dims must be a,b");
  o.input = {{"pair", {pair.n, pair.e, pair.f}}, {"dims", ab}};
  ExtTable t = ext_table_cokernel(pair, ab[0], ab[1]);
  if (!rep_path.empty()) {
    const Representation rep = load_rep(rep_path, cfg);
    if (rep.dims() != ab) throw InputError("representation dims differ from --dims");
    o.input["rep"] = to_json(rep);
    const CokernelPresentation p = cokernel_from_rep(rep, pair, fiber_options(cfg), false);
    t = pin_with_hom(t, global_hom_cokernel(p, p));
  }
  o.result = to_json(t);
  for (const auto& e : t.ext) {
    o.lines.push_back("Ext^" + std::to_string(e.degree) + " = " + (e.exact() ? std::to_string(e.lo) : "[" + std::to_string(e.lo) + ", " + std::to_string(e.hi) + "]"));
  }
  for (const auto& n : t.notes) o.lines.push_back("note: " + n);
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quiver representations and bundles on projective space", "qbt"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--field", cfg.field_text, "q or fp:<p>")->capture_default_str();
  app.add_option("--trials", cfg.trials, "Random fiber trials")->capture_default_str();
  app.add_flag("--certify", cfg.certify, "Attempt Groebner certification of fiber checks");
  app.add_flag("--json", cfg.json_output, "Print a JSON report");

  std::function<Outcome()> action;
  std::string name;
  auto sub = [&](const char* n, const char* desc) {
    CLI::App* s = app.add_subcommand(n, desc);
    s->fallthrough();
    return s;
  };

  std::string quiver, dims, dims2, in, in2, mode = "injective", pair, rep, degrees;
  int max_trials = kDefaultMaxTrials, n = 2, p = 2;
  bool decompose_flag = false, ext_flag = false, invariants_flag = false;

  auto* form = sub("form", "Tits and Euler forms");
  form->add_option("--quiver", quiver, "kronecker:w | three:m,n | syzygy:w1,w2 | star:w1,...")->required();
  form->add_option("--dims", dims, "Dimension vector")->required();
  form->add_option("--dims2", dims2, "Second dimension vector for <v,w>");
  form->callback([&] { action = [&] { return cmd_form(cfg, quiver, dims, dims2); }; });

  auto* hom = sub("rep-hom", "Basis of Hom(R1, R2)");
  hom->add_option("--in", in, "Representation JSON")->required();
  hom->add_option("--in2", in2, "Second representation (defaults to the first)");
  hom->callback([&] { action = [&] { return cmd_rep_hom(cfg, in, in2); }; });

  auto* ext = sub("rep-ext", "dim Ext^1(R1, R2) and the Euler identity");
  ext->add_option("--in", in, "Representation JSON")->required();
  ext->add_option("--in2", in2, "Second representation (defaults to the first)");
  ext->callback([&] { action = [&] { return cmd_rep_ext(cfg, in, in2); }; });

  auto* dec = sub("rep-decompose", "Split a representation into indecomposables");
  dec->add_option("--in", in, "Representation JSON");
  dec->add_option("--quiver", quiver, "Quiver spec for a random representation");
  dec->add_option("--dims", dims, "Dimension vector for a random representation");
  dec->add_option("--max-trials", max_trials, "Random endomorphism trials")->capture_default_str();
  dec->callback([&] { action = [&] { return cmd_rep_decompose(cfg, in, quiver, dims, max_trials); }; });

  auto* fib = sub("check-fibers", "Fiberwise injectivity or surjectivity of a polynomial matrix");
  fib->add_option("--in", in, "PolyMatrix JSON")->required();
  fib->add_option("--mode", mode, "injective | surjective")->capture_default_str();
  fib->callback([&] { action = [&] { return cmd_check_fibers(cfg, in, mode); }; });

  auto* cok = sub("cokernel", "Cokernel bundle of a Kronecker representation");
  cok->add_option("--pair", pair, "n,e,f")->required();
  cok->add_option("--rep", rep, "Representation JSON")->required();
  cok->add_flag("--decompose", decompose_flag, "Decompose the representation");
  cok->add_flag("--ext-table", ext_flag, "Ext table of the cokernel");
  cok->callback([&] { action = [&] { return cmd_cokernel(cfg, pair, rep, decompose_flag, ext_flag); }; });

  auto* syz = sub("syzygy", "Syzygy bundle of a star-quiver representation");
  syz->add_option("--n", n, "Projective dimension")->required();
  syz->add_option("--degrees", degrees, "d1,d2,... strictly decreasing")->required();
  syz->add_option("--rep", rep, "Representation JSON")->required();
  syz->add_flag("--decompose", decompose_flag, "Decompose the representation");
  syz->callback([&] { action = [&] { return cmd_syzygy(cfg, n, degrees, rep, decompose_flag); }; });

  auto* mon = sub("monad", "Monad relations, invariants and decomposition");
  mon->add_option("--in", in, "Monad JSON")->required();
  mon->add_flag("--decompose", decompose_flag, "Decompose and give the cohomology verdict");
  mon->add_flag("--invariants", invariants_flag, "Rank and Chern polynomial of the cohomology");
  mon->callback([&] { action = [&] { return cmd_monad(cfg, in, decompose_flag, invariants_flag); }; });

  auto* hmc = sub("hm", "Generalized Horrocks-Mumford monad");
  hmc->add_option("--p", p, "p >= 2")->capture_default_str();
  hmc->callback([&] { action = [&] { return cmd_hm(cfg, p); }; });

  auto* ext_t = sub("ext-table", "Ext groups of a cokernel bundle");
  ext_t->add_option("--pair", pair, "n,e,f")->required();
  ext_t->add_option("--dims", dims, "a,b")->required();
  ext_t->add_option("--rep", rep, "Representation JSON to pin Hom");
  ext_t->callback([&] { action = [&] { return cmd_ext_table(cfg, pair, dims, rep); }; });

  std::vector<std::string> argv_store{"qbt"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  for (auto* s : app.get_subcommands()) name = s->get_name();

  const auto start = std::chrono::steady_clock::now();
  Outcome result;
  try {
    cfg.field = Field::parse(cfg.field_text);
    result = action();
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (cfg.json_output) {
    json report = {{"command", name},
                   {"config",
                    {{"field", cfg.field.to_string()}, {"seed", cfg.seed}, {"trials", cfg.trials}, {"certify", cfg.certify}}},
                   {"input", result.input},
                   {"result", result.result},
                   {"exit_code", result.exit},
                   {"timings", {{"total_seconds", seconds}}}};
    out << report.dump(2) << "\n";
  } else {
    for (const auto& l : result.lines) out << l << "\n";
  }
  return result.exit;
}

}  // namespace qbt::cli
