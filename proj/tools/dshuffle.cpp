// dshuffle: command line front end for the double shuffle workbench.
//
// Exit status: 0 when every checked property holds, 1 when some check fails,
// 2 on usage or input errors. Reports are JSON (schema "report.v1"); MZV
// tables are CSV.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "dshuffle/batteries.hpp"
#include "dshuffle/dmr.hpp"
#include "dshuffle/mzv.hpp"
#include "dshuffle/parse.hpp"

using namespace dshuffle;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "report.v1";

struct Output {
  std::string path;
  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
  }
};

json report(const std::string& command, json config) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["config"] = std::move(config);
  j["verdict"] = true;
  return j;
}

int finish(json& j, const Output& out) {
  out.write(j.dump(2) + "\n");
  return j["verdict"].get<bool>() ? 0 : 1;
}

void add_output(CLI::App* app, Output& out) {
  app->add_option("-o,--output", out.path, "Write the report here instead of stdout");
}

std::string q_str(const Q& q) { return q.get_str(); }

dmr::GDRPoint load_or_solve(const std::string& input, const std::string& mu, int deg, Series<Q>* log_phi = nullptr) {
  if (!input.empty()) {
    std::ifstream f(input);
    if (!f) throw std::runtime_error("cannot read " + input);
    return dmr::read_assoc(f, log_phi);
  }
  auto res = dmr::solve_associator(parse_rational(mu), deg);
  if (log_phi) *log_phi = res.log_phi;
  return res.point;
}

json membership_json(const dmr::MembershipReport& r) {
  json j;
  j["verdict"] = r.verdict;
  j["checked"] = r.checked;
  json res = json::array();
  for (const auto& x : r.residuals) res.push_back({{"condition", x.label}, {"degree", x.degree}, {"witness", x.witness}});
  j["failures"] = res;
  return j;
}

json diagram_json(const dmr::DiagramReport& r) {
  json items = json::array();
  for (const auto& it : r.items) items.push_back({{"diagram", it.diagram}, {"input", it.input}, {"equal", it.equal}});
  return items;
}

// ---------- subcommands ----------

struct CoproductArgs {
  std::string which = "V-DR", element;
  int trunc = 4;
  Output out;
};

int run_coproduct(const CoproductArgs& a) {
  json j = report("coproduct", {{"which", a.which}, {"element", a.element}, {"trunc", a.trunc}});
  std::string result;
  if (a.which.size() > 2 && a.which.substr(a.which.size() - 2) == "DR") {
    Series<Q> x = parse_dr(a.element, a.trunc);
    j["input"] = series_string(x);
    if (a.which == "V-DR") result = tensor_string(delta_V_DR(x));
    else if (a.which == "W-DR") result = tensor_string(dr::delta_W_DR_expanded(x));
    else result = tensor_string(dr::delta_M_DR(dr::m_class(x)));
  } else {
    betti::GroupAlg x = parse_betti(a.element);
    j["input"] = betti::group_alg_string(x);
    if (a.which == "V-B") {
      result = betti::group_alg2_string(betti::delta_V_B(x));
    } else if (a.which == "W-B") {
      if (!betti::in_WB(x)) throw std::invalid_argument("element is not in W^B = k1 + kF2 (X1 - 1)");
      result = betti::group_alg2_string(betti::yb_expand2(betti::delta_W_B(betti::to_WB_generators(x))));
    } else {
      result = betti::group_alg2_string(betti::delta_M_B(betti::mB_class(x)));
    }
  }
  j["coproduct"] = result;
  return finish(j, a.out);
}

struct PropArgs {
  std::string which;
  int max_deg = 3, random = 0, random_len = 5;
  unsigned seed = 1;
  bool printed_vectors = false;
  Output out;
};

int run_prop(const PropArgs& a) {
  json j = report("verify prop", {{"which", a.which}, {"max_deg", a.max_deg}, {"random", a.random},
                                  {"random_len", a.random_len}, {"seed", a.seed}, {"printed_vectors", a.printed_vectors}});
  json items = json::array();
  bool all = true;
  auto put = [&](const braids::PropReport& r) {
    json it{{"input", r.input}, {"equal", r.equal}};
    if (!r.equal) {
      it["lhs"] = r.lhs;
      it["rhs"] = r.rhs;
    }
    items.push_back(it);
    all = all && r.equal;
  };
  if (a.which == "2.3" || a.which == "2.4") {
    for (const auto& x : word_inputs(a.max_deg, a.max_deg))
      put(a.which == "2.3" ? braids::check_prop_23(x) : braids::check_prop_24(x));
  } else {
    braids::RowColB rc = a.printed_vectors ? braids::printed_row_col_B() : braids::working_row_col_B();
    auto run = [&](const betti::GroupAlg& x) {
      put(a.which == "2.1" ? braids::check_prop_21(x, rc) : braids::check_prop_22(x, rc));
    };
    for (const FreeWord& w : reduced_words(2, a.max_deg)) run(betti::ga_word(w));
    Rng rng(a.seed);
    for (int i = 0; i < a.random; ++i) run(random_group_alg(rng, 3, a.random_len));
  }
  j["verdict"] = all;
  j["count"] = items.size();
  j["items"] = items;
  return finish(j, a.out);
}

struct SolveArgs {
  std::string mu = "1";
  int deg = 5;
  std::vector<std::string> free;
  bool printed_order = false;
  Output out;
};

int run_solve(const SolveArgs& a) {
  dmr::SolveOptions opt;
  opt.printed_order = a.printed_order;
  for (const auto& f : a.free) {
    auto colon = f.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("--free expects DEGREE:v1,v2,..., got " + f);
    int d = std::stoi(f.substr(0, colon));
    std::stringstream ss(f.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) opt.free_values[d].push_back(parse_rational(tok));
  }
  dmr::SolveResult res;
  try {
    res = dmr::solve_associator(parse_rational(a.mu), a.deg, opt);
  } catch (const std::runtime_error& e) {
    std::cerr << "dshuffle: " << e.what() << "\n";
    return 1;
  }
  std::ostringstream os;
  dmr::write_assoc(os, res.point.mu, res.log_phi);
  a.out.write(os.str());
  dmr::MembershipReport r = dmr::is_associator(res.point);
  if (!r.verdict) std::cerr << dmr::report_string(r) << "\n";
  return r.verdict ? 0 : 1;
}

struct AssocArgs {
  std::string input, mu = "1";
  int deg = 5;
  bool printed_order = false;
  Output out;
};

int run_dmr_check(const AssocArgs& a) {
  dmr::GDRPoint p = load_or_solve(a.input, a.mu, a.deg);
  json j = report("dmr-check", {{"input", a.input}, {"mu", q_str(p.mu)}, {"trunc", p.g.trunc()}});
  dmr::MembershipReport d = dmr::is_dmr(p), m = dmr::is_associator(p);
  j["is_dmr"] = membership_json(d);
  j["is_associator"] = membership_json(m);
  j["verdict"] = d.verdict && m.verdict;
  return finish(j, a.out);
}

int run_pentagon(const AssocArgs& a) {
  dmr::GDRPoint p = load_or_solve(a.input, a.mu, a.deg);
  json j = report("pentagon-check", {{"input", a.input}, {"mu", q_str(p.mu)}, {"trunc", p.g.trunc()},
                                     {"printed_order", a.printed_order}});
  braids::UP5 r = dmr::pentagon_residual(p.g, a.printed_order);
  j["residual_terms"] = r.terms().size();
  if (!r.is_zero()) {
    const auto& kv = *r.terms().terms().begin();
    j["first_nonzero"] = {{"monomial", braids::up5_key_string(kv.first)}, {"coefficient", q_str(kv.second)}};
  }
  j["verdict"] = r.is_zero();
  return finish(j, a.out);
}

struct Theorem32Args {
  std::string input, mu = "1";
  int deg = 4, random = 20;
  unsigned seed = 1;
  Output out;
};

int run_theorem32(const Theorem32Args& a) {
  dmr::GDRPoint p = load_or_solve(a.input, a.mu, a.deg);
  json j = report("theorem32", {{"input", a.input}, {"mu", q_str(p.mu)}, {"trunc", p.g.trunc()},
                                {"random", a.random}, {"seed", a.seed}});
  dmr::DiagramReport r = dmr::check_theorem_3_2(p, dmr::theorem_3_2_w_battery(a.random, a.seed),
                                                dmr::theorem_3_2_m_battery(a.random, a.seed));
  j["verdict"] = r.verdict;
  j["items"] = diagram_json(r);
  return finish(j, a.out);
}

struct DifferenceArgs {
  std::string mu = "1";
  int deg = 5;
  std::string free3 = "1";
  Output out;
};

int run_difference(const DifferenceArgs& a) {
  Q mu = parse_rational(a.mu);
  json j = report("dmrB-difference", {{"mu", q_str(mu)}, {"deg", a.deg}, {"free3", a.free3}});
  dmr::SolveOptions alt;
  alt.free_values[3] = {parse_rational(a.free3)};
  dmr::GDRPoint p = dmr::solve_associator(mu, a.deg).point;
  dmr::GDRPoint q = dmr::solve_associator(mu, a.deg, alt).point;
  bool distinct = !(p.g == q.g);
  j["distinct"] = distinct;
  dmr::MembershipReport b = dmr::is_dmr_B(dmr::torsor_difference(p, q));
  j["torsor_difference_is_dmr_B"] = membership_json(b);
  dmr::DiagramReport s = dmr::stabilizer_check(dmr::left_difference(p, q), dmr::m_basis_inputs(a.deg, a.deg));
  j["left_difference_stabilizes_delta_M"] = s.verdict;
  j["verdict"] = distinct && b.verdict && s.verdict;
  return finish(j, a.out);
}

struct MzvArgs {
  std::vector<std::string> comps;
  int all_weight = 0;
  unsigned prec = 0;
  Output out;
};

int run_mzv(const MzvArgs& a) {
  unsigned bits = a.prec ? a.prec : mzv::default_precision_bits();
  std::vector<mzv::Composition> ks;
  for (const auto& c : a.comps) ks.push_back(mzv::parse_composition(c));
  for (int w = 2; w <= a.all_weight; ++w)
    for (const Word& x : words_of_degree(w))
      if (is_admissible(x)) ks.push_back(mzv::word_to_composition(x));
  if (ks.empty()) throw std::invalid_argument("mzv: give --comp or --all-weight");
  std::string csv = mzv::zeta_csv_header() + "\n";
  for (const auto& k : ks) csv += mzv::zeta_csv_row(k, mzv::zeta(k, bits)) + "\n";
  a.out.write(csv);
  return 0;
}

struct KzArgs {
  int weight = 4;
  unsigned prec = 0;
  double tolerance = 1e-8;
  std::string perturb;
  Output out;
};

int run_kz(const KzArgs& a) {
  unsigned bits = a.prec ? a.prec : mzv::default_precision_bits();
  mzv::PrecisionScope scope(bits + 32);
  std::map<mzv::Composition, mzv::BigFloat> shift;
  if (!a.perturb.empty()) shift[{2}] = mzv::BigFloat(a.perturb);
  json j = report("kz-check", {{"weight", a.weight}, {"precision_bits", bits}, {"tolerance", a.tolerance},
                               {"perturb_zeta2", a.perturb}});
  mzv::NumericReport r = mzv::numeric_dmr_check(a.weight, bits, a.tolerance, shift);
  json res = json::array();
  for (const auto& x : r.residuals)
    res.push_back({{"condition", x.label}, {"residual", x.value.str(6, std::ios_base::scientific)}});
  j["residuals"] = res;
  j["verdict"] = r.verdict;
  return finish(j, a.out);
}

struct FixtureArgs {
  std::string file = "data/braid_fixtures.v1";
  bool check = false;
};

int run_fixtures(const FixtureArgs& a) {
  std::string text = braids::braid_fixtures_text();
  if (!a.check) {
    Output{a.file}.write(text);
    return 0;
  }
  std::ifstream f(a.file, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + a.file);
  std::stringstream ss;
  ss << f.rdbuf();
  if (ss.str() == text) return 0;
  std::cerr << a.file << " differs from the regenerated fixtures\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double shuffle and associator verification workbench"};
  app.require_subcommand(1);

  CoproductArgs cop;
  auto* c = app.add_subcommand("coproduct", "Print a coproduct of an element");
  c->add_option("--which", cop.which, "V-DR, W-DR, M-DR, V-B, W-B or M-B")
      ->check(CLI::IsMember({"V-DR", "W-DR", "M-DR", "V-B", "W-B", "M-B"}));
  c->add_option("--element", cop.element, "Element, e.g. 'e0*e1 - 1/2*e1' or 'Y2+ - X1'")->required();
  c->add_option("--trunc", cop.trunc, "Truncation degree (de Rham side)")->check(CLI::Range(0, 8));
  add_output(c, cop.out);

  PropArgs prop;
  auto* v = app.add_subcommand("verify", "Verify a coproduct diagram");
  v->require_subcommand(1);
  auto* vp = v->add_subcommand("prop", "Coproduct compatibility of the braid morphisms");
  vp->add_option("--which", prop.which, "2.1, 2.2, 2.3 or 2.4")
      ->required()
      ->check(CLI::IsMember({"2.1", "2.2", "2.3", "2.4"}));
  vp->add_option("--max-deg", prop.max_deg, "Word degree (2.3/2.4) or group word length (2.1/2.2)")
      ->check(CLI::Range(0, 6));
  vp->add_option("--random", prop.random, "Extra seeded random group algebra elements (2.1/2.2)")
      ->check(CLI::Range(0, 10000));
  vp->add_option("--random-len", prop.random_len, "Maximal word length in the random elements")
      ->check(CLI::Range(0, 8));
  vp->add_option("--seed", prop.seed, "Seed for the random elements");
  vp->add_flag("--printed-vectors", prop.printed_vectors, "Use the row/column vectors exactly as printed");
  add_output(vp, prop.out);

  SolveArgs sol;
  auto* s = app.add_subcommand("solve-associator", "Solve the pentagon degree by degree; writes assoc.v1");
  s->add_option("--mu", sol.mu, "Rational mu");
  s->add_option("--deg", sol.deg, "Truncation degree")->check(CLI::Range(0, dmr::kMaxSolverDegree));
  s->add_option("--free", sol.free, "Values of free coordinates, DEGREE:v1,v2,...");
  s->add_flag("--printed-order", sol.printed_order, "Use Phi^{12,3,4} Phi^{1,2,34} on the right");
  add_output(s, sol.out);

  AssocArgs dmrc;
  auto* d = app.add_subcommand("dmr-check", "Membership of an associator file in DMR_mu and M_mu");
  d->add_option("--input", dmrc.input, "assoc.v1 file")->required()->check(CLI::ExistingFile);
  add_output(d, dmrc.out);

  AssocArgs pent;
  auto* p = app.add_subcommand("pentagon-check", "Pentagon residual in U(p5)");
  p->add_option("--input", pent.input, "assoc.v1 file (default: solve with --mu/--deg)")->check(CLI::ExistingFile);
  p->add_option("--mu", pent.mu, "Rational mu when solving");
  p->add_option("--deg", pent.deg, "Truncation when solving")->check(CLI::Range(0, dmr::kMaxSolverDegree));
  p->add_flag("--printed-order", pent.printed_order, "Evaluate with the right-hand factors swapped");
  add_output(p, pent.out);

  Theorem32Args th;
  auto* t = app.add_subcommand("theorem32", "Gamma-twisted comparison maps versus the W and M coproducts");
  t->add_option("--deg", th.deg, "Truncation degree")->check(CLI::Range(1, 6));
  t->add_option("--input", th.input, "assoc.v1 file (default: solve with --mu)")->check(CLI::ExistingFile);
  t->add_option("--mu", th.mu, "Rational mu when solving");
  t->add_option("--random", th.random, "Seeded random inputs per diagram")->check(CLI::Range(0, 1000));
  t->add_option("--seed", th.seed, "Seed");
  add_output(t, th.out);

  DifferenceArgs diff;
  auto* b = app.add_subcommand("dmrB-difference", "Torsor difference of two associators lies in DMR^B");
  b->add_option("--mu", diff.mu, "Rational mu");
  b->add_option("--deg", diff.deg, "Truncation degree")->check(CLI::Range(3, dmr::kMaxSolverDegree));
  b->add_option("--free3", diff.free3, "Degree 3 free coordinate of the second solution");
  add_output(b, diff.out);

  MzvArgs mz;
  auto* m = app.add_subcommand("mzv", "Multiple zeta values as CSV");
  m->add_option("--comp", mz.comps, "Composition such as 2,1 (repeatable)");
  m->add_option("--all-weight", mz.all_weight, "All admissible compositions up to this weight")
      ->check(CLI::Range(0, mzv::kMaxZetaWeight));
  m->add_option("--prec", mz.prec, "Precision in bits (default: $DSHUFFLE_PREC or 128)")->check(CLI::Range(16, 65536));
  add_output(m, mz.out);

  KzArgs kz;
  auto* k = app.add_subcommand("kz-check", "Floating point DMR conditions for phi_KZ");
  k->add_option("--weight", kz.weight, "Weight bound")->check(CLI::Range(0, 5));
  k->add_option("--prec", kz.prec, "Precision in bits (default: $DSHUFFLE_PREC or 128)")->check(CLI::Range(16, 65536));
  k->add_option("--tolerance", kz.tolerance, "Residual tolerance");
  k->add_option("--perturb-zeta2", kz.perturb, "Add this to zeta(2) (negative control)");
  add_output(k, kz.out);

  FixtureArgs fx;
  auto* f = app.add_subcommand("fixtures", "Braid fixture file");
  f->require_subcommand(1);
  auto* fr = f->add_subcommand("regen", "Regenerate braid_fixtures.v1");
  fr->add_option("--file", fx.file, "Fixture path");
  fr->add_flag("--check", fx.check, "Compare instead of writing; exit 1 on difference");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c) return run_coproduct(cop);
    if (*vp) return run_prop(prop);
    if (*s) return run_solve(sol);
    if (*d) return run_dmr_check(dmrc);
    if (*p) return run_pentagon(pent);
    if (*t) return run_theorem32(th);
    if (*b) return run_difference(diff);
    if (*m) return run_mzv(mz);
    if (*k) return run_kz(kz);
    if (*fr) return run_fixtures(fx);
  } catch (const std::exception& e) {
    std::cerr << "dshuffle: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
