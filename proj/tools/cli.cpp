#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tfc/dataset.hpp"
#include "tfc/eds.hpp"
#include "tfc/errors.hpp"
#include "tfc/heights.hpp"
#include "tfc/poly_catalog.hpp"
#include "tfc/polytools.hpp"
#include "tfc/verify.hpp"

namespace tfc::cli {

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string fixed(double x, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

// "x,y" with each coordinate an integer or "num/den".
CurvePoint parse_point(const CurveId& curve, const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw ParseError("point must be given as x,y: '" + text + "'");
  return CurvePoint::make(curve, parse_rat(parts[0]), parse_rat(parts[1]));
}

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  for (const auto& s : split(text, ',')) out.push_back(parse_int(s));
  return out;
}

FactorBudget budget_from(std::uint64_t trial, unsigned long rho) {
  FactorBudget b;
  b.trial_bound = trial;
  b.rho_iterations = rho;
  return b;
}

void add_budget_options(CLI::App* app, std::uint64_t& trial, unsigned long& rho) {
  app->add_option("--trial-bound", trial, "trial division bound")->capture_default_str();
  app->add_option("--rho-iterations", rho, "Pollard rho iterations per attempt")->capture_default_str();
}

void check_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (f == a) return;
  }
  throw ArgumentError("unsupported --format '" + f + "'");
}

// ---- seq ---------------------------------------------------------------------

struct SeqConfig {
  std::string m, p, format = "json";
  long n_max = 10;
  std::uint64_t trial = FactorBudget{}.trial_bound;
  unsigned long rho = FactorBudget{}.rho_iterations;
};

int cmd_seq(const SeqConfig& cfg, std::ostream& out, std::ostream& err) {
  check_format(cfg.format, {"json", "csv", "table"});
  if (cfg.n_max < 1) throw ArgumentError("--n-max must be positive");
  const CurveId curve = CurveId::make(Family::E, parse_int(cfg.m));
  const CurvePoint p = parse_point(curve, cfg.p);
  const FactorBudget budget = budget_from(cfg.trial, cfg.rho);
  const Sequence seq(p, cfg.n_max);

  json records = json::array();
  std::vector<std::string> flags;
  for (long n = 1; n <= cfg.n_max; ++n) {
    const WTerm& wt = seq.w_term(n);
    const CTerm& ct = seq.c_term(n);
    std::string cls;
    if (auto w = coprime_factor_witness(seq, n)) {
      cls = "composite(coprime witness " + brief(w->f1) + " * " + brief(w->f2) + ")";
    } else {
      const Classification c = classify_term(ct.w, budget);
      cls = c.to_string();
      if (!c.complete) flags.push_back("n=" + std::to_string(n) + ": factorization incomplete");
    }
    std::string prim;
    if (n == 1) {
      const Factorization f = factor(ct.w, budget);
      prim = !f.factors.empty() ? to_string(f.factors.front().prime) : (ct.w == 1 ? "none" : "indeterminate");
    } else {
      const PrimitiveDivisor pd = w_primitive_divisor(seq, n, budget);
      prim = pd.smallest ? to_string(*pd.smallest) : (pd.exists ? "indeterminate" : "none");
    }
    if (prim == "indeterminate") flags.push_back("n=" + std::to_string(n) + ": primitive divisor indeterminate");
    records.push_back({{"n", n},
                       {"A", to_string(wt.a)},
                       {"B", to_string(wt.b)},
                       {"C", to_string(wt.c)},
                       {"U", to_string(ct.u)},
                       {"V", to_string(ct.v)},
                       {"W", to_string(ct.w)},
                       {"d", to_string(ct.d)},
                       {"classification", cls},
                       {"primitive_divisor", prim}});
  }
  for (const auto& f : flags) err << "warning: " << f << "\n";

  if (cfg.format == "json") {
    json doc = {{"m", to_string(curve.m())},
                {"P", {to_string(p.x()), to_string(p.y())}},
                {"n_max", cfg.n_max},
                {"records", records},
                {"flags", flags}};
    out << doc.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    const char* cols[] = {"n", "A", "B", "C", "U", "V", "W", "d", "classification", "primitive_divisor"};
    for (std::size_t i = 0; i < std::size(cols); ++i) out << (i ? "," : "") << cols[i];
    out << "\n";
    for (const auto& r : records) {
      out << r["n"].get<long>();
      for (std::size_t i = 1; i < std::size(cols); ++i) out << ",\"" << r[cols[i]].get<std::string>() << "\"";
      out << "\n";
    }
  } else {
    out << "E: " << curve.describe() << "  P = " << p.to_string() << "\n";
    for (const auto& r : records) {
      out << std::setw(4) << r["n"].get<long>() << "  W = " << brief(parse_int(r["W"].get<std::string>()))
          << "  d = " << r["d"].get<std::string>() << "  " << r["classification"].get<std::string>()
          << "  primitive " << r["primitive_divisor"].get<std::string>() << "\n";
    }
  }
  return ok;
}

// ---- verify ------------------------------------------------------------------

struct VerifyConfig {
  std::string suite, m, p, data, generators, indices = "2,3", format = "table";
  long n_max = 0;  // 0: suite default
  long u_max = 100;
  bool timings = false;
  std::uint64_t trial = FactorBudget{}.trial_bound;
  unsigned long rho = FactorBudget{}.rho_iterations;
};

std::vector<Table1Row> table_rows(const VerifyConfig& cfg) {
  return cfg.data.empty() ? load_table1() : load_table1(cfg.data);
}

// Table 1 rows, restricted to --m when given.
std::vector<Table1Row> selected_rows(const VerifyConfig& cfg) {
  auto rows = table_rows(cfg);
  if (cfg.m.empty()) return rows;
  const Int m = parse_int(cfg.m);
  std::erase_if(rows, [&](const Table1Row& r) { return r.m != m; });
  if (rows.empty()) throw ArgumentError("no Table 1 row for m = " + cfg.m);
  return rows;
}

// The points a per-curve suite runs on: --m/--p, the Table 1 row for --m,
// or every Table 1 row.
std::vector<CurvePoint> suite_points(const VerifyConfig& cfg) {
  if (!cfg.m.empty()) {
    const CurveId curve = CurveId::make(Family::E, parse_int(cfg.m));
    if (!cfg.p.empty()) return {parse_point(curve, cfg.p)};
    for (const auto& row : table_rows(cfg)) {
      if (row.m == curve.m()) return {checked_generator(row)};
    }
    throw ArgumentError("no Table 1 row for m = " + to_string(curve.m()) + "; pass --p");
  }
  if (!cfg.p.empty()) throw ArgumentError("--p needs --m");
  std::vector<CurvePoint> pts;
  for (const auto& row : table_rows(cfg)) pts.push_back(checked_generator(row));
  return pts;
}

void absorb(VerifyReport& into, const VerifyReport& part, bool prefix) {
  const std::string pre = prefix ? part.subject + ": " : "";
  for (const auto& v : part.verdicts) into.add(pre + v.index, v.status, v.detail);
  for (const auto& f : part.flags) into.flag(pre + f);
  into.seconds += part.seconds;
}

long default_n(const std::string& suite) {
  if (suite == "cancellation" || suite == "strongdiv") return 12;
  if (suite == "valuation") return 24;
  return 22;
}

int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err) {
  check_format(cfg.format, {"json", "table"});
  const long n = cfg.n_max > 0 ? cfg.n_max : default_n(cfg.suite);
  const FactorBudget budget = budget_from(cfg.trial, cfg.rho);
  VerifyReport rep;
  json extra;

  if (cfg.suite == "table1") {
    rep = verify_table1(selected_rows(cfg));
  } else if (cfg.suite == "appendix") {
    const auto gens = cfg.generators.empty() ? generators_from(table_rows(cfg)) : load_generators(cfg.generators);
    rep = appendix_scan(gens, n);
  } else if (cfg.suite == "daylight") {
    DaylightResult d = daylight_search(cfg.u_max);
    rep = d.report;
    json f = json::array();
    for (const auto& x : d.findings) {
      f.push_back({{"u", x.u}, {"m", to_string(x.m)}, {"f", to_string(x.f)}, {"W2", to_string(x.w2)},
                   {"W2_prime", x.w2_prime}, {"group_law_agrees", x.group_law_agrees}});
    }
    extra["findings"] = f;
  } else {
    const auto pts = suite_points(cfg);
    const bool many = pts.size() > 1;
    rep.subject = cfg.suite + (many ? " (" + std::to_string(pts.size()) + " curves)" : "");
    std::vector<long> indices;
    if (cfg.suite == "rescale") {
      for (const auto& s : split(cfg.indices, ',')) indices.push_back(parse_int(s).get_si());
    }
    for (const auto& p : pts) {
      VerifyReport part;
      if (cfg.suite == "expupc") {
        part = verify_expupc(p, n, budget);
      } else if (cfg.suite == "cancellation") {
        part = verify_cancellation(p, n);
      } else if (cfg.suite == "strongdiv") {
        part = verify_strong_divisibility(p, n);
      } else if (cfg.suite == "valuation") {
        part = verify_valuation_laws(p, n);
      } else if (cfg.suite == "thesis") {
        part = thesis_hypothesis_check(p, n, budget).report;
      } else if (cfg.suite == "rescale") {
        part = rescale_demo(p, indices, budget).report;
      } else {
        throw ArgumentError("unknown verify suite '" + cfg.suite + "'");
      }
      if (many) part.subject = "m=" + to_string(p.curve().m());
      absorb(rep, part, many);
      if (!many) rep.subject = part.subject;
    }
  }

  if (rep.has_indeterminate()) {
    rep.flag("indeterminate verdicts present");
    err << "warning: " << rep.count(Status::indeterminate) << " indeterminate verdicts\n";
  }
  if (cfg.format == "json") {
    json j = rep.to_json(cfg.timings);
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    out << j.dump(2) << "\n";
  } else {
    out << rep.to_table();
    if (cfg.timings) out << "  time " << fixed(rep.seconds, 4) << " s\n";
  }
  return rep.failed() ? failed : ok;
}

// ---- poly --------------------------------------------------------------------

struct PolyConfig {
  std::string action, id, coeffs, data, var = "u", format = "table", out;
  std::string p = "3";
  unsigned kmax = 6, threshold = 2, threads = 0;
  long box = 1000;
};

struct NamedPoly {
  std::string id;
  std::optional<HomogPoly> form;
  IntPoly poly;
};

std::vector<NamedPoly> poly_inputs(const PolyConfig& cfg) {
  std::vector<NamedPoly> out;
  if (!cfg.coeffs.empty()) {
    if (!cfg.id.empty()) throw ArgumentError("give either --id or --coeffs, not both");
    // ';' separates polynomials, ',' coefficients (by u-exponent for forms,
    // constant first for newton).
    for (const auto& part : split(cfg.coeffs, ';')) {
      std::vector<Int> c = parse_int_list(part);
      NamedPoly np;
      np.id = "[" + part + "]";
      const auto degree = static_cast<unsigned>(c.size() - 1);
      np.poly = IntPoly(c);
      np.form = HomogPoly(degree, std::move(c));
      out.push_back(std::move(np));
    }
    return out;
  }
  if (cfg.id.empty()) throw ArgumentError("--id or --coeffs is required");
  std::vector<CatalogEntry> file;
  if (!cfg.data.empty()) file = load_polynomials(cfg.data);
  for (const auto& id : split(cfg.id, ',')) {
    const CatalogEntry* e = nullptr;
    if (cfg.data.empty()) {
      e = &catalog_entry(id);
    } else {
      for (const auto& x : file) {
        if (x.id == id) e = &x;
      }
      if (e == nullptr) throw ArgumentError("polynomial '" + id + "' not in " + cfg.data);
    }
    out.push_back({e->id, e->form, e->poly});
  }
  return out;
}

const HomogPoly& need_form(const NamedPoly& np) {
  if (!np.form) throw ArgumentError("'" + np.id + "' is univariate; this action needs a form in (u, v)");
  return *np.form;
}

std::string power_text(const Int& c) {
  if (c == 0) return "0";
  const Factorization f = factor(c);
  if (!f.complete) return to_string(c);
  std::string s = c < 0 ? "-" : "";
  if (f.factors.empty()) return s + "1";
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (i) s += "*";
    s += to_string(f.factors[i].prime);
    if (f.factors[i].exponent > 1) s += "^" + std::to_string(f.factors[i].exponent);
  }
  return s;
}

int cmd_poly(const PolyConfig& cfg, std::ostream& out) {
  check_format(cfg.format, {"json", "table"});
  const bool as_json = cfg.format == "json";
  json j;
  std::ostringstream t;

  if (cfg.action == "export") {
    const json doc = export_polynomials();
    if (cfg.out.empty()) {
      out << doc.dump(2) << "\n";
    } else {
      std::ofstream f(cfg.out);
      if (!f) throw ArgumentError("cannot write " + cfg.out);
      f << doc.dump(2) << "\n";
      out << "wrote " << doc["entries"].size() << " polynomials to " << cfg.out << "\n";
    }
    return ok;
  }

  const auto polys = poly_inputs(cfg);
  const Int p = parse_int(cfg.p);
  if (cfg.action == "resultant") {
    if (polys.size() != 2) throw ArgumentError("resultant needs exactly two polynomials");
    if (cfg.var != "u" && cfg.var != "v") throw ArgumentError("--var must be u or v");
    const Var elim = cfg.var == "u" ? Var::u : Var::v;
    const HomogResultant r = homogeneous_resultant(need_form(polys[0]), need_form(polys[1]), elim);
    const std::string other = cfg.var == "u" ? "v" : "u";
    j = {{"f", polys[0].id}, {"g", polys[1].id}, {"eliminated", cfg.var}, {"coefficient", to_string(r.coefficient)},
         {"factored", power_text(r.coefficient)}, {"variable", other}, {"exponent", r.exponent}};
    t << "Res_" << cfg.var << "(" << polys[0].id << ", " << polys[1].id << ") = " << to_string(r.coefficient) << " "
      << other << "^" << r.exponent << "\n  coefficient = " << power_text(r.coefficient) << "\n";
  } else if (cfg.action == "newton") {
    if (polys.size() != 1) throw ArgumentError("newton takes one polynomial");
    const NewtonPolygon np = newton_polygon(polys[0].poly, p);
    json verts = json::array(), slopes = json::array();
    for (const auto& [x, y] : np.vertices) verts.push_back({x, y});
    for (const auto& s : np.segments) slopes.push_back(to_string(s.slope));
    j = {{"id", polys[0].id}, {"p", to_string(p)}, {"vertices", verts}, {"slopes", slopes}};
    t << polys[0].id << " at p = " << p << "\n  vertices";
    for (const auto& [x, y] : np.vertices) t << " (" << x << "," << y << ")";
    t << "\n  slopes";
    for (const auto& s : np.segments) t << " " << to_string(s.slope) << " (length " << s.length() << ")";
    t << "\n";
  } else if (cfg.action == "solve3k") {
    if (polys.size() != 1) throw ArgumentError("solve3k takes one polynomial");
    if (cfg.box < 1) throw ArgumentError("--box must be positive");
    const auto sols = solve_power_of_p(need_form(polys[0]), p, cfg.kmax, cfg.box, cfg.threads);
    json arr = json::array();
    t << polys[0].id << "(u, v) = +-" << p << "^k, k <= " << cfg.kmax << ", |u|,|v| <= " << cfg.box << ": "
      << sols.size() << " solutions\n";
    for (const auto& s : sols) {
      arr.push_back({{"u", to_string(s.u)}, {"v", to_string(s.v)}, {"k", s.k}, {"sign", s.sign}});
      t << "  k=" << s.k << " " << (s.sign > 0 ? "+" : "-") << "  (" << s.u << ", " << s.v << ")\n";
    }
    j = {{"id", polys[0].id}, {"p", to_string(p)}, {"kmax", cfg.kmax}, {"box", cfg.box}, {"solutions", arr}};
  } else if (cfg.action == "bound") {
    if (polys.size() != 1) throw ArgumentError("bound takes one polynomial");
    const Rat b = valuation_bound(need_form(polys[0]), p);
    j = {{"id", polys[0].id}, {"p", to_string(p)}, {"valuation_bound", to_string(b)}};
    t << "ord_" << p << " " << polys[0].id << "(u, v) <= " << to_string(b) << " for coprime u, v\n";
  } else if (cfg.action == "congruence") {
    if (polys.size() != 1) throw ArgumentError("congruence takes one polynomial");
    const CongruenceResult r = congruence_exclusion(need_form(polys[0]), p, cfg.threshold);
    j = {{"id", polys[0].id}, {"p", to_string(p)}, {"threshold", cfg.threshold}, {"applicable", r.applicable},
         {"excluded", r.excluded}, {"survivors", r.survivors.size()}};
    t << polys[0].id << " mod " << p << "^" << cfg.threshold + 1 << ": "
      << (!r.applicable ? "not congruent to (u - v)^d"
                        : r.excluded ? "excluded, so k <= " + std::to_string(cfg.threshold)
                                     : std::to_string(r.survivors.size()) + " surviving residues")
      << "\n";
  } else {
    throw ArgumentError("unknown poly action '" + cfg.action + "'");
  }
  out << (as_json ? j.dump(2) + "\n" : t.str());
  return ok;
}

// ---- height ------------------------------------------------------------------

struct HeightConfig {
  std::string m, p, format = "table";
  double tol = 1e-8;
  long multiples = 1;
};

int cmd_height(const HeightConfig& cfg, std::ostream& out) {
  check_format(cfg.format, {"json", "table"});
  if (cfg.multiples < 1) throw ArgumentError("--multiples must be positive");
  if (!(cfg.tol > 0)) throw ArgumentError("--tol must be positive");
  const CurveId curve = CurveId::make(Family::E, parse_int(cfg.m));
  const CurvePoint p = parse_point(curve, cfg.p);
  const HeightReport base = height_report(p, cfg.tol);
  json rows = json::array();
  std::ostringstream t;
  t << curve.describe() << "  P = " << p.to_string() << "\n";
  CurvePoint q = p;
  for (long n = 1; n <= cfg.multiples; ++n) {
    if (n > 1) q = add(q, p);
    const HeightReport h = n == 1 ? base : height_report(q, cfg.tol);
    rows.push_back({{"n", n},
                    {"naive", h.naive},
                    {"canonical", h.canonical},
                    {"quadratic_defect", h.canonical - double(n * n) * base.canonical},
                    {"gap_lower", h.gap_lower},
                    {"gap_upper", h.gap_upper},
                    {"within_gap", h.within_gap()},
                    {"precision", h.precision},
                    {"doublings", h.doublings}});
    t << std::setw(4) << n << "  h = " << fixed(h.naive) << "  hhat = " << fixed(h.canonical)
      << "  +- " << fixed(h.precision, 2) << "  gap " << (h.within_gap() ? "ok" : "VIOLATED") << "\n";
  }
  json bound = nullptr;
  try {
    bound = bn_index_bound(curve.m());
  } catch (const BoundUnavailableError&) {
  }
  const GapBounds gap = silverman_gap(curve);
  t << "  gap [" << fixed(gap.lower) << ", " << fixed(gap.upper) << "]  index bound "
    << (bound.is_null() ? std::string("unavailable") : bound.dump()) << "\n";
  json j = {{"m", to_string(curve.m())},
            {"P", {to_string(p.x()), to_string(p.y())}},
            {"precision_bits", 256},
            {"tolerance", cfg.tol},
            {"multiples", rows},
            {"index_bound", bound}};
  out << (cfg.format == "json" ? j.dump(2) + "\n" : t.str());
  const bool all_in = std::all_of(rows.begin(), rows.end(), [](const json& r) { return r["within_gap"].get<bool>(); });
  return all_in ? ok : failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elliptic divisibility sequences on twisted Fermat cubics", "tfc"};
  app.require_subcommand(1);

  SeqConfig seq;
  auto* s = app.add_subcommand("seq", "terms of the sequence of a point P on E: Y^2 = X^3 - 432 m^2");
  s->add_option("--m", seq.m, "cube-free m")->required();
  s->add_option("--p", seq.p, "P as x,y (integers or num/den)")->required();
  s->add_option("--n-max", seq.n_max, "last index")->capture_default_str();
  s->add_option("--format", seq.format, "json | csv | table")->capture_default_str();
  add_budget_options(s, seq.trial, seq.rho);

  VerifyConfig ver;
  auto* v = app.add_subcommand("verify", "run a verification suite");
  v->add_option("suite", ver.suite,
                "table1 | expupc | appendix | cancellation | strongdiv | valuation | daylight | rescale | thesis")
      ->required();
  v->add_option("--m", ver.m, "restrict to one curve");
  v->add_option("--p", ver.p, "point on E for --m (default: the Table 1 generator)");
  v->add_option("--n-max", ver.n_max, "index range (suite default when omitted)");
  v->add_option("--u-max", ver.u_max, "daylight search range")->capture_default_str();
  v->add_option("--indices", ver.indices, "rescale index set, pairwise coprime")->capture_default_str();
  v->add_option("--data", ver.data, "Table 1 dataset (default: data dir)");
  v->add_option("--generators", ver.generators, "generator file for the appendix scan");
  v->add_option("--format", ver.format, "table | json")->capture_default_str();
  v->add_flag("--timings", ver.timings, "include wall-clock time");
  add_budget_options(v, ver.trial, ver.rho);

  PolyConfig pc;
  auto* pp = app.add_subcommand("poly", "polynomial tools");
  pp->add_option("action", pc.action, "resultant | newton | solve3k | bound | congruence | export")->required();
  pp->add_option("--id", pc.id, "catalog ids, comma separated");
  pp->add_option("--coeffs", pc.coeffs, "inline coefficients; ';' between polynomials");
  pp->add_option("--data", pc.data, "polynomial file instead of the built-in catalog");
  pp->add_option("--p", pc.p, "prime")->capture_default_str();
  pp->add_option("--var", pc.var, "variable eliminated by resultant")->capture_default_str();
  pp->add_option("--kmax", pc.kmax, "solve3k: largest exponent")->capture_default_str();
  pp->add_option("--box", pc.box, "solve3k: |u|, |v| bound")->capture_default_str();
  pp->add_option("--threads", pc.threads, "solve3k workers (0 = all cores)")->capture_default_str();
  pp->add_option("--threshold", pc.threshold, "congruence: exponent threshold")->capture_default_str();
  pp->add_option("--out", pc.out, "export: output file");
  pp->add_option("--format", pc.format, "table | json")->capture_default_str();

  HeightConfig hc;
  auto* h = app.add_subcommand("height", "naive and canonical heights of P and its multiples");
  h->add_option("--m", hc.m, "cube-free m")->required();
  h->add_option("--p", hc.p, "P as x,y")->required();
  h->add_option("--tol", hc.tol, "absolute tolerance")->capture_default_str();
  h->add_option("--multiples", hc.multiples, "report nP for n up to this")->capture_default_str();
  h->add_option("--format", hc.format, "table | json")->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return bad_input;
  }

  try {
    if (s->parsed()) return cmd_seq(seq, out, err);
    if (v->parsed()) return cmd_verify(ver, out, err);
    if (pp->parsed()) return cmd_poly(pc, out);
    return cmd_height(hc, out);
  } catch (const DataMissingError& e) {
    err << "error: " << e.what() << "\n";
    return missing_data;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return bad_input;
  }
}

}  // namespace tfc::cli
