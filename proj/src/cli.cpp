#include "pgres/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "pgres/certificate.hpp"
#include "pgres/sampling.hpp"

namespace pgres::cli {
namespace {

struct Options {
  std::string which;
  std::uint32_t q = 0;
  int id = 0;
  bool drop_extra = false;
  bool double_blocking = false;
  std::string in;
  std::optional<std::uint32_t> drop;
  bool verify = false;
  std::string out;
  bool dual = false;
  std::uint32_t k = 0;
  std::string kind = "resolving";
  std::optional<std::uint64_t> budget_nodes;
  std::optional<double> budget_seconds;
  std::string symmetry = "on";
  std::string checkpoint;
  std::string method = "auto";
  bool serial = false;
  std::optional<std::uint32_t> focus;
  std::uint32_t trials = 0;
  std::uint64_t seed = 1;
  // C-construction parameters
  std::optional<std::uint32_t> e, f, r, r_prime, qpt, l0, l1, u, v, z;
};

struct Emitted {
  Json json;
  int code = kOk;
};

Plane plane_for(std::uint32_t q) {
  const auto [p, h] = prime_power(q);
  return Plane(Field::make(p, h));
}

struct Loaded {
  std::unique_ptr<Plane> plane;
  MixedSet set;
  Json cert;
};

Loaded load(const std::string& path) {
  if (path.empty()) throw Error(ErrorKind::InvalidArgument, "--in is required");
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  Loaded l;
  try {
    f >> l.cert;
    l.plane = std::make_unique<Plane>(field_from_json(l.cert.at("field")));
    const auto pts = l.cert.value("points", std::vector<std::uint32_t>{});
    const auto lns = l.cert.value("lines", std::vector<std::uint32_t>{});
    for (auto x : pts)
      if (x >= l.plane->size()) throw Error(ErrorKind::InvalidArgument, "point index out of range");
    for (auto x : lns)
      if (x >= l.plane->size()) throw Error(ErrorKind::InvalidArgument, "line index out of range");
    l.set = MixedSet(pts, lns);
  } catch (const Json::exception& ex) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed certificate: ") + ex.what());
  }
  return l;
}

Json double_blocking_report(std::span<const PointId> a, const Plane& plane) {
  const auto counts = secant_counts(a, plane);
  std::vector<LineId> deficient;
  for (LineId l = 0; l < plane.size(); ++l)
    if (counts[l] < 2) deficient.push_back(l);
  return Json{{"ok", deficient.empty()}, {"profile", profile_json(secant_profile(a, plane))},
              {"deficient_lines", deficient}};
}

// Report for a certificate kind; "ok" decides the exit code.
Json check(const std::string& kind, const MixedSet& s, const Plane& plane) {
  if (kind == "resolving") return report_json(is_resolving(s, plane));
  if (kind == "semi_resolving") {
    Json j = report_json(is_semi_resolving(s.points, plane));
    if (!s.lines.empty()) j["ok"] = false;
    return j;
  }
  if (kind == "split") return report_json(is_split_resolving(s.points, s.lines, plane));
  if (kind == "double_blocking") return double_blocking_report(s.points, plane);
  if (kind == "semioval") {
    Json j = semioval_json(semioval_check(s.points, plane));
    j["ok"] = j["is_semioval"];
    return j;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown certificate kind " + kind);
}

Json provenance(const Construction& c) {
  Json params = Json::object();
  for (const auto& [k, v] : c.params) params[k] = v;
  return Json{{"generator", c.name}, {"params", params}};
}

Emitted cmd_plane(const Options& o) {
  const Plane plane = plane_for(o.q);
  return {Json{{"schema_version", kSchemaVersion},
               {"kind", "plane"},
               {"q", o.q},
               {"field", field_json(plane.field())},
               {"points", plane.size()},
               {"lines", plane.size()},
               {"points_per_line", o.q + 1}}};
}

Emitted cmd_construct(const Options& o) {
  Loaded src;
  std::unique_ptr<Plane> own;
  const Plane* plane = nullptr;
  if (o.which == "semi-from-2bl") {
    src = load(o.in);
    plane = src.plane.get();
  } else {
    own = std::make_unique<Plane>(plane_for(o.q));
    plane = own.get();
  }
  if (o.which != "c" && (o.e || o.f || o.r || o.r_prime || o.qpt || o.l0 || o.l1 || o.u || o.v || o.z))
    throw Error(ErrorKind::InvalidArgument, "frame parameters apply to c only");

  Construction c;
  std::string kind = "resolving";
  if (o.which == "canonical") {
    c = canonical_4q4(*plane);
  } else if (o.which == "fano5") {
    c = fano_resolving5(*plane);
  } else if (o.which == "hyperoval10") {
    c = hyperoval_resolving10(*plane);
  } else if (o.which == "c") {
    SStarParams p;
    p.e = o.e, p.f = o.f, p.r = o.r, p.r_prime = o.r_prime, p.q = o.qpt;
    p.l0 = o.l0, p.l1 = o.l1, p.u = o.u, p.v = o.v, p.z = o.z;
    c = construction_c(o.id, *plane, p);
  } else if (o.which == "baer-pair") {
    c = o.double_blocking ? baer_pair_double_blocking(*plane) : baer_pair_semi_resolving(*plane);
    kind = o.double_blocking ? "double_blocking" : "semi_resolving";
  } else if (o.which == "vertexless-triangle") {
    c = vertexless_triangle(*plane, o.drop_extra);
    kind = "semi_resolving";
  } else if (o.which == "three-lines") {
    c = three_line_double_blocking(*plane);
    kind = "double_blocking";
  } else {
    const auto& b = src.set.points;
    if (b.empty()) throw Error(ErrorKind::NotDoubleBlocking, "empty point set");
    const PointId drop = o.drop.value_or(b.front());
    c.name = "semi_from_double_blocking";
    c.set = MixedSet(semi_from_double_blocking(*plane, b, drop), {});
    c.params = {{"dropped", drop}};
    kind = "semi_resolving";
  }
  if (o.dual) {
    if (kind != "resolving") throw Error(ErrorKind::InvalidArgument, "--dual applies to resolving sets only");
    c.set = dual(c.set);
    c.name += "_dual";
  }

  Json cert = set_certificate(kind, c.set, *plane);
  cert["provenance"] = provenance(c);
  cert["size"] = c.set.size();
  cert["verified"] = false;
  int code = kOk;
  if (o.verify) {
    Json report = check(kind, c.set, *plane);
    const bool ok = report.at("ok").get<bool>();
    cert["verified"] = ok;
    cert["report"] = std::move(report);
    if (!ok) code = kFailed;
  }
  return {std::move(cert), code};
}

Emitted cmd_verify(const Options& o) {
  static const std::map<std::string, std::string> kinds{{"resolving", "resolving"},
                                                        {"semi", "semi_resolving"},
                                                        {"split", "split"},
                                                        {"2bl", "double_blocking"},
                                                        {"semioval", "semioval"}};
  const Loaded l = load(o.in);
  const std::string kind = kinds.at(o.which);
  Json report = check(kind, l.set, *l.plane);
  const bool ok = report.at("ok").get<bool>();
  return {Json{{"schema_version", kSchemaVersion},
               {"kind", "verify_report"},
               {"check", kind},
               {"q", l.plane->order()},
               {"size", l.set.size()},
               {"ok", ok},
               {"report", std::move(report)}},
          ok ? kOk : kFailed};
}

SearchOptions search_options(const Options& o) {
  SearchOptions s;
  s.budget_nodes = o.budget_nodes;
  s.budget_seconds = o.budget_seconds;
  s.symmetry = o.symmetry == "on";
  s.parallel = !o.serial;
  if (o.method == "exhaustive") s.method = SearchMethod::Exhaustive;
  if (o.method == "bnb") s.method = SearchMethod::BranchAndBound;
  if (!o.checkpoint.empty()) s.checkpoint = o.checkpoint;
  return s;
}

Emitted cmd_search(const Options& o) {
  const Plane plane = plane_for(o.q);
  const SearchOptions opts = search_options(o);
  if (o.which == "no-smaller") {
    const SearchKind kind = parse_search_kind(o.kind);
    if (o.k == 0) throw Error(ErrorKind::InvalidArgument, "--k is required");
    const auto cert = verify_no_smaller(plane, o.k, kind, opts);
    Json j{{"schema_version", kSchemaVersion},
           {"kind", "no_smaller"},
           {"search_kind", to_string(kind)},
           {"q", o.q},
           {"field", field_json(plane.field())},
           {"k", o.k},
           {"holds", cert.holds},
           {"nodes", cert.nodes},
           {"proof_mode", to_string(ProofMode::Exhaustive)}};
    if (cert.witness) j["witness"] = {{"points", cert.witness->points}, {"lines", cert.witness->lines}};
    return {std::move(j), cert.holds ? kOk : kFailed};
  }
  static const std::map<std::string, SearchKind> kinds{
      {"mu", SearchKind::Resolving}, {"mus", SearchKind::SemiResolving}, {"tau2", SearchKind::DoubleBlocking}};
  const SearchResult r = min_search(plane, kinds.at(o.which), opts);
  Json j = search_json(r, plane);
  int code = r.budget_exceeded ? kBudget : kOk;
  if (!j.at("verified").get<bool>()) code = kFailed;
  return {std::move(j), code};
}

Emitted cmd_redei(const Options& o) {
  if (o.which == "szw-random" || o.which == "identity-random") {
    const std::uint32_t trials = o.trials ? o.trials : (o.which == "szw-random" ? 500 : 100);
    const Plane plane = plane_for(o.q);
    Rng rng(o.seed);
    std::uint32_t passed = 0, eligible = 0, attempts = 0;
    std::vector<std::uint32_t> failures;
    if (o.which == "szw-random") {
      for (std::uint32_t i = 0; i < trials; ++i) {
        const auto rep = random_szw_instance(rng, plane.field_ptr());
        if (rep.holds) ++passed;
        else if (failures.size() < 16) failures.push_back(i);
      }
      eligible = trials;
      attempts = trials;
    } else {
      // Random point sets until `trials` of them admit a frame line.
      while (eligible < trials && attempts < 100 * trials) {
        ++attempts;
        const auto s = random_subset(rng, plane.size(), 1, 3);
        try {
          const auto p = redei_profile(s, plane);
          const bool ok = p.identity_ok && p.euclid_ok;
          if (ok) ++passed;
          else if (failures.size() < 16) failures.push_back(attempts - 1);
          ++eligible;
        } catch (const Error& ex) {
          if (ex.kind() != ErrorKind::NoValidFrame) throw;
        }
      }
    }
    const bool ok = passed == eligible && eligible == trials;
    return {Json{{"schema_version", kSchemaVersion},
                 {"kind", o.which == "szw-random" ? "szw_random" : "identity_random"},
                 {"q", o.q},
                 {"seed", o.seed},
                 {"trials", trials},
                 {"attempts", attempts},
                 {"eligible", eligible},
                 {"passed", passed},
                 {"failures", failures},
                 {"ok", ok}},
            ok ? kOk : kFailed};
  }

  Loaded l;
  std::unique_ptr<Plane> own;
  const Plane* plane = nullptr;
  PointSet s;
  if (!o.in.empty()) {
    l = load(o.in);
    plane = l.plane.get();
    s = l.set.points;
  } else {
    own = std::make_unique<Plane>(plane_for(o.q));
    plane = own.get();
    s = known_upper_bound(*plane, SearchKind::SemiResolving).points;
  }

  if (o.which == "index-check") {
    const Prop48Report r = check_prop48(s, *plane);
    const IndexReport idx = point_index(s, *plane);
    std::uint32_t low = 0, high = 0;
    std::vector<char> in_s(plane->size(), 0);
    for (PointId p : s) in_s[p] = 1;
    for (PointId p = 0; p < plane->size(); ++p) {
      if (in_s[p]) continue;
      if (idx.ind[p] <= 2) ++low;
      else if (idx.ind[p] >= r.large_threshold) ++high;
    }
    std::vector<PointId> failing;
    for (const auto& e : r.evaluations)
      if (!e.holds) failing.push_back(e.point);
    const bool ok = r.all_hold && r.dichotomy_holds;
    return {Json{{"schema_version", kSchemaVersion},
                 {"kind", "index_check"},
                 {"q", plane->order()},
                 {"size", s.size()},
                 {"beta", r.beta},
                 {"t", r.t},
                 {"evaluated", r.evaluations.size()},
                 {"failing_points", failing},
                 {"all_hold", r.all_hold},
                 {"dichotomy",
                  {{"applicable", r.dichotomy_applicable},
                   {"holds", r.dichotomy_holds},
                   {"threshold", r.large_threshold},
                   {"low", low},
                   {"high", high},
                   {"offenders", r.dichotomy_offenders}}},
                 {"ok", ok}},
            ok ? kOk : kFailed};
  }

  const RedeiProfile p = o.focus ? redei_profile(s, *o.focus, *plane) : redei_profile(s, *plane);
  Json j = redei_json(p);
  j["size"] = s.size();
  const bool ok = p.identity_ok && p.euclid_ok && p.szw_ok && p.delta_le_t;
  return {std::move(j), ok ? kOk : kFailed};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Resolving sets and blocking sets in PG(2,q)", "pgres"};
  app.require_subcommand(1);

  auto* plane = app.add_subcommand("plane", "Plane summary");
  plane->add_option("which", o.which)->required()->check(CLI::IsMember({"info"}));
  plane->add_option("--q", o.q, "Order")->required();

  auto* construct = app.add_subcommand("construct", "Generate a construction");
  construct->add_option("which", o.which)
      ->required()
      ->check(CLI::IsMember({"canonical", "fano5", "hyperoval10", "c", "baer-pair", "vertexless-triangle",
                             "three-lines", "semi-from-2bl"}));
  construct->add_option("--q", o.q, "Order");
  construct->add_option("--id", o.id, "Construction id 1..32");
  construct->add_flag("--drop-extra", o.drop_extra, "Vertexless triangle minus one more point");
  construct->add_flag("--double-blocking", o.double_blocking, "Baer pair union instead of the semi-resolving set");
  construct->add_option("--in", o.in, "Double blocking certificate");
  construct->add_option("--drop", o.drop, "Point to remove");
  construct->add_flag("--verify", o.verify, "Re-check before emitting");
  construct->add_option("--out", o.out, "Also write the certificate here");
  construct->add_flag("--dual", o.dual, "Swap points and lines");
  for (auto [name, slot] : {std::pair{"--e", &o.e}, {"--f", &o.f}, {"--r", &o.r}, {"--r-prime", &o.r_prime},
                            {"--qpt", &o.qpt}, {"--l0", &o.l0}, {"--l1", &o.l1}, {"--u", &o.u}, {"--v", &o.v},
                            {"--z", &o.z}})
    construct->add_option(name, *slot);

  auto* verify = app.add_subcommand("verify", "Re-check a certificate");
  verify->add_option("which", o.which)
      ->required()
      ->check(CLI::IsMember({"resolving", "semi", "split", "2bl", "semioval"}));
  verify->add_option("--in", o.in)->required();

  auto* search = app.add_subcommand("search", "Exact minimum search");
  search->add_option("which", o.which)->required()->check(CLI::IsMember({"mu", "mus", "tau2", "no-smaller"}));
  search->add_option("--q", o.q)->required();
  search->add_option("--k", o.k, "Size to refute");
  search->add_option("--kind", o.kind, "resolving, semi_resolving or double_blocking");
  search->add_option("--budget-nodes", o.budget_nodes);
  search->add_option("--budget-seconds", o.budget_seconds);
  search->add_option("--symmetry", o.symmetry)->check(CLI::IsMember({"on", "off"}));
  search->add_option("--checkpoint", o.checkpoint);
  search->add_option("--method", o.method)->check(CLI::IsMember({"auto", "exhaustive", "bnb"}));
  search->add_flag("--serial", o.serial, "Use the serial kernels");
  search->add_option("--out", o.out);

  auto* redei = app.add_subcommand("redei", "Redei polynomial checks");
  redei->add_option("which", o.which)
      ->required()
      ->check(CLI::IsMember({"profile", "index-check", "szw-random", "identity-random"}));
  redei->add_option("--q", o.q);
  redei->add_option("--in", o.in);
  redei->add_option("--focus", o.focus);
  redei->add_option("--trials", o.trials);
  redei->add_option("--seed", o.seed);
  redei->add_option("--out", o.out);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << ex.what() << "\n" << app.help();
    return kUsage;
  }

  const bool needs_q = !verify->parsed() && !(construct->parsed() && o.which == "semi-from-2bl") && !(redei->parsed() && !o.in.empty());
  if (needs_q && o.q == 0) {
    err << "--q is required\n";
    return kUsage;
  }

  try {
    Emitted e;
    if (plane->parsed()) e = cmd_plane(o);
    else if (construct->parsed()) e = cmd_construct(o);
    else if (verify->parsed()) e = cmd_verify(o);
    else if (search->parsed()) e = cmd_search(o);
    else e = cmd_redei(o);
    const std::string text = canonical(e.json);
    if (!o.out.empty()) {
      std::ofstream f(o.out);
      if (!f) {
        err << "cannot write " << o.out << "\n";
        return kUsage;
      }
      f << text;
    }
    out << text;
    if (e.code == kFailed) err << "verification failed\n";
    if (e.code == kBudget) err << "budget exceeded\n";
    return e.code;
  } catch (const Error& ex) {
    err << ex.what() << "\n";
    return ex.kind() == ErrorKind::BudgetExceeded ? kBudget : kUsage;
  } catch (const std::exception& ex) {
    err << ex.what() << "\n";
    return kUsage;
  }
}

}  // namespace pgres::cli
