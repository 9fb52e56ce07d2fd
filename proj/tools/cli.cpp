#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "aluffi/errors.hpp"
#include "aluffi/groebner.hpp"
#include "aluffi/ideal.hpp"
#include "aluffi/jacobian.hpp"
#include "aluffi/kernels.hpp"
#include "aluffi/points.hpp"
#include "aluffi/reference_suite.hpp"
#include "aluffi/report_json.hpp"

namespace aluffi::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  std::string input;
  std::string order = "grevlex";
  bool json = false;
  std::optional<unsigned> degree_cap;
  unsigned t_max = 2;
  std::optional<std::size_t> r;
  std::uint64_t seed = 1;
  // command-specific
  bool igp = false;
  std::string target = "ideal";
  unsigned max_degree = 5;
  std::string row;
  std::size_t conj_n = 3;
  unsigned trials = 1;
  long bound = 10;
  std::string isa;
};

// Input is either a point file ("n s" header) or an ideal file ("ring n"
// header followed by one polynomial per line).
struct Input {
  std::optional<PointSet> points;
  Ideal ideal;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string strip_comment(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

Ideal parse_ideal_file(const std::string& text, TermOrder order) {
  std::istringstream in(text);
  std::string line;
  std::optional<PolyRing> ring;
  std::vector<Polynomial> gens;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    line = strip_comment(line);
    if (line.empty()) continue;
    if (!ring) {
      std::istringstream head(line);
      std::string word;
      long n = -1;
      if (!(head >> word >> n) || word != "ring" || n < 1 || n + 1 > static_cast<long>(kMaxVars) || (head >> word))
        throw ParseError("ideal file must start with 'ring n'", number);
      ring = PolyRing::projective(static_cast<std::size_t>(n), order);
      continue;
    }
    try {
      gens.push_back(parse_poly(line, *ring));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " (line " + std::to_string(number) + ")", number);
    }
  }
  if (!ring) throw ParseError("empty ideal file", 0);
  return Ideal(*ring, std::move(gens));
}

Input load_input(const RunConfig& cfg) {
  const std::string text = read_file(cfg.input);
  const TermOrder order = TermOrder::from_name(cfg.order);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = strip_comment(line);
    if (line.empty()) continue;
    if (line.rfind("ring", 0) == 0) return {std::nullopt, parse_ideal_file(text, order)};
    break;
  }
  PointSet pts = parse_points(text);
  const Ideal j = ideal_of_points(pts);
  return {std::move(pts), Ideal(j.ring().with_order(order), j.generators())};
}

std::size_t default_r(const RunConfig& cfg, const Ideal& j) { return cfg.r.value_or(j.ring().n()); }

std::string join(const std::vector<Polynomial>& gens) {
  std::string out;
  for (const auto& g : gens) out += (out.empty() ? "" : ", ") + format_poly(g);
  return "(" + out + ")";
}

Ideal pick_target(const RunConfig& cfg, const Ideal& j) {
  if (cfg.target == "ideal") return j;
  if (cfg.target == "critical") return critical_ideal(j, default_r(cfg, j)).critical_ideal;
  if (cfg.target == "jacobian") return jacobian_ideal(j, default_r(cfg, j));
  throw PreconditionError("unknown target '" + cfg.target + "'");
}

int cmd_points_ideal(const RunConfig& cfg, std::ostream& out) {
  const Input in = load_input(cfg);
  if (!in.points) throw ParseError("points-ideal needs a point file", 0);
  std::optional<IgpGenerators> igp;
  std::optional<FrameNormalization> frame;
  if (cfg.igp) {
    if (!glp_check(*in.points)) throw GlpViolation("points are not in general linear position");
    frame = normalize_frame(*in.points);
    igp = igp_construct(frame->normalized);
  }
  const auto& gens = igp ? igp->generators : in.ideal.generators();
  const auto mg = minimal_generators(Ideal(in.points->ring(), gens));
  if (cfg.json) {
    json doc{{"schema_version", kJsonSchemaVersion},
             {"n", in.points->n()},
             {"s", in.points->size()},
             {"generators", to_json(mg.generators)},
             {"mu", mg.mu}};
    if (igp) {
      doc["igp"] = to_json(*igp);
      json change = json::array();
      for (std::size_t r = 0; r < frame->change.rows(); ++r) {
        json row = json::array();
        for (const auto& c : frame->change.row(r)) row.push_back(c.get_str());
        change.push_back(std::move(row));
      }
      doc["frame_change"] = std::move(change);
    }
    out << doc.dump(2) << "\n";
    return kOk;
  }
  if (igp) out << "# ideal in the standard frame\n";
  out << "J = " << join(mg.generators) << "\n";
  out << "mu = " << mg.mu << "\n";
  if (igp) {
    out << "t range = [" << igp->t_first << ", " << igp->n - 1 << "]\n";
    for (const auto& [ij, values] : igp->alpha) {
      out << "alpha[" << ij.first << "," << ij.second << "] =";
      for (std::size_t k = 0; k < values.size(); ++k) out << " t" << igp->t_first + k << ":" << values[k].get_str();
      out << "\n";
    }
  }
  return kOk;
}

int cmd_gb(const RunConfig& cfg, std::ostream& out) {
  const Input in = load_input(cfg);
  const Ideal target = pick_target(cfg, in.ideal);
  const GroebnerBasis& gb = target.groebner(TermOrder::from_name(cfg.order));
  if (cfg.json) {
    out << to_json(gb).dump(2) << "\n";
    return kOk;
  }
  out << "# reduced Groebner basis, order " << gb.order.name() << ", " << gb.elements.size() << " elements\n";
  for (const auto& g : gb.elements) out << format_poly(g) << "\n";
  return kOk;
}

int cmd_hilbert(const RunConfig& cfg, std::ostream& out) {
  const Input in = load_input(cfg);
  const Ideal target = pick_target(cfg, in.ideal);
  std::vector<std::size_t> values;
  for (unsigned d = 0; d <= cfg.max_degree; ++d) values.push_back(hilbert_function(target, d));
  if (cfg.json) {
    out << json{{"schema_version", kJsonSchemaVersion}, {"hilbert", values}}.dump(2) << "\n";
    return kOk;
  }
  for (std::size_t d = 0; d < values.size(); ++d) out << (d ? ", " : "") << values[d];
  out << "\n";
  return kOk;
}

int cmd_mu(const RunConfig& cfg, std::ostream& out) {
  const Input in = load_input(cfg);
  const auto mg = minimal_generators(pick_target(cfg, in.ideal));
  if (cfg.json) {
    out << json{{"schema_version", kJsonSchemaVersion}, {"mu", mg.mu}, {"generators", to_json(mg.generators)}}.dump(2)
        << "\n";
    return kOk;
  }
  out << "mu = " << mg.mu << "\n";
  for (const auto& g : mg.generators) out << format_poly(g) << "\n";
  return kOk;
}

int cmd_critical(const RunConfig& cfg, std::ostream& out) {
  const Input in = load_input(cfg);
  const auto data = critical_ideal(in.ideal, default_r(cfg, in.ideal));
  if (cfg.json) {
    out << to_json(data).dump(2) << "\n";
    return kOk;
  }
  out << "r = " << data.r << "\n";
  out << "nonzero minors = " << data.minors.size() << "\n";
  out << "mu(I_r) = " << data.mu_critical << "\n";
  out << "I_r = m^r: " << (data.equals_power ? "yes" : "no") << "\n";
  for (const auto& g : data.critical_ideal.generators()) out << format_poly(g) << "\n";
  return kOk;
}

int cmd_jacobian_ideal(const RunConfig& cfg, std::ostream& out) {
  const Input in = load_input(cfg);
  const std::size_t r = default_r(cfg, in.ideal);
  const Ideal i = jacobian_ideal(in.ideal, r);
  const bool power = ideal_contains_ideal(i, irrelevant_power(i.ring(), static_cast<unsigned>(r)));
  if (cfg.json) {
    out << json{{"schema_version", kJsonSchemaVersion},
                {"r", r},
                {"jacobian_ideal", to_json(i.generators())},
                {"contains_power", power}}
               .dump(2)
        << "\n";
    return kOk;
  }
  out << "I = " << join(i.generators()) << "\n";
  out << "m^" << r << " in I: " << (power ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_vv_check(const RunConfig& cfg, std::ostream& out) {
  const Input in = load_input(cfg);
  const std::size_t r = default_r(cfg, in.ideal);
  const Ideal i = jacobian_ideal(in.ideal, r);
  const TorsionReport report = torsion_free_check(in.ideal, i, cfg.t_max, r);
  if (cfg.json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << "J = " << join(report.j.generators()) << "\n";
    out << "I = " << join(report.i.generators()) << "\n";
    out << "r = " << r << "\n";
    out << "fast path (I = (J, m^r)): " << (report.fast_path ? "yes" : "no") << "\n";
    for (const auto& d : report.degrees) {
      out << "t = " << d.t << ": " << (d.vv_zero ? "J∩I^t = J*I^(t-1)" : "torsion");
      if (d.witness) out << ", witness " << format_poly(*d.witness);
      out << "\n";
    }
    out << "verdict: " << report.verdict_label() << "\n";
  }
  return report.torsion_found() ? kTorsionOrMismatch : kOk;
}

int cmd_paper_examples(const RunConfig& cfg, std::ostream& out) {
  std::vector<SuiteRow> rows;
  if (cfg.row.empty()) {
    rows = run_reference_suite();
  } else {
    rows.push_back(run_reference_row(cfg.row));
  }
  std::size_t agreeing = 0;
  for (const auto& row : rows) agreeing += row.ok() ? 1 : 0;
  if (cfg.json) {
    json doc{{"schema_version", kJsonSchemaVersion}, {"rows", json::array()}};
    for (const auto& row : rows) {
      json checks = json::array();
      for (const auto& c : row.checks)
        checks.push_back({{"what", c.what}, {"expected", c.expected}, {"computed", c.computed}, {"ok", c.ok}});
      doc["rows"].push_back({{"name", row.name}, {"ok", row.ok()}, {"checks", std::move(checks)}});
    }
    doc["agreeing"] = agreeing;
    doc["total"] = rows.size();
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& row : rows) {
      out << (row.ok() ? "[ok]       " : "[MISMATCH] ") << row.name << "\n";
      for (const auto& c : row.checks)
        out << "    " << (c.ok ? "  " : "! ") << c.what << ": expected " << c.expected << ", computed " << c.computed
            << "\n";
    }
    out << agreeing << "/" << rows.size() << " rows agree\n";
  }
  return agreeing == rows.size() ? kOk : kTorsionOrMismatch;
}

int cmd_conjecture(const RunConfig& cfg, std::ostream& out) {
  const std::size_t n = cfg.conj_n;
  if (n < 3) throw PreconditionError("conjecture experiment needs n >= 3");
  if (cfg.trials < 1) throw PreconditionError("need at least one trial");
  if (cfg.bound < 1) throw PreconditionError("bound must be positive");
  const std::size_t s = 2 * n;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<long> coord(-cfg.bound, cfg.bound);
  constexpr int kMaxAttempts = 1000;

  json trials = json::array();
  std::ostringstream text;
  text << "EXPERIMENT: is I_n(Theta) = m^n for s = 2n random points in general linear position?\n";
  text << "n = " << n << ", s = " << s << ", trials = " << cfg.trials << ", seed = " << cfg.seed
       << ", bound = " << cfg.bound << "\n";
  std::size_t equal_count = 0;
  for (unsigned trial = 0; trial < cfg.trials; ++trial) {
    std::optional<PointSet> pts;
    for (int attempt = 0; attempt < kMaxAttempts && !pts; ++attempt) {
      std::vector<ProjectivePoint> sample;
      for (std::size_t k = 0; k < s; ++k) {
        std::vector<Coefficient> c(n + 1);
        for (std::size_t i = 0; i < n; ++i) c[i] = coord(rng);
        c[n] = 1;
        sample.emplace_back(std::move(c));
      }
      try {
        PointSet candidate(n, std::move(sample));
        if (glp_check(candidate)) pts = std::move(candidate);
      } catch (const PreconditionError&) {
        // coincident points; resample
      }
    }
    if (!pts) throw Error("could not sample points in general linear position");
    const Ideal j = ideal_of_points(*pts);
    const auto crit = critical_ideal(j, n);
    const bool contains_power = jacobian_contains_power(j, n);
    equal_count += crit.equals_power ? 1 : 0;
    json points = json::array();
    for (const auto& p : pts->points()) {
      json row = json::array();
      for (const auto& c : p.coords()) row.push_back(c.get_str());
      points.push_back(std::move(row));
    }
    trials.push_back({{"trial", trial},
                      {"points", std::move(points)},
                      {"mu_J", minimal_generators(j).mu},
                      {"mu_critical", crit.mu_critical},
                      {"equals_power", crit.equals_power},
                      {"jacobian_contains_power", contains_power}});
    text << "trial " << trial << ": mu(I_n) = " << crit.mu_critical << ", I_n = m^n: " << (crit.equals_power ? "yes" : "no")
         << ", m^n in I: " << (contains_power ? "yes" : "no") << "\n";
  }
  text << "summary: I_n = m^n in " << equal_count << " of " << cfg.trials << " trials (report only)\n";
  if (cfg.json) {
    out << json{{"schema_version", kJsonSchemaVersion},
                {"label", "EXPERIMENT"},
                {"n", n},
                {"s", s},
                {"seed", cfg.seed},
                {"bound", cfg.bound},
                {"trials", std::move(trials)},
                {"equals_power_count", equal_count}}
               .dump(2)
        << "\n";
  } else {
    out << text.str();
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Ideals of points, Jacobian ideals and Valabrega-Valla torsion checks over Q"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--order", cfg.order, "Term order")->check(CLI::IsMember({"lex", "grevlex"}));
  app.add_flag("--json", cfg.json, "Emit JSON instead of text");
  app.add_option("--degree-cap", cfg.degree_cap, "Abort Groebner computations past this S-pair degree");
  app.add_option("--t-max", cfg.t_max, "Largest degree of the torsion check")->check(CLI::Range(2u, 64u));
  app.add_option("--r", cfg.r, "Minor size for the critical ideal (default n)")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "PRNG seed");
  app.add_option("--isa", cfg.isa, "Force the monomial kernel ISA")->check(CLI::IsMember({"scalar", "avx2"}));

  auto* points_ideal = app.add_subcommand("points-ideal", "Ideal of a point set");
  points_ideal->add_option("file", cfg.input, "Point file")->required();
  points_ideal->add_flag("--igp", cfg.igp, "Build the quadrics directly after moving to the standard frame");

  auto add_target = [&](CLI::App* sub) {
    sub->add_option("file", cfg.input, "Point or ideal file")->required();
    sub->add_option("--target", cfg.target, "Which ideal to use")
        ->check(CLI::IsMember({"ideal", "critical", "jacobian"}));
  };
  add_target(app.add_subcommand("gb", "Reduced Groebner basis"));
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function values for d = 0..D");
  add_target(hilbert);
  hilbert->add_option("--max-degree", cfg.max_degree, "Largest degree D");
  add_target(app.add_subcommand("mu", "Minimal number of generators"));
  app.add_subcommand("critical", "Critical ideal I_r of the Jacobian matrix")
      ->add_option("file", cfg.input, "Point or ideal file")
      ->required();
  app.add_subcommand("jacobian-ideal", "Jacobian ideal (J, I_r)")
      ->add_option("file", cfg.input, "Point or ideal file")
      ->required();
  app.add_subcommand("vv-check", "Valabrega-Valla torsion check of J in (J, I_r)")
      ->add_option("file", cfg.input, "Point or ideal file")
      ->required();
  app.add_subcommand("paper-examples", "Run the built-in reference computations")
      ->add_option("--row", cfg.row, "Run a single row");
  auto* conjecture = app.add_subcommand("conjecture", "Random experiment on 2n points in P^n");
  conjecture->add_option("--n", cfg.conj_n, "Ambient dimension")->required();
  conjecture->add_option("--trials", cfg.trials, "Number of samples");
  conjecture->add_option("--bound", cfg.bound, "Coordinates are drawn from [-B, B]");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    struct IsaGuard {
      kernels::Isa previous = kernels::active().isa;
      ~IsaGuard() { kernels::select(previous); }
    } isa_guard;
    if (!cfg.isa.empty()) kernels::select(cfg.isa == "avx2" ? kernels::Isa::avx2 : kernels::Isa::scalar);
    ScopedDegreeCap cap(cfg.degree_cap);
    if (cfg.command == "points-ideal") return cmd_points_ideal(cfg, out);
    if (cfg.command == "gb") return cmd_gb(cfg, out);
    if (cfg.command == "hilbert") return cmd_hilbert(cfg, out);
    if (cfg.command == "mu") return cmd_mu(cfg, out);
    if (cfg.command == "critical") return cmd_critical(cfg, out);
    if (cfg.command == "jacobian-ideal") return cmd_jacobian_ideal(cfg, out);
    if (cfg.command == "vv-check") return cmd_vv_check(cfg, out);
    if (cfg.command == "paper-examples") return cmd_paper_examples(cfg, out);
    if (cfg.command == "conjecture") return cmd_conjecture(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const GlpViolation& e) {
    err << "error: " << e.what() << "\n";
    return kGlpViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  err << "error: unknown command\n";
  return kFailure;
}

}  // namespace aluffi::cli
