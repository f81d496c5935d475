#include "grouprho/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "grouprho/asymptotics.hpp"
#include "grouprho/bounds.hpp"
#include "grouprho/centroid.hpp"
#include "grouprho/decider.hpp"
#include "grouprho/diagonal.hpp"
#include "grouprho/enumeration.hpp"
#include "grouprho/error.hpp"
#include "grouprho/presentation.hpp"
#include "grouprho/zdgreen.hpp"

namespace grouprho::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string format = "json";
  std::size_t threads = 1;
  std::size_t radius_cap = 20;
  unsigned digits = 20;

  std::string file;
  std::string word;
  std::size_t n_max = 4;
  std::size_t radius = 3;
  std::size_t budget = 10000;
  std::string lambda = "1/6";
  std::string strategy = "dehn";
  std::size_t zd = 0;
  std::size_t quotient_length = 4;
  std::size_t samples = 8;
  std::size_t pairs = 4096;
  std::size_t k = 64;
  std::size_t every = 8;
  std::size_t quantum = 64;
  bool no_promise = false;
  std::size_t dim = 5;
  std::string width = "1e-6";
  std::string targets = "0.5,1.5";
  std::size_t steps = 2;
  std::size_t floor = 4;
  std::string cache;
};

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const RunConfig& cfg, const std::string& command, json body, std::ostream& out) {
  json doc{{"schema", "grouprho/1"}, {"command", command}};
  for (auto& [key, value] : body.items()) doc[key] = value;
  if (cfg.format == "text") {
    flatten(doc, "", out);
  } else {
    out << doc.dump(2) << "\n";
  }
}

void check_radius(const RunConfig& cfg, std::size_t r) {
  if (r > cfg.radius_cap) {
    throw PreconditionError("radius " + std::to_string(r) + " exceeds the cap of " +
                            std::to_string(cfg.radius_cap) + " (see --radius-cap)");
  }
}

WordProblemStrategy sound_strategy(const Presentation& p) {
  if (!check_small_cancellation(p).passes) {
    throw PreconditionError("presentation is not C'(1/6); no sound word problem strategy");
  }
  return WordProblemStrategy::dehn(p);
}

// Strategy for ball-based commands: the file, or Z^d with --zd.
WordProblemStrategy ball_strategy(const RunConfig& cfg) {
  if (cfg.zd > 0) {
    if (!cfg.file.empty()) throw PreconditionError("give either a presentation file or --zd");
    return WordProblemStrategy::zd_cube(cfg.zd);
  }
  if (cfg.file.empty()) throw PreconditionError("a presentation file or --zd is required");
  return sound_strategy(load_presentation(cfg.file));
}

json cmd_check(const RunConfig& cfg) {
  Presentation p = load_presentation(cfg.file);
  Rational lambda = parse_rational(cfg.lambda);
  CancellationReport r = check_small_cancellation(p, lambda);
  json pieces = json::array();
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    pieces.push_back({{"relator", to_string(p.relators()[i], p.alphabet())},
                      {"length", p.relators()[i].size()},
                      {"max_piece", r.max_piece_lengths[i]},
                      {"proper_power", static_cast<bool>(r.proper_power_flags[i])}});
  }
  json j{{"passes", r.passes},
         {"lambda", to_string(r.lambda)},
         {"worst_ratio", to_string(r.worst_ratio)},
         {"relators", pieces}};
  if (r.worst) {
    j["worst"] = {{"relator", r.worst->relator}, {"piece", to_string(r.worst->word, p.alphabet())}};
  }
  return j;
}

json cmd_wp(const RunConfig& cfg) {
  Presentation p = load_presentation(cfg.file);
  Word w = parse_word(cfg.word, p.alphabet());
  json j{{"word", cfg.word}, {"strategy", cfg.strategy}};
  if (cfg.strategy == "enumeration") {
    Triviality t = decide_word(w, WordProblemStrategy::enumeration(p, cfg.budget));
    j["trivial"] = t == Triviality::trivial ? json(true) : t == Triviality::nontrivial ? json(false) : json(nullptr);
    j["status"] = t == Triviality::budget_exhausted ? "budget_exhausted" : "decided";
    return j;
  }
  if (cfg.strategy != "dehn") throw PreconditionError("unknown strategy '" + cfg.strategy + "'");
  WordProblemStrategy s = sound_strategy(p);
  j["trivial"] = is_trivial(w, s);
  j["dehn_reduced"] = to_string(s.solver().reduce(w), p.alphabet());
  return j;
}

ReturnSeries::Options series_options(const RunConfig& cfg) {
  ReturnSeries::Options o;
  o.threads = cfg.threads;
  return o;
}

json cmd_rho(const RunConfig& cfg) {
  Presentation p = load_presentation(cfg.file);
  if (!check_small_cancellation(p).passes) {
    throw PreconditionError("presentation is not C'(1/6); the upper bound is not certified");
  }
  CertifiedInterval c = rho_interval(p, WordProblemStrategy::dehn(p), cfg.n_max, series_options(cfg));
  return to_json(c, cfg.digits);
}

AsymptoticsOptions asymptotics_options(const RunConfig& cfg) {
  AsymptoticsOptions o;
  o.quotient_length = cfg.quotient_length;
  o.samples = cfg.samples;
  o.pairs_per_sample = cfg.pairs;
  o.threads = cfg.threads;
  return o;
}

json cmd_growth(const RunConfig& cfg) {
  check_radius(cfg, cfg.n_max);
  return to_json(growth(ball_strategy(cfg), cfg.n_max, asymptotics_options(cfg)), cfg.digits);
}

json cmd_entropy(const RunConfig& cfg) {
  check_radius(cfg, cfg.n_max);
  return to_json(entropy(ball_strategy(cfg), cfg.n_max, asymptotics_options(cfg)), cfg.digits);
}

json cmd_lower_seq(const RunConfig& cfg) {
  Presentation p = load_presentation(cfg.file);
  if (cfg.every == 0) throw PreconditionError("--every must be positive");
  LowerSpectralSequence seq(p);
  json rows = json::array();
  for (std::size_t k = 1; k <= cfg.k; ++k) {
    seq.advance();
    if (k % cfg.every == 0 || k == cfg.k) rows.push_back({{"k", k}, {"x", to_json(seq.current(), cfg.digits)}});
  }
  return json{{"rows", rows}};
}

json cmd_decide(const RunConfig& cfg) {
  Presentation p = load_presentation(cfg.file);
  Word w = parse_word(cfg.word, p.alphabet());
  DeciderOptions o;
  o.quantum = cfg.quantum;
  o.series = series_options(cfg);
  DecisionOutcome d = decide_trivial(p, w, cfg.budget, Promise{!cfg.no_promise}, o);
  json j = to_json(d, p.alphabet(), cfg.digits);
  j["word"] = cfg.word;
  j["budget"] = cfg.budget;
  return j;
}

json cmd_zd(const RunConfig& cfg) {
  GreenEvaluation g = theta(cfg.dim, parse_rational(cfg.width));
  json j = to_json(g, cfg.digits);
  j["width"] = cfg.width;
  return j;
}

json cmd_diagonal(const RunConfig& cfg, std::ostream& err) {
  OracleList targets;
  std::stringstream list(cfg.targets);
  std::string item;
  while (std::getline(list, item, ',')) {
    if (item.find('/') != std::string::npos) {
      targets.push_back(std::make_shared<ConstantOracle>(parse_rational(item)));
    } else {
      targets.push_back(std::make_shared<DecimalOracle>(item));
    }
    auto [a, b] = targets.back()->enclosure(64);
    if (b > Rational(3, 5) && a < Rational(7, 5)) {
      err << "warning: target " << item << " lies in (0.6, 1.4); separation may need walk depths "
          << "beyond any practical budget\n";
    }
  }
  if (targets.size() < cfg.steps) throw PreconditionError("need one target per step");
  DiagonalState state;
  state.floor = cfg.floor;
  DiagonalOptions o;
  o.series = series_options(cfg);
  std::string status = "complete";
  for (std::size_t k = 0; k < cfg.steps; ++k) {
    std::optional<DiagonalState> next = diagonal_step(state, targets, cfg.budget, o);
    if (!next) {
      status = "undecided";
      break;
    }
    state = std::move(*next);
  }
  json replay = json::array();
  for (std::size_t k = 0; k < state.steps.size(); ++k) replay.push_back(replay_certificate(state, k, targets, o));
  json j = to_json(state, cfg.digits);
  j["status"] = status;
  j["targets"] = cfg.targets;
  j["replayed"] = replay;
  return j;
}

json cmd_cr(const RunConfig& cfg) {
  check_radius(cfg, cfg.radius);
  Presentation p = load_presentation(cfg.file);
  if (!check_small_cancellation(p).passes) throw PreconditionError("presentation is not C'(1/6)");
  SmallCancellationOracle oracle(p);
  return to_json(check_cr(oracle, p, cfg.radius), p.alphabet());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Certified spectral radius bounds and word problems for marked groups", "grouprho"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", cfg.threads, "Worker threads for walk counts")->check(CLI::Range(1, 256));
  app.add_option("--radius-cap", cfg.radius_cap, "Largest ball radius accepted");
  app.add_option("--digits", cfg.digits, "Fractional digits of decimal output")->check(CLI::Range(1, 1000));

  auto* check = app.add_subcommand("check", "Small cancellation report");
  check->add_option("file", cfg.file)->check(CLI::ExistingFile)->required();
  check->add_option("--lambda", cfg.lambda, "Threshold of C'(lambda)");

  auto* wp = app.add_subcommand("wp", "Word problem");
  wp->add_option("word", cfg.word)->required();
  wp->add_option("file", cfg.file)->check(CLI::ExistingFile)->required();
  wp->add_option("--strategy", cfg.strategy)->check(CLI::IsMember({"dehn", "enumeration"}));
  wp->add_option("--budget", cfg.budget, "Trivial words to enumerate");

  auto* rho = app.add_subcommand("rho", "Certified spectral radius interval");
  rho->add_option("file", cfg.file)->check(CLI::ExistingFile)->required();
  rho->add_option("--n-max", cfg.n_max, "Uses p(2n) for n <= n-max")->check(CLI::Range(1, 100000));

  auto* gr = app.add_subcommand("growth", "Ball sizes and growth envelopes");
  gr->add_option("file", cfg.file)->check(CLI::ExistingFile);
  gr->add_option("--zd", cfg.zd, "Use Z^d with cube generators instead of a file")->check(CLI::Range(1, 5));
  gr->add_option("--n-max", cfg.n_max)->check(CLI::Range(1, 1000));
  gr->add_option("--quotient-length", cfg.quotient_length);
  gr->add_option("--samples", cfg.samples);
  gr->add_option("--pairs", cfg.pairs, "Pairs consumed per sample");

  auto* en = app.add_subcommand("entropy", "Walk entropy and envelopes");
  en->add_option("file", cfg.file)->check(CLI::ExistingFile);
  en->add_option("--zd", cfg.zd)->check(CLI::Range(1, 5));
  en->add_option("--n-max", cfg.n_max)->check(CLI::Range(1, 1000));
  en->add_option("--quotient-length", cfg.quotient_length);
  en->add_option("--samples", cfg.samples);
  en->add_option("--pairs", cfg.pairs);

  auto* ls = app.add_subcommand("lower-seq", "Lower spectral sequence x_k");
  ls->add_option("file", cfg.file)->check(CLI::ExistingFile)->required();
  ls->add_option("--k", cfg.k)->check(CLI::Range(1, 100000000));
  ls->add_option("--every", cfg.every, "Row spacing");

  auto* de = app.add_subcommand("decide", "Two-process triviality decision");
  de->add_option("word", cfg.word)->required();
  de->add_option("file", cfg.file)->check(CLI::ExistingFile)->required();
  de->add_option("--budget", cfg.budget, "Total steps of both processes");
  de->add_option("--quantum", cfg.quantum, "Lower-sequence words per step");
  de->add_flag("--no-promise", cfg.no_promise, "Record that the non-amenability promise is not declared");

  auto* zd = app.add_subcommand("zd", "Green function of Z^d at 1");
  zd->add_option("--dim", cfg.dim)->check(CLI::Range(1, 64));
  zd->add_option("--width", cfg.width, "Target width of the theta interval");

  auto* dg = app.add_subcommand("diagonal", "Diagonalization steps");
  dg->add_option("--targets", cfg.targets, "Comma separated decimals or fractions");
  dg->add_option("--steps", cfg.steps);
  dg->add_option("--floor", cfg.floor, "Relator indices start above this");
  dg->add_option("--budget", cfg.budget, "Triples evaluated per step");

  auto* cr = app.add_subcommand("cr-check", "Centroid set properties");
  cr->add_option("file", cfg.file)->check(CLI::ExistingFile)->required();
  cr->add_option("--radius", cfg.radius);

  std::vector<std::string> argv_storage{"grouprho"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::usage;
  }

  try {
    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    json body;
    if (name == "check") body = cmd_check(cfg);
    else if (name == "wp") body = cmd_wp(cfg);
    else if (name == "rho") body = cmd_rho(cfg);
    else if (name == "growth") body = cmd_growth(cfg);
    else if (name == "entropy") body = cmd_entropy(cfg);
    else if (name == "lower-seq") body = cmd_lower_seq(cfg);
    else if (name == "decide") body = cmd_decide(cfg);
    else if (name == "zd") body = cmd_zd(cfg);
    else if (name == "diagonal") body = cmd_diagonal(cfg, err);
    else body = cmd_cr(cfg);
    emit(cfg, name, std::move(body), out);
    return ExitCode::ok;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::precondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::failure;
  }
}

}  // namespace grouprho::cli
