#pragma once

// Command-line surface: game validation, axiom checks, play classification,
// composition, law suites, proof checking and interpretation, PCF evaluation,
// and seeded instance generation.
//
// Exit codes: 0 success / property holds, 1 semantic failure, 2 parse or I/O.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "category.hpp"
#include "io.hpp"
#include "pcf.hpp"

namespace mbg::cli {

namespace detail {

inline int exit_code_for(const Error& e) {
  return (e.kind == ErrorKind::ParseError || e.kind == ErrorKind::IoError) ? 2 : 1;
}

inline Discipline parse_discipline(const std::string& s) {
  if (s == "linear") return Discipline::Linear;
  if (s == "affine") return Discipline::Affine;
  if (s == "exponential") return Discipline::Exponential;
  fail(ErrorKind::ParseError, "discipline must be linear, affine or exponential");
}

inline std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline int print_laws(const LawReport& rep, size_t depth) {
  bool ok = true;
  for (const auto& r : rep.results) {
    std::cout << "LAW " << r.name << " depth=" << depth << (r.holds ? " HOLDS" : " FAILS");
    if (!r.holds && !r.witness.empty()) std::cout << " witness=" << r.witness;
    std::cout << "\n";
    ok = ok && r.holds;
  }
  return ok ? 0 : 1;
}

}  // namespace detail

inline int run(int argc, const char* const* argv) {
  CLI::App app{"multi-bracketed Conway games, tensorial sequent proofs, and a linear PCF"};
  app.require_subcommand(1);

  size_t depth = config().depth;
  if (const char* env = std::getenv("TG_DEPTH")) depth = std::strtoul(env, nullptr, 10);

  // check-game
  std::string game_arg;
  auto* c_check = app.add_subcommand("check-game", "validate a game file or expression");
  c_check->add_option("game", game_arg, "path or combinator expression")->required();

  // axioms
  std::string ax_arg;
  size_t ax_depth = depth;
  auto* c_ax = app.add_subcommand("axioms", "check the three kappa axioms over bounded paths");
  c_ax->add_option("game", ax_arg)->required();
  c_ax->add_option("--depth", ax_depth);

  // wb-play
  std::string wb_game, wb_play;
  auto* c_wb = app.add_subcommand("wb-play", "classify a play as well-bracketed or not");
  c_wb->add_option("game", wb_game)->required();
  c_wb->add_option("--play", wb_play, "comma-separated move names")->required();

  // compose
  std::string sig_path, tau_path, out_path;
  size_t comp_depth = depth;
  auto* c_comp = app.add_subcommand("compose", "compose two strategy files");
  c_comp->add_option("sigma", sig_path)->required();
  c_comp->add_option("tau", tau_path)->required();
  c_comp->add_option("--out", out_path)->required();
  c_comp->add_option("--depth", comp_depth);

  // laws
  size_t laws_depth = 8;
  std::string samples_arg;
  auto* c_laws = app.add_subcommand("laws", "run the categorical and tensorial law suites");
  c_laws->add_option("--depth", laws_depth);
  c_laws->add_option("--samples", samples_arg, "comma-separated game expressions");

  // check-proof
  std::string proof_path;
  auto* c_proof = app.add_subcommand("check-proof", "check a sequent-calculus proof file");
  c_proof->add_option("proof", proof_path)->required();

  // interpret
  std::string int_path, int_disc = "linear", int_emit = "summary";
  size_t int_depth = depth;
  auto* c_int = app.add_subcommand("interpret", "interpret a checked proof as strategies");
  c_int->add_option("proof", int_path)->required();
  c_int->add_option("--discipline", int_disc);
  c_int->add_option("--emit", int_emit, "plays or summary");
  c_int->add_option("--depth", int_depth);

  // pcf-run
  std::string pcf_path, pcf_disc = "linear";
  size_t pcf_depth = 12;
  auto* c_pcf = app.add_subcommand("pcf-run", "evaluate a closed boolean program");
  c_pcf->add_option("program", pcf_path)->required();
  c_pcf->add_option("--discipline", pcf_disc);
  c_pcf->add_option("--depth", pcf_depth);

  // random-game
  uint64_t seed = 1;
  size_t size = 6;
  std::string rnd_out;
  auto* c_rnd = app.add_subcommand("random-game", "generate a seeded bracketed game");
  c_rnd->add_option("--seed", seed);
  c_rnd->add_option("--size", size);
  c_rnd->add_option("--out", rnd_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*c_check) {
      GamePtr g = std::filesystem::exists(game_arg) ? io::load_game(game_arg)
                                                    : io::parse_game_expr(game_arg);
      // touch every reachable position of a finite game
      std::vector<PosId> todo{g->root()};
      std::set<PosId> seen{g->root()};
      while (!todo.empty()) {
        PosId p = todo.back();
        todo.pop_back();
        for (MoveId m : g->moves_from(p))
          if (seen.insert(g->move(m).tgt).second) todo.push_back(g->move(m).tgt);
      }
      std::cout << "GAME ok positions=" << g->pos_count() << " moves=" << g->move_count() << "\n";
      return 0;
    }
    if (*c_ax) {
      GamePtr g = std::filesystem::exists(ax_arg) ? io::load_game(ax_arg)
                                                  : io::parse_game_expr(ax_arg);
      auto rep = check_axioms(*g, ax_depth);
      for (const auto& v : rep.violations) {
        std::cerr << "VIOLATION " << v.property << " " << v.detail << " path=";
        for (const auto& kk : v.witness) std::cerr << kk << " ";
        std::cerr << "\n";
      }
      std::cout << "AXIOMS " << (rep.ok() ? "ok" : "violated") << " paths=" << rep.paths_checked
                << " depth=" << ax_depth << "\n";
      return rep.ok() ? 0 : 1;
    }
    if (*c_wb) {
      GamePtr g = io::load_game(wb_game);
      auto keys = detail::split_commas(wb_play);
      Path p = path_from_keys(*g, g->root(), keys);
      bool ok = is_wb_play(*g, p);
      std::cout << "WB " << (ok ? "true" : "false") << "\n";
      return ok ? 0 : 1;
    }
    if (*c_comp) {
      Strategy s = io::load_strategy(sig_path);
      Strategy t = io::load_strategy(tau_path);
      Strategy st = compose(s, t);
      size_t n = st.plays_upto(comp_depth).size();
      io::write_file(out_path, io::strategy_to_sexpr(st, comp_depth).dump() + "\n");
      std::cout << "COMPOSED plays=" << n << " depth=" << comp_depth << "\n";
      return 0;
    }
    if (*c_laws) {
      std::vector<GamePtr> samples;
      for (const auto& s : detail::split_commas(samples_arg))
        samples.push_back(std::filesystem::exists(s) ? io::load_game(s) : io::parse_game_expr(s));
      LawReport rep = law_suite(laws_depth, samples);
      LawReport more = tensorial_laws(laws_depth);
      rep.results.insert(rep.results.end(), more.results.begin(), more.results.end());
      return detail::print_laws(rep, laws_depth);
    }
    if (*c_proof) {
      auto pf = io::load_proof(proof_path);
      logic::check_proof(pf.goal, pf.derivation);
      std::cout << "PROOF ok goal=" << pf.goal.str() << "\n";
      return 0;
    }
    if (*c_int) {
      auto pf = io::load_proof(int_path);
      auto checked = logic::check_proof(pf.goal, pf.derivation);
      auto m = logic::interpret_proof(checked, detail::parse_discipline(int_disc));
      if (int_emit == "plays") {
        for (size_t i = 0; i < m.components.size(); ++i) {
          for (const auto& ks : plays_as_keys(m.components[i], int_depth)) {
            std::cout << "PLAY " << i << ":";
            for (const auto& kk : ks) std::cout << " " << kk;
            std::cout << "\n";
          }
        }
      } else {
        bool wb = true;
        for (const auto& comp : m.components) wb = wb && is_wb_strategy(comp, int_depth);
        std::cout << "INTERPRETED components=" << m.components.size() << " from=" << m.from.size()
                  << " to=" << m.to.size() << " wb=" << (wb ? "true" : "false") << "\n";
      }
      return 0;
    }
    if (*c_pcf) {
      auto term = pcf::parse_term(sx::parse(io::read_file(pcf_path)));
      auto r = pcf::pcf_eval(term, detail::parse_discipline(pcf_disc), pcf_depth);
      std::cout << "RESULT " << pcf::to_string(r) << "\n";
      return 0;
    }
    if (*c_rnd) {
      GamePtr g = gen_random_game(seed, size);
      if (!rnd_out.empty()) io::save_game(rnd_out, g);
      std::cout << "GENERATED seed=" << seed << " positions=" << g->pos_count()
                << " moves=" << g->move_count() << (seed % 2 == 0 ? " kind=qa" : " kind=multi")
                << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return detail::exit_code_for(e);
  } catch (const sx::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace mbg::cli
