// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>

#include <mbg/cli.hpp>

#include "fixtures.hpp"

using namespace mbg;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double limit_s,
               const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_s) {
    ok = false;
    detail += " [over time limit " + std::to_string(limit_s) + "s]";
  }
  std::cout << "ACCEPTANCE " << number << " " << name << " " << (ok ? "PASS" : "FAIL") << " ("
            << secs << "s)";
  if (!ok && !detail.empty()) std::cout << " " << detail;
  std::cout << "\n";
  if (!ok) failures++;
}

Path keyed(const GamePtr& g, const std::vector<std::string>& ks) {
  return path_from_keys(*g, g->root(), ks);
}

Strategy strictness_tester(const GamePtr& t_game) {
  return routed_strategy(tensor(dual(pointed_unit()), t_game), "strict?",
                         [](const Game& gg, const Play& odd) -> std::optional<std::string> {
                           std::string k = gg.move_key(odd.back());
                           if (k == "L.^") return "R.~";
                           if (k == "R.c0:*") return "R.c0:L.c0:*";          // interrogate f
                           if (k == "R.c0:L.c0:L.c0:~") return "R.c0:R.c0:^";  // jump past f
                           return std::nullopt;
                         });
}

}  // namespace

int main() {
  auto b = sample_bool_game();
  auto pcf2 = fixtures::pcf2_game();
  auto triple = fixtures::triple_game();

  criterion(1, "kappa-table", 1.0, [&](std::string& why) {
    PosId p2 = path_end(*pcf2, keyed(pcf2, {"q1", "q2"}));
    bool ok = kappa(*pcf2, keyed(pcf2, {"q1", "q2", "q3", "tt3"})) == ResourceCount{1, 1} &&
              kappa(*pcf2, keyed(pcf2, {"q1", "q2", "q3", "tt1"})) == ResourceCount{1, 1} &&
              kappa(*pcf2, path_from_keys(*pcf2, p2, {"q3", "tt3"})) == ResourceCount{0, 0} &&
              kappa(*pcf2, path_from_keys(*pcf2, p2, {"q3", "tt1"})) == ResourceCount{0, 1};
    if (!ok) why = "a kappa value differs from the table";
    return ok;
  });

  criterion(2, "well-bracketing-classification", 1.0, [&](std::string& why) {
    bool ok = is_wb_play(*pcf2, keyed(pcf2, {"q1", "q2", "q3", "tt3", "tt2", "tt1"})) &&
              !is_wb_play(*pcf2, keyed(pcf2, {"q1", "q2", "q3", "tt1"})) &&
              is_wb_play(*triple, keyed(triple, {"q1", "qL", "ttL", "qR", "ttR", "tt1"})) &&
              !is_wb_play(*triple, keyed(triple, {"q1", "qR", "ttR", "tt1"}));
    if (!ok) why = "a play was classified against the table";
    return ok;
  });

  criterion(3, "stack-oracle-equivalence", 60.0, [&](std::string& why) {
    size_t games = 0, plays = 0;
    for (uint64_t seed = 0; games < 1000; seed += 2, ++games) {  // even seeds: QA games
      GamePtr g = gen_random_game(seed, 4 + seed % 9);
      for (const auto& p : enumerate_alternating_plays(*g, 12)) {
        ++plays;
        bool lhs = is_wb_play(*g, p);
        bool rhs = classic_wb_oracle(qa_label_play(*g, p));
        if (lhs != rhs) {
          why = "disagreement on seed " + std::to_string(seed);
          return false;
        }
      }
    }
    why = std::to_string(plays) + " plays agreed";
    return true;
  });

  criterion(4, "kappa-axioms", 120.0, [&](std::string& why) {
    GamePtr two = neg({pointed_unit(), pointed_unit()});
    std::vector<std::pair<GamePtr, size_t>> fixtures_list{
        {unit_game(), 8},
        {b, 8},
        {dual(b), 8},
        {tensor(b, b), 8},
        {bang(b), 8},
        {two, 8},
        {affine_strip(two), 8},
        {bool_object(Discipline::Linear), 8},
        {bool_object(Discipline::Affine), 8},
        {bool_object(Discipline::Exponential), 8},
        {coalesce(bool_object(Discipline::Linear), bool_object(Discipline::Linear)), 8},
        {pointed_exponential(two), 8},
        {neg({bool_object(Discipline::Linear)}), 8},
        {pcf2, 8},
        {triple, 8},
    };
    for (const auto& [g, depth] : fixtures_list) {
      auto rep = check_axioms(*g, depth);
      if (!rep.ok()) {
        why = "violation in " + g->label();
        return false;
      }
    }
    for (uint64_t seed = 0; seed < 1000; ++seed) {
      GamePtr g = gen_random_game(seed, 4 + seed % 9);
      auto rep = check_axioms(*g, 6);
      if (!rep.ok()) {
        why = "violation in generated game seed " + std::to_string(seed);
        return false;
      }
    }
    return true;
  });

  criterion(5, "composition-preserves-wb", 120.0, [&](std::string& why) {
    for (uint64_t i = 0; i < 500; ++i) {
      GamePtr ga = gen_random_game(7000 + 3 * i, 4 + i % 4);
      GamePtr gb = gen_random_game(7001 + 3 * i, 4 + (i + 1) % 4);
      GamePtr gc = gen_random_game(7002 + 3 * i, 4 + (i + 2) % 4);
      Strategy s = gen_random_wb_strategy(11 * i + 1, tensor(dual(ga), gb), 8);
      Strategy t = gen_random_wb_strategy(11 * i + 5, tensor(dual(gb), gc), 8);
      if (!is_wb_strategy(s, 8) || !is_wb_strategy(t, 8)) {
        why = "a generated strategy failed its own invariant at pair " + std::to_string(i);
        return false;
      }
      std::vector<std::string> w;
      if (!is_wb_strategy(compose(s, t), 8, &w)) {
        why = "composite not well-bracketed at pair " + std::to_string(i);
        return false;
      }
    }
    return true;
  });

  criterion(6, "law-suite", 120.0, [&](std::string& why) {
    LawReport rep = law_suite(8);
    LawReport more = tensorial_laws(8);
    rep.results.insert(rep.results.end(), more.results.begin(), more.results.end());
    for (const auto& r : rep.results)
      if (!r.holds) {
        why = "law " + r.name + " fails " + r.witness;
        return false;
      }
    why = std::to_string(rep.results.size()) + " laws hold";
    return true;
  });

  criterion(7, "fixpoints", 30.0, [&](std::string& why) {
    auto const_true = routed_strategy(tensor(dual(bang(b)), b), "const-true",
                                      [](const Game& gg, const Play& odd) -> std::optional<std::string> {
                                        if (gg.move_key(odd.back()) == "R.q") return "R.tt";
                                        return std::nullopt;
                                      });
    auto tt = routed_strategy(tensor(unit_game(), b), "true",
                              [](const Game& gg, const Play& odd) -> std::optional<std::string> {
                                if (gg.move_key(odd.back()) == "R.q") return "R.tt";
                                return std::nullopt;
                              });
    auto fix1 = fixpoint(const_true);
    if (!strategies_equal(fix1, tt, 8)) {
      why = "fixpoint of the constant is not the constant";
      return false;
    }
    auto fix2 = fixpoint(dereliction(b));
    if (fix2.plays_upto(12).size() != 1) {
      why = "fixpoint of dereliction responded";
      return false;
    }
    if (!strategies_equal(fix1, compose(promotion(fix1), const_true), 8)) {
      why = "unfolding law fails";
      return false;
    }
    return true;
  });

  criterion(8, "logic-checker", 5.0, [&](std::string& why) {
    using namespace mbg::logic;
    Sequent goal{{}, f_neg(f_neg(f_plus(f_one(), f_one())))};
    auto tt = parse_proof(sx::parse("(neg-right (neg-left (oplus-right-1 (unit-right))))"));
    auto ff = parse_proof(sx::parse("(neg-right (neg-left (oplus-right-2 (unit-right))))"));
    auto mt = interpret_proof(check_proof(goal, tt), Discipline::Linear);
    auto mf = interpret_proof(check_proof(goal, ff), Discipline::Linear);
    std::vector<std::string> w;
    if (strategies_equal(mt.components[0], mf.components[0], 6, nullptr, &w)) {
      why = "the two sum proofs interpret equally";
      return false;
    }
    try {
      check_proof(Sequent{{f_one()}, f_one()},
                  parse_proof(sx::parse("(contraction (at 0) (axiom))")));
      why = "contraction on a plain hypothesis was accepted";
      return false;
    } catch (const Error& e) {
      if (e.kind != ErrorKind::ContractionOnNonBang) {
        why = "wrong error for plain contraction";
        return false;
      }
    }
    try {
      check_proof(Sequent{{f_affine(f_one())}, f_one()},
                  parse_proof(sx::parse("(affine-contraction (at 0) (axiom))")));
      why = "a contraction rule for the affine modality was accepted";
      return false;
    } catch (const Error& e) {
      if (e.kind != ErrorKind::RuleMismatch) {
        why = "wrong error for the affine contraction";
        return false;
      }
    }
    return true;
  });

  criterion(9, "discipline-contrast", 5.0, [&](std::string& why) {
    using namespace mbg::pcf;
    Type t = t_lolli(t_lolli(t_bool(), t_bool()), t_bool());
    GamePtr lin = pcf::detail::type_obj(t, Discipline::Linear).at(0);
    GamePtr aff = pcf::detail::type_obj(t, Discipline::Affine).at(0);
    auto probe_lin = strictness_tester(lin);
    auto probe_aff = strictness_tester(aff);
    if (probe_lin.plays_upto(8).size() != 4 || probe_aff.plays_upto(8).size() != 4) {
      why = "the tester did not realize the four expected plays";
      return false;
    }
    if (is_wb_strategy(probe_lin, 8)) {
      why = "the strictness test passed under the linear discipline";
      return false;
    }
    if (!is_wb_strategy(probe_aff, 8)) {
      why = "the strictness test failed under the affine discipline";
      return false;
    }
    return true;
  });

  criterion(10, "non-commutativity", 10.0, [&](std::string& why) {
    GamePtr two = neg({pointed_unit(), pointed_unit()});
    auto [l, r] = double_neg_maps(two, two);
    if (!is_wb_strategy(l, 10) || !is_wb_strategy(r, 10)) {
      why = "a double-negation map is not well-bracketed";
      return false;
    }
    std::vector<std::string> w;
    if (strategies_equal(l, r, 10, nullptr, &w)) {
      why = "the two double-negation maps coincide";
      return false;
    }
    return true;
  });

  criterion(11, "pcf-end-to-end", 10.0, [&](std::string& why) {
    using namespace mbg::pcf;
    auto ev = [&](const std::string& src, Discipline d) {
      return pcf_eval(parse_term(sx::parse(src)), d);
    };
    if (ev("(if tt ff tt)", Discipline::Linear) != EvalResult::FF) {
      why = "if tt ff tt";
      return false;
    }
    if (ev("(fix (lam (x (bang bool)) tt))", Discipline::Linear) != EvalResult::TT) {
      why = "fix const";
      return false;
    }
    if (ev("(fix (lam (x (bang bool)) (derelict x)))", Discipline::Linear) != EvalResult::Diverge) {
      why = "fix derelict";
      return false;
    }
    auto m = pcf_elaborate(parse_term(sx::parse("(lam (f (lolli bool bool)) (app f tt))")),
                           Discipline::Linear);
    std::vector<std::string> want{"L.^", "R.~", "R.c0:*", "R.c0:L.c0:*",
                                  "R.c0:L.c0:L.c0:~", "R.c0:L.c0:L.c0:c0:^"};
    auto plays = plays_as_keys(m.components[0], 6);
    if (std::find(plays.begin(), plays.end(), want) == plays.end()) {
      why = "the interrogation play shape is missing at depth 6";
      return false;
    }
    return true;
  });

  std::cout << (failures == 0 ? "ACCEPTANCE SUITE PASS" : "ACCEPTANCE SUITE FAIL") << "\n";
  return failures == 0 ? 0 : 1;
}
