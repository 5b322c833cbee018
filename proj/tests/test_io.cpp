#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mbg/cli.hpp>
#include <mbg/io.hpp>

#include "fixtures.hpp"

using namespace mbg;

namespace {

const std::string kFixtures = std::string(MBG_SOURCE_DIR) + "/fixtures/";

int run_cli(std::vector<std::string> args) {
  std::vector<const char*> argv{"mbg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli::run(int(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("game files round-trip to structurally equal objects") {
  for (const auto& name : {"bool.game", "pcf2.game", "triple.game"}) {
    auto g = io::load_game(kFixtures + name);
    auto text = io::game_to_sexpr(g).dump();
    auto g2 = io::parse_game(sx::parse(text));
    CHECK(io::game_to_sexpr(g2).dump() == text);
    CHECK(g2->pos_count() == g->pos_count());
    CHECK(g2->move_count() == g->move_count());
  }
}

TEST_CASE("fixture files match the programmatic fixtures") {
  auto f = io::load_game(kFixtures + "triple.game");
  auto p = fixtures::triple_game();
  CHECK(io::game_to_sexpr(f).dump() == io::game_to_sexpr(p).dump());
  CHECK(io::game_to_sexpr(io::load_game(kFixtures + "pcf2.game")).dump() ==
        io::game_to_sexpr(fixtures::pcf2_game()).dump());
}

TEST_CASE("generation is deterministic per seed") {
  auto a = gen_random_game(1, 6);
  auto b = gen_random_game(1, 6);
  CHECK(io::game_to_sexpr(a).dump() == io::game_to_sexpr(b).dump());
  auto c = gen_random_game(2, 6);
  CHECK(io::game_to_sexpr(a).dump() != io::game_to_sexpr(c).dump());
}

TEST_CASE("expression parser builds consed games") {
  auto one = io::parse_game_expr("one");
  CHECK(one == unit_game());
  auto t = io::parse_game_expr("tensor(dual(" + kFixtures + "bool.game)," + kFixtures + "bool.game)");
  auto bg = io::load_game(kFixtures + "bool.game");
  CHECK(t == tensor(dual(bg), bg));
  auto f = io::parse_fam_expr("oplus(one,one)");
  CHECK(f.size() == 2);
  auto nf = io::parse_fam_expr("neg(affine(neg(oplus(one,one))))");
  CHECK(nf.size() == 1);
  CHECK(nf.at(0) == bool_object(Discipline::Affine));
}

TEST_CASE("strategy files round-trip") {
  auto s = io::load_strategy(kFixtures + "not.strategy");
  CHECK(s.plays_upto(4).size() == 4);
  auto text = io::strategy_to_sexpr(s, 6).dump();
  auto s2 = io::parse_strategy(sx::parse(text), kFixtures);
  CHECK(strategies_equal(s, s2, 6));
}

TEST_CASE("the expansion cap guards generated games") {
  auto saved = config().expansion_cap;
  config().expansion_cap = 8;
  auto b = sample_bool_game();
  try {
    enumerate_plays(*std::make_shared<BangGame>(b), 6);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::ExpansionBudgetExceeded);
  }
  config().expansion_cap = saved;
}

TEST_CASE("cli compose hides the middle and writes a loadable file") {
  std::string out = "composed_test.strategy";
  CHECK(run_cli({"compose", kFixtures + "true.strategy", kFixtures + "not.strategy", "--out",
                 out}) == 0);
  auto s = io::load_strategy(out);
  auto plays = plays_as_keys(s, 4);
  std::vector<std::string> want{"R.q", "R.ff"};
  CHECK(std::find(plays.begin(), plays.end(), want) != plays.end());
  std::remove(out.c_str());
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli({"check-game", kFixtures + "bool.game"}) == 0);
  CHECK(run_cli({"check-game", "no-such-file.game"}) == 2);
  CHECK(run_cli({"wb-play", kFixtures + "triple.game", "--play", "q1,qL,ttL,qR,ttR,tt1"}) == 0);
  CHECK(run_cli({"wb-play", kFixtures + "triple.game", "--play", "q1,qR,ttR,tt1"}) == 1);
  CHECK(run_cli({"axioms", kFixtures + "pcf2.game", "--depth", "6"}) == 0);
  CHECK(run_cli({"check-proof", kFixtures + "true.proof"}) == 0);
  CHECK(run_cli({"check-proof", kFixtures + "bad_contraction.proof"}) == 1);
  CHECK(run_cli({"check-proof", kFixtures + "bad_affine_contraction.proof"}) == 1);
  CHECK(run_cli({"pcf-run", kFixtures + "fix_const.pcf"}) == 0);
  CHECK(run_cli({"interpret", kFixtures + "true.proof", "--emit", "summary"}) == 0);
  CHECK(run_cli({"random-game", "--seed", "3", "--size", "6"}) == 0);
}
