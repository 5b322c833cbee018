#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mbg/category.hpp>

#include "fixtures.hpp"

using namespace mbg;

namespace {

Strategy const_true_banged() {
  auto b = sample_bool_game();
  auto g = tensor(dual(bang(b)), b);
  return routed_strategy(g, "const-true",
                         [](const Game& gg, const Play& odd) -> std::optional<std::string> {
                           if (gg.move_key(odd.back()) == "R.q") return "R.tt";
                           return std::nullopt;
                         });
}

Strategy true_strategy() {
  auto b = sample_bool_game();
  return routed_strategy(tensor(unit_game(), b), "true",
                         [](const Game& gg, const Play& odd) -> std::optional<std::string> {
                           if (gg.move_key(odd.back()) == "R.q") return "R.tt";
                           return std::nullopt;
                         });
}

}  // namespace

TEST_CASE("eta and epsilon") {
  CHECK(eta(unit_game()).plays_upto(8).size() == 1);

  auto b = sample_bool_game();
  auto e = eta(b);
  auto plays = plays_as_keys(e, 4);
  CHECK(std::find(plays.begin(), plays.end(), std::vector<std::string>{"R.R.q", "R.L.q"}) !=
        plays.end());
  CHECK(is_wb_strategy(e, 8));
  CHECK(is_wb_strategy(epsilon(b), 8));
}

TEST_CASE("trace feeds the hidden component back") {
  auto b = sample_bool_game();
  // sigma : 1 (x) B -> B (x) B~ bouncing the question once through the loop
  GamePtr g = tensor(tensor(unit_game(), dual(b)), tensor(b, dual(b)));
  (void)g;
  GamePtr sg = tensor(tensor(unit_game(), dual(b)), tensor(b, b));
  (void)sg;
  GamePtr game = tensor(tensor(unit_game(), dual(b)), tensor(b, b));
  auto bounce = routed_strategy(game, "bounce",
                                [](const Game& gg, const Play& odd) -> std::optional<std::string> {
                                  std::string k = gg.move_key(odd.back());
                                  if (k == "R.L.q") return "L.R.q";   // ask through the loop
                                  if (k == "R.R.q") return "R.R.tt";  // the loop comes back
                                  if (k == "L.R.tt") return "R.L.tt";
                                  return std::nullopt;
                                });
  auto traced = trace(bounce);
  CHECK(strategies_equal(traced, true_strategy(), 8));
}

TEST_CASE("the exponential game") {
  CHECK(bang(unit_game()) == unit_game());

  auto b = sample_bool_game();
  auto ba = bang(b);
  CHECK_NOTHROW(path_from_keys(*ba, ba->root(), {"o1:q", "1:tt", "o2:q"}));

  // every copy-opening move is an Opponent move
  for (const auto& p : enumerate_plays(*ba, 3))
    for (MoveId m : p.moves)
      if (ba->move_key(m)[0] == 'o') CHECK(ba->polarity(m) == kOpponent);
}

TEST_CASE("comonoid and comonad law suite holds") {
  auto rep = law_suite(8);
  for (const auto& r : rep.results) {
    INFO(r.name, " witness=", r.witness);
    CHECK(r.holds);
  }
}

TEST_CASE("a corrupted copycat fails the identity law") {
  auto b = sample_bool_game();
  auto broken = routed_strategy(tensor(dual(b), b), "broken-copycat",
                                [](const Game& gg, const Play& odd) -> std::optional<std::string> {
                                  std::string k = gg.move_key(odd.back());
                                  if (k == "R.q") return "L.q";
                                  return std::nullopt;  // drops the mirrored answers
                                });
  auto not_b = routed_strategy(tensor(dual(b), b), "not",
                               [](const Game& gg, const Play& odd) -> std::optional<std::string> {
                                 std::string k = gg.move_key(odd.back());
                                 if (k == "R.q") return "L.q";
                                 if (k == "L.tt") return "R.ff";
                                 if (k == "L.ff") return "R.tt";
                                 return std::nullopt;
                               });
  std::vector<std::string> witness;
  CHECK_FALSE(strategies_equal(compose(broken, not_b), not_b, 8, nullptr, &witness));
  CHECK_FALSE(witness.empty());
}

TEST_CASE("fixpoint of a constant is the constant") {
  auto fix = fixpoint(const_true_banged());
  CHECK(strategies_equal(fix, true_strategy(), 8));
  CHECK(is_wb_strategy(fix, 8));
}

TEST_CASE("fixpoint of dereliction diverges") {
  auto b = sample_bool_game();
  auto fix = fixpoint(dereliction(b));
  CHECK(fix.plays_upto(12).size() == 1);  // no Proponent response to R.q
}

TEST_CASE("unfolding law") {
  auto sigma = const_true_banged();
  auto fix = fixpoint(sigma);
  auto unfolded = compose(promotion(fix), sigma);
  CHECK(strategies_equal(fix, unfolded, 8));

  auto b = sample_bool_game();
  auto fix2 = fixpoint(dereliction(b));
  auto unfolded2 = compose(promotion(fix2), dereliction(b));
  CHECK(strategies_equal(fix2, unfolded2, 8));
}
