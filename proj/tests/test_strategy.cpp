#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mbg/strategy.hpp>

#include "fixtures.hpp"

using namespace mbg;

namespace {

Play keys_to_play(const GamePtr& g, const std::vector<std::string>& ks) {
  return path_from_keys(*g, g->root(), ks).moves;
}

// 1 -> B answering q with the given move.
Strategy const_bool(const std::string& answer) {
  auto g = tensor(dual(unit_game()), fixtures::bool_game());
  return routed_strategy(g, answer,
                         [answer](const Game& gg, const Play& odd) -> std::optional<std::string> {
                           if (gg.move_key(odd.back()) == "R.q") return "R." + answer;
                           return std::nullopt;
                         });
}

// B -> B swapping the answers.
Strategy negation_strategy() {
  auto gb = fixtures::bool_game();
  auto g = tensor(dual(gb), gb);
  return routed_strategy(g, "not",
                         [](const Game& gg, const Play& odd) -> std::optional<std::string> {
                           std::string k = gg.move_key(odd.back());
                           if (k == "R.q") return "L.q";
                           if (k == "L.tt") return "R.ff";
                           if (k == "L.ff") return "R.tt";
                           return std::nullopt;
                         });
}

}  // namespace

TEST_CASE("make_strategy enforces the four conditions") {
  auto gb = fixtures::bool_game();

  auto empty = make_strategy(gb, {});
  CHECK(empty.plays_upto(6).size() == 1);

  auto tt = make_strategy(gb, {keys_to_play(gb, {"q", "tt"})}, "true");
  CHECK(tt.plays_upto(4).size() == 2);

  try {
    make_strategy(gb, {keys_to_play(gb, {"q", "tt"}), keys_to_play(gb, {"q", "ff"})});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::NonDeterministic);
  }

  auto pcf2 = fixtures::pcf2_game();
  try {
    make_strategy(pcf2, {keys_to_play(pcf2, {"q1", "q2", "q3", "tt3"})});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::NotPrefixClosed);
  }

  auto d = dual(fixtures::bool_game());
  try {
    make_strategy(d, {keys_to_play(d, {"q", "tt"})});  // q is Proponent in the dual
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::ProponentStarts);
  }

  auto t = tensor(dual(gb), gb);
  try {
    make_strategy(t, {keys_to_play(t, {"R.q", "R.tt"}),
                      keys_to_play(t, {"R.q", "R.tt", "L.q", "L.tt"})});  // P after P
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::NonAlternating);
  }
}

TEST_CASE("copycat replays moves across the two components") {
  auto one = unit_game();
  CHECK(copycat(one).plays_upto(8).size() == 1);

  auto gb = fixtures::bool_game();
  auto cc = copycat(gb);
  auto plays = plays_as_keys(cc, 4);
  CHECK(std::find(plays.begin(), plays.end(), std::vector<std::string>{"R.q", "L.q"}) != plays.end());
  CHECK(std::find(plays.begin(), plays.end(),
                  std::vector<std::string>{"R.q", "L.q", "L.tt", "R.tt"}) != plays.end());
  CHECK(is_wb_strategy(cc, 8));
}

TEST_CASE("composition hides the middle game") {
  auto tt = const_bool("tt");
  auto nt = negation_strategy();
  auto ff = compose(tt, nt);
  auto expect = const_bool("ff");
  CHECK(strategies_equal(ff, expect, 6));
  CHECK_FALSE(strategies_equal(ff, const_bool("tt"), 6));

  // the hiding witness projects into both strategies
  auto inter = interaction_for(tt, nt, ff, keys_to_play(ff.game(), {"R.q", "R.ff"}));
  REQUIRE(inter.has_value());
  std::vector<std::pair<int, std::string>> want{{2, "q"}, {1, "q"}, {1, "tt"}, {2, "ff"}};
  CHECK(inter->steps == want);
}

TEST_CASE("copycat is an identity for composition") {
  auto gb = fixtures::bool_game();
  auto nt = negation_strategy();
  auto left = compose(copycat(gb), nt);
  CHECK(strategies_equal(left, nt, 8));
  auto right = compose(nt, copycat(gb));
  CHECK(strategies_equal(right, nt, 8));
}

TEST_CASE("composition is associative") {
  auto nt = negation_strategy();
  auto tt = const_bool("tt");
  auto a = compose(compose(tt, nt), nt);
  auto b = compose(tt, compose(nt, nt));
  CHECK(strategies_equal(a, b, 10));
  CHECK(strategies_equal(a, const_bool("tt"), 10));
}

TEST_CASE("mismatched middles are rejected") {
  auto tt = const_bool("tt");
  auto pcf2 = fixtures::pcf2_game();
  auto bad = empty_strategy(tensor(dual(pcf2), pcf2));
  try {
    compose(tt, bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::MiddleGameMismatch);
  }
}

TEST_CASE("tensor of strategies interleaves disjointly") {
  auto gb = fixtures::bool_game();
  auto nt = negation_strategy();
  auto both = tensor_strategies(nt, nt);

  // projections of every play lie in the component strategies
  const Game& g = *both.game();
  for (const auto& p : both.plays_upto(6)) {
    Play sp, tp;
    for (MoveId m : p) {
      std::string k = g.move_key(m);
      std::string side = k.substr(0, 2);
      std::string rest = k.substr(2);
      bool to_s = rest.substr(0, 2) == "L.";
      auto& dst = to_s ? sp : tp;
      const Game& og = *nt.game();
      PosId cur = dst.empty() ? og.root() : og.move(dst.back()).tgt;
      auto mm = og.find_move(cur, side + rest.substr(2));
      REQUIRE(mm.has_value());
      dst.push_back(*mm);
    }
    auto splays = nt.plays_upto(6);
    if (sp.size() % 2 == 0) CHECK(std::find(splays.begin(), splays.end(), sp) != splays.end());
    if (tp.size() % 2 == 0) CHECK(std::find(splays.begin(), splays.end(), tp) != splays.end());
  }

  // tensor of copycats is the copycat of the tensor
  auto cc2 = tensor_strategies(copycat(gb), copycat(gb));
  CHECK(strategies_equal(cc2, copycat(tensor(gb, gb)), 8));
}

TEST_CASE("well-bracketed strategies") {
  auto gb = fixtures::bool_game();
  CHECK(is_wb_strategy(empty_strategy(tensor(dual(gb), gb)), 8));
  CHECK(is_wb_strategy(negation_strategy(), 8));

  // the strictness tester of the flat fixture breaks well-bracketing
  auto pcf2 = fixtures::pcf2_game();
  auto probe = make_strategy(
      pcf2, {keys_to_play(pcf2, {"q1", "q2"}), keys_to_play(pcf2, {"q1", "q2", "q3", "tt1"})},
      "strict?");
  std::vector<std::string> witness;
  CHECK_FALSE(is_wb_strategy(probe, 8, &witness));
  CHECK(witness == std::vector<std::string>{"q1", "q2", "q3", "tt1"});

  auto honest = make_strategy(pcf2,
                              {keys_to_play(pcf2, {"q1", "q2"}),
                               keys_to_play(pcf2, {"q1", "q2", "q3", "tt3"}),
                               keys_to_play(pcf2, {"q1", "q2", "q3", "tt3", "tt2", "tt1"})},
                              "id-ish");
  CHECK(is_wb_strategy(honest, 8));
}

TEST_CASE("preservation of well-bracketing move by move") {
  // if s.m is well-bracketed and s.m.n is in a well-bracketed strategy,
  // then s.m.n is well-bracketed
  auto pcf2 = fixtures::pcf2_game();
  auto honest = make_strategy(pcf2,
                              {keys_to_play(pcf2, {"q1", "q2"}),
                               keys_to_play(pcf2, {"q1", "q2", "q3", "tt3"}),
                               keys_to_play(pcf2, {"q1", "q2", "q3", "tt3", "tt2", "tt1"})});
  REQUIRE(is_wb_strategy(honest, 8));
  const Game& g = *pcf2;
  for (const auto& p : honest.plays_upto(8)) {
    if (p.size() < 2) continue;
    Path odd{g.root(), Play(p.begin(), p.end() - 1)};
    Path full{g.root(), p};
    if (is_wb_play(g, odd)) CHECK(is_wb_play(g, full));
  }
}

TEST_CASE("strategies_equal needs a renaming across isomorphic games") {
  auto gb = fixtures::bool_game();
  auto tt = const_bool("tt");
  auto direct = make_strategy(gb, {keys_to_play(gb, {"q", "tt"})});
  try {
    strategies_equal(tt, direct, 4);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::GamesNotIsomorphic);
  }
  // 1 -> B and the bare game B are canonically isomorphic
  GameIso iso = unitor_left(dual(gb));  // wrong shape on purpose
  CHECK_THROWS_AS(strategies_equal(tt, direct, 4, &iso), Error);

  GameIso good{tt.game(), gb,
               [](const std::string& k) { return k.substr(2); },
               [](const std::string& k) { return "R." + k; }};
  CHECK(strategies_equal(tt, direct, 4, &good));
}

TEST_CASE("strategy enumeration visits exactly the deterministic choices") {
  auto gb = fixtures::bool_game();
  size_t count = 0;
  enumerate_strategies(
      gb, 2, [](const std::vector<Play>&) { return true; },
      [&](const std::vector<Play>&) { ++count; });
  // no response, answer tt, answer ff
  CHECK(count == 3);
}
