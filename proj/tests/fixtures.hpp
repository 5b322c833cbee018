#pragma once

// Hand-encoded games the test suites share: the boolean game, the flat
// encoding of the (B => B) => B plays, and the (B (x) B) -o B game whose first
// question opens three queries at once.

#include <mbg/game.hpp>

namespace fixtures {

using namespace mbg;

// q (Opponent question, opening qh) answered by the parallel edges tt / ff.
inline GamePtr bool_game() {
  static GamePtr g = [] {
    GamePtr base = build_game({"s", "x", "y"},
                              {{"q", "s", "x", kOpponent},
                               {"tt", "x", "y", kProponent},
                               {"ff", "x", "y", kProponent}},
                              "s", false, "B");
    ResidualTable res;
    res["q"] = {{ResidualDirective::Init, "qh", ""}};
    return attach_brackets(base, {{"x", "qh", kOpponent}}, res);
  }();
  return g;
}

// Conway form of the (B3 => B2) => B1 plays: the spine q1.q2.q3 with the
// answer tt3 continuing to tt2.tt1 and the non-well-bracketed jump tt1 from
// under q3. Queries k1,k2,k3 are opened by the three questions.
inline GamePtr pcf2_game() {
  static GamePtr g = [] {
    GamePtr base = build_game({"p0", "p1", "p2", "p3", "p4", "p5", "p6", "p7"},
                              {{"q1", "p0", "p1", kOpponent},
                               {"q2", "p1", "p2", kProponent},
                               {"q3", "p2", "p3", kOpponent},
                               {"tt3", "p3", "p4", kProponent},
                               {"tt2", "p4", "p5", kOpponent},
                               {"tt1", "p5", "p6", kProponent},
                               {"tt1", "p3", "p7", kProponent}},
                              "p0", false, "PCF2");
    std::vector<QuerySpec> qs = {
        {"p1", "k1", kOpponent}, {"p2", "k1", kOpponent}, {"p3", "k1", kOpponent},
        {"p4", "k1", kOpponent}, {"p5", "k1", kOpponent},
        {"p2", "k2", kProponent}, {"p3", "k2", kProponent}, {"p4", "k2", kProponent},
        {"p7", "k2", kProponent},
        {"p3", "k3", kOpponent}, {"p7", "k3", kOpponent}};
    ResidualTable res;
    res["q1"] = {{ResidualDirective::Init, "k1", ""}};
    res["q2"] = {{ResidualDirective::Keep, "k1", "k1"}, {ResidualDirective::Init, "k2", ""}};
    res["q3"] = {{ResidualDirective::Keep, "k1", "k1"},
                 {ResidualDirective::Keep, "k2", "k2"},
                 {ResidualDirective::Init, "k3", ""}};
    res["tt3"] = {{ResidualDirective::Keep, "k1", "k1"},
                  {ResidualDirective::Keep, "k2", "k2"},
                  {ResidualDirective::Comply, "k3", ""}};
    res["tt2"] = {{ResidualDirective::Keep, "k1", "k1"}, {ResidualDirective::Comply, "k2", ""}};
    res["tt1"] = {{ResidualDirective::Comply, "k1", ""},
                  {ResidualDirective::Keep, "k2", "k2"},
                  {ResidualDirective::Keep, "k3", "k3"}};
    return attach_brackets(base, qs, res);
  }();
  return g;
}

// (B (x) B) -o B with the linear-logic bracketing: q1 opens queries 1, a and b;
// interrogating each argument closes a or b; tt1 closes 1.
// Positions track (result, left, right) progress.
inline GamePtr triple_game() {
  static GamePtr g = [] {
    std::vector<std::string> positions{"r"};
    std::vector<MoveSpec> moves;
    auto name = [](int res, int l, int rr) {
      return "s" + std::to_string(res) + std::to_string(l) + std::to_string(rr);
    };
    for (int res = 1; res <= 2; ++res)
      for (int l = 0; l <= 2; ++l)
        for (int rr = 0; rr <= 2; ++rr) positions.push_back(name(res, l, rr));
    moves.push_back({"q1", "r", name(1, 0, 0), kOpponent});
    for (int l = 0; l <= 2; ++l)
      for (int rr = 0; rr <= 2; ++rr)
        moves.push_back({"tt1", name(1, l, rr), name(2, l, rr), kProponent});
    for (int res = 1; res <= 2; ++res)
      for (int rr = 0; rr <= 2; ++rr) {
        moves.push_back({"qL", name(res, 0, rr), name(res, 1, rr), kProponent});
        moves.push_back({"ttL", name(res, 1, rr), name(res, 2, rr), kOpponent});
      }
    for (int res = 1; res <= 2; ++res)
      for (int l = 0; l <= 2; ++l) {
        moves.push_back({"qR", name(res, l, 0), name(res, l, 1), kProponent});
        moves.push_back({"ttR", name(res, l, 1), name(res, l, 2), kOpponent});
      }
    GamePtr base = build_game(positions, moves, "r", false, "TRIPLE");
    std::vector<QuerySpec> qs;
    for (int res = 1; res <= 2; ++res)
      for (int l = 0; l <= 2; ++l)
        for (int rr = 0; rr <= 2; ++rr) {
          if (res == 1) qs.push_back({name(res, l, rr), "1", kOpponent});
          if (l == 0) qs.push_back({name(res, l, rr), "a", kOpponent});
          if (rr == 0) qs.push_back({name(res, l, rr), "b", kOpponent});
          if (l == 1) qs.push_back({name(res, l, rr), "L", kProponent});
          if (rr == 1) qs.push_back({name(res, l, rr), "R", kProponent});
        }
    ResidualTable res;
    res["q1"] = {{ResidualDirective::Init, "1", ""},
                 {ResidualDirective::Init, "a", ""},
                 {ResidualDirective::Init, "b", ""}};
    res["tt1"] = {{ResidualDirective::Comply, "1", ""},
                  {ResidualDirective::Keep, "a", "a"},
                  {ResidualDirective::Keep, "b", "b"},
                  {ResidualDirective::Keep, "L", "L"},
                  {ResidualDirective::Keep, "R", "R"}};
    res["qL"] = {{ResidualDirective::Comply, "a", ""},
                 {ResidualDirective::Init, "L", ""},
                 {ResidualDirective::Keep, "1", "1"},
                 {ResidualDirective::Keep, "b", "b"},
                 {ResidualDirective::Keep, "R", "R"}};
    res["ttL"] = {{ResidualDirective::Comply, "L", ""},
                  {ResidualDirective::Keep, "1", "1"},
                  {ResidualDirective::Keep, "b", "b"},
                  {ResidualDirective::Keep, "R", "R"}};
    res["qR"] = {{ResidualDirective::Comply, "b", ""},
                 {ResidualDirective::Init, "R", ""},
                 {ResidualDirective::Keep, "1", "1"},
                 {ResidualDirective::Keep, "a", "a"},
                 {ResidualDirective::Keep, "L", "L"}};
    res["ttR"] = {{ResidualDirective::Comply, "R", ""},
                  {ResidualDirective::Keep, "1", "1"},
                  {ResidualDirective::Keep, "a", "a"},
                  {ResidualDirective::Keep, "L", "L"}};
    return attach_brackets(base, qs, res);
  }();
  return g;
}

}  // namespace fixtures
