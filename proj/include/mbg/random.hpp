#pragma once

// Seeded generation of bracketed games (question/answer and multi-query
// flavours) and of well-bracketed strategies built response by response.

#include <random>

#include "strategy.hpp"

namespace mbg {

// A tree-shaped bracketed game on `size` positions. Even seeds give
// single-query question/answer games; odd seeds allow up to three initiations
// per move and free compliance subsets.
inline GamePtr gen_random_game(uint64_t seed, size_t size) {
  if (size < 2) fail(ErrorKind::GenerationBudgetExceeded, "need at least two positions");
  if (size > config().expansion_cap)
    fail(ErrorKind::GenerationBudgetExceeded, "size exceeds the expansion cap");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
  bool qa_mode = seed % 2 == 0;

  std::vector<std::string> positions;
  for (size_t i = 0; i < size; ++i) positions.push_back("p" + std::to_string(i));
  std::vector<size_t> parent(size, 0);
  std::vector<int> pol(size, 0);
  std::vector<MoveSpec> moves;
  for (size_t i = 1; i < size; ++i) {
    parent[i] = i == 1 ? 0 : rng() % i;
    pol[i] = (rng() % 2 == 0) ? kOpponent : kProponent;
    moves.push_back({"m" + std::to_string(i), positions[parent[i]], positions[i],
                     pol[i]});
  }

  // queries per position, walking the tree root-first
  std::vector<std::vector<std::pair<std::string, int>>> queries(size);
  ResidualTable residuals;
  size_t fresh = 0;
  for (size_t i = 1; i < size; ++i) {
    const auto& inherited = queries[parent[i]];
    std::vector<ResidualDirective> ds;
    std::vector<std::pair<std::string, int>> here;
    std::vector<size_t> opposite;
    for (size_t q = 0; q < inherited.size(); ++q)
      if (inherited[q].second == -pol[i]) opposite.push_back(q);
    std::vector<char> comply(inherited.size(), 0);
    size_t n_init = 0;
    if (qa_mode) {
      bool answer = !opposite.empty() && rng() % 2 == 0;
      if (answer)
        comply[opposite[rng() % opposite.size()]] = 1;
      else
        n_init = 1;
    } else {
      for (size_t q : opposite)
        if (rng() % 3 == 0) comply[q] = 1;
      n_init = rng() % 4;
    }
    for (size_t q = 0; q < inherited.size(); ++q) {
      if (comply[q]) {
        ds.push_back({ResidualDirective::Comply, inherited[q].first, ""});
      } else {
        ds.push_back({ResidualDirective::Keep, inherited[q].first, inherited[q].first});
        here.push_back(inherited[q]);
      }
    }
    for (size_t q = 0; q < n_init; ++q) {
      std::string name = "q" + std::to_string(fresh++);
      ds.push_back({ResidualDirective::Init, name, ""});
      here.push_back({name, pol[i]});
    }
    residuals["m" + std::to_string(i)] = std::move(ds);
    queries[i] = std::move(here);
  }
  std::vector<QuerySpec> specs;
  for (size_t i = 0; i < size; ++i)
    for (const auto& [name, qpol] : queries[i]) specs.push_back({positions[i], name, qpol});

  GamePtr base = build_game(positions, moves, positions[0], false,
                            "rand" + std::to_string(seed));
  return attach_brackets(base, specs, residuals);
}

// A deterministic strategy on `game` whose responses are chosen, uniformly at
// random per seed, among the moves that keep every play of the strategy
// well-bracketed.
inline Strategy gen_random_wb_strategy(uint64_t seed, const GamePtr& game, size_t depth) {
  std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dull + 7);
  const Game& g = *game;
  auto table = std::make_shared<std::map<Play, MoveId>>();

  auto wb_after = [&](const Play& p) {
    std::vector<PosId> at{g.root()};
    for (MoveId m : p) at.push_back(g.move(m).tgt);
    for (size_t i = 0; i + 1 < p.size(); i += 2) {
      ChainState st = ChainState::at(g, at[i]);
      for (size_t j = i; j < p.size(); ++j) st.step(g, p[j]);
      ResourceCount k = st.kappa(g, at[p.size()]);
      if (k.plus == 0 && k.minus != 0) return false;
    }
    return true;
  };

  std::vector<Play> frontier{{}};
  while (!frontier.empty()) {
    std::vector<Play> next;
    for (const auto& s : frontier) {
      if (s.size() + 2 > depth) continue;
      PosId pos = s.empty() ? g.root() : g.move(s.back()).tgt;
      for (MoveId m : g.moves_from(pos)) {
        if (g.polarity(m) != kOpponent) continue;
        Play odd = s;
        odd.push_back(m);
        std::vector<MoveId> candidates;
        for (MoveId r : g.moves_from(g.move(m).tgt)) {
          if (g.polarity(r) != kProponent) continue;
          Play even = odd;
          even.push_back(r);
          if (wb_after(even)) candidates.push_back(r);
        }
        if (candidates.empty()) continue;
        MoveId pick = candidates[rng() % candidates.size()];
        (*table)[odd] = pick;
        Play even = odd;
        even.push_back(pick);
        next.push_back(std::move(even));
      }
    }
    frontier = std::move(next);
  }
  return Strategy(
      game,
      [table](const Game&, const Play& odd) -> std::optional<MoveId> {
        auto it = table->find(odd);
        if (it == table->end()) return std::nullopt;
        return it->second;
      },
      "random-wb-" + std::to_string(seed));
}

}  // namespace mbg
