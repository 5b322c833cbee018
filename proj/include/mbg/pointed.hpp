#pragma once

// Morphism-level structure over pointed games: the coalesced tensor of
// transverse strategies, the terminal map to the pointed unit, and the affine
// and exponential modality maps (counit, weakening, contraction, promotion).

#include "category.hpp"

namespace mbg {

namespace detail {

inline GamePtr hom_source(const GamePtr& hom) {
  if (hom->kind() != Game::Kind::Tensor) fail(ErrorKind::ShapeMismatch, "not a hom game");
  return dual(hom->factor(0));
}
inline GamePtr hom_target(const GamePtr& hom) {
  if (hom->kind() != Game::Kind::Tensor) fail(ErrorKind::ShapeMismatch, "not a hom game");
  return hom->factor(1);
}

}  // namespace detail

// sigma (.) tau : A (.) C -> B (.) D for transverse sigma : A -> B, tau : C -> D.
// The fused initial moves are exchanged in one synchronized handshake.
inline Strategy odot_strategies(const Strategy& s, const Strategy& t) {
  GamePtr a = detail::hom_source(s.game()), b = detail::hom_target(s.game());
  GamePtr c = detail::hom_source(t.game()), d = detail::hom_target(t.game());
  GamePtr rg = tensor(dual(coalesce(a, c)), coalesce(b, d));
  std::string ia = a->init_key(), ib = b->init_key(), ic = c->init_key(), id_ = d->init_key();
  auto oracle = [s, t, ia, ib, ic, id_](const Game& g, const Play& visible) -> std::optional<MoveId> {
    const Game& sg = *s.game();
    const Game& tg = *t.game();
    Play sp, tp;
    int last = -1;  // 0 = s, 1 = t
    auto push = [](const Game& og, Play& p, const std::string& key) {
      PosId cur = p.empty() ? og.root() : og.move(p.back()).tgt;
      auto m = og.find_move(cur, key);
      if (!m) fail(ErrorKind::ShapeMismatch, "odot: no move '" + key + "'");
      p.push_back(*m);
    };
    for (MoveId vm : visible) {
      std::string k = g.move_key(vm);
      if (k == "L.*") {
        push(sg, sp, "L." + ia);
        push(tg, tp, "L." + ic);
        last = -1;
        continue;
      }
      if (k == "R.*") {
        push(sg, sp, "R." + ib);
        push(tg, tp, "R." + id_);
        continue;
      }
      std::string rest = k.substr(2);
      std::string inner = rest.substr(2);
      bool to_s = rest.substr(0, 2) == "L.";
      push(to_s ? sg : tg, to_s ? sp : tp, k.substr(0, 2) + inner);
      last = to_s ? 0 : 1;
    }
    PosId vcur = visible.empty() ? g.root() : g.move(visible.back()).tgt;
    if (!visible.empty() && g.move_key(visible.back()) == "L.*") {
      auto rs = s.respond(sp);
      auto rt = t.respond(tp);
      if (!rs || !rt) return std::nullopt;
      if (sg.move_key(*rs) != "R." + ib || tg.move_key(*rt) != "R." + id_)
        fail(ErrorKind::ShapeMismatch, "odot: a component is not transverse");
      return g.find_move(vcur, "R.*");
    }
    const Strategy& owner = last == 0 ? s : t;
    auto r = owner.respond(last == 0 ? sp : tp);
    if (!r) return std::nullopt;
    const Game& og = last == 0 ? sg : tg;
    std::string k = og.move_key(*r);
    std::string mapped = k.substr(0, 2) + (last == 0 ? "L." : "R.") + k.substr(2);
    auto mv = g.find_move(vcur, mapped);
    if (!mv) fail(ErrorKind::ShapeMismatch, "odot: response '" + mapped + "' not playable");
    return mv;
  };
  return Strategy(rg, oracle, s.label() + "(.)" + t.label());
}

// The terminal map A -> I. of an affine pointed game: exchange the initial
// moves, then Opponent is stuck.
inline Strategy discard(const GamePtr& a) {
  GamePtr g = tensor(dual(a), pointed_unit());
  std::string ia = a->init_key();
  return routed_strategy(g, "discard(" + a->label() + ")",
                         [ia](const Game& gg, const Play& odd) -> std::optional<std::string> {
                           if (gg.move_key(odd.back()) == "L." + ia) return "R.^";
                           return std::nullopt;
                         });
}

// ---------------------------------------------------------------------------
// the affine modality

// counit ¡A -> A: the two games carry the same moves, only the queries differ.
inline Strategy strip_counit(const GamePtr& a) {
  GamePtr g = tensor(dual(affine_strip(a)), a);
  return routed_strategy(g, "strip-counit(" + a->label() + ")",
                         [](const Game& gg, const Play& odd) -> std::optional<std::string> {
                           auto k = mirror_lr(gg.move_key(odd.back()));
                           if (!k) fail(ErrorKind::ShapeMismatch, "strip-counit: unroutable key");
                           return k;
                         });
}

// promotion for the affine modality: a relabeling, since ¡ only removes queries.
inline Strategy strip_promote(const Strategy& s) {
  GamePtr a = detail::hom_target(s.game());
  GamePtr g = tensor(s.game()->factor(0), affine_strip(a));
  auto id = [](const std::string& k) { return k; };
  return relabel_strategy(s, g, id, id, "strip-promote(" + s.label() + ")");
}

// ---------------------------------------------------------------------------
// the pointed exponential  !A = lift(bang(residual(strip A)))

// counit !A -> A
inline Strategy pexp_counit(const GamePtr& a) {
  GamePtr pa = pointed_exponential(a);
  GamePtr g = tensor(dual(pa), a);
  std::string ia = a->init_key();
  return routed_strategy(
      g, "pexp-counit(" + a->label() + ")",
      [ia](const Game& gg, const Play& odd) -> std::optional<std::string> {
        std::string k = gg.move_key(odd.back());
        if (k == "L.^") return "R." + ia;
        std::string s = k;
        if (keyops::strip_prefix(s, "L.")) {
          auto bk = parse_bang_key(s);
          if (!bk || bk->copy != 1) fail(ErrorKind::ShapeMismatch, "pexp-counit: stray copy move");
          return "R." + bk->rest;
        }
        s = k.substr(2);
        PosId cur = gg.move(odd.back()).tgt;
        if (gg.find_move(cur, "L.o1:" + s)) return "L.o1:" + s;
        return "L.1:" + s;
      });
}

// weakening !A -> I.
inline Strategy pexp_weaken(const GamePtr& a) { return discard(pointed_exponential(a)); }

// contraction !A -> !A (.) !A
inline Strategy pexp_contract(const GamePtr& a) {
  GamePtr pa = pointed_exponential(a);
  GamePtr g = tensor(dual(pa), coalesce(pa, pa));
  return routed_strategy(g, "pexp-contract(" + a->label() + ")", detail::contraction_route);
}

// promotion: from sigma : D -> A (transverse, D a fold of exponential entries or
// the pointed unit) to D -> !A. `entry_prefixes` address the !-entries inside
// D's move keys ("" when D itself is an exponential, "L."/"R."... for folds).
inline Strategy pexp_promote(const Strategy& s, const std::vector<std::string>& entry_prefixes) {
  GamePtr d = detail::hom_source(s.game());
  GamePtr a = detail::hom_target(s.game());
  GamePtr pa = pointed_exponential(a);
  GamePtr rg = tensor(dual(d), pa);
  std::string idk = d->init_key(), ia = a->init_key();
  {
    Play probe;
    const Game& sg = *s.game();
    auto m0 = sg.find_move(sg.root(), "L." + idk);
    if (!m0) fail(ErrorKind::ShapeMismatch, "promote: domain handshake missing");
    probe.push_back(*m0);
    auto r0 = s.respond(probe);
    if (r0 && sg.move_key(*r0) != "R." + ia)
      fail(ErrorKind::ShapeMismatch, "promote: strategy is not transverse");
  }
  auto oracle = [s, entry_prefixes, idk, ia](const Game& g,
                                             const Play& visible) -> std::optional<MoveId> {
    const Game& sg = *s.game();
    std::vector<Play> sess;
    // per entry: real copy -> (session, virtual copy); per (session, entry): count
    std::vector<std::vector<std::pair<size_t, size_t>>> owner(entry_prefixes.size());
    std::vector<std::vector<size_t>> alloc;  // alloc[sess][entry]
    size_t last_sess = 0;
    auto sess_append = [&](size_t j, const std::string& key) {
      Play& p = sess[j];
      PosId cur = p.empty() ? sg.root() : sg.move(p.back()).tgt;
      auto m = sg.find_move(cur, key);
      if (!m) fail(ErrorKind::ShapeMismatch, "promote: no session move '" + key + "'");
      p.push_back(*m);
      last_sess = j;
    };
    auto parse_domain = [&](const std::string& rest) -> std::pair<size_t, BangKey> {
      for (size_t e = 0; e < entry_prefixes.size(); ++e) {
        const auto& pre = entry_prefixes[e];
        if (rest.size() > pre.size() && rest.compare(0, pre.size(), pre) == 0) {
          auto bk = parse_bang_key(rest.substr(pre.size()));
          if (bk) return {e, *bk};
        }
      }
      fail(ErrorKind::ShapeMismatch, "promote: unroutable domain key " + rest);
    };
    for (MoveId vm : visible) {
      std::string k = g.move_key(vm);
      if (k == "L." + idk || k == "R.^") continue;  // the structural handshake
      std::string s2 = k;
      if (keyops::strip_prefix(s2, "R.")) {
        auto bk = parse_bang_key(s2);
        if (!bk) fail(ErrorKind::ShapeMismatch, "promote: bad codomain key " + k);
        if (bk->open) {
          if (bk->copy != sess.size() + 1)
            fail(ErrorKind::ShapeMismatch, "promote: copies must open in order");
          sess.push_back({});
          alloc.push_back(std::vector<size_t>(entry_prefixes.size(), 0));
          sess_append(bk->copy - 1, "L." + idk);
          sess_append(bk->copy - 1, "R." + ia);
        }
        sess_append(bk->copy - 1, "R." + bk->rest);
      } else {
        keyops::strip_prefix(s2 = k, "L.");
        auto [e, bk] = parse_domain(s2);
        if (bk.open) {  // our own allocation, emitted from last_sess
          size_t v = ++alloc[last_sess][e];
          owner[e].push_back({last_sess, v});
          sess_append(last_sess, "L." + entry_prefixes[e] + "o" + std::to_string(v) + ":" + bk.rest);
        } else {
          auto [j, v] = owner[e].at(bk.copy - 1);
          sess_append(j, "L." + entry_prefixes[e] + std::to_string(v) + ":" + bk.rest);
        }
      }
    }
    PosId vcur = visible.empty() ? g.root() : g.move(visible.back()).tgt;
    if (!visible.empty() && g.move_key(visible.back()) == "L." + idk)
      return g.find_move(vcur, "R.^");
    auto r = s.respond(sess[last_sess]);
    if (!r) return std::nullopt;
    std::string k = sg.move_key(*r);
    std::string mapped;
    std::string s2 = k;
    if (keyops::strip_prefix(s2, "R.")) {
      mapped = "R." + std::to_string(last_sess + 1) + ":" + s2;
    } else {
      keyops::strip_prefix(s2 = k, "L.");
      auto [e, bk] = parse_domain(s2);
      if (bk.open) {
        mapped = "L." + entry_prefixes[e] + "o" + std::to_string(owner[e].size() + 1) + ":" + bk.rest;
      } else {
        size_t real = 0;
        for (size_t i = 0; i < owner[e].size(); ++i)
          if (owner[e][i] == std::make_pair(last_sess, bk.copy)) real = i + 1;
        if (real == 0) fail(ErrorKind::ShapeMismatch, "promote: response in unopened copy");
        mapped = "L." + entry_prefixes[e] + std::to_string(real) + ":" + bk.rest;
      }
    }
    auto mv = g.find_move(vcur, mapped);
    if (!mv) fail(ErrorKind::ShapeMismatch, "promote: response '" + mapped + "' not playable");
    return mv;
  };
  return Strategy(rg, oracle, "pexp-promote(" + s.label() + ")");
}

}  // namespace mbg
