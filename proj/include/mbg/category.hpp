#pragma once

// The compact-closed structure: unit/counit, trace by feedback, the free
// commutative comonoid on !A (weakening, contraction, dereliction, promotion),
// fixpoints from the traced structure, and an executable law suite.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "strategy.hpp"

namespace mbg {

// ---------------------------------------------------------------------------
// compact closure

// eta(A): 1 -> dual(A) (x) A
inline Strategy eta(const GamePtr& a) {
  GamePtr g = tensor(unit_game(), tensor(dual(a), a));
  return routed_strategy(g, "eta(" + a->label() + ")",
                         [](const Game& gg, const Play& odd) -> std::optional<std::string> {
                           std::string k = gg.move_key(odd.back());
                           std::string s = k;
                           if (keyops::strip_prefix(s, "R.L.")) return "R.R." + s;
                           if (keyops::strip_prefix(s, "R.R.")) return "R.L." + s;
                           fail(ErrorKind::ShapeMismatch, "eta: unroutable key " + k);
                         });
}

// epsilon(A): A (x) dual(A) -> 1
inline Strategy epsilon(const GamePtr& a) {
  GamePtr g = tensor(tensor(dual(a), a), unit_game());
  return routed_strategy(g, "epsilon(" + a->label() + ")",
                         [](const Game& gg, const Play& odd) -> std::optional<std::string> {
                           std::string k = gg.move_key(odd.back());
                           std::string s = k;
                           if (keyops::strip_prefix(s, "L.L.")) return "L.R." + s;
                           if (keyops::strip_prefix(s, "L.R.")) return "L.L." + s;
                           fail(ErrorKind::ShapeMismatch, "epsilon: unroutable key " + k);
                         });
}

// Trace over the right tensor factor: from A (x) U -> B (x) U to A -> B.
// Moves the strategy plays on either U occurrence are fed back into the other.
inline Strategy trace(const Strategy& s) {
  const GamePtr& gs = s.game();
  if (gs->kind() != Game::Kind::Tensor || gs->factor(0)->kind() != Game::Kind::Tensor ||
      gs->factor(1)->kind() != Game::Kind::Tensor)
    fail(ErrorKind::ShapeMismatch, "trace needs a strategy on (A(x)U) -> (B(x)U)");
  GamePtr dual_a = gs->factor(0)->factor(0);
  GamePtr dual_u = gs->factor(0)->factor(1);
  GamePtr b = gs->factor(1)->factor(0);
  GamePtr u = gs->factor(1)->factor(1);
  if (dual(u) != dual_u) fail(ErrorKind::ShapeMismatch, "trace: the two U occurrences differ");
  GamePtr rg = tensor(dual_a, b);
  uint32_t budget = config().trace_budget;
  auto oracle = [s, budget](const Game& g, const Play& visible) -> std::optional<MoveId> {
    const Game& sg = *s.game();
    Play sp;
    auto append = [&](const std::string& key) {
      PosId cur = sp.empty() ? sg.root() : sg.move(sp.back()).tgt;
      auto m = sg.find_move(cur, key);
      if (!m) fail(ErrorKind::ShapeMismatch, "trace: no move '" + key + "'");
      sp.push_back(*m);
    };
    auto pump = [&]() -> std::optional<std::string> {
      for (uint32_t i = 0; i < budget; ++i) {
        auto r = s.respond(sp);
        if (!r) return std::nullopt;
        std::string k = sg.move_key(*r);
        sp.push_back(*r);
        std::string rest = k;
        if (keyops::strip_prefix(rest, "R.R.")) {  // codomain U: feed back into domain U
          append("L.R." + rest);
          continue;
        }
        rest = k;
        if (keyops::strip_prefix(rest, "L.R.")) {  // domain U: feed back into codomain U
          append("R.R." + rest);
          continue;
        }
        rest = k;
        if (keyops::strip_prefix(rest, "L.L.")) return "L." + rest;
        rest = k;
        if (keyops::strip_prefix(rest, "R.L.")) return "R." + rest;
        fail(ErrorKind::ShapeMismatch, "trace: unroutable response " + k);
      }
      return std::nullopt;
    };
    for (size_t i = 0; i < visible.size(); ++i) {
      std::string k = g.move_key(visible[i]);
      std::string rest = k.substr(2);
      if (i % 2 == 0) {
        append((k[0] == 'L' ? "L.L." : "R.L.") + rest);
      } else {
        auto r = pump();
        if (!r || *r != k) return std::nullopt;
      }
    }
    auto r = pump();
    if (!r) return std::nullopt;
    PosId vcur = visible.empty() ? g.root() : g.move(visible.back()).tgt;
    auto mv = g.find_move(vcur, *r);
    if (!mv) fail(ErrorKind::ShapeMismatch, "trace: visible response not playable");
    return mv;
  };
  return Strategy(rg, oracle, "trace(" + s.label() + ")");
}

// ---------------------------------------------------------------------------
// bang key parsing

struct BangKey {
  bool open = false;
  size_t copy = 0;  // 1-based
  std::string rest;
};

inline std::optional<BangKey> parse_bang_key(const std::string& k) {
  size_t i = 0;
  bool open = false;
  if (i < k.size() && k[i] == 'o' && i + 1 < k.size() && isdigit(k[i + 1])) {
    open = true;
    ++i;
  }
  size_t start = i;
  while (i < k.size() && isdigit(k[i])) ++i;
  if (i == start || i >= k.size() || k[i] != ':') return std::nullopt;
  return BangKey{open, std::stoul(k.substr(start, i - start)), k.substr(i + 1)};
}

// ---------------------------------------------------------------------------
// the free commutative comonoid on !A

// weakening: !A -> 1 (Opponent has no move to make)
inline Strategy weakening(const GamePtr& a) {
  return empty_strategy(tensor(dual(bang(a)), unit_game()), "weakening(" + a->label() + ")");
}

// dereliction: !A -> A, playing everything in the first copy
inline Strategy dereliction(const GamePtr& a) {
  GamePtr g = tensor(dual(bang(a)), a);
  return routed_strategy(
      g, "dereliction(" + a->label() + ")",
      [](const Game& gg, const Play& odd) -> std::optional<std::string> {
        std::string k = gg.move_key(odd.back());
        std::string s = k;
        if (keyops::strip_prefix(s, "L.")) {
          auto bk = parse_bang_key(s);
          if (!bk || bk->copy != 1) fail(ErrorKind::ShapeMismatch, "dereliction: stray copy move");
          return "R." + bk->rest;
        }
        s = k.substr(2);
        PosId cur = gg.move(odd.back()).tgt;
        if (gg.find_move(cur, "L.o1:" + s)) return "L.o1:" + s;
        return "L.1:" + s;
      });
}

namespace detail {

// Copy routing shared by the contraction maps: pair every domain opening with
// the output-side opening it answered, in play order. Handles both the plain
// tensor shape and the pointed coalesced shape (whose handshake is ^ / *).
inline std::optional<std::string> contraction_route(const Game& gg, const Play& odd) {
  std::vector<std::pair<char, size_t>> out_of_dom;       // domain copy -> (side, copy)
  std::map<std::pair<char, size_t>, size_t> dom_of_out;  // (side, copy) -> domain copy
  std::optional<std::pair<char, size_t>> pending;
  for (MoveId m : odd) {
    std::string k = gg.move_key(m);
    std::string s = k;
    if (keyops::strip_prefix(s, "R.")) {
      if (s.size() > 2 && (s[0] == 'L' || s[0] == 'R') && s[1] == '.') {
        char side = s[0];
        auto bk = parse_bang_key(s.substr(2));
        if (bk && bk->open) pending = std::make_pair(side, bk->copy);
      }
    } else if (keyops::strip_prefix(s = k, "L.")) {
      auto bk = parse_bang_key(s);
      if (bk && bk->open) {
        if (!pending) fail(ErrorKind::ShapeMismatch, "contraction: unmatched domain opening");
        out_of_dom.push_back(*pending);
        dom_of_out[*pending] = out_of_dom.size();  // 1-based
        pending.reset();
      }
    }
  }
  std::string k = gg.move_key(odd.back());
  if (k == "L.^") return "R.*";  // pointed handshake
  std::string s = k;
  if (keyops::strip_prefix(s, "L.")) {  // Opponent moved inside a domain copy
    auto bk = parse_bang_key(s);
    if (!bk || bk->open || bk->copy > out_of_dom.size())
      fail(ErrorKind::ShapeMismatch, "contraction: unroutable domain move " + k);
    auto [side, copy] = out_of_dom[bk->copy - 1];
    return std::string("R.") + side + "." + std::to_string(copy) + ":" + bk->rest;
  }
  keyops::strip_prefix(s, "R.");
  char side = s[0];
  auto bk = parse_bang_key(s.substr(2));
  if (!bk) fail(ErrorKind::ShapeMismatch, "contraction: unroutable output move " + k);
  if (bk->open) return "L.o" + std::to_string(out_of_dom.size() + 1) + ":" + bk->rest;
  auto it = dom_of_out.find({side, bk->copy});
  if (it == dom_of_out.end()) fail(ErrorKind::ShapeMismatch, "contraction: move in unopened copy");
  return "L." + std::to_string(it->second) + ":" + bk->rest;
}

}  // namespace detail

// contraction: !A -> !A (x) !A, routing copies in order of opening
inline Strategy contraction(const GamePtr& a) {
  GamePtr ba = bang(a);
  GamePtr g = tensor(dual(ba), tensor(ba, ba));
  return routed_strategy(g, "contraction(" + a->label() + ")", detail::contraction_route);
}

// promotion: from sigma : !A -> B to !A -> !B, one session of sigma per copy of !B
inline Strategy promotion(const Strategy& s) {
  const GamePtr& gs = s.game();
  if (gs->kind() != Game::Kind::Tensor)
    fail(ErrorKind::ShapeMismatch, "promotion needs a strategy on !A -> B");
  GamePtr left = gs->factor(0);
  if (left != unit_game() &&
      (left->kind() != Game::Kind::Dual || left->factor(0)->kind() != Game::Kind::Bang))
    fail(ErrorKind::ShapeMismatch, "promotion: domain is not an exponential");
  GamePtr b = gs->factor(1);
  GamePtr rg = tensor(left, bang(b));
  auto oracle = [s](const Game& g, const Play& visible) -> std::optional<MoveId> {
    const Game& sg = *s.game();
    std::vector<Play> sess;
    std::vector<std::pair<size_t, size_t>> dom_owner;  // real domain copy -> (session, virtual)
    std::vector<size_t> sess_doms;                     // per session: virtual copies allocated
    size_t last_sess = 0;
    auto sess_append = [&](size_t j, const std::string& key) {
      Play& p = sess[j];
      PosId cur = p.empty() ? sg.root() : sg.move(p.back()).tgt;
      auto m = sg.find_move(cur, key);
      if (!m) fail(ErrorKind::ShapeMismatch, "promotion: no move '" + key + "' in a session");
      p.push_back(*m);
      last_sess = j;
    };
    for (MoveId vm : visible) {
      std::string k = g.move_key(vm);
      std::string s2 = k;
      if (keyops::strip_prefix(s2, "R.")) {
        auto bk = parse_bang_key(s2);
        if (!bk) fail(ErrorKind::ShapeMismatch, "promotion: bad codomain key " + k);
        if (bk->open) {
          if (bk->copy != sess.size() + 1)
            fail(ErrorKind::ShapeMismatch, "promotion: copies must open in order");
          sess.push_back({});
          sess_doms.push_back(0);
        }
        sess_append(bk->copy - 1, "R." + bk->rest);
      } else {
        keyops::strip_prefix(s2 = k, "L.");
        auto bk = parse_bang_key(s2);
        if (!bk) fail(ErrorKind::ShapeMismatch, "promotion: bad domain key " + k);
        if (bk->open) {
          // our own allocation, emitted from last_sess
          size_t v = ++sess_doms[last_sess];
          dom_owner.push_back({last_sess, v});
          sess_append(last_sess, "L.o" + std::to_string(v) + ":" + bk->rest);
        } else {
          auto [j, v] = dom_owner.at(bk->copy - 1);
          sess_append(j, "L." + std::to_string(v) + ":" + bk->rest);
        }
      }
    }
    auto r = s.respond(sess[last_sess]);
    if (!r) return std::nullopt;
    std::string k = sg.move_key(*r);
    std::string mapped;
    std::string s2 = k;
    if (keyops::strip_prefix(s2, "R.")) {
      mapped = "R." + std::to_string(last_sess + 1) + ":" + s2;
    } else {
      keyops::strip_prefix(s2 = k, "L.");
      auto bk = parse_bang_key(s2);
      if (!bk) fail(ErrorKind::ShapeMismatch, "promotion: bad session response " + k);
      if (bk->open) {
        mapped = "L.o" + std::to_string(dom_owner.size() + 1) + ":" + bk->rest;
      } else {
        size_t real = 0;
        for (size_t i = 0; i < dom_owner.size(); ++i)
          if (dom_owner[i] == std::make_pair(last_sess, bk->copy)) real = i + 1;
        if (real == 0) fail(ErrorKind::ShapeMismatch, "promotion: response in unopened copy");
        mapped = "L." + std::to_string(real) + ":" + bk->rest;
      }
    }
    PosId vcur = visible.empty() ? g.root() : g.move(visible.back()).tgt;
    auto mv = g.find_move(vcur, mapped);
    if (!mv) fail(ErrorKind::ShapeMismatch, "promotion: response not playable");
    return mv;
  };
  return Strategy(rg, oracle, "promotion(" + s.label() + ")");
}

// Functorial action of ! on strategies.
inline Strategy bang_strategy(const Strategy& s, const GamePtr& a) {
  return promotion(compose(dereliction(a), s));
}

// ---------------------------------------------------------------------------
// fixpoints

// From sigma : !A -> A, the traced-monoidal fixpoint 1 -> A:
// trace over !A of (1 (x) !A -> !A -> !A (x) !A -> A (x) !A).
inline Strategy fixpoint(const Strategy& s) {
  const GamePtr& gs = s.game();
  if (gs->kind() != Game::Kind::Tensor)
    fail(ErrorKind::ShapeMismatch, "fixpoint needs a strategy on !A -> A");
  GamePtr left = gs->factor(0);
  GamePtr a = gs->factor(1);
  GamePtr ba;
  if (left == unit_game()) {
    ba = unit_game();
  } else if (left->kind() == Game::Kind::Dual && left->factor(0)->kind() == Game::Kind::Bang) {
    ba = left->factor(0);
  } else {
    fail(ErrorKind::ShapeMismatch, "fixpoint: domain is not an exponential");
  }
  if (ba != bang(a)) fail(ErrorKind::ShapeMismatch, "fixpoint: domain must be ! of the codomain");
  auto contr = contraction(a);
  auto step = tensor_strategies(s, copycat(ba));
  auto theta = compose(iso_strategy(unitor_left(ba), "unitorL"), compose(contr, step));
  return trace(theta);
}

// ---------------------------------------------------------------------------
// sample games and the executable law suite

// The bracketed boolean game: q opens a query that tt/ff discharge.
inline GamePtr sample_bool_game() {
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

struct LawResult {
  std::string name;
  size_t depth = 0;
  bool holds = false;
  std::string witness;
};

struct LawReport {
  std::vector<LawResult> results;
  bool all_hold() const {
    for (const auto& r : results)
      if (!r.holds) return false;
    return true;
  }
};

namespace detail {

inline void run_law(LawReport& rep, const std::string& name, size_t depth,
                    const std::function<bool(std::vector<std::string>&)>& law) {
  LawResult r{name, depth, false, ""};
  std::vector<std::string> witness;
  try {
    r.holds = law(witness);
    if (!witness.empty()) {
      for (const auto& k : witness) r.witness += (r.witness.empty() ? "" : ".") + k;
    }
  } catch (const Error& e) {
    r.holds = false;
    r.witness = e.what();
  }
  rep.results.push_back(std::move(r));
}

}  // namespace detail

// Category, symmetric monoidal, compact-closed, comonoid and comonad laws, all
// as exact bounded play-set equalities on the sample games.
inline LawReport law_suite(size_t depth, std::vector<GamePtr> samples = {}) {
  LawReport rep;
  GamePtr b = sample_bool_game();
  if (samples.empty()) samples = {unit_game(), b, tensor(b, b)};

  auto not_b = routed_strategy(tensor(dual(b), b), "not",
                               [](const Game& gg, const Play& odd) -> std::optional<std::string> {
                                 std::string k = gg.move_key(odd.back());
                                 if (k == "R.q") return "L.q";
                                 if (k == "L.tt") return "R.ff";
                                 if (k == "L.ff") return "R.tt";
                                 return std::nullopt;
                               });
  auto tt_b = routed_strategy(tensor(unit_game(), b), "true",
                              [](const Game& gg, const Play& odd) -> std::optional<std::string> {
                                if (gg.move_key(odd.back()) == "R.q") return "R.tt";
                                return std::nullopt;
                              });

  auto law = [&](const std::string& name, auto fn) { detail::run_law(rep, name, depth, fn); };

  law("identity-left", [&](std::vector<std::string>& w) {
    return strategies_equal(compose(copycat(b), not_b), not_b, depth, nullptr, &w);
  });
  law("identity-right", [&](std::vector<std::string>& w) {
    return strategies_equal(compose(not_b, copycat(b)), not_b, depth, nullptr, &w);
  });
  law("compose-assoc", [&](std::vector<std::string>& w) {
    auto lhs = compose(compose(tt_b, not_b), not_b);
    auto rhs = compose(tt_b, compose(not_b, not_b));
    return strategies_equal(lhs, rhs, depth, nullptr, &w);
  });
  law("tensor-functorial", [&](std::vector<std::string>& w) {
    auto lhs = compose(tensor_strategies(not_b, not_b), tensor_strategies(not_b, not_b));
    auto rhs = tensor_strategies(compose(not_b, not_b), compose(not_b, not_b));
    return strategies_equal(lhs, rhs, depth, nullptr, &w);
  });
  law("tensor-of-copycats", [&](std::vector<std::string>& w) {
    for (const auto& g : samples) {
      auto lhs = tensor_strategies(copycat(g), copycat(g));
      if (!strategies_equal(lhs, copycat(tensor(g, g)), depth, nullptr, &w)) return false;
    }
    return true;
  });
  law("symmetry-involutive", [&](std::vector<std::string>& w) {
    auto s1 = iso_strategy(symmetry(b, b), "sym");
    auto s2 = iso_strategy(symmetry(b, b), "sym");
    return strategies_equal(compose(s1, s2), copycat(tensor(b, b)), depth, nullptr, &w);
  });
  law("symmetry-natural", [&](std::vector<std::string>& w) {
    auto lhs = compose(tensor_strategies(not_b, copycat(b)), iso_strategy(symmetry(b, b), "sym"));
    auto rhs = compose(iso_strategy(symmetry(b, b), "sym"), tensor_strategies(copycat(b), not_b));
    return strategies_equal(lhs, rhs, depth, nullptr, &w);
  });
  law("associator-iso", [&](std::vector<std::string>& w) {
    auto al = associator(b, b, b);
    auto fwd = iso_strategy(al, "assoc");
    auto bwd = iso_strategy(inverse(al), "assoc-inv");
    return strategies_equal(compose(fwd, bwd), copycat(tensor(tensor(b, b), b)), depth, nullptr, &w);
  });
  law("snake-right", [&](std::vector<std::string>& w) {
    for (const auto& a : samples) {
      // A (x) 1 -> A (x) (A~ (x) A) -> (A (x) A~) (x) A -> 1 (x) A equals copycat
      auto s1 = tensor_strategies(copycat(a), eta(a));
      auto s2 = iso_strategy(inverse(associator(a, dual(a), a)), "a-inv");
      auto s3 = tensor_strategies(epsilon(a), copycat(a));
      auto big = compose(compose(s1, s2), s3);
      auto expected = compose(compose(iso_strategy(unitor_right(a), "ur"), copycat(a)),
                              iso_strategy(inverse(unitor_left(a)), "ul-inv"));
      if (!strategies_equal(big, expected, depth, nullptr, &w)) return false;
    }
    return true;
  });
  law("snake-left", [&](std::vector<std::string>& w) {
    for (const auto& a : samples) {
      GamePtr da = dual(a);
      // 1 (x) A~ -> (A~ (x) A) (x) A~ -> A~ (x) (A (x) A~) -> A~ (x) 1
      auto s1 = tensor_strategies(eta(a), copycat(da));
      auto s2 = iso_strategy(associator(da, a, da), "a");
      auto s3 = tensor_strategies(copycat(da), epsilon(a));
      auto big = compose(compose(s1, s2), s3);
      auto expected = compose(compose(iso_strategy(unitor_left(da), "ul"), copycat(da)),
                              iso_strategy(inverse(unitor_right(da)), "ur-inv"));
      if (!strategies_equal(big, expected, depth, nullptr, &w)) return false;
    }
    return true;
  });
  law("eta-unit-empty", [&](std::vector<std::string>&) {
    return eta(unit_game()).plays_upto(depth).size() == 1;
  });
  law("yanking", [&](std::vector<std::string>& w) {
    auto sym = iso_strategy(symmetry(b, b), "sym");
    return strategies_equal(trace(sym), copycat(b), depth, nullptr, &w);
  });
  law("vanishing-unit", [&](std::vector<std::string>& w) {
    auto padded = tensor_strategies(not_b, copycat(unit_game()));
    return strategies_equal(trace(padded), not_b, depth, nullptr, &w);
  });
  law("comonoid-counit", [&](std::vector<std::string>& w) {
    GamePtr ba = bang(b);
    auto lhs = compose(contraction(b), tensor_strategies(weakening(b), copycat(ba)));
    auto iso = hom_iso(identity_iso(ba), unitor_left(ba));
    return strategies_equal(lhs, copycat(ba), depth, &iso, &w);
  });
  law("comonoid-coassoc", [&](std::vector<std::string>& w) {
    GamePtr ba = bang(b);
    auto lhs = compose(contraction(b), tensor_strategies(contraction(b), copycat(ba)));
    auto rhs = compose(contraction(b), tensor_strategies(copycat(ba), contraction(b)));
    auto iso = hom_iso(identity_iso(ba), associator(ba, ba, ba));
    return strategies_equal(lhs, rhs, depth, &iso, &w);
  });
  law("comonoid-commutative", [&](std::vector<std::string>& w) {
    GamePtr ba = bang(b);
    auto lhs = compose(contraction(b), iso_strategy(symmetry(ba, ba), "sym"));
    return strategies_equal(lhs, contraction(b), depth, nullptr, &w);
  });
  law("comonad-counit", [&](std::vector<std::string>& w) {
    auto der_b = dereliction(b);  // also serves as a sample !B -> B morphism
    auto lhs = compose(promotion(der_b), der_b);
    return strategies_equal(lhs, der_b, depth, nullptr, &w);
  });
  law("comonad-promote-der", [&](std::vector<std::string>& w) {
    return strategies_equal(promotion(dereliction(b)), copycat(bang(b)), depth, nullptr, &w);
  });
  law("comonad-assoc", [&](std::vector<std::string>& w) {
    auto der_b = dereliction(b);
    auto sigma = compose(promotion(der_b), der_b);  // !B -> B again, through !B
    auto lhs = promotion(compose(promotion(sigma), der_b));
    auto rhs = compose(promotion(sigma), promotion(der_b));
    return strategies_equal(lhs, rhs, depth, nullptr, &w);
  });
  law("bang-of-copycat", [&](std::vector<std::string>& w) {
    auto lhs = bang_strategy(copycat(b), b);
    return strategies_equal(lhs, copycat(bang(b)), depth, nullptr, &w);
  });
  law("structural-wb", [&](std::vector<std::string>& w) {
    return is_wb_strategy(weakening(b), depth, &w) && is_wb_strategy(contraction(b), depth, &w) &&
           is_wb_strategy(dereliction(b), depth, &w);
  });
  law("kappa-tensorial", [&](std::vector<std::string>& w) {
    for (const auto& a : samples) {
      auto t = tensor(a, b);
      for (const auto& p : enumerate_plays(*t, std::min<size_t>(depth, 6))) {
        auto l = project_play(*t, p, TensorSide::Left);
        auto r = project_play(*t, p, TensorSide::Right);
        if (!(kappa(*t, p) == kappa(*a, l) + kappa(*b, r))) {
          w = path_keys(*t, p);
          return false;
        }
      }
    }
    return true;
  });
  law("dual-degenerate", [&](std::vector<std::string>&) {
    for (const auto& a : samples)
      if (dual(tensor(a, b)) != tensor(dual(a), dual(b))) return false;
    return true;
  });
  return rep;
}

}  // namespace mbg
