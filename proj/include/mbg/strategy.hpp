#pragma once

// Strategies: deterministic, even-prefix-closed sets of alternating
// Opponent-starting plays, represented by a response oracle over odd plays.
// Copycat and the other structural strategies are key-routed; composition is
// parallel interaction on the shared component plus hiding.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "paths.hpp"

namespace mbg {

using Play = std::vector<MoveId>;

struct PlayHash {
  size_t operator()(const Play& p) const {
    uint64_t h = 1469598103934665603ull;
    for (MoveId m : p) {
      h ^= m + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return size_t(h);
  }
};

class Strategy {
 public:
  using Oracle = std::function<std::optional<MoveId>(const Game&, const Play&)>;

  Strategy() = default;
  Strategy(GamePtr g, Oracle o, std::string label = "strategy")
      : impl_(std::make_shared<Impl>()) {
    impl_->game = std::move(g);
    impl_->oracle = std::move(o);
    impl_->label = std::move(label);
  }

  bool valid() const { return impl_ != nullptr; }
  const GamePtr& game() const { return impl_->game; }
  const std::string& label() const { return impl_->label; }

  // Response to an odd-length play, memoized.
  std::optional<MoveId> respond(const Play& odd) const {
    {
      std::lock_guard lk(impl_->mu);
      auto it = impl_->memo.find(odd);
      if (it != impl_->memo.end()) return it->second;
    }
    auto r = impl_->oracle(*impl_->game, odd);
    std::lock_guard lk(impl_->mu);
    impl_->memo.emplace(odd, r);
    return r;
  }

  PosId position_after(const Play& p) const {
    return p.empty() ? impl_->game->root() : impl_->game->move(p.back()).tgt;
  }

  // All even plays of length <= depth (always contains the empty play).
  const std::vector<Play>& plays_upto(size_t depth) const {
    {
      std::lock_guard lk(impl_->mu);
      auto it = impl_->plays.find(depth);
      if (it != impl_->plays.end()) return *it->second;
    }
    auto out = std::make_shared<std::vector<Play>>();
    out->push_back({});
    const Game& g = *impl_->game;
    std::vector<Play> frontier{{}};
    while (!frontier.empty()) {
      std::vector<Play> next;
      for (const auto& s : frontier) {
        if (s.size() + 2 > depth) continue;
        PosId pos = position_after(s);
        for (MoveId m : g.moves_from(pos)) {
          if (g.polarity(m) != kOpponent) continue;
          Play odd = s;
          odd.push_back(m);
          auto r = respond(odd);
          if (!r) continue;
          const auto& rr = g.move(*r);
          if (rr.src != g.move(m).tgt)
            fail(ErrorKind::InvalidPath, impl_->label + ": response does not follow the play");
          if (rr.pol != kProponent)
            fail(ErrorKind::NonAlternating,
                 impl_->label + ": response '" + rr.key + "' is not a Proponent move");
          odd.push_back(*r);
          out->push_back(odd);
          next.push_back(std::move(odd));
        }
      }
      frontier = std::move(next);
    }
    std::sort(out->begin(), out->end());
    std::lock_guard lk(impl_->mu);
    impl_->plays[depth] = out;
    return *out;
  }

 private:
  struct Impl {
    GamePtr game;
    Oracle oracle;
    std::string label;
    std::mutex mu;
    std::unordered_map<Play, std::optional<MoveId>, PlayHash> memo;
    std::map<size_t, std::shared_ptr<std::vector<Play>>> plays;
  };
  std::shared_ptr<Impl> impl_;
};

// ---------------------------------------------------------------------------
// construction from explicit play sets

inline Strategy make_strategy(const GamePtr& g, const std::vector<Play>& plays,
                              const std::string& label = "strategy") {
  std::set<Play> play_set(plays.begin(), plays.end());
  play_set.insert(Play{});
  std::map<Play, MoveId> responses;
  for (const auto& p : play_set) {
    if (p.empty()) continue;
    if (p.size() % 2 != 0)
      fail(ErrorKind::NotPrefixClosed, label + ": strategies contain even-length plays only");
    Path path{g->root(), p};
    validate_path(*g, path);
    if (g->polarity(p[0]) != kOpponent)
      fail(ErrorKind::ProponentStarts, label + ": play opens with a Proponent move");
    if (!is_alternating(*g, path)) fail(ErrorKind::NonAlternating, label + ": play not alternating");
    for (size_t i = 0; i + 1 < p.size(); i += 2)
      if (g->polarity(p[i]) != kOpponent || g->polarity(p[i + 1]) != kProponent)
        fail(ErrorKind::NonAlternating, label + ": Opponent/Proponent pattern broken");
    Play prefix(p.begin(), p.end() - 2);
    if (!play_set.count(prefix))
      fail(ErrorKind::NotPrefixClosed, label + ": even prefix missing");
    Play odd(p.begin(), p.end() - 1);
    auto [it, fresh] = responses.emplace(odd, p.back());
    if (!fresh && it->second != p.back())
      fail(ErrorKind::NonDeterministic, label + ": two responses to the same play");
  }
  auto table = std::make_shared<std::map<Play, MoveId>>(std::move(responses));
  return Strategy(
      g,
      [table](const Game&, const Play& odd) -> std::optional<MoveId> {
        auto it = table->find(odd);
        if (it == table->end()) return std::nullopt;
        return it->second;
      },
      label);
}

inline Strategy empty_strategy(const GamePtr& g, const std::string& label = "empty") {
  return Strategy(g, [](const Game&, const Play&) { return std::nullopt; }, label);
}

// A strategy answering by key routing; the router sees the whole odd play.
inline Strategy routed_strategy(
    const GamePtr& g, const std::string& label,
    std::function<std::optional<std::string>(const Game&, const Play&)> respond_key) {
  return Strategy(
      g,
      [respond_key](const Game& gg, const Play& odd) -> std::optional<MoveId> {
        auto k = respond_key(gg, odd);
        if (!k) return std::nullopt;
        PosId cur = gg.move(odd.back()).tgt;
        auto m = gg.find_move(cur, *k);
        if (!m)
          fail(ErrorKind::ShapeMismatch, "routing: no move '" + *k + "' from " + gg.pos_name(cur));
        return m;
      },
      label);
}

// ---------------------------------------------------------------------------
// copycat and relabelings

inline std::optional<std::string> mirror_lr(const std::string& k) {
  std::string s = k;
  if (keyops::strip_prefix(s, "L.")) return "R." + s;
  if (keyops::strip_prefix(s, "R.")) return "L." + s;
  return std::nullopt;
}

// Identity strategy on dual(A) (x) A, replaying every move in the other component.
inline Strategy copycat(const GamePtr& a) {
  GamePtr g = tensor(dual(a), a);
  return routed_strategy(g, "copycat(" + a->label() + ")",
                         [](const Game& gg, const Play& odd) -> std::optional<std::string> {
                           auto k = mirror_lr(gg.move_key(odd.back()));
                           if (!k) fail(ErrorKind::ShapeMismatch, "copycat: unroutable key");
                           return k;
                         });
}

// Strategy realizing a canonical isomorphism (on dual(from) (x) to).
inline Strategy iso_strategy(const GameIso& iso, const std::string& label = "iso") {
  GamePtr g = tensor(dual(iso.from), iso.to);
  auto fwd = iso.fwd, bwd = iso.bwd;
  return routed_strategy(g, label,
                         [fwd, bwd](const Game& gg, const Play& odd) -> std::optional<std::string> {
                           std::string k = gg.move_key(odd.back());
                           std::string s = k;
                           if (keyops::strip_prefix(s, "L.")) return "R." + fwd(s);
                           if (keyops::strip_prefix(s, "R.")) return "L." + bwd(s);
                           fail(ErrorKind::ShapeMismatch, "iso: unroutable key");
                         });
}

// Transport a strategy along move-key bijections between its game and `to`.
inline Strategy relabel_strategy(const Strategy& s, const GamePtr& to,
                                 std::function<std::string(const std::string&)> to_source,
                                 std::function<std::string(const std::string&)> to_target,
                                 const std::string& label = "relabel") {
  return Strategy(
      to,
      [s, to_source, to_target](const Game& gg, const Play& odd) -> std::optional<MoveId> {
        const Game& sg = *s.game();
        Play sp;
        PosId cur = sg.root();
        for (MoveId m : odd) {
          std::string sk = to_source(gg.move_key(m));
          auto sm = sg.find_move(cur, sk);
          if (!sm)
            fail(ErrorKind::ShapeMismatch,
                 "relabel: key '" + sk + "' missing from " + sg.pos_name(cur));
          sp.push_back(*sm);
          cur = sg.move(*sm).tgt;
        }
        auto r = s.respond(sp);
        if (!r) return std::nullopt;
        PosId vcur = gg.move(odd.back()).tgt;
        auto vm = gg.find_move(vcur, to_target(sg.move_key(*r)));
        if (!vm)
          fail(ErrorKind::ShapeMismatch, "relabel: response key missing in target game");
        return vm;
      },
      label);
}

// ---------------------------------------------------------------------------
// comparison

inline std::vector<std::vector<std::string>> plays_as_keys(const Strategy& s, size_t depth) {
  std::vector<std::vector<std::string>> out;
  const Game& g = *s.game();
  for (const auto& p : s.plays_upto(depth)) {
    std::vector<std::string> ks;
    for (MoveId m : p) ks.push_back(g.move_key(m));
    out.push_back(std::move(ks));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Exact bounded play-set equality, after an optional canonical renaming of the
// first strategy's game onto the second's.
inline bool strategies_equal(const Strategy& a, const Strategy& b, size_t depth,
                             const GameIso* iso = nullptr,
                             std::vector<std::string>* witness = nullptr) {
  std::vector<std::vector<std::string>> pa, pb = plays_as_keys(b, depth);
  if (iso == nullptr) {
    if (a.game() != b.game())
      fail(ErrorKind::GamesNotIsomorphic,
           "strategies live on different games (" + a.game()->label() + " vs " +
               b.game()->label() + ") and no renaming was supplied");
    pa = plays_as_keys(a, depth);
  } else {
    if (iso->from != a.game() || iso->to != b.game())
      fail(ErrorKind::GamesNotIsomorphic, "renaming endpoints do not match the strategies");
    for (const auto& ks : plays_as_keys(a, depth)) {
      std::vector<std::string> mapped;
      for (const auto& k : ks) mapped.push_back(iso->fwd(k));
      pa.push_back(std::move(mapped));
    }
    std::sort(pa.begin(), pa.end());
  }
  if (pa == pb) return true;
  if (witness) {
    std::vector<std::vector<std::string>> diff;
    std::set_symmetric_difference(pa.begin(), pa.end(), pb.begin(), pb.end(),
                                  std::back_inserter(diff));
    if (!diff.empty()) *witness = diff.front();
  }
  return false;
}

// Renaming for strategies viewed on hom games dual(A) (x) B: applies `li` to the
// left component keys and `ri` to the right.
inline GameIso hom_iso(const GameIso& li, const GameIso& ri) {
  return tensor_iso(dual_iso(li), ri);
}

// ---------------------------------------------------------------------------
// well-bracketed strategies

// For every play s.m.t.n of the strategy with m Opponent (n the final Proponent
// move), kappa+ of the subpath vanishing forces kappa- to vanish.
inline bool is_wb_strategy(const Strategy& s, size_t depth,
                           std::vector<std::string>* witness = nullptr) {
  const Game& g = *s.game();
  for (const auto& p : s.plays_upto(depth)) {
    if (p.size() < 2) continue;
    std::vector<PosId> at{g.root()};
    for (MoveId m : p) at.push_back(g.move(m).tgt);
    for (size_t i = 0; i + 1 < p.size(); i += 2) {  // Opponent moves sit at even offsets
      ChainState st = ChainState::at(g, at[i]);
      for (size_t j = i; j < p.size(); ++j) st.step(g, p[j]);
      ResourceCount k = st.kappa(g, at[p.size()]);
      if (k.plus == 0 && k.minus != 0) {
        if (witness) {
          witness->clear();
          for (MoveId m : p) witness->push_back(g.move_key(m));
        }
        return false;
      }
    }
  }
  return true;
}

// Strategies over dual(A) (x) B whose opening exchange goes source-to-target.
inline bool is_transverse(const Strategy& s, size_t probe_depth = 2) {
  const Game& g = *s.game();
  if (g.kind() != Game::Kind::Tensor) fail(ErrorKind::ShapeMismatch, "transversality needs a hom game");
  for (const auto& p : s.plays_upto(probe_depth)) {
    if (p.size() != 2) continue;
    if (g.move_key(p[0]).rfind("L.", 0) != 0 || g.move_key(p[1]).rfind("R.", 0) != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// composition by interaction

struct Interaction {
  // component 0 = left (A), 1 = shared middle (B), 2 = right (C)
  std::vector<std::pair<int, std::string>> steps;
};

namespace detail {

struct InteractionMachine {
  const Strategy& s;  // on dual(A) (x) B
  const Strategy& t;  // on dual(B) (x) C
  Play sp, tp;
  int last = -1;  // 0 = move landed in s, 1 = in t
  Interaction* record = nullptr;

  void note(int comp, const std::string& key) {
    if (record) record->steps.push_back({comp, key});
  }

  void append_s(const std::string& key) {
    const Game& g = *s.game();
    PosId cur = sp.empty() ? g.root() : g.move(sp.back()).tgt;
    auto m = g.find_move(cur, key);
    if (!m) fail(ErrorKind::ShapeMismatch, "interaction: no move '" + key + "' in " + g.label());
    sp.push_back(*m);
    last = 0;
  }

  void append_t(const std::string& key) {
    const Game& g = *t.game();
    PosId cur = tp.empty() ? g.root() : g.move(tp.back()).tgt;
    auto m = g.find_move(cur, key);
    if (!m) fail(ErrorKind::ShapeMismatch, "interaction: no move '" + key + "' in " + g.label());
    tp.push_back(*m);
    last = 1;
  }

  void feed_left(const std::string& rest) {  // visible move in A
    append_s("L." + rest);
    note(0, rest);
  }
  void feed_right(const std::string& rest) {  // visible move in C
    append_t("R." + rest);
    note(2, rest);
  }

  // Run hidden exchanges until a visible response emerges.
  std::optional<std::string> pump(uint32_t budget) {
    for (uint32_t step = 0; step < budget; ++step) {
      if (last == 0) {
        auto r = s.respond(sp);
        if (!r) return std::nullopt;
        std::string k = s.game()->move_key(*r);
        sp.push_back(*r);
        std::string rest = k.substr(2);
        if (k.rfind("R.", 0) == 0) {  // middle: hand to t
          note(1, rest);
          append_t("L." + rest);
          continue;
        }
        note(0, rest);
        return "L." + rest;  // visible in A
      } else {
        auto r = t.respond(tp);
        if (!r) return std::nullopt;
        std::string k = t.game()->move_key(*r);
        tp.push_back(*r);
        std::string rest = k.substr(2);
        if (k.rfind("L.", 0) == 0) {  // middle: hand to s
          note(1, rest);
          append_s("R." + rest);
          continue;
        }
        note(2, rest);
        return "R." + rest;  // visible in C
      }
    }
    return std::nullopt;  // chattering beyond budget counts as no response
  }
};

}  // namespace detail

// sigma ; tau, by synchronized interaction on the shared middle game and hiding.
inline Strategy compose(const Strategy& s, const Strategy& t) {
  const GamePtr& gs = s.game();
  const GamePtr& gt = t.game();
  if (gs->kind() != Game::Kind::Tensor || gt->kind() != Game::Kind::Tensor)
    fail(ErrorKind::MiddleGameMismatch, "composition needs strategies over tensor hom games");
  if (gt->factor(0) != dual(gs->factor(1)))
    fail(ErrorKind::MiddleGameMismatch, "middle games differ: " + gs->factor(1)->label() +
                                            " vs dual of " + gt->factor(0)->label());
  GamePtr rg = tensor(gs->factor(0), gt->factor(1));
  uint32_t budget = config().interaction_budget;
  auto oracle = [s, t, budget](const Game& g, const Play& visible) -> std::optional<MoveId> {
    detail::InteractionMachine m{s, t};
    PosId vcur = g.root();
    for (size_t i = 0; i < visible.size(); ++i) {
      std::string k = g.move_key(visible[i]);
      std::string rest = k.substr(2);
      if (i % 2 == 0) {
        if (k.rfind("L.", 0) == 0)
          m.feed_left(rest);
        else
          m.feed_right(rest);
      } else {
        // replay the recorded Proponent answer through the machine
        auto r = m.pump(budget);
        if (!r || *r != k) return std::nullopt;
      }
      vcur = g.move(visible[i]).tgt;
    }
    auto r = m.pump(budget);
    if (!r) return std::nullopt;
    auto mv = g.find_move(vcur, *r);
    if (!mv)
      fail(ErrorKind::ShapeMismatch, "composition: visible response '" + *r + "' is not playable");
    return mv;
  };
  return Strategy(rg, oracle, s.label() + ";" + t.label());
}

// The interaction sequence witnessing a visible play of s;t, for diagnostics.
inline std::optional<Interaction> interaction_for(const Strategy& s, const Strategy& t,
                                                  const Strategy& composed, const Play& visible) {
  const Game& g = *composed.game();
  Interaction rec;
  detail::InteractionMachine m{s, t};
  m.record = &rec;
  for (size_t i = 0; i < visible.size(); ++i) {
    std::string k = g.move_key(visible[i]);
    std::string rest = k.substr(2);
    if (i % 2 == 0) {
      if (k.rfind("L.", 0) == 0)
        m.feed_left(rest);
      else
        m.feed_right(rest);
    } else {
      auto r = m.pump(config().interaction_budget);
      if (!r || *r != k) return std::nullopt;
    }
  }
  return rec;
}

// ---------------------------------------------------------------------------
// tensor of strategies

// sigma (x) tau : (A (x) C) -> (B (x) D), a disjoint interleaving.
inline Strategy tensor_strategies(const Strategy& s, const Strategy& t) {
  const GamePtr& gs = s.game();
  const GamePtr& gt = t.game();
  if (gs->kind() != Game::Kind::Tensor || gt->kind() != Game::Kind::Tensor)
    fail(ErrorKind::ShapeMismatch, "tensor of strategies needs hom games");
  GamePtr rg = tensor(tensor(gs->factor(0), gt->factor(0)), tensor(gs->factor(1), gt->factor(1)));
  auto oracle = [s, t](const Game& g, const Play& visible) -> std::optional<MoveId> {
    Play sp, tp;
    const Game& sg = *s.game();
    const Game& tg = *t.game();
    int last_owner = -1;
    auto feed = [&](MoveId vm) {
      std::string k = g.move_key(vm);
      std::string o = k.substr(0, 2) == "L." ? "L." : "R.";
      std::string rest = k.substr(2);
      std::string inner_side = rest.substr(0, 2);
      std::string inner = rest.substr(2);
      bool to_s = inner_side == "L.";
      const Game& og = to_s ? sg : tg;
      Play& op = to_s ? sp : tp;
      PosId cur = op.empty() ? og.root() : og.move(op.back()).tgt;
      auto m = og.find_move(cur, o + inner);
      if (!m) fail(ErrorKind::ShapeMismatch, "tensor: unroutable move '" + k + "'");
      op.push_back(*m);
      last_owner = to_s ? 0 : 1;
    };
    for (MoveId vm : visible) feed(vm);
    const Strategy& owner = last_owner == 0 ? s : t;
    const Game& og = last_owner == 0 ? sg : tg;
    auto r = owner.respond(last_owner == 0 ? sp : tp);
    if (!r) return std::nullopt;
    std::string k = og.move_key(*r);
    std::string side = k.substr(0, 2);
    std::string mapped = side + (last_owner == 0 ? "L." : "R.") + k.substr(2);
    PosId vcur = g.move(visible.back()).tgt;
    auto mv = g.find_move(vcur, mapped);
    if (!mv) fail(ErrorKind::ShapeMismatch, "tensor: response not playable");
    return mv;
  };
  return Strategy(rg, oracle, s.label() + "(x)" + t.label());
}

// ---------------------------------------------------------------------------
// strategy enumeration (exhaustive search on tiny games)

// Enumerates the play sets of all strategies up to `depth` that pass `admit`
// on every even play; optionally only strategies responding whenever possible.
inline void enumerate_strategies(const GamePtr& g, size_t depth,
                                 const std::function<bool(const std::vector<Play>&)>& admit,
                                 const std::function<void(const std::vector<Play>&)>& emit) {
  struct Walker {
    const Game& g;
    size_t depth;
    const std::function<bool(const std::vector<Play>&)>& admit;
    const std::function<void(const std::vector<Play>&)>& emit;
    std::vector<Play> plays{{}};

    std::vector<Play> odd_extensions(const Play& even) {
      std::vector<Play> out;
      if (even.size() + 2 > depth) return out;
      PosId pos = even.empty() ? g.root() : g.move(even.back()).tgt;
      for (MoveId m : g.moves_from(pos)) {
        if (g.polarity(m) != kOpponent) continue;
        Play odd = even;
        odd.push_back(m);
        out.push_back(std::move(odd));
      }
      return out;
    }

    void walk(std::vector<Play> pending, size_t idx) {
      if (idx == pending.size()) {
        emit(plays);
        return;
      }
      Play odd = pending[idx];
      walk(pending, idx + 1);  // no response to this play
      PosId pos = g.move(odd.back()).tgt;
      for (MoveId m : g.moves_from(pos)) {
        if (g.polarity(m) != kProponent) continue;
        Play even = odd;
        even.push_back(m);
        plays.push_back(even);
        if (admit(plays)) {
          auto more = odd_extensions(even);
          auto next = pending;
          next.insert(next.end(), more.begin(), more.end());
          walk(next, idx + 1);
        }
        plays.pop_back();
      }
    }

    void run() { walk(odd_extensions({}), 0); }
  };
  Walker w{*g, depth, admit, emit};
  w.run();
}

}  // namespace mbg
