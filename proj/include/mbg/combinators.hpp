#pragma once

// Game constructions: dual, tensor, the exponential (!), the pointed-game
// constructions (coalesced tensor, negation over a family of components, the
// affine strip, lift), and canonical renaming isomorphisms between them.
//
// Constructions are hash-consed on their factors, so building the same game
// twice yields the same instance; dual is involutive by construction and
// distributes over tensor, which keeps dual(A (x) B) literally equal to
// dual(A) (x) dual(B).

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "game.hpp"

namespace mbg {

// ---------------------------------------------------------------------------
// construction subclasses

class DualGame final : public Game {
 public:
  explicit DualGame(GamePtr base) : Game(Kind::Dual, "~" + base->label(), {base}) {
    intern_locked(factors_[0]->root());
  }

 private:
  const GamePtr& base() const { return factors_[0]; }

  PosId intern_locked(PosId bp) const {
    auto it = interned_.find(bp);
    if (it != interned_.end()) return it->second;
    PosRec rec;
    rec.name = base()->pos_name(bp);
    rec.meta_a = bp;
    for (const auto& q : base()->queries_at(bp)) rec.queries.push_back({q.name, -q.pol});
    PosId p = add_pos_locked(std::move(rec));
    interned_.emplace(bp, p);
    return p;
  }

  void expand_locked(PosId p) const override {
    PosId bp = PosId(pos_[p].meta_a);
    for (MoveId bm : base()->moves_from(bp)) {
      const auto& br = base()->move(bm);
      MoveRec rec;
      rec.key = br.key;
      rec.src = p;
      rec.tgt = intern_locked(br.tgt);
      rec.pol = -br.pol;
      rec.keep = br.keep;
      rec.meta_a = bm;
      add_move_locked(std::move(rec));
    }
  }

  mutable std::unordered_map<PosId, PosId> interned_;
};

class TensorGame final : public Game {
 public:
  TensorGame(GamePtr a, GamePtr b)
      : Game(Kind::Tensor, "(" + a->label() + "*" + b->label() + ")", {a, b}) {
    intern_locked(factors_[0]->root(), factors_[1]->root());
  }

 private:
  const GamePtr& ga() const { return factors_[0]; }
  const GamePtr& gb() const { return factors_[1]; }

  PosId intern_locked(PosId a, PosId b) const {
    uint64_t k = (uint64_t(a) << 32) | b;
    auto it = interned_.find(k);
    if (it != interned_.end()) return it->second;
    PosRec rec;
    rec.name = "(" + ga()->pos_name(a) + "|" + gb()->pos_name(b) + ")";
    rec.meta_a = a;
    rec.meta_b = b;
    for (const auto& q : ga()->queries_at(a)) rec.queries.push_back({"L." + q.name, q.pol});
    for (const auto& q : gb()->queries_at(b)) rec.queries.push_back({"R." + q.name, q.pol});
    PosId p = add_pos_locked(std::move(rec));
    interned_.emplace(k, p);
    return p;
  }

  void expand_locked(PosId p) const override {
    PosId a = PosId(pos_[p].meta_a), b = PosId(pos_[p].meta_b);
    size_t qa = ga()->queries_at(a).size();
    size_t qb = gb()->queries_at(b).size();
    for (MoveId bm : ga()->moves_from(a)) {
      const auto& br = ga()->move(bm);
      MoveRec rec;
      rec.key = "L." + br.key;
      rec.src = p;
      rec.tgt = intern_locked(br.tgt, b);
      rec.pol = br.pol;
      rec.keep = br.keep;  // A block occupies the same leading indices
      size_t qa_tgt = ga()->queries_at(br.tgt).size();
      for (size_t i = 0; i < qb; ++i)
        rec.keep.emplace_back(uint16_t(qa + i), uint16_t(qa_tgt + i));
      rec.meta_a = 0;
      rec.meta_b = bm;
      add_move_locked(std::move(rec));
    }
    for (MoveId bm : gb()->moves_from(b)) {
      const auto& br = gb()->move(bm);
      MoveRec rec;
      rec.key = "R." + br.key;
      rec.src = p;
      rec.tgt = intern_locked(a, br.tgt);
      rec.pol = br.pol;
      for (auto [s, t] : br.keep) rec.keep.emplace_back(uint16_t(qa + s), uint16_t(qa + t));
      for (size_t i = 0; i < qa; ++i) rec.keep.emplace_back(uint16_t(i), uint16_t(i));
      rec.meta_a = 1;
      rec.meta_b = bm;
      add_move_locked(std::move(rec));
    }
  }

  mutable std::unordered_map<uint64_t, PosId> interned_;
};

// Words of non-root positions; Opponent opens fresh copies.
class BangGame final : public Game {
 public:
  explicit BangGame(GamePtr base) : Game(Kind::Bang, "!" + base->label(), {base}) {
    intern_locked({});
  }

 private:
  const GamePtr& base() const { return factors_[0]; }

  PosId intern_locked(const std::vector<uint32_t>& word) const {
    auto it = interned_.find(word);
    if (it != interned_.end()) return it->second;
    PosRec rec;
    std::string name = "[";
    for (size_t i = 0; i < word.size(); ++i) {
      if (i) name += ",";
      name += base()->pos_name(PosId(word[i]));
    }
    rec.name = name + "]";
    rec.aux = word;
    for (size_t i = 0; i < word.size(); ++i)
      for (const auto& q : base()->queries_at(PosId(word[i])))
        rec.queries.push_back({std::to_string(i + 1) + ":" + q.name, q.pol});
    PosId p = add_pos_locked(std::move(rec));
    interned_.emplace(word, p);
    return p;
  }

  void expand_locked(PosId p) const override {
    const std::vector<uint32_t> word = pos_[p].aux;
    std::vector<size_t> offset(word.size() + 1, 0);
    for (size_t i = 0; i < word.size(); ++i)
      offset[i + 1] = offset[i] + base()->queries_at(PosId(word[i])).size();
    // a move in one copy
    for (size_t i = 0; i < word.size(); ++i) {
      for (MoveId bm : base()->moves_from(PosId(word[i]))) {
        const auto& br = base()->move(bm);
        if (br.tgt == base()->root()) continue;  // letters are non-root positions
        std::vector<uint32_t> next = word;
        next[i] = br.tgt;
        MoveRec rec;
        rec.key = std::to_string(i + 1) + ":" + br.key;
        rec.src = p;
        rec.tgt = intern_locked(next);
        rec.pol = br.pol;
        size_t tgt_i = base()->queries_at(br.tgt).size();
        for (size_t j = 0; j < word.size(); ++j) {
          if (j == i) continue;
          size_t tgt_off = j < i ? offset[j] : offset[j] - offset[i + 1] + offset[i] + tgt_i;
          size_t nq = base()->queries_at(PosId(word[j])).size();
          for (size_t q = 0; q < nq; ++q)
            rec.keep.emplace_back(uint16_t(offset[j] + q), uint16_t(tgt_off + q));
        }
        for (auto [s, t] : br.keep)
          rec.keep.emplace_back(uint16_t(offset[i] + s), uint16_t(offset[i] + t));
        rec.meta_a = uint64_t(i);
        rec.meta_b = bm;
        add_move_locked(std::move(rec));
      }
    }
    // Opponent opens a new copy
    for (MoveId bm : base()->moves_from(base()->root())) {
      const auto& br = base()->move(bm);
      if (br.pol != kOpponent || br.tgt == base()->root()) continue;
      std::vector<uint32_t> next = word;
      next.push_back(br.tgt);
      MoveRec rec;
      rec.key = "o" + std::to_string(word.size() + 1) + ":" + br.key;
      rec.src = p;
      rec.tgt = intern_locked(next);
      rec.pol = kOpponent;
      for (size_t q = 0; q < offset[word.size()]; ++q)
        rec.keep.emplace_back(uint16_t(q), uint16_t(q));
      rec.meta_a = (uint64_t(1) << 32) | word.size();
      rec.meta_b = bm;
      add_move_locked(std::move(rec));
    }
  }

  mutable std::map<std::vector<uint32_t>, PosId> interned_;
};

// Negation of a finite family of pointed components: a fresh Proponent move
// initiating one query, then the dualized components rooted together, each
// entry move complying with that query.
class NegGame final : public Game {
 public:
  explicit NegGame(std::vector<GamePtr> comps) : Game(Kind::Neg, neg_label(comps), comps) {
    for (const auto& c : factors_) c->initial_move();  // NotPointed otherwise
    PosRec root;
    root.name = "neg";
    add_pos_locked(std::move(root));
    PosRec hub;
    hub.name = "neg.hub";
    hub.queries.push_back({"nq", kProponent});
    hub.meta_a = 1;
    add_pos_locked(std::move(hub));
  }

 private:
  static std::string neg_label(const std::vector<GamePtr>& comps) {
    std::string s = "neg{";
    for (size_t i = 0; i < comps.size(); ++i) s += (i ? "," : "") + comps[i]->label();
    return s + "}";
  }

  PosId intern_locked(size_t comp, PosId bp) const {
    auto key = std::make_pair(uint32_t(comp), bp);
    auto it = interned_.find(key);
    if (it != interned_.end()) return it->second;
    PosRec rec;
    rec.name = "c" + std::to_string(comp) + ":" + factors_[comp]->pos_name(bp);
    rec.meta_a = 2;
    rec.meta_b = (uint64_t(comp) << 32) | bp;
    for (const auto& q : factors_[comp]->queries_at(bp)) rec.queries.push_back({q.name, -q.pol});
    PosId p = add_pos_locked(std::move(rec));
    interned_.emplace(key, p);
    return p;
  }

  void expand_locked(PosId p) const override {
    if (p == 0) {
      MoveRec rec;
      rec.key = "~";
      rec.src = 0;
      rec.tgt = 1;
      rec.pol = kProponent;
      add_move_locked(std::move(rec));
      return;
    }
    if (pos_[p].meta_a == 1) {  // hub: one entry per component, all complying with nq
      for (size_t i = 0; i < factors_.size(); ++i) {
        const auto& comp = factors_[i];
        MoveId bm = comp->initial_move();
        const auto& br = comp->move(bm);
        MoveRec rec;
        rec.key = "c" + std::to_string(i) + ":" + br.key;
        rec.src = p;
        rec.tgt = intern_locked(i, br.tgt);
        rec.pol = kOpponent;
        rec.meta_a = 1;
        rec.meta_b = (uint64_t(i) << 32) | bm;
        add_move_locked(std::move(rec));
      }
      return;
    }
    size_t comp = size_t(pos_[p].meta_b >> 32);
    PosId bp = PosId(pos_[p].meta_b & 0xffffffffu);
    const auto& g = factors_[comp];
    for (MoveId bm : g->moves_from(bp)) {
      const auto& br = g->move(bm);
      if (br.tgt == g->root()) continue;
      MoveRec rec;
      rec.key = "c" + std::to_string(comp) + ":" + br.key;
      rec.src = p;
      rec.tgt = intern_locked(comp, br.tgt);
      rec.pol = -br.pol;
      rec.keep = br.keep;
      rec.meta_a = 1;
      rec.meta_b = (uint64_t(comp) << 32) | bm;
      add_move_locked(std::move(rec));
    }
  }

  mutable std::map<std::pair<uint32_t, PosId>, PosId> interned_;
};

// Coalesced tensor of pointed games: the two initial Player moves are fused.
class CoalesceGame final : public Game {
 public:
  CoalesceGame(GamePtr a, GamePtr b)
      : Game(Kind::Coalesce, "(" + a->label() + "." + b->label() + ")", {a, b}) {
    factors_[0]->initial_move();
    factors_[1]->initial_move();
    PosRec root;
    root.name = "odot";
    add_pos_locked(std::move(root));
  }

 private:
  const GamePtr& ga() const { return factors_[0]; }
  const GamePtr& gb() const { return factors_[1]; }

  PosId intern_locked(PosId a, PosId b) const {
    uint64_t k = (uint64_t(a) << 32) | b;
    auto it = interned_.find(k);
    if (it != interned_.end()) return it->second;
    PosRec rec;
    rec.name = "(" + ga()->pos_name(a) + "|" + gb()->pos_name(b) + ")";
    rec.meta_a = 1;
    rec.meta_b = k;
    for (const auto& q : ga()->queries_at(a)) rec.queries.push_back({"L." + q.name, q.pol});
    for (const auto& q : gb()->queries_at(b)) rec.queries.push_back({"R." + q.name, q.pol});
    PosId p = add_pos_locked(std::move(rec));
    interned_.emplace(k, p);
    return p;
  }

  void expand_locked(PosId p) const override {
    if (p == 0) {
      MoveRec rec;
      rec.key = "*";
      rec.src = 0;
      rec.tgt = intern_locked(ga()->move(ga()->initial_move()).tgt, gb()->move(gb()->initial_move()).tgt);
      rec.pol = kProponent;
      add_move_locked(std::move(rec));
      return;
    }
    PosId a = PosId(pos_[p].meta_b >> 32), b = PosId(pos_[p].meta_b & 0xffffffffu);
    size_t qa = ga()->queries_at(a).size();
    for (MoveId bm : ga()->moves_from(a)) {
      const auto& br = ga()->move(bm);
      if (br.tgt == ga()->root()) continue;
      MoveRec rec;
      rec.key = "L." + br.key;
      rec.src = p;
      rec.tgt = intern_locked(br.tgt, b);
      rec.pol = br.pol;
      rec.keep = br.keep;
      size_t qa_tgt = ga()->queries_at(br.tgt).size();
      size_t qb = gb()->queries_at(b).size();
      for (size_t i = 0; i < qb; ++i)
        rec.keep.emplace_back(uint16_t(qa + i), uint16_t(qa_tgt + i));
      rec.meta_a = 1;
      rec.meta_b = bm;
      add_move_locked(std::move(rec));
    }
    for (MoveId bm : gb()->moves_from(b)) {
      const auto& br = gb()->move(bm);
      if (br.tgt == gb()->root()) continue;
      MoveRec rec;
      rec.key = "R." + br.key;
      rec.src = p;
      rec.tgt = intern_locked(a, br.tgt);
      rec.pol = br.pol;
      for (auto [s, t] : br.keep) rec.keep.emplace_back(uint16_t(qa + s), uint16_t(qa + t));
      for (size_t i = 0; i < qa; ++i) rec.keep.emplace_back(uint16_t(i), uint16_t(i));
      rec.meta_a = 2;
      rec.meta_b = bm;
      add_move_locked(std::move(rec));
    }
  }

  mutable std::unordered_map<uint64_t, PosId> interned_;
};

// Affine strip: removes every query initiated by the initial move, together
// with all their residuals.
class StripGame final : public Game {
 public:
  explicit StripGame(GamePtr base) : Game(Kind::Strip, "aff" + base->label(), {base}) {
    factors_[0]->initial_move();
    intern_locked(factors_[0]->root(), {});
  }

 private:
  const GamePtr& base() const { return factors_[0]; }

  PosId intern_locked(PosId bp, const std::vector<uint32_t>& mask) const {
    auto it = interned_.find(bp);
    if (it != interned_.end()) {
      if (pos_[it->second].aux != mask)
        fail(ErrorKind::ShapeMismatch,
             "affine strip: parallel paths disagree on surviving queries at " + base()->pos_name(bp));
      return it->second;
    }
    PosRec rec;
    rec.name = base()->pos_name(bp);
    rec.meta_a = bp;
    rec.aux = mask;
    const auto& bq = base()->queries_at(bp);
    for (uint32_t i : mask) rec.queries.push_back(bq[i]);
    PosId p = add_pos_locked(std::move(rec));
    interned_.emplace(bp, p);
    return p;
  }

  void expand_locked(PosId p) const override {
    PosId bp = PosId(pos_[p].meta_a);
    const std::vector<uint32_t> mask = pos_[p].aux;
    auto rank_of = [&](const std::vector<uint32_t>& m, uint32_t idx) -> int {
      for (size_t r = 0; r < m.size(); ++r)
        if (m[r] == idx) return int(r);
      return -1;
    };
    bool initial = (p == 0);
    for (MoveId bm : base()->moves_from(bp)) {
      const auto& br = base()->move(bm);
      size_t tq = base()->queries_at(br.tgt).size();
      std::vector<int> ancestor(tq, -1);
      for (auto [s, t] : br.keep) ancestor[t] = s;
      std::vector<uint32_t> tgt_mask;
      for (size_t t = 0; t < tq; ++t) {
        if (ancestor[t] == -1) {
          if (!initial) tgt_mask.push_back(uint32_t(t));  // the initial move's queries are the stripped ones
        } else if (rank_of(mask, uint32_t(ancestor[t])) >= 0) {
          tgt_mask.push_back(uint32_t(t));
        }
      }
      MoveRec rec;
      rec.key = br.key;
      rec.src = p;
      rec.tgt = intern_locked(br.tgt, tgt_mask);
      rec.pol = br.pol;
      for (auto [s, t] : br.keep) {
        int sr = rank_of(mask, s);
        int tr = rank_of(pos_[rec.tgt].aux, t);
        if (sr >= 0 && tr >= 0) rec.keep.emplace_back(uint16_t(sr), uint16_t(tr));
      }
      rec.meta_a = bm;
      add_move_locked(std::move(rec));
    }
  }

  mutable std::unordered_map<PosId, PosId> interned_;
};

// The part of a game reachable from a chosen position, re-rooted there.
class RootShiftGame final : public Game {
 public:
  RootShiftGame(GamePtr base, PosId new_root)
      : Game(Kind::RootShift, base->label() + "@" + base->pos_name(new_root), {base}) {
    if (!factors_[0]->queries_at(new_root).empty())
      fail(ErrorKind::RootHasQueries, "re-rooting at a position that still carries queries");
    intern_locked(new_root);
  }

 private:
  const GamePtr& base() const { return factors_[0]; }

  PosId intern_locked(PosId bp) const {
    auto it = interned_.find(bp);
    if (it != interned_.end()) return it->second;
    PosRec rec;
    rec.name = base()->pos_name(bp);
    rec.meta_a = bp;
    rec.queries = base()->queries_at(bp);
    PosId p = add_pos_locked(std::move(rec));
    interned_.emplace(bp, p);
    return p;
  }

  void expand_locked(PosId p) const override {
    PosId bp = PosId(pos_[p].meta_a);
    PosId old_root = base()->root();
    for (MoveId bm : base()->moves_from(bp)) {
      const auto& br = base()->move(bm);
      if (br.tgt == old_root) continue;
      MoveRec rec;
      rec.key = br.key;
      rec.src = p;
      rec.tgt = intern_locked(br.tgt);
      rec.pol = br.pol;
      rec.keep = br.keep;
      rec.meta_a = bm;
      add_move_locked(std::move(rec));
    }
  }

  mutable std::unordered_map<PosId, PosId> interned_;
};

// Lift: a fresh initial Player move (initiating no query) above the base game.
class LiftGame final : public Game {
 public:
  explicit LiftGame(GamePtr base) : Game(Kind::Lift, "^" + base->label(), {base}) {
    PosRec root;
    root.name = "lift";
    add_pos_locked(std::move(root));
  }

 private:
  const GamePtr& base() const { return factors_[0]; }

  PosId intern_locked(PosId bp) const {
    auto it = interned_.find(bp);
    if (it != interned_.end()) return it->second;
    PosRec rec;
    rec.name = base()->pos_name(bp);
    rec.meta_a = 1;
    rec.meta_b = bp;
    rec.queries = base()->queries_at(bp);
    PosId p = add_pos_locked(std::move(rec));
    interned_.emplace(bp, p);
    return p;
  }

  void expand_locked(PosId p) const override {
    if (p == 0) {
      MoveRec rec;
      rec.key = "^";
      rec.src = 0;
      rec.tgt = intern_locked(base()->root());
      rec.pol = kProponent;
      add_move_locked(std::move(rec));
      return;
    }
    PosId bp = PosId(pos_[p].meta_b);
    for (MoveId bm : base()->moves_from(bp)) {
      const auto& br = base()->move(bm);
      MoveRec rec;
      rec.key = br.key;
      rec.src = p;
      rec.tgt = intern_locked(br.tgt);
      rec.pol = br.pol;
      rec.keep = br.keep;
      rec.meta_a = 1;
      rec.meta_b = bm;
      add_move_locked(std::move(rec));
    }
  }

  mutable std::unordered_map<PosId, PosId> interned_;
};

// ---------------------------------------------------------------------------
// hash-consed factories

namespace detail {

inline GamePtr consed(const std::string& key, const std::function<GamePtr()>& make) {
  static std::mutex mu;
  static std::unordered_map<std::string, GamePtr> reg;
  std::lock_guard lk(mu);
  auto it = reg.find(key);
  if (it != reg.end()) return it->second;
  GamePtr g = make();
  reg.emplace(key, g);
  return g;
}

}  // namespace detail

// The one-position game, neutral element of the tensor.
inline GamePtr unit_game() {
  static GamePtr one = build_game({"s"}, {}, "s", false, "1");
  return one;
}

inline GamePtr tensor(GamePtr a, GamePtr b);

inline GamePtr dual(GamePtr g) {
  if (g == unit_game()) return g;
  if (g->kind() == Game::Kind::Dual) return g->factor(0);
  if (g->kind() == Game::Kind::Tensor) return tensor(dual(g->factor(0)), dual(g->factor(1)));
  return detail::consed("dual:" + std::to_string(g->uid()),
                        [&] { return std::make_shared<DualGame>(g); });
}

inline GamePtr tensor(GamePtr a, GamePtr b) {
  return detail::consed("tensor:" + std::to_string(a->uid()) + "," + std::to_string(b->uid()),
                        [&] { return std::make_shared<TensorGame>(a, b); });
}

inline GamePtr bang(GamePtr g) {
  if (g == unit_game()) return g;
  return detail::consed("bang:" + std::to_string(g->uid()),
                        [&] { return std::make_shared<BangGame>(g); });
}

inline GamePtr neg(std::vector<GamePtr> comps) {
  std::string key = "neg:";
  for (const auto& c : comps) key += std::to_string(c->uid()) + ",";
  return detail::consed(key, [&] { return std::make_shared<NegGame>(std::move(comps)); });
}

inline GamePtr lift_negation(GamePtr pointed) { return neg({std::move(pointed)}); }

inline GamePtr coalesce(GamePtr a, GamePtr b) {
  return detail::consed("coal:" + std::to_string(a->uid()) + "," + std::to_string(b->uid()),
                        [&] { return std::make_shared<CoalesceGame>(a, b); });
}

inline GamePtr affine_strip(GamePtr g) {
  MoveId init = g->initial_move();
  if (g->queries_at(g->move(init).tgt).empty()) return g;  // already affine
  return detail::consed("strip:" + std::to_string(g->uid()),
                        [&] { return std::make_shared<StripGame>(g); });
}

inline GamePtr root_shift(GamePtr g, PosId p) {
  return detail::consed("shift:" + std::to_string(g->uid()) + "@" + std::to_string(p),
                        [&] { return std::make_shared<RootShiftGame>(g, p); });
}

inline GamePtr lift(GamePtr g) {
  return detail::consed("lift:" + std::to_string(g->uid()),
                        [&] { return std::make_shared<LiftGame>(g); });
}

// The unit of the coalesced tensor: one Player move, no queries.
inline GamePtr pointed_unit() { return lift(unit_game()); }

// Negative residual of a pointed game after the initial move.
inline GamePtr residual_after_initial(const GamePtr& g) {
  MoveId init = g->initial_move();
  return root_shift(g, g->move(init).tgt);
}

// Exponential on pointed games: strip, re-root, replicate, lift.
inline GamePtr pointed_exponential(const GamePtr& g) {
  return lift(bang(residual_after_initial(affine_strip(g))));
}

inline bool is_pointed(const GamePtr& g) { return g->is_pointed(); }

// ---------------------------------------------------------------------------
// canonical isomorphisms as move-key bijections

struct GameIso {
  GamePtr from, to;
  std::function<std::string(const std::string&)> fwd, bwd;
};

namespace keyops {

inline bool strip_prefix(std::string& k, std::string_view pre) {
  if (k.size() >= pre.size() && std::string_view(k).substr(0, pre.size()) == pre) {
    k.erase(0, pre.size());
    return true;
  }
  return false;
}

[[noreturn]] inline void bad_key(const std::string& k, const std::string& where) {
  fail(ErrorKind::ShapeMismatch, "key '" + k + "' does not fit " + where);
}

}  // namespace keyops

inline GameIso identity_iso(GamePtr g) {
  auto id = [](const std::string& k) { return k; };
  return {g, g, id, id};
}

inline GameIso inverse(const GameIso& i) { return {i.to, i.from, i.bwd, i.fwd}; }

inline GameIso compose(const GameIso& i, const GameIso& j) {
  if (i.to != j.from) fail(ErrorKind::GamesNotIsomorphic, "iso composition endpoint mismatch");
  auto f1 = i.fwd, f2 = j.fwd, b1 = i.bwd, b2 = j.bwd;
  return {i.from, j.to, [f1, f2](const std::string& k) { return f2(f1(k)); },
          [b1, b2](const std::string& k) { return b1(b2(k)); }};
}

// 1 (x) A -> A
inline GameIso unitor_left(const GamePtr& a) {
  return {tensor(unit_game(), a), a,
          [](const std::string& k) {
            std::string s = k;
            if (!keyops::strip_prefix(s, "R.")) keyops::bad_key(k, "1*A");
            return s;
          },
          [](const std::string& k) { return "R." + k; }};
}

// A (x) 1 -> A
inline GameIso unitor_right(const GamePtr& a) {
  return {tensor(a, unit_game()), a,
          [](const std::string& k) {
            std::string s = k;
            if (!keyops::strip_prefix(s, "L.")) keyops::bad_key(k, "A*1");
            return s;
          },
          [](const std::string& k) { return "L." + k; }};
}

// (A (x) B) (x) C -> A (x) (B (x) C)
inline GameIso associator(const GamePtr& a, const GamePtr& b, const GamePtr& c) {
  auto fwd = [](const std::string& k) {
    std::string s = k;
    if (keyops::strip_prefix(s, "L.L.")) return "L." + s;
    if (keyops::strip_prefix(s, "L.R.")) return "R.L." + s;
    if (keyops::strip_prefix(s, "R.")) return "R.R." + s;
    keyops::bad_key(k, "(A*B)*C");
  };
  auto bwd = [](const std::string& k) {
    std::string s = k;
    if (keyops::strip_prefix(s, "L.")) return "L.L." + s;
    if (keyops::strip_prefix(s, "R.L.")) return "L.R." + s;
    if (keyops::strip_prefix(s, "R.R.")) return "R." + s;
    keyops::bad_key(k, "A*(B*C)");
  };
  return {tensor(tensor(a, b), c), tensor(a, tensor(b, c)), fwd, bwd};
}

// A (x) B -> B (x) A
inline GameIso symmetry(const GamePtr& a, const GamePtr& b) {
  auto swap = [](const std::string& k) {
    std::string s = k;
    if (keyops::strip_prefix(s, "L.")) return "R." + s;
    if (keyops::strip_prefix(s, "R.")) return "L." + s;
    keyops::bad_key(k, "A*B");
  };
  return {tensor(a, b), tensor(b, a), swap, swap};
}

// functorial lifts
inline GameIso tensor_iso(const GameIso& i, const GameIso& j) {
  auto fi = i.fwd, fj = j.fwd, bi = i.bwd, bj = j.bwd;
  auto fwd = [fi, fj](const std::string& k) {
    std::string s = k;
    if (keyops::strip_prefix(s, "L.")) return "L." + fi(s);
    if (keyops::strip_prefix(s, "R.")) return "R." + fj(s);
    keyops::bad_key(k, "tensor");
  };
  auto bwd = [bi, bj](const std::string& k) {
    std::string s = k;
    if (keyops::strip_prefix(s, "L.")) return "L." + bi(s);
    if (keyops::strip_prefix(s, "R.")) return "R." + bj(s);
    keyops::bad_key(k, "tensor");
  };
  return {tensor(i.from, j.from), tensor(i.to, j.to), fwd, bwd};
}

inline GameIso dual_iso(const GameIso& i) { return {dual(i.from), dual(i.to), i.fwd, i.bwd}; }

// I. (.) A -> A  (unit of the coalesced tensor)
inline GameIso coalesce_unitor_left(const GamePtr& a) {
  std::string init = a->init_key();
  return {coalesce(pointed_unit(), a), a,
          [init](const std::string& k) {
            std::string s = k;
            if (s == "*") return init;
            if (keyops::strip_prefix(s, "R.")) return s;
            keyops::bad_key(k, "I.A");
          },
          [init](const std::string& k) {
            if (k == init) return std::string("*");
            return "R." + k;
          }};
}

inline GameIso coalesce_unitor_right(const GamePtr& a) {
  std::string init = a->init_key();
  return {coalesce(a, pointed_unit()), a,
          [init](const std::string& k) {
            std::string s = k;
            if (s == "*") return init;
            if (keyops::strip_prefix(s, "L.")) return s;
            keyops::bad_key(k, "A.I");
          },
          [init](const std::string& k) {
            if (k == init) return std::string("*");
            return "L." + k;
          }};
}

// (A . B) . C -> A . (B . C)
inline GameIso coalesce_assoc(const GamePtr& a, const GamePtr& b, const GamePtr& c) {
  auto fwd = [](const std::string& k) {
    std::string s = k;
    if (s == "*") return s;
    if (keyops::strip_prefix(s, "L.L.")) return "L." + s;
    if (keyops::strip_prefix(s, "L.R.")) return "R.L." + s;
    if (keyops::strip_prefix(s, "R.")) return "R.R." + s;
    keyops::bad_key(k, "(A.B).C");
  };
  auto bwd = [](const std::string& k) {
    std::string s = k;
    if (s == "*") return s;
    if (keyops::strip_prefix(s, "L.")) return "L.L." + s;
    if (keyops::strip_prefix(s, "R.L.")) return "L.R." + s;
    if (keyops::strip_prefix(s, "R.R.")) return "R." + s;
    keyops::bad_key(k, "A.(B.C)");
  };
  return {coalesce(coalesce(a, b), c), coalesce(a, coalesce(b, c)), fwd, bwd};
}

inline GameIso coalesce_sym(const GamePtr& a, const GamePtr& b) {
  auto swap = [](const std::string& k) {
    std::string s = k;
    if (s == "*") return s;
    if (keyops::strip_prefix(s, "L.")) return "R." + s;
    if (keyops::strip_prefix(s, "R.")) return "L." + s;
    keyops::bad_key(k, "A.B");
  };
  return {coalesce(a, b), coalesce(b, a), swap, swap};
}

inline GameIso coalesce_iso(const GameIso& i, const GameIso& j) {
  auto fi = i.fwd, fj = j.fwd, bi = i.bwd, bj = j.bwd;
  auto fwd = [fi, fj](const std::string& k) {
    std::string s = k;
    if (s == "*") return s;
    if (keyops::strip_prefix(s, "L.")) return "L." + fi(s);
    if (keyops::strip_prefix(s, "R.")) return "R." + fj(s);
    keyops::bad_key(k, "coalesce");
  };
  auto bwd = [bi, bj](const std::string& k) {
    std::string s = k;
    if (s == "*") return s;
    if (keyops::strip_prefix(s, "L.")) return "L." + bi(s);
    if (keyops::strip_prefix(s, "R.")) return "R." + bj(s);
    keyops::bad_key(k, "coalesce");
  };
  return {coalesce(i.from, j.from), coalesce(i.to, j.to), fwd, bwd};
}

// neg applied to componentwise isos plus an index permutation (to[perm[i]] = iso of from[i])
inline GameIso neg_iso(const std::vector<GameIso>& comps, const std::vector<size_t>& perm) {
  std::vector<GamePtr> from, to(comps.size());
  for (size_t i = 0; i < comps.size(); ++i) {
    from.push_back(comps[i].from);
    to[perm[i]] = comps[i].to;
  }
  std::vector<size_t> inv(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  auto parse_comp = [](const std::string& k) -> std::pair<size_t, std::string> {
    if (k.empty() || k[0] != 'c') keyops::bad_key(k, "neg");
    size_t colon = k.find(':');
    if (colon == std::string::npos) keyops::bad_key(k, "neg");
    return {size_t(std::stoul(k.substr(1, colon - 1))), k.substr(colon + 1)};
  };
  auto fwd = [comps, perm, parse_comp](const std::string& k) {
    if (k == "~") return k;
    auto [i, rest] = parse_comp(k);
    return "c" + std::to_string(perm.at(i)) + ":" + comps.at(i).fwd(rest);
  };
  auto bwd = [comps, inv, parse_comp](const std::string& k) {
    if (k == "~") return k;
    auto [j, rest] = parse_comp(k);
    size_t i = inv.at(j);
    return "c" + std::to_string(i) + ":" + comps.at(i).bwd(rest);
  };
  return {neg(from), neg(to), fwd, bwd};
}

inline GameIso lift_iso(const GameIso& i) {
  auto fi = i.fwd, bi = i.bwd;
  return {lift(i.from), lift(i.to),
          [fi](const std::string& k) { return k == "^" ? k : fi(k); },
          [bi](const std::string& k) { return k == "^" ? k : bi(k); }};
}

}  // namespace mbg
