#pragma once

// Conway games as rooted move graphs, extended with per-position query sets and
// per-move residual relations. Games are immutable once built; constructions over
// infinite games (such as the exponential) materialize positions on demand behind
// a lock, bounded by an expansion cap.
//
// Move keys are structural names, unique among the moves leaving one position;
// plays and text formats refer to moves by key relative to the current position.

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "core.hpp"

namespace mbg {

class Game;
using GamePtr = std::shared_ptr<const Game>;

class Game : public std::enable_shared_from_this<Game> {
 public:
  enum class Kind { Atomic, Dual, Tensor, Bang, Neg, Coalesce, Strip, RootShift, Lift };

  struct Query {
    std::string name;
    int pol = kOpponent;
  };

  struct PosRec {
    std::string name;
    std::vector<Query> queries;
    std::vector<MoveId> out;
    std::vector<uint32_t> aux;  // kind-specific payload (bang word, strip mask)
    uint64_t meta_a = 0, meta_b = 0;
    bool expanded = false;
  };

  struct MoveRec {
    std::string key;  // unique among moves from the same source position
    PosId src = 0, tgt = 0;
    int pol = kOpponent;
    std::vector<std::pair<uint16_t, uint16_t>> keep;  // src query idx -> tgt query idx
    uint64_t meta_a = 0, meta_b = 0;
  };

  virtual ~Game() = default;

  Kind kind() const { return kind_; }
  uint64_t uid() const { return uid_; }
  PosId root() const { return 0; }

  size_t factor_count() const { return factors_.size(); }
  const GamePtr& factor(size_t i) const { return factors_.at(i); }

  size_t pos_count() const {
    std::lock_guard lk(mu_);
    return pos_.size();
  }
  size_t move_count() const {
    std::lock_guard lk(mu_);
    return mov_.size();
  }

  const PosRec& pos(PosId p) const { return pos_.at(p); }
  const MoveRec& move(MoveId m) const { return mov_.at(m); }

  const std::string& pos_name(PosId p) const { return pos_.at(p).name; }
  const std::vector<Query>& queries_at(PosId p) const { return pos_.at(p).queries; }
  int polarity(MoveId m) const { return mov_.at(m).pol; }
  const std::string& move_key(MoveId m) const { return mov_.at(m).key; }

  // Outgoing moves, expanding the position on first demand.
  std::span<const MoveId> moves_from(PosId p) const {
    ensure_expanded(p);
    const auto& out = pos_.at(p).out;
    return {out.data(), out.size()};
  }

  std::optional<MoveId> find_move(PosId p, std::string_view key) const {
    for (MoveId m : moves_from(p))
      if (mov_[m].key == key) return m;
    return std::nullopt;
  }

  // Pointed games have exactly one root move, a Proponent one.
  bool is_pointed() const {
    auto out = moves_from(root());
    return out.size() == 1 && mov_[out[0]].pol == kProponent;
  }

  MoveId initial_move() const {
    if (!is_pointed()) fail(ErrorKind::NotPointed, "game " + label() + " has no unique initial Player move");
    return moves_from(root())[0];
  }

  std::string init_key() const { return mov_.at(initial_move()).key; }

  const std::string& label() const { return label_; }

 protected:
  Game(Kind k, std::string label, std::vector<GamePtr> factors)
      : kind_(k), label_(std::move(label)), factors_(std::move(factors)), uid_(next_uid()) {
    cap_ = config().expansion_cap;
  }

  // Fill the outgoing moves of p; runs with mu_ held.
  virtual void expand_locked(PosId p) const {}

  PosId add_pos_locked(PosRec rec) const {
    if (pos_.size() >= cap_)
      fail(ErrorKind::ExpansionBudgetExceeded,
           "game " + label_ + " exceeded " + std::to_string(cap_) + " positions");
    pos_.push_back(std::move(rec));
    return static_cast<PosId>(pos_.size() - 1);
  }

  MoveId add_move_locked(MoveRec rec) const {
    MoveId id = static_cast<MoveId>(mov_.size());
    pos_.at(rec.src).out.push_back(id);
    mov_.push_back(std::move(rec));
    return id;
  }

  void ensure_expanded(PosId p) const {
    std::lock_guard lk(mu_);
    auto& rec = pos_.at(p);
    if (rec.expanded) return;
    expand_locked(p);
    rec.expanded = true;
  }

  void mark_all_expanded() const {
    for (auto& p : pos_) p.expanded = true;
  }

  Kind kind_;
  std::string label_;
  std::vector<GamePtr> factors_;
  uint64_t uid_;
  uint32_t cap_ = 10000;
  mutable std::mutex mu_;
  mutable std::deque<PosRec> pos_;
  mutable std::deque<MoveRec> mov_;

 private:
  static uint64_t next_uid() {
    static std::atomic<uint64_t> ctr{1};
    return ctr.fetch_add(1);
  }
};

// ---------------------------------------------------------------------------
// Explicit (fully materialized) games.

struct MoveSpec {
  std::string name, src, tgt;
  int pol = kOpponent;
};

struct QuerySpec {
  std::string pos, name;
  int pol = kOpponent;
};

struct ResidualDirective {
  enum Tag { Init, Comply, Keep } tag = Keep;
  std::string q, q2;
};

using ResidualTable = std::map<std::string, std::vector<ResidualDirective>>;

class AtomicGame final : public Game {
 public:
  AtomicGame(std::string label, const std::vector<std::string>& positions,
             const std::vector<MoveSpec>& moves, const std::string& root,
             const std::vector<QuerySpec>& queries, const ResidualTable& residuals,
             bool strict_pairs, bool validate_polarities = true)
      : Game(Kind::Atomic, std::move(label), {}), validate_polarities_(validate_polarities) {
    build(positions, moves, root, queries, residuals, strict_pairs);
  }

 private:
  void build(const std::vector<std::string>& positions, const std::vector<MoveSpec>& moves,
             const std::string& root, const std::vector<QuerySpec>& queries,
             const ResidualTable& residuals, bool strict_pairs) {
    std::unordered_map<std::string, PosId> index;
    // root becomes position 0
    auto root_it = std::find(positions.begin(), positions.end(), root);
    if (root_it == positions.end()) fail(ErrorKind::UnknownRoot, "root position '" + root + "' not declared");
    std::vector<std::string> ordered;
    ordered.push_back(root);
    for (const auto& p : positions)
      if (p != root) ordered.push_back(p);
    if (ordered.size() != positions.size()) fail(ErrorKind::DuplicateId, "duplicate root declaration");
    for (const auto& p : ordered) {
      if (index.count(p)) fail(ErrorKind::DuplicateId, "position '" + p + "' declared twice");
      PosRec rec;
      rec.name = p;
      index[p] = add_pos_locked(std::move(rec));
    }
    // queries per position
    for (const auto& q : queries) {
      auto it = index.find(q.pos);
      if (it == index.end()) fail(ErrorKind::DanglingMove, "query '" + q.name + "' names unknown position '" + q.pos + "'");
      if (it->second == 0) fail(ErrorKind::RootHasQueries, "query '" + q.name + "' attached to the root");
      auto& qs = pos_[it->second].queries;
      for (const auto& other : qs)
        if (other.name == q.name) fail(ErrorKind::DuplicateId, "query '" + q.name + "' declared twice at '" + q.pos + "'");
      qs.push_back({q.name, q.pol});
    }
    // moves
    std::unordered_set<uint64_t> pair_seen;
    for (const auto& m : moves) {
      auto si = index.find(m.src);
      auto ti = index.find(m.tgt);
      if (si == index.end() || ti == index.end())
        fail(ErrorKind::DanglingMove, "move '" + m.name + "' references an absent position");
      if (m.pol != kOpponent && m.pol != kProponent)
        fail(ErrorKind::ParseError, "move '" + m.name + "' has invalid polarity");
      for (MoveId e : pos_[si->second].out)
        if (mov_[e].key == m.name)
          fail(ErrorKind::DuplicateId, "move '" + m.name + "' duplicated at position '" + m.src + "'");
      if (strict_pairs) {
        uint64_t k = (uint64_t(si->second) << 32) | ti->second;
        if (!pair_seen.insert(k).second)
          fail(ErrorKind::DuplicateId, "strict mode: parallel move between '" + m.src + "' and '" + m.tgt + "'");
      }
      MoveRec rec;
      rec.key = m.name;
      rec.src = si->second;
      rec.tgt = ti->second;
      rec.pol = m.pol;
      apply_residuals(rec, residuals);
      add_move_locked(std::move(rec));
    }
    check_reachability();
    mark_all_expanded();
  }

  void apply_residuals(MoveRec& rec, const ResidualTable& residuals) {
    const auto& src_q = pos_[rec.src].queries;
    const auto& tgt_q = pos_[rec.tgt].queries;
    auto src_idx = [&](const std::string& n) -> int {
      for (size_t i = 0; i < src_q.size(); ++i)
        if (src_q[i].name == n) return int(i);
      return -1;
    };
    auto tgt_idx = [&](const std::string& n) -> int {
      for (size_t i = 0; i < tgt_q.size(); ++i)
        if (tgt_q[i].name == n) return int(i);
      return -1;
    };
    auto it = residuals.find(rec.key);
    std::vector<std::pair<uint16_t, uint16_t>> keep;
    if (it != residuals.end()) {
      for (const auto& d : it->second) {
        switch (d.tag) {
          case ResidualDirective::Keep: {
            int s = src_idx(d.q);
            if (s < 0) continue;  // conditional on presence at the source
            int t = tgt_idx(d.q2);
            if (t < 0)
              fail(ErrorKind::UnknownQuery,
                   "keep " + d.q + "->" + d.q2 + " on '" + rec.key + "': target query absent");
            keep.emplace_back(uint16_t(s), uint16_t(t));
            break;
          }
          case ResidualDirective::Init: {
            int t = tgt_idx(d.q);
            if (t < 0)
              fail(ErrorKind::UnknownQuery, "init " + d.q + " on '" + rec.key + "': query absent at target");
            break;  // assertion only; validated below
          }
          case ResidualDirective::Comply: {
            if (src_idx(d.q) < 0) continue;  // conditional on presence
            break;
          }
        }
      }
    }
    // injectivity in both directions
    std::vector<int> out_of(src_q.size(), -1), in_of(tgt_q.size(), -1);
    for (auto [s, t] : keep) {
      if (out_of[s] != -1) fail(ErrorKind::ResidualNotInjective, "query '" + src_q[s].name + "' kept twice by '" + rec.key + "'");
      if (in_of[t] != -1) fail(ErrorKind::ResidualNotInjective, "query '" + tgt_q[t].name + "' has two ancestors across '" + rec.key + "'");
      out_of[s] = t;
      in_of[t] = s;
      if (src_q[s].pol != tgt_q[t].pol)
        fail(ErrorKind::ResidualChangesPolarity,
             "residual of '" + src_q[s].name + "' across '" + rec.key + "' changes polarity");
    }
    // moves initiate only their own polarity, comply only with the opposite
    if (validate_polarities_) {
      for (size_t t = 0; t < tgt_q.size(); ++t)
        if (in_of[t] == -1 && tgt_q[t].pol != rec.pol)
          fail(ErrorKind::WrongInitiationPolarity,
               "move '" + rec.key + "' initiates query '" + tgt_q[t].name + "' of the opposite polarity");
      for (size_t s = 0; s < src_q.size(); ++s)
        if (out_of[s] == -1 && src_q[s].pol == rec.pol)
          fail(ErrorKind::WrongCompliancePolarity,
               "move '" + rec.key + "' complies with query '" + src_q[s].name + "' of its own polarity");
    }
    // assertion directives, now that the relation is known
    if (it != residuals.end()) {
      for (const auto& d : it->second) {
        if (d.tag == ResidualDirective::Init) {
          int t = tgt_idx(d.q);
          if (t >= 0 && in_of[t] != -1)
            fail(ErrorKind::ParseError, "init " + d.q + " on '" + rec.key + "' contradicts a keep entry");
        } else if (d.tag == ResidualDirective::Comply) {
          int s = src_idx(d.q);
          if (s >= 0 && out_of[s] != -1)
            fail(ErrorKind::ParseError, "comply " + d.q + " on '" + rec.key + "' contradicts a keep entry");
        }
      }
    }
    rec.keep = std::move(keep);
  }

  bool validate_polarities_ = true;

  void check_reachability() {
    std::vector<bool> seen(pos_.size(), false);
    std::vector<PosId> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      PosId p = stack.back();
      stack.pop_back();
      for (MoveId m : pos_[p].out)
        if (!seen[mov_[m].tgt]) {
          seen[mov_[m].tgt] = true;
          stack.push_back(mov_[m].tgt);
        }
    }
    for (size_t i = 0; i < pos_.size(); ++i)
      if (!seen[i])
        fail(ErrorKind::UnreachablePosition, "position '" + pos_[i].name + "' unreachable from the root");
  }
};

// Validated constructor for explicit games without brackets.
inline GamePtr build_game(const std::vector<std::string>& positions,
                          const std::vector<MoveSpec>& moves, const std::string& root,
                          bool strict_pairs = false, const std::string& label = "game") {
  return std::make_shared<AtomicGame>(label, positions, moves, root, std::vector<QuerySpec>{},
                                      ResidualTable{}, strict_pairs);
}

// Attach queries and residual tables to an explicit game, re-validating everything.
inline GamePtr attach_brackets(const GamePtr& g, const std::vector<QuerySpec>& queries,
                               const ResidualTable& residuals, bool validate_polarities = true) {
  if (g->kind() != Game::Kind::Atomic)
    fail(ErrorKind::ShapeMismatch, "attach_brackets expects an explicit game");
  std::vector<std::string> positions;
  for (size_t i = 0; i < g->pos_count(); ++i) positions.push_back(g->pos_name(PosId(i)));
  std::vector<MoveSpec> moves;
  for (size_t i = 0; i < g->move_count(); ++i) {
    const auto& m = g->move(MoveId(i));
    moves.push_back({m.key, g->pos_name(m.src), g->pos_name(m.tgt), m.pol});
  }
  return std::make_shared<AtomicGame>(g->label(), positions, moves, g->pos_name(g->root()),
                                      queries, residuals, false, validate_polarities);
}

}  // namespace mbg
