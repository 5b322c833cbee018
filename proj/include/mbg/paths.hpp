#pragma once

// Paths and plays, residual chains along them, the resource function kappa,
// the counting-based well-bracketing predicate, the three kappa axioms checked
// exhaustively over bounded paths, and the classical stack-discipline oracle.

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "combinators.hpp"
#include "game.hpp"

namespace mbg {

struct Path {
  PosId start = 0;
  std::vector<MoveId> moves;

  size_t size() const { return moves.size(); }
  bool empty() const { return moves.empty(); }
};

inline void validate_path(const Game& g, const Path& p) {
  PosId cur = p.start;
  for (MoveId m : p.moves) {
    const auto& mr = g.move(m);
    if (mr.src != cur)
      fail(ErrorKind::InvalidPath, "move '" + mr.key + "' does not start at " + g.pos_name(cur));
    cur = mr.tgt;
  }
}

inline PosId path_end(const Game& g, const Path& p) {
  return p.moves.empty() ? p.start : g.move(p.moves.back()).tgt;
}

// Resolve a path from a starting position by move keys.
inline Path path_from_keys(const Game& g, PosId start, const std::vector<std::string>& keys) {
  Path p{start, {}};
  PosId cur = start;
  for (const auto& k : keys) {
    auto m = g.find_move(cur, k);
    if (!m) fail(ErrorKind::InvalidPath, "no move '" + k + "' from " + g.pos_name(cur));
    p.moves.push_back(*m);
    cur = g.move(*m).tgt;
  }
  return p;
}

inline std::vector<std::string> path_keys(const Game& g, const Path& p) {
  std::vector<std::string> out;
  for (MoveId m : p.moves) out.push_back(g.move(m).key);
  return out;
}

inline bool is_alternating(const Game& g, const Path& p) {
  for (size_t i = 0; i + 1 < p.moves.size(); ++i)
    if (g.polarity(p.moves[i + 1]) != -g.polarity(p.moves[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// residual chains

// Tracks, for every query at the current position, the index of its unique
// ancestor at the walk's starting position, or -1 when the back-chain dies
// (the query was initiated along the walk).
struct ChainState {
  std::vector<int> origin;

  static ChainState at(const Game& g, PosId p) {
    ChainState st;
    st.origin.resize(g.queries_at(p).size());
    for (size_t i = 0; i < st.origin.size(); ++i) st.origin[i] = int(i);
    return st;
  }

  void step(const Game& g, MoveId m) {
    const auto& mr = g.move(m);
    std::vector<int> next(g.queries_at(mr.tgt).size(), -1);
    for (auto [s, t] : mr.keep) next[t] = origin[s];
    origin = std::move(next);
  }

  ResourceCount kappa(const Game& g, PosId end) const {
    ResourceCount k;
    const auto& qs = g.queries_at(end);
    for (size_t i = 0; i < origin.size(); ++i)
      if (origin[i] < 0) (qs[i].pol == kProponent ? k.plus : k.minus)++;
    return k;
  }

  uint64_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (int v : origin) {
      h ^= uint64_t(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline ResourceCount kappa(const Game& g, const Path& p) {
  validate_path(g, p);
  ChainState st = ChainState::at(g, p.start);
  for (MoveId m : p.moves) st.step(g, m);
  return st.kappa(g, path_end(g, p));
}

// r[s] (residuals of a start query) and [s]r (ancestors of an end query);
// each has at most one element.
inline std::pair<std::vector<std::string>, std::vector<std::string>> residuals_along(
    const Game& g, const Path& p, const std::string& query) {
  validate_path(g, p);
  PosId end = path_end(g, p);
  const auto& start_q = g.queries_at(p.start);
  const auto& end_q = g.queries_at(end);
  int si = -1, ei = -1;
  for (size_t i = 0; i < start_q.size(); ++i)
    if (start_q[i].name == query) si = int(i);
  for (size_t i = 0; i < end_q.size(); ++i)
    if (end_q[i].name == query) ei = int(i);
  if (si < 0 && ei < 0) fail(ErrorKind::UnknownQuery, "query '" + query + "' at neither end of the path");
  ChainState st = ChainState::at(g, p.start);
  for (MoveId m : p.moves) st.step(g, m);
  std::vector<std::string> fwd, bwd;
  if (si >= 0) {
    for (size_t i = 0; i < st.origin.size(); ++i)
      if (st.origin[i] == si) fwd.push_back(end_q[i].name);
  }
  if (ei >= 0 && st.origin[ei] >= 0) bwd.push_back(start_q[st.origin[ei]].name);
  return {fwd, bwd};
}

// ---------------------------------------------------------------------------
// play enumeration

// All root-started paths of length <= max_len, in DFS order (prefix-closed).
inline std::vector<Path> enumerate_plays(const Game& g, size_t max_len) {
  std::vector<Path> out;
  Path cur{g.root(), {}};
  std::vector<PosId> at{g.root()};
  auto rec = [&](auto&& self) -> void {
    out.push_back(cur);
    if (cur.moves.size() >= max_len) return;
    for (MoveId m : g.moves_from(at.back())) {
      cur.moves.push_back(m);
      at.push_back(g.move(m).tgt);
      self(self);
      cur.moves.pop_back();
      at.pop_back();
    }
  };
  rec(rec);
  return out;
}

// Alternating root-started paths of length <= max_len (either player may open).
inline std::vector<Path> enumerate_alternating_plays(const Game& g, size_t max_len) {
  std::vector<Path> out;
  Path cur{g.root(), {}};
  std::vector<PosId> at{g.root()};
  auto rec = [&](auto&& self, int last_pol) -> void {
    out.push_back(cur);
    if (cur.moves.size() >= max_len) return;
    for (MoveId m : g.moves_from(at.back())) {
      if (last_pol != 0 && g.polarity(m) != -last_pol) continue;
      cur.moves.push_back(m);
      at.push_back(g.move(m).tgt);
      self(self, g.polarity(m));
      cur.moves.pop_back();
      at.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

enum class TensorSide { Left, Right };

// Projection of a tensor-game path onto one component.
inline Path project_play(const Game& g, const Path& p, TensorSide side) {
  if (g.kind() != Game::Kind::Tensor)
    fail(ErrorKind::NotATensorGame, "projection needs a tensor game, got " + g.label());
  validate_path(g, p);
  const auto& start = g.pos(p.start);
  uint64_t want = side == TensorSide::Left ? 0 : 1;
  Path out;
  out.start = PosId(side == TensorSide::Left ? start.meta_a : start.meta_b);
  for (MoveId m : p.moves) {
    const auto& mr = g.move(m);
    if (mr.meta_a == want) out.moves.push_back(MoveId(mr.meta_b));
  }
  return out;
}

// ---------------------------------------------------------------------------
// well-bracketing

// Prop.-1 style predicate: on every polarized subpath m.t.n of a root-started
// play, a vanishing kappa on the mover's side forces the other side to vanish.
inline bool is_wb_play(const Game& g, const Path& p) {
  if (p.start != g.root()) fail(ErrorKind::InvalidPath, "well-bracketing applies to root-started plays");
  validate_path(g, p);
  std::vector<PosId> at{p.start};
  for (MoveId m : p.moves) at.push_back(g.move(m).tgt);
  size_t n = p.moves.size();
  for (size_t i = 0; i < n; ++i) {
    ChainState st = ChainState::at(g, at[i]);
    int pol_i = g.polarity(p.moves[i]);
    for (size_t j = i; j < n; ++j) {
      st.step(g, p.moves[j]);
      if (j == i) continue;  // a subpath m.t.n has at least two moves
      int pol_j = g.polarity(p.moves[j]);
      if (pol_i == pol_j) continue;
      ResourceCount k = st.kappa(g, at[j + 1]);
      if (pol_i == kOpponent && pol_j == kProponent && k.plus == 0 && k.minus != 0) return false;
      if (pol_i == kProponent && pol_j == kOpponent && k.minus == 0 && k.plus != 0) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// kappa axioms

struct AxiomViolation {
  std::string property;  // "P1-accuracy", "P2-suffix", "P3-subadditive", "coherence"
  std::vector<std::string> witness;  // move keys of the offending root path
  size_t sub_begin = 0, sub_split = 0, sub_end = 0;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  uint64_t paths_checked = 0;
  bool ok() const { return violations.empty(); }
};

// Exhaustively checks accuracy, suffix domination and sub-additivity over every
// decomposition of every root-started path up to `depth`, plus coherence of the
// residual relation across parallel path ranges.
inline AxiomReport check_axioms(const Game& g, size_t depth, size_t max_violations = 32) {
  AxiomReport rep;
  Path cur{g.root(), {}};
  std::vector<PosId> at{g.root()};
  std::vector<std::vector<ChainState>> chains;  // chains[n][i]: state of range [i, n)
  chains.push_back({});
  std::vector<std::vector<ResourceCount>> ktab;  // ktab[n][i] = kappa of range [i, n)
  ktab.push_back({});
  std::unordered_map<uint64_t, uint64_t> coherence;  // (start,end) -> relation hash

  auto record = [&](const std::string& prop, size_t b, size_t s, size_t e, const std::string& det) {
    if (rep.violations.size() >= max_violations) return;
    rep.violations.push_back({prop, path_keys(g, cur), b, s, e, det});
  };

  auto rec = [&](auto&& self) -> void {
    rep.paths_checked++;
    size_t n = cur.moves.size();
    if (n >= depth) return;
    for (MoveId m : g.moves_from(at.back())) {
      const auto& mr = g.move(m);
      cur.moves.push_back(m);
      at.push_back(mr.tgt);
      // extend every open range by m and start the fresh singleton range
      std::vector<ChainState> next = chains.back();
      for (auto& st : next) st.step(g, m);
      ChainState single = ChainState::at(g, mr.src);
      single.step(g, m);
      next.push_back(std::move(single));
      std::vector<ResourceCount> kn;
      kn.reserve(next.size());
      for (const auto& st : next) kn.push_back(st.kappa(g, mr.tgt));
      size_t nn = n + 1;
      // P1 accuracy: the final move against every prefix range [i, n)
      ResourceCount km = kn[n];
      if (mr.pol == kProponent && km.minus != 0)
        record("P1-accuracy", n, n, nn, "Proponent move '" + mr.key + "' has kappa-minus != 0");
      if (mr.pol == kOpponent && km.plus != 0)
        record("P1-accuracy", n, n, nn, "Opponent move '" + mr.key + "' has kappa-plus != 0");
      for (size_t i = 0; i < n; ++i) {
        ResourceCount ks = ktab[n][i];
        ResourceCount ksm = kn[i];
        if (mr.pol == kProponent && ksm.plus != ks.plus + km.plus)
          record("P1-accuracy", i, n, nn, "kappa-plus not additive at '" + mr.key + "'");
        if (mr.pol == kOpponent && ksm.minus != ks.minus + km.minus)
          record("P1-accuracy", i, n, nn, "kappa-minus not additive at '" + mr.key + "'");
      }
      // P2 suffix domination and P3 sub-additivity over ranges ending at nn
      for (size_t i = 0; i < nn; ++i) {
        for (size_t j = i + 1; j < nn; ++j) {
          if (!kn[j].leq(kn[i]))
            record("P2-suffix", i, j, nn,
                   "kappa" + kn[j].str() + " of suffix exceeds kappa" + kn[i].str());
          ResourceCount sum = ktab[j][i] + kn[j];
          if (!kn[i].leq(sum))
            record("P3-subadditive", i, j, nn,
                   "kappa" + kn[i].str() + " exceeds split sum " + sum.str());
        }
      }
      // coherence: parallel ranges must induce the same residual relation
      for (size_t i = 0; i < nn; ++i) {
        uint64_t key = (uint64_t(at[i]) << 32) | at[nn];
        uint64_t h = next[i].hash();
        auto [it, fresh] = coherence.try_emplace(key, h);
        if (!fresh && it->second != h)
          record("coherence", i, i, nn,
                 "parallel paths " + g.pos_name(at[i]) + " -> " + g.pos_name(at[nn]) +
                     " induce different residual relations");
      }
      chains.push_back(std::move(next));
      ktab.push_back(std::move(kn));
      self(self);
      chains.pop_back();
      ktab.pop_back();
      cur.moves.pop_back();
      at.pop_back();
    }
  };
  rec(rec);
  return rep;
}

// ---------------------------------------------------------------------------
// classical question/answer stack oracle

struct QAItem {
  bool question = true;
  int pol = kOpponent;
  int answers = -1;  // for answers: index of the answered question item
};

// Stack discipline: every answer must pop the pending (most recent open) question.
inline bool classic_wb_oracle(const std::vector<QAItem>& items) {
  std::vector<int> stack;
  for (size_t i = 0; i < items.size(); ++i) {
    const auto& it = items[i];
    if (it.question) {
      stack.push_back(int(i));
      continue;
    }
    if (it.answers < 0 || size_t(it.answers) >= i || !items[it.answers].question)
      fail(ErrorKind::MalformedQALabels, "answer at " + std::to_string(i) + " has no matching question");
    if (items[it.answers].pol == it.pol)
      fail(ErrorKind::MalformedQALabels, "answer at " + std::to_string(i) + " answers its own polarity");
    if (stack.empty() || stack.back() != it.answers) return false;
    stack.pop_back();
  }
  return true;
}

// Label a play of a single-query question/answer game: each move either
// initiates exactly one query (question) or complies with exactly one (answer).
inline std::vector<QAItem> qa_label_play(const Game& g, const Path& p) {
  if (p.start != g.root()) fail(ErrorKind::InvalidPath, "labelling applies to root-started plays");
  validate_path(g, p);
  std::vector<QAItem> out;
  std::vector<int> originator;  // per current query: item index that initiated it
  PosId cur = p.start;
  for (size_t i = 0; i < p.moves.size(); ++i) {
    const auto& mr = g.move(p.moves[i]);
    size_t nsrc = g.queries_at(mr.src).size();
    size_t ntgt = g.queries_at(mr.tgt).size();
    std::vector<char> kept_out(nsrc, 0);
    std::vector<int> next(ntgt, -1);
    for (auto [s, t] : mr.keep) {
      kept_out[s] = 1;
      next[t] = originator[s];
    }
    std::vector<int> complied, initiated;
    for (size_t s = 0; s < nsrc; ++s)
      if (!kept_out[s]) complied.push_back(int(s));
    for (size_t t = 0; t < ntgt; ++t)
      if (next[t] == -1) {
        initiated.push_back(int(t));
        next[t] = int(i);
      }
    if (initiated.size() == 1 && complied.empty()) {
      out.push_back({true, mr.pol, -1});
    } else if (complied.size() == 1 && initiated.empty()) {
      out.push_back({false, mr.pol, originator[complied[0]]});
    } else {
      fail(ErrorKind::MalformedQALabels,
           "move '" + mr.key + "' is not a single-query question or answer");
    }
    originator = std::move(next);
    cur = mr.tgt;
  }
  (void)cur;
  return out;
}

}  // namespace mbg
