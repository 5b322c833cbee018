#pragma once

// Text formats: the S-expression game form (with optional brackets), the
// strategy response-table form, proof files, and the combinator expression
// language used to name constructed games and families on the command line.

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fam.hpp"
#include "logic.hpp"
#include "random.hpp"
#include "sexpr.hpp"
#include "strategy.hpp"

namespace mbg::io {

// ---------------------------------------------------------------------------
// game files

inline GamePtr parse_game(const sx::Node& n, const std::string& label = "game") {
  if (n.head() != "game") fail(ErrorKind::ParseError, "expected a (game ...) form");
  const sx::Node* rootf = n.field("root");
  const sx::Node* posf = n.field("positions");
  const sx::Node* movf = n.field("moves");
  if (!rootf || !posf || !movf)
    fail(ErrorKind::ParseError, "a game form needs (root ...), (positions ...), (moves ...)");
  std::vector<std::string> positions;
  for (size_t i = 1; i < posf->size(); ++i) positions.push_back(posf->at(i).sym());
  std::vector<MoveSpec> moves;
  for (size_t i = 1; i < movf->size(); ++i) {
    const auto& m = movf->at(i);
    if (!m.is_list() || m.size() != 4)
      fail(ErrorKind::ParseError, "moves are (name src tgt O|P), got " + m.dump());
    int pol;
    const std::string& p = m.at(3).sym();
    if (p == "O")
      pol = kOpponent;
    else if (p == "P")
      pol = kProponent;
    else
      fail(ErrorKind::ParseError, "polarity token must be O or P, got " + p);
    moves.push_back({m.at(0).sym(), m.at(1).sym(), m.at(2).sym(), pol});
  }
  std::vector<QuerySpec> queries;
  ResidualTable residuals;
  if (const sx::Node* br = n.field("brackets")) {
    if (const sx::Node* qs = br->field("queries")) {
      for (size_t i = 1; i < qs->size(); ++i) {
        const auto& entry = qs->at(i);
        std::string pos = entry.at(0).sym();
        for (size_t j = 1; j < entry.size(); ++j) {
          const auto& q = entry.at(j);
          int pol = q.at(1).sym() == "O" ? kOpponent : kProponent;
          queries.push_back({pos, q.at(0).sym(), pol});
        }
      }
    }
    if (const sx::Node* rs = br->field("residuals")) {
      for (size_t i = 1; i < rs->size(); ++i) {
        const auto& entry = rs->at(i);
        std::string mv = entry.at(0).sym();
        std::vector<ResidualDirective> ds;
        for (size_t j = 1; j < entry.size(); ++j) {
          const auto& dnode = entry.at(j);
          std::string h = dnode.head();
          if (h == "init")
            ds.push_back({ResidualDirective::Init, dnode.at(1).sym(), ""});
          else if (h == "comply")
            ds.push_back({ResidualDirective::Comply, dnode.at(1).sym(), ""});
          else if (h == "keep")
            ds.push_back({ResidualDirective::Keep, dnode.at(1).sym(), dnode.at(2).sym()});
          else
            fail(ErrorKind::ParseError, "residual directives are init/comply/keep");
        }
        residuals[mv] = std::move(ds);
      }
    }
  }
  std::string root = rootf->at(1).sym();
  bool strict = n.field("strict") != nullptr;
  return std::make_shared<AtomicGame>(label, positions, moves, root, queries, residuals, strict);
}

inline sx::Node game_to_sexpr(const GamePtr& g) {
  if (g->kind() != Game::Kind::Atomic)
    fail(ErrorKind::ShapeMismatch, "only explicit games have a text form");
  std::vector<sx::Node> top{sx::sym("game")};
  top.push_back(sx::list({sx::sym("root"), sx::sym(g->pos_name(g->root()))}));
  std::vector<sx::Node> ps{sx::sym("positions")};
  for (size_t i = 0; i < g->pos_count(); ++i) ps.push_back(sx::sym(g->pos_name(PosId(i))));
  top.push_back(sx::list(std::move(ps)));
  std::vector<sx::Node> ms{sx::sym("moves")};
  for (size_t i = 0; i < g->move_count(); ++i) {
    const auto& m = g->move(MoveId(i));
    ms.push_back(sx::list({sx::sym(m.key), sx::sym(g->pos_name(m.src)), sx::sym(g->pos_name(m.tgt)),
                           sx::sym(m.pol == kOpponent ? "O" : "P")}));
  }
  top.push_back(sx::list(std::move(ms)));
  // brackets, when any position carries queries
  bool any = false;
  for (size_t i = 0; i < g->pos_count(); ++i)
    if (!g->queries_at(PosId(i)).empty()) any = true;
  if (any) {
    std::vector<sx::Node> qs{sx::sym("queries")};
    for (size_t i = 0; i < g->pos_count(); ++i) {
      const auto& queries = g->queries_at(PosId(i));
      if (queries.empty()) continue;
      std::vector<sx::Node> entry{sx::sym(g->pos_name(PosId(i)))};
      for (const auto& q : queries)
        entry.push_back(sx::list({sx::sym(q.name), sx::sym(q.pol == kOpponent ? "O" : "P")}));
      qs.push_back(sx::list(std::move(entry)));
    }
    std::vector<sx::Node> rs{sx::sym("residuals")};
    std::map<std::string, std::vector<sx::Node>> per_move;
    for (size_t i = 0; i < g->move_count(); ++i) {
      const auto& m = g->move(MoveId(i));
      const auto& src_q = g->queries_at(m.src);
      const auto& tgt_q = g->queries_at(m.tgt);
      std::vector<char> kept_out(src_q.size(), 0), kept_in(tgt_q.size(), 0);
      auto& entry = per_move[m.key];
      auto add = [&](sx::Node d) {
        std::string flat = d.dump();
        for (const auto& e : entry)
          if (e.dump() == flat) return;
        entry.push_back(std::move(d));
      };
      for (auto [s, t] : m.keep) {
        kept_out[s] = 1;
        kept_in[t] = 1;
        add(sx::list({sx::sym("keep"), sx::sym(src_q[s].name), sx::sym(tgt_q[t].name)}));
      }
      for (size_t s = 0; s < src_q.size(); ++s)
        if (!kept_out[s]) add(sx::list({sx::sym("comply"), sx::sym(src_q[s].name)}));
      for (size_t t = 0; t < tgt_q.size(); ++t)
        if (!kept_in[t]) add(sx::list({sx::sym("init"), sx::sym(tgt_q[t].name)}));
    }
    for (auto& [name, ds] : per_move) {
      if (ds.empty()) continue;
      std::vector<sx::Node> entry{sx::sym(name)};
      for (auto& dd : ds) entry.push_back(std::move(dd));
      rs.push_back(sx::list(std::move(entry)));
    }
    top.push_back(sx::list({sx::sym("brackets"), sx::list(std::move(qs)), sx::list(std::move(rs))}));
  }
  return sx::list(std::move(top));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::IoError, "cannot write '" + path + "'");
  out << content;
}

// Loaded games are cached per canonical path so repeated references share one
// instance (composition relies on that).
inline GamePtr load_game(const std::string& path);

namespace detail {

inline std::map<std::string, GamePtr>& path_cache() {
  static std::map<std::string, GamePtr> m;
  return m;
}
inline std::map<uint64_t, std::string>& path_of_game() {
  static std::map<uint64_t, std::string> m;
  return m;
}

}  // namespace detail

inline GamePtr load_game(const std::string& path) {
  std::string canon = std::filesystem::weakly_canonical(path).string();
  auto& cache = detail::path_cache();
  auto it = cache.find(canon);
  if (it != cache.end()) return it->second;
  GamePtr g;
  try {
    g = parse_game(sx::parse(read_file(path)), std::filesystem::path(path).stem().string());
  } catch (const sx::ParseError& e) {
    fail(ErrorKind::ParseError, std::string(e.what()) + " in " + path);
  }
  cache[canon] = g;
  detail::path_of_game()[g->uid()] = canon;
  return g;
}

inline void save_game(const std::string& path, const GamePtr& g) {
  write_file(path, game_to_sexpr(g).dump() + "\n");
  std::string canon = std::filesystem::weakly_canonical(path).string();
  detail::path_cache()[canon] = g;
  detail::path_of_game()[g->uid()] = canon;
}

// ---------------------------------------------------------------------------
// combinator expressions: one | iunit | <path> | dual(e) | tensor(e,e) |
// bang(e) | neg(e,...) | affine(e) | coalesce(e,e) | lift(e) | pexp(e)
// and family level: fam[e,...] | zero | oplus(F,F) | otimes(F,F) | neg(F) |
// affine(F) | bang(F)

namespace detail {

struct ExprReader {
  std::string_view src;
  size_t pos = 0;
  std::string base_dir;

  void ws() {
    while (pos < src.size() && isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool eat(char c) {
    ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string token() {
    ws();
    size_t start = pos;
    while (pos < src.size() && !strchr("()[],", src[pos]) &&
           !isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
    if (start == pos) fail(ErrorKind::ParseError, "expected a name in expression");
    return std::string(src.substr(start, pos - start));
  }

  GamePtr game() {
    std::string t = token();
    if (t == "one") return unit_game();
    if (t == "iunit") return pointed_unit();
    if (eat('(')) {
      std::vector<GamePtr> args{game()};
      while (eat(',')) args.push_back(game());
      if (!eat(')')) fail(ErrorKind::ParseError, "expected ')' in expression");
      if (t == "dual" && args.size() == 1) return dual(args[0]);
      if (t == "tensor" && args.size() == 2) return tensor(args[0], args[1]);
      if (t == "bang" && args.size() == 1) return bang(args[0]);
      if (t == "neg") return neg(args);
      if (t == "affine" && args.size() == 1) return affine_strip(args[0]);
      if (t == "coalesce" && args.size() == 2) return coalesce(args[0], args[1]);
      if (t == "lift" && args.size() == 1) return lift(args[0]);
      if (t == "pexp" && args.size() == 1) return pointed_exponential(args[0]);
      fail(ErrorKind::ParseError, "unknown game combinator '" + t + "'");
    }
    // a file path
    std::string p = t;
    if (!base_dir.empty() && !std::filesystem::path(p).is_absolute())
      p = (std::filesystem::path(base_dir) / p).string();
    return load_game(p);
  }

  FamObject fam() {
    ws();
    if (pos < src.size() && src.compare(pos, 4, "fam[") == 0) {
      pos += 4;
      FamObject f;
      f.components.push_back(game());
      while (eat(',')) f.components.push_back(game());
      if (!eat(']')) fail(ErrorKind::ParseError, "expected ']' after fam literal");
      return f;
    }
    size_t save = pos;
    std::string t = token();
    if (t == "one") return fam_unit();
    if (t == "zero") return fam_zero();
    if (t == "bool") return fam_singleton(bool_object(config().discipline));
    if (eat('(')) {
      if (t == "oplus" || t == "otimes") {
        FamObject a = fam();
        if (!eat(',')) fail(ErrorKind::ParseError, "expected ',' in " + t);
        FamObject b = fam();
        if (!eat(')')) fail(ErrorKind::ParseError, "expected ')' in " + t);
        return t == "oplus" ? fam_coproduct(a, b) : fam_tensor(a, b);
      }
      if (t == "neg" || t == "affine" || t == "bang") {
        FamObject a = fam();
        if (!eat(')')) fail(ErrorKind::ParseError, "expected ')' in " + t);
        if (t == "neg") return fam_negation(a);
        if (t == "affine") return fam_modal_affine(a);
        return fam_modal_bang(a);
      }
      fail(ErrorKind::ParseError, "unknown family combinator '" + t + "'");
    }
    pos = save;
    return fam_singleton(game());
  }
};

}  // namespace detail

inline GamePtr parse_game_expr(const std::string& text, const std::string& base_dir = "") {
  detail::ExprReader r{text, 0, base_dir};
  GamePtr g = r.game();
  r.ws();
  if (r.pos != text.size()) fail(ErrorKind::ParseError, "trailing input in game expression");
  return g;
}

inline FamObject parse_fam_expr(const std::string& text, const std::string& base_dir = "") {
  detail::ExprReader r{text, 0, base_dir};
  FamObject f = r.fam();
  r.ws();
  if (r.pos != text.size()) fail(ErrorKind::ParseError, "trailing input in family expression");
  return f;
}

// Print a constructed game back as an expression (leaves must be loadable).
inline std::string game_expr_of(const GamePtr& g) {
  if (g == unit_game()) return "one";
  if (g == pointed_unit()) return "iunit";
  auto it = detail::path_of_game().find(g->uid());
  if (it != detail::path_of_game().end()) return it->second;
  switch (g->kind()) {
    case Game::Kind::Dual: return "dual(" + game_expr_of(g->factor(0)) + ")";
    case Game::Kind::Tensor:
      return "tensor(" + game_expr_of(g->factor(0)) + "," + game_expr_of(g->factor(1)) + ")";
    case Game::Kind::Bang: return "bang(" + game_expr_of(g->factor(0)) + ")";
    case Game::Kind::Coalesce:
      return "coalesce(" + game_expr_of(g->factor(0)) + "," + game_expr_of(g->factor(1)) + ")";
    case Game::Kind::Neg: {
      std::string s = "neg(";
      for (size_t i = 0; i < g->factor_count(); ++i)
        s += (i ? "," : "") + game_expr_of(g->factor(i));
      return s + ")";
    }
    case Game::Kind::Strip: return "affine(" + game_expr_of(g->factor(0)) + ")";
    case Game::Kind::Lift: return "lift(" + game_expr_of(g->factor(0)) + ")";
    default: break;
  }
  fail(ErrorKind::IoError, "game '" + g->label() + "' has no printable expression");
}

// ---------------------------------------------------------------------------
// strategy files: (strategy (game <expr>) (respond (play k...) k) ...)

inline Strategy parse_strategy(const sx::Node& n, const std::string& base_dir = "") {
  if (n.head() != "strategy") fail(ErrorKind::ParseError, "expected a (strategy ...) form");
  const sx::Node* gf = n.field("game");
  if (!gf) fail(ErrorKind::ParseError, "a strategy needs a (game ...) reference");
  std::string ref = gf->at(1).kind == sx::Node::Str ? gf->at(1).text : gf->at(1).sym();
  GamePtr g = parse_game_expr(ref, base_dir);
  std::vector<Play> plays{{}};
  for (const auto& item : n.items) {
    if (item.head() != "respond") continue;
    const auto& pl = item.at(1);
    if (pl.head() != "play") fail(ErrorKind::ParseError, "respond entries are (respond (play ...) k)");
    std::vector<std::string> keys;
    for (size_t i = 1; i < pl.size(); ++i) keys.push_back(pl.at(i).sym());
    keys.push_back(item.at(2).sym());
    plays.push_back(path_from_keys(*g, g->root(), keys).moves);
  }
  return make_strategy(g, plays, "loaded");
}

inline Strategy load_strategy(const std::string& path) {
  try {
    return parse_strategy(sx::parse(read_file(path)),
                          std::filesystem::path(path).parent_path().string());
  } catch (const sx::ParseError& e) {
    fail(ErrorKind::ParseError, std::string(e.what()) + " in " + path);
  }
}

inline sx::Node strategy_to_sexpr(const Strategy& s, size_t depth) {
  std::vector<sx::Node> top{sx::sym("strategy")};
  top.push_back(sx::list({sx::sym("game"), sx::str(game_expr_of(s.game()))}));
  const Game& g = *s.game();
  for (const auto& p : s.plays_upto(depth)) {
    if (p.empty()) continue;
    std::vector<sx::Node> pl{sx::sym("play")};
    for (size_t i = 0; i + 1 < p.size(); ++i) pl.push_back(sx::sym(g.move_key(p[i])));
    top.push_back(sx::list({sx::sym("respond"), sx::list(std::move(pl)), sx::sym(g.move_key(p.back()))}));
  }
  return sx::list(std::move(top));
}

// ---------------------------------------------------------------------------
// proof files: (proof (goal (sequent (ctx...) rhs?)) (derivation ...))

struct ProofFile {
  logic::Sequent goal;
  logic::ProofNode derivation;
};

inline ProofFile parse_proof_file(const sx::Node& n) {
  if (n.head() != "proof") fail(ErrorKind::ParseError, "expected a (proof ...) form");
  const sx::Node* gf = n.field("goal");
  const sx::Node* df = n.field("derivation");
  if (!gf || !df) fail(ErrorKind::ParseError, "a proof needs (goal ...) and (derivation ...)");
  return {logic::parse_sequent(gf->at(1)), logic::parse_proof(df->at(1))};
}

inline ProofFile load_proof(const std::string& path) {
  try {
    return parse_proof_file(sx::parse(read_file(path)));
  } catch (const sx::ParseError& e) {
    fail(ErrorKind::ParseError, std::string(e.what()) + " in " + path);
  }
}

}  // namespace mbg::io
