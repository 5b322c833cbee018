#pragma once

// Tensorial-logic formulas, the bilateral sequent calculus, the proof checker,
// and the interpretation of checked proofs as family morphisms.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fam.hpp"
#include "sexpr.hpp"

namespace mbg::logic {

// ---------------------------------------------------------------------------
// formulas and sequents

struct Formula {
  enum Kind { One, Zero, Tensor, Plus, Neg, Affine, Bang, Bool, Atom } kind = One;
  std::vector<Formula> args;
  std::string atom;

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.kind == b.kind && a.args == b.args && a.atom == b.atom;
  }

  std::string str() const {
    switch (kind) {
      case One: return "1";
      case Zero: return "0";
      case Bool: return "bool";
      case Atom: return atom;
      case Tensor: return "(" + args[0].str() + " (x) " + args[1].str() + ")";
      case Plus: return "(" + args[0].str() + " (+) " + args[1].str() + ")";
      case Neg: return "neg " + args[0].str();
      case Affine: return "aff " + args[0].str();
      case Bang: return "! " + args[0].str();
    }
    return "?";
  }
};

inline Formula f_one() { return {Formula::One, {}, ""}; }
inline Formula f_zero() { return {Formula::Zero, {}, ""}; }
inline Formula f_bool() { return {Formula::Bool, {}, ""}; }
inline Formula f_atom(std::string n) { return {Formula::Atom, {}, std::move(n)}; }
inline Formula f_tensor(Formula a, Formula b) { return {Formula::Tensor, {std::move(a), std::move(b)}, ""}; }
inline Formula f_plus(Formula a, Formula b) { return {Formula::Plus, {std::move(a), std::move(b)}, ""}; }
inline Formula f_neg(Formula a) { return {Formula::Neg, {std::move(a)}, ""}; }
inline Formula f_affine(Formula a) { return {Formula::Affine, {std::move(a)}, ""}; }
inline Formula f_bang(Formula a) { return {Formula::Bang, {std::move(a)}, ""}; }

using Context = std::vector<Formula>;

struct Sequent {
  Context ctx;
  std::optional<Formula> rhs;

  std::string str() const {
    std::string s;
    for (size_t i = 0; i < ctx.size(); ++i) s += (i ? ", " : "") + ctx[i].str();
    s += " |-";
    if (rhs) s += " " + rhs->str();
    return s;
  }
};

inline Formula parse_formula(const sx::Node& n) {
  if (n.is_sym()) {
    if (n.text == "one" || n.text == "1") return f_one();
    if (n.text == "zero" || n.text == "0") return f_zero();
    if (n.text == "bool") return f_bool();
    return f_atom(n.text);
  }
  std::string h = n.head();
  if (h == "otimes") return f_tensor(parse_formula(n.at(1)), parse_formula(n.at(2)));
  if (h == "oplus") return f_plus(parse_formula(n.at(1)), parse_formula(n.at(2)));
  if (h == "neg") return f_neg(parse_formula(n.at(1)));
  if (h == "affine") return f_affine(parse_formula(n.at(1)));
  if (h == "bang") return f_bang(parse_formula(n.at(1)));
  fail(ErrorKind::ParseError, "unknown formula form " + n.dump());
}

inline Sequent parse_sequent(const sx::Node& n) {
  if (n.head() != "sequent") fail(ErrorKind::ParseError, "expected (sequent (ctx...) rhs?)");
  Sequent s;
  const auto& ctx = n.at(1);
  if (!ctx.is_list()) fail(ErrorKind::ParseError, "sequent context must be a list");
  for (const auto& f : ctx.items) s.ctx.push_back(parse_formula(f));
  if (n.size() > 2) s.rhs = parse_formula(n.at(2));
  return s;
}

// ---------------------------------------------------------------------------
// proof trees

struct ProofNode {
  std::string rule;
  std::optional<Formula> cut_formula;
  std::optional<size_t> split;
  std::optional<size_t> at;
  std::vector<size_t> perm;
  std::vector<ProofNode> premises;
};

inline ProofNode parse_proof(const sx::Node& n) {
  if (!n.is_list() || n.size() == 0 || !n.items[0].is_sym())
    fail(ErrorKind::ParseError, "expected a (rule ...) form, got " + n.dump());
  ProofNode p;
  p.rule = n.items[0].text;
  for (size_t i = 1; i < n.size(); ++i) {
    const auto& a = n.items[i];
    std::string h = a.head();
    if (h == "formula") {
      p.cut_formula = parse_formula(a.at(1));
    } else if (h == "split") {
      p.split = std::stoul(a.at(1).sym());
    } else if (h == "at") {
      p.at = std::stoul(a.at(1).sym());
    } else if (h == "perm") {
      for (size_t j = 1; j < a.size(); ++j) p.perm.push_back(std::stoul(a.at(j).sym()));
    } else {
      p.premises.push_back(parse_proof(a));
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// the checker

struct Checked {
  Sequent seq;
  const ProofNode* node = nullptr;
  size_t principal = 0;  // context position the rule acted on, when applicable
  std::vector<Checked> premises;
};

namespace detail {

[[noreturn]] inline void mismatch(const std::string& rule, const Sequent& seq, const std::string& why) {
  fail(ErrorKind::RuleMismatch, rule + " does not apply to '" + seq.str() + "': " + why);
}

// the principal position: explicit (at k), else the leftmost match
inline size_t principal(const ProofNode& n, const Sequent& seq,
                        const std::function<bool(const Formula&)>& match, const std::string& what) {
  if (n.at) {
    if (*n.at >= seq.ctx.size() || !match(seq.ctx[*n.at]))
      mismatch(n.rule, seq, "no " + what + " at position " + std::to_string(*n.at));
    return *n.at;
  }
  for (size_t i = 0; i < seq.ctx.size(); ++i)
    if (match(seq.ctx[i])) return i;
  mismatch(n.rule, seq, "no " + what + " in the context");
}

}  // namespace detail

inline Checked check_proof(const Sequent& goal, const ProofNode& n) {
  using detail::mismatch;
  Checked out{goal, &n, 0, {}};
  auto expect_premises = [&](size_t k) {
    if (n.premises.size() != k)
      mismatch(n.rule, goal,
               "expected " + std::to_string(k) + " premises, got " + std::to_string(n.premises.size()));
  };
  auto recurse = [&](const Sequent& s, size_t i) {
    out.premises.push_back(check_proof(s, n.premises[i]));
  };

  if (n.rule == "axiom") {
    expect_premises(0);
    if (!goal.rhs || goal.ctx.size() != 1 || !(goal.ctx[0] == *goal.rhs))
      mismatch(n.rule, goal, "axiom needs the shape A |- A");
  } else if (n.rule == "unit-right") {
    expect_premises(0);
    if (!goal.ctx.empty() || !goal.rhs || goal.rhs->kind != Formula::One)
      mismatch(n.rule, goal, "unit-right proves exactly |- 1");
  } else if (n.rule == "otimes-right") {
    expect_premises(2);
    if (!goal.rhs || goal.rhs->kind != Formula::Tensor)
      mismatch(n.rule, goal, "conclusion must be a tensor");
    if (!n.split || *n.split > goal.ctx.size())
      fail(ErrorKind::ContextSplitError, "otimes-right needs (split k) within the context");
    Context g(goal.ctx.begin(), goal.ctx.begin() + *n.split);
    Context d(goal.ctx.begin() + *n.split, goal.ctx.end());
    recurse({g, goal.rhs->args[0]}, 0);
    recurse({d, goal.rhs->args[1]}, 1);
  } else if (n.rule == "otimes-left") {
    expect_premises(1);
    size_t k = detail::principal(n, goal, [](const Formula& f) { return f.kind == Formula::Tensor; },
                                 "tensor hypothesis");
    out.principal = k;
    Sequent s = goal;
    Formula ab = s.ctx[k];
    s.ctx[k] = ab.args[0];
    s.ctx.insert(s.ctx.begin() + k + 1, ab.args[1]);
    recurse(s, 0);
  } else if (n.rule == "unit-left") {
    expect_premises(1);
    size_t k = detail::principal(n, goal, [](const Formula& f) { return f.kind == Formula::One; },
                                 "unit hypothesis");
    out.principal = k;
    Sequent s = goal;
    s.ctx.erase(s.ctx.begin() + k);
    recurse(s, 0);
  } else if (n.rule == "neg-right") {
    expect_premises(1);
    if (!goal.rhs || goal.rhs->kind != Formula::Neg)
      mismatch(n.rule, goal, "conclusion must be a negation");
    Sequent s{goal.ctx, std::nullopt};
    s.ctx.push_back(goal.rhs->args[0]);
    recurse(s, 0);
  } else if (n.rule == "neg-left") {
    expect_premises(1);
    if (goal.rhs) mismatch(n.rule, goal, "the conclusion of neg-left is conclusion-free");
    size_t k = detail::principal(n, goal, [](const Formula& f) { return f.kind == Formula::Neg; },
                                 "negated hypothesis");
    out.principal = k;
    Sequent s{goal.ctx, goal.ctx[k].args[0]};
    s.ctx.erase(s.ctx.begin() + k);
    recurse(s, 0);
  } else if (n.rule == "cut") {
    expect_premises(2);
    if (!n.cut_formula) mismatch(n.rule, goal, "cut needs an explicit (formula A)");
    if (!n.split || *n.split > goal.ctx.size())
      fail(ErrorKind::ContextSplitError, "cut needs (split k) within the context");
    Context g(goal.ctx.begin(), goal.ctx.begin() + *n.split);
    Context d(goal.ctx.begin() + *n.split, goal.ctx.end());
    recurse({g, *n.cut_formula}, 0);
    Context ad{*n.cut_formula};
    ad.insert(ad.end(), d.begin(), d.end());
    recurse({ad, goal.rhs}, 1);
  } else if (n.rule == "oplus-right-1" || n.rule == "oplus-right-2") {
    expect_premises(1);
    if (!goal.rhs || goal.rhs->kind != Formula::Plus)
      mismatch(n.rule, goal, "conclusion must be a sum");
    recurse({goal.ctx, goal.rhs->args[n.rule.back() == '1' ? 0 : 1]}, 0);
  } else if (n.rule == "oplus-left") {
    expect_premises(2);
    if (!goal.rhs) mismatch(n.rule, goal, "oplus-left needs a conclusion formula");
    size_t k = detail::principal(n, goal, [](const Formula& f) { return f.kind == Formula::Plus; },
                                 "sum hypothesis");
    out.principal = k;
    Sequent sa = goal, sb = goal;
    sa.ctx[k] = goal.ctx[k].args[0];
    sb.ctx[k] = goal.ctx[k].args[1];
    recurse(sa, 0);
    recurse(sb, 1);
  } else if (n.rule == "zero-left") {
    expect_premises(0);
    if (!goal.rhs) mismatch(n.rule, goal, "zero-left needs a conclusion formula");
    detail::principal(n, goal, [](const Formula& f) { return f.kind == Formula::Zero; },
                      "zero hypothesis");
  } else if (n.rule == "strengthening") {
    expect_premises(1);
    if (!goal.rhs || (goal.rhs->kind != Formula::Bang && goal.rhs->kind != Formula::Affine))
      mismatch(n.rule, goal, "conclusion must carry a resource modality");
    auto want = goal.rhs->kind;
    for (const auto& f : goal.ctx)
      if (f.kind != want)
        mismatch(n.rule, goal, "every hypothesis must carry the same modality as the conclusion");
    recurse({goal.ctx, goal.rhs->args[0]}, 0);
  } else if (n.rule == "dereliction") {
    expect_premises(1);
    size_t k = detail::principal(
        n, goal,
        [](const Formula& f) { return f.kind == Formula::Bang || f.kind == Formula::Affine; },
        "modal hypothesis");
    out.principal = k;
    Sequent s = goal;
    s.ctx[k] = goal.ctx[k].args[0];
    recurse(s, 0);
  } else if (n.rule == "weakening") {
    expect_premises(1);
    size_t k = detail::principal(
        n, goal,
        [](const Formula& f) { return f.kind == Formula::Bang || f.kind == Formula::Affine; },
        "modal hypothesis");
    out.principal = k;
    Sequent s = goal;
    s.ctx.erase(s.ctx.begin() + k);
    recurse(s, 0);
  } else if (n.rule == "contraction") {
    expect_premises(1);
    size_t k;
    if (n.at) {
      k = *n.at;
      if (k >= goal.ctx.size()) mismatch(n.rule, goal, "position out of range");
    } else {
      k = goal.ctx.size();
      for (size_t i = 0; i < goal.ctx.size(); ++i)
        if (goal.ctx[i].kind == Formula::Bang) {
          k = i;
          break;
        }
      if (k == goal.ctx.size() && !goal.ctx.empty()) k = 0;
      if (goal.ctx.empty()) mismatch(n.rule, goal, "empty context");
    }
    if (goal.ctx[k].kind != Formula::Bang)
      fail(ErrorKind::ContractionOnNonBang,
           "contraction requires an exponential hypothesis, got " + goal.ctx[k].str());
    out.principal = k;
    Sequent s = goal;
    s.ctx.insert(s.ctx.begin() + k, goal.ctx[k]);
    recurse(s, 0);
  } else if (n.rule == "permute") {
    expect_premises(1);
    if (n.perm.size() != goal.ctx.size())
      mismatch(n.rule, goal, "permutation arity differs from the context");
    std::vector<char> seen(goal.ctx.size(), 0);
    Sequent s{{}, goal.rhs};
    for (size_t i : n.perm) {
      if (i >= goal.ctx.size() || seen[i]) mismatch(n.rule, goal, "not a permutation");
      seen[i] = 1;
      s.ctx.push_back(goal.ctx[i]);
    }
    recurse(s, 0);
  } else {
    fail(ErrorKind::RuleMismatch, "no such rule '" + n.rule + "'");
  }
  return out;
}

// ---------------------------------------------------------------------------
// formula interpretation

using AtomMap = std::map<std::string, GamePtr>;

inline FamObject interpret_formula(const Formula& f, Discipline d, const AtomMap& atoms = {}) {
  switch (f.kind) {
    case Formula::One: return fam_unit();
    case Formula::Zero: return fam_zero();
    case Formula::Bool: return fam_singleton(bool_object(d));
    case Formula::Atom: {
      auto it = atoms.find(f.atom);
      if (it == atoms.end()) fail(ErrorKind::UnboundAtom, "atom '" + f.atom + "' is not bound");
      return fam_singleton(it->second);
    }
    case Formula::Tensor:
      return fam_tensor(interpret_formula(f.args[0], d, atoms), interpret_formula(f.args[1], d, atoms));
    case Formula::Plus:
      return fam_coproduct(interpret_formula(f.args[0], d, atoms),
                           interpret_formula(f.args[1], d, atoms));
    case Formula::Neg: return fam_negation(interpret_formula(f.args[0], d, atoms));
    case Formula::Affine: return fam_modal_affine(interpret_formula(f.args[0], d, atoms));
    case Formula::Bang: return fam_modal_bang(interpret_formula(f.args[0], d, atoms));
  }
  fail(ErrorKind::ParseError, "bad formula");
}

// ---------------------------------------------------------------------------
// context plumbing for the interpretation

namespace detail {

inline FamObject fold_objs(const std::vector<FamObject>& es) {
  if (es.empty()) return fam_unit();
  FamObject acc = es[0];
  for (size_t i = 1; i < es.size(); ++i) acc = fam_tensor(acc, es[i]);
  return acc;
}

inline std::vector<std::string> fold_prefixes(size_t n) {
  std::vector<std::string> out(n);
  for (size_t j = 0; j < n; ++j) {
    std::string p;
    for (size_t l = 0; l + 1 + j < n; ++l) p += "L.";
    if (j > 0) p += "R.";
    out[j] = p;
  }
  return out;
}

inline std::pair<size_t, std::string> split_fold_key(const std::vector<std::string>& prefixes,
                                                     const std::string& k) {
  size_t best = prefixes.size();
  size_t best_len = 0;
  for (size_t j = 0; j < prefixes.size(); ++j) {
    const auto& p = prefixes[j];
    if (k.size() >= p.size() && k.compare(0, p.size(), p) == 0 &&
        (p.size() > best_len || best == prefixes.size())) {
      best = j;
      best_len = p.size();
    }
  }
  if (best == prefixes.size()) fail(ErrorKind::ShapeMismatch, "key '" + k + "' fits no fold entry");
  return {best, k.substr(best_len)};
}

struct Dims {
  std::vector<size_t> d;
  size_t total() const {
    size_t t = 1;
    for (size_t x : d) t *= x;
    return t;
  }
  std::vector<size_t> unflat(size_t x) const {
    std::vector<size_t> ix(d.size());
    for (size_t i = d.size(); i-- > 0;) {
      ix[i] = x % d[i];
      x /= d[i];
    }
    return ix;
  }
  size_t flat(const std::vector<size_t>& ix) const {
    size_t x = 0;
    for (size_t i = 0; i < d.size(); ++i) x = x * d[i] + ix[i];
    return x;
  }
};

inline Dims dims_of(const std::vector<FamObject>& es) {
  Dims dd;
  for (const auto& e : es) dd.d.push_back(e.size());
  return dd;
}

// the component game of a fold at a multi-index
inline GamePtr fold_component(const std::vector<FamObject>& es, const std::vector<size_t>& ix) {
  if (es.empty()) return pointed_unit();
  GamePtr acc = es[0].at(ix[0]);
  for (size_t i = 1; i < es.size(); ++i) acc = coalesce(acc, es[i].at(ix[i]));
  return acc;
}

// a context-fold renaming, kept with both directions
struct CtxIso {
  FamMorphism fwd, bwd;
};

// per-component key-bijection morphisms between two context folds
inline CtxIso fold_keymap(
    const std::vector<FamObject>& from, const std::vector<FamObject>& to,
    const std::function<std::vector<size_t>(const std::vector<size_t>&)>& index_map,
    const std::function<std::pair<size_t, std::string>(size_t, const std::string&)>& entry_fwd,
    const std::function<std::pair<size_t, std::string>(size_t, const std::string&)>& entry_bwd) {
  FamObject F = fold_objs(from), T = fold_objs(to);
  Dims fd = dims_of(from), td = dims_of(to);
  auto fpre = fold_prefixes(from.size());
  auto tpre = fold_prefixes(to.size());
  CtxIso out{{F, T, std::vector<size_t>(F.size()), std::vector<Strategy>(F.size())},
             {T, F, std::vector<size_t>(T.size()), std::vector<Strategy>(T.size())}};
  for (size_t x = 0; x < F.size(); ++x) {
    auto ix = fd.unflat(x);
    auto tix = index_map(ix);
    size_t y = td.flat(tix);
    GamePtr fg = F.at(x);
    GamePtr tg = T.at(y);
    std::string fi = fg->init_key(), ti = tg->init_key();
    auto fwd = [fi, ti, fpre, tpre, entry_fwd](const std::string& k) {
      if (k == fi) return ti;
      auto [j, rest] = split_fold_key(fpre, k);
      auto [j2, rest2] = entry_fwd(j, rest);
      return tpre.at(j2) + rest2;
    };
    auto bwd = [fi, ti, tpre, fpre, entry_bwd](const std::string& k) {
      if (k == ti) return fi;
      auto [j, rest] = split_fold_key(tpre, k);
      auto [j2, rest2] = entry_bwd(j, rest);
      return fpre.at(j2) + rest2;
    };
    out.fwd.reindex[x] = y;
    out.fwd.components[x] = iso_strategy(GameIso{fg, tg, fwd, bwd}, "ctx-iso");
    out.bwd.reindex[y] = x;
    out.bwd.components[y] = iso_strategy(GameIso{tg, fg, bwd, fwd}, "ctx-iso");
  }
  return out;
}

// D(entries) -> D(entries[perm[0]], entries[perm[1]], ...)
inline CtxIso reorder_iso(const std::vector<FamObject>& es, const std::vector<size_t>& perm) {
  std::vector<FamObject> to;
  std::vector<size_t> inv(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) {
    to.push_back(es[perm[i]]);
    inv[perm[i]] = i;
  }
  return fold_keymap(
      es, to,
      [perm](const std::vector<size_t>& ix) {
        std::vector<size_t> out(ix.size());
        for (size_t i = 0; i < perm.size(); ++i) out[i] = ix[perm[i]];
        return out;
      },
      [inv](size_t j, const std::string& rest) { return std::make_pair(inv[j], rest); },
      [perm](size_t j, const std::string& rest) { return std::make_pair(perm[j], rest); });
}

// D(all) -> D(first k) (x) D(rest), as a per-component renaming
inline CtxIso split_iso(const std::vector<FamObject>& es, size_t k) {
  std::vector<FamObject> left(es.begin(), es.begin() + k);
  std::vector<FamObject> right(es.begin() + k, es.end());
  FamObject F = fold_objs(es);
  FamObject T = fam_tensor(fold_objs(left), fold_objs(right));
  Dims fd = dims_of(es);
  auto fpre = fold_prefixes(es.size());
  auto lpre = fold_prefixes(left.size());
  auto rpre = fold_prefixes(right.size());
  CtxIso out{{F, T, std::vector<size_t>(F.size()), std::vector<Strategy>(F.size())},
             {T, F, std::vector<size_t>(T.size()), std::vector<Strategy>(T.size())}};
  for (size_t x = 0; x < F.size(); ++x) {
    // row-major flat indices agree on both sides
    size_t y = x;
    GamePtr fg = F.at(x);
    GamePtr tg = T.at(y);
    std::string fi = fg->init_key(), ti = tg->init_key();
    auto fwd = [fi, ti, fpre, lpre, rpre, k](const std::string& kk) {
      if (kk == fi) return ti;
      auto [j, rest] = split_fold_key(fpre, kk);
      if (j < k) return "L." + lpre.at(j) + rest;
      return "R." + rpre.at(j - k) + rest;
    };
    auto bwd = [fi, ti, fpre, lpre, rpre, k](const std::string& kk) {
      if (kk == ti) return fi;
      std::string s = kk;
      if (keyops::strip_prefix(s, "L.")) {
        auto [j, rest] = split_fold_key(lpre, s);
        return fpre.at(j) + rest;
      }
      keyops::strip_prefix(s = kk, "R.");
      auto [j, rest] = split_fold_key(rpre, s);
      return fpre.at(j + k) + rest;
    };
    out.fwd.reindex[x] = y;
    out.fwd.components[x] = iso_strategy(GameIso{fg, tg, fwd, bwd}, "split-iso");
    out.bwd.reindex[y] = x;
    out.bwd.components[y] = iso_strategy(GameIso{tg, fg, bwd, fwd}, "split-iso");
  }
  return out;
}

// D(..., X (x) Y as one entry at k, ...) -> D(..., X, Y, ...)
inline CtxIso merge_pair_iso(const std::vector<FamObject>& from, size_t k, const FamObject& x,
                             const FamObject& y) {
  std::vector<FamObject> to(from.begin(), from.begin() + k);
  to.push_back(x);
  to.push_back(y);
  to.insert(to.end(), from.begin() + k + 1, from.end());
  size_t ny = y.size();
  return fold_keymap(
      from, to,
      [k, ny](const std::vector<size_t>& ix) {
        std::vector<size_t> out;
        for (size_t i = 0; i < ix.size(); ++i) {
          if (i == k) {
            out.push_back(ix[i] / ny);
            out.push_back(ix[i] % ny);
          } else {
            out.push_back(ix[i]);
          }
        }
        return out;
      },
      [k](size_t j, const std::string& rest) {
        if (j < k) return std::make_pair(j, rest);
        if (j > k) return std::make_pair(j + 1, rest);
        std::string s = rest;
        if (keyops::strip_prefix(s, "L.")) return std::make_pair(k, s);
        keyops::strip_prefix(s = rest, "R.");
        return std::make_pair(k + 1, s);
      },
      [k](size_t j, const std::string& rest) {
        if (j < k) return std::make_pair(j, rest);
        if (j > k + 1) return std::make_pair(j - 1, rest);
        if (j == k) return std::make_pair(k, "L." + rest);
        return std::make_pair(k, "R." + rest);
      });
}

// D(..., {I.} at k, ...) -> D(without k)
inline CtxIso drop_unit_iso(const std::vector<FamObject>& from, size_t k) {
  std::vector<FamObject> to = from;
  to.erase(to.begin() + k);
  return fold_keymap(
      from, to,
      [k](const std::vector<size_t>& ix) {
        std::vector<size_t> out = ix;
        out.erase(out.begin() + k);
        return out;
      },
      [k](size_t j, const std::string& rest) {
        if (j == k) fail(ErrorKind::ShapeMismatch, "unit entry has no moves");
        return std::make_pair(j < k ? j : j - 1, rest);
      },
      [k](size_t j, const std::string& rest) { return std::make_pair(j < k ? j : j + 1, rest); });
}

}  // namespace detail

// ---------------------------------------------------------------------------
// proof interpretation

inline FamMorphism interpret_proof(const Checked& c, Discipline d, const AtomMap& atoms = {});

namespace detail {

inline std::vector<FamObject> denote_ctx(const Context& ctx, Discipline d, const AtomMap& atoms) {
  std::vector<FamObject> out;
  for (const auto& f : ctx) out.push_back(interpret_formula(f, d, atoms));
  return out;
}

inline FamObject denote_rhs(const Sequent& s, Discipline d, const AtomMap& atoms) {
  if (s.rhs) return interpret_formula(*s.rhs, d, atoms);
  return fam_bottom();
}

// fold of componentwise strategies: entry i maps from `froms[i]` to `tos[i]`
inline Strategy odot_fold(const std::vector<Strategy>& parts) {
  if (parts.empty()) return copycat(pointed_unit());
  Strategy acc = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) acc = odot_strategies(acc, parts[i]);
  return acc;
}

// entrywise morphism on a context fold: `special` applies at slot k, copycats
// elsewhere; the special map must stay within singleton families.
inline FamMorphism entrywise(const std::vector<FamObject>& es, size_t k, const Strategy& special,
                             const FamObject& to_entry) {
  std::vector<FamObject> tos = es;
  tos[k] = to_entry;
  FamObject F = fold_objs(es), T = fold_objs(tos);
  Dims fd = dims_of(es);
  FamMorphism m{F, T, {}, {}};
  for (size_t x = 0; x < F.size(); ++x) {
    auto ix = fd.unflat(x);
    std::vector<Strategy> parts;
    for (size_t e = 0; e < es.size(); ++e) {
      if (e == k)
        parts.push_back(special);
      else
        parts.push_back(copycat(es[e].at(ix[e])));
    }
    m.reindex.push_back(x);
    m.components.push_back(odot_fold(parts));
  }
  return m;
}

}  // namespace detail

inline FamMorphism interpret_proof(const Checked& c, Discipline d, const AtomMap& atoms) {
  using namespace detail;
  const ProofNode& n = *c.node;
  const Sequent& seq = c.seq;
  size_t k = c.principal;
  auto ctx_objs = denote_ctx(seq.ctx, d, atoms);
  auto sub = [&](size_t i) { return interpret_proof(c.premises[i], d, atoms); };

  if (n.rule == "axiom") return fam_identity(interpret_formula(seq.ctx[0], d, atoms));
  if (n.rule == "unit-right") return fam_identity(fam_unit());

  if (n.rule == "otimes-right") {
    auto p1 = sub(0), p2 = sub(1);
    return fam_compose(split_iso(ctx_objs, *n.split).fwd, fam_tensor_mor(p1, p2));
  }
  if (n.rule == "otimes-left") {
    FamObject x = interpret_formula(seq.ctx[k].args[0], d, atoms);
    FamObject y = interpret_formula(seq.ctx[k].args[1], d, atoms);
    return fam_compose(merge_pair_iso(ctx_objs, k, x, y).fwd, sub(0));
  }
  if (n.rule == "unit-left") {
    return fam_compose(drop_unit_iso(ctx_objs, k).fwd, sub(0));
  }
  if (n.rule == "neg-right") {
    auto p = sub(0);  // D(ctx + [A]) -> bottom
    FamObject a = interpret_formula(seq.rhs->args[0], d, atoms);
    std::vector<FamObject> extended = ctx_objs;
    extended.push_back(a);
    auto split = split_iso(extended, ctx_objs.size());
    FamObject g = fold_objs(ctx_objs);
    FamMorphism body = fam_compose(split.bwd, p);    // D(ctx) (x) A -> bottom
    auto curried = fam_phi(g, a, fam_unit(), body);  // D(ctx) -> neg(A (x) 1)
    // collapse neg(A (x) 1) onto neg A
    FamObject na = fam_negation(a);
    FamObject nau = fam_negation(fam_tensor(a, fam_unit()));
    FamMorphism collapse{nau, na, {0}, {}};
    std::vector<GameIso> comp_isos;
    for (const auto& g2 : a.components) comp_isos.push_back(coalesce_unitor_right(g2));
    std::vector<size_t> perm(a.size());
    for (size_t i = 0; i < a.size(); ++i) perm[i] = i;
    GameIso ni = neg_iso(comp_isos, perm);
    collapse.components.push_back(iso_strategy(ni, "neg-unitor"));
    return fam_compose(curried, collapse);
  }
  if (n.rule == "neg-left") {
    auto p = sub(0);  // D(ctx without k) -> A
    FamObject a = p.to;
    // move the negated hypothesis to the end, split it off, apply p, evaluate
    std::vector<size_t> perm;
    for (size_t i = 0; i < ctx_objs.size(); ++i)
      if (i != k) perm.push_back(i);
    perm.push_back(k);
    auto re = reorder_iso(ctx_objs, perm);
    std::vector<FamObject> moved;
    for (size_t i : perm) moved.push_back(ctx_objs[i]);
    auto split = split_iso(moved, moved.size() - 1);
    auto step = fam_tensor_mor(p, fam_identity(ctx_objs[k]));
    return fam_compose(re.fwd, fam_compose(split.fwd, fam_compose(step, fam_ev(a))));
  }
  if (n.rule == "cut") {
    auto p1 = sub(0), p2 = sub(1);
    size_t sp = *n.split;
    auto split = split_iso(ctx_objs, sp);
    std::vector<FamObject> delta(ctx_objs.begin() + sp, ctx_objs.end());
    auto step = fam_tensor_mor(p1, fam_identity(fold_objs(delta)));
    // reshape A (x) D(Delta) onto D([A] + Delta)
    std::vector<FamObject> ad{p1.to};
    ad.insert(ad.end(), delta.begin(), delta.end());
    auto reshape = split_iso(ad, 1).bwd;
    return fam_compose(split.fwd, fam_compose(step, fam_compose(reshape, p2)));
  }
  if (n.rule == "oplus-right-1" || n.rule == "oplus-right-2") {
    auto p = sub(0);
    FamObject a = interpret_formula(seq.rhs->args[0], d, atoms);
    FamObject b = interpret_formula(seq.rhs->args[1], d, atoms);
    return fam_compose(p, n.rule.back() == '1' ? fam_inl(a, b) : fam_inr(a, b));
  }
  if (n.rule == "oplus-left") {
    auto p1 = sub(0), p2 = sub(1);
    FamObject a = interpret_formula(seq.ctx[k].args[0], d, atoms);
    Dims fd = dims_of(ctx_objs);
    FamObject F = fold_objs(ctx_objs);
    FamMorphism out{F, p1.to, {}, {}};
    for (size_t x = 0; x < F.size(); ++x) {
      auto ix = fd.unflat(x);
      bool left = ix[k] < a.size();
      auto bix = ix;
      if (!left) bix[k] -= a.size();
      Dims branch_dims = fd;
      branch_dims.d[k] = left ? a.size() : fd.d[k] - a.size();
      size_t bx = branch_dims.flat(bix);
      const FamMorphism& p = left ? p1 : p2;
      out.reindex.push_back(p.reindex[bx]);
      out.components.push_back(p.components[bx]);
    }
    return out;
  }
  if (n.rule == "zero-left") {
    return FamMorphism{fold_objs(ctx_objs), denote_rhs(seq, d, atoms), {}, {}};
  }
  if (n.rule == "strengthening") {
    auto p = sub(0);
    bool is_bang = seq.rhs->kind == Formula::Bang;
    if (p.to.size() != 1)
      fail(ErrorKind::NotSingleton, "modalities apply to singleton interpretations");
    FamMorphism out{p.from, is_bang ? fam_modal_bang(p.to) : fam_modal_affine(p.to), {}, {}};
    auto prefixes = fold_prefixes(ctx_objs.size());
    for (size_t i = 0; i < p.components.size(); ++i) {
      out.reindex.push_back(0);
      out.components.push_back(is_bang ? pexp_promote(p.components[i], prefixes)
                                       : strip_promote(p.components[i]));
    }
    return out;
  }
  if (n.rule == "dereliction") {
    bool is_bang = seq.ctx[k].kind == Formula::Bang;
    FamObject a = interpret_formula(seq.ctx[k].args[0], d, atoms);
    if (a.size() != 1)
      fail(ErrorKind::NotSingleton, "modalities apply to singleton interpretations");
    Strategy counit = is_bang ? pexp_counit(a.at(0)) : strip_counit(a.at(0));
    return fam_compose(entrywise(ctx_objs, k, counit, a), sub(0));
  }
  if (n.rule == "weakening") {
    Strategy w = discard(ctx_objs[k].at(0));
    auto to_unit = entrywise(ctx_objs, k, w, fam_unit());
    std::vector<FamObject> with_unit = ctx_objs;
    with_unit[k] = fam_unit();
    return fam_compose(to_unit, fam_compose(drop_unit_iso(with_unit, k).fwd, sub(0)));
  }
  if (n.rule == "contraction") {
    // the context entry is !A; pexp_contract wants the underlying pointed game
    FamObject a = interpret_formula(seq.ctx[k].args[0], d, atoms);
    Strategy contract = pexp_contract(a.at(0));
    FamObject pair = fam_tensor(ctx_objs[k], ctx_objs[k]);
    auto doubled = entrywise(ctx_objs, k, contract, pair);
    std::vector<FamObject> with_pair = ctx_objs;
    with_pair[k] = pair;
    auto reshape = merge_pair_iso(with_pair, k, ctx_objs[k], ctx_objs[k]).fwd;
    return fam_compose(doubled, fam_compose(reshape, sub(0)));
  }
  if (n.rule == "permute") {
    return fam_compose(reorder_iso(ctx_objs, n.perm).fwd, sub(0));
  }
  fail(ErrorKind::RuleMismatch, "no interpretation for rule '" + n.rule + "'");
}

}  // namespace mbg::logic
