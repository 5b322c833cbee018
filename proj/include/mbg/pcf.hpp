#pragma once

// A linear PCF over booleans: lambda, application, conditionals, fix, and the
// two resource markers. Terms elaborate to family morphisms; closed boolean
// programs evaluate by driving the denotation against the opening protocol and
// reading off which sum component the strategy selects.

#include "logic.hpp"

namespace mbg::pcf {

using logic::Formula;

// ---------------------------------------------------------------------------
// types and terms

struct Type {
  enum Kind { Bool, Lolli, Bang, Affine } kind = Bool;
  std::vector<Type> args;

  friend bool operator==(const Type& a, const Type& b) {
    return a.kind == b.kind && a.args == b.args;
  }
  std::string str() const {
    switch (kind) {
      case Bool: return "bool";
      case Lolli: return "(" + args[0].str() + " -o " + args[1].str() + ")";
      case Bang: return "!" + args[0].str();
      case Affine: return "aff " + args[0].str();
    }
    return "?";
  }
};

inline Type t_bool() { return {Type::Bool, {}}; }
inline Type t_lolli(Type a, Type b) { return {Type::Lolli, {std::move(a), std::move(b)}}; }
inline Type t_bang(Type a) { return {Type::Bang, {std::move(a)}}; }
inline Type t_affine(Type a) { return {Type::Affine, {std::move(a)}}; }

struct Term {
  enum Kind { Var, Lam, App, TT, FF, If, Fix, Derelict, Promote } kind = TT;
  std::string var;  // Var name or Lam binder
  Type ann;         // Lam annotation
  std::vector<Term> args;
};

inline Type parse_type(const sx::Node& n) {
  if (n.is_sym()) {
    if (n.text == "bool") return t_bool();
    fail(ErrorKind::ParseError, "unknown type '" + n.text + "'");
  }
  std::string h = n.head();
  if (h == "lolli") return t_lolli(parse_type(n.at(1)), parse_type(n.at(2)));
  if (h == "bang") return t_bang(parse_type(n.at(1)));
  if (h == "affine") return t_affine(parse_type(n.at(1)));
  fail(ErrorKind::ParseError, "unknown type form " + n.dump());
}

inline Term parse_term(const sx::Node& n) {
  if (n.is_sym()) {
    if (n.text == "tt") return {Term::TT, "", {}, {}};
    if (n.text == "ff") return {Term::FF, "", {}, {}};
    return {Term::Var, n.text, {}, {}};
  }
  std::string h = n.head();
  if (h == "lam") {
    const auto& binder = n.at(1);
    Term t{Term::Lam, binder.at(0).sym(), parse_type(binder.at(1)), {}};
    t.args.push_back(parse_term(n.at(2)));
    return t;
  }
  if (h == "app") return {Term::App, "", {}, {parse_term(n.at(1)), parse_term(n.at(2))}};
  if (h == "if")
    return {Term::If, "", {}, {parse_term(n.at(1)), parse_term(n.at(2)), parse_term(n.at(3))}};
  if (h == "fix") return {Term::Fix, "", {}, {parse_term(n.at(1))}};
  if (h == "derelict") return {Term::Derelict, "", {}, {parse_term(n.at(1))}};
  if (h == "promote") return {Term::Promote, "", {}, {parse_term(n.at(1))}};
  fail(ErrorKind::ParseError, "unknown term form " + n.dump());
}

// ---------------------------------------------------------------------------
// typing: plain variables exactly once, affine ones at most once, banged ones
// freely; fix takes a closed !T -o T

namespace detail {

struct Binding {
  std::string name;
  Type type;
};

using Usage = std::map<std::string, size_t>;

inline void merge_usage(Usage& into, const Usage& other) {
  for (const auto& [k, v] : other) into[k] += v;
}

inline Type typecheck_rec(const Term& t, std::vector<Binding>& env, Usage& usage) {
  switch (t.kind) {
    case Term::TT:
    case Term::FF: return t_bool();
    case Term::Var: {
      for (auto it = env.rbegin(); it != env.rend(); ++it)
        if (it->name == t.var) {
          usage[t.var]++;
          return it->type;
        }
      fail(ErrorKind::TypeError, "unbound variable '" + t.var + "'");
    }
    case Term::Lam: {
      env.push_back({t.var, t.ann});
      Usage inner;
      Type body = typecheck_rec(t.args[0], env, inner);
      env.pop_back();
      size_t n = inner.count(t.var) ? inner[t.var] : 0;
      if (t.ann.kind == Type::Bang) {
        // any usage
      } else if (t.ann.kind == Type::Affine) {
        if (n > 1) fail(ErrorKind::LinearityViolation, "affine variable '" + t.var + "' used twice");
      } else if (n != 1) {
        fail(ErrorKind::LinearityViolation, "linear variable '" + t.var + "' used " +
                                                std::to_string(n) + " times");
      }
      inner.erase(t.var);
      merge_usage(usage, inner);
      return t_lolli(t.ann, body);
    }
    case Term::App: {
      Usage uf, uu;
      Type f = typecheck_rec(t.args[0], env, uf);
      Type u = typecheck_rec(t.args[1], env, uu);
      if (f.kind != Type::Lolli || !(f.args[0] == u))
        fail(ErrorKind::TypeError, "cannot apply " + f.str() + " to " + u.str());
      for (const auto& [k, v] : uf)
        if (v > 0 && uu.count(k) && uu.at(k) > 0)
          fail(ErrorKind::LinearityViolation,
               "variable '" + k + "' is shared across an application");
      merge_usage(usage, uf);
      merge_usage(usage, uu);
      return f.args[1];
    }
    case Term::If: {
      Usage uc, ua, ub;
      Type c = typecheck_rec(t.args[0], env, uc);
      if (!(c == t_bool())) fail(ErrorKind::TypeError, "condition must be bool, got " + c.str());
      Type a = typecheck_rec(t.args[1], env, ua);
      Type b = typecheck_rec(t.args[2], env, ub);
      if (!(a == b)) fail(ErrorKind::TypeError, "branches disagree: " + a.str() + " vs " + b.str());
      for (const auto& bind : env) {
        size_t na = ua.count(bind.name) ? ua.at(bind.name) : 0;
        size_t nb = ub.count(bind.name) ? ub.at(bind.name) : 0;
        bool modal = bind.type.kind == Type::Bang || bind.type.kind == Type::Affine;
        if (!modal && na != nb)
          fail(ErrorKind::LinearityViolation,
               "branches use linear variable '" + bind.name + "' differently");
      }
      merge_usage(usage, uc);
      Usage um = ua;
      for (const auto& [key, v] : ub)
        um[key] = std::max(um[key], v);
      merge_usage(usage, um);
      return a;
    }
    case Term::Fix: {
      Usage ut;
      Type f = typecheck_rec(t.args[0], env, ut);
      for (const auto& [key, v] : ut)
        if (v > 0)
          fail(ErrorKind::LinearityViolation, "the argument of fix must be closed; it uses '" + key + "'");
      if (f.kind != Type::Lolli || f.args[0].kind != Type::Bang || !(f.args[0].args[0] == f.args[1]))
        fail(ErrorKind::TypeError, "fix expects !T -o T, got " + f.str());
      return f.args[1];
    }
    case Term::Derelict: {
      Type x = typecheck_rec(t.args[0], env, usage);
      if (x.kind != Type::Bang && x.kind != Type::Affine)
        fail(ErrorKind::TypeError, "derelict expects a modal type, got " + x.str());
      return x.args[0];
    }
    case Term::Promote: {
      Usage ut;
      Type x = typecheck_rec(t.args[0], env, ut);
      for (const auto& [key, v] : ut) {
        if (v == 0) continue;
        for (const auto& bind : env)
          if (bind.name == key && bind.type.kind != Type::Bang)
            fail(ErrorKind::LinearityViolation,
                 "promotion requires an exponential context; '" + key + "' is not");
      }
      merge_usage(usage, ut);
      return t_bang(x);
    }
  }
  fail(ErrorKind::TypeError, "bad term");
}

}  // namespace detail

inline Type pcf_typecheck(const Term& t) {
  std::vector<detail::Binding> env;
  detail::Usage usage;
  return detail::typecheck_rec(t, env, usage);
}

// ---------------------------------------------------------------------------
// elaboration into family morphisms

namespace detail {

// the interpretation of a type, and the family under its top negation
inline FamObject type_obj(const Type& t, Discipline d);

inline FamObject type_body(const Type& t, Discipline d) {
  switch (t.kind) {
    case Type::Bool: {
      GamePtr two = neg({pointed_unit(), pointed_unit()});
      switch (d) {
        case Discipline::Linear: return fam_singleton(two);
        case Discipline::Affine: return fam_singleton(affine_strip(two));
        case Discipline::Exponential: return fam_singleton(pointed_exponential(two));
      }
      break;
    }
    case Type::Lolli: return fam_tensor(type_obj(t.args[0], d), type_body(t.args[1], d));
    default:
      fail(ErrorKind::TypeError, "type " + t.str() + " is not a value type");
  }
  fail(ErrorKind::TypeError, "bad type");
}

inline FamObject type_obj(const Type& t, Discipline d) {
  switch (t.kind) {
    case Type::Bool:
    case Type::Lolli: return fam_negation(type_body(t, d));
    case Type::Bang: return fam_modal_bang(type_obj(t.args[0], d));
    case Type::Affine: return fam_modal_affine(type_obj(t.args[0], d));
  }
  fail(ErrorKind::TypeError, "bad type");
}

struct Elab {
  FamMorphism m;              // D(entries over `used`) -> type_obj(type)
  std::vector<size_t> used;   // ascending indices into the ambient environment
  Type type;
};

inline bool is_affine_game(const GamePtr& g) {
  return g->queries_at(g->move(g->initial_move()).tgt).empty();
}

// singleton fam-level associativity (A (x) B) (x) C -> A (x) (B (x) C)
inline FamMorphism fam_assoc(const FamObject& a, const FamObject& b, const FamObject& c) {
  if (a.size() != 1 || b.size() != 1 || c.size() != 1)
    fail(ErrorKind::NotSingleton, "fam_assoc is used on singletons only");
  GameIso iso = coalesce_assoc(a.at(0), b.at(0), c.at(0));
  return {fam_tensor(fam_tensor(a, b), c), fam_tensor(a, fam_tensor(b, c)), {0},
          {iso_strategy(iso, "assoc")}};
}

inline FamMorphism fam_sym_singleton(const FamObject& a, const FamObject& b) {
  if (a.size() != 1 || b.size() != 1) fail(ErrorKind::NotSingleton, "singleton symmetry only");
  GameIso iso = coalesce_sym(a.at(0), b.at(0));
  return {fam_tensor(a, b), fam_tensor(b, a), {0}, {iso_strategy(iso, "sym")}};
}

// collapse neg(Z (x) 1) onto neg(Z)
inline FamMorphism neg_unit_collapse(const FamObject& z) {
  FamObject nau = fam_negation(fam_tensor(z, fam_unit()));
  FamObject na = fam_negation(z);
  std::vector<GameIso> isos;
  std::vector<size_t> perm;
  for (size_t i = 0; i < z.size(); ++i) {
    isos.push_back(coalesce_unitor_right(z.at(i)));
    perm.push_back(i);
  }
  return {nau, na, {0}, {iso_strategy(neg_iso(isos, perm), "neg-unitor")}};
}

inline Elab elaborate_rec(const Term& t, const std::vector<Binding>& env,
                          const std::vector<FamObject>& env_objs, Discipline d);

// drop an unused modal binder that the caller needs present, appending it
inline Elab pad_with(const Elab& e, const std::vector<FamObject>& objs, size_t idx,
                     const Type& ty, Discipline d) {
  if (std::find(e.used.begin(), e.used.end(), idx) != e.used.end()) return e;
  if (ty.kind != Type::Bang && ty.kind != Type::Affine)
    fail(ErrorKind::LinearityViolation, "a linear variable was left unused");
  std::vector<FamObject> entries;
  std::vector<size_t> used = e.used;
  used.push_back(idx);
  std::sort(used.begin(), used.end());
  for (size_t i : used) entries.push_back(objs[i]);
  size_t pos = size_t(std::find(used.begin(), used.end(), idx) - used.begin());
  Strategy w = discard(objs[idx].at(0));
  auto to_unit = logic::detail::entrywise(entries, pos, w, fam_unit());
  std::vector<FamObject> with_unit = entries;
  with_unit[pos] = fam_unit();
  auto dropped = logic::detail::drop_unit_iso(with_unit, pos).fwd;
  return {fam_compose(to_unit, fam_compose(dropped, e.m)), used, e.type};
}

// reorder D(union) into D(first block ++ second block) and split
struct SplitPlan {
  FamMorphism to_pair;  // D(union) -> D(left) (x) D(right)
  std::vector<size_t> used;
};

inline SplitPlan split_union(const std::vector<size_t>& left, const std::vector<size_t>& right,
                             const std::vector<FamObject>& objs) {
  std::vector<size_t> used;
  used.insert(used.end(), left.begin(), left.end());
  used.insert(used.end(), right.begin(), right.end());
  std::sort(used.begin(), used.end());
  std::vector<FamObject> entries;
  for (size_t i : used) entries.push_back(objs[i]);
  // permutation sending the sorted union onto left ++ right
  std::vector<size_t> perm;
  auto pos_of = [&](size_t idx) {
    return size_t(std::find(used.begin(), used.end(), idx) - used.begin());
  };
  for (size_t i : left) perm.push_back(pos_of(i));
  for (size_t i : right) perm.push_back(pos_of(i));
  auto re = logic::detail::reorder_iso(entries, perm).fwd;
  std::vector<FamObject> moved;
  for (size_t p : perm) moved.push_back(entries[p]);
  auto sp = logic::detail::split_iso(moved, left.size()).fwd;
  return {fam_compose(re, sp), used};
}

inline Elab elaborate_rec(const Term& t, const std::vector<Binding>& env,
                          const std::vector<FamObject>& env_objs, Discipline d) {
  using logic::f_affine;
  using logic::f_bang;
  using logic::f_neg;
  using logic::f_one;
  using logic::f_plus;
  switch (t.kind) {
    case Term::TT:
    case Term::FF: {
      logic::Formula inner = f_neg(f_plus(f_one(), f_one()));
      logic::Formula body = d == Discipline::Linear
                                ? inner
                                : (d == Discipline::Affine ? f_affine(inner) : f_bang(inner));
      std::string pick = t.kind == Term::TT ? "oplus-right-1" : "oplus-right-2";
      std::string inner_proof = "(neg-left (" + pick + " (unit-right)))";
      std::string proof = d == Discipline::Linear
                              ? "(neg-right " + inner_proof + ")"
                              : "(neg-right (dereliction " + inner_proof + "))";
      auto node = logic::parse_proof(sx::parse(proof));
      auto checked = logic::check_proof(logic::Sequent{{}, f_neg(body)}, node);
      return {logic::interpret_proof(checked, d), {}, t_bool()};
    }
    case Term::Var: {
      for (size_t i = env.size(); i-- > 0;)
        if (env[i].name == t.var)
          return {fam_identity(env_objs[i]), {i}, env[i].type};
      fail(ErrorKind::TypeError, "unbound variable '" + t.var + "'");
    }
    case Term::Lam: {
      auto env2 = env;
      env2.push_back({t.var, t.ann});
      auto objs2 = env_objs;
      objs2.push_back(type_obj(t.ann, d));
      Elab body = elaborate_rec(t.args[0], env2, objs2, d);
      body = pad_with(body, objs2, env2.size() - 1, t.ann, d);
      // x sits at the end of the used entries
      std::vector<size_t> used;
      std::vector<FamObject> entries;
      for (size_t i : body.used)
        if (i + 1 != env2.size()) {
          used.push_back(i);
          entries.push_back(objs2[i]);
        }
      FamObject xo = objs2.back();
      std::vector<FamObject> all = entries;
      all.push_back(xo);
      FamObject gamma = logic::detail::fold_objs(entries);
      FamObject zbody = type_body(body.type, d);
      // body.m : D(entries + [x]) -> neg(zbody); reshape and curry x away
      FamMorphism inner = fam_compose(logic::detail::split_iso(all, entries.size()).bwd, body.m);
      FamMorphism curried = fam_phi(gamma, xo, zbody, inner);
      return {curried, used, t_lolli(t.ann, body.type)};
    }
    case Term::App: {
      Elab f = elaborate_rec(t.args[0], env, env_objs, d);
      Elab u = elaborate_rec(t.args[1], env, env_objs, d);
      FamObject xo = type_obj(f.type.args[0], d);
      FamObject zbody = type_body(f.type.args[1], d);
      auto plan = split_union(f.used, u.used, env_objs);
      std::vector<FamObject> fobjs;
      for (size_t i : f.used) fobjs.push_back(env_objs[i]);
      FamObject fgamma = logic::detail::fold_objs(fobjs);
      auto step = fam_tensor_mor(fam_identity(fgamma), u.m);
      auto applied = fam_phi_inverse(fgamma, xo, zbody, f.m);
      return {fam_compose(plan.to_pair, fam_compose(step, applied)), plan.used,
              f.type.args[1]};
    }
    case Term::Derelict: {
      Elab x = elaborate_rec(t.args[0], env, env_objs, d);
      Type inner = x.type.args[0];
      FamObject a = type_obj(inner, d);
      Strategy counit =
          x.type.kind == Type::Bang ? pexp_counit(a.at(0)) : strip_counit(a.at(0));
      FamMorphism c{x.m.to, a, {0}, {counit}};
      return {fam_compose(x.m, c), x.used, inner};
    }
    case Term::Promote: {
      Elab x = elaborate_rec(t.args[0], env, env_objs, d);
      std::vector<FamObject> entries;
      for (size_t i : x.used) entries.push_back(env_objs[i]);
      auto prefixes = logic::detail::fold_prefixes(entries.size());
      FamMorphism out{x.m.from, fam_modal_bang(x.m.to), {0},
                      {pexp_promote(x.m.components[0], prefixes)}};
      return {out, x.used, t_bang(x.type)};
    }
    case Term::Fix: {
      Elab f = elaborate_rec(t.args[0], env, env_objs, d);
      // f : {I.} -> neg(!T (x) body T)
      Type inner = f.type.args[1];
      FamObject bt = type_obj(t_bang(inner), d);
      FamObject zbody = type_body(inner, d);
      auto opened = fam_phi_inverse(fam_unit(), bt, zbody, f.m);  // {I.} (x) !T -> neg(body)
      // pad !T with the unit on the left to feed the opened morphism
      std::vector<FamObject> two_entries{fam_unit(), bt};
      auto pad = logic::detail::drop_unit_iso(two_entries, 0).bwd;    // !T -> D([I.], !T)
      auto apart = logic::detail::split_iso(two_entries, 1).fwd;      // D([I.], !T) -> {I.} (x) !T
      FamMorphism sigma = fam_compose(pad, fam_compose(apart, opened));
      return {singleton_fixpoint(sigma), {}, inner};
    }
    case Term::If: {
      Elab c = elaborate_rec(t.args[0], env, env_objs, d);
      Elab a = elaborate_rec(t.args[1], env, env_objs, d);
      Elab b = elaborate_rec(t.args[2], env, env_objs, d);
      // pad so both branches use the same entries
      for (size_t i : b.used) a = pad_with(a, env_objs, i, env[i].type, d);
      for (size_t i : a.used) b = pad_with(b, env_objs, i, env[i].type, d);
      std::vector<FamObject> br_objs;
      for (size_t i : a.used) br_objs.push_back(env_objs[i]);
      FamObject X = logic::detail::fold_objs(br_objs);
      FamObject F2{{pointed_unit(), pointed_unit()}};
      FamObject Z = type_body(a.type, d);
      // e : X (x) (1 (+) 1) -> neg Z by cases
      FamMorphism e{fam_tensor(X, F2), fam_negation(Z), {0, 0}, {}};
      for (const FamMorphism* br : {&a.m, &b.m})
        e.components.push_back(compose(iso_strategy(coalesce_unitor_right(X.at(0)), "unpad"),
                                       br->components[0]));
      auto k1 = fam_phi(X, F2, Z, e);  // X -> neg(F2 (x) Z)
      // swap to neg(Z (x) F2)
      std::vector<GameIso> isos;
      std::vector<size_t> perm;
      for (size_t i = 0; i < F2.size(); ++i) {
        isos.push_back(coalesce_sym(F2.at(i), Z.at(0)));
        perm.push_back(i);  // |Z| = 1 keeps the flat index unchanged
      }
      FamMorphism swap{fam_negation(fam_tensor(F2, Z)), fam_negation(fam_tensor(Z, F2)), {0},
                       {iso_strategy(neg_iso(isos, perm), "neg-sym")}};
      auto k2 = fam_phi_inverse(X, Z, F2, fam_compose(k1, swap));  // X (x) Z -> neg F2
      // promote into the boolean body per discipline
      FamObject M = type_body(t_bool(), d);
      FamMorphism k3 = k2;
      if (d == Discipline::Affine) {
        if (!is_affine_game(fam_tensor(X, Z).at(0)))
          fail(ErrorKind::TypeError, "an affine conditional needs an affine context");
        k3 = FamMorphism{k2.from, M, {0}, {strip_promote(k2.components[0])}};
      } else if (d == Discipline::Exponential) {
        std::vector<std::string> prefixes;
        auto xpre = logic::detail::fold_prefixes(br_objs.size());
        for (const auto& p : xpre) prefixes.push_back("L." + p);
        prefixes.push_back("R.");
        k3 = FamMorphism{k2.from, M, {0}, {pexp_promote(k2.components[0], prefixes)}};
      }
      // assemble: D(used) -> Dc (x) Dbr, then phi against Z
      auto plan = split_union(c.used, a.used, env_objs);
      std::vector<FamObject> cobjs;
      for (size_t i : c.used) cobjs.push_back(env_objs[i]);
      FamObject Dc = logic::detail::fold_objs(cobjs);
      FamObject pair = fam_tensor(Dc, X);
      // v : (Dc (x) X) (x) Z -> bottom
      auto assoc = fam_assoc(Dc, X, Z);
      auto step = fam_tensor_mor(c.m, k3);  // Dc (x) (X (x) Z) -> negM (x) M
      auto sym = fam_sym_singleton(fam_negation(M), M);
      auto v = fam_compose(assoc, fam_compose(step, fam_compose(sym, fam_ev(M))));
      auto curried = fam_phi(pair, Z, fam_unit(), v);
      auto collapsed = fam_compose(curried, neg_unit_collapse(Z));
      return {fam_compose(plan.to_pair, collapsed), plan.used, a.type};
    }
  }
  fail(ErrorKind::TypeError, "bad term");
}

}  // namespace detail

inline FamMorphism pcf_elaborate(const Term& t, Discipline d) {
  Type ty = pcf_typecheck(t);
  (void)ty;
  std::vector<detail::Binding> env;
  std::vector<FamObject> objs;
  auto e = detail::elaborate_rec(t, env, objs, d);
  return e.m;
}

enum class EvalResult { TT, FF, Diverge };

inline const char* to_string(EvalResult r) {
  switch (r) {
    case EvalResult::TT: return "tt";
    case EvalResult::FF: return "ff";
    case EvalResult::Diverge: return "diverge";
  }
  return "?";
}

// Drive a closed boolean denotation: opening handshake, then the unique
// Opponent continuation; the answer names the selected sum component.
inline EvalResult pcf_eval(const Term& t, Discipline d, size_t depth = 12) {
  Type ty = pcf_typecheck(t);
  if (!(ty == t_bool())) fail(ErrorKind::TypeError, "evaluation needs a closed boolean program");
  auto m = pcf_elaborate(t, d);
  const Strategy& s = m.components.at(0);
  const Game& g = *s.game();
  Play play;
  auto m0 = g.find_move(g.root(), "L.^");
  if (!m0) fail(ErrorKind::ShapeMismatch, "denotation is missing the opening handshake");
  play.push_back(*m0);
  auto r0 = s.respond(play);
  if (!r0) return EvalResult::Diverge;
  play.push_back(*r0);
  size_t guard = 0;
  while (true) {
    if (++guard > depth) return EvalResult::Diverge;
    PosId cur = g.move(play.back()).tgt;
    std::optional<MoveId> omove;
    size_t count = 0;
    for (MoveId mm : g.moves_from(cur))
      if (g.polarity(mm) == kOpponent) {
        omove = mm;
        ++count;
      }
    if (!omove || count != 1)
      fail(ErrorKind::ShapeMismatch, "ambiguous opponent protocol while reading a boolean");
    play.push_back(*omove);
    auto r = s.respond(play);
    if (!r) return EvalResult::Diverge;
    play.push_back(*r);
    // the answer ends with c<i>:^
    std::string k = g.move_key(*r);
    if (k.size() >= 2 && k.compare(k.size() - 2, 2, ":^") == 0) {
      size_t pos = k.rfind('c', k.size() - 3);
      if (pos != std::string::npos) {
        size_t digits = pos + 1;
        std::string num;
        while (digits < k.size() && isdigit(k[digits])) num += k[digits++];
        if (!num.empty() && digits < k.size() && k[digits] == ':')
          return num == "0" ? EvalResult::TT : EvalResult::FF;
      }
    }
  }
}

}  // namespace mbg::pcf
