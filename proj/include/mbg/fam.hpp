#pragma once

// The free finite-coproduct completion over pointed games: family objects and
// morphisms, the lifted tensor and negation, the currying bijection phi and
// evaluation, distributivity, modalities on singletons, singleton fixpoints,
// and the derived continuation-monad structure (strength, the two
// double-negation maps).

#include <numeric>

#include "pointed.hpp"

namespace mbg {

struct FamObject {
  std::vector<GamePtr> components;
  size_t size() const { return components.size(); }
  const GamePtr& at(size_t i) const { return components.at(i); }

  friend bool operator==(const FamObject& a, const FamObject& b) {
    return a.components == b.components;
  }
};

struct FamMorphism {
  FamObject from, to;
  std::vector<size_t> reindex;       // |from| entries into `to`
  std::vector<Strategy> components;  // components[i] : from[i] -> to[reindex[i]]
};

inline FamObject fam_unit() { return {{pointed_unit()}}; }
inline FamObject fam_zero() { return {}; }
inline FamObject fam_singleton(GamePtr g) { return {{std::move(g)}}; }

inline void check_shape(const FamMorphism& m) {
  if (m.reindex.size() != m.from.size() || m.components.size() != m.from.size())
    fail(ErrorKind::IndexMismatch, "family morphism arity mismatch");
  for (size_t i = 0; i < m.from.size(); ++i)
    if (m.reindex[i] >= m.to.size())
      fail(ErrorKind::IndexMismatch, "reindexing leaves the target family");
}

inline FamMorphism fam_identity(const FamObject& f) {
  FamMorphism m{f, f, {}, {}};
  for (size_t i = 0; i < f.size(); ++i) {
    m.reindex.push_back(i);
    m.components.push_back(copycat(f.at(i)));
  }
  return m;
}

inline FamMorphism fam_compose(const FamMorphism& f, const FamMorphism& g) {
  if (!(f.to == g.from))
    fail(ErrorKind::IndexMismatch, "family morphisms do not share the middle family");
  FamMorphism m{f.from, g.to, {}, {}};
  for (size_t i = 0; i < f.from.size(); ++i) {
    size_t j = f.reindex[i];
    m.reindex.push_back(g.reindex[j]);
    m.components.push_back(compose(f.components[i], g.components[j]));
  }
  return m;
}

// ---------------------------------------------------------------------------
// tensor (pairwise coalesced product, row-major on indices)

inline FamObject fam_tensor(const FamObject& f, const FamObject& g) {
  FamObject out;
  for (const auto& a : f.components)
    for (const auto& b : g.components) out.components.push_back(coalesce(a, b));
  return out;
}

inline FamMorphism fam_tensor_mor(const FamMorphism& f, const FamMorphism& g) {
  FamMorphism m{fam_tensor(f.from, g.from), fam_tensor(f.to, g.to), {}, {}};
  for (size_t i = 0; i < f.from.size(); ++i)
    for (size_t j = 0; j < g.from.size(); ++j) {
      m.reindex.push_back(f.reindex[i] * g.to.size() + g.reindex[j]);
      m.components.push_back(odot_strategies(f.components[i], g.components[j]));
    }
  return m;
}

// ---------------------------------------------------------------------------
// coproducts

inline FamObject fam_coproduct(const FamObject& f, const FamObject& g) {
  FamObject out = f;
  out.components.insert(out.components.end(), g.components.begin(), g.components.end());
  return out;
}

inline FamMorphism fam_inl(const FamObject& f, const FamObject& g) {
  FamMorphism m{f, fam_coproduct(f, g), {}, {}};
  for (size_t i = 0; i < f.size(); ++i) {
    m.reindex.push_back(i);
    m.components.push_back(copycat(f.at(i)));
  }
  return m;
}

inline FamMorphism fam_inr(const FamObject& f, const FamObject& g) {
  FamMorphism m{g, fam_coproduct(f, g), {}, {}};
  for (size_t i = 0; i < g.size(); ++i) {
    m.reindex.push_back(f.size() + i);
    m.components.push_back(copycat(g.at(i)));
  }
  return m;
}

inline FamMorphism fam_copair(const FamMorphism& f, const FamMorphism& g) {
  if (!(f.to == g.to)) fail(ErrorKind::IndexMismatch, "copairing needs a common target");
  FamMorphism m{fam_coproduct(f.from, g.from), f.to, {}, {}};
  m.reindex = f.reindex;
  m.reindex.insert(m.reindex.end(), g.reindex.begin(), g.reindex.end());
  m.components = f.components;
  m.components.insert(m.components.end(), g.components.begin(), g.components.end());
  return m;
}

inline FamMorphism fam_initial(const FamObject& f) { return {fam_zero(), f, {}, {}}; }

// ---------------------------------------------------------------------------
// negation

inline FamObject fam_negation(const FamObject& f) { return fam_singleton(neg(f.components)); }

// Bottom = neg(1).
inline FamObject fam_bottom() { return fam_negation(fam_unit()); }

// Evaluation component F_i (.) negF -> bottom: enter the matching branch of the
// negation and copy moves across.
inline Strategy ev_component(const FamObject& f, size_t i) {
  GamePtr negf = neg(f.components);
  GamePtr bot = neg({pointed_unit()});
  GamePtr g = tensor(dual(coalesce(f.at(i), negf)), bot);
  std::string tag = "c" + std::to_string(i) + ":";
  std::string init = f.at(i)->init_key();
  return routed_strategy(
      g, "ev", [tag, init](const Game& gg, const Play& odd) -> std::optional<std::string> {
        std::string k = gg.move_key(odd.back());
        if (k == "L.*") return "R.~";
        if (k == "R.c0:^") return "L.R." + tag + init;
        std::string s = k;
        if (keyops::strip_prefix(s, "L.R." + tag)) return "L.L." + s;
        s = k;
        if (keyops::strip_prefix(s, "L.L.")) return "L.R." + tag + s;
        fail(ErrorKind::ShapeMismatch, "ev: unroutable key " + k);
      });
}

// F (x) negF -> bottom
inline FamMorphism fam_ev(const FamObject& f) {
  FamMorphism m{fam_tensor(f, fam_negation(f)), fam_bottom(), {}, {}};
  for (size_t i = 0; i < f.size(); ++i) {
    m.reindex.push_back(0);
    m.components.push_back(ev_component(f, i));
  }
  return m;
}

// ---------------------------------------------------------------------------
// the currying bijection phi

// From m : F (x) G -> neg H to F -> neg(G (x) H).
inline FamMorphism fam_phi(const FamObject& f, const FamObject& g, const FamObject& h,
                           const FamMorphism& m) {
  if (!(m.from == fam_tensor(f, g)) || !(m.to == fam_negation(h)))
    fail(ErrorKind::ShapeMismatch, "phi expects a morphism F (x) G -> neg H");
  FamObject gh = fam_tensor(g, h);
  FamObject target = fam_negation(gh);
  GamePtr neg_gh = target.at(0);
  FamMorphism out{f, target, {}, {}};
  for (size_t i = 0; i < f.size(); ++i) {
    std::vector<Strategy> row;
    for (size_t j = 0; j < g.size(); ++j) row.push_back(m.components[i * g.size() + j]);
    GamePtr fi = f.at(i);
    GamePtr rg = tensor(dual(fi), neg_gh);
    std::string init_f = fi->init_key();
    std::vector<std::string> init_h;
    for (const auto& hk : h.components) init_h.push_back(hk->init_key());
    size_t hn = h.size();
    auto oracle = [row, init_f, init_h, hn](const Game& gg,
                                            const Play& visible) -> std::optional<MoveId> {
      // component (j,k) is selected by the entry move; before that only the
      // handshake L.init_f / R.~ can occur
      int jk = -1;
      Play sp;
      const Strategy* sigma = nullptr;
      auto push = [&](const std::string& key) {
        const Game& sg = *sigma->game();
        PosId cur = sp.empty() ? sg.root() : sg.move(sp.back()).tgt;
        auto mm = sg.find_move(cur, key);
        if (!mm) fail(ErrorKind::ShapeMismatch, "phi: no move '" + key + "'");
        sp.push_back(*mm);
      };
      for (MoveId vm : visible) {
        std::string k = gg.move_key(vm);
        if (k == "L." + init_f || k == "R.~") continue;  // handshake, replayed on entry
        std::string s = k;
        if (jk < 0) {
          // must be the component entry R.c{jk}:*
          if (!keyops::strip_prefix(s, "R.c") || s.size() < 2)
            fail(ErrorKind::ShapeMismatch, "phi: expected an entry move, got " + k);
          size_t colon = s.find(":*");
          if (colon == std::string::npos) fail(ErrorKind::ShapeMismatch, "phi: bad entry " + k);
          jk = int(std::stoul(s.substr(0, colon)));
          size_t j = size_t(jk) / hn, kk = size_t(jk) % hn;
          sigma = &row.at(j);
          push("L.*");
          push("R.~");
          push("R.c" + std::to_string(kk) + ":" + init_h[kk]);
          continue;
        }
        size_t kk = size_t(jk) % hn;
        std::string tag = "R.c" + std::to_string(jk) + ":";
        if (keyops::strip_prefix(s, tag + "L.")) {
          push("L.R." + s);  // G-side body
        } else if (keyops::strip_prefix(s = k, tag + "R.")) {
          push("R.c" + std::to_string(kk) + ":" + s);  // H-side body
        } else if (keyops::strip_prefix(s = k, "L.")) {
          push("L.L." + s);  // F-side body
        } else {
          fail(ErrorKind::ShapeMismatch, "phi: unroutable key " + k);
        }
      }
      PosId vcur = visible.empty() ? gg.root() : gg.move(visible.back()).tgt;
      if (!visible.empty() && gg.move_key(visible.back()) == "L." + init_f) {
        // respond with the lift iff some component would respond to the fused init
        for (const auto& cand : row) {
          Play probe;
          const Game& sg = *cand.game();
          auto m0 = sg.find_move(sg.root(), "L.*");
          if (!m0) continue;
          probe.push_back(*m0);
          auto r0 = cand.respond(probe);
          if (r0) {
            if (sg.move_key(*r0) != "R.~")
              fail(ErrorKind::ShapeMismatch, "phi: component is not transverse");
            return gg.find_move(vcur, "R.~");
          }
        }
        return std::nullopt;
      }
      if (jk < 0) return std::nullopt;
      auto r = sigma->respond(sp);
      if (!r) return std::nullopt;
      std::string k = sigma->game()->move_key(*r);
      size_t kk = size_t(jk) % hn;
      std::string tag = "R.c" + std::to_string(jk) + ":";
      std::string mapped;
      std::string s = k;
      if (keyops::strip_prefix(s, "L.L."))
        mapped = "L." + s;
      else if (keyops::strip_prefix(s = k, "L.R."))
        mapped = tag + "L." + s;
      else if (keyops::strip_prefix(s = k, "R.c" + std::to_string(kk) + ":"))
        mapped = tag + "R." + s;
      else
        fail(ErrorKind::ShapeMismatch, "phi: unroutable response " + k);
      auto mv = gg.find_move(vcur, mapped);
      if (!mv) fail(ErrorKind::ShapeMismatch, "phi: response '" + mapped + "' not playable");
      return mv;
    };
    out.reindex.push_back(0);
    out.components.push_back(Strategy(rg, oracle, "phi(" + m.components[0].label() + ")"));
  }
  return out;
}

// From t : F -> neg(G (x) H) back to F (x) G -> neg H.
inline FamMorphism fam_phi_inverse(const FamObject& f, const FamObject& g, const FamObject& h,
                                   const FamMorphism& t) {
  if (!(t.from == f) || !(t.to == fam_negation(fam_tensor(g, h))))
    fail(ErrorKind::ShapeMismatch, "phi_inverse expects a morphism F -> neg(G (x) H)");
  FamObject fg = fam_tensor(f, g);
  FamObject target = fam_negation(h);
  GamePtr negh = target.at(0);
  FamMorphism out{fg, target, {}, {}};
  for (size_t i = 0; i < f.size(); ++i) {
    for (size_t j = 0; j < g.size(); ++j) {
      const Strategy& tau = t.components[i];
      GamePtr src = fg.at(i * g.size() + j);
      GamePtr rg = tensor(dual(src), negh);
      std::string init_f = f.at(i)->init_key();
      std::vector<std::string> init_h;
      for (const auto& hk : h.components) init_h.push_back(hk->init_key());
      size_t hn = h.size();
      auto oracle = [tau, init_f, init_h, hn, j](const Game& gg,
                                                 const Play& visible) -> std::optional<MoveId> {
        const Game& tg = *tau.game();
        Play tp;
        int kk = -1;  // selected H component
        auto push = [&](const std::string& key) {
          PosId cur = tp.empty() ? tg.root() : tg.move(tp.back()).tgt;
          auto mm = tg.find_move(cur, key);
          if (!mm) fail(ErrorKind::ShapeMismatch, "phi_inverse: no move '" + key + "'");
          tp.push_back(*mm);
        };
        for (MoveId vm : visible) {
          std::string k = gg.move_key(vm);
          if (k == "L.*") {
            push("L." + init_f);
            continue;
          }
          if (k == "R.~") {
            push("R.~");
            continue;
          }
          std::string s = k;
          if (kk < 0 && keyops::strip_prefix(s, "R.c")) {
            size_t colon = s.find(':');
            kk = int(std::stoul(s.substr(0, colon)));
            if (s.substr(colon + 1) != init_h[kk])
              fail(ErrorKind::ShapeMismatch, "phi_inverse: bad entry " + k);
            push("R.c" + std::to_string(j * hn + kk) + ":*");
            continue;
          }
          std::string tag = "R.c" + std::to_string(j * hn + (kk < 0 ? 0 : kk)) + ":";
          if (keyops::strip_prefix(s = k, "L.L.")) {
            push("L." + s);
          } else if (keyops::strip_prefix(s = k, "L.R.")) {
            push(tag + "L." + s);
          } else if (kk >= 0 && keyops::strip_prefix(s = k, "R.c" + std::to_string(kk) + ":")) {
            push(tag + "R." + s);
          } else {
            fail(ErrorKind::ShapeMismatch, "phi_inverse: unroutable key " + k);
          }
        }
        auto r = tau.respond(tp);
        if (!r) return std::nullopt;
        std::string k = tg.move_key(*r);
        std::string mapped;
        std::string s = k;
        if (k == "R.~") {
          mapped = "R.~";
        } else if (keyops::strip_prefix(s, "L.")) {
          mapped = "L.L." + s;
        } else {
          keyops::strip_prefix(s = k, "R.c");
          size_t colon = s.find(':');
          size_t jk2 = std::stoul(s.substr(0, colon));
          std::string rest = s.substr(colon + 1);
          if (jk2 / hn != j) fail(ErrorKind::ShapeMismatch, "phi_inverse: response enters a foreign branch");
          size_t k2 = jk2 % hn;
          if (rest == "*") {
            // hidden entry: becomes the H entry on our side
            mapped = "R.c" + std::to_string(k2) + ":" + init_h[k2];
          } else if (rest.size() > 2 && rest[0] == 'L' && rest[1] == '.') {
            mapped = "L.R." + rest.substr(2);
          } else if (rest.size() > 2 && rest[0] == 'R' && rest[1] == '.') {
            mapped = "R.c" + std::to_string(k2) + ":" + rest.substr(2);
          } else {
            fail(ErrorKind::ShapeMismatch, "phi_inverse: unroutable response " + k);
          }
        }
        PosId vcur = visible.empty() ? gg.root() : gg.move(visible.back()).tgt;
        auto mv = gg.find_move(vcur, mapped);
        if (!mv)
          fail(ErrorKind::ShapeMismatch, "phi_inverse: response '" + mapped + "' not playable");
        return mv;
      };
      out.reindex.push_back(0);
      out.components.push_back(Strategy(rg, oracle, "phi_inv(" + tau.label() + ")"));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// singleton wrappers over pointed games

inline FamMorphism fam_of_strategy(const Strategy& s) {
  return {fam_singleton(detail::hom_source(s.game())), fam_singleton(detail::hom_target(s.game())),
          {0}, {s}};
}

// phi on pointed games: from sigma : A (.) B -> neg(C) to A -> neg(B (.) C).
inline Strategy phi_pointed(const GamePtr& a, const GamePtr& b, const GamePtr& c,
                            const Strategy& sigma) {
  FamObject fa = fam_singleton(a), fb = fam_singleton(b), fc = fam_singleton(c);
  FamMorphism m{fam_tensor(fa, fb), fam_negation(fc), {0}, {sigma}};
  return fam_phi(fa, fb, fc, m).components.at(0);
}

inline Strategy phi_inverse_pointed(const GamePtr& a, const GamePtr& b, const GamePtr& c,
                                    const Strategy& tau) {
  FamObject fa = fam_singleton(a), fb = fam_singleton(b), fc = fam_singleton(c);
  FamMorphism m{fa, fam_negation(fam_tensor(fb, fc)), {0}, {tau}};
  return fam_phi_inverse(fa, fb, fc, m).components.at(0);
}

// A -o neg B := neg(A (.) B)
inline GamePtr lollipop(const GamePtr& a, const GamePtr& b) { return neg({coalesce(a, b)}); }

// ev on a single pointed game: A (.) negA -> bottom
inline Strategy ev_pointed(const GamePtr& a) { return ev_component(fam_singleton(a), 0); }

// Collapse neg(X (.) I.) onto neg(X).
inline GameIso neg_counitor(const GamePtr& x) {
  return neg_iso({coalesce_unitor_right(x)}, {0});
}

// phi with C = 1: from u : X (.) Y -> bottom to X -> neg Y.
inline Strategy phi_curry(const GamePtr& x, const GamePtr& y, const Strategy& u) {
  Strategy raw = phi_pointed(x, y, pointed_unit(), u);
  GamePtr from_game = neg({coalesce(y, pointed_unit())});
  return compose(raw, iso_strategy(GameIso{from_game, neg({y}), neg_counitor(y).fwd,
                                           neg_counitor(y).bwd},
                                   "neg-unitor"));
}

// Action of neg on morphisms: from sigma : A -> B to neg B -> neg A.
inline Strategy neg_mor(const GamePtr& a, const GamePtr& b, const Strategy& sigma) {
  GamePtr nb = neg({b});
  // neg B (.) A -> neg B (.) B -> B (.) neg B -> bottom
  auto u = compose(odot_strategies(copycat(nb), sigma),
                   compose(iso_strategy(coalesce_sym(nb, b), "sym"), ev_pointed(b)));
  return phi_curry(nb, a, u);
}

// Unit of the continuation monad: A -> neg neg A.
inline Strategy dneg_unit(const GamePtr& a) { return phi_curry(a, neg({a}), ev_pointed(a)); }

// Multiplication: neg^4 A -> neg neg A.
inline Strategy dneg_mult(const GamePtr& a) {
  GamePtr na = neg({a});
  return neg_mor(na, neg({neg({na})}), dneg_unit(na));
}

inline Strategy dneg_mor(const GamePtr& a, const GamePtr& b, const Strategy& sigma) {
  return neg_mor(neg({b}), neg({a}), neg_mor(a, b, sigma));
}

// Strength A (.) negneg B -> negneg(A (.) B).
inline Strategy strength(const GamePtr& a, const GamePtr& b) {
  GamePtr ab = coalesce(a, b);
  GamePtr nab = neg({ab});
  GamePtr nb = neg({b});
  GamePtr nnb = neg({nb});
  // v' : (A (.) nab) (.) B  ~  (A (.) B) (.) nab  -> bottom
  GameIso shuffle = compose(
      coalesce_assoc(a, nab, b),
      compose(coalesce_iso(identity_iso(a), coalesce_sym(nab, b)),
              inverse(coalesce_assoc(a, b, nab))));
  auto vprime = compose(iso_strategy(shuffle, "shuffle"), ev_pointed(ab));
  auto v = phi_curry(coalesce(a, nab), b, vprime);  // A (.) nab -> neg B
  // s : (A (.) nnb) (.) nab  ~  (A (.) nab) (.) nnb  -> neg B (.) nnb -> bottom
  GameIso shuffle2 = compose(
      coalesce_assoc(a, nnb, nab),
      compose(coalesce_iso(identity_iso(a), coalesce_sym(nnb, nab)),
              inverse(coalesce_assoc(a, nab, nnb))));
  auto s = compose(iso_strategy(shuffle2, "shuffle2"),
                   compose(odot_strategies(v, copycat(nnb)), ev_pointed(nb)));
  return phi_curry(coalesce(a, nnb), nab, s);  // A (.) nnb -> neg nab
}

// Costrength negneg A (.) B -> negneg(A (.) B).
inline Strategy costrength(const GamePtr& a, const GamePtr& b) {
  GamePtr nna = neg({neg({a})});
  auto t = strength(b, a);  // B (.) nna -> negneg(B (.) A)
  auto swap_in = iso_strategy(coalesce_sym(nna, b), "sym");
  GamePtr ba = coalesce(b, a), ab = coalesce(a, b);
  auto swap_out = dneg_mor(ba, ab, iso_strategy(coalesce_sym(b, a), "sym"));
  return compose(swap_in, compose(t, swap_out));
}

// The two canonical maps negneg A (.) negneg B -> negneg (A (.) B); they differ
// in which side is evaluated first.
inline std::pair<Strategy, Strategy> double_neg_maps(const GamePtr& a, const GamePtr& b) {
  GamePtr ab = coalesce(a, b);
  GamePtr ta = neg({neg({a})}), tb = neg({neg({b})}), tab = neg({neg({ab})});
  // left: evaluate the A side first
  auto left = compose(costrength(a, tb),
                      compose(dneg_mor(coalesce(a, tb), tab, strength(a, b)), dneg_mult(ab)));
  auto right = compose(strength(ta, b),
                       compose(dneg_mor(coalesce(ta, b), tab, costrength(a, b)), dneg_mult(ab)));
  return {left, right};
}

// ---------------------------------------------------------------------------
// modalities on singleton families

inline FamObject fam_modal_affine(const FamObject& f) {
  if (f.size() != 1) fail(ErrorKind::NotSingleton, "the affine modality applies to singletons");
  return fam_singleton(affine_strip(f.at(0)));
}

inline FamObject fam_modal_bang(const FamObject& f) {
  if (f.size() != 1) fail(ErrorKind::NotSingleton, "the exponential applies to singletons");
  return fam_singleton(pointed_exponential(f.at(0)));
}

// ---------------------------------------------------------------------------
// distributivity (A (x) B) (+) (A (x) C)  ~  A (x) (B (+) C)

inline std::pair<FamMorphism, FamMorphism> distributivity_iso(const FamObject& a,
                                                              const FamObject& b,
                                                              const FamObject& c) {
  FamObject lhs = fam_coproduct(fam_tensor(a, b), fam_tensor(a, c));
  FamObject rhs = fam_tensor(a, fam_coproduct(b, c));
  size_t nb = b.size(), nc = c.size(), na = a.size();
  FamMorphism fwd{lhs, rhs, {}, {}}, bwd{rhs, lhs, {}, {}};
  bwd.reindex.resize(rhs.size());
  bwd.components.resize(rhs.size());
  size_t idx = 0;
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < nb; ++j, ++idx) {
      size_t r = i * (nb + nc) + j;
      fwd.reindex.push_back(r);
      fwd.components.push_back(copycat(lhs.at(idx)));
      bwd.reindex[r] = idx;
      bwd.components[r] = copycat(rhs.at(r));
    }
  for (size_t i = 0; i < na; ++i)
    for (size_t k = 0; k < nc; ++k, ++idx) {
      size_t r = i * (nb + nc) + nb + k;
      fwd.reindex.push_back(r);
      fwd.components.push_back(copycat(lhs.at(idx)));
      bwd.reindex[r] = idx;
      bwd.components[r] = copycat(rhs.at(r));
    }
  return {fwd, bwd};
}

// ---------------------------------------------------------------------------
// singleton fixpoints

// From m : {!A} -> {A} (singleton), the fixpoint {I.} -> {A}.
inline FamMorphism singleton_fixpoint(const FamMorphism& m) {
  if (m.from.size() != 1 || m.to.size() != 1)
    fail(ErrorKind::NotSingleton, "the fixpoint operator is restricted to singleton objects");
  GamePtr pa = m.from.at(0);
  GamePtr a = m.to.at(0);
  if (pa != pointed_exponential(a))
    fail(ErrorKind::ShapeMismatch, "fixpoint needs a morphism !A -> A");
  const Strategy& sigma = m.components[0];
  GamePtr n = residual_after_initial(affine_strip(a));
  GamePtr bn = bang(n);
  std::string ia = a->init_key();
  // the residual of sigma after the handshake, as a strategy !N -> N
  GamePtr core_game = tensor(dual(bn), n);
  auto core_oracle = [sigma, ia](const Game& g, const Play& visible) -> std::optional<MoveId> {
    const Game& sg = *sigma.game();
    Play sp;
    auto push = [&](const std::string& key) {
      PosId cur = sp.empty() ? sg.root() : sg.move(sp.back()).tgt;
      auto mm = sg.find_move(cur, key);
      if (!mm) fail(ErrorKind::ShapeMismatch, "fixpoint core: no move '" + key + "'");
      sp.push_back(*mm);
    };
    push("L.^");
    push("R." + ia);
    for (MoveId vm : visible) push(g.move_key(vm));
    auto r = sigma.respond(sp);
    if (!r) return std::nullopt;
    PosId vcur = visible.empty() ? g.root() : g.move(visible.back()).tgt;
    auto mv = g.find_move(vcur, sg.move_key(*r));
    if (!mv) fail(ErrorKind::ShapeMismatch, "fixpoint core: response not playable");
    return mv;
  };
  Strategy core(core_game, core_oracle, "core(" + sigma.label() + ")");
  Strategy fix_n = fixpoint(core);  // 1 -> N on tensor(1, N)
  GamePtr iu = pointed_unit();
  GamePtr rg = tensor(dual(iu), a);
  auto oracle = [fix_n, ia](const Game& g, const Play& visible) -> std::optional<MoveId> {
    if (!visible.empty() && g.move_key(visible.back()) == "L.^") {
      PosId vcur = g.move(visible.back()).tgt;
      return g.find_move(vcur, "R." + ia);
    }
    const Game& fg = *fix_n.game();
    Play fp;
    for (MoveId vm : visible) {
      std::string k = g.move_key(vm);
      if (k == "L.^" || k == "R." + ia) continue;
      PosId cur = fp.empty() ? fg.root() : fg.move(fp.back()).tgt;
      auto mm = fg.find_move(cur, k);
      if (!mm) fail(ErrorKind::ShapeMismatch, "fixpoint: no core move '" + k + "'");
      fp.push_back(*mm);
    }
    auto r = fix_n.respond(fp);
    if (!r) return std::nullopt;
    PosId vcur = visible.empty() ? g.root() : g.move(visible.back()).tgt;
    auto mv = g.find_move(vcur, fg.move_key(*r));
    if (!mv) fail(ErrorKind::ShapeMismatch, "fixpoint: response not playable");
    return mv;
  };
  Strategy fix(rg, oracle, "fix(" + sigma.label() + ")");
  return {fam_unit(), m.to, {0}, {fix}};
}

// ---------------------------------------------------------------------------
// comparison

inline bool fam_equal(const FamMorphism& f, const FamMorphism& g, size_t depth,
                      std::string* why = nullptr) {
  if (!(f.from == g.from) || !(f.to == g.to) || f.reindex != g.reindex) {
    if (why) *why = "shape or reindexing differs";
    return false;
  }
  for (size_t i = 0; i < f.components.size(); ++i) {
    std::vector<std::string> w;
    if (!strategies_equal(f.components[i], g.components[i], depth, nullptr, &w)) {
      if (why) {
        *why = "component " + std::to_string(i) + " differs";
        for (const auto& kk : w) *why += " " + kk;
      }
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// sample pointed games

// The boolean object of the chosen discipline: neg ( [modality] neg (1 (+) 1) ).
inline GamePtr bool_object(Discipline d) {
  GamePtr two = neg({pointed_unit(), pointed_unit()});
  switch (d) {
    case Discipline::Linear: return neg({two});
    case Discipline::Affine: return neg({affine_strip(two)});
    case Discipline::Exponential: return neg({pointed_exponential(two)});
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// adjunction and law checks at the pointed / family level

// Enumerate play sets of transverse well-bracketed strategies on a hom game
// that respond whenever a legal response exists.
inline std::vector<std::vector<Play>> responsive_strategies(const GamePtr& hom, size_t depth) {
  std::vector<std::vector<Play>> out;
  struct Walker {
    const Game& g;
    size_t depth;
    std::vector<std::vector<Play>>& out;
    std::vector<Play> plays{{}};

    std::vector<Play> odd_ext(const Play& even) {
      std::vector<Play> res;
      if (even.size() + 2 > depth) return res;
      PosId pos = even.empty() ? g.root() : g.move(even.back()).tgt;
      for (MoveId m : g.moves_from(pos)) {
        if (g.polarity(m) != kOpponent) continue;
        Play odd = even;
        odd.push_back(m);
        res.push_back(std::move(odd));
      }
      return res;
    }

    bool admissible(const Play& even) {
      // transverse + well-bracketed, checked on the new play only
      if (even.size() == 2) {
        if (g.move_key(even[0]).rfind("L.", 0) != 0) return false;
        if (g.move_key(even[1]).rfind("R.", 0) != 0) return false;
      }
      std::vector<PosId> at{g.root()};
      for (MoveId m : even) at.push_back(g.move(m).tgt);
      for (size_t i = 0; i + 1 < even.size(); i += 2) {
        ChainState st = ChainState::at(g, at[i]);
        for (size_t j = i; j < even.size(); ++j) st.step(g, even[j]);
        ResourceCount k = st.kappa(g, at[even.size()]);
        if (k.plus == 0 && k.minus != 0) return false;
      }
      return true;
    }

    void walk(std::vector<Play> pending, size_t idx) {
      if (idx == pending.size()) {
        out.push_back(plays);
        return;
      }
      Play odd = pending[idx];
      PosId pos = g.move(odd.back()).tgt;
      bool any = false;
      for (MoveId m : g.moves_from(pos)) {
        if (g.polarity(m) != kProponent) continue;
        Play even = odd;
        even.push_back(m);
        plays.push_back(even);
        if (admissible(even)) {
          any = true;
          auto more = odd_ext(even);
          auto next = pending;
          next.insert(next.end(), more.begin(), more.end());
          walk(next, idx + 1);
        }
        plays.pop_back();
      }
      if (!any) walk(pending, idx + 1);  // genuinely stuck: allowed
    }
  };
  Walker w{*hom, depth, out};
  w.walk(w.odd_ext({}), 0);
  return out;
}

// Unit/counit content of the two resource modalities plus the terminality of
// the coalesced-tensor unit.
inline LawReport modality_adjunction_check(size_t depth) {
  LawReport rep;
  GamePtr blin = bool_object(Discipline::Linear);
  GamePtr iu = pointed_unit();
  auto law = [&](const std::string& name, auto fn) { detail::run_law(rep, name, depth, fn); };

  auto true_p = routed_strategy(tensor(dual(iu), blin), "true",
                                [](const Game& gg, const Play& odd) -> std::optional<std::string> {
                                  std::string k = gg.move_key(odd.back());
                                  if (k == "L.^") return "R.~";
                                  if (k == "R.c0:~") return "R.c0:c0:^";
                                  return std::nullopt;
                                });

  law("strip-counit-on-affine", [&](std::vector<std::string>& w) {
    // on an affine game the counit is the identity copycat
    GamePtr aff = affine_strip(blin);
    return strategies_equal(strip_counit(aff), copycat(aff), depth, nullptr, &w);
  });
  law("strip-idempotent", [&](std::vector<std::string>&) {
    return affine_strip(affine_strip(blin)) == affine_strip(blin);
  });
  law("strip-comonad-counit", [&](std::vector<std::string>& w) {
    auto lhs = compose(strip_promote(true_p), strip_counit(blin));
    return strategies_equal(lhs, true_p, depth, nullptr, &w);
  });
  law("strip-promote-counit", [&](std::vector<std::string>& w) {
    auto lhs = strip_promote(strip_counit(blin));
    return strategies_equal(lhs, copycat(affine_strip(blin)), depth, nullptr, &w);
  });
  law("pexp-comonad-counit", [&](std::vector<std::string>& w) {
    auto f = pexp_counit(blin);
    auto lhs = compose(pexp_promote(f, {""}), f);
    return strategies_equal(lhs, f, depth, nullptr, &w);
  });
  law("pexp-promote-counit", [&](std::vector<std::string>& w) {
    auto lhs = pexp_promote(pexp_counit(blin), {""});
    return strategies_equal(lhs, copycat(pointed_exponential(blin)), depth, nullptr, &w);
  });
  law("pexp-comonad-assoc", [&](std::vector<std::string>& w) {
    auto f = pexp_counit(blin);
    auto fp = pexp_promote(f, {""});
    auto lhs = pexp_promote(compose(fp, f), {""});
    auto rhs = compose(fp, pexp_promote(f, {""}));
    return strategies_equal(lhs, rhs, depth, nullptr, &w);
  });
  law("pexp-contract-counit", [&](std::vector<std::string>& w) {
    GamePtr pb = pointed_exponential(blin);
    auto lhs = compose(pexp_contract(blin), odot_strategies(pexp_weaken(blin), copycat(pb)));
    auto iso = hom_iso(identity_iso(pb), coalesce_unitor_left(pb));
    return strategies_equal(lhs, copycat(pb), depth, &iso, &w);
  });
  law("unit-terminal-among-affine", [&](std::vector<std::string>&) {
    for (const GamePtr& w : {affine_strip(blin), iu, pointed_exponential(blin)}) {
      auto all = responsive_strategies(tensor(dual(w), iu), 6);
      size_t nonempty = 0;
      for (const auto& ps : all)
        if (ps.size() > 1) nonempty++;
      if (nonempty != 1) return false;
    }
    return true;
  });
  return rep;
}

// phi round-trips, naturality, distributivity, and the modality checks: the
// tensorial-logic side of the law suite.
inline LawReport tensorial_laws(size_t depth) {
  LawReport rep = modality_adjunction_check(depth);
  GamePtr iu = pointed_unit();
  GamePtr two = neg({iu, iu});
  auto law = [&](const std::string& name, auto fn) { detail::run_law(rep, name, depth, fn); };

  // sigma : I. (.) I. -> neg(two), answering true
  auto sigma = routed_strategy(tensor(dual(coalesce(iu, iu)), neg({two})), "sigma",
                               [](const Game& gg, const Play& odd) -> std::optional<std::string> {
                                 std::string k = gg.move_key(odd.back());
                                 if (k == "L.*") return "R.~";
                                 if (k == "R.c0:~") return "R.c0:c0:^";
                                 return std::nullopt;
                               });

  law("phi-roundtrip", [&](std::vector<std::string>& w) {
    auto t = phi_pointed(iu, iu, two, sigma);
    auto back = phi_inverse_pointed(iu, iu, two, t);
    return strategies_equal(back, sigma, depth, nullptr, &w);
  });
  law("phi-naturality", [&](std::vector<std::string>& w) {
    // phi((tau (.) id) ; sigma') = tau ; phi(sigma') for tau : I. -> two
    auto tau = routed_strategy(tensor(dual(iu), two), "tau",
                               [](const Game& gg, const Play& odd) -> std::optional<std::string> {
                                 if (gg.move_key(odd.back()) == "L.^") return "R.~";
                                 return std::nullopt;
                               });
    auto sigma2 = routed_strategy(
        tensor(dual(coalesce(two, iu)), neg({iu})), "sigma2",
        [](const Game& gg, const Play& odd) -> std::optional<std::string> {
          std::string k = gg.move_key(odd.back());
          if (k == "L.*") return "R.~";
          if (k == "R.c0:^") return "L.L.c0:^";
          return std::nullopt;
        });
    auto lhs = phi_pointed(iu, iu, iu, compose(odot_strategies(tau, copycat(iu)), sigma2));
    auto rhs = compose(tau, phi_pointed(two, iu, iu, sigma2));
    return strategies_equal(lhs, rhs, depth, nullptr, &w);
  });
  law("distributivity-roundtrip", [&](std::vector<std::string>&) {
    FamObject x = fam_singleton(two), y = fam_unit(), z = {{iu, two}};
    auto [fwd, bwd] = distributivity_iso(x, y, z);
    std::string why;
    bool a = fam_equal(fam_compose(fwd, bwd), fam_identity(fwd.from), depth, &why);
    bool b = fam_equal(fam_compose(bwd, fwd), fam_identity(fwd.to), depth, &why);
    return a && b;
  });
  law("copair-of-injections", [&](std::vector<std::string>&) {
    FamObject x = fam_singleton(two), y = fam_unit();
    auto id2 = fam_copair(fam_inl(x, y), fam_inr(x, y));
    std::string why;
    return fam_equal(id2, fam_identity(fam_coproduct(x, y)), depth, &why);
  });
  law("zero-absorbs-tensor", [&](std::vector<std::string>&) {
    return fam_tensor(fam_zero(), fam_singleton(two)).size() == 0;
  });
  law("double-neg-maps-wb", [&](std::vector<std::string>& w) {
    auto [l, r] = double_neg_maps(two, two);
    return is_wb_strategy(l, depth, &w) && is_wb_strategy(r, depth, &w) && is_transverse(l) &&
           is_transverse(r);
  });
  law("double-neg-maps-differ", [&](std::vector<std::string>&) {
    auto [l, r] = double_neg_maps(two, two);
    std::vector<std::string> w;
    return !strategies_equal(l, r, std::max<size_t>(depth, 10), nullptr, &w);
  });
  return rep;
}

}  // namespace mbg
