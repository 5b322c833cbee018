#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mbg/fam.hpp>

#include "fixtures.hpp"

using namespace mbg;

namespace {

GamePtr two() { return neg({pointed_unit(), pointed_unit()}); }

Strategy true_on(const GamePtr& blin) {
  return routed_strategy(tensor(dual(pointed_unit()), blin), "true",
                         [](const Game& gg, const Play& odd) -> std::optional<std::string> {
                           std::string k = gg.move_key(odd.back());
                           if (k == "L.^") return "R.~";
                           if (k == "R.c0:~") return "R.c0:c0:^";
                           return std::nullopt;
                         });
}

}  // namespace

TEST_CASE("pointedness and transversality") {
  CHECK(pointed_unit()->is_pointed());
  CHECK_FALSE(fixtures::bool_game()->is_pointed());
  CHECK(two()->is_pointed());
  CHECK(is_transverse(copycat(pointed_unit())));
  CHECK(is_transverse(copycat(two())));
}

TEST_CASE("the coalesced tensor") {
  auto b = bool_object(Discipline::Linear);
  auto iu = pointed_unit();

  auto c = coalesce(b, iu);
  auto iso = coalesce_unitor_right(b);
  // plays of A (.) I. map onto plays of A under the canonical renaming
  std::set<std::vector<std::string>> mapped;
  for (const auto& p : enumerate_plays(*c, 4)) {
    auto ks = path_keys(*c, p);
    for (auto& k : ks) k = iso.fwd(k);
    mapped.insert(ks);
  }
  std::set<std::vector<std::string>> direct;
  for (const auto& p : enumerate_plays(*b, 4)) direct.insert(path_keys(*b, p));
  CHECK(mapped == direct);

  // symmetric up to renaming
  auto ab = coalesce(b, two());
  auto ba = coalesce(two(), b);
  auto sym = coalesce_sym(b, two());
  std::set<std::vector<std::string>> lhs, rhs;
  for (const auto& p : enumerate_plays(*ab, 4)) {
    auto ks = path_keys(*ab, p);
    for (auto& k : ks) k = sym.fwd(k);
    lhs.insert(ks);
  }
  for (const auto& p : enumerate_plays(*ba, 4)) rhs.insert(path_keys(*ba, p));
  CHECK(lhs == rhs);

  CHECK(check_axioms(*ab, 6).ok());
  try {
    coalesce(fixtures::bool_game(), iu);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::NotPointed);
  }
}

TEST_CASE("negation lifts the dual with a fresh query") {
  auto iu = pointed_unit();
  auto n = neg({iu});
  // Player move opening the query, then the Opponent entry complying with it
  auto plays = enumerate_plays(*n, 3);
  CHECK(plays.size() == 3);
  auto p = path_from_keys(*n, n->root(), {"~", "c0:^"});
  auto hub = n->move(*n->find_move(n->root(), "~")).tgt;
  CHECK(n->queries_at(hub).size() == 1);
  CHECK(n->queries_at(hub)[0].pol == kProponent);
  CHECK(kappa(*n, Path{n->root(), {p.moves[0]}}) == ResourceCount{1, 0});
  CHECK(kappa(*n, p) == ResourceCount{0, 0});

  // the linear boolean: both answers close the inner query
  auto b = bool_object(Discipline::Linear);
  auto full_t = path_from_keys(*b, b->root(), {"~", "c0:~", "c0:c0:^"});
  auto full_f = path_from_keys(*b, b->root(), {"~", "c0:~", "c0:c1:^"});
  CHECK(is_wb_play(*b, full_t));
  CHECK(is_wb_play(*b, full_f));
  // dropping the answer leaves the inner Opponent query open
  auto ask = path_from_keys(*b, b->root(), {"~", "c0:~"});
  CHECK(kappa(*b, ask) == ResourceCount{0, 1});
  CHECK(check_axioms(*b, 6).ok());

  CHECK(fam_negation(fam_singleton(iu)).at(0) == lift_negation(iu));
}

TEST_CASE("the affine strip") {
  auto b = bool_object(Discipline::Linear);
  auto ba = bool_object(Discipline::Affine);
  // the affine boolean no longer opens the inner query
  auto ask = path_from_keys(*ba, ba->root(), {"~", "c0:~"});
  CHECK(kappa(*ba, ask) == ResourceCount{0, 0});
  CHECK(check_axioms(*ba, 6).ok());

  auto iu = pointed_unit();
  CHECK(affine_strip(iu) == iu);                            // already affine
  auto stripped = affine_strip(two());
  CHECK(affine_strip(stripped) == stripped);                // idempotent
  CHECK(stripped->queries_at(stripped->move(stripped->initial_move()).tgt).empty());
  (void)b;
}

TEST_CASE("the pointed exponential") {
  auto t = two();
  auto pt = pointed_exponential(t);
  CHECK(pt->is_pointed());
  // open two copies of the stripped core
  CHECK_NOTHROW(path_from_keys(*pt, pt->root(), {"^", "o1:c0:^", "o2:c1:^"}));
  CHECK(check_axioms(*pt, 6).ok());

  auto blin = bool_object(Discipline::Linear);
  CHECK(check_axioms(*pointed_exponential(blin), 6).ok());
  CHECK(check_axioms(*bool_object(Discipline::Exponential), 6).ok());
}

TEST_CASE("odot of strategies and discard") {
  auto blin = bool_object(Discipline::Linear);
  auto both = odot_strategies(true_on(blin), true_on(blin));
  CHECK(is_transverse(both));
  CHECK(is_wb_strategy(both, 8));
  // projections recover the components through the fused handshake
  CHECK(both.plays_upto(8).size() > 1);

  auto d = discard(affine_strip(blin));
  CHECK(is_wb_strategy(d, 8));
  CHECK(d.plays_upto(6).size() == 2);
}

TEST_CASE("modality maps and adjunction checks") {
  auto rep = modality_adjunction_check(6);
  for (const auto& r : rep.results) {
    INFO(r.name, " witness=", r.witness);
    CHECK(r.holds);
  }
}

TEST_CASE("tensorial law suite") {
  auto rep = tensorial_laws(8);
  for (const auto& r : rep.results) {
    INFO(r.name, " witness=", r.witness);
    CHECK(r.holds);
  }
}

TEST_CASE("phi_inverse of the identity is evaluation") {
  auto iu = pointed_unit();
  auto c = two();
  auto nc = neg({c});
  auto ev = ev_pointed(c);
  CHECK(is_transverse(ev));
  CHECK(is_wb_strategy(ev, 8));

  // view id : negC -> negC as negC -> neg(C (.) I.) and curry it back
  auto pad = iso_strategy(inverse(neg_counitor(c)), "pad");
  auto evaluated = phi_inverse_pointed(nc, c, iu, pad);  // negC (.) C -> bottom
  auto expected = compose(iso_strategy(coalesce_sym(nc, c), "sym"), ev_pointed(c));
  CHECK(strategies_equal(evaluated, expected, 8));
}

TEST_CASE("strength and the double negation maps") {
  auto t = two();
  auto iu = pointed_unit();

  auto st = strength(t, t);
  CHECK(is_transverse(st));
  CHECK(is_wb_strategy(st, 10));

  auto st_unit = strength(t, iu);
  CHECK(is_transverse(st_unit));
  CHECK(is_wb_strategy(st_unit, 10));
  CHECK(st_unit.plays_upto(8).size() > 1);

  auto [l, r] = double_neg_maps(t, t);
  CHECK(is_wb_strategy(l, 10));
  CHECK(is_wb_strategy(r, 10));
  std::vector<std::string> w;
  CHECK_FALSE(strategies_equal(l, r, 10, nullptr, &w));
  CHECK(!w.empty());
}

TEST_CASE("lollipop") {
  auto iu = pointed_unit();
  auto t = two();
  CHECK(lollipop(iu, t) == neg({coalesce(iu, t)}));
  // lollipop(I., B) is neg B up to the coalesce unitor
  auto g = lollipop(iu, t);
  auto nb = neg({t});
  auto iso = neg_iso({coalesce_unitor_left(t)}, {0});
  std::set<std::vector<std::string>> lhs, rhs;
  for (const auto& p : enumerate_plays(*g, 4)) {
    auto ks = path_keys(*g, p);
    for (auto& k : ks) k = iso.fwd(k);
    lhs.insert(ks);
  }
  for (const auto& p : enumerate_plays(*nb, 4)) rhs.insert(path_keys(*nb, p));
  CHECK(lhs == rhs);
}

TEST_CASE("hom bijection by brute force on tiny families") {
  auto iu = pointed_unit();
  FamObject f = fam_singleton(iu);
  FamObject g = {{iu, iu}};
  FamObject h = fam_singleton(two());

  GamePtr negh = neg(h.components);
  // all responsive transverse WB strategy rows on the left side
  std::vector<std::vector<std::vector<Play>>> per_cell;
  FamObject fg = fam_tensor(f, g);
  for (size_t idx = 0; idx < fg.size(); ++idx)
    per_cell.push_back(responsive_strategies(tensor(dual(fg.at(idx)), negh), 6));
  size_t lhs_count = 1;
  for (const auto& cell : per_cell) lhs_count *= cell.size();

  GamePtr neggh = neg(fam_tensor(g, h).components);
  auto rhs = responsive_strategies(tensor(dual(f.at(0)), neggh), 6);
  CHECK(lhs_count == rhs.size());
  CHECK(rhs.size() == 4);  // two branch choices per component of G

  // round-trip through phi on every row
  for (const auto& ps0 : per_cell[0])
    for (const auto& ps1 : per_cell[1]) {
      FamMorphism m{fg, fam_negation(h), {0, 0},
                    {make_strategy(tensor(dual(fg.at(0)), negh), ps0, "s0"),
                     make_strategy(tensor(dual(fg.at(1)), negh), ps1, "s1")}};
      auto t = fam_phi(f, g, h, m);
      auto back = fam_phi_inverse(f, g, h, t);
      std::string why;
      CHECK(fam_equal(back, m, 6, &why));
      if (!fam_equal(back, m, 6, &why)) { INFO(why); }
      // the image is one of the enumerated right-hand strategies
      bool found = false;
      for (const auto& cand : rhs) {
        auto cs = make_strategy(t.components[0].game(), cand, "cand");
        std::vector<std::string> w;
        if (strategies_equal(t.components[0], cs, 6, nullptr, &w)) found = true;
      }
      CHECK(found);
    }
}
