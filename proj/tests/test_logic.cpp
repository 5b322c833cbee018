#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mbg/logic.hpp>

using namespace mbg;
using namespace mbg::logic;

namespace {

Sequent goal_bool() { return Sequent{{}, f_neg(f_neg(f_plus(f_one(), f_one())))}; }

ProofNode proof_of(const std::string& text) { return parse_proof(sx::parse(text)); }

}  // namespace

TEST_CASE("formula parsing and printing") {
  auto f = parse_formula(sx::parse("(neg (neg (oplus one one)))"));
  CHECK(f == f_neg(f_neg(f_plus(f_one(), f_one()))));
  CHECK(parse_formula(sx::parse("(bang bool)")) == f_bang(f_bool()));
  CHECK(parse_formula(sx::parse("x")) == f_atom("x"));
}

TEST_CASE("the two boolean proofs check") {
  auto tt = proof_of("(neg-right (neg-left (oplus-right-1 (unit-right))))");
  auto ff = proof_of("(neg-right (neg-left (oplus-right-2 (unit-right))))");
  CHECK_NOTHROW(check_proof(goal_bool(), tt));
  CHECK_NOTHROW(check_proof(goal_bool(), ff));

  auto checked = check_proof(goal_bool(), tt);
  CHECK(checked.premises.size() == 1);
  CHECK(checked.premises[0].seq.str() == "neg (1 (+) 1) |-");
}

TEST_CASE("rule violations are rejected with the right errors") {
  // contraction on a plain hypothesis
  auto bad1 = proof_of("(contraction (at 0) (axiom))");
  try {
    check_proof(Sequent{{f_one()}, f_one()}, bad1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::ContractionOnNonBang);
  }
  // contraction for the affine modality does not exist
  auto bad2 = proof_of("(affine-contraction (at 0) (axiom))");
  try {
    check_proof(Sequent{{f_affine(f_one())}, f_one()}, bad2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::RuleMismatch);
  }
  // contraction targeting an affine hypothesis
  auto bad3 = proof_of("(contraction (at 0) (axiom))");
  try {
    check_proof(Sequent{{f_affine(f_one())}, f_one()}, bad3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::ContractionOnNonBang);
  }
  // strengthening requires a fully modal context
  auto bad4 = proof_of("(strengthening (axiom))");
  try {
    check_proof(Sequent{{f_one()}, f_bang(f_one())}, bad4);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::RuleMismatch);
  }
  // otimes-right without a split annotation
  auto bad5 = proof_of("(otimes-right (unit-right) (unit-right))");
  try {
    check_proof(Sequent{{}, f_tensor(f_one(), f_one())}, bad5);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::ContextSplitError);
  }
}

TEST_CASE("the boolean interpretations have the advertised shapes") {
  auto lin = interpret_formula(f_bool(), Discipline::Linear);
  CHECK(lin.size() == 1);
  CHECK(lin.at(0) == bool_object(Discipline::Linear));
  // P (open), O (close + open), then the two answers
  auto g = lin.at(0);
  CHECK_NOTHROW(path_from_keys(*g, g->root(), {"~", "c0:~", "c0:c0:^"}));
  CHECK_NOTHROW(path_from_keys(*g, g->root(), {"~", "c0:~", "c0:c1:^"}));

  auto aff = interpret_formula(f_bool(), Discipline::Affine).at(0);
  auto ask_lin = path_from_keys(*g, g->root(), {"~", "c0:~"});
  auto ask_aff = path_from_keys(*aff, aff->root(), {"~", "c0:~"});
  CHECK(kappa(*g, ask_lin) == ResourceCount{0, 1});
  CHECK(kappa(*aff, ask_aff) == ResourceCount{0, 0});

  CHECK(interpret_formula(f_one(), Discipline::Linear).at(0) == pointed_unit());
  try {
    interpret_formula(f_atom("nope"), Discipline::Linear);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::UnboundAtom);
  }
}

TEST_CASE("the two boolean proofs interpret to distinct strategies") {
  auto tt = interpret_proof(check_proof(goal_bool(), proof_of("(neg-right (neg-left (oplus-right-1 (unit-right))))")),
                            Discipline::Linear);
  auto ff = interpret_proof(check_proof(goal_bool(), proof_of("(neg-right (neg-left (oplus-right-2 (unit-right))))")),
                            Discipline::Linear);
  CHECK(tt.from == fam_unit());
  CHECK(tt.to == fam_singleton(bool_object(Discipline::Linear)));

  auto plays = plays_as_keys(tt.components[0], 4);
  std::vector<std::vector<std::string>> expect{
      {},
      {"L.^", "R.~"},
      {"L.^", "R.~", "R.c0:~", "R.c0:c0:^"}};
  std::sort(expect.begin(), expect.end());
  CHECK(plays == expect);

  std::vector<std::string> w;
  CHECK_FALSE(strategies_equal(tt.components[0], ff.components[0], 6, nullptr, &w));
  CHECK(is_wb_strategy(tt.components[0], 8));
  CHECK(is_transverse(tt.components[0]));
}

TEST_CASE("axiom interprets to copycat") {
  Sequent s{{f_bool()}, f_bool()};
  auto m = interpret_proof(check_proof(s, proof_of("(axiom)")), Discipline::Linear);
  CHECK(strategies_equal(m.components[0], copycat(bool_object(Discipline::Linear)), 8));
}

TEST_CASE("cutting against the axiom preserves the interpretation") {
  auto tt = proof_of("(neg-right (neg-left (oplus-right-1 (unit-right))))");
  auto cut = proof_of(
      "(cut (formula (neg (neg (oplus one one)))) (split 0)"
      " (neg-right (neg-left (oplus-right-1 (unit-right)))) (axiom))");
  auto direct = interpret_proof(check_proof(goal_bool(), tt), Discipline::Linear);
  auto cutted = interpret_proof(check_proof(goal_bool(), cut), Discipline::Linear);
  CHECK(fam_equal(direct, cutted, 8));
}

TEST_CASE("modal boolean proofs per discipline") {
  // |- neg (m (neg (1 (+) 1))) via dereliction under the negation
  auto tree = proof_of("(neg-right (dereliction (neg-left (oplus-right-1 (unit-right)))))");
  for (Discipline d : {Discipline::Affine, Discipline::Exponential}) {
    Formula m = d == Discipline::Affine ? f_affine(f_neg(f_plus(f_one(), f_one())))
                                        : f_bang(f_neg(f_plus(f_one(), f_one())));
    Sequent goal{{}, f_neg(m)};
    auto mor = interpret_proof(check_proof(goal, tree), d);
    CHECK(mor.to == fam_singleton(bool_object(d)));
    CHECK(is_wb_strategy(mor.components[0], 8));
    CHECK(mor.components[0].plays_upto(8).size() >= 3);
  }
}

TEST_CASE("structural rules interpret soundly") {
  // weakening: bool, !1 |- bool by dropping the exponential hypothesis
  Sequent s{{f_bool(), f_bang(f_one())}, f_bool()};
  auto wk = proof_of("(weakening (at 1) (axiom))");
  auto m = interpret_proof(check_proof(s, wk), Discipline::Linear);
  CHECK(m.from.size() == 1);
  CHECK(is_wb_strategy(m.components[0], 8));

  // contraction: !bool |- !bool (x) !bool via otimes-right over two copies
  Sequent s2{{f_bang(f_bool())}, f_tensor(f_bang(f_bool()), f_bang(f_bool()))};
  auto ct = proof_of("(contraction (at 0) (otimes-right (split 1) (axiom) (axiom)))");
  auto m2 = interpret_proof(check_proof(s2, ct), Discipline::Linear);
  CHECK(is_wb_strategy(m2.components[0], 6));
  CHECK(is_transverse(m2.components[0]));

  // permute then tensor
  Sequent s3{{f_bool(), f_one()}, f_tensor(f_one(), f_bool())};
  auto pm = proof_of("(permute (perm 1 0) (otimes-right (split 1) (axiom) (axiom)))");
  auto m3 = interpret_proof(check_proof(s3, pm), Discipline::Linear);
  CHECK(is_wb_strategy(m3.components[0], 8));
}
