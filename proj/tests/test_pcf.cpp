#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mbg/pcf.hpp>

using namespace mbg;
using namespace mbg::pcf;

namespace {

Term term_of(const std::string& s) { return parse_term(sx::parse(s)); }

}  // namespace

TEST_CASE("typing") {
  CHECK(pcf_typecheck(term_of("tt")) == t_bool());
  CHECK(pcf_typecheck(term_of("(lam (f (lolli bool bool)) (app f tt))")) ==
        t_lolli(t_lolli(t_bool(), t_bool()), t_bool()));
  CHECK(pcf_typecheck(term_of("(fix (lam (x (bang bool)) tt))")) == t_bool());
  CHECK(pcf_typecheck(term_of("(fix (lam (x (bang bool)) (derelict x)))")) == t_bool());
  CHECK(pcf_typecheck(term_of("(if tt ff tt)")) == t_bool());

  try {
    pcf_typecheck(term_of("(lam (x bool) tt)"));  // linear variable unused
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::LinearityViolation);
  }
  try {
    pcf_typecheck(term_of("(lam (x bool) (if x x x))"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::LinearityViolation);
  }
  try {
    pcf_typecheck(term_of("(app tt tt)"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::TypeError);
  }
  CHECK(pcf_typecheck(term_of("(lam (x (affine bool)) tt)")) == t_lolli(t_affine(t_bool()), t_bool()));
}

TEST_CASE("ground booleans evaluate") {
  for (Discipline d : {Discipline::Linear, Discipline::Affine, Discipline::Exponential}) {
    CHECK(pcf_eval(term_of("tt"), d) == EvalResult::TT);
    CHECK(pcf_eval(term_of("ff"), d) == EvalResult::FF);
  }
}

TEST_CASE("conditionals") {
  CHECK(pcf_eval(term_of("(if tt ff tt)"), Discipline::Linear) == EvalResult::FF);
  CHECK(pcf_eval(term_of("(if ff ff tt)"), Discipline::Linear) == EvalResult::TT);
  CHECK(pcf_eval(term_of("(if tt (if tt tt ff) ff)"), Discipline::Linear) == EvalResult::TT);
  CHECK(pcf_eval(term_of("(if tt ff tt)"), Discipline::Affine) == EvalResult::FF);
  CHECK(pcf_eval(term_of("(if tt ff tt)"), Discipline::Exponential) == EvalResult::FF);
}

TEST_CASE("beta through the currying bijection") {
  CHECK(pcf_eval(term_of("(app (lam (x bool) x) tt)"), Discipline::Linear) == EvalResult::TT);
  CHECK(pcf_eval(term_of("(app (lam (x bool) (if x ff tt)) tt)"), Discipline::Linear) ==
        EvalResult::FF);
  CHECK(pcf_eval(term_of("(app (app (lam (x bool) (lam (y bool) (if x y (if y ff tt)))) tt) ff)"),
                 Discipline::Linear) == EvalResult::FF);
}

TEST_CASE("fix of a constant converges, fix of dereliction diverges") {
  CHECK(pcf_eval(term_of("(fix (lam (x (bang bool)) tt))"), Discipline::Linear) == EvalResult::TT);
  CHECK(pcf_eval(term_of("(fix (lam (x (bang bool)) (derelict x)))"), Discipline::Linear) ==
        EvalResult::Diverge);
}

TEST_CASE("derelict and promote") {
  CHECK(pcf_eval(term_of("(app (lam (x (bang bool)) (derelict x)) (promote tt))"), Discipline::Linear) ==
        EvalResult::TT);
  CHECK(pcf_eval(term_of("(app (lam (x (bang bool)) tt) (promote ff))"), Discipline::Linear) ==
        EvalResult::TT);
}

TEST_CASE("the applied-function denotation carries the expected play") {
  auto m = pcf_elaborate(term_of("(lam (f (lolli bool bool)) (app f tt))"), Discipline::Linear);
  const Strategy& s = m.components.at(0);
  CHECK(is_wb_strategy(s, 8));
  CHECK(is_transverse(s));

  // the question chain q1.q2.q3.tt3 in its lifted form, derived by hand
  std::vector<std::string> want{"L.^",
                                "R.~",
                                "R.c0:*",
                                "R.c0:L.c0:*",
                                "R.c0:L.c0:L.c0:~",
                                "R.c0:L.c0:L.c0:c0:^"};
  auto plays = plays_as_keys(s, 6);
  CHECK(std::find(plays.begin(), plays.end(), want) != plays.end());

  // and the full dialogue ends by answering the outer boolean with tt
  std::vector<std::string> full = want;
  full.push_back("R.c0:L.c0:R.c0:^");
  full.push_back("R.c0:R.c0:^");
  auto plays8 = plays_as_keys(s, 8);
  CHECK(std::find(plays8.begin(), plays8.end(), full) != plays8.end());
}

TEST_CASE("denotations of well-typed programs are well-bracketed") {
  std::vector<std::string> corpus{
      "tt",
      "(if tt ff tt)",
      "(lam (f (lolli bool bool)) (app f tt))",
      "(fix (lam (x (bang bool)) tt))",
      "(app (lam (x bool) x) tt)",
  };
  for (const auto& src : corpus) {
    for (Discipline d : {Discipline::Linear, Discipline::Affine}) {
      auto m = pcf_elaborate(term_of(src), d);
      INFO(src, " / ", to_string(d));
      CHECK(is_wb_strategy(m.components.at(0), 8));
    }
  }
}
