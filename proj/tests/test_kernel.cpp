// Kernel: rule schemas, variant gating, derivation checking, fixture trees.
#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "basiq/kernel.hpp"
#include "basiq/syntax.hpp"
#include "basiq/variant.hpp"

using namespace basiq;

namespace {

Sequent seq(const std::string& s) {
  auto r = parse_sequent(s);
  EXPECT_TRUE(r.ok()) << s;
  return r.value();
}

std::string fixture_text(const std::string& name) {
  std::ifstream in(std::string(BASIQ_FIXTURE_DIR) + "/" + name);
  EXPECT_TRUE(in.good()) << name;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DerivationScript fixture(const std::string& name) {
  auto r = parse_derivation(fixture_text(name));
  EXPECT_TRUE(r.ok()) << name << (r.ok() ? "" : ": " + r.error().message);
  return r.value();
}

testing::AssertionResult step_ok(RuleName rule, const std::string& conclusion,
                                 const std::vector<std::string>& premises, LogicVariant v) {
  std::vector<Sequent> ps;
  for (const auto& p : premises) ps.push_back(seq(p));
  auto err = check_step(rule, seq(conclusion), ps, v);
  if (!err) return testing::AssertionSuccess();
  return testing::AssertionFailure() << err->detail;
}

std::optional<StepErrorKind> step_kind(RuleName rule, const std::string& conclusion,
                                       const std::vector<std::string>& premises, LogicVariant v,
                                       const CheckOptions& opts = {}) {
  std::vector<Sequent> ps;
  for (const auto& p : premises) ps.push_back(seq(p));
  auto err = check_step(rule, seq(conclusion), ps, v, opts);
  if (!err) return std::nullopt;
  return err->kind;
}

// ------------------------------------------------------------ rule metadata

TEST(Kernel, TokenRoundTrip) {
  for (int i = 0; i <= static_cast<int>(RuleName::WEAK_R); ++i) {
    RuleName r = static_cast<RuleName>(i);
    auto back = rule_from_token(rule_token(r));
    ASSERT_TRUE(back.has_value()) << rule_token(r);
    EXPECT_EQ(*back, r);
  }
  EXPECT_FALSE(rule_from_token("nonsense").has_value());
  EXPECT_FALSE(rule_from_token("ID").has_value());  // tokens are exact
}

TEST(Kernel, TokenSpellings) {
  EXPECT_STREQ(rule_token(RuleName::ID), "id");
  EXPECT_STREQ(rule_token(RuleName::CUT), "cut");
  EXPECT_STREQ(rule_token(RuleName::WITH_FORM), "&-form");
  EXPECT_STREQ(rule_token(RuleName::WITH_REFL_IMPL_1), "&-impl.refl.1");
  EXPECT_STREQ(rule_token(RuleName::WITH_REFL_EXPL_2), "&-expl.refl.2");
  EXPECT_STREQ(rule_token(RuleName::OR_FORM), "v-form");
  EXPECT_STREQ(rule_token(RuleName::PAR_FORM), "par-form");
  EXPECT_STREQ(rule_token(RuleName::TIMES_REFL_EXPL), "times-expl.refl");
  EXPECT_STREQ(rule_token(RuleName::ENT_FORM), "@-form");
  EXPECT_STREQ(rule_token(RuleName::ENT_ATOM_REFL), "@-atom.refl");
  EXPECT_STREQ(rule_token(RuleName::EPR), "EPR");
  EXPECT_STREQ(rule_token(RuleName::CONTR_R), "contr.R");
  EXPECT_STREQ(rule_token(RuleName::WEAK_L), "weak.L");
}

TEST(Kernel, Gating) {
  for (LogicVariant v : kAllVariants) {
    EXPECT_EQ(rule_enabled(RuleName::CONTR_L, v), v.structural);
    EXPECT_EQ(rule_enabled(RuleName::WEAK_R, v), v.structural);
    EXPECT_EQ(rule_enabled(RuleName::ENT_FORM, v), !v.structural);
    EXPECT_EQ(rule_enabled(RuleName::ENT_ATOM_REFL, v), !v.structural);
    EXPECT_EQ(rule_enabled(RuleName::EPR, v), v == kVariantB);
    EXPECT_TRUE(rule_enabled(RuleName::ID, v));
    EXPECT_TRUE(rule_enabled(RuleName::CUT, v));
    EXPECT_TRUE(rule_enabled(RuleName::EXCH_L, v));
    EXPECT_TRUE(rule_enabled(RuleName::WITH_FORM, v));
  }
}

// --------------------------------------------------------- spec'd step cases

TEST(Kernel, WithFormationStep) {
  EXPECT_TRUE(step_ok(RuleName::WITH_FORM, "|- (A & A^)", {"|- A", "|- A^"}, kVariantB));
}

TEST(Kernel, EntFormationStep) {
  EXPECT_TRUE(step_ok(RuleName::ENT_FORM, "|- ((A&A^) @ (B&B^))", {"|- A, B", "|- A^, B^"},
                      kVariantB));
}

TEST(Kernel, ContractionGatedByStructuralFlag) {
  EXPECT_EQ(step_kind(RuleName::CONTR_R, "C |- A, B", {"C |- A, A, B"}, kVariantB),
            StepErrorKind::RuleDisabled);
  EXPECT_TRUE(step_ok(RuleName::CONTR_R, "C |- A, B", {"C |- A, A, B"}, kVariantBSRL));
}

TEST(Kernel, EntFormationDisabledUnderStructuralRules) {
  EXPECT_EQ(step_kind(RuleName::ENT_FORM, "|- ((A&A^) @ (B&B^))", {"|- A, B", "|- A^, B^"},
                      kVariantBS),
            StepErrorKind::RuleDisabled);
}

// ----------------------------------------------------------- schema details

TEST(Kernel, IdentityStrict) {
  EXPECT_TRUE(step_ok(RuleName::ID, "A |- A", {}, kVariantB));
  EXPECT_TRUE(step_ok(RuleName::ID, "(A & A^) |- (A & A^)", {}, kVariantB));
  EXPECT_EQ(step_kind(RuleName::ID, "A |- B", {}, kVariantB), StepErrorKind::SchemaMismatch);
  EXPECT_EQ(step_kind(RuleName::ID, "A, B |- A, B", {}, kVariantB),
            StepErrorKind::SchemaMismatch);
  EXPECT_EQ(step_kind(RuleName::ID, "A |- A", {"A |- A"}, kVariantB),
            StepErrorKind::ArityMismatch);
}

TEST(Kernel, CutBasic) {
  EXPECT_TRUE(step_ok(RuleName::CUT, "(A & A^) |- A",
                      {"(A & A^) |- (A & A^)", "(A & A^) |- A"}, kVariantB));
}

TEST(Kernel, CutFormulaMaySitInsideSuccedent) {
  // The cut formula is replaced in place; surrounding succedent survives.
  EXPECT_TRUE(step_ok(RuleName::CUT, "E |- A, B, A", {"E |- A, B, (A & A^)", "(A & A^) |- A"},
                      kVariantB));
}

TEST(Kernel, CutRejectsWrongShapes) {
  EXPECT_EQ(step_kind(RuleName::CUT, "|- A", {"|- B", "C |- A"}, kVariantB),
            StepErrorKind::SchemaMismatch);  // cut formula absent from premise 1
  EXPECT_EQ(step_kind(RuleName::CUT, "|- A", {"|- (A & A^)", "B, (A & A^) |- A"}, kVariantB),
            StepErrorKind::SchemaMismatch);  // premise 2 antecedent not singleton
  EXPECT_EQ(step_kind(RuleName::CUT, "B |- A", {"|- (A & A^)", "(A & A^) |- A"}, kVariantB),
            StepErrorKind::SchemaMismatch);  // antecedent not inherited
}

TEST(Kernel, ExchangeSwapsAdjacent) {
  EXPECT_TRUE(step_ok(RuleName::EXCH_R, "|- B, A", {"|- A, B"}, kVariantB));
  EXPECT_TRUE(step_ok(RuleName::EXCH_L, "B, A |- C", {"A, B |- C"}, kVariantB));
  EXPECT_TRUE(step_ok(RuleName::EXCH_R, "|- A, C, B", {"|- A, B, C"}, kVariantB));
  EXPECT_EQ(step_kind(RuleName::EXCH_R, "|- C, B, A", {"|- A, B, C"}, kVariantB),
            StepErrorKind::SchemaMismatch);  // a 3-cycle is not one transposition
  EXPECT_EQ(step_kind(RuleName::EXCH_R, "|- A", {"|- A"}, kVariantB),
            StepErrorKind::SchemaMismatch);  // nothing to swap
}

TEST(Kernel, ContractionAdjacent) {
  EXPECT_TRUE(step_ok(RuleName::CONTR_L, "A |- B", {"A, A |- B"}, kVariantBS));
  EXPECT_TRUE(step_ok(RuleName::CONTR_R, "|- A, B", {"|- A, A, B"}, kVariantBS));
  EXPECT_EQ(step_kind(RuleName::CONTR_R, "|- A, B", {"|- A, B, A"}, kVariantBS),
            StepErrorKind::SchemaMismatch);  // duplicates must be adjacent
  EXPECT_EQ(step_kind(RuleName::CONTR_L, "A |- B", {"A, B |- B"}, kVariantBS),
            StepErrorKind::SchemaMismatch);
}

TEST(Kernel, WeakeningEitherSideUnderEitherToken) {
  EXPECT_TRUE(step_ok(RuleName::WEAK_L, "A, B |- C", {"A |- C"}, kVariantBS));
  EXPECT_TRUE(step_ok(RuleName::WEAK_L, "|- A, B, (A & A^)", {"|- A, B"}, kVariantBS));
  EXPECT_TRUE(step_ok(RuleName::WEAK_R, "|- A, B", {"|- B"}, kVariantBS));
  EXPECT_TRUE(step_ok(RuleName::WEAK_R, "C, A |- B", {"A |- B"}, kVariantBS));
  EXPECT_EQ(step_kind(RuleName::WEAK_L, "A, B, C |- D", {"A |- D"}, kVariantBS),
            StepErrorKind::SchemaMismatch);  // two insertions
  EXPECT_EQ(step_kind(RuleName::WEAK_L, "A, B |- C", {"A |- C"}, kVariantB),
            StepErrorKind::RuleDisabled);
}

TEST(Kernel, WithReflectionImplicit) {
  EXPECT_TRUE(step_ok(RuleName::WITH_REFL_IMPL_1, "(A & A^) |- A",
                      {"(A & A^) |- (A & A^)"}, kVariantB));
  EXPECT_TRUE(step_ok(RuleName::WITH_REFL_IMPL_2, "(A & A^) |- A^",
                      {"(A & A^) |- (A & A^)"}, kVariantB));
  EXPECT_EQ(step_kind(RuleName::WITH_REFL_IMPL_1, "(A & A^) |- A^",
                      {"(A & A^) |- (A & A^)"}, kVariantB),
            StepErrorKind::SchemaMismatch);  // wrong component for .1
}

TEST(Kernel, WithReflectionExplicit) {
  EXPECT_TRUE(step_ok(RuleName::WITH_REFL_EXPL_1, "(A & B) |- A", {"A |- A"}, kVariantB));
  EXPECT_TRUE(step_ok(RuleName::WITH_REFL_EXPL_2, "(A & B) |- B", {"B |- B"}, kVariantB));
}

TEST(Kernel, RightContextGating) {
  // A passive succedent context beside the active formula needs flag R.
  EXPECT_EQ(step_kind(RuleName::WITH_FORM, "|- C, (A & B)", {"|- C, A", "|- C, B"}, kVariantB),
            StepErrorKind::ContextNotAllowed);
  EXPECT_TRUE(step_ok(RuleName::WITH_FORM, "|- C, (A & B)", {"|- C, A", "|- C, B"}, kVariantBR));
  EXPECT_TRUE(
      step_ok(RuleName::WITH_FORM, "|- C, (A & B)", {"|- C, A", "|- C, B"}, kVariantBRL));
  EXPECT_EQ(step_kind(RuleName::WITH_FORM, "|- C, (A & B)", {"|- C, A", "|- C, B"}, kVariantBL),
            StepErrorKind::ContextNotAllowed);
  EXPECT_EQ(step_kind(RuleName::PAR_FORM, "|- C, (A % B)", {"|- C, A, B"}, kVariantB),
            StepErrorKind::ContextNotAllowed);
  EXPECT_TRUE(step_ok(RuleName::PAR_FORM, "|- C, (A % B)", {"|- C, A, B"}, kVariantBR));
}

TEST(Kernel, LeftContextGating) {
  // A passive antecedent context beside the active formula needs flag L.
  EXPECT_EQ(step_kind(RuleName::WITH_REFL_EXPL_1, "C, (A & B) |- A", {"C, A |- A"}, kVariantB),
            StepErrorKind::ContextNotAllowed);
  EXPECT_TRUE(
      step_ok(RuleName::WITH_REFL_EXPL_1, "C, (A & B) |- A", {"C, A |- A"}, kVariantBL));
  EXPECT_EQ(step_kind(RuleName::WITH_REFL_EXPL_1, "C, (A & B) |- A", {"C, A |- A"}, kVariantBR),
            StepErrorKind::ContextNotAllowed);
  EXPECT_EQ(
      step_kind(RuleName::TIMES_FORM, "C, (A * B) |- A, B", {"C, A, B |- A, B"}, kVariantB),
      StepErrorKind::ContextNotAllowed);
  EXPECT_TRUE(
      step_ok(RuleName::TIMES_FORM, "C, (A * B) |- A, B", {"C, A, B |- A, B"}, kVariantBL));
}

TEST(Kernel, OppositeSidePassiveContextIsAlwaysFree) {
  // The antecedent is passive for right-side rules even in plain B.
  EXPECT_TRUE(step_ok(RuleName::WITH_FORM, "C |- (A & B)", {"C |- A", "C |- B"}, kVariantB));
  EXPECT_TRUE(step_ok(RuleName::PAR_FORM, "C, D |- (A % B)", {"C, D |- A, B"}, kVariantB));
  // And the succedent is passive for left-side rules.
  EXPECT_TRUE(step_ok(RuleName::WITH_REFL_EXPL_1, "(A & B) |- C, D", {"A |- C, D"}, kVariantB));
}

TEST(Kernel, OrRules) {
  EXPECT_TRUE(step_ok(RuleName::OR_FORM, "(A v B) |- C", {"A |- C", "B |- C"}, kVariantB));
  EXPECT_TRUE(step_ok(RuleName::OR_REFL_EXPL, "|- (A v B)", {"|- A"}, kVariantB));
  EXPECT_TRUE(step_ok(RuleName::OR_REFL_EXPL, "|- (A v B)", {"|- B"}, kVariantB));
  EXPECT_EQ(step_kind(RuleName::OR_REFL_EXPL, "|- (A v B)", {"|- C"}, kVariantB),
            StepErrorKind::SchemaMismatch);
}

TEST(Kernel, TimesAndParSplitContexts) {
  EXPECT_TRUE(step_ok(RuleName::PAR_REFL_EXPL, "(A % B) |- C, D", {"A |- C", "B |- D"},
                      kVariantB));
  EXPECT_TRUE(step_ok(RuleName::TIMES_REFL_EXPL, "A, B |- (A * B)", {"A |- A", "B |- B"},
                      kVariantB));
  // Split contexts on the active side still need the flag.
  EXPECT_EQ(step_kind(RuleName::PAR_REFL_EXPL, "G, (A % B) |- C, D", {"G, A |- C", "B |- D"},
                      kVariantB),
            StepErrorKind::ContextNotAllowed);
  EXPECT_TRUE(step_ok(RuleName::PAR_REFL_EXPL, "G, (A % B) |- C, D", {"G, A |- C", "B |- D"},
                      kVariantBL));
  EXPECT_EQ(step_kind(RuleName::TIMES_REFL_EXPL, "A, B |- C, (A * B)",
                      {"A |- C, A", "B |- B"}, kVariantB),
            StepErrorKind::ContextNotAllowed);
  EXPECT_TRUE(step_ok(RuleName::TIMES_REFL_EXPL, "A, B |- C, (A * B)", {"A |- C, A", "B |- B"},
                      kVariantBR));
}

TEST(Kernel, EntReflectionImplicit) {
  EXPECT_TRUE(step_ok(RuleName::ENT_REFL_IMPL_1, "((A&A^) @ (B&B^)) |- A, B",
                      {"((A&A^) @ (B&B^)) |- ((A&A^) @ (B&B^))"}, kVariantB));
  EXPECT_TRUE(step_ok(RuleName::ENT_REFL_IMPL_2, "((A&A^) @ (B&B^)) |- A^, B^",
                      {"((A&A^) @ (B&B^)) |- ((A&A^) @ (B&B^))"}, kVariantB));
  EXPECT_EQ(step_kind(RuleName::ENT_REFL_IMPL_1, "((A&A^) @ (B&B^)) |- A^, B^",
                      {"((A&A^) @ (B&B^)) |- ((A&A^) @ (B&B^))"}, kVariantB),
            StepErrorKind::SchemaMismatch);
}

TEST(Kernel, EntReflectionExplicit) {
  EXPECT_TRUE(step_ok(RuleName::ENT_REFL_EXPL_1, "((A&A^) @ (B&B^)) |- A, B",
                      {"A |- A", "B |- B"}, kVariantB));
  EXPECT_TRUE(step_ok(RuleName::ENT_REFL_EXPL_2, "((A&A^) @ (B&B^)) |- A^, B^",
                      {"A^ |- A^", "B^ |- B^"}, kVariantB));
}

TEST(Kernel, EntRulesRequireQubitOperands) {
  EXPECT_EQ(step_kind(RuleName::ENT_FORM, "|- (A @ B)", {"|- A, B", "|- A^, B^"}, kVariantB),
            StepErrorKind::SchemaMismatch);
  EXPECT_EQ(step_kind(RuleName::ENT_FORM, "|- ((A&A^) @ ((A&A^) @ (B&B^)))",
                      {"|- A, B", "|- A^, B^"}, kVariantB),
            StepErrorKind::SchemaMismatch);  // nested '@' is not a qubit
}

TEST(Kernel, EntFormSameAtomAllowed) {
  EXPECT_TRUE(step_ok(RuleName::ENT_FORM, "|- ((A&A^) @ (A&A^))", {"|- A, A", "|- A^, A^"},
                      kVariantB));
}

TEST(Kernel, EntAtomReflection) {
  EXPECT_TRUE(step_ok(RuleName::ENT_ATOM_REFL, "|- A, B", {"|- (A @ (B & B^))"}, kVariantB));
  // The perped form is off by default and opt-in via options.
  EXPECT_EQ(step_kind(RuleName::ENT_ATOM_REFL, "|- A^, B^", {"|- (A^ @ (B & B^))"}, kVariantB),
            StepErrorKind::SchemaMismatch);
  CheckOptions opts;
  opts.allow_perp_atom_refl = true;
  EXPECT_EQ(step_kind(RuleName::ENT_ATOM_REFL, "|- A^, B^", {"|- (A^ @ (B & B^))"}, kVariantB,
                      opts),
            std::nullopt);
}

TEST(Kernel, EprStrictShape) {
  EXPECT_TRUE(step_ok(RuleName::EPR, "((A&A^) @ (B&B^)) |- (A @ (B & B^))",
                      {"((A&A^) @ (B&B^)) |- ((A&A^) @ (B&B^))", "(A & A^) |- A"}, kVariantB));
}

TEST(Kernel, EprRejectsContextsEverywhere) {
  // Contexted instance in B: recognized as a context violation.
  EXPECT_EQ(step_kind(RuleName::EPR, "E, E |- (A @ (B & B^)), B",
                      {"E |- E, ((A&A^) @ (B&B^))", "E, (A & A^) |- A, B"}, kVariantB),
            StepErrorKind::ContextNotAllowed);
  // Any other variant: the rule itself is unavailable.
  for (LogicVariant v : {kVariantBL, kVariantBR, kVariantBRL, kVariantBS, kVariantBSRL}) {
    EXPECT_EQ(step_kind(RuleName::EPR, "((A&A^) @ (B&B^)) |- (A @ (B & B^))",
                        {"((A&A^) @ (B&B^)) |- ((A&A^) @ (B&B^))", "(A & A^) |- A"}, v),
              StepErrorKind::RuleDisabled);
  }
}

// --------------------------------------------------------- derivation trees

TEST(Kernel, FixturesCheckInBaseVariant) {
  for (const char* name :
       {"measure_cut.blp", "ent_cut.blp", "epr_rule.blp", "with_form_eta.blp",
        "with_axiom_1.blp", "with_axiom_2.blp", "ent_form_eta.blp", "ent_expl_1.blp",
        "ent_expl_2.blp"}) {
    auto report = check_script(fixture(name), kVariantB);
    EXPECT_TRUE(report.ok) << name << ": "
                           << (report.failures.empty() ? "" : report.failures[0].error.detail);
  }
}

TEST(Kernel, CutSimFixtureFailsExactlyAtStructuralNodesInB) {
  auto report = check_script(fixture("epr_cut_sim.blp"), kVariantB);
  EXPECT_FALSE(report.ok);
  std::set<std::string> paths;
  for (const auto& f : report.failures) {
    paths.insert(f.path);
    EXPECT_EQ(f.error.kind, StepErrorKind::RuleDisabled) << f.path;
  }
  EXPECT_EQ(paths, (std::set<std::string>{"0", "0.0.0.0"}));
}

TEST(Kernel, CutSimFixtureChecksInClassicalVariant) {
  auto report = check_script(fixture("epr_cut_sim.blp"), kVariantBSRL);
  EXPECT_TRUE(report.ok) << (report.failures.empty() ? ""
                                                     : report.failures[0].error.detail + " at " +
                                                           report.failures[0].path);
}

TEST(Kernel, ContextedEprFixtureFailsInAllContextVariants) {
  for (LogicVariant v : {kVariantB, kVariantBL, kVariantBR, kVariantBRL}) {
    auto report = check_script(fixture("epr_context.blp"), v);
    EXPECT_FALSE(report.ok) << variant_name(v);
  }
  // In B specifically, the root is a context violation, not a shape error.
  auto report = check_script(fixture("epr_context.blp"), kVariantB);
  bool saw_root_context_failure = false;
  for (const auto& f : report.failures)
    if (f.path == "0" && f.error.kind == StepErrorKind::ContextNotAllowed)
      saw_root_context_failure = true;
  EXPECT_TRUE(saw_root_context_failure);
}

TEST(Kernel, EntFixturesDisabledUnderStructuralVariants) {
  for (LogicVariant v : {kVariantBS, kVariantBSL, kVariantBSR, kVariantBSRL}) {
    for (const char* name : {"ent_form_eta.blp", "ent_expl_1.blp", "ent_cut.blp"}) {
      auto report = check_script(fixture(name), v);
      EXPECT_FALSE(report.ok) << name << " in " << variant_name(v);
      bool saw_disabled = false;
      for (const auto& f : report.failures)
        if (f.error.kind == StepErrorKind::RuleDisabled) saw_disabled = true;
      EXPECT_TRUE(saw_disabled) << name << " in " << variant_name(v);
    }
  }
}

TEST(Kernel, MonotonicityAcrossCube) {
  // Structural-free, @-free trees check in every variant.
  for (const char* name : {"measure_cut.blp", "with_form_eta.blp", "with_axiom_1.blp"}) {
    for (LogicVariant v : kAllVariants)
      EXPECT_TRUE(check_script(fixture(name), v).ok) << name << " in " << variant_name(v);
  }
  // '@'-bearing trees check exactly in the structural-free variants.
  for (const char* name : {"ent_form_eta.blp", "ent_cut.blp"}) {
    for (LogicVariant v : kAllVariants)
      EXPECT_EQ(check_script(fixture(name), v).ok, !v.structural)
          << name << " in " << variant_name(v);
  }
  // The EPR tree checks only in B.
  for (LogicVariant v : kAllVariants)
    EXPECT_EQ(check_script(fixture("epr_rule.blp"), v).ok, v == kVariantB) << variant_name(v);
}

TEST(Kernel, InjectedStructuralNodeRejectedExactlyThere) {
  auto script = fixture("with_form_eta.blp");
  auto d = to_derivation(script);
  ASSERT_TRUE(d.has_value());
  Sequent weakened = d->conclusion;
  weakened.succ.push_back(Formula::atom("Z"));
  Derivation wrapped{RuleName::WEAK_R, weakened, {*d}};
  auto report = check_derivation(wrapped, kVariantB);
  ASSERT_EQ(report.failures.size(), 1u);
  EXPECT_EQ(report.failures[0].path, "0");
  EXPECT_EQ(report.failures[0].error.kind, StepErrorKind::RuleDisabled);
  // The same tree is fine once structural rules are on.
  EXPECT_TRUE(check_derivation(wrapped, kVariantBS).ok);
}

TEST(Kernel, CheckerDeterminism) {
  auto script = fixture("epr_cut_sim.blp");
  auto r1 = check_script(script, kVariantB);
  auto r2 = check_script(script, kVariantB);
  ASSERT_EQ(r1.failures.size(), r2.failures.size());
  for (size_t i = 0; i < r1.failures.size(); ++i) {
    EXPECT_EQ(r1.failures[i].path, r2.failures[i].path);
    EXPECT_EQ(r1.failures[i].error.kind, r2.failures[i].error.kind);
    EXPECT_EQ(r1.failures[i].error.detail, r2.failures[i].error.detail);
  }
}

TEST(Kernel, UnknownRuleTokenReported) {
  auto r = parse_derivation("frobnicate: A |- A\n");
  ASSERT_TRUE(r.ok());
  auto report = check_script(r.value(), kVariantB);
  ASSERT_EQ(report.failures.size(), 1u);
  EXPECT_EQ(report.failures[0].error.kind, StepErrorKind::UnknownRule);
  EXPECT_EQ(report.failures[0].line, 1);
}

TEST(Kernel, ScriptFailuresCarryLines) {
  auto report = check_script(fixture("epr_cut_sim.blp"), kVariantB);
  ASSERT_EQ(report.failures.size(), 2u);
  for (const auto& f : report.failures) EXPECT_GT(f.line, 0);
}

TEST(Kernel, ScriptAndDerivationConversionsRoundTrip) {
  auto script = fixture("ent_cut.blp");
  auto d = to_derivation(script);
  ASSERT_TRUE(d.has_value());
  auto back = to_script(*d);
  EXPECT_EQ(print_derivation(back), print_derivation(script));
}

// --------------------------------------------------------------- stock proofs

TEST(Kernel, WithAxiomInstances) {
  auto ds = axiom_instances(AxiomKind::WithAxioms, "A");
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_EQ(print_sequent(ds[0].conclusion), "(A & A^) |- A");
  EXPECT_EQ(print_sequent(ds[1].conclusion), "(A & A^) |- A^");
  for (const auto& d : ds) {
    EXPECT_TRUE(check_derivation(d, kVariantB).ok);
    EXPECT_TRUE(check_derivation(d, kVariantBSRL).ok);
  }
}

TEST(Kernel, EntAxiomInstances) {
  auto ds = axiom_instances(AxiomKind::EntAxioms, "A", "B");
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_EQ(print_sequent(ds[0].conclusion), "((A & A^) @ (B & B^)) |- A, B");
  EXPECT_EQ(print_sequent(ds[1].conclusion), "((A & A^) @ (B & B^)) |- A^, B^");
  for (const auto& d : ds) EXPECT_TRUE(check_derivation(d, kVariantB).ok);
  // Under structural rules the same trees are rejected as disabled.
  for (const auto& d : ds) {
    auto report = check_derivation(d, kVariantBS);
    EXPECT_FALSE(report.ok);
    ASSERT_FALSE(report.failures.empty());
    EXPECT_EQ(report.failures[0].error.kind, StepErrorKind::RuleDisabled);
  }
}

TEST(Kernel, VariantNamesAndParsing) {
  EXPECT_EQ(variant_name(kVariantB), "B");
  EXPECT_EQ(variant_name(kVariantBRL), "BRL");
  EXPECT_EQ(variant_name(kVariantBSRL), "BSRL");
  for (LogicVariant v : kAllVariants) {
    auto p = parse_variant(variant_name(v));
    ASSERT_TRUE(p.has_value()) << variant_name(v);
    EXPECT_TRUE(*p == v);
  }
  EXPECT_TRUE(parse_variant("BLR").has_value());
  EXPECT_FALSE(parse_variant("X").has_value());
  EXPECT_FALSE(parse_variant("BSS").has_value());
  EXPECT_FALSE(parse_variant("").has_value());
}

}  // namespace
