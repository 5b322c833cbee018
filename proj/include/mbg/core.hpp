#pragma once

// Shared ids, error kinds, resource counts, and run configuration.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mbg {

using PosId = uint32_t;
using MoveId = uint32_t;

inline constexpr int kOpponent = -1;
inline constexpr int kProponent = +1;

enum class ErrorKind {
  // game construction / validation
  DanglingMove,
  UnknownRoot,
  DuplicateId,
  UnreachablePosition,
  RootHasQueries,
  ResidualNotInjective,
  ResidualChangesPolarity,
  WrongInitiationPolarity,
  WrongCompliancePolarity,
  ExpansionBudgetExceeded,
  // paths
  NotATensorGame,
  UnknownQuery,
  MalformedQALabels,
  InvalidPath,
  // strategies
  NotPrefixClosed,
  NonDeterministic,
  ProponentStarts,
  NonAlternating,
  MiddleGameMismatch,
  GamesNotIsomorphic,
  // pointed / fam
  NotPointed,
  ShapeMismatch,
  IndexMismatch,
  NotSingleton,
  // logic / pcf
  RuleMismatch,
  ContextSplitError,
  ContractionOnNonBang,
  UnboundAtom,
  TypeError,
  LinearityViolation,
  // cli / io / generation
  GenerationBudgetExceeded,
  ParseError,
  IoError,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DanglingMove: return "DanglingMove";
    case ErrorKind::UnknownRoot: return "UnknownRoot";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::UnreachablePosition: return "UnreachablePosition";
    case ErrorKind::RootHasQueries: return "RootHasQueries";
    case ErrorKind::ResidualNotInjective: return "ResidualNotInjective";
    case ErrorKind::ResidualChangesPolarity: return "ResidualChangesPolarity";
    case ErrorKind::WrongInitiationPolarity: return "WrongInitiationPolarity";
    case ErrorKind::WrongCompliancePolarity: return "WrongCompliancePolarity";
    case ErrorKind::ExpansionBudgetExceeded: return "ExpansionBudgetExceeded";
    case ErrorKind::NotATensorGame: return "NotATensorGame";
    case ErrorKind::UnknownQuery: return "UnknownQuery";
    case ErrorKind::MalformedQALabels: return "MalformedQALabels";
    case ErrorKind::InvalidPath: return "InvalidPath";
    case ErrorKind::NotPrefixClosed: return "NotPrefixClosed";
    case ErrorKind::NonDeterministic: return "NonDeterministic";
    case ErrorKind::ProponentStarts: return "ProponentStarts";
    case ErrorKind::NonAlternating: return "NonAlternating";
    case ErrorKind::MiddleGameMismatch: return "MiddleGameMismatch";
    case ErrorKind::GamesNotIsomorphic: return "GamesNotIsomorphic";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::IndexMismatch: return "IndexMismatch";
    case ErrorKind::NotSingleton: return "NotSingleton";
    case ErrorKind::RuleMismatch: return "RuleMismatch";
    case ErrorKind::ContextSplitError: return "ContextSplitError";
    case ErrorKind::ContractionOnNonBang: return "ContractionOnNonBang";
    case ErrorKind::UnboundAtom: return "UnboundAtom";
    case ErrorKind::TypeError: return "TypeError";
    case ErrorKind::LinearityViolation: return "LinearityViolation";
    case ErrorKind::GenerationBudgetExceeded: return "GenerationBudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

struct Error : std::runtime_error {
  ErrorKind kind;
  Error(ErrorKind k, const std::string& msg)
      : std::runtime_error(std::string(to_string(k)) + ": " + msg), kind(k) {}
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

// kappa = (open Proponent queries, open Opponent queries) along a path.
struct ResourceCount {
  uint32_t plus = 0;
  uint32_t minus = 0;

  friend bool operator==(const ResourceCount&, const ResourceCount&) = default;
  ResourceCount operator+(const ResourceCount& o) const { return {plus + o.plus, minus + o.minus}; }
  // componentwise order
  bool leq(const ResourceCount& o) const { return plus <= o.plus && minus <= o.minus; }
  std::string str() const {
    return "(" + std::to_string(plus) + "," + std::to_string(minus) + ")";
  }
};

enum class Discipline { Linear, Affine, Exponential };

inline const char* to_string(Discipline d) {
  switch (d) {
    case Discipline::Linear: return "linear";
    case Discipline::Affine: return "affine";
    case Discipline::Exponential: return "exponential";
  }
  return "?";
}

struct Config {
  uint32_t depth = 10;             // default play-set depth bound
  uint32_t expansion_cap = 10000;  // max positions a generated game may materialize
  uint32_t interaction_budget = 64;  // max hidden steps per composition response
  uint32_t trace_budget = 16;        // max feedback bounces per traced response
  uint64_t seed = 0;
  Discipline discipline = Discipline::Linear;
};

inline Config& config() {
  static Config cfg;
  return cfg;
}

}  // namespace mbg
