#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "diffdef/algebraic.hpp"
#include "diffdef/definability.hpp"
#include "diffdef/series.hpp"

namespace diffdef {

enum class Verdict { Verified, Refuted, Inconclusive };
std::string to_string(Verdict v);

/// Outcome of sampling a candidate definition of target = Dx in the series model.
struct SemanticReport {
  unsigned samples = 0;
  unsigned positive_failures = 0;  // false at (a, Da)
  unsigned negative_failures = 0;  // true at (a, b) with b != Da
  unsigned inconclusive = 0;
  std::optional<unsigned> first_failure;
  std::uint64_t seed = 0;
  unsigned truncation = 0;
  Rational t_offset;
  /// Chance that one negative sample hides a nonzero polynomial of the reported degree:
  /// degree / (number of distinct sampled coefficients).
  double false_positive_bound = 0;

  bool passed() const { return positive_failures == 0 && negative_failures == 0 && inconclusive == 0; }
  Verdict verdict() const;
  nlohmann::json to_json() const;
};

/// K samples, each with its own seed derived from (cfg.seed, index); samples run in parallel.
SemanticReport semantic_check(const Formula& phi, const Relations& relations, const Witnesses& witnesses,
                              const Var& x, const Var& target, const ModelConfig& cfg, unsigned samples);
/// Same contract, one sample after another; the parallel version must agree with it exactly.
SemanticReport semantic_check_serial(const Formula& phi, const Relations& relations, const Witnesses& witnesses,
                                     const Var& x, const Var& target, const ModelConfig& cfg, unsigned samples);

/// Probabilistic D-formula test: phi(a, Da) holds and phi(a, b) fails on every sample.
inline SemanticReport is_d_formula(const Formula& phi, const Relations& relations, const Witnesses& witnesses,
                                   const ModelConfig& cfg, unsigned samples, const Var& x = Var::x(),
                                   const Var& y = Var::y()) {
  return semantic_check(phi, relations, witnesses, x, y, cfg, samples);
}

struct VerificationReport {
  bool replay_ok = false;
  std::optional<std::size_t> first_divergence;  // step index
  std::string replay_message;
  bool graph_ok = false;
  bool identity_ok = false;  // terminal * u1^M equals the expansion over substituted inputs
  bool formula_ok = false;   // emitted formula and witnesses match the trace
  bool terminal_ok = false;
  std::string terminal;
  std::string terminal_class;
  std::optional<SemanticReport> semantic;
  Verdict verdict = Verdict::Refuted;

  bool symbolic_ok() const { return replay_ok && graph_ok && identity_ok && formula_ok && terminal_ok; }
  nlohmann::json to_json() const;
  std::string summary() const;
};

/// Exact recomputation of every step, graph preservation, terminal classification,
/// expansion identity and formula consistency. No sampling.
VerificationReport replay_trace(const DerivationTrace& trace);

/// replay_trace followed by semantic_check of the trace's formula (skipped when samples = 0).
VerificationReport verify_trace(const DerivationTrace& trace, const ModelConfig& cfg, unsigned samples);

/// Empirical report for the algebraic front formula.
struct AlgebraicReport {
  bool resultant_vanishes_on_graph = false;  // exact
  bool resultant_nonzero = false;
  unsigned samples = 0;
  unsigned negative_failures = 0;  // samples (a, b) where the resultant vanished
  unsigned inconclusive = 0;
  bool passed() const {
    return resultant_vanishes_on_graph && resultant_nonzero && negative_failures == 0 && inconclusive == 0;
  }
  nlohmann::json to_json() const;
};
AlgebraicReport algebraic_report(const AlgebraicFront& front, const ModelConfig& cfg, unsigned samples);

}  // namespace diffdef
