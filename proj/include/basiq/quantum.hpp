// Quantum reading of the calculus: complex state vectors for qubits and
// Bell pairs, seeded projective measurement, separability, EPR correlation
// runs, and the cut-as-measurement cross-check. The semantics is a model
// check layered on top of the kernel: it never influences rule checking,
// and disagreements are reported, not auto-resolved.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "basiq/formula.hpp"
#include "basiq/kernel.hpp"
#include "basiq/variant.hpp"

namespace basiq {

using Amp = std::complex<double>;

inline constexpr double kNormTol = 1e-9;

// One-qubit amplitude pair: a|0> + b|1>.
struct Amplitudes {
  Amp a, b;
};

inline void require_normalized(const Amplitudes& q) {
  double n2 = std::norm(q.a) + std::norm(q.b);
  if (std::abs(n2 - 1.0) > kNormTol) {
    throw std::invalid_argument("amplitudes must satisfy |a|^2 + |b|^2 = 1");
  }
}

// n-qubit state vector, basis ordered |0...0> .. |1...1>; qubit 0 is the
// first tensor factor (most significant basis bit).
struct QState {
  int n = 1;
  std::vector<Amp> amps;
};

inline double norm_of(const std::vector<Amp>& amps) {
  double n2 = 0.0;
  for (const Amp& a : amps) n2 += std::norm(a);
  return std::sqrt(n2);
}

inline QState make_qstate(int n, std::vector<Amp> amps) {
  if (n < 1) throw std::invalid_argument("qubit count must be at least 1");
  if (amps.size() != (static_cast<size_t>(1) << n)) {
    throw std::invalid_argument("amplitude vector must have length 2^n");
  }
  if (std::abs(norm_of(amps) - 1.0) > kNormTol) {
    throw std::invalid_argument("state vector must have Euclidean norm 1");
  }
  return QState{n, std::move(amps)};
}

// The semantic value of an asserted qubit: |Q> = a|0> + b|1>.
inline QState qubit_state(const Amplitudes& q) {
  require_normalized(q);
  return QState{1, {q.a, q.b}};
}

// The three one-qubit vector terms read off an atomic assertion. These are
// unnormalized summands, not states: asserting A contributes b|1>, asserting
// the perp contributes a|0>, while negating the assertion of A flips the
// basis vector but keeps the coefficient, giving b|0>. The last two differ
// whenever a != b, which is the point of keeping them distinct.
struct AtomAssertionTerms {
  std::array<Amp, 2> asserted;            // b|1>
  std::array<Amp, 2> asserted_perp;       // a|0>
  std::array<Amp, 2> negated_assertion;   // b|0>
};

inline AtomAssertionTerms interpret_atom_assertions(const Amplitudes& q) {
  require_normalized(q);
  AtomAssertionTerms t;
  t.asserted = {Amp{0.0, 0.0}, q.b};
  t.asserted_perp = {q.a, Amp{0.0, 0.0}};
  t.negated_assertion = {q.b, Amp{0.0, 0.0}};
  return t;
}

enum class BellStateKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline const char* bell_state_name(BellStateKind k) {
  switch (k) {
    case BellStateKind::PhiPlus: return "phi+";
    case BellStateKind::PhiMinus: return "phi-";
    case BellStateKind::PsiPlus: return "psi+";
    case BellStateKind::PsiMinus: return "psi-";
  }
  return "?";
}

inline QState bell_state(BellStateKind kind) {
  const double r = std::sqrt(0.5);
  switch (kind) {
    case BellStateKind::PhiPlus: return QState{2, {r, 0.0, 0.0, r}};
    case BellStateKind::PhiMinus: return QState{2, {r, 0.0, 0.0, -r}};
    case BellStateKind::PsiPlus: return QState{2, {0.0, r, r, 0.0}};
    case BellStateKind::PsiMinus: return QState{2, {0.0, r, -r, 0.0}};
  }
  throw std::invalid_argument("unknown Bell state kind");
}

inline QState tensor(const QState& x, const QState& y) {
  QState out;
  out.n = x.n + y.n;
  out.amps.resize(x.amps.size() * y.amps.size());
  for (size_t i = 0; i < x.amps.size(); ++i) {
    for (size_t j = 0; j < y.amps.size(); ++j) {
      out.amps[i * y.amps.size() + j] = x.amps[i] * y.amps[j];
    }
  }
  return out;
}

struct MeasurementRecord {
  int qubit_index = 0;
  int outcome = 0;         // 0 or 1
  double probability = 0;  // Born probability of the sampled outcome
  QState post_state;       // renormalized projection
};

// Projective measurement of one qubit in the computational basis. The draw
// is deterministic in the seed: a fresh mt19937_64 yields one uniform in
// [0, 1), and outcome 1 is taken when it falls below the Born weight of 1.
inline MeasurementRecord measure(const QState& s, int qubit_index, std::uint64_t rng_seed) {
  if (qubit_index < 0 || qubit_index >= s.n) {
    throw std::out_of_range("qubit index out of range");
  }
  int shift = s.n - 1 - qubit_index;
  double p1 = 0.0, p0 = 0.0;
  for (size_t i = 0; i < s.amps.size(); ++i) {
    ((i >> shift) & 1 ? p1 : p0) += std::norm(s.amps[i]);
  }
  std::mt19937_64 rng(rng_seed);
  double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  int outcome = u < p1 ? 1 : 0;
  double prob = outcome == 1 ? p1 : p0;

  MeasurementRecord rec;
  rec.qubit_index = qubit_index;
  rec.outcome = outcome;
  rec.probability = prob;
  rec.post_state.n = s.n;
  rec.post_state.amps.assign(s.amps.size(), Amp{0.0, 0.0});
  double scale = 1.0 / std::sqrt(prob);
  for (size_t i = 0; i < s.amps.size(); ++i) {
    if (static_cast<int>((i >> shift) & 1) == outcome) {
      rec.post_state.amps[i] = s.amps[i] * scale;
    }
  }
  return rec;
}

// Exact two-qubit separability: the 2x2 coefficient matrix has rank 1 (is a
// product state) iff its determinant vanishes.
inline Amp two_qubit_determinant(const QState& s) {
  if (s.n != 2) throw std::invalid_argument("separability test needs exactly 2 qubits");
  return s.amps[0] * s.amps[3] - s.amps[1] * s.amps[2];
}

inline bool is_separable_2q(const QState& s) {
  return std::abs(two_qubit_determinant(s)) <= kNormTol;
}

// Equality up to a global phase (which is physically meaningless).
inline bool states_equal_up_to_phase(const QState& x, const QState& y, double tol = 1e-9) {
  if (x.n != y.n || x.amps.size() != y.amps.size()) return false;
  size_t pivot = 0;
  for (size_t i = 1; i < x.amps.size(); ++i) {
    if (std::abs(x.amps[i]) > std::abs(x.amps[pivot])) pivot = i;
  }
  if (std::abs(x.amps[pivot]) <= tol) return norm_of(y.amps) <= tol;
  Amp phase = y.amps[pivot] / x.amps[pivot];
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  for (size_t i = 0; i < x.amps.size(); ++i) {
    if (std::abs(x.amps[i] * phase - y.amps[i]) > tol) return false;
  }
  return true;
}

// Repeated EPR experiment: per trial, measure qubit 0 then qubit 1 of a
// fresh Bell pair and record whether the outcomes agree. Trials use derived
// seeds (seed + trial index), so the run is reproducible and trials are
// independent.
inline double epr_correlation(BellStateKind kind, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  long equal = 0;
  for (int t = 0; t < trials; ++t) {
    QState s = bell_state(kind);
    MeasurementRecord first = measure(s, 0, seed + static_cast<std::uint64_t>(t));
    MeasurementRecord second =
        measure(first.post_state, 1, seed + static_cast<std::uint64_t>(t));
    if (first.outcome == second.outcome) ++equal;
  }
  return static_cast<double>(equal) / static_cast<double>(trials);
}

// The cut-as-measurement reading. The visible instance cuts the qubit
// formula against one of its projections:
//
//     |- (A & A^)     (A & A^) |- A
//     ------------------------------ cut
//                |- A
//
// The left premise has no derivation of its own (nothing concludes from an
// empty antecedent), so it is validated as a step instance; a closed tree
// for the same reading keeps the qubit as antecedent. The semantics attaches
// the Born weight |b|^2 to the A branch and |a|^2 to the perp branch.
enum class CutBranch { A, PerpA };

struct CrosscheckReport {
  bool cut_step_ok = false;          // the visible step is a legal cut
  bool closed_derivation_ok = false; // the closed tree checks end to end
  double probability = 0.0;          // Born weight of the chosen branch
  Sequent conclusion;                // the sequent the probability attaches to
  bool agreed() const { return cut_step_ok && closed_derivation_ok; }
};

inline CrosscheckReport cut_measurement_crosscheck(const Amplitudes& q, CutBranch branch) {
  require_normalized(q);
  Formula qubit = mk_qubit("A");
  Formula picked = branch == CutBranch::A ? Formula::atom("A") : Formula::perp_atom("A");

  CrosscheckReport rep;
  rep.conclusion = Sequent{{}, {picked}};
  rep.probability = branch == CutBranch::A ? std::norm(q.b) : std::norm(q.a);

  Sequent left_premise{{}, {qubit}};
  Sequent right_premise{{qubit}, {picked}};
  auto err = check_step(RuleName::CUT, rep.conclusion, {left_premise, right_premise},
                        kVariantB);
  rep.cut_step_ok = !err.has_value();

  Derivation axiom{RuleName::ID, Sequent{{picked}, {picked}}, {}};
  std::vector<Derivation> proj_kids;
  proj_kids.push_back(std::move(axiom));
  Derivation projection{branch == CutBranch::A ? RuleName::WITH_REFL_EXPL_1
                                               : RuleName::WITH_REFL_EXPL_2,
                        right_premise, std::move(proj_kids)};
  Derivation qubit_axiom{RuleName::ID, Sequent{{qubit}, {qubit}}, {}};
  std::vector<Derivation> cut_kids;
  cut_kids.push_back(std::move(qubit_axiom));
  cut_kids.push_back(std::move(projection));
  Derivation closed{RuleName::CUT, right_premise, std::move(cut_kids)};
  rep.closed_derivation_ok = check_derivation(closed, kVariantB).ok;
  return rep;
}

}  // namespace basiq
