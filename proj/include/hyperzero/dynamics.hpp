#pragma once

#include <functional>
#include <map>
#include <vector>

#include "hyperzero/oracle.hpp"
#include "hyperzero/witness.hpp"

namespace hz {

struct Baseline {
  std::vector<cd> b0;    // 1/(1+lambda)
  std::vector<cd> bbot;  // lambda/(1+lambda); b(1) is always 0
};
Baseline baseline(const Weights& lambda);

// One systematic-scan update at time t (vertex t mod n).
ComplexMeasure step(const ComplexMeasure& mu, long t, const Hypergraph& h, const Weights& lambda);

using StepObserver = std::function<void(long t, const ComplexMeasure& mu)>;
// Applies the updates at t = -T+1, ..., 0.
ComplexMeasure run_chain(const ComplexMeasure& mu0, long T, const Hypergraph& h, const Weights& lambda,
                         const StepObserver& observer = {});

// r-sequence over t in [-T+1, 0]; bit j of `bot` is set when r at time -T+1+j is "bottom".
struct RSeq {
  long T = 0;
  std::uint64_t bot = 0;
  bool is_bot(long t) const { return (bot >> (t + T - 1)) & 1u; }
};

Config simulate_given_r(Config sigma_init, const RSeq& rho, const Hypergraph& h);
cd r_mass(const RSeq& rho, const Hypergraph& h, const Weights& lambda);

// Law-of-total-measure expansion over all r-sequences (T <= 22).
ComplexMeasure final_measure_by_enumeration(Config sigma_init, long T, const Hypergraph& h, const Weights& lambda);
cd event_measure_by_enumeration(Config sigma_init, long T, const std::vector<Config>& event, const Hypergraph& h,
                                const Weights& lambda);

struct BadStructures {
  std::vector<int> v_bad;  // window vertex ids, sorted
  std::vector<int> c_bad;
  std::vector<int> t_bad;
};
BadStructures bad_structures(const RSeq& rho, const WitnessWindow& w);

// Variables an event depends on.
std::vector<int> event_vbl(int n, const std::vector<Config>& event);

// Independent sets carrying nonzero Gibbs weight.
std::vector<Config> initial_support(const Hypergraph& h, const Weights& lambda);

bool is_witness(const RSeq& rho, const std::vector<Config>& event, const Hypergraph& h, const Weights& lambda);

// Small trees: |T_bad| <= T/(2n) - 2.
bool is_small_tree(std::size_t tree_size, long T, int n);

enum class ZeroOne { Zero, One, Violation, Empty };

// Conditions on the group of `representative` (same C_bad and same r on
// TS(S,0), plus the same r on the first n times when the tree is large) and
// reports the event indicator for the given start.
ZeroOne zero_one_check(const Hypergraph& h, const Weights& lambda, long T, const std::vector<Config>& event,
                       Config sigma_init, const RSeq& representative);

struct ZeroOneAudit {
  long rho_small = 0, rho_large = 0;
  long groups_small = 0, groups_large = 0;
  long violations_small = 0, violations_large = 0;
  long witness_checked = 0, witness_violations = 0;
};
// Exhaustive audit for root set S: every event on S is covered because the
// whole restriction of the final state to S is compared.
ZeroOneAudit zero_one_audit(const Hypergraph& h, const Weights& lambda, const std::vector<int>& s, long T);

struct TreeMass {
  std::vector<int> tree;
  double abs_mass_sum = 0.0;  // sum over components C with tree(C) = tree of |mass|
};
// Masses of {C_bad = C and r = bottom on all of TS(S,0)} grouped by 2-tree.
std::vector<TreeMass> bad_tree_masses(const Hypergraph& h, const Weights& lambda, const std::vector<int>& s, long T);

// |measure of {final state on S equals tau, and |T_bad| > T/(2n) - 2}|.
double large_tree_event_mass(const Hypergraph& h, const Weights& lambda, const std::vector<int>& s, long T,
                             Config sigma_init, Config tau_on_s);

double convergence_gap(const ComplexMeasure& mu1, const ComplexMeasure& mu2, long T, const Hypergraph& h,
                       const Weights& lambda);

}  // namespace hz
