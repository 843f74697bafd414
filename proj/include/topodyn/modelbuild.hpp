#ifndef TOPODYN_MODELBUILD_HPP
#define TOPODYN_MODELBUILD_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "topodyn/chaos.hpp"
#include "topodyn/entropy.hpp"
#include "topodyn/finite_system.hpp"
#include "topodyn/sft.hpp"

namespace topodyn {

/// Clopen partition of a symbolic subsystem: the distinct central cylinders of
/// the minimal window length whose diameter stays below e.
struct SymbolicPartition {
    std::vector<Word> cells;     // distinct central (2h+1)-words of the subsystem
    std::int64_t half_width = 0; // h
    double cell_diameter = 0;    // 2^-(h+1)
};

SymbolicPartition clopen_partition(const Sft& lambda, double e);

/// The itinerary model: partition -> word set W -> SFT Xi -> envelope Gamma_c,
/// with the conjugacy decode map materializing points on demand.
struct SymbolicSftModel {
    SymbolicPartition partition;
    Count window_n = 1;
    double c = 0;
    Sft sigma;    // itinerary recoding of the subsystem (exact language)
    Sft xi;       // SFT generated by the (2n+1)-itinerary windows
    Sft gamma;    // decoded envelope inside the ambient
    std::vector<Word> word_set;  // W, sorted

    // verified invariants
    bool cells_disjoint = false;
    bool sigma_in_xi = false;
    bool sandwich = false;         // Lambda subset Gamma_c subset B_c(Lambda)
    bool conjugacy_checked = false;
    Count conjugacy_window = 0;

    SymbolicPoint decode(const SymbolicPoint& itinerary) const;

    /// Full record: partition cells, W, Xi transitions, conjugacy samples.
    std::string serialize() const;
};

/// Runs the construction for a symbolic subsystem of a symbolic ambient.
/// c = 0 picks the default, the largest dyadic value keeping the thickened
/// cells disjoint with diameter below the partition scale.
SymbolicSftModel build_sft_model(const Sft& ambient, const Sft& lambda,
                                 const SymbolicPartition& partition, Count n, double c = 0,
                                 Count conjugacy_window = 10);

/// Clopen partition of a finite point set: deterministic greedy clustering
/// into cells of diameter < e.
std::vector<std::vector<StateId>> clopen_partition(const FiniteSystem& sys, const StateSet& lambda,
                                                   double e);

struct FiniteSftModel {
    std::vector<std::vector<StateId>> cells;
    Count window_n = 1;
    double c = 0;
    Sft xi;                       // SFT over the cell alphabet
    std::vector<Word> word_set;   // realized itinerary windows of lambda
    StateSet gamma;               // realized envelope states
    std::map<std::string, StateId> realization;  // xi periodic point -> shadow state
    bool cells_disjoint = false;
    bool thickening_ok = false;   // B_c cells disjoint with diameter <= e
    bool sandwich = false;
    bool conjugacy_checked = false;
};

FiniteSftModel build_sft_model(const FiniteSystem& sys, const StateSet& lambda,
                               const std::vector<std::vector<StateId>>& cells, Count n, double c,
                               double partition_e, Count realize_period);

/// Schedule for the envelope-equivalence verifier. Ladders are clamped to the system's
/// declared resolution so truncations are not probed below their meaningful
/// scale.
struct Thm12Schedule {
    std::vector<double> eps_ladder;
    std::vector<double> c_ladder;
    double b = 0.5;
    double e = 0.5;            // hypothesis expansive constant to certify or refute
    double a_check = 0.25;     // sensitivity level for condition (1), e/2 by default
    double partition_e = 0.75;
    Count model_n = 1;
    Count n_max = 4;
    double zero_entropy_tol = 1e-6;
    std::size_t exact_cap = 200;
    Count lm_horizon = 6;
    Count shadow_len_cap = 6;
    Count realize_period = 8;
    std::size_t growth_threshold = 100;
    /// Condition (2) walks every realized core distance as an r candidate up
    /// to this many values, then falls back to the bucketed ladder.
    std::size_t r_candidate_cap = 4000;

    static Thm12Schedule defaults_for(const FiniteSystem& sys);
    static Thm12Schedule defaults_for_symbolic();
};

struct Thm12Report {
    // Hypotheses at schedule resolution
    bool hyp_shadowing = false;
    std::string hyp_shadowing_note;
    bool hyp_expansive = false;
    std::string hyp_expansive_note;

    // Conditions
    bool cond1 = false;  // Sen(f|CR(f|Lambda)) empty
    bool cond2 = false;  // h_top(f|Lambda_eps) = 0 for some scheduled eps
    bool cond3 = false;  // every scheduled c yields a locally maximal zero-entropy envelope
    std::vector<std::pair<double, double>> cond2_estimates;   // (eps, entropy)
    std::vector<std::pair<double, std::string>> cond3_outcomes;  // (c, note)

    bool hypotheses_hold = false;
    enum class Verdict { consistent, inconsistent, no_verdict };
    Verdict verdict = Verdict::no_verdict;

    std::string summary;
    /// 0 when consistent, 2 when a hypothesis is refuted, 1 otherwise.
    int exit_code() const;
};

Thm12Report theorem_1_2_verify(const FiniteSystem& sys, const StateSet& lambda,
                               const Thm12Schedule& schedule);
Thm12Report theorem_1_2_verify(const Sft& ambient, const Sft& lambda,
                               const Thm12Schedule& schedule);

}  // namespace topodyn

#endif
