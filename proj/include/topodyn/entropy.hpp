#ifndef TOPODYN_ENTROPY_HPP
#define TOPODYN_ENTROPY_HPP

#include <string>
#include <vector>

#include "topodyn/finite_system.hpp"

namespace topodyn {

enum class SeparatedMode { exact, greedy };

struct SeparatedSet {
    std::vector<StateId> members;
    std::size_t s_n = 0;
    SeparatedMode mode = SeparatedMode::exact;
};

/// Maximal (n, r)-separated subset of K: pairwise, some iterate i < n puts the
/// two orbits strictly more than r apart. Exact mode solves a maximum clique
/// on the separation graph (capped); greedy returns the deterministic
/// maximal-by-inclusion set in state-id order, a lower bound.
SeparatedSet separated_set(const FiniteSystem& sys, const StateSet& k, Count n, double r,
                           SeparatedMode mode, std::size_t exact_cap = 64);

struct EntropyRow {
    double r = 0;
    Count n = 0;
    std::size_t s_n = 0;
    SeparatedMode mode = SeparatedMode::exact;
};

struct EntropyReport {
    std::vector<EntropyRow> rows;
    struct PerR {
        double r = 0;
        double slope = 0;          // least-squares slope of log s_n on the fit window
        double residual = 0;       // rms residual of the fit
        bool degenerate = false;   // all s_n = 1
    };
    std::vector<PerR> per_r;
    double estimate = 0;  // max slope over the r-schedule
    bool degenerate = false;
    Count n_max = 0;
    std::string csv() const;  // columns r,n,s_n,mode
};

/// Definition-1.4 estimate: for each r in the schedule compute s_n up to
/// n_max, fit the slope of log s_n on [n_max/2, n_max], and report the max
/// over r. Never exact for finite systems; the report carries residuals.
EntropyReport entropy_estimate(const FiniteSystem& sys, const StateSet& k,
                               const std::vector<double>& r_schedule, Count n_max,
                               std::size_t exact_cap = 64);

/// Dyadic ladder clamped to the realized distance range, augmented with the
/// extreme realized values of each dyadic bucket (separation graphs only
/// change at realized distances).
std::vector<double> default_r_schedule(const FiniteSystem& sys, const StateSet& k);

/// Every realized pairwise distance within K, nudged down so pairs at exactly
/// that distance separate. Falls back to the bucketed schedule above the cap.
std::vector<double> exhaustive_r_schedule(const FiniteSystem& sys, const StateSet& k,
                                          std::size_t cap = 4000);

}  // namespace topodyn

#endif
