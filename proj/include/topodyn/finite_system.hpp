#ifndef TOPODYN_FINITE_SYSTEM_HPP
#define TOPODYN_FINITE_SYSTEM_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "topodyn/common.hpp"

namespace topodyn {

/// A finitely presented dynamical system: an explicit state set with a metric
/// table and a bijective map. The desk-scale stand-in for a compact system.
///
/// Immutable after construction. Construction validates the metric axioms
/// (zero diagonal, symmetry, triangle inequality) against the system tolerance
/// and rejects non-bijective maps. Triangle checking is exhaustive up to
/// `kTriangleCheckCap` states and randomized above it.
class FiniteSystem {
public:
    static constexpr std::size_t kTriangleCheckCap = 600;

    FiniteSystem(std::vector<std::string> labels,
                 std::vector<double> dist_lower_triangular,
                 std::vector<StateId> map,
                 double tolerance = kDefaultTolerance);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(StateId i) const { return labels_[i]; }
    std::optional<StateId> find_label(const std::string& label) const;

    double dist(StateId a, StateId b) const {
        if (a == b) return 0.0;
        return a > b ? dist_[tri_index(a, b)] : dist_[tri_index(b, a)];
    }
    double tolerance() const { return tol_; }

    StateId map(StateId i) const { return map_[i]; }
    StateId inverse(StateId i) const { return inv_[i]; }
    /// map applied i times (i may be negative).
    StateId iterate(StateId x, std::int64_t i) const;

    double diameter() const { return diameter_; }
    /// Smallest positive pairwise distance; 0 for a one-point system.
    double min_positive_distance() const { return min_positive_; }
    /// Minimal period of the state under the map (cycle length).
    Count period(StateId i) const { return period_[i]; }
    Count max_period() const { return max_period_; }

    /// Named subsets attached by generators or system files.
    void attach_subset(const std::string& name, StateSet members);
    const std::map<std::string, StateSet>& subsets() const { return named_subsets_; }
    const StateSet* find_subset(const std::string& name) const;

    StateSet all_states() const;
    StateSet image(const StateSet& s) const;
    StateSet preimage(const StateSet& s) const;
    bool is_invariant(const StateSet& s) const { return image(s) == s; }

    /// Declared meaningful resolution of the presentation. Generators that
    /// truncate an infinite system set this to the scale below which the
    /// truncation carries no structure; schedules clamp their ladders to it.
    /// Defaults to the minimum positive distance.
    double resolution() const { return resolution_; }
    void set_resolution(double r) { resolution_ = r; }

    /// Expansiveness certificate inherited from a symbolic origin, if any.
    struct ExpansiveCert {
        double constant = 0;
        std::string origin;
    };
    const std::optional<ExpansiveCert>& expansive_cert() const { return expansive_cert_; }
    void set_expansive_cert(ExpansiveCert c) { expansive_cert_ = std::move(c); }

    /// Restriction to an invariant subset, preserving labels and tolerance.
    /// Fails if the subset is not map-invariant.
    FiniteSystem restrict(const StateSet& s) const;

    /// Same system with a different comparison tolerance.
    FiniteSystem with_tolerance(double tol) const;

private:
    static std::size_t tri_index(StateId hi, StateId lo) {
        return std::size_t(hi) * (hi - 1) / 2 + lo;
    }
    void validate_metric() const;
    void compute_periods();

    std::vector<std::string> labels_;
    std::vector<double> dist_;  // strict lower triangle, row-major
    std::vector<StateId> map_;
    std::vector<StateId> inv_;
    std::vector<Count> period_;
    std::map<std::string, StateSet> named_subsets_;
    double tol_;
    double diameter_ = 0;
    double min_positive_ = 0;
    double resolution_ = 0;
    Count max_period_ = 1;
    std::optional<ExpansiveCert> expansive_cert_;
};

/// A finite pseudo-orbit window indexed by [i0, i0 + entries - 1], optionally
/// extended periodically on both sides by repeating the window.
struct FinitePseudoOrbit {
    std::vector<StateId> entries;
    std::int64_t i0 = 0;
    bool periodic = false;
};

/// Closed r-neighborhood {y : d(y, S) <= r}.
StateSet build_ball(const FiniteSystem& sys, const StateSet& s, double r);

struct InvariantCoreResult {
    StateSet core;
    bool stabilized = false;
    Count stabilized_at = 0;
};

/// Intersection of f^i(B_r(S)) over |i| <= horizon. Reports whether the nested
/// intersection stabilized before the horizon (for a finite system it always
/// stabilizes within |states| steps).
InvariantCoreResult invariant_core(const FiniteSystem& sys, const StateSet& s, double r,
                                   Count horizon);

/// sup over the window of d(f(x_i), x_{i+1}) <= delta; periodic extensions
/// contribute the wrap-around step.
bool is_pseudo_orbit(const FiniteSystem& sys, const FinitePseudoOrbit& po, double delta);

/// sup over the window of d(x_i, f^i(x)) <= eps, the window unrolled to one
/// full period when the orbit is periodic.
bool is_shadowed_by(const FiniteSystem& sys, const FinitePseudoOrbit& po, StateId x, double eps);

/// Y_r = {x : some other state lies within r}. Monotone in r.
StateSet accumulation_set(const FiniteSystem& sys, double r);

/// sup_i d(f^i x, f^i y) over the joint orbit period (exact for permutations).
double orbit_sup_distance(const FiniteSystem& sys, StateId x, StateId y);
/// true as soon as some iterate separates the pair strictly beyond `a`.
bool orbit_separates(const FiniteSystem& sys, StateId x, StateId y, double a);

}  // namespace topodyn

#endif
