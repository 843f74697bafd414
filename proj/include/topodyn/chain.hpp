#ifndef TOPODYN_CHAIN_HPP
#define TOPODYN_CHAIN_HPP

#include <string>
#include <vector>

#include "topodyn/finite_system.hpp"

namespace topodyn {

/// The delta-edge digraph over states: (x, y) is an edge iff d(f(x), y) <= delta.
/// Genuine orbit edges (x, f(x)) are always present.
struct ChainGraph {
    double delta = 0;
    std::vector<std::vector<std::uint32_t>> edges;  // successor lists, sorted

    std::size_t edge_count() const;
};

ChainGraph chain_graph(const FiniteSystem& sys, double delta);

/// CR set and chain components at a fixed delta. A state is chain recurrent
/// iff it lies on a cycle with at least one edge; components are the strongly
/// connected classes restricted to CR, numbered by smallest member state.
struct ChainDecomposition {
    double delta = 0;
    StateSet cr;
    std::vector<std::vector<StateId>> components;
    std::vector<bool> transitive;  // mutual reachability inside the component

    std::size_t component_of(StateId x) const;  // index into components, or npos
    static constexpr std::size_t npos = std::size_t(-1);
};

ChainDecomposition chain_components(const FiniteSystem& sys, double delta);

/// Exact periodic point set: states whose map-cycle length is <= max_period.
StateSet periodic_points(const FiniteSystem& sys, Count max_period);

/// CR_delta == Per_{<= max_period}, the finite-model form of CR(f) = Per(f).
bool cr_equals_per(const FiniteSystem& sys, double delta, Count max_period);

/// DOT rendering of the condensation (component) graph.
std::string condensation_dot(const FiniteSystem& sys, const ChainDecomposition& dec);

/// CSV rows (delta, cr_size, component_count, max_component_size) per delta.
std::string chain_csv(const FiniteSystem& sys, const std::vector<double>& deltas);

/// A refinement family: systems indexed by a truncation parameter, with the
/// declared limit and the data the thm11 conditions are judged against.
struct RefinementFamily {
    std::vector<FiniteSystem> members;
    std::string declared_limit;
    bool expansive_certified = false;
    /// Fixed period bound for the family-level reading of CR = Per. Defaults
    /// to the largest minimal period seen in the first (coarsest) member.
    Count period_bound = 0;
};

RefinementFamily truncation_family(const class Sft& s, Count p_min, Count p_max,
                                   const std::string& name);
RefinementFamily constant_family(const FiniteSystem& sys, std::size_t copies,
                                 const std::string& name);

/// Classification of one thm11 condition across a family. A sequence
/// still rising at the last refinement without reaching the growth threshold
/// is inconclusive: the family is too short to witness either side.
enum class FamilySide { finite, infinite, inconclusive };

/// Classification of the four thm11 conditions across a family.
struct Theorem11Report {
    // per-refinement observations
    std::vector<bool> sen_nonempty;
    std::vector<std::size_t> cr_sizes;
    std::vector<std::size_t> max_component_sizes;
    std::vector<bool> cr_equals_per;

    FamilySide cond_sensitivity = FamilySide::inconclusive;  // (0) Sen_a(f|CR) nonempty
    FamilySide cond_cr_size = FamilySide::inconclusive;      // (1) |CR| infinite
    FamilySide cond_components = FamilySide::inconclusive;   // (2) some component infinite
    FamilySide cond_cr_vs_per = FamilySide::inconclusive;    // (3) CR != Per

    // convenience: the infinite-side booleans of the conclusive reading
    bool side_sensitive = false;
    bool side_cr_growing = false;
    bool side_comp_growing = false;
    bool side_cr_not_per = false;

    bool applicable = false;   // family carries an expansiveness certificate
    bool consistent = false;   // no two conclusive conditions disagree
    std::size_t conclusive = 0;
    std::string summary;
};

/// Verifies the four-way finiteness equivalence across a refinement family:
/// on expansive families sensitivity of the restriction to CR, growth of |CR|,
/// growth of the largest chain component, and failure of CR = Per must agree.
/// Families without an expansiveness certificate get
/// the condition table but no verdict.
Theorem11Report theorem_1_1_verify(const RefinementFamily& family, double a,
                                   const std::vector<double>& delta_schedule,
                                   std::size_t growth_threshold);

}  // namespace topodyn

#endif
