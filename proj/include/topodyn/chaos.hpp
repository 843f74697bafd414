#ifndef TOPODYN_CHAOS_HPP
#define TOPODYN_CHAOS_HPP

#include <optional>
#include <string>
#include <vector>

#include "topodyn/finite_system.hpp"
#include "topodyn/sft.hpp"

namespace topodyn {

/// Witness that x is a-sensitive: a nearby y whose orbit separates beyond a.
struct SensitivityWitness {
    StateId y = 0;
    Count iterate = 0;
    double start_distance = 0;
    double separation = 0;
};

struct SensitivityReport {
    double a = 0;
    StateSet sensitive;
    std::vector<std::optional<SensitivityWitness>> witnesses;  // per state
    std::vector<double> probe_schedule;

    bool reverify(const FiniteSystem& sys) const;
};

/// Exact a-sensitive set of f restricted to an invariant subset. A state is
/// sensitive iff at every probe of the dyadic schedule (down to the smallest
/// positive pairwise distance within the subset) some subset state within the
/// probe separates strictly beyond a along the joint orbit.
SensitivityReport sensitive_points(const FiniteSystem& sys, const StateSet& restrict_to, double a);

struct EquicontinuityResult {
    bool equicontinuous = false;
    double delta = 0;  // largest schedule delta that works
    // counterexample when not equicontinuous at any schedule delta
    StateId z = 0, w = 0;
    Count iterate = 0;
    double separation = 0;
};

/// Largest schedule delta with d(z,w) <= delta implying sup_i d(f^i z, f^i w)
/// <= eps, or a witness pair when no schedule delta works.
EquicontinuityResult equicontinuity_modulus(const FiniteSystem& sys, double eps);

/// The Smale-horseshoe certificate: two delta-chains through a sensitive base
/// point whose k-th entries separate beyond 2*eps, plus shadowing realizations
/// of every two-symbol pattern word. Forces entropy >= log(2)/m.
struct HorseshoeCertificate {
    SymbolicPoint base = SymbolicPoint::periodic({0});
    Count separation_index = 0;  // k
    Count chain_length = 0;      // m
    std::vector<SymbolicPoint> chain_z, chain_w;  // m+1 entries, endpoints = base
    double delta = 0;  // realized chain slack (max jump over both chains)
    double eps = 0;
    double a = 0;
    double separation = 0;  // d(z_k, w_k)
    double entropy_lower_bound = 0;  // log(2)/m
    Count word_length = 0;           // ell
    std::vector<SymbolicPoint> realized;  // x_s over all 2^ell pattern words, z=0 bit
    std::string note;

    /// Re-checks every claim from raw data: chains are delta-chains with the
    /// stated endpoints, the margin separation - 2*eps is strictly positive,
    /// each x_s shadows its spliced pseudo-orbit within eps, the realizations
    /// are pairwise (ell*m, eps)-separated, and the bound equals log(2)/m.
    bool verify(const Sft& sys, std::string* why = nullptr) const;
};

/// Builds a verified certificate on a subshift. The base point must be
/// periodic and a-sensitive (its chain-recurrent piece branches); eps < a/2.
HorseshoeCertificate horseshoe_certificate(const Sft& sys, const SymbolicPoint& base, double eps,
                                           double a, Count word_length = 3);

/// Finite-system flavour: delta-chains are state sequences; realizations are
/// states shadowing the spliced pseudo-orbits.
struct FiniteHorseshoeCertificate {
    StateId base = 0;
    Count separation_index = 0;
    Count chain_length = 0;
    std::vector<StateId> chain_z, chain_w;
    double delta = 0;
    double eps = 0;
    double a = 0;
    double separation = 0;
    double entropy_lower_bound = 0;
    Count word_length = 0;
    std::vector<StateId> realized;

    bool verify(const FiniteSystem& sys, std::string* why = nullptr) const;
};

FiniteHorseshoeCertificate horseshoe_certificate(const FiniteSystem& sys,
                                                 const StateSet& lambda, double eps, double a,
                                                 Count word_length = 2);

/// Finite-model checks for the all-periodic case: an expansive system with
/// X = Per(f) must be finite, and sensitive points accumulate.
struct AppendixReport {
    bool all_periodic = false;                // X = Per(f)
    bool sen_nonempty = false;
    std::vector<StateId> sensitive_states;
    bool sen_in_accumulation = false;         // Sen_a(f) inside Y_r
    std::vector<StateId> violations;          // sensitive states outside Y_r
    bool expansive_cert_present = false;
    bool sen_empty_at_cert = false;           // Sen_e(f) empty at the certified e
    std::string note;
    std::string to_text() const;
};

AppendixReport appendix_verify(const FiniteSystem& sys, double a, double r);

}  // namespace topodyn

#endif
