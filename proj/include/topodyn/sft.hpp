#ifndef TOPODYN_SFT_HPP
#define TOPODYN_SFT_HPP

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "topodyn/finite_system.hpp"
#include "topodyn/symbolic_point.hpp"

namespace topodyn {

/// A subshift of finite type over alphabet {0..m-1}, held as a 1-step
/// transition relation on blocks of length `order` (order 1 for plain symbol
/// presentations; allowed-word presentations of length L are recoded to
/// (L-1)-blocks). The presentation is pruned to its bi-infinite core on
/// construction: every surviving block has a successor and a predecessor.
/// Points are eventually periodic SymbolicPoints over the original alphabet.
class Sft {
public:
    /// Default-constructed value is the empty subshift.
    Sft() = default;

    static Sft full_shift(Sym alphabet_size);
    static Sft golden_mean();
    /// 1-step transition pairs a -> b on symbols.
    static Sft from_transitions(Sym alphabet_size, const std::vector<std::pair<Sym, Sym>>& edges);
    /// The SFT of all sequences whose every L-window lies in `words`.
    static Sft from_words(Sym alphabet_size, std::size_t L, const std::vector<Word>& words);

    Sym alphabet_size() const { return m_; }
    std::size_t order() const { return ord_; }
    std::size_t block_count() const { return blocks_.size(); }
    bool empty() const { return blocks_.empty(); }
    const std::vector<Word>& blocks() const { return blocks_; }
    const std::vector<std::vector<std::uint32_t>>& successors() const { return adj_; }
    const std::vector<std::uint32_t>& successors_of(std::uint32_t b) const { return adj_[b]; }
    const std::vector<std::uint32_t>& predecessors_of(std::uint32_t b) const { return radj_[b]; }
    std::optional<std::uint32_t> find_block(const Word& b) const { return block_index(b); }

    bool member(const SymbolicPoint& p) const;
    bool has_word(const Word& w) const;

    /// All realized words of length n, sorted. Exact on the pruned core.
    std::vector<Word> words(std::size_t n) const;
    double word_count(std::size_t n) const;

    /// All periodic points of minimal period <= max_period (every phase is a
    /// distinct point), sorted deterministically.
    std::vector<SymbolicPoint> periodic_points(Count max_period) const;

    /// Finite metric system on the periodic points of period <= max_period with
    /// the shift metric (exact dyadic, tolerance 0). Carries the subshift
    /// expansiveness certificate.
    FiniteSystem truncation(Count max_period) const;

    /// Language equality / inclusion, decided on realized L-words for
    /// L = max(order) + 1. Exact.
    bool equals(const Sft& other) const;
    bool contains_language(const Sft& sub) const;

    /// log of the spectral radius of the block transition matrix, by power
    /// iteration with Collatz-Wielandt bounds to relative tolerance 1e-12.
    double spectral_entropy() const;
    /// Least-squares slope of log(#allowed n-words) over [n_max/2, n_max].
    double word_count_entropy(std::size_t n_max) const;

    std::string describe() const;

private:
    void prune();
    void index_blocks();

    Sym m_ = 0;
    std::size_t ord_ = 1;
    std::vector<Word> blocks_;                      // sorted
    std::vector<std::vector<std::uint32_t>> adj_;   // successor indices, sorted
    std::vector<std::vector<std::uint32_t>> radj_;  // predecessor indices, sorted

    std::optional<std::uint32_t> block_index(const Word& b) const;
    friend class SftBuilder;
};

/// Certificate that e is an expansive constant: in the shift metric any two
/// points within e at every shift agree at every index.
struct ExpansivityCertificate {
    double constant = 0.5;
    std::size_t pairs_checked = 0;
    std::string note;
};

ExpansivityCertificate expansivity_constant(const Sft& s);

/// Least n such that agreement within e on the window [-n, n] forces
/// d(x, y) <= eps, verified exhaustively over realized word pairs.
Count uniform_expansivity_horizon(const Sft& s, double e, double eps);

/// Pseudo-orbit of symbolic points on the window [i0, i0 + entries - 1],
/// optionally repeated periodically on both sides.
struct SymbolicPseudoOrbit {
    std::vector<SymbolicPoint> entries;
    std::int64_t i0 = 0;
    bool periodic = false;
};

bool is_pseudo_orbit(const Sft& s, const SymbolicPseudoOrbit& po, double delta);
bool is_shadowed_by(const Sft& s, const SymbolicPseudoOrbit& po, const SymbolicPoint& y,
                    double eps);

struct ShadowResult {
    SymbolicPoint point;
    double eps = 0;
};

/// The diagonal shadowing point y_i = (x_i)_0 with eps = delta, verified.
/// Requires delta <= 2^-(order+1) (and <= 1/4) so consecutive entries pin the
/// diagonal symbols through the transition relation.
ShadowResult constructive_shadow(const Sft& s, const SymbolicPseudoOrbit& po, double delta);

/// Cylinder description of W_r^s(x): all y agreeing with x on [-k, +inf).
struct LocalStableSet {
    std::int64_t from_index = 0;
    Word sample;  // x's symbols on [from_index, from_index + horizon]
    std::string description;
};

LocalStableSet local_stable_set(const Sft& s, const SymbolicPoint& x, double r, Count horizon);

/// Some y != x sharing x's right tail (so lim_{i->+inf} d(f^i x, f^i y) = 0),
/// or nullopt when x's past never branches.
std::optional<SymbolicPoint> asymptotic_pair(const Sft& s, const SymbolicPoint& x);

struct LocalMaximalityReport {
    bool locally_maximal = false;
    double witness_r = 0;
    std::vector<double> schedule;
};

/// Is G the maximal invariant set of one of its r-neighborhoods inside the
/// ambient subshift? Exact word-set computation: G is locally maximal at
/// r = 2^-g iff the SFT generated by G's (2g-1)-words reproduces exactly G's
/// language up to the checked window length. Searches the dyadic schedule
/// 2^-1 .. 2^-horizon.
LocalMaximalityReport is_locally_maximal(const Sft& ambient, const Sft& g, Count horizon);
/// Same check at a single radius.
bool is_locally_maximal_at(const Sft& ambient, const Sft& g, double r);

/// Sub-subshifts that are not of finite type enter by their language: a
/// provider returns the sorted realized words of each length. The equality
/// check runs word sets up to check_len.
using LanguageProvider = std::function<std::vector<Word>(std::size_t)>;
LocalMaximalityReport is_locally_maximal_language(const Sft& ambient, const LanguageProvider& g,
                                                  Count horizon, std::size_t check_len);

/// Language intersection of two subshifts over a common alphabet.
Sft sft_intersection(const Sft& a, const Sft& b);

/// Maximal invariant set of B_r(G) inside the ambient: the SFT generated by
/// G's realized (2g-1)-words, g = ceil(-log2 r), intersected with the ambient.
/// Used for Lambda_eps.
Sft invariant_core_sft(const Sft& ambient, const Sft& g, double r);

/// Strongly connected pieces of the block graph that carry at least one cycle,
/// as sub-SFTs: the symbolic chain-recurrent decomposition.
std::vector<Sft> chain_recurrent_pieces(const Sft& s);

/// A subshift is infinite iff some chain-recurrent piece carries two distinct
/// cycles through a common block.
bool is_infinite(const Sft& s);

}  // namespace topodyn

#endif
