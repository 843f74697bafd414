#ifndef TOPODYN_SYMBOLIC_POINT_HPP
#define TOPODYN_SYMBOLIC_POINT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "topodyn/common.hpp"

namespace topodyn {

using Sym = std::uint32_t;
using Word = std::vector<Sym>;

/// Shortest word u with w = u^k.
Word primitive_root(const Word& w);

/// An eventually periodic bi-infinite symbol sequence:
///
///     ... L L L | center | R R R ...
///
/// with the center occupying [center_start, center_start + |center|), the left
/// period word anchored so its last symbol sits at center_start - 1, and the
/// right period word starting right after the center.
///
/// Instances are normalized on construction: period words are primitive, the
/// center is minimal (symbols matching a periodic continuation are absorbed
/// into the tails), and purely periodic sequences are rebased to the
/// lexicographically least rotation with center_start in [0, period). Equality
/// of normal forms is therefore equality of sequences.
class SymbolicPoint {
public:
    /// Purely periodic point x_i = word[(i - phase) mod |word|].
    static SymbolicPoint periodic(const Word& word, std::int64_t phase = 0);
    /// General eventually periodic point; words must be non-empty.
    static SymbolicPoint eventually_periodic(const Word& left, const Word& center,
                                             const Word& right, std::int64_t center_start);

    Sym at(std::int64_t i) const;
    SymbolicPoint shifted(std::int64_t by = 1) const;

    bool is_periodic() const { return center_.empty() && left_ == right_; }
    /// Minimal period for purely periodic points; fails otherwise.
    Count period() const;

    const Word& left_word() const { return left_; }
    const Word& center_word() const { return center_; }
    const Word& right_word() const { return right_; }
    std::int64_t center_start() const { return cs_; }

    /// Indices outside [span_lo, span_hi) are in the purely periodic tails.
    std::int64_t span_lo() const { return cs_; }
    std::int64_t span_hi() const { return cs_ + std::int64_t(center_.size()); }

    bool operator==(const SymbolicPoint& o) const {
        return cs_ == o.cs_ && center_ == o.center_ && left_ == o.left_ && right_ == o.right_;
    }
    bool operator!=(const SymbolicPoint& o) const { return !(*this == o); }
    bool operator<(const SymbolicPoint& o) const;  // arbitrary total order for containers

    std::size_t hash() const;
    /// Canonical text form `(left).center.(right)@start`; parse with parse().
    std::string to_string() const;
    static SymbolicPoint parse(const std::string& text);

private:
    SymbolicPoint() = default;
    void normalize();

    Word left_{0}, center_{}, right_{0};
    std::int64_t cs_ = 0;
};

/// d(p, q) = 2^{-min{|i| : p_i != q_i}}, 0 when equal. Exact dyadic output.
double shift_metric(const SymbolicPoint& p, const SymbolicPoint& q);

struct SymbolicPointHash {
    std::size_t operator()(const SymbolicPoint& p) const { return p.hash(); }
};

}  // namespace topodyn

#endif
