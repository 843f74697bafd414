#ifndef TOPODYN_COMMON_HPP
#define TOPODYN_COMMON_HPP

#include <cstdint>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace topodyn {

using StateId = std::uint32_t;
using Count = std::int64_t;

/// Error codes shared with the C API (values must stay in sync with topodyn.h).
enum class Errc : int {
    ok = 0,
    invalid_argument = 1,
    parse_error = 2,
    not_found = 3,
    precondition = 4,
    search_failed = 5,
    unsupported = 6,
    io_error = 7,
    internal = 8,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

/// Default slack for comparisons on floating metric tables. Systems built from
/// exact dyadic data set their tolerance to zero and compare exactly.
inline constexpr double kDefaultTolerance = 0x1p-40;

/// d <= bound, up to tolerance.
inline bool leq(double d, double bound, double tol) { return d <= bound + tol; }
/// d > bound, strictly beyond tolerance. Complement of leq.
inline bool gt(double d, double bound, double tol) { return !leq(d, bound, tol); }

/// Largest power of two <= x (x > 0).
inline double dyadic_floor(double x) { return std::exp2(std::floor(std::log2(x))); }

/// Dyadic ladder 2^-1, 2^-2, ... down to the last value >= floor_value.
std::vector<double> dyadic_ladder(double floor_value, double start = 0.5);

/// Fixed-size bit set over state ids. Plain vector<u64> words, no bounds checks
/// beyond asserts in debug builds.
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t universe_size() const { return n_; }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    void clear() { for (auto& w : words_) w = 0; }

    std::size_t count() const;
    bool empty() const { return count() == 0; }
    bool contains(const StateSet& other) const;  // other subseteq this
    bool operator==(const StateSet& other) const { return n_ == other.n_ && words_ == other.words_; }

    StateSet& operator&=(const StateSet& other);
    StateSet& operator|=(const StateSet& other);

    std::vector<StateId> to_vector() const;
    static StateSet of(std::size_t n, const std::vector<StateId>& members);

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Least-squares slope of (x_i, y_i). Requires >= 2 points; equal x spacing not assumed.
double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys);

std::string format_double(double v);

}  // namespace topodyn

#endif
