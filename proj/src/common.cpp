#include "topodyn/common.hpp"

#include <bit>
#include <cstdio>

namespace topodyn {

std::vector<double> dyadic_ladder(double floor_value, double start) {
    if (floor_value <= 0) fail(Errc::invalid_argument, "dyadic ladder needs a positive floor");
    std::vector<double> out;
    for (double v = start; v >= floor_value && out.size() < 80; v /= 2) out.push_back(v);
    if (out.empty()) out.push_back(start);
    return out;
}

std::size_t StateSet::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool StateSet::contains(const StateSet& other) const {
    if (n_ != other.n_) return false;
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (other.words_[i] & ~words_[i]) return false;
    return true;
}

StateSet& StateSet::operator&=(const StateSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

StateSet& StateSet::operator|=(const StateSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

std::vector<StateId> StateSet::to_vector() const {
    std::vector<StateId> out;
    for (std::size_t i = 0; i < n_; ++i)
        if (test(i)) out.push_back(static_cast<StateId>(i));
    return out;
}

StateSet StateSet::of(std::size_t n, const std::vector<StateId>& members) {
    StateSet s(n);
    for (auto m : members) {
        if (m >= n) fail(Errc::invalid_argument, "state id out of range");
        s.set(m);
    }
    return s;
}

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        fail(Errc::invalid_argument, "slope fit needs at least two points");
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) { mx += xs[i]; my += ys[i]; }
    mx /= double(xs.size());
    my /= double(xs.size());
    double num = 0, den = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    if (den == 0) fail(Errc::invalid_argument, "degenerate slope fit");
    return num / den;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace topodyn
