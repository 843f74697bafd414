#include "topodyn/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "topodyn/clique.hpp"

namespace topodyn {

namespace {

/// Separation graph on K: edge iff max_{0<=i<n} d(f^i x, f^i y) > r.
std::vector<std::vector<bool>> separation_graph(const FiniteSystem& sys,
                                                const std::vector<StateId>& members, Count n,
                                                double r) {
    const std::size_t k = members.size();
    std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            StateId u = members[i], v = members[j];
            bool sep = false;
            for (Count t = 0; t < n && !sep; ++t) {
                if (gt(sys.dist(u, v), r, sys.tolerance())) sep = true;
                u = sys.map(u);
                v = sys.map(v);
            }
            adj[i][j] = adj[j][i] = sep;
        }
    }
    return adj;
}

}  // namespace

SeparatedSet separated_set(const FiniteSystem& sys, const StateSet& k, Count n, double r,
                           SeparatedMode mode, std::size_t exact_cap) {
    if (n < 1) fail(Errc::invalid_argument, "need n >= 1");
    if (!(r > 0)) fail(Errc::invalid_argument, "need r > 0");
    auto members = k.to_vector();
    if (members.empty()) fail(Errc::precondition, "separated set of the empty set");

    SeparatedSet out;
    out.mode = mode;
    if (mode == SeparatedMode::exact) {
        if (members.size() > exact_cap)
            fail(Errc::unsupported, "exact separated set capped at " + std::to_string(exact_cap) +
                                        " states (got " + std::to_string(members.size()) + ")");
        auto adj = separation_graph(sys, members, n, r);
        auto clique = max_clique(adj);
        for (auto idx : clique) out.members.push_back(members[idx]);
    } else {
        // maximal by inclusion, deterministic under state-id order
        for (StateId x : members) {
            bool ok = true;
            for (StateId y : out.members) {
                StateId u = x, v = y;
                bool sep = false;
                for (Count t = 0; t < n && !sep; ++t) {
                    if (gt(sys.dist(u, v), r, sys.tolerance())) sep = true;
                    u = sys.map(u);
                    v = sys.map(v);
                }
                if (!sep) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.members.push_back(x);
        }
    }
    std::sort(out.members.begin(), out.members.end());
    out.s_n = out.members.size();
    return out;
}

EntropyReport entropy_estimate(const FiniteSystem& sys, const StateSet& k,
                               const std::vector<double>& r_schedule, Count n_max,
                               std::size_t exact_cap) {
    if (n_max < 4) fail(Errc::invalid_argument, "need n_max >= 4");
    if (r_schedule.empty()) fail(Errc::invalid_argument, "empty r schedule");
    auto members = k.to_vector();
    if (members.empty()) fail(Errc::precondition, "entropy of the empty set");

    EntropyReport rep;
    rep.n_max = n_max;
    SeparatedMode mode =
        members.size() <= exact_cap ? SeparatedMode::exact : SeparatedMode::greedy;

    bool all_degenerate = true;
    double best = 0;
    for (double r : r_schedule) {
        std::vector<double> xs, ys;
        bool nontrivial = false;
        for (Count n = 1; n <= n_max; ++n) {
            auto s = separated_set(sys, k, n, r, mode, exact_cap);
            rep.rows.push_back({r, n, s.s_n, mode});
            if (s.s_n > 1) nontrivial = true;
            if (n >= (n_max + 1) / 2) {
                xs.push_back(double(n));
                ys.push_back(std::log(double(s.s_n)));
            }
        }
        EntropyReport::PerR pr;
        pr.r = r;
        pr.degenerate = !nontrivial;
        pr.slope = nontrivial ? least_squares_slope(xs, ys) : 0.0;
        if (nontrivial) {
            // rms residual of the fit, for convergence quality
            double mx = 0, my = 0;
            for (std::size_t i = 0; i < xs.size(); ++i) { mx += xs[i]; my += ys[i]; }
            mx /= double(xs.size());
            my /= double(xs.size());
            double ss = 0;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                double fit = my + pr.slope * (xs[i] - mx);
                ss += (ys[i] - fit) * (ys[i] - fit);
            }
            pr.residual = std::sqrt(ss / double(xs.size()));
            all_degenerate = false;
        }
        rep.per_r.push_back(pr);
        best = std::max(best, pr.slope);
    }
    rep.degenerate = all_degenerate;
    rep.estimate = all_degenerate ? 0.0 : best;
    return rep;
}

std::vector<double> default_r_schedule(const FiniteSystem& sys, const StateSet& k) {
    auto members = k.to_vector();
    std::set<double> realized;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            double d = sys.dist(members[i], members[j]);
            if (d > 0) realized.insert(d);
        }
    std::vector<double> out;
    if (realized.empty()) return {0.5};
    double lo = *realized.begin(), hi = *realized.rbegin();
    for (double v = dyadic_floor(hi); v >= lo / 2; v /= 2) {
        out.push_back(v);
        // separation graphs only change at realized distances: track each
        // dyadic bucket's extreme realized values, nudged down so pairs at
        // exactly that distance count as separated
        auto it = realized.upper_bound(v);
        if (it != realized.begin()) out.push_back(*std::prev(it) * (1.0 - 0x1p-20));
        auto ge = realized.lower_bound(v / 2);
        if (ge != realized.end() && *ge < v) out.push_back(*ge * (1.0 - 0x1p-20));
        if (out.size() > 200) break;
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<double> exhaustive_r_schedule(const FiniteSystem& sys, const StateSet& k,
                                          std::size_t cap) {
    auto members = k.to_vector();
    std::set<double> realized;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            double d = sys.dist(members[i], members[j]);
            if (d > 0) realized.insert(d);
        }
    if (realized.empty()) return {0.5};
    if (realized.size() > cap) return default_r_schedule(sys, k);
    std::vector<double> out;
    for (double d : realized) out.push_back(d * (1.0 - 0x1p-20));
    for (double v = dyadic_floor(*realized.rbegin()); v >= *realized.begin() / 2; v /= 2)
        out.push_back(v);
    std::sort(out.begin(), out.end(), std::greater<>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string EntropyReport::csv() const {
    std::ostringstream os;
    os << "r,n,s_n,mode\n";
    for (const auto& row : rows)
        os << format_double(row.r) << "," << row.n << "," << row.s_n << ","
           << (row.mode == SeparatedMode::exact ? "exact" : "greedy") << "\n";
    return os.str();
}

}  // namespace topodyn
