#include "topodyn/generators.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "topodyn/sft.hpp"

namespace topodyn {

namespace {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    void reduce() {
        std::int64_t g = std::gcd(std::llabs(num), std::llabs(den));
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    double value() const { return double(num) / double(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// Standard Cantor coding of a periodic binary sequence: binary digits become
/// ternary 0/2 digits, so a point of period p maps to 2*V / (3^p - 1) with
/// V = sum w_j 3^{p-1-j}.
Rational cantor_code(const SymbolicPoint& w) {
    std::int64_t p = w.period();
    std::int64_t v = 0, pow = 1;
    for (std::int64_t j = p - 1; j >= 0; --j) {
        v += std::int64_t(w.at(j)) * pow;
        pow *= 3;
    }
    Rational r{2 * v, pow - 1};  // pow = 3^p here
    r.reduce();
    return r;
}

}  // namespace

FiniteSystem cantor_fan(Count fibers, Count max_period) {
    if (fibers < 2 || max_period < 1) fail(Errc::invalid_argument, "need N >= 2 and P >= 1");
    if (max_period > 10) fail(Errc::invalid_argument, "fiber period capped at 10");

    auto shift_points = Sft::full_shift(2).periodic_points(max_period);

    struct State {
        std::string label;
        double x = 0, y = 0;
        std::size_t map_to = 0;
    };
    std::vector<State> states;
    states.push_back({"origin", 0.0, 0.0, 0});

    std::vector<std::vector<std::size_t>> fiber_ids(std::size_t(fibers) + 1);
    for (Count n = 2; n <= fibers; ++n) {
        // index of each point within this fiber, for the shift map
        std::vector<std::size_t> ids;
        for (const auto& w : shift_points) {
            Rational y = cantor_code(w);
            State st;
            std::ostringstream os;
            os << "z(1/" << n << "," << y.str() << "/" << n << ")" << w.to_string();
            st.label = os.str();
            st.x = 1.0 / double(n);
            st.y = y.value() / double(n);
            ids.push_back(states.size());
            states.push_back(st);
        }
        // map: sigma within the fiber
        for (std::size_t i = 0; i < shift_points.size(); ++i) {
            SymbolicPoint img = shift_points[i].shifted(1);
            std::size_t target = 0;
            for (std::size_t j = 0; j < shift_points.size(); ++j)
                if (shift_points[j] == img) {
                    target = j;
                    break;
                }
            states[ids[i]].map_to = ids[target];
        }
        fiber_ids[std::size_t(n)] = std::move(ids);
    }

    std::vector<std::string> labels;
    std::vector<StateId> map;
    for (const auto& st : states) {
        labels.push_back(st.label);
        map.push_back(StateId(st.map_to));
    }
    std::vector<double> dist;
    dist.reserve(states.size() * (states.size() - 1) / 2);
    for (std::size_t a = 1; a < states.size(); ++a)
        for (std::size_t b = 0; b < a; ++b) {
            double dx = states[a].x - states[b].x, dy = states[a].y - states[b].y;
            dist.push_back(std::sqrt(dx * dx + dy * dy));
        }

    FiniteSystem sys(std::move(labels), std::move(dist), std::move(map));
    StateSet lam(sys.size());
    lam.set(0);
    sys.attach_subset("lambda", lam);
    for (Count n = 2; n <= fibers; ++n) {
        StateSet f(sys.size());
        for (auto id : fiber_ids[std::size_t(n)]) f.set(id);
        sys.attach_subset("fiber" + std::to_string(n), f);
    }
    sys.set_resolution(std::sqrt(2.0) / double(fibers));
    return sys;
}

FiniteSystem circle_accumulation(Count depth) {
    if (depth < 2) fail(Errc::invalid_argument, "need N >= 2");
    if (depth > 12) fail(Errc::invalid_argument, "depth capped at 12");
    const double tau = 2.0 * 3.14159265358979323846;

    struct State {
        std::string label;
        double x = 0, y = 0;
        std::size_t map_to = 0;
    };
    std::vector<State> states;
    std::vector<std::size_t> circle_ids;
    const Count csamples = Count(1) << (depth - 1);
    for (Count k = 0; k < csamples; ++k) {
        State st;
        double th = tau * double(k) / double(csamples);
        st.x = std::cos(th);
        st.y = std::sin(th);
        st.label = "S1:k=" + std::to_string(k);
        st.map_to = states.size();  // fixed
        circle_ids.push_back(states.size());
        states.push_back(st);
    }
    std::vector<std::vector<std::size_t>> ring_ids(std::size_t(depth) + 1);
    for (Count n = 1; n <= depth; ++n) {
        Count cnt = Count(1) << (n - 1);
        double radius = 1.0 - 1.0 / double(n);
        std::size_t base = states.size();
        for (Count k = 0; k < cnt; ++k) {
            State st;
            double th = tau * double(k) / double(cnt);
            st.x = radius * std::cos(th);
            st.y = radius * std::sin(th);
            st.label = "z:n=" + std::to_string(n) + ",k=" + std::to_string(k);
            st.map_to = base + std::size_t((k + 1) % cnt);
            ring_ids[std::size_t(n)].push_back(states.size());
            states.push_back(st);
        }
    }

    std::vector<std::string> labels;
    std::vector<StateId> map;
    for (const auto& st : states) {
        labels.push_back(st.label);
        map.push_back(StateId(st.map_to));
    }
    std::vector<double> dist;
    dist.reserve(states.size() * (states.size() - 1) / 2);
    for (std::size_t a = 1; a < states.size(); ++a)
        for (std::size_t b = 0; b < a; ++b) {
            double dx = states[a].x - states[b].x, dy = states[a].y - states[b].y;
            dist.push_back(std::sqrt(dx * dx + dy * dy));
        }

    FiniteSystem sys(std::move(labels), std::move(dist), std::move(map));
    StateSet circ(sys.size());
    for (auto id : circle_ids) circ.set(id);
    sys.attach_subset("circle", circ);
    StateSet rings(sys.size());
    for (Count n = 1; n <= depth; ++n) {
        StateSet r(sys.size());
        for (auto id : ring_ids[std::size_t(n)]) {
            r.set(id);
            rings.set(id);
        }
        sys.attach_subset("ring" + std::to_string(n), r);
    }
    sys.attach_subset("rings", rings);
    return sys;
}

}  // namespace topodyn
