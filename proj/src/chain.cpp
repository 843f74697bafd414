#include "topodyn/chain.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "topodyn/chaos.hpp"
#include "topodyn/scc.hpp"
#include "topodyn/sft.hpp"

namespace topodyn {

std::size_t ChainGraph::edge_count() const {
    std::size_t c = 0;
    for (const auto& e : edges) c += e.size();
    return c;
}

ChainGraph chain_graph(const FiniteSystem& sys, double delta) {
    if (delta < 0) fail(Errc::invalid_argument, "negative delta");
    ChainGraph g;
    g.delta = delta;
    g.edges.assign(sys.size(), {});
    for (StateId x = 0; x < sys.size(); ++x) {
        StateId fx = sys.map(x);
        for (StateId y = 0; y < sys.size(); ++y)
            if (leq(sys.dist(fx, y), delta, sys.tolerance())) g.edges[x].push_back(y);
    }
    return g;
}

std::size_t ChainDecomposition::component_of(StateId x) const {
    for (std::size_t c = 0; c < components.size(); ++c)
        if (std::binary_search(components[c].begin(), components[c].end(), x)) return c;
    return npos;
}

ChainDecomposition chain_components(const FiniteSystem& sys, double delta) {
    ChainGraph g = chain_graph(sys, delta);
    std::uint32_t ncomp = 0;
    auto comp = strongly_connected_components(g.edges, ncomp);

    // A state is chain recurrent iff its class carries a cycle: either the
    // class has >= 2 states, or the state has a self-loop.
    std::vector<std::size_t> class_size(ncomp, 0);
    for (StateId x = 0; x < sys.size(); ++x) ++class_size[comp[x]];

    ChainDecomposition dec;
    dec.delta = delta;
    dec.cr = StateSet(sys.size());
    for (StateId x = 0; x < sys.size(); ++x) {
        bool self_loop = std::binary_search(g.edges[x].begin(), g.edges[x].end(), x);
        if (class_size[comp[x]] >= 2 || self_loop) dec.cr.set(x);
    }

    std::map<std::uint32_t, std::vector<StateId>> by_class;
    for (StateId x = 0; x < sys.size(); ++x)
        if (dec.cr.test(x)) by_class[comp[x]].push_back(x);
    for (auto& [c, members] : by_class) {
        std::sort(members.begin(), members.end());
        dec.components.push_back(std::move(members));
    }
    std::sort(dec.components.begin(), dec.components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    // Mutual reachability inside the induced subgraph. Paths between members
    // of one strongly connected class never leave the class, so this holds
    // structurally; it is re-derived here (both directions) instead of assumed.
    dec.transitive.assign(dec.components.size(), false);
    std::vector<std::vector<std::uint32_t>> redges(sys.size());
    for (StateId x = 0; x < sys.size(); ++x)
        for (auto y : g.edges[x]) redges[y].push_back(x);
    for (std::size_t c = 0; c < dec.components.size(); ++c) {
        const auto& members = dec.components[c];
        StateSet in_comp = StateSet::of(sys.size(), members);
        auto reaches_all = [&](const std::vector<std::vector<std::uint32_t>>& adj) {
            std::vector<StateId> stack{members.front()};
            StateSet seen(sys.size());
            seen.set(members.front());
            while (!stack.empty()) {
                StateId u = stack.back();
                stack.pop_back();
                for (auto v : adj[u])
                    if (in_comp.test(v) && !seen.test(v)) {
                        seen.set(v);
                        stack.push_back(v);
                    }
            }
            for (auto m : members)
                if (!seen.test(m)) return false;
            return true;
        };
        dec.transitive[c] = reaches_all(g.edges) && reaches_all(redges);
    }
    return dec;
}

StateSet periodic_points(const FiniteSystem& sys, Count max_period) {
    if (max_period < 1) fail(Errc::invalid_argument, "max_period must be at least 1");
    StateSet s(sys.size());
    for (StateId x = 0; x < sys.size(); ++x)
        if (sys.period(x) <= max_period) s.set(x);
    return s;
}

bool cr_equals_per(const FiniteSystem& sys, double delta, Count max_period) {
    auto dec = chain_components(sys, delta);
    return dec.cr == periodic_points(sys, max_period);
}

std::string condensation_dot(const FiniteSystem& sys, const ChainDecomposition& dec) {
    std::ostringstream os;
    os << "digraph condensation {\n";
    os << "  rankdir=LR;\n";
    for (std::size_t c = 0; c < dec.components.size(); ++c)
        os << "  c" << c << " [label=\"C" << c << " (" << dec.components[c].size()
           << ")\", shape=box];\n";
    // edges between distinct components of the delta-graph
    ChainGraph g = chain_graph(sys, dec.delta);
    std::set<std::pair<std::size_t, std::size_t>> drawn;
    for (std::size_t c = 0; c < dec.components.size(); ++c) {
        for (StateId x : dec.components[c]) {
            for (StateId y : g.edges[x]) {
                std::size_t cy = dec.component_of(y);
                if (cy != ChainDecomposition::npos && cy != c && !drawn.count({c, cy})) {
                    drawn.insert({c, cy});
                    os << "  c" << c << " -> c" << cy << ";\n";
                }
            }
        }
    }
    os << "}\n";
    return os.str();
}

std::string chain_csv(const FiniteSystem& sys, const std::vector<double>& deltas) {
    std::ostringstream os;
    os << "delta,cr_size,component_count,max_component_size,component_sizes\n";
    for (double d : deltas) {
        auto dec = chain_components(sys, d);
        std::size_t mx = 0;
        std::string sizes;
        for (const auto& c : dec.components) {
            mx = std::max(mx, c.size());
            sizes += (sizes.empty() ? "" : ";") + std::to_string(c.size());
        }
        os << format_double(d) << "," << dec.cr.count() << "," << dec.components.size() << ","
           << mx << "," << sizes << "\n";
    }
    return os.str();
}

RefinementFamily truncation_family(const Sft& s, Count p_min, Count p_max,
                                   const std::string& name) {
    if (p_min < 1 || p_max < p_min) fail(Errc::invalid_argument, "bad truncation range");
    RefinementFamily fam;
    fam.declared_limit = name;
    fam.expansive_certified = true;
    fam.period_bound = p_min;
    for (Count p = p_min; p <= p_max; ++p) fam.members.push_back(s.truncation(p));
    return fam;
}

RefinementFamily constant_family(const FiniteSystem& sys, std::size_t copies,
                                 const std::string& name) {
    if (copies < 1) fail(Errc::invalid_argument, "family needs at least one member");
    RefinementFamily fam;
    fam.declared_limit = name;
    fam.period_bound = sys.max_period();
    // A finite system is expansive outright: distinct orbits separate at least
    // by the smallest pairwise orbit sup-distance. Certify half of it.
    double e0 = 0;
    for (StateId x = 0; x < sys.size(); ++x)
        for (StateId y = 0; y < x; ++y) {
            double s = orbit_sup_distance(sys, x, y);
            if (e0 == 0 || s < e0) e0 = s;
        }
    fam.expansive_certified = true;
    for (std::size_t i = 0; i < copies; ++i) {
        FiniteSystem member = sys;
        if (!member.expansive_cert() && e0 > 0)
            member.set_expansive_cert({e0 / 2, "finite system, min orbit separation"});
        fam.members.push_back(std::move(member));
    }
    return fam;
}

namespace {

/// growing past the threshold -> infinite side; settled to a plateau ->
/// finite side; still rising below the threshold -> too short to tell.
FamilySide classify_growth(const std::vector<std::size_t>& seq, std::size_t threshold) {
    if (seq.empty()) return FamilySide::inconclusive;
    if (seq.size() == 1) return seq.back() >= threshold ? FamilySide::infinite : FamilySide::finite;
    bool rising_tail = seq[seq.size() - 1] > seq[seq.size() - 2];
    if (seq.back() >= threshold && seq.back() > seq.front()) return FamilySide::infinite;
    if (!rising_tail) return FamilySide::finite;
    return FamilySide::inconclusive;
}

const char* side_name(FamilySide s) {
    switch (s) {
        case FamilySide::finite: return "finite";
        case FamilySide::infinite: return "infinite";
        default: return "inconclusive";
    }
}

}  // namespace

Theorem11Report theorem_1_1_verify(const RefinementFamily& family, double a,
                                   const std::vector<double>& delta_schedule,
                                   std::size_t growth_threshold) {
    if (family.members.empty()) fail(Errc::invalid_argument, "empty family");
    if (delta_schedule.empty()) fail(Errc::invalid_argument, "empty delta schedule");

    Theorem11Report rep;
    std::vector<double> deltas = delta_schedule;
    std::sort(deltas.begin(), deltas.end());

    // per-delta tables of the largest component size across refinements
    std::vector<std::vector<std::size_t>> comp_table(deltas.size());

    for (const auto& sys : family.members) {
        auto dec0 = chain_components(sys, deltas.front());  // finest delta
        auto sen = sensitive_points(sys, dec0.cr, a);
        rep.sen_nonempty.push_back(!sen.sensitive.empty());
        rep.cr_sizes.push_back(dec0.cr.count());
        rep.cr_equals_per.push_back(dec0.cr == periodic_points(sys, family.period_bound));

        std::size_t max_over_deltas = 0;
        for (std::size_t di = 0; di < deltas.size(); ++di) {
            auto dec = (di == 0) ? dec0 : chain_components(sys, deltas[di]);
            std::size_t mx = 0;
            for (const auto& c : dec.components) mx = std::max(mx, c.size());
            comp_table[di].push_back(mx);
            max_over_deltas = std::max(max_over_deltas, mx);
        }
        rep.max_component_sizes.push_back(max_over_deltas);
    }

    bool all_sen = std::all_of(rep.sen_nonempty.begin(), rep.sen_nonempty.end(),
                               [](bool b) { return b; });
    bool none_sen = std::none_of(rep.sen_nonempty.begin(), rep.sen_nonempty.end(),
                                 [](bool b) { return b; });
    rep.cond_sensitivity = all_sen    ? FamilySide::infinite
                           : none_sen ? FamilySide::finite
                                      : FamilySide::inconclusive;
    rep.cond_cr_size = classify_growth(rep.cr_sizes, growth_threshold);
    rep.cond_components = FamilySide::finite;
    for (const auto& col : comp_table) {
        FamilySide s = classify_growth(col, growth_threshold);
        if (s == FamilySide::infinite) {
            rep.cond_components = FamilySide::infinite;
            break;
        }
        if (s == FamilySide::inconclusive) rep.cond_components = FamilySide::inconclusive;
    }
    rep.cond_cr_vs_per = std::any_of(rep.cr_equals_per.begin(), rep.cr_equals_per.end(),
                                     [](bool b) { return !b; })
                             ? FamilySide::infinite
                             : FamilySide::finite;

    rep.side_sensitive = rep.cond_sensitivity == FamilySide::infinite;
    rep.side_cr_growing = rep.cond_cr_size == FamilySide::infinite;
    rep.side_comp_growing = rep.cond_components == FamilySide::infinite;
    rep.side_cr_not_per = rep.cond_cr_vs_per == FamilySide::infinite;

    rep.applicable = family.expansive_certified;
    bool any_finite = false, any_infinite = false;
    for (FamilySide s : {rep.cond_sensitivity, rep.cond_cr_size, rep.cond_components,
                         rep.cond_cr_vs_per}) {
        if (s == FamilySide::finite) any_finite = true;
        if (s == FamilySide::infinite) any_infinite = true;
        if (s != FamilySide::inconclusive) ++rep.conclusive;
    }
    // a genuine counterexample needs two conclusive conditions on opposite sides
    rep.consistent = !(any_finite && any_infinite);

    std::ostringstream os;
    os << "family '" << family.declared_limit << "' (" << family.members.size()
       << " refinements), a=" << format_double(a) << "\n";
    os << "(0) Sen_a(f|CR) nonempty at every refinement: " << side_name(rep.cond_sensitivity)
       << "\n";
    os << "(1) |CR| growing past " << growth_threshold << ": " << side_name(rep.cond_cr_size)
       << " (";
    for (auto v : rep.cr_sizes) os << v << " ";
    os << ")\n";
    os << "(2) max component size growing past " << growth_threshold << ": "
       << side_name(rep.cond_components) << "\n";
    os << "(3) CR = Per_{<=" << family.period_bound
       << "} fails at some refinement: " << (rep.side_cr_not_per ? "yes" : "no") << "\n";
    if (!rep.applicable)
        os << "verdict: none (no expansiveness certificate; the equivalence is not claimed)\n";
    else if (rep.consistent && rep.conclusive < 4)
        os << "verdict: CONSISTENT (" << rep.conclusive
           << " of 4 conditions conclusive; extend the family or lower the threshold for the rest)\n";
    else
        os << "verdict: " << (rep.consistent ? "CONSISTENT" : "INCONSISTENT") << "\n";
    rep.summary = os.str();
    return rep;
}

}  // namespace topodyn
