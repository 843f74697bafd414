#include "topodyn/modelbuild.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "topodyn/chain.hpp"

namespace topodyn {

namespace {

std::int64_t dyadic_level_of(double x) {
    std::int64_t c = 0;
    double v = 1.0;
    while (v > x * (1 + 1e-12) && c < 1060) {
        v /= 2;
        ++c;
    }
    return c;
}

}  // namespace

SymbolicPartition clopen_partition(const Sft& lambda, double e) {
    if (!(e > 0)) fail(Errc::invalid_argument, "cell diameter bound must be positive");
    if (lambda.empty()) fail(Errc::precondition, "partition of the empty subshift");
    std::int64_t h = 0;
    while (!(std::exp2(double(-h - 1)) < e)) {
        ++h;
        if (h > 40)
            fail(Errc::precondition, "e below the smallest realized scale of the presentation");
    }
    SymbolicPartition part;
    part.half_width = h;
    part.cell_diameter = std::exp2(double(-h - 1));
    part.cells = lambda.words(std::size_t(2 * h + 1));
    return part;
}

SymbolicPoint SymbolicSftModel::decode(const SymbolicPoint& itinerary) const {
    const std::int64_t h = partition.half_width;
    auto decode_word = [&](const Word& w) {
        Word out;
        for (Sym s : w) {
            if (s >= partition.cells.size()) fail(Errc::invalid_argument, "cell index out of range");
            out.push_back(partition.cells[std::size_t(s)][std::size_t(h)]);
        }
        return out;
    };
    return SymbolicPoint::eventually_periodic(decode_word(itinerary.left_word()),
                                              decode_word(itinerary.center_word()),
                                              decode_word(itinerary.right_word()),
                                              itinerary.center_start());
}

SymbolicSftModel build_sft_model(const Sft& ambient, const Sft& lambda,
                                 const SymbolicPartition& partition, Count n, double c,
                                 Count conjugacy_window) {
    if (n < 1) fail(Errc::invalid_argument, "window n must be at least 1");
    if (!ambient.contains_language(lambda))
        fail(Errc::precondition, "subsystem language not contained in the ambient subshift");
    const std::int64_t h = partition.half_width;
    const Sym mcells = Sym(partition.cells.size());
    if (mcells == 0) fail(Errc::precondition, "empty partition");

    if (c == 0) c = std::exp2(double(-h - 1));  // largest dyadic keeping B_k disjoint
    std::int64_t g = dyadic_level_of(c);
    if (g < h + 1)
        fail(Errc::precondition,
             "thickened cells are not disjoint at the requested c (need c <= cell diameter)");

    SymbolicSftModel model;
    model.partition = partition;
    model.window_n = n;
    model.c = c;
    model.cells_disjoint = true;  // cells are distinct words, so their cylinders are disjoint

    auto cell_index = [&](const Word& w) -> Sym {
        auto it = std::lower_bound(partition.cells.begin(), partition.cells.end(), w);
        if (it == partition.cells.end() || *it != w)
            fail(Errc::internal, "window not covered by the partition");
        return Sym(it - partition.cells.begin());
    };

    // Itinerary recoding: a lambda word of length l + 2h recodes to a cell word
    // of length l.
    auto recode = [&](const Word& u) {
        Word v;
        for (std::size_t j = 0; j + 2 * std::size_t(h) < u.size(); ++j)
            v.push_back(cell_index(Word(u.begin() + j, u.begin() + j + 2 * h + 1)));
        return v;
    };

    const std::size_t wlen = std::size_t(2 * n + 1);
    std::vector<Word> w_set;
    for (const auto& u : lambda.words(wlen + 2 * std::size_t(h))) w_set.push_back(recode(u));
    std::sort(w_set.begin(), w_set.end());
    w_set.erase(std::unique(w_set.begin(), w_set.end()), w_set.end());
    model.word_set = w_set;
    model.xi = Sft::from_words(mcells, wlen, w_set);

    // Sigma: the exact recoding of lambda, at a window long enough to carry
    // lambda's own constraints.
    std::size_t sig_len = std::max({wlen, lambda.order() + 1, ambient.order() + 1});
    std::vector<Word> sig_words;
    for (const auto& u : lambda.words(sig_len + 2 * std::size_t(h)))
        sig_words.push_back(recode(u));
    std::sort(sig_words.begin(), sig_words.end());
    sig_words.erase(std::unique(sig_words.begin(), sig_words.end()), sig_words.end());
    model.sigma = Sft::from_words(mcells, sig_len, sig_words);
    model.sigma_in_xi = model.xi.contains_language(model.sigma);

    // Gamma: decode xi through the cell centers. Cells have width 2h+1, so a
    // decoded defining word has length (2n+1) + 2h.
    std::vector<Word> gamma_words;
    for (const auto& v : model.xi.words(wlen)) {
        Word u;
        for (std::size_t j = 0; j < v.size(); ++j) {
            const Word& cell = partition.cells[v[j]];
            if (j == 0)
                u.insert(u.end(), cell.begin(), cell.end());
            else
                u.push_back(cell.back());
        }
        gamma_words.push_back(std::move(u));
    }
    std::sort(gamma_words.begin(), gamma_words.end());
    gamma_words.erase(std::unique(gamma_words.begin(), gamma_words.end()), gamma_words.end());
    model.gamma = Sft::from_words(ambient.alphabet_size(), wlen + 2 * std::size_t(h), gamma_words);

    // Sandwich: Lambda inside Gamma_c inside B_c(Lambda).
    bool lower = model.gamma.contains_language(lambda);
    std::size_t bw = std::size_t(2 * g - 1);
    auto gw = model.gamma.words(bw);
    auto lw = lambda.words(bw);
    bool upper = std::includes(lw.begin(), lw.end(), gw.begin(), gw.end());
    model.sandwich = lower && upper;

    // Conjugacy: h(sigma s) = f(h(s)) on all materialized periodic points.
    model.conjugacy_window = conjugacy_window;
    model.conjugacy_checked = true;
    for (const auto& s : model.xi.periodic_points(conjugacy_window)) {
        SymbolicPoint x = model.decode(s);
        if (!model.gamma.member(x) || !ambient.member(x)) {
            model.conjugacy_checked = false;
            break;
        }
        if (!(model.decode(s.shifted(1)) == x.shifted(1))) {
            model.conjugacy_checked = false;
            break;
        }
    }
    return model;
}

std::string SymbolicSftModel::serialize() const {
    std::ostringstream os;
    auto word_str = [](const Word& w) {
        std::string s;
        for (Sym sym : w) s += std::to_string(sym);
        return s;
    };
    os << "window_n " << window_n << "\n";
    os << "c " << format_double(c) << "\n";
    os << "cells";
    for (const auto& cell : partition.cells) os << " " << word_str(cell);
    os << "\n";
    os << "W";
    for (const auto& w : word_set) os << " " << word_str(w);
    os << "\n";
    os << "xi_blocks";
    for (const auto& b : xi.blocks()) os << " " << word_str(b);
    os << "\n";
    for (std::uint32_t b = 0; b < xi.block_count(); ++b) {
        os << "xi_edges " << word_str(xi.blocks()[b]) << " ->";
        for (auto t : xi.successors()[b]) os << " " << word_str(xi.blocks()[t]);
        os << "\n";
    }
    os << "sigma_in_xi " << (sigma_in_xi ? "true" : "false") << "\n";
    os << "sandwich " << (sandwich ? "true" : "false") << "\n";
    os << "conjugacy_window " << conjugacy_window << "\n";
    for (const auto& s : xi.periodic_points(std::min<Count>(conjugacy_window, 4)))
        os << "conjugacy_sample " << s.to_string() << " -> " << decode(s).to_string() << "\n";
    return os.str();
}

std::vector<std::vector<StateId>> clopen_partition(const FiniteSystem& sys,
                                                   const StateSet& lambda, double e) {
    if (!(e > 0)) fail(Errc::invalid_argument, "cell diameter bound must be positive");
    auto members = lambda.to_vector();
    if (members.empty()) fail(Errc::precondition, "partition of the empty set");
    std::vector<std::vector<StateId>> cells;
    std::vector<bool> used(members.size(), false);
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (used[i]) continue;
        std::vector<StateId> cell{members[i]};
        used[i] = true;
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (used[j]) continue;
            bool fits = true;
            for (StateId m : cell)
                if (!gt(e, sys.dist(members[j], m), sys.tolerance())) {
                    fits = false;
                    break;
                }
            if (fits) {
                cell.push_back(members[j]);
                used[j] = true;
            }
        }
        cells.push_back(std::move(cell));
    }
    return cells;
}

FiniteSftModel build_sft_model(const FiniteSystem& sys, const StateSet& lambda,
                               const std::vector<std::vector<StateId>>& cells, Count n, double c,
                               double partition_e, Count realize_period) {
    if (n < 1) fail(Errc::invalid_argument, "window n must be at least 1");
    if (!(c > 0)) fail(Errc::invalid_argument, "c must be positive");
    if (!sys.is_invariant(lambda)) fail(Errc::precondition, "lambda must be invariant");

    FiniteSftModel model;
    model.cells = cells;
    model.window_n = n;
    model.c = c;

    // cell lookup and disjointness
    std::vector<std::int64_t> cell_of(sys.size(), -1);
    model.cells_disjoint = true;
    for (std::size_t k = 0; k < cells.size(); ++k)
        for (StateId x : cells[k]) {
            if (cell_of[x] != -1) model.cells_disjoint = false;
            cell_of[x] = std::int64_t(k);
        }
    for (StateId x : lambda.to_vector())
        if (cell_of[x] == -1) fail(Errc::precondition, "partition does not cover lambda");

    // thickened cells: pairwise disjoint, diameter <= partition_e
    model.thickening_ok = true;
    std::vector<StateSet> thick;
    for (const auto& cell : cells)
        thick.push_back(build_ball(sys, StateSet::of(sys.size(), cell), c));
    for (std::size_t a = 0; a < thick.size() && model.thickening_ok; ++a) {
        auto ma = thick[a].to_vector();
        for (std::size_t i = 0; i < ma.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (gt(sys.dist(ma[i], ma[j]), partition_e, sys.tolerance()))
                    model.thickening_ok = false;
        for (std::size_t b = 0; b < a; ++b) {
            StateSet inter = thick[a];
            inter &= thick[b];
            if (!inter.empty()) model.thickening_ok = false;
        }
    }
    if (!model.thickening_ok)
        fail(Errc::precondition, "thickened cells overlap or exceed the diameter bound at this c");

    // itinerary windows of lambda
    auto lam = lambda.to_vector();
    std::vector<Word> w_set;
    for (StateId x : lam) {
        Count per = sys.period(x);
        for (Count t = 0; t < per; ++t) {
            Word w;
            for (Count a = -n; a <= n; ++a) {
                StateId y = sys.iterate(x, t + a);
                if (cell_of[y] < 0) fail(Errc::internal, "lambda iterate escaped the partition");
                w.push_back(Sym(cell_of[y]));
            }
            w_set.push_back(std::move(w));
        }
    }
    std::sort(w_set.begin(), w_set.end());
    w_set.erase(std::unique(w_set.begin(), w_set.end()), w_set.end());
    model.word_set = w_set;
    model.xi = Sft::from_words(Sym(cells.size()), std::size_t(2 * n + 1), w_set);

    // realize periodic xi points coherently along orbits
    realize_period = std::max<Count>(realize_period, sys.max_period());
    auto xi_points = model.xi.periodic_points(realize_period);
    model.gamma = StateSet(sys.size());
    std::set<std::string> done;
    for (const auto& s : xi_points) {
        if (done.count(s.to_string())) continue;
        Count per = s.period();
        // pseudo-orbit: one lambda representative per window position
        FinitePseudoOrbit po;
        po.periodic = true;
        po.i0 = 0;
        bool representable = true;
        for (Count j = 0; j < per && representable; ++j) {
            bool found = false;
            for (StateId x : lam) {
                bool match = true;
                for (Count a = -n; a <= n && match; ++a)
                    if (Sym(cell_of[sys.iterate(x, a)]) != Sym(s.at(j + a))) match = false;
                if (match) {
                    po.entries.push_back(x);
                    found = true;
                    break;
                }
            }
            if (!found) representable = false;
        }
        if (!representable)
            fail(Errc::internal, "xi window not realized by any lambda itinerary");

        std::int64_t shadow = -1;
        for (StateId x : lam)
            if (is_shadowed_by(sys, po, x, c)) {
                shadow = x;
                break;
            }
        if (shadow < 0)
            for (StateId x = 0; x < sys.size(); ++x)
                if (is_shadowed_by(sys, po, x, c)) {
                    shadow = x;
                    break;
                }
        if (shadow < 0) {
            std::ostringstream os;
            os << "shadowing failed at c=" << format_double(c) << " for the pseudo-orbit";
            for (auto e : po.entries) os << " " << sys.label(e);
            fail(Errc::search_failed, os.str());
        }
        // propagate along the xi orbit: h(sigma^t s) = f^t(h(s))
        SymbolicPoint cur = s;
        StateId xcur = StateId(shadow);
        for (Count t = 0; t < per; ++t) {
            model.realization[cur.to_string()] = xcur;
            model.gamma.set(xcur);
            done.insert(cur.to_string());
            cur = cur.shifted(1);
            xcur = sys.map(xcur);
        }
    }

    // sandwich and conjugacy
    StateSet ball = build_ball(sys, lambda, c);
    model.sandwich = model.gamma.contains(lambda) && ball.contains(model.gamma);
    model.conjugacy_checked = true;
    for (const auto& [key, x] : model.realization) {
        SymbolicPoint s = SymbolicPoint::parse(key);
        auto it = model.realization.find(s.shifted(1).to_string());
        if (it == model.realization.end() || it->second != sys.map(x)) {
            model.conjugacy_checked = false;
            break;
        }
    }
    return model;
}

// ---------------------------------------------------------------------------
// The envelope-equivalence verifier (thm12)

Thm12Schedule Thm12Schedule::defaults_for(const FiniteSystem& sys) {
    Thm12Schedule s;
    double floor = std::max(sys.resolution(), 1e-9);
    s.eps_ladder = dyadic_ladder(std::min(floor, 0.5));
    s.c_ladder = s.eps_ladder;
    return s;
}

Thm12Schedule Thm12Schedule::defaults_for_symbolic() {
    Thm12Schedule s;
    s.eps_ladder = {0.5, 0.25, 0.125};
    s.c_ladder = {0.5, 0.25, 0.125};
    s.n_max = 8;
    return s;
}

int Thm12Report::exit_code() const {
    if (!hypotheses_hold) return 2;
    return verdict == Verdict::consistent ? 0 : 1;
}

namespace {

std::string verdict_name(Thm12Report::Verdict v) {
    switch (v) {
        case Thm12Report::Verdict::consistent: return "CONSISTENT";
        case Thm12Report::Verdict::inconsistent: return "INCONSISTENT";
        default: return "NO VERDICT (hypotheses not established)";
    }
}

void finish_report(Thm12Report& rep) {
    rep.hypotheses_hold = rep.hyp_shadowing && rep.hyp_expansive;
    if (!rep.hypotheses_hold)
        rep.verdict = Thm12Report::Verdict::no_verdict;
    else
        rep.verdict = (rep.cond1 == rep.cond2 && rep.cond2 == rep.cond3)
                          ? Thm12Report::Verdict::consistent
                          : Thm12Report::Verdict::inconsistent;

    std::ostringstream os;
    os << "(H) shadowing on Lambda: " << (rep.hyp_shadowing ? "certified" : "refuted") << " — "
       << rep.hyp_shadowing_note << "\n";
    os << "(H) expansive on B_b(Lambda): " << (rep.hyp_expansive ? "certified" : "refuted")
       << " — " << rep.hyp_expansive_note << "\n";
    os << "(1) Sen(f|CR(f|Lambda)) empty: " << (rep.cond1 ? "true" : "false") << "\n";
    os << "(2) zero entropy at some eps: " << (rep.cond2 ? "true" : "false") << " [";
    for (auto& [eps, h] : rep.cond2_estimates)
        os << " eps=" << format_double(eps) << ": h=" << format_double(h);
    os << " ]\n";
    os << "(3) zero-entropy locally-maximal envelope at every c: "
       << (rep.cond3 ? "true" : "false") << "\n";
    for (auto& [c, note] : rep.cond3_outcomes) os << "    c=" << format_double(c) << ": " << note << "\n";
    if (!rep.hypotheses_hold) {
        os << "hypotheses fail; the equivalence is not claimed. Observed: (1)="
           << (rep.cond1 ? "true" : "false") << ", (2)=" << (rep.cond2 ? "true" : "false")
           << ", (3)=" << (rep.cond3 ? "true" : "false")
           << (rep.cond1 != rep.cond2 ? " — the equivalence fails without the hypothesis" : "")
           << "\n";
    }
    os << "verdict: " << verdict_name(rep.verdict) << "\n";
    rep.summary = os.str();
}

}  // namespace

Thm12Report theorem_1_2_verify(const FiniteSystem& sys, const StateSet& lambda,
                               const Thm12Schedule& sched) {
    if (!sys.is_invariant(lambda)) fail(Errc::precondition, "lambda must be invariant");
    Thm12Report rep;

    // (H) shadowing on lambda: enumerate periodic delta-pseudo-orbits inside
    // lambda up to the length cap and search eps-shadows.
    {
        auto lam = lambda.to_vector();
        double eps = sched.eps_ladder.back();
        double delta = eps / 2;
        ChainGraph g = chain_graph(sys, delta);
        std::size_t checked = 0, failed = 0, budget = 20000;
        std::string fail_example;
        // DFS for cycles within lambda of length <= cap
        std::function<void(StateId, std::vector<StateId>&)> dfs = [&](StateId start,
                                                                      std::vector<StateId>& path) {
            if (checked >= budget) return;
            StateId cur = path.back();
            for (StateId nxt : g.edges[cur]) {
                if (!lambda.test(nxt)) continue;
                if (nxt == start && path.size() >= 1) {
                    ++checked;
                    FinitePseudoOrbit po{path, 0, true};
                    bool ok = false;
                    for (StateId x = 0; x < sys.size() && !ok; ++x)
                        if (is_shadowed_by(sys, po, x, eps)) ok = true;
                    if (!ok) {
                        ++failed;
                        if (fail_example.empty()) {
                            std::ostringstream os;
                            for (auto p : po.entries) os << sys.label(p) << " ";
                            fail_example = os.str();
                        }
                    }
                }
                if (std::int64_t(path.size()) < sched.shadow_len_cap && checked < budget) {
                    path.push_back(nxt);
                    dfs(start, path);
                    path.pop_back();
                }
            }
        };
        for (StateId s0 : lam) {
            std::vector<StateId> path{s0};
            dfs(s0, path);
        }
        rep.hyp_shadowing = (failed == 0);
        std::ostringstream os;
        os << checked << " periodic delta-pseudo-orbits (delta=" << format_double(delta)
           << ", len<=" << sched.shadow_len_cap << ") checked at eps=" << format_double(eps)
           << (checked >= budget ? ", budget hit" : ", exhaustive");
        if (failed) os << "; first unshadowed: " << fail_example;
        rep.hyp_shadowing_note = os.str();
    }

    // (H) expansiveness on B_b(lambda): look for a pair in the invariant core
    // whose orbits never separate beyond e.
    {
        auto core = invariant_core(sys, lambda, sched.b, Count(sys.size()));
        auto members = core.core.to_vector();
        rep.hyp_expansive = true;
        for (std::size_t i = 0; i < members.size() && rep.hyp_expansive; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (!orbit_separates(sys, members[i], members[j], sched.e)) {
                    rep.hyp_expansive = false;
                    rep.hyp_expansive_note =
                        "witness pair " + sys.label(members[i]) + " , " + sys.label(members[j]) +
                        " stays within e=" + format_double(sched.e) + " inside B_b, b=" +
                        format_double(sched.b);
                    break;
                }
        if (rep.hyp_expansive)
            rep.hyp_expansive_note = "no pair in the invariant core of B_b stays within e=" +
                                     format_double(sched.e);
    }

    // (1) sensitivity of the restriction to CR(f|lambda) (= lambda for a
    // finite bijection: every state is periodic).
    auto sen = sensitive_points(sys, lambda, sched.a_check);
    rep.cond1 = sen.sensitive.empty();

    // (2) entropy of the invariant cores across the eps ladder; the r-schedule
    // walks every realized distance of the core so the reported estimate is
    // the true maximum of the fit over r
    rep.cond2 = false;
    for (double eps : sched.eps_ladder) {
        auto core = invariant_core(sys, lambda, eps, Count(sys.size()));
        auto rsched = exhaustive_r_schedule(sys, core.core, sched.r_candidate_cap);
        auto report = entropy_estimate(sys, core.core, rsched, sched.n_max, sched.exact_cap);
        rep.cond2_estimates.emplace_back(eps, report.estimate);
        if (report.estimate <= sched.zero_entropy_tol) rep.cond2 = true;
    }

    // (3) envelopes along the c ladder
    rep.cond3 = true;
    for (double c : sched.c_ladder) {
        std::string note;
        bool ok = false;
        for (double pe = sched.partition_e; pe >= sys.resolution() / 4 && !ok; pe /= 2) {
            try {
                auto cells = clopen_partition(sys, lambda, pe);
                auto model = build_sft_model(sys, lambda, cells, sched.model_n, c, pe,
                                             sched.realize_period);
                double h = model.xi.empty() ? 0.0 : model.xi.spectral_entropy();
                // locally maximal: gamma equals the invariant core of one of
                // its dyadic neighborhoods
                bool lm = false;
                for (double r : dyadic_ladder(std::max(sys.resolution() / 2, 1e-9))) {
                    auto core = invariant_core(sys, model.gamma, r, Count(sys.size()));
                    if (core.stabilized && core.core == model.gamma) {
                        lm = true;
                        break;
                    }
                }
                if (model.sandwich && model.conjugacy_checked && lm &&
                    h <= sched.zero_entropy_tol) {
                    ok = true;
                    note = "built: |cells|=" + std::to_string(cells.size()) +
                           ", h(Xi)=" + format_double(h) + ", locally maximal";
                } else {
                    note = std::string("built but ") + (model.sandwich ? "" : "sandwich fails; ") +
                           (lm ? "" : "not locally maximal; ") +
                           (h <= sched.zero_entropy_tol ? "" : "entropy positive; ");
                    break;  // a verified build that fails the properties is conclusive
                }
            } catch (const Error& err) {
                note = err.what();
            }
        }
        rep.cond3_outcomes.emplace_back(c, ok ? note : ("no envelope: " + note));
        if (!ok) rep.cond3 = false;
    }

    finish_report(rep);
    return rep;
}

Thm12Report theorem_1_2_verify(const Sft& ambient, const Sft& lambda, const Thm12Schedule& sched) {
    if (!ambient.contains_language(lambda))
        fail(Errc::precondition, "lambda not contained in the ambient subshift");
    Thm12Report rep;

    rep.hyp_shadowing = true;
    rep.hyp_shadowing_note = "constructive: the diagonal point eps-shadows every delta-pseudo-orbit with eps = delta";
    rep.hyp_expansive = true;
    rep.hyp_expansive_note = "shift metric: e = 1/2 is an expansive constant on the whole ambient";

    // (1) the restriction is sensitive iff some chain-recurrent piece branches
    bool sensitive = false;
    for (const auto& piece : chain_recurrent_pieces(lambda))
        for (std::uint32_t b = 0; b < piece.block_count(); ++b)
            if (piece.successors()[b].size() >= 2) sensitive = true;
    rep.cond1 = !sensitive;

    // (2) exact entropy of Lambda_eps across the ladder
    rep.cond2 = false;
    for (double eps : sched.eps_ladder) {
        Sft core = invariant_core_sft(ambient, lambda, eps);
        double h = core.empty() ? 0.0 : core.spectral_entropy();
        rep.cond2_estimates.emplace_back(eps, h);
        if (h <= sched.zero_entropy_tol) rep.cond2 = true;
    }

    // (3) models across the c ladder
    rep.cond3 = true;
    for (double c : sched.c_ladder) {
        std::string note;
        bool ok = false;
        try {
            auto part = clopen_partition(lambda, sched.partition_e);
            auto model = build_sft_model(ambient, lambda, part, sched.model_n, c);
            double h = model.gamma.empty() ? 0.0 : model.gamma.spectral_entropy();
            auto lm = is_locally_maximal(ambient, model.gamma, sched.lm_horizon);
            if (model.sandwich && model.conjugacy_checked && lm.locally_maximal &&
                h <= sched.zero_entropy_tol) {
                ok = true;
                note = "built: m=" + std::to_string(part.cells.size()) +
                       ", h(Gamma)=" + format_double(h) + ", locally maximal at r=" +
                       format_double(lm.witness_r);
            } else {
                note = std::string("built but ") + (model.sandwich ? "" : "sandwich fails; ") +
                       (lm.locally_maximal ? "" : "not locally maximal; ") +
                       (h <= sched.zero_entropy_tol
                            ? ""
                            : "entropy " + format_double(h) + " positive");
            }
        } catch (const Error& err) {
            note = err.what();
        }
        rep.cond3_outcomes.emplace_back(c, note);
        if (!ok) rep.cond3 = false;
    }

    finish_report(rep);
    return rep;
}

}  // namespace topodyn
