#include "topodyn/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "topodyn/chain.hpp"

namespace topodyn {

namespace {

double smallest_positive_pair_distance(const FiniteSystem& sys, const StateSet& subset) {
    auto members = subset.to_vector();
    double best = 0;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            double d = sys.dist(members[i], members[j]);
            if (d > 0 && (best == 0 || d < best)) best = d;
        }
    return best;
}

}  // namespace

SensitivityReport sensitive_points(const FiniteSystem& sys, const StateSet& restrict_to,
                                   double a) {
    if (!(a > 0)) fail(Errc::invalid_argument, "sensitivity level a must be positive");
    if (!sys.is_invariant(restrict_to))
        fail(Errc::precondition, "sensitivity restriction must be map-invariant");

    SensitivityReport rep;
    rep.a = a;
    rep.sensitive = StateSet(sys.size());
    rep.witnesses.assign(sys.size(), std::nullopt);

    double floor = smallest_positive_pair_distance(sys, restrict_to);
    if (floor == 0) return rep;  // nothing within reach of anything
    rep.probe_schedule = dyadic_ladder(floor);
    // A witness within the smallest probe also serves every larger probe, so
    // the per-probe universally quantified check reduces to the last rung.
    double probe = rep.probe_schedule.back();

    auto members = restrict_to.to_vector();
    for (StateId x : members) {
        for (StateId y : members) {
            if (y == x) continue;
            double d0 = sys.dist(x, y);
            if (!leq(d0, probe, sys.tolerance())) continue;
            // Scan the joint orbit for strict separation beyond a. The orbit
            // must also separate beyond the starting distance: in the delta -> 0
            // limit the witness starts arbitrarily close, so pairs that merely
            // sit far apart are not witnesses on the finite model.
            std::int64_t l = std::lcm<std::int64_t>(sys.period(x), sys.period(y));
            StateId u = x, v = y;
            for (std::int64_t i = 0; i < l; ++i) {
                double sep = sys.dist(u, v);
                if (gt(sep, a, sys.tolerance()) && gt(sep, d0, sys.tolerance())) {
                    rep.sensitive.set(x);
                    rep.witnesses[x] = SensitivityWitness{y, i, d0, sep};
                    break;
                }
                u = sys.map(u);
                v = sys.map(v);
            }
            if (rep.sensitive.test(x)) break;
        }
    }
    return rep;
}

bool SensitivityReport::reverify(const FiniteSystem& sys) const {
    for (StateId x = 0; x < sys.size(); ++x) {
        if (!sensitive.test(x)) continue;
        if (!witnesses[x]) return false;
        const auto& w = *witnesses[x];
        double d0 = sys.dist(x, w.y);
        if (!leq(d0, probe_schedule.empty() ? 0 : probe_schedule.back(), sys.tolerance()))
            return false;
        double sep = sys.dist(sys.iterate(x, w.iterate), sys.iterate(w.y, w.iterate));
        if (!gt(sep, a, sys.tolerance()) || !gt(sep, d0, sys.tolerance())) return false;
    }
    return true;
}

EquicontinuityResult equicontinuity_modulus(const FiniteSystem& sys, double eps) {
    if (!(eps > 0)) fail(Errc::invalid_argument, "eps must be positive");
    EquicontinuityResult res;

    double floor = sys.min_positive_distance();
    if (floor == 0) {  // single state
        res.equicontinuous = true;
        res.delta = eps;
        return res;
    }
    // A useful modulus never exceeds eps itself; the schedule anchors at eps
    // and descends dyadically to the smallest positive distance.
    std::vector<double> candidates{eps};
    for (double v : dyadic_ladder(std::min(floor, eps), dyadic_floor(eps)))
        if (v < eps) candidates.push_back(v);
    std::sort(candidates.begin(), candidates.end(), std::greater<>());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    StateId bz = 0, bw = 0;
    Count bi = 0;
    double bsep = 0;
    for (double delta : candidates) {
        if (delta < floor && delta != eps) continue;
        bool ok = true;
        for (StateId z = 0; z < sys.size() && ok; ++z) {
            for (StateId w = 0; w < z && ok; ++w) {
                if (!leq(sys.dist(z, w), delta, sys.tolerance())) continue;
                std::int64_t l = std::lcm<std::int64_t>(sys.period(z), sys.period(w));
                StateId u = z, v = w;
                for (std::int64_t i = 0; i < l; ++i) {
                    if (gt(sys.dist(u, v), eps, sys.tolerance())) {
                        ok = false;
                        bz = z;
                        bw = w;
                        bi = i;
                        bsep = sys.dist(u, v);
                        break;
                    }
                    u = sys.map(u);
                    v = sys.map(v);
                }
            }
        }
        if (ok) {
            res.equicontinuous = true;
            res.delta = delta;
            return res;
        }
    }
    res.equicontinuous = false;
    res.z = bz;
    res.w = bw;
    res.iterate = bi;
    res.separation = bsep;
    return res;
}

// ---------------------------------------------------------------------------
// Symbolic horseshoe

namespace {

/// The excursion behind a symbolic horseshoe: a point equal to the periodic
/// base outside [t0, t1] and deviating inside, with t0 >= c+1 so the chain can
/// plant it, where c = -log2(delta).
struct Excursion {
    SymbolicPoint point = SymbolicPoint::periodic({0});
    std::int64_t first_deviation = 0;
    std::int64_t last_index = 0;  // t1
};

std::optional<Excursion> find_excursion(const Sft& s, const SymbolicPoint& p, std::int64_t t0,
                                        std::int64_t max_len) {
    // DFS over replacement words for [t0, t0+len-1], shortest first.
    const std::int64_t n = std::int64_t(p.right_word().size());
    auto rotated = [&](std::int64_t anchor) {
        // p's period word re-anchored so the word starts at `anchor`
        Word w(p.right_word().size());
        for (std::int64_t j = 0; j < n; ++j) w[std::size_t(j)] = p.at(anchor + j);
        return w;
    };
    for (std::int64_t len = 1; len <= max_len; ++len) {
        Word replacement(std::size_t(len), 0);
        std::function<std::optional<Excursion>(std::size_t)> rec =
            [&](std::size_t idx) -> std::optional<Excursion> {
            if (idx == replacement.size()) {
                bool same = true;
                for (std::int64_t k = 0; k < len; ++k)
                    if (replacement[std::size_t(k)] != p.at(t0 + k)) same = false;
                if (same) return std::nullopt;
                SymbolicPoint cand = SymbolicPoint::eventually_periodic(
                    rotated(t0), replacement, rotated(t0 + len), t0);
                if (cand == p) return std::nullopt;  // deviation normalized away
                if (!s.member(cand)) return std::nullopt;
                std::int64_t dev = -1;
                for (std::int64_t k = 0; k < len; ++k)
                    if (cand.at(t0 + k) != p.at(t0 + k)) {
                        dev = t0 + k;
                        break;
                    }
                if (dev < 0) return std::nullopt;
                Excursion e;
                e.point = cand;
                e.first_deviation = dev;
                e.last_index = t0 + len - 1;
                return e;
            }
            for (Sym sym = 0; sym < s.alphabet_size(); ++sym) {
                replacement[idx] = sym;
                if (auto r = rec(idx + 1)) return r;
            }
            return std::nullopt;
        };
        if (auto r = rec(0)) return r;
    }
    return std::nullopt;
}

SymbolicPseudoOrbit splice_blocks(const SymbolicPoint& p, const SymbolicPoint& yhat, Count m,
                                  const std::vector<int>& pattern) {
    // Block j contributes entries sigma^i(p) or sigma^i(yhat), i = 0..m-1.
    SymbolicPseudoOrbit po;
    po.i0 = 0;
    po.periodic = true;
    for (int bit : pattern) {
        const SymbolicPoint& src = bit ? yhat : p;
        for (Count i = 0; i < m; ++i) po.entries.push_back(src.shifted(i));
    }
    return po;
}

}  // namespace

HorseshoeCertificate horseshoe_certificate(const Sft& sys, const SymbolicPoint& base, double eps,
                                           double a, Count word_length) {
    if (!(eps > 0) || !(a > 0) || !(eps < a / 2))
        fail(Errc::precondition, "need 0 < eps < a/2");
    if (word_length < 1) fail(Errc::invalid_argument, "word length must be positive");
    if (!base.is_periodic()) fail(Errc::precondition, "base point must be periodic");
    if (!sys.member(base)) fail(Errc::precondition, "base point not in the subshift");

    // c determines both the plant offset and the chain slack: jumps of the
    // constructed chains never exceed 2^-c <= eps.
    std::int64_t c = std::int64_t(std::ceil(-std::log2(eps) - 1e-9));
    c = std::max<std::int64_t>(c, std::int64_t(sys.order()) + 1);
    c = std::max<std::int64_t>(c, 2);
    double delta_cap = std::exp2(double(-c));

    // Sensitivity of the base point: its orbit must admit an excursion. The
    // achieved separation of the excursion at index 0 is the full diameter 1;
    // requesting a <= 1 is therefore satisfiable (a = 1 realizes d >= a).
    if (a > 1.0)
        fail(Errc::precondition, "no sensitive point: the shift metric has diameter 1");

    std::int64_t t0 = c + 1;
    auto exc = find_excursion(sys, base, t0, 4 * std::int64_t(sys.order()) + 8);
    if (!exc)
        fail(Errc::precondition,
             "no sensitive point: the base orbit admits no excursion at this scale");

    Count per = base.period();
    std::int64_t m_min = exc->last_index + c;
    Count m = Count(((m_min + per - 1) / per) * per);

    HorseshoeCertificate cert;
    cert.base = base;
    cert.separation_index = exc->first_deviation;
    cert.chain_length = m;
    cert.eps = eps;
    cert.a = a;
    cert.word_length = word_length;
    cert.entropy_lower_bound = std::log(2.0) / double(m);

    const SymbolicPoint& yhat = exc->point;
    for (Count i = 0; i <= m; ++i) cert.chain_z.push_back(base.shifted(i));
    cert.chain_w.push_back(base);
    for (Count i = 1; i < m; ++i) cert.chain_w.push_back(yhat.shifted(i));
    cert.chain_w.push_back(base.shifted(m));

    double slack = 0;
    for (Count i = 0; i < m; ++i) {
        slack = std::max(slack, shift_metric(cert.chain_z[i].shifted(1), cert.chain_z[i + 1]));
        slack = std::max(slack, shift_metric(cert.chain_w[i].shifted(1), cert.chain_w[i + 1]));
    }
    cert.delta = slack;
    if (slack > delta_cap + 1e-15) fail(Errc::internal, "chain slack exceeded the plant scale");

    cert.separation = shift_metric(cert.chain_z[cert.separation_index],
                                   cert.chain_w[cert.separation_index]);

    // Realize every pattern word of the requested length through the
    // constructive shadowing of the spliced pseudo-orbits.
    for (Count s = 0; s < (Count(1) << word_length); ++s) {
        std::vector<int> pattern;
        for (Count b = word_length - 1; b >= 0; --b) pattern.push_back(int((s >> b) & 1));
        SymbolicPseudoOrbit po = splice_blocks(base, yhat, m, pattern);
        ShadowResult shadow = constructive_shadow(sys, po, delta_cap);
        cert.realized.push_back(shadow.point);
    }

    std::ostringstream os;
    os << "plant at " << t0 << ", deviation at " << exc->first_deviation << ", excursion ends at "
       << exc->last_index;
    cert.note = os.str();

    std::string why;
    if (!cert.verify(sys, &why)) fail(Errc::internal, "certificate failed self-check: " + why);
    return cert;
}

bool HorseshoeCertificate::verify(const Sft& sys, std::string* why) const {
    auto bail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const Count m = chain_length;
    if (m < 1 || separation_index < 1 || separation_index >= m) return bail("bad indices");
    if (m < separation_index + 1) return bail("chain shorter than k+1");
    if (chain_z.size() != std::size_t(m + 1) || chain_w.size() != std::size_t(m + 1))
        return bail("chain lengths");
    if (!(chain_z.front() == base) || !(chain_w.front() == base)) return bail("start endpoint");
    if (!(chain_z.back() == base) || !(chain_w.back() == base)) return bail("end endpoint");
    for (const auto& pt : chain_z)
        if (!sys.member(pt)) return bail("z-chain leaves the subshift");
    for (const auto& pt : chain_w)
        if (!sys.member(pt)) return bail("w-chain leaves the subshift");
    for (Count i = 0; i < m; ++i) {
        if (shift_metric(chain_z[i].shifted(1), chain_z[i + 1]) > delta + 1e-15)
            return bail("z-chain jump exceeds delta");
        if (shift_metric(chain_w[i].shifted(1), chain_w[i + 1]) > delta + 1e-15)
            return bail("w-chain jump exceeds delta");
    }
    double sep = shift_metric(chain_z[separation_index], chain_w[separation_index]);
    if (sep != separation) return bail("recorded separation mismatch");
    if (!(sep - 2 * eps > 0)) return bail("separation margin not positive");
    if (sep + 1e-15 < a) return bail("separation below the requested sensitivity level");
    if (std::abs(entropy_lower_bound - std::log(2.0) / double(m)) > 1e-15)
        return bail("entropy bound is not log(2)/m");

    if (realized.size() != std::size_t(Count(1) << word_length)) return bail("realization count");
    // every realization shadows its spliced pseudo-orbit within eps; the
    // excursion point is recovered from the w-chain (w_1 = sigma(yhat))
    SymbolicPoint yhat = chain_w[1].shifted(-1);
    for (Count s = 0; s < Count(realized.size()); ++s) {
        if (!sys.member(realized[std::size_t(s)])) return bail("realization leaves the subshift");
        std::vector<int> pattern;
        for (Count b = word_length - 1; b >= 0; --b) pattern.push_back(int((s >> b) & 1));
        SymbolicPseudoOrbit po = splice_blocks(base, yhat, m, pattern);
        if (!is_shadowed_by(sys, po, realized[std::size_t(s)], eps))
            return bail("realization fails its shadowing bound");
    }
    // pairwise (ell*m, eps)-separation
    const Count horizon = word_length * m;
    for (std::size_t i = 0; i < realized.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            bool separated = false;
            for (Count t = 0; t < horizon && !separated; ++t)
                if (shift_metric(realized[i].shifted(t), realized[j].shifted(t)) > eps)
                    separated = true;
            if (!separated) return bail("realizations not pairwise separated");
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Finite-system horseshoe

FiniteHorseshoeCertificate horseshoe_certificate(const FiniteSystem& sys, const StateSet& lambda,
                                                 double eps, double a, Count word_length) {
    if (!(eps > 0) || !(a > 0) || !(eps < a / 2))
        fail(Errc::precondition, "need 0 < eps < a/2");
    if (!sys.is_invariant(lambda)) fail(Errc::precondition, "lambda must be invariant");

    // CR of the restriction; for permutations every lambda state is recurrent.
    auto sen = sensitive_points(sys, lambda, a);
    auto sen_states = sen.sensitive.to_vector();
    if (sen_states.empty()) fail(Errc::precondition, "no sensitive point");

    // eta-ladder: largest chain slack that still certifies; chains must stay
    // within eps so the shadow argument gives d(z_k, w_k) - 2 eps > 0.
    std::vector<double> etas = dyadic_ladder(
        std::max(sys.min_positive_distance(), 1e-12), dyadic_floor(std::max(eps, 1e-12)));

    auto members = lambda.to_vector();
    std::vector<StateId> idx_of(sys.size(), StateId(-1));
    for (StateId i = 0; i < members.size(); ++i) idx_of[members[i]] = i;
    const std::size_t nl = members.size();
    if (nl * nl > 4'000'000)
        fail(Errc::unsupported, "finite horseshoe search capped at 2000 lambda states");

    for (double eta : etas) {
        // chain edges within lambda
        std::vector<std::vector<std::uint32_t>> adj(nl);
        for (std::size_t i = 0; i < nl; ++i)
            for (std::size_t j = 0; j < nl; ++j)
                if (leq(sys.dist(sys.map(members[i]), members[j]), eta, sys.tolerance()))
                    adj[i].push_back(std::uint32_t(j));

        for (StateId p : sen_states) {
            std::uint32_t pi = idx_of[p];
            // BFS over (u, v, separated?) from (p, p) back to (p, p, true)
            const std::size_t nn = nl * nl * 2;
            std::vector<std::int32_t> parent(nn, -2);  // -2 unvisited, else predecessor code
            auto code = [&](std::uint32_t u, std::uint32_t v, int f) {
                return (std::size_t(u) * nl + v) * 2 + std::size_t(f);
            };
            std::queue<std::size_t> q;
            std::size_t start = code(pi, pi, 0);
            parent[start] = -1;
            q.push(start);
            std::size_t goal = code(pi, pi, 1);
            // note: the start node (p,p,0) may be re-entered with flag 1 later
            std::int64_t found = -1;
            while (!q.empty() && found < 0) {
                std::size_t cur = q.front();
                q.pop();
                int f = int(cur & 1);
                std::uint32_t v = std::uint32_t((cur >> 1) % nl);
                std::uint32_t u = std::uint32_t((cur >> 1) / nl);
                for (auto uu : adj[u]) {
                    for (auto vv : adj[v]) {
                        int nf = f;
                        if (!nf &&
                            gt(sys.dist(members[uu], members[vv]), 2 * eps, sys.tolerance()))
                            nf = 1;
                        std::size_t nxt = code(uu, vv, nf);
                        if (parent[nxt] != -2) continue;
                        parent[nxt] = std::int32_t(cur);
                        if (nxt == goal) {
                            found = std::int64_t(nxt);
                            break;
                        }
                        q.push(nxt);
                    }
                    if (found >= 0) break;
                }
            }
            if (found < 0) continue;

            // reconstruct the chain pair
            std::vector<std::pair<StateId, StateId>> rev;
            std::size_t cur = std::size_t(found);
            while (true) {
                std::uint32_t v = std::uint32_t((cur >> 1) % nl);
                std::uint32_t u = std::uint32_t((cur >> 1) / nl);
                rev.emplace_back(members[u], members[v]);
                if (parent[cur] == -1) break;
                cur = std::size_t(parent[cur]);
            }
            std::reverse(rev.begin(), rev.end());

            FiniteHorseshoeCertificate cert;
            cert.base = p;
            cert.chain_length = Count(rev.size()) - 1;
            cert.eps = eps;
            cert.a = a;
            cert.word_length = word_length;
            cert.entropy_lower_bound = std::log(2.0) / double(cert.chain_length);
            double slack = 0;
            for (auto& [u, v] : rev) {
                cert.chain_z.push_back(u);
                cert.chain_w.push_back(v);
            }
            for (std::size_t i = 0; i + 1 < rev.size(); ++i) {
                slack = std::max(slack, sys.dist(sys.map(cert.chain_z[i]), cert.chain_z[i + 1]));
                slack = std::max(slack, sys.dist(sys.map(cert.chain_w[i]), cert.chain_w[i + 1]));
            }
            cert.delta = slack;
            cert.separation_index = 0;
            for (std::size_t i = 0; i < rev.size(); ++i)
                if (gt(sys.dist(cert.chain_z[i], cert.chain_w[i]), 2 * eps, sys.tolerance())) {
                    cert.separation_index = Count(i);
                    break;
                }
            cert.separation = sys.dist(cert.chain_z[std::size_t(cert.separation_index)],
                                       cert.chain_w[std::size_t(cert.separation_index)]);

            // realize all pattern words via shadowing orbits
            const Count m = cert.chain_length;
            bool all_found = true;
            for (Count s = 0; s < (Count(1) << word_length) && all_found; ++s) {
                FinitePseudoOrbit po;
                po.periodic = true;
                po.i0 = 0;
                for (Count b = word_length - 1; b >= 0; --b) {
                    bool w = ((s >> b) & 1) != 0;
                    for (Count i = 0; i < m; ++i)
                        po.entries.push_back(w ? cert.chain_w[std::size_t(i)]
                                               : cert.chain_z[std::size_t(i)]);
                }
                bool found_shadow = false;
                for (StateId x = 0; x < sys.size() && !found_shadow; ++x) {
                    if (is_shadowed_by(sys, po, x, eps)) {
                        cert.realized.push_back(x);
                        found_shadow = true;
                    }
                }
                if (!found_shadow) all_found = false;
            }
            if (!all_found)
                fail(Errc::search_failed,
                     "shadowing search failed at eps for a spliced pseudo-orbit");
            std::string why;
            if (!cert.verify(sys, &why))
                fail(Errc::internal, "finite certificate failed self-check: " + why);
            return cert;
        }
    }
    fail(Errc::search_failed, "no chain pair found on the eta ladder");
}

bool FiniteHorseshoeCertificate::verify(const FiniteSystem& sys, std::string* why) const {
    auto bail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const Count m = chain_length;
    if (m < 1 || separation_index < 1 || separation_index >= m) return bail("bad indices");
    if (chain_z.size() != std::size_t(m + 1) || chain_w.size() != std::size_t(m + 1))
        return bail("chain lengths");
    if (chain_z.front() != base || chain_w.front() != base) return bail("start endpoint");
    if (chain_z.back() != base || chain_w.back() != base) return bail("end endpoint");
    for (Count i = 0; i < m; ++i) {
        if (!leq(sys.dist(sys.map(chain_z[std::size_t(i)]), chain_z[std::size_t(i + 1)]), delta,
                 sys.tolerance()))
            return bail("z-chain jump exceeds delta");
        if (!leq(sys.dist(sys.map(chain_w[std::size_t(i)]), chain_w[std::size_t(i + 1)]), delta,
                 sys.tolerance()))
            return bail("w-chain jump exceeds delta");
    }
    double sep = sys.dist(chain_z[std::size_t(separation_index)],
                          chain_w[std::size_t(separation_index)]);
    if (sep != separation) return bail("recorded separation mismatch");
    if (!gt(sep, 2 * eps, sys.tolerance())) return bail("separation margin not positive");
    if (std::abs(entropy_lower_bound - std::log(2.0) / double(m)) > 1e-15)
        return bail("entropy bound is not log(2)/m");
    if (realized.size() != std::size_t(Count(1) << word_length)) return bail("realization count");
    const Count horizon = word_length * m;
    for (std::size_t i = 0; i < realized.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            bool separated = false;
            StateId u = realized[i], v = realized[j];
            for (Count t = 0; t < horizon && !separated; ++t) {
                if (gt(sys.dist(u, v), eps, sys.tolerance())) separated = true;
                u = sys.map(u);
                v = sys.map(v);
            }
            if (!separated) return bail("realizations not pairwise separated");
        }
    return true;
}

// ---------------------------------------------------------------------------
// Appendix A checks

AppendixReport appendix_verify(const FiniteSystem& sys, double a, double r) {
    if (!(a > 0) || !(r > 0)) fail(Errc::invalid_argument, "a and r must be positive");
    AppendixReport rep;
    rep.all_periodic = true;  // finite bijections are all-periodic; report the fact

    auto sen = sensitive_points(sys, sys.all_states(), a);
    rep.sensitive_states = sen.sensitive.to_vector();
    rep.sen_nonempty = !rep.sensitive_states.empty();

    StateSet y = accumulation_set(sys, r);
    rep.sen_in_accumulation = true;
    for (StateId x : rep.sensitive_states)
        if (!y.test(x)) {
            rep.sen_in_accumulation = false;
            rep.violations.push_back(x);
        }

    if (sys.expansive_cert()) {
        rep.expansive_cert_present = true;
        auto sen_e = sensitive_points(sys, sys.all_states(), sys.expansive_cert()->constant);
        rep.sen_empty_at_cert = sen_e.sensitive.empty();
        if (!rep.sen_empty_at_cert)
            rep.note =
                "sensitivity at the certified constant reflects the declared infinite limit; "
                "the finite truncation itself carries no contradiction";
    }
    return rep;
}

std::string AppendixReport::to_text() const {
    std::ostringstream os;
    os << "X = Per(f): " << (all_periodic ? "true" : "false") << "\n";
    os << "Sen_a nonempty: " << (sen_nonempty ? "true" : "false") << " (" << sensitive_states.size()
       << " states)\n";
    os << "Sen_a inside accumulation set: " << (sen_in_accumulation ? "true" : "false") << "\n";
    if (expansive_cert_present)
        os << "Sen empty at certified constant: " << (sen_empty_at_cert ? "true" : "false") << "\n";
    if (!note.empty()) os << "note: " << note << "\n";
    return os.str();
}

}  // namespace topodyn
