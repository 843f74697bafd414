#include "topodyn/sft.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "topodyn/scc.hpp"

namespace topodyn {

namespace {

/// ceil(-log2 x) for 0 < x <= 1: the least c with 2^-c <= x.
/// In the dyadic shift metric, d <= x is equivalent to d <= 2^-c.
std::int64_t dyadic_level(double x) {
    if (!(x > 0) || x > 1) fail(Errc::invalid_argument, "distance must lie in (0, 1]");
    std::int64_t c = 0;
    double v = 1.0;
    while (v > x * (1 + 1e-12)) {
        v /= 2;
        ++c;
        if (c > 1060) break;
    }
    return c;
}

struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

}  // namespace

void Sft::index_blocks() {
    adj_.assign(blocks_.size(), {});
    radj_.assign(blocks_.size(), {});
}

std::optional<std::uint32_t> Sft::block_index(const Word& b) const {
    auto it = std::lower_bound(blocks_.begin(), blocks_.end(), b);
    if (it == blocks_.end() || *it != b) return std::nullopt;
    return std::uint32_t(it - blocks_.begin());
}

void Sft::prune() {
    // Remove blocks without successors or predecessors until a fixpoint: the
    // surviving graph is the bi-infinite core.
    bool changed = true;
    std::vector<bool> alive(blocks_.size(), true);
    while (changed) {
        changed = false;
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            if (!alive[b]) continue;
            bool has_succ = false, has_pred = false;
            for (auto t : adj_[b]) has_succ |= alive[t];
            for (auto t : radj_[b]) has_pred |= alive[t];
            if (!has_succ || !has_pred) {
                alive[b] = false;
                changed = true;
            }
        }
    }
    std::vector<std::uint32_t> remap(blocks_.size(), 0);
    std::vector<Word> nb;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (alive[b]) {
            remap[b] = std::uint32_t(nb.size());
            nb.push_back(blocks_[b]);
        }
    }
    std::vector<std::vector<std::uint32_t>> na(nb.size()), nr(nb.size());
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (!alive[b]) continue;
        for (auto t : adj_[b])
            if (alive[t]) na[remap[b]].push_back(remap[t]);
        for (auto t : radj_[b])
            if (alive[t]) nr[remap[b]].push_back(remap[t]);
    }
    for (auto& v : na) std::sort(v.begin(), v.end());
    for (auto& v : nr) std::sort(v.begin(), v.end());
    blocks_ = std::move(nb);
    adj_ = std::move(na);
    radj_ = std::move(nr);
}

Sft Sft::full_shift(Sym alphabet_size) {
    if (alphabet_size < 1) fail(Errc::invalid_argument, "alphabet must be non-empty");
    std::vector<std::pair<Sym, Sym>> edges;
    for (Sym a = 0; a < alphabet_size; ++a)
        for (Sym b = 0; b < alphabet_size; ++b) edges.emplace_back(a, b);
    return from_transitions(alphabet_size, edges);
}

Sft Sft::golden_mean() {
    return from_transitions(2, {{0, 0}, {0, 1}, {1, 0}});
}

Sft Sft::from_transitions(Sym alphabet_size, const std::vector<std::pair<Sym, Sym>>& edges) {
    Sft s;
    s.m_ = alphabet_size;
    s.ord_ = 1;
    std::set<Sym> syms;
    for (auto& [a, b] : edges) {
        if (a >= alphabet_size || b >= alphabet_size)
            fail(Errc::invalid_argument, "transition symbol out of alphabet");
        syms.insert(a);
        syms.insert(b);
    }
    for (Sym a : syms) s.blocks_.push_back(Word{a});
    s.index_blocks();
    std::set<std::pair<Sym, Sym>> uniq(edges.begin(), edges.end());
    for (auto& [a, b] : uniq) {
        auto ia = s.block_index(Word{a}), ib = s.block_index(Word{b});
        s.adj_[*ia].push_back(*ib);
        s.radj_[*ib].push_back(*ia);
    }
    for (auto& v : s.adj_) std::sort(v.begin(), v.end());
    for (auto& v : s.radj_) std::sort(v.begin(), v.end());
    s.prune();
    return s;
}

Sft Sft::from_words(Sym alphabet_size, std::size_t L, const std::vector<Word>& words) {
    if (L < 1) fail(Errc::invalid_argument, "word length must be at least 1");
    for (const auto& w : words) {
        if (w.size() != L) fail(Errc::invalid_argument, "word length mismatch in presentation");
        for (Sym a : w)
            if (a >= alphabet_size) fail(Errc::invalid_argument, "symbol out of alphabet");
    }
    if (L == 1) {
        // Allowed symbols, free concatenation.
        std::vector<std::pair<Sym, Sym>> edges;
        for (const auto& u : words)
            for (const auto& v : words) edges.emplace_back(u[0], v[0]);
        return from_transitions(alphabet_size, edges);
    }
    Sft s;
    s.m_ = alphabet_size;
    s.ord_ = L - 1;
    std::set<Word> blocks;
    std::set<Word> wset(words.begin(), words.end());
    for (const auto& w : wset) {
        blocks.insert(Word(w.begin(), w.end() - 1));
        blocks.insert(Word(w.begin() + 1, w.end()));
    }
    s.blocks_.assign(blocks.begin(), blocks.end());
    s.index_blocks();
    for (const auto& w : wset) {
        Word pre(w.begin(), w.end() - 1), suf(w.begin() + 1, w.end());
        auto ia = s.block_index(pre), ib = s.block_index(suf);
        s.adj_[*ia].push_back(*ib);
        s.radj_[*ib].push_back(*ia);
    }
    for (auto& v : s.adj_) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    for (auto& v : s.radj_) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    s.prune();
    return s;
}

bool Sft::has_word(const Word& w) const {
    if (empty()) return false;
    if (w.empty()) return true;
    if (w.size() <= ord_) {
        for (const auto& b : blocks_)
            if (std::search(b.begin(), b.end(), w.begin(), w.end()) != b.end()) return true;
        // Words shorter than the order may also straddle a block boundary.
        if (w.size() == ord_) return false;
        for (const auto& longer : words(ord_ + 1))
            if (std::search(longer.begin(), longer.end(), w.begin(), w.end()) != longer.end())
                return true;
        return false;
    }
    // Walk the block graph along w.
    Word first(w.begin(), w.begin() + ord_);
    auto cur = block_index(first);
    if (!cur) return false;
    for (std::size_t i = ord_; i < w.size(); ++i) {
        Word next = blocks_[*cur];
        next.erase(next.begin());
        next.push_back(w[i]);
        auto nxt = block_index(next);
        if (!nxt) return false;
        bool edge = std::binary_search(adj_[*cur].begin(), adj_[*cur].end(), *nxt);
        if (!edge) return false;
        cur = nxt;
    }
    return true;
}

std::vector<Word> Sft::words(std::size_t n) const {
    std::vector<Word> out;
    if (empty() || n == 0) return out;
    if (n <= ord_) {
        std::set<Word> uniq;
        for (const auto& b : blocks_)
            for (std::size_t i = 0; i + n <= b.size(); ++i) uniq.emplace(b.begin() + i, b.begin() + i + n);
        out.assign(uniq.begin(), uniq.end());
        return out;
    }
    // DFS over paths of n - ord edges; every path yields a realized word since
    // the presentation is pruned.
    struct Item {
        std::uint32_t block;
        Word word;
    };
    std::vector<Item> stack;
    for (std::uint32_t b = 0; b < blocks_.size(); ++b) stack.push_back({b, blocks_[b]});
    while (!stack.empty()) {
        Item it = std::move(stack.back());
        stack.pop_back();
        if (it.word.size() == n) {
            out.push_back(std::move(it.word));
            continue;
        }
        for (auto t : adj_[it.block]) {
            Item nx{t, it.word};
            nx.word.push_back(blocks_[t].back());
            stack.push_back(std::move(nx));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double Sft::word_count(std::size_t n) const {
    if (empty() || n == 0) return 0;
    if (n <= ord_) return double(words(n).size());
    std::vector<double> v(blocks_.size(), 1.0);
    for (std::size_t step = 0; step < n - ord_; ++step) {
        std::vector<double> nv(blocks_.size(), 0.0);
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            for (auto t : adj_[b]) nv[b] += v[t];
        v = std::move(nv);
    }
    double total = 0;
    for (double x : v) total += x;
    return total;
}

bool Sft::member(const SymbolicPoint& p) const {
    if (empty()) return false;
    for (Sym s : p.left_word())
        if (s >= m_) return false;
    for (Sym s : p.center_word())
        if (s >= m_) return false;
    for (Sym s : p.right_word())
        if (s >= m_) return false;
    // Check all (ord+1)-windows across the center span plus one full period on
    // each side; beyond that the windows repeat.
    std::int64_t lo = p.span_lo() - std::int64_t(p.left_word().size()) - std::int64_t(ord_) - 1;
    std::int64_t hi = p.span_hi() + std::int64_t(p.right_word().size()) + 1;
    Word w(ord_ + 1);
    for (std::int64_t i = lo; i <= hi; ++i) {
        for (std::size_t k = 0; k <= ord_; ++k) w[k] = p.at(i + std::int64_t(k));
        Word pre(w.begin(), w.end() - 1), suf(w.begin() + 1, w.end());
        auto ia = block_index(pre);
        auto ib = block_index(suf);
        if (!ia || !ib) return false;
        if (!std::binary_search(adj_[*ia].begin(), adj_[*ia].end(), *ib)) return false;
    }
    return true;
}

std::vector<SymbolicPoint> Sft::periodic_points(Count max_period) const {
    if (max_period < 1) fail(Errc::invalid_argument, "max_period must be at least 1");
    std::set<SymbolicPoint> found;
    // Closed walks of length p yield the periodic points of period dividing p.
    for (Count p = 1; p <= max_period; ++p) {
        for (std::uint32_t start = 0; start < blocks_.size(); ++start) {
            // DFS over walks of exactly p edges returning to start
            struct Frame {
                std::uint32_t node;
                std::size_t next_edge;
            };
            std::vector<Frame> frames{{start, 0}};
            while (!frames.empty()) {
                Frame& f = frames.back();
                if (std::int64_t(frames.size()) == p + 1) {
                    if (f.node == start) {
                        Word w(p);
                        for (Count i = 0; i < p; ++i) w[i] = blocks_[frames[i].node][0];
                        found.insert(SymbolicPoint::periodic(w, 0));
                    }
                    frames.pop_back();
                    continue;
                }
                if (f.next_edge < adj_[f.node].size()) {
                    std::uint32_t t = adj_[f.node][f.next_edge++];
                    frames.push_back({t, 0});
                } else {
                    frames.pop_back();
                }
            }
        }
    }
    std::vector<SymbolicPoint> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const SymbolicPoint& a, const SymbolicPoint& b) {
        if (a.period() != b.period()) return a.period() < b.period();
        if (a.right_word() != b.right_word()) return a.right_word() < b.right_word();
        return a.center_start() < b.center_start();
    });
    return out;
}

FiniteSystem Sft::truncation(Count max_period) const {
    auto pts = periodic_points(max_period);
    if (pts.empty()) fail(Errc::precondition, "subshift has no periodic points at this period bound");
    std::map<SymbolicPoint, StateId> index;
    std::vector<std::string> labels;
    for (StateId i = 0; i < pts.size(); ++i) {
        index[pts[i]] = i;
        labels.push_back(pts[i].to_string());
    }
    std::vector<double> d;
    d.reserve(pts.size() * (pts.size() - 1) / 2);
    for (std::size_t a = 1; a < pts.size(); ++a)
        for (std::size_t b = 0; b < a; ++b) d.push_back(shift_metric(pts[a], pts[b]));
    std::vector<StateId> map;
    for (const auto& p : pts) {
        auto it = index.find(p.shifted(1));
        if (it == index.end()) fail(Errc::internal, "truncation is not shift-closed");
        map.push_back(it->second);
    }
    FiniteSystem sys(std::move(labels), std::move(d), std::move(map), 0.0);
    sys.set_expansive_cert({0.5, "shift metric on a subshift truncation"});
    return sys;
}

bool Sft::equals(const Sft& other) const {
    if (m_ != other.m_) return false;
    if (empty() || other.empty()) return empty() == other.empty();
    std::size_t L = std::max(ord_, other.ord_) + 1;
    return words(L) == other.words(L);
}

bool Sft::contains_language(const Sft& sub) const {
    if (sub.empty()) return true;
    if (empty()) return false;
    std::size_t L = std::max(ord_, sub.ord_) + 1;
    auto mine = words(L), theirs = sub.words(L);
    return std::includes(mine.begin(), mine.end(), theirs.begin(), theirs.end());
}

double Sft::spectral_entropy() const {
    if (empty()) fail(Errc::precondition, "entropy of the empty subshift");
    const std::size_t n = blocks_.size();
    // Power iteration on A + I: shifting by the identity makes every class
    // aperiodic so the Collatz-Wielandt ratios settle; rho(A) = rho(A+I) - 1.
    std::vector<double> v(n, 1.0), nv(n);
    double prev = -1;
    for (int iter = 0; iter < 100000; ++iter) {
        double mx = 0;
        for (std::size_t b = 0; b < n; ++b) {
            double s = v[b];
            for (auto t : adj_[b]) s += v[t];
            nv[b] = s;
            mx = std::max(mx, s);
        }
        double lo = std::numeric_limits<double>::infinity(), hi = 0;
        for (std::size_t b = 0; b < n; ++b) {
            double ratio = nv[b] / v[b];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        for (std::size_t b = 0; b < n; ++b) v[b] = nv[b] / mx;
        if (hi - lo <= 1e-13 * hi) return std::log(hi - 1.0 < 0 ? 0.0 : hi - 1.0);
        if (prev >= 0 && std::abs(hi - prev) <= 1e-14 * hi && iter > 64)
            return std::log(hi - 1.0);
        prev = hi;
    }
    fail(Errc::internal, "power iteration did not converge");
}

double Sft::word_count_entropy(std::size_t n_max) const {
    if (n_max < 4) fail(Errc::invalid_argument, "need n_max >= 4");
    if (empty()) fail(Errc::precondition, "entropy of the empty subshift");
    std::vector<double> xs, ys;
    for (std::size_t n = n_max / 2; n <= n_max; ++n) {
        xs.push_back(double(n));
        ys.push_back(std::log(word_count(n)));
    }
    return least_squares_slope(xs, ys);
}

std::string Sft::describe() const {
    std::ostringstream os;
    os << "sft alphabet=" << m_ << " order=" << ord_ << " blocks=" << blocks_.size();
    return os.str();
}

ExpansivityCertificate expansivity_constant(const Sft& s) {
    // Any e < 1 works for the shift metric: sup_i d <= e < 1 forbids a symbol
    // difference at index 0 of any shift, hence the points agree everywhere.
    // The canonical certified constant is 1/2; the check below confirms every
    // distinct symbol pair is separated at window 0.
    ExpansivityCertificate cert;
    cert.constant = 0.5;
    std::size_t pairs = 0;
    for (Sym a = 0; a < s.alphabet_size(); ++a)
        for (Sym b = 0; b < a; ++b) {
            // symbols differing at index 0 sit at distance 1 > 1/2
            if (!(1.0 > cert.constant)) fail(Errc::internal, "metric degenerated");
            ++pairs;
        }
    cert.pairs_checked = pairs;
    cert.note = "sup_i d <= 1/2 forces agreement at every index of every shift";
    return cert;
}

Count uniform_expansivity_horizon(const Sft& s, double e, double eps) {
    if (s.empty()) return 0;
    if (!(eps > 0)) fail(Errc::invalid_argument, "eps must be positive");
    std::int64_t c = dyadic_level(e);
    std::int64_t E = dyadic_level(eps);
    for (Count n = 0;; ++n) {
        std::int64_t R = n + c - 1;  // agreement radius forced by the hypothesis
        if (R >= E - 1) return n;    // agreement radius already implies d <= eps
        // A violating pair is two distinct realized (2E-1)-words sharing their
        // central (2R+1)-window.
        auto ws = s.words(std::size_t(2 * E - 1));
        std::map<Word, Count> central_count;
        bool violated = false;
        for (const auto& w : ws) {
            Word central(w.begin() + (E - 1 - R), w.begin() + (E - 1 - R) + 2 * R + 1);
            if (++central_count[central] > 1) {
                violated = true;
                break;
            }
        }
        if (!violated) return n;
    }
}

bool is_pseudo_orbit(const Sft& s, const SymbolicPseudoOrbit& po, double delta) {
    if (delta < 0) fail(Errc::invalid_argument, "negative delta");
    if (po.entries.empty()) fail(Errc::invalid_argument, "empty pseudo-orbit");
    (void)s;
    for (std::size_t i = 0; i + 1 < po.entries.size(); ++i)
        if (shift_metric(po.entries[i].shifted(1), po.entries[i + 1]) > delta) return false;
    if (po.periodic)
        if (shift_metric(po.entries.back().shifted(1), po.entries.front()) > delta) return false;
    return true;
}

bool is_shadowed_by(const Sft& s, const SymbolicPseudoOrbit& po, const SymbolicPoint& y,
                    double eps) {
    if (po.entries.empty()) fail(Errc::invalid_argument, "empty pseudo-orbit");
    (void)s;
    const std::int64_t len = std::int64_t(po.entries.size());
    auto entry_at = [&](std::int64_t t) -> const SymbolicPoint& {
        std::int64_t j = t - po.i0;
        if (po.periodic) {
            j %= len;
            if (j < 0) j += len;
        }
        return po.entries[std::size_t(j)];
    };
    std::int64_t lo = po.i0, hi = po.i0 + len - 1;
    if (po.periodic) {
        // extend until both the window repetition and y's structure realign
        std::int64_t period = std::lcm<std::int64_t>(
            len, std::lcm<std::int64_t>(std::int64_t(y.left_word().size()),
                                        std::int64_t(y.right_word().size())));
        lo = std::min(lo, y.span_lo() - period);
        hi = std::max(hi, y.span_hi() + period);
    }
    for (std::int64_t t = lo; t <= hi; ++t)
        if (shift_metric(y.shifted(t), entry_at(t)) > eps) return false;
    return true;
}

ShadowResult constructive_shadow(const Sft& s, const SymbolicPseudoOrbit& po, double delta) {
    if (po.entries.empty()) fail(Errc::invalid_argument, "empty pseudo-orbit");
    double cap = std::min(0.25, std::exp2(-double(s.order()) - 1.0));
    if (delta > cap)
        fail(Errc::precondition,
             "delta too large to determine the diagonal symbols (cap " + format_double(cap) + ")");
    if (!is_pseudo_orbit(s, po, delta))
        fail(Errc::precondition, "sequence is not a delta-pseudo-orbit at the stated delta");
    for (const auto& e : po.entries)
        if (!s.member(e)) fail(Errc::precondition, "pseudo-orbit leaves the subshift");

    const std::int64_t len = std::int64_t(po.entries.size());
    SymbolicPoint y = [&]() {
        if (po.periodic) {
            Word w(static_cast<std::size_t>(len));
            for (std::int64_t j = 0; j < len; ++j) w[std::size_t(j)] = po.entries[std::size_t(j)].at(0);
            return SymbolicPoint::periodic(w, po.i0);
        }
        // Window diagonal, extended by the first entry's past and the last
        // entry's future.
        const SymbolicPoint& first = po.entries.front();
        const SymbolicPoint& last = po.entries.back();
        std::int64_t lo = po.i0 + std::min<std::int64_t>(first.span_lo(), 0) -
                          std::int64_t(first.left_word().size());
        std::int64_t hi = po.i0 + len - 1 +
                          std::max<std::int64_t>(last.span_hi(), 0) +
                          std::int64_t(last.right_word().size());
        Word center;
        for (std::int64_t i = lo; i <= hi; ++i) {
            if (i < po.i0) center.push_back(first.at(i - po.i0));
            else if (i < po.i0 + len) center.push_back(po.entries[std::size_t(i - po.i0)].at(0));
            else center.push_back(last.at(i - (po.i0 + len - 1)));
        }
        return SymbolicPoint::eventually_periodic(first.left_word(), center, last.right_word(), lo);
    }();

    if (!s.member(y))
        fail(Errc::internal, "diagonal point violates the transition relation; presentation must be recoded");
    if (!is_shadowed_by(s, po, y, delta))
        fail(Errc::internal, "diagonal point fails its own shadowing bound");
    return {y, delta};
}

LocalStableSet local_stable_set(const Sft& s, const SymbolicPoint& x, double r, Count horizon) {
    if (!(r < 1)) fail(Errc::invalid_argument, "need r < 1");
    if (horizon < 0) fail(Errc::invalid_argument, "negative horizon");
    if (!s.member(x)) fail(Errc::precondition, "point not in the subshift");
    std::int64_t c = dyadic_level(r);
    std::int64_t k = c - 1;
    LocalStableSet out;
    out.from_index = -k;
    for (Count i = 0; i <= horizon; ++i) out.sample.push_back(x.at(-k + i));
    std::ostringstream os;
    os << "{ y : y_i = x_i for all i >= " << -k << " }";
    out.description = os.str();
    return out;
}

std::optional<SymbolicPoint> asymptotic_pair(const Sft& s, const SymbolicPoint& x) {
    if (!s.member(x)) fail(Errc::precondition, "point not in the subshift");
    const std::int64_t ord = std::int64_t(s.order());
    auto block_at = [&](std::int64_t i) {
        Word b(static_cast<std::size_t>(ord));
        for (std::int64_t k = 0; k < ord; ++k) b[std::size_t(k)] = x.at(i + k);
        return b;
    };
    // The block sequence left of the center span is periodic, so scanning one
    // period of it covers every in-branching opportunity. Past branches
    // (j <= 0) are preferred so the pair differs before the anchor index.
    std::int64_t lo = x.span_lo() - std::int64_t(x.left_word().size()) - ord;
    std::int64_t hi = x.span_hi() + 1;
    std::vector<std::int64_t> scan;
    for (std::int64_t j = std::min<std::int64_t>(0, hi); j >= lo; --j) scan.push_back(j);
    for (std::int64_t j = hi; j >= 1; --j) scan.push_back(j);
    for (std::int64_t j : scan) {
        auto bj = s.find_block(block_at(j));
        if (!bj) fail(Errc::internal, "point block missing from presentation");
        auto prev = s.find_block(block_at(j - 1));
        std::uint32_t alt = std::uint32_t(-1);
        for (auto p : s.predecessors_of(*bj)) {
            if (p != *prev) {
                alt = p;
                break;
            }
        }
        if (alt == std::uint32_t(-1)) continue;

        // Walk backwards from the alternative predecessor until a block repeats;
        // the repeat closes the left period.
        std::vector<std::uint32_t> back{alt};
        std::vector<std::int64_t> seen(s.block_count(), -1);
        seen[alt] = 0;
        std::int64_t cycle_from = -1, cycle_to = -1;
        while (true) {
            std::uint32_t cur = back.back();
            std::uint32_t nxt = s.predecessors_of(cur).front();
            if (seen[nxt] >= 0) {
                cycle_from = seen[nxt];
                cycle_to = std::int64_t(back.size());
                back.push_back(nxt);
                break;
            }
            seen[nxt] = std::int64_t(back.size());
            back.push_back(nxt);
        }
        // back[t] sits at index j - 1 - t. Cycle covers positions
        // [cycle_from, cycle_to); left period word read by increasing index.
        Word left;
        for (std::int64_t t = cycle_to - 1; t >= cycle_from; --t) left.push_back(s.blocks()[back[std::size_t(t)]][0]);
        // Center: connector symbols (indices j-1-cycle_from+1 .. j-1) then x from j on.
        std::int64_t center_lo = j - cycle_from;  // j - 1 - (cycle_from - 1)
        std::int64_t center_hi = std::max(j, x.span_hi());
        Word center;
        for (std::int64_t i = center_lo; i < center_hi; ++i) {
            if (i < j) center.push_back(s.blocks()[back[std::size_t(j - 1 - i)]][0]);
            else center.push_back(x.at(i));
        }
        // Right word anchored at center_hi: rotate x's right word to phase.
        Word right = x.right_word();
        std::int64_t shift = center_hi - x.span_hi();
        std::int64_t nr = std::int64_t(right.size());
        std::int64_t rot = ((shift % nr) + nr) % nr;
        std::rotate(right.begin(), right.begin() + rot, right.end());
        SymbolicPoint y = SymbolicPoint::eventually_periodic(left, center, right, center_lo);
        if (y == x) continue;
        if (!s.member(y)) fail(Errc::internal, "constructed asymptotic pair leaves the subshift");
        return y;
    }
    return std::nullopt;
}

Sft sft_intersection(const Sft& a, const Sft& b) {
    if (a.alphabet_size() != b.alphabet_size())
        fail(Errc::invalid_argument, "intersection needs a common alphabet");
    if (a.empty() || b.empty()) return Sft::from_words(a.alphabet_size(), 1, {});
    std::size_t L = std::max(a.order(), b.order()) + 1;
    auto wa = a.words(L), wb = b.words(L);
    std::vector<Word> common;
    std::set_intersection(wa.begin(), wa.end(), wb.begin(), wb.end(), std::back_inserter(common));
    return Sft::from_words(a.alphabet_size(), L, common);
}

Sft invariant_core_sft(const Sft& ambient, const Sft& g, double r) {
    std::int64_t gg = dyadic_level(r);
    std::size_t w = std::size_t(2 * gg - 1);
    Sft hull = Sft::from_words(ambient.alphabet_size(), w, g.words(w));
    return sft_intersection(hull, ambient);
}

bool is_locally_maximal_at(const Sft& ambient, const Sft& g, double r) {
    if (!ambient.contains_language(g))
        fail(Errc::precondition, "subsystem language is not contained in the ambient subshift");
    return invariant_core_sft(ambient, g, r).equals(g);
}

LocalMaximalityReport is_locally_maximal(const Sft& ambient, const Sft& g, Count horizon) {
    LocalMaximalityReport rep;
    for (Count k = 1; k <= std::max<Count>(horizon, 1); ++k) {
        double r = std::exp2(double(-k));
        rep.schedule.push_back(r);
        if (is_locally_maximal_at(ambient, g, r)) {
            rep.locally_maximal = true;
            rep.witness_r = r;
            return rep;
        }
    }
    return rep;
}

LocalMaximalityReport is_locally_maximal_language(const Sft& ambient, const LanguageProvider& g,
                                                  Count horizon, std::size_t check_len) {
    LocalMaximalityReport rep;
    for (Count k = 1; k <= std::max<Count>(horizon, 1); ++k) {
        double r = std::exp2(double(-k));
        rep.schedule.push_back(r);
        std::size_t w = std::size_t(2 * k - 1);
        Sft hull = Sft::from_words(ambient.alphabet_size(), w, g(w));
        Sft core = sft_intersection(hull, ambient);
        bool equal = true;
        for (std::size_t l = 1; l <= check_len && equal; ++l)
            if (core.words(l) != g(l)) equal = false;
        if (equal) {
            rep.locally_maximal = true;
            rep.witness_r = r;
            return rep;
        }
    }
    return rep;
}

std::vector<Sft> chain_recurrent_pieces(const Sft& s) {
    std::uint32_t ncomp = 0;
    auto comp = strongly_connected_components(s.successors(), ncomp);
    std::vector<Sft> pieces;
    for (std::uint32_t c = 0; c < ncomp; ++c) {
        // keep components carrying at least one internal edge
        bool has_edge = false;
        std::vector<Word> ws;
        for (std::uint32_t b = 0; b < s.block_count(); ++b) {
            if (comp[b] != c) continue;
            for (auto t : s.successors()[b]) {
                if (comp[t] == c) {
                    has_edge = true;
                    Word w = s.blocks()[b];
                    w.push_back(s.blocks()[t].back());
                    ws.push_back(std::move(w));
                }
            }
        }
        if (has_edge) pieces.push_back(Sft::from_words(s.alphabet_size(), s.order() + 1, ws));
    }
    return pieces;
}

bool is_infinite(const Sft& s) {
    // A strongly connected piece with a branching block carries two distinct
    // cycles through a common block, hence uncountably many points.
    for (const auto& piece : chain_recurrent_pieces(s))
        for (std::uint32_t b = 0; b < piece.block_count(); ++b)
            if (piece.successors()[b].size() >= 2) return true;
    return false;
}

}  // namespace topodyn
