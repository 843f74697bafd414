#include "topodyn/symbolic_point.hpp"

#include <algorithm>
#include <numeric>

namespace topodyn {

namespace {

std::int64_t pos_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

Word rotate_left(Word w) {
    if (w.size() > 1) std::rotate(w.begin(), w.begin() + 1, w.end());
    return w;
}

Word rotate_right(Word w) {
    if (w.size() > 1) std::rotate(w.begin(), w.end() - 1, w.end());
    return w;
}

/// Lexicographically least rotation (Booth's algorithm would be overkill here).
std::size_t least_rotation(const Word& w) {
    std::size_t best = 0;
    for (std::size_t s = 1; s < w.size(); ++s) {
        for (std::size_t k = 0; k < w.size(); ++k) {
            Sym a = w[(s + k) % w.size()];
            Sym b = w[(best + k) % w.size()];
            if (a != b) {
                if (a < b) best = s;
                break;
            }
        }
    }
    return best;
}

}  // namespace

Word primitive_root(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = (w[i] == w[i - d]);
        if (ok) return Word(w.begin(), w.begin() + d);
    }
    return w;
}

SymbolicPoint SymbolicPoint::periodic(const Word& word, std::int64_t phase) {
    if (word.empty()) fail(Errc::invalid_argument, "empty period word");
    SymbolicPoint p;
    p.left_ = word;
    p.right_ = word;
    p.center_.clear();
    p.cs_ = phase;
    p.normalize();
    return p;
}

SymbolicPoint SymbolicPoint::eventually_periodic(const Word& left, const Word& center,
                                                 const Word& right, std::int64_t center_start) {
    if (left.empty() || right.empty()) fail(Errc::invalid_argument, "empty period word");
    SymbolicPoint p;
    p.left_ = left;
    p.center_ = center;
    p.right_ = right;
    p.cs_ = center_start;
    p.normalize();
    return p;
}

void SymbolicPoint::normalize() {
    left_ = primitive_root(left_);
    right_ = primitive_root(right_);

    // Absorb center symbols that already follow a periodic tail.
    while (!center_.empty() && center_.back() == right_.back()) {
        center_.pop_back();
        right_ = rotate_right(right_);
    }
    while (!center_.empty() && center_.front() == left_.front()) {
        center_.erase(center_.begin());
        left_ = rotate_left(left_);
        ++cs_;
    }

    if (!center_.empty()) return;

    // Empty center: purely periodic iff the left extension agrees with the
    // right word everywhere left of cs_.
    const std::int64_t nl = std::int64_t(left_.size());
    const std::int64_t nr = std::int64_t(right_.size());
    const std::int64_t l = std::lcm(nl, nr);
    bool periodic = true;
    for (std::int64_t k = 1; k <= l && periodic; ++k) {
        Sym from_left = left_[pos_mod(-k, nl)];
        Sym from_right = right_[pos_mod(-k, nr)];
        if (from_left != from_right) periodic = false;
    }
    if (!periodic) {
        // Canonical junction: slide it right up to the first index where the
        // sequence breaks the left period. Bounded by one lcm, else the
        // point would have been periodic.
        std::int64_t slid = 0;
        while (right_.front() == left_.front() && slid <= l) {
            left_ = rotate_left(left_);
            right_ = rotate_left(right_);
            ++cs_;
            ++slid;
        }
        if (slid > l) fail(Errc::internal, "junction slide failed to terminate");
        return;
    }

    // Rebase onto the least rotation, center_start in [0, n).
    std::size_t rot = least_rotation(right_);
    Word canon(right_.size());
    for (std::size_t j = 0; j < right_.size(); ++j) canon[j] = right_[(rot + j) % right_.size()];
    // x_i = right_[(i - cs_) mod n] = canon[(i - cs_ - rot) mod n]
    cs_ = pos_mod(cs_ + std::int64_t(rot), nr);
    left_ = canon;
    right_ = canon;
}

Sym SymbolicPoint::at(std::int64_t i) const {
    if (i >= cs_ + std::int64_t(center_.size())) {
        return right_[pos_mod(i - cs_ - std::int64_t(center_.size()), std::int64_t(right_.size()))];
    }
    if (i >= cs_) return center_[std::size_t(i - cs_)];
    return left_[pos_mod(i - cs_, std::int64_t(left_.size()))];
}

SymbolicPoint SymbolicPoint::shifted(std::int64_t by) const {
    SymbolicPoint p = *this;
    p.cs_ -= by;
    p.normalize();  // periodic points need rebasing into [0, n)
    return p;
}

Count SymbolicPoint::period() const {
    if (!is_periodic()) fail(Errc::precondition, "point is not purely periodic");
    return Count(right_.size());
}

bool SymbolicPoint::operator<(const SymbolicPoint& o) const {
    if (cs_ != o.cs_) return cs_ < o.cs_;
    if (left_ != o.left_) return left_ < o.left_;
    if (center_ != o.center_) return center_ < o.center_;
    return right_ < o.right_;
}

std::size_t SymbolicPoint::hash() const {
    std::size_t h = std::size_t(cs_) * 0x9e3779b97f4a7c15ull;
    auto mix = [&h](const Word& w) {
        for (Sym s : w) h = (h ^ (s + 0x9e3779b9u)) * 0x100000001b3ull;
        h = (h ^ w.size()) * 0x100000001b3ull;
    };
    mix(left_);
    mix(center_);
    mix(right_);
    return h;
}

std::string SymbolicPoint::to_string() const {
    auto word_str = [](const Word& w) {
        std::string s;
        for (Sym sym : w) {
            if (sym > 9) s += "<" + std::to_string(sym) + ">";
            else s += char('0' + sym);
        }
        return s;
    };
    std::string out = "(" + word_str(left_) + ")." + word_str(center_) + ".(" + word_str(right_) + ")";
    if (cs_ != 0) out += "@" + std::to_string(cs_);
    return out;
}

SymbolicPoint SymbolicPoint::parse(const std::string& text) {
    auto bad = [&]() { fail(Errc::parse_error, "malformed symbolic point: " + text); };
    std::size_t i = 0;
    auto read_word = [&](char stop) {
        Word w;
        while (i < text.size() && text[i] != stop) {
            char ch = text[i];
            if (ch == '<') {
                auto end = text.find('>', i);
                if (end == std::string::npos) bad();
                w.push_back(Sym(std::stoul(text.substr(i + 1, end - i - 1))));
                i = end + 1;
            } else if (ch >= '0' && ch <= '9') {
                w.push_back(Sym(ch - '0'));
                ++i;
            } else {
                bad();
            }
        }
        return w;
    };
    if (i >= text.size() || text[i] != '(') bad();
    ++i;
    Word left = read_word(')');
    if (i + 1 >= text.size() || text[i] != ')' || text[i + 1] != '.') bad();
    i += 2;
    Word center = read_word('.');
    if (i >= text.size() || text[i] != '.') bad();
    ++i;
    if (i >= text.size() || text[i] != '(') bad();
    ++i;
    Word right = read_word(')');
    if (i >= text.size() || text[i] != ')') bad();
    ++i;
    std::int64_t cs = 0;
    if (i < text.size()) {
        if (text[i] != '@') bad();
        cs = std::stoll(text.substr(i + 1));
    }
    return eventually_periodic(left, center, right, cs);
}

double shift_metric(const SymbolicPoint& p, const SymbolicPoint& q) {
    if (p == q) return 0.0;
    // Both tails are periodic beyond the center spans, so any difference shows
    // up within the spans plus one lcm of the period lengths.
    std::int64_t span = std::max({std::llabs(p.span_lo()), std::llabs(p.span_hi()),
                                  std::llabs(q.span_lo()), std::llabs(q.span_hi())});
    std::int64_t lcm_l = std::lcm<std::int64_t>(p.left_word().size(), q.left_word().size());
    std::int64_t lcm_r = std::lcm<std::int64_t>(p.right_word().size(), q.right_word().size());
    std::int64_t bound = span + std::max(lcm_l, lcm_r) + 1;
    for (std::int64_t k = 0; k <= bound; ++k) {
        if (p.at(k) != q.at(k) || p.at(-k) != q.at(-k)) {
            return k >= 1060 ? 0.0 : std::exp2(double(-k));
        }
    }
    fail(Errc::internal, "distinct normal forms with no symbol difference");
}

}  // namespace topodyn
