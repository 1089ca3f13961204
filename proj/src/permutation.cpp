#include "baxter/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace baxter {

Permutation::Permutation(std::vector<int> values) : vals_(std::move(values)) {
    const int n = size();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int pos = 1; pos <= n; ++pos) {
        const int v = vals_[static_cast<size_t>(pos - 1)];
        if (v < 1 || v > n) {
            throw std::invalid_argument("value " + std::to_string(v) +
                                        " out of range at position " + std::to_string(pos) +
                                        " (expected 1.." + std::to_string(n) + ")");
        }
        if (seen[static_cast<size_t>(v)]) {
            throw std::invalid_argument("duplicate value " + std::to_string(v) +
                                        " at position " + std::to_string(pos));
        }
        seen[static_cast<size_t>(v)] = 1;
    }
}

std::optional<BaxterWitness> baxter_witness(const Permutation& p) {
    const int n = p.size();
    for (int j = 1; j + 1 <= n; ++j) {
        for (int i = 1; i < j; ++i) {
            for (int k = j + 1; k <= n; ++k) {
                const int pj = p(j), pj1 = p(j + 1), pi = p(i), pk = p(k);
                if ((pj1 < pi && pi < pk && pk < pj) ||
                    (pj < pk && pk < pi && pi < pj1)) {
                    return BaxterWitness{i, j, k};
                }
            }
        }
    }
    return std::nullopt;
}

bool is_baxter(const Permutation& p) { return !baxter_witness(p).has_value(); }

namespace {

// Backtracking containment; chosen positions must stay order-isomorphic to
// the pattern prefix. If `collect` is set, all occurrences are gathered.
bool match_from(const std::vector<int>& pat, const Permutation& p, size_t slot,
                std::vector<int>& pos, std::vector<std::vector<int>>* collect) {
    const int n = p.size();
    if (slot == pat.size()) {
        if (collect) {
            collect->push_back(pos);
            return false;  // keep searching
        }
        return true;
    }
    const int start = slot == 0 ? 1 : pos[slot - 1] + 1;
    for (int q = start; q <= n; ++q) {
        bool ok = true;
        for (size_t s = 0; s < slot; ++s) {
            if ((pat[s] < pat[slot]) != (p(pos[s]) < p(q))) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        pos[slot] = q;
        if (match_from(pat, p, slot + 1, pos, collect)) return true;
    }
    return false;
}

}  // namespace

bool occurs(const Pattern& pat, const Permutation& p) {
    if (pat.barred_index) throw std::invalid_argument("occurs: pattern carries a bar");
    if (pat.values.empty()) return true;
    if (static_cast<int>(pat.values.size()) > p.size()) return false;
    std::vector<int> pos(pat.values.size());
    return match_from(pat.values, p, 0, pos, nullptr);
}

bool avoids_barred(const Pattern& pat, const Permutation& p) {
    if (!pat.barred_index) throw std::invalid_argument("avoids_barred: pattern has no bar");
    const int b = *pat.barred_index;
    const int k = static_cast<int>(pat.values.size());
    if (b < 1 || b > k) throw std::invalid_argument("avoids_barred: bar index out of range");

    // reduced pattern: delete the barred entry, renumber values
    std::vector<int> reduced;
    reduced.reserve(static_cast<size_t>(k - 1));
    for (int s = 1; s <= k; ++s) {
        if (s == b) continue;
        int v = pat.values[static_cast<size_t>(s - 1)];
        if (v > pat.values[static_cast<size_t>(b - 1)]) --v;
        reduced.push_back(v);
    }
    {  // bar-deleted entries must form a permutation of 1..k-1
        std::vector<int> check = reduced;
        std::sort(check.begin(), check.end());
        for (int s = 1; s < k; ++s) {
            if (check[static_cast<size_t>(s - 1)] != s) {
                throw std::invalid_argument("avoids_barred: malformed barred pattern");
            }
        }
    }

    std::vector<std::vector<int>> occurrences;
    if (static_cast<int>(reduced.size()) <= p.size() && !reduced.empty()) {
        std::vector<int> pos(reduced.size());
        match_from(reduced, p, 0, pos, &occurrences);
    }

    const int n = p.size();
    for (const auto& occ : occurrences) {
        // candidate positions for the barred entry lie strictly between its
        // pattern neighbours
        const int lo = b == 1 ? 0 : occ[static_cast<size_t>(b - 2)];
        const int hi = b == k ? n + 1 : occ[static_cast<size_t>(b - 1)];
        bool extends = false;
        for (int q = lo + 1; q < hi && !extends; ++q) {
            bool ok = true;
            int slot = 0;
            for (int s = 1; s <= k && ok; ++s) {
                if (s == b) continue;
                const int u = p(occ[static_cast<size_t>(slot++)]);
                const bool pat_less = pat.values[static_cast<size_t>(b - 1)] <
                                      pat.values[static_cast<size_t>(s - 1)];
                if (pat_less != (p(q) < u)) ok = false;
            }
            if (ok) extends = true;
        }
        if (!extends) return false;
    }
    return true;
}

PermStatistics statistics(const Permutation& p) {
    const int n = p.size();
    if (n == 0) throw std::invalid_argument("statistics: empty permutation");
    PermStatistics st;
    int best_max = 0, best_min = n + 1;
    for (int i = 1; i <= n; ++i) {
        if (p(i) > best_max) {
            ++st.lr_max;
            best_max = p(i);
        }
        if (p(i) < best_min) {
            ++st.lr_min;
            best_min = p(i);
        }
    }
    best_max = 0;
    best_min = n + 1;
    for (int i = n; i >= 1; --i) {
        if (p(i) > best_max) {
            ++st.rl_max;
            best_max = p(i);
        }
        if (p(i) < best_min) {
            ++st.rl_min;
            best_min = p(i);
        }
    }
    for (int i = 1; i < n; ++i) {
        if (p(i) < p(i + 1)) ++st.ascents;
        else ++st.descents;
    }
    return st;
}

std::vector<int> lr_maxima_positions(const Permutation& p) {
    std::vector<int> pos;
    int best = 0;
    for (int i = 1; i <= p.size(); ++i) {
        if (p(i) > best) {
            pos.push_back(i);
            best = p(i);
        }
    }
    return pos;
}

std::vector<int> rl_maxima_positions(const Permutation& p) {
    std::vector<int> pos;
    int best = 0;
    for (int i = p.size(); i >= 1; --i) {
        if (p(i) > best) {
            pos.push_back(i);
            best = p(i);
        }
    }
    return pos;
}

Permutation inverse(const Permutation& p) {
    const int n = p.size();
    std::vector<int> q(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) q[static_cast<size_t>(p(i) - 1)] = i;
    return Permutation(std::move(q));
}

Permutation reverse(const Permutation& p) {
    std::vector<int> q(p.values().rbegin(), p.values().rend());
    return Permutation(std::move(q));
}

Permutation rotate_cw(const Permutation& p) {
    const int n = p.size();
    std::vector<int> q(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) q[static_cast<size_t>(p(i) - 1)] = n + 1 - i;
    return Permutation(std::move(q));
}

bool is_fixed_point_free_involution(const Permutation& p) {
    const int n = p.size();
    for (int i = 1; i <= n; ++i) {
        if (p(i) == i || p(p(i)) != i) return false;
    }
    return n > 0;
}

Permutation parse_permutation(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> vals;
    std::string tok;
    while (in >> tok) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) {
            throw std::invalid_argument("invalid token '" + tok + "' at position " +
                                        std::to_string(vals.size() + 1));
        }
        vals.push_back(v);
    }
    const int n = static_cast<int>(vals.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int pos = 1; pos <= n; ++pos) {
        const int v = vals[static_cast<size_t>(pos - 1)];
        if (v < 1 || v > n) {
            throw std::invalid_argument("value " + std::to_string(v) +
                                        " out of range at position " + std::to_string(pos) +
                                        " (expected 1.." + std::to_string(n) + ")");
        }
        if (seen[static_cast<size_t>(v)]) {
            throw std::invalid_argument("duplicate value " + std::to_string(v) +
                                        " at position " + std::to_string(pos));
        }
        seen[static_cast<size_t>(v)] = 1;
    }
    return Permutation(std::move(vals));
}

std::string format_permutation(const Permutation& p) {
    std::string out;
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) out += ' ';
        out += std::to_string(p(i));
    }
    return out;
}

Pattern pattern_from_digits(const std::string& digits, std::optional<int> barred_index) {
    std::vector<int> vals;
    vals.reserve(digits.size());
    for (char c : digits) {
        if (c < '1' || c > '9') {
            throw std::invalid_argument("pattern digits must be 1..9, got '" +
                                        std::string(1, c) + "'");
        }
        vals.push_back(c - '0');
    }
    return Pattern{std::move(vals), barred_index};
}

Pattern pattern_25314_bar3() { return pattern_from_digits("25314", 3); }
Pattern pattern_41352_bar3() { return pattern_from_digits("41352", 3); }

}  // namespace baxter
