#pragma once

#include <optional>
#include <string>
#include <vector>

namespace baxter {

// A permutation of {1..n} in one-line notation. Positions and values are
// 1-based everywhere in the public API; the empty permutation is allowed.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> values);

    int size() const { return static_cast<int>(vals_.size()); }
    bool empty() const { return vals_.empty(); }

    // value at position pos, pos in 1..n
    int operator()(int pos) const { return vals_[static_cast<size_t>(pos - 1)]; }

    const std::vector<int>& values() const { return vals_; }

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return vals_ < o.vals_; }

private:
    std::vector<int> vals_;
};

// Indices i < j < k of a triple violating the Baxter condition.
struct BaxterWitness {
    int i = 0, j = 0, k = 0;
};

struct PermStatistics {
    int lr_max = 0;
    int rl_max = 0;
    int lr_min = 0;
    int rl_min = 0;
    int ascents = 0;
    int descents = 0;
};

// Classical pattern, optionally with one barred entry.
struct Pattern {
    std::vector<int> values;          // permutation of 1..k
    std::optional<int> barred_index;  // 1-based position of the barred entry
};

bool is_baxter(const Permutation& p);

// First violating triple in lexicographic (i, j, k) order, if any.
std::optional<BaxterWitness> baxter_witness(const Permutation& p);

// Classical containment; pat must carry no bar.
bool occurs(const Pattern& pat, const Permutation& p);

// True iff every occurrence of the bar-deleted pattern extends to an
// occurrence of the full pattern; pat must carry a bar.
bool avoids_barred(const Pattern& pat, const Permutation& p);

PermStatistics statistics(const Permutation& p);  // rejects n = 0

// Positions of the left-to-right maxima, leftmost first.
std::vector<int> lr_maxima_positions(const Permutation& p);
// Positions of the right-to-left maxima, rightmost first.
std::vector<int> rl_maxima_positions(const Permutation& p);

Permutation inverse(const Permutation& p);
Permutation reverse(const Permutation& p);
// Clockwise 90-degree rotation of the diagram: (x, y) -> (y, n+1-x).
Permutation rotate_cw(const Permutation& p);

bool is_fixed_point_free_involution(const Permutation& p);

// One-line notation, decimal values separated by single spaces.
// Diagnostics name the offending position.
Permutation parse_permutation(const std::string& text);
std::string format_permutation(const Permutation& p);

// Pattern from decimal digits, e.g. "2413". Bar position given separately.
Pattern pattern_from_digits(const std::string& digits,
                            std::optional<int> barred_index = std::nullopt);

// The two barred patterns characterizing Baxter permutations.
Pattern pattern_25314_bar3();
Pattern pattern_41352_bar3();

}  // namespace baxter
