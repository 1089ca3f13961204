#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <tuple>

namespace baxter {

using BigInt = boost::multiprecision::cpp_int;

// Binomial with the degenerate-argument convention pinned by the exhaustive
// count validation: C(a,a) = 1 for any integer a; 0 when b < 0 or b > a;
// factorial value otherwise.
BigInt extended_binomial(long long a, long long b);

// Number of Baxter permutations of size n with m ascents, i lr-maxima and
// j rl-maxima. Parameter ranges: n >= 1, 0 <= m <= n-1, 1 <= i,j <= n.
BigInt baxter_count(int n, int m, int i, int j);

BigInt baxter_number(int n);  // sum of baxter_count over all cells

// Number of permutations of size n avoiding both 2413 and 3142
// (large Schroeder numbers: 1, 2, 6, 22, 90, ...).
BigInt schroder(int n);

// Number of fixed-point-free Baxter involutions of length 2n:
// 3 * 2^(n-1) / ((n+1)(n+2)) * C(2n, n).
BigInt ffp_involution_count(int n);

// Joint distribution of (ascents, lr-max, rl-max, lr-min, rl-min) over the
// Baxter permutations of size n.
using CensusKey = std::tuple<int, int, int, int, int>;  // (m, i, j, k, l)
using CensusTable = std::map<CensusKey, BigInt>;

// Computed from the permutation generating tree; guard n <= max_n.
CensusTable census(int n, int max_n = 9);

// Same table computed from the orientation generating tree via the
// statistics dictionary; must equal census(n).
CensusTable census_from_orientations(int n, int max_n = 9);

// TSV with header "n m i j k l count", rows sorted lexicographically.
std::string census_tsv(int n, const CensusTable& table);

}  // namespace baxter
