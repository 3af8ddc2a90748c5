#ifndef QCHROM_RIMHOOKS_HPP
#define QCHROM_RIMHOOKS_HPP

#include <vector>

#include "qchrom/partitions.hpp"

namespace qchrom {

// K'_n(alpha, lambda): sum of signs over all special rim-hook tableaux of
// shape lambda whose i-th hook from the bottom has length alpha_i. Every
// hook starts in the first column; the sign of a hook of height h is
// (-1)^{h-1}. Throws SizeMismatch when |alpha| != |lambda|.
long long special_rim_hook_count(const Composition& alpha, const Partition& lambda);

// (alpha, lambda) is flat when a special rim-hook tableau exists in which
// every hook meets the first column in exactly one cell.
bool is_flat(const Composition& alpha, const Partition& lambda);

// K*_n(alpha, lambda) = sum over beta finer than alpha (including alpha) of
// K'_n(beta, lambda). Computed through the flat shortcut when it applies and
// through the refinement sum otherwise.
long long k_star(const Composition& alpha, const Partition& lambda);
// the refinement sum unconditionally, kept separate so the two routes can be
// compared
long long k_star_refinement_sum(const Composition& alpha, const Partition& lambda);

// number of semistandard tableaux of shape lambda and weight mu (weight may
// be any composition; the count only depends on its rearrangement)
long long kostka(const Partition& lambda, const std::vector<int>& mu);

// Words with descent set {k,...,n-1}: shuffles of (n,n-1,...,k+1) and
// (1,2,...,k-1), followed by k. There are binomial(n-1,k-1) of them.
std::vector<std::vector<int>> shuffle_words_Dk(int n, int k);

}  // namespace qchrom

#endif
