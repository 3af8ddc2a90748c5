#ifndef QCHROM_LLTUNI_HPP
#define QCHROM_LLTUNI_HPP

#include <vector>

#include "qchrom/chromaticq.hpp"
#include "qchrom/symfunc.hpp"
#include "qchrom/tableaux.hpp"
#include "qchrom/unigraphs.hpp"

namespace qchrom {

// Number of diagram cells (i,j) with w_i > w_j, the word written along the
// diagonal in content reading order. For proper words this is the ascent
// count of the corresponding coloring.
int inv_count(const std::vector<int>& word, const DyckDiagram& d);

// sum over all words in [n]^n of q^{inv} x^word, as packed monomials
MonomialTable llt_quasimonomials(const DyckDiagram& d,
                                 const BruteForceOptions& opts = {});
SymExpansion llt_bruteforce_words(const DyckDiagram& d,
                                  const BruteForceOptions& opts = {});

// F-expansion over standard fillings: permutations sigma as diagonal words,
// each contributing q^{inv(sigma)} F_{co(D)} where D is the descent set of
// the inverse word (cell of i+1 precedes cell of i)
QuasiExpansion llt_via_F(const DyckDiagram& d, const BruteForceOptions& opts = {});

// Schur expansion of llt_via_F through the ELW extraction
SymExpansion llt_schur_via_F(const DyckDiagram& d,
                             const BruteForceOptions& opts = {});

// sum_lambda (sum_{T in SYT(lambda)} q^{wt(T)}) s_lambda with
// wt(T) = sum_{i in D(T)} a_i. This equals the LLT polynomial exactly on the
// proved families (complete, path, K_n^{(k)}, lollipop, melting lollipop)
// and their disjoint unions; elsewhere it is exposed but not asserted.
SymExpansion schur_via_wt(const DyckDiagram& d);
QPoly wt_polynomial(const DyckDiagram& d, const Partition& lambda);

// whether the area sequence is one the Schur-expansion theorems cover: a
// disjoint union of melting-lollipop-family and K^{(k)}-family blocks
bool wt_formula_proved(const DyckDiagram& d);

// cocharge route for the complete graph: sum_lambda K~_{lambda,(1^n)}(q) s_lambda
SymExpansion llt_complete_cocharge(int n);

// hook-shape Schur coefficient <LLT, s_{(k,1^{n-k})}> by three routes
QPoly hook_coefficient_shuffle(const DyckDiagram& d, int k);
QPoly hook_coefficient_wt(const DyckDiagram& d, int k);
QPoly hook_coefficient_elw(const DyckDiagram& d, int k,
                           const BruteForceOptions& opts = {});

// X_G = (q-1)^{-n} LLT_G[(q-1)X; q], both sides computed independently
RelationReport plethysm_bridge_check(const UnitIntervalGraph& g,
                                     const BruteForceOptions& opts = {});

}  // namespace qchrom

#endif
