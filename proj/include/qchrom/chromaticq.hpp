#ifndef QCHROM_CHROMATICQ_HPP
#define QCHROM_CHROMATICQ_HPP

#include <utility>
#include <vector>

#include "qchrom/report.hpp"
#include "qchrom/symfunc.hpp"
#include "qchrom/unigraphs.hpp"

namespace qchrom {

struct BruteForceOptions {
  int max_chromatic_n = 8;  // colorings are enumerated over [n]^n
  int max_word_n = 7;       // word-level LLT oracle
  int max_perm_n = 9;       // permutation-level LLT route
  int workers = 1;
};

// Sum over proper colorings kappa: [n] -> [n] of q^{asc(kappa)} x^kappa,
// recorded as the packed quasimonomial table. Works for arbitrary graphs on
// [n], not only unit interval ones.
MonomialTable chromatic_quasimonomials(int n,
                                       const std::vector<std::pair<int, int>>& edges,
                                       const BruteForceOptions& opts = {});

// m-basis fingerprint of the table above
SymExpansion chromatic_bruteforce(const UnitIntervalGraph& g,
                                  const BruteForceOptions& opts = {});
SymExpansion chromatic_bruteforce(int n,
                                  const std::vector<std::pair<int, int>>& edges,
                                  const BruteForceOptions& opts = {});

// closed forms, all in the e basis
SymExpansion x_complete(int m);   // [m]_q! e_m
SymExpansion x_path(int n);       // double sum over compositions with parts >= 2
SymExpansion x_lollipop(int m, int n);
SymExpansion x_join_complete_complete(int r, int n);        // K_r + K_{n-r+1}
SymExpansion x_join_complete_lollipop(int r, int m, int n); // K_r + L_{m,n}
SymExpansion x_melting_lollipop(int m, int n, int k);

// X_G = X_{G-e1} + X_{G-e2} - X_{G-e1,e2} at q = 1, for a triangle e1,e2,e3
RelationReport verify_triple_deletion(int n,
                                      std::vector<std::pair<int, int>> edges,
                                      std::pair<int, int> e1,
                                      std::pair<int, int> e2,
                                      std::pair<int, int> e3,
                                      const BruteForceOptions& opts = {});

}  // namespace qchrom

#endif
