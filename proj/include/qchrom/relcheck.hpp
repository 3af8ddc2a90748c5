#ifndef QCHROM_RELCHECK_HPP
#define QCHROM_RELCHECK_HPP

#include <map>
#include <vector>

#include "qchrom/lltuni.hpp"

namespace qchrom {

// Local linear relation: with a^z obtained from a by lowering a_i by z,
// hypotheses a_{i-1}+1 <= a_i (a_0 = 1) and a_{i+a_i-1} = a_{i+a_i}+1 give
//   LLT_{nu^0} + q LLT_{nu^2} = (1+q) LLT_{nu^1}
// and the same relation for X. The identity is evaluated either way so a
// failing hypothesis can be seen to matter. Throws InvalidArea when some
// a^z is not an area sequence (the instance's objects do not exist).
RelationReport verify_lee(const std::vector<int>& area, int i,
                          const BruteForceOptions& opts = {});

// k-deletion: with descending-chain hypotheses of length ell-1,
//   (a)  LLT_{nu^0} + q [k]_q LLT_{nu^{k+1}} = [k+1]_q LLT_{nu^k}
//   (b)  [ell-k]_q LLT_{nu^0} + q^{ell-k} [k]_q LLT_{nu^ell} = [ell]_q LLT_{nu^k}
// plus both chromatic forms.
RelationReport verify_k_deletion(const std::vector<int>& area, int i, int ell,
                                 int k, const BruteForceOptions& opts = {});

// sum_i c_i X_{G_i} and sum_i c_i LLT_{G_i} vanish together
RelationReport verify_equivalence(const std::vector<QPoly>& coeffs,
                                  const std::vector<UnitIntervalGraph>& graphs,
                                  const BruteForceOptions& opts = {});

// every NUIO area sequence on n vertices, every admissible (i, ell, k);
// relation "lee" for ell = 2, "kdel" otherwise
std::vector<RelationReport> scan_relations(int n, const BruteForceOptions& opts = {});

// shared evaluation cache so a scan touches each diagram once
class RelationEvaluator {
public:
  explicit RelationEvaluator(BruteForceOptions opts) : opts_(opts) {}
  const QuasiExpansion& llt(const std::vector<int>& area);
  const MonomialTable& chromatic(const std::vector<int>& area);
  const BruteForceOptions& options() const { return opts_; }

private:
  BruteForceOptions opts_;
  std::map<std::vector<int>, QuasiExpansion> llt_cache_;
  std::map<std::vector<int>, MonomialTable> chrom_cache_;
};

RelationReport verify_k_deletion(RelationEvaluator& ev,
                                 const std::vector<int>& area, int i, int ell,
                                 int k);

}  // namespace qchrom

#endif
