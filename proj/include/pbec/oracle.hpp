#pragma once

#include <cstdint>
#include <vector>

#include "pbec/error_model.hpp"
#include "pbec/linear_code.hpp"

namespace pbec {

/// Hard caps for the exhaustive checks; exceeding one throws BudgetExceeded.
struct OracleBudget {
    std::uint64_t max_enumeration = 100'000'000;
    std::uint64_t max_pairs = 100'000'000;
    std::uint64_t max_nodes = 100'000'000;  // clique search
};

/// True iff no two distinct PBEs of `ch` differ by a codeword of `c`, where c
/// has length n*m and codewords are arrays flattened column-major. Decided by
/// checking that the syndrome map is injective on the PBE set.
bool is_pbecc_linear(const LinearCode& c, const PbeChannel& ch, const OracleBudget& budget = {});

/// Pairwise fan-out disjointness of an explicit code: no difference of two
/// distinct codewords lies in Delta(E).
bool is_one_shot(const std::vector<std::vector<Elem>>& codewords, const PbeChannel& ch, const OracleBudget& budget = {});

struct MaxCodeResult {
    std::uint64_t size = 0;
    std::vector<std::vector<Elem>> witness;
};

/// Largest one-shot code for `ch` by exact maximum-clique search on the
/// compatibility graph of GF(q)^{n m}. Requires q^{nm} <= max_enumeration;
/// branch-and-bound nodes are capped by max_nodes. Only one vertex per
/// symmetry class is branched on at the root.
MaxCodeResult max_code_search(const PbeChannel& ch, const OracleBudget& budget = {});

/// Exact |Delta(E)| over the PBE set of `ch`.
std::uint64_t delta_pbe_size(const PbeChannel& ch, const OracleBudget& budget = {});

/// Column-type counting bound on |Delta(E)|: pairs of bad-position sets of
/// sizes x, y with overlap z give |D22|^z |D12|^(x+y-2z) |D11|^(m-x-y+z) arrays.
std::uint64_t delta_pbe_upper_bound(const PbeChannel& ch, std::uint64_t budget = kDefaultBudget);

/// floor(q^{nm} / |E|): no one-shot code is larger.
std::uint64_t pigeonhole_bound(const PbeChannel& ch);

} // namespace pbec
