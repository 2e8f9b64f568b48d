// Partitions, compositions, part statistics, and coset-representative
// enumeration with reduced words.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace macpoly {

// Entries are nonnegative; a Partition is additionally weakly decreasing.
// Both keep their fixed length n (trailing zeros included).
using Composition = std::vector<int>;
using Partition = std::vector<int>;

bool is_partition(const Composition& mu);
void check_partition(const Partition& la);

// Conjugate partition, variable length (empty for the zero partition).
Partition conjugate(const Partition& la);

// #{k : la_k >= i}, i.e. the i-th conjugate part for any i >= 1.
int conjugate_part(const Partition& la, int i);

// Replace all parts of size <= k with 0 (0 <= k <= la_1).
Partition truncate(const Partition& la, int k);

// #{k : mu_k = i}
int multiplicity(const Composition& mu, int i);

// #{k : la_k = 0 and mu_k = i}, i >= 1
int a_stat(const Composition& la, const Composition& mu, int i);

// #{k : la_k = i and la_k > mu_k}, i >= 1
int b_stat(const Composition& la, const Composition& mu, int i);

Partition sort_desc(const Composition& mu);

int weight(const Composition& mu);

// Strict dominance: mu != la and every prefix sum of mu is <= that of la.
// Defined only for equal weights.
bool dominance_less(const Partition& mu, const Partition& la);

// One representative per distinct rearrangement of the source partition.
struct CosetElement {
    Composition arrangement;
    // Reduced word of 1-based adjacent-transposition indices; the leftmost
    // letter is applied last.  Replaying right-to-left from the source
    // partition reaches `arrangement`, every swap at a strict descent.
    std::vector<int> word;
};

// Reduced word from the sorted source to the target rearrangement,
// selection-sort style (leftmost available source entry first).
std::vector<int> coset_word(const Partition& source, const Composition& target);

// A possibly braid-distinct reduced word for the same rearrangement
// (fills the last position first from the rightmost available source).
std::vector<int> coset_word_alt(const Partition& source, const Composition& target);

// All distinct rearrangements in descending lexicographic order (the
// source partition itself first, with the empty word).
std::vector<CosetElement> coset_reps(const Partition& la);

// Number of distinct rearrangements, n!/prod_i m_i!.
mpz_class coset_count(const Partition& la);

// z_la = prod_i i^{m_i} m_i! over parts i >= 1.
mpz_class z_factor(const Partition& la);

// All partitions of d with at most max_len parts, zero-padded to length
// max_len, in descending lexicographic order.
std::vector<Partition> enumerate_partitions(int d, int max_len);

// All length-n compositions with every part <= max_part, lexicographic.
std::vector<Composition> enumerate_compositions(int n, int max_part);

// Comma-separated parse, e.g. "3,1,0"; rejects negatives and junk.
Composition parse_composition(const std::string& text);

std::string composition_str(const Composition& mu);

}  // namespace macpoly
