#pragma once

#include <functional>

#include "qgordon/qpoly.hpp"

namespace qgordon {

/// A partition as a weakly decreasing list of positive parts.
using Partition = std::vector<long long>;

/// Frequency vector (f_1, ..., f_{L-1}) of part multiplicities; the encoded
/// partition has weight sum j * f_j.
using FrequencyVector = std::vector<long long>;

Int partition_weight(const Partition& p);
Partition conjugate(const Partition& p);

/// Streams every frequency vector (f_1,...,f_{L-1}) with f_1 <= i-1,
/// f_{L-1} <= i'-1 and f_j + f_{j+1} <= k. For L <= 1 only the empty vector
/// is produced. Requires k >= 1, 1 <= i, i' <= k+1.
void enumerate_frequency_partitions(int k, int i, int iprime, long long L,
                                    const std::function<void(const FrequencyVector&)>& emit);

/// Generating function of the partitions streamed by
/// enumerate_frequency_partitions, graded by weight. Boundary convention:
/// at L = 0 the value is 1 for i = i' and 0 otherwise, which is the unique
/// initial condition consistent with the L-recurrence; at L = 1 it is 1.
/// Memoized globally (thread safe).
QPoly gen_func_bruteforce(int k, int i, int iprime, long long L);

/// L-recurrence satisfied by the generating function:
/// G(k,i,i';L) = sum_{l=0}^{i'-1} q^{l(L-1)} G(k,i,k-l+1;L-1).  Requires L >= 1.
/// Sides at L >= 2 are evaluated by gen_func_bruteforce; the formal boundary
/// values G_1 = [i+i' >= k+2] and G_0 = delta_{i,i'} (forced by consistency
/// of the recurrence with the initial condition) are used below that.
bool check_grec(int k, int i, int iprime, long long L);

/// Side of the largest d x d square of nodes anchored at the top-left corner
/// of the diagram (0 for the empty partition).
long long durfee_square_size(const Partition& p);

/// Largest d >= 0 such that the diagram contains a d x (d+1) block of nodes,
/// d columns wide and d+1 rows tall; width 0 is legal.
long long durfee_rectangle_size(const Partition& p);

/// Sizes (N_1, ..., N_k) of the successive Durfee dissection with i-1 squares
/// followed by k-i+1 rectangles: block l is measured on the rows strictly
/// below block l-1 (a square of size d consumes d rows, a rectangle of size d
/// consumes d+1 rows). Requires k >= 1, 1 <= i <= k+1.
std::vector<long long> dissect(const Partition& p, int k, int i);

/// A partition is (k,i;L,a)-admissible when its largest part is at most L,
/// the dissection sizes sum to a, every row is consumed by the dissection,
/// and the last row of each rectangle block of size d consists of exactly d
/// nodes (a size-0 rectangle therefore admits no rows below it).
bool is_admissible(const Partition& p, int k, int i, long long L, long long a);

/// Weight generating function of all (k,i;L,a)-admissible partitions.
QPoly gen_func_admissible(int k, int i, long long L, long long a);

/// Adjoin a column of height a: parts lambda_j + 1 for j = 1..a, where
/// missing parts count as 0. Requires the partition to have at most a parts.
Partition add_column(const Partition& p, long long a);

/// Remove the first column of a partition with exactly a parts, where
/// a = p.size(); parts reduced to zero disappear.
Partition remove_column(const Partition& p);

/// Successive ranks lambda_j - lambda'_j for j = 1..durfee_square_size(p).
std::vector<long long> successive_ranks(const Partition& p);

/// Weight generating function of the partitions with largest part at most
/// floor((L+k-i+2)/2), at most floor((L-k+i-1)/2) parts, and every successive
/// rank inside [2-i, 2k-i+1]. Requires L >= k-i+1.
QPoly gen_func_rank_restricted(int k, int i, long long L);

/// Streams all partitions with largest part <= max_part and at most max_rows
/// parts (including the empty partition).
void enumerate_box_partitions(long long max_part, long long max_rows,
                              const std::function<void(const Partition&)>& emit);

}  // namespace qgordon
