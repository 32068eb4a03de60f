#pragma once

#include <vector>

#include "coxdepth/group.hpp"

namespace coxdepth {

enum class BlockFlavor { B, D };

/// Cut positions a_1 < ... < a_k = n of a maximal splitting into
/// indecomposable blocks, with each block's negative-entry parity.
struct BlockDecomposition {
  BlockFlavor flavor;
  std::vector<int> cuts;
  std::vector<bool> odd_block;

  int block_count() const { return static_cast<int>(cuts.size()); }
  int block_begin(int b) const { return b == 0 ? 1 : cuts[static_cast<std::size_t>(b) - 1] + 1; }
  int block_end(int b) const { return cuts[static_cast<std::size_t>(b)]; }
};

/// (u + v)(i) = u(i) for i <= k, shifted v otherwise.
SignedPermutation direct_sum(const SignedPermutation& u, const SignedPermutation& v);

/// The block at positions [begin, end], re-indexed to start at 1.
/// Requires the slice to be closed under absolute values.
SignedPermutation extract_block(const SignedPermutation& w, int begin, int end);

/// Type B decomposition: a cut at p is valid iff {|w(1)|,...,|w(p)|} = [p].
BlockDecomposition b_decompose(const SignedPermutation& w);

/// Type D decomposition: B-blocks merged left to right into minimal runs
/// with an even number of negative entries.  Requires w in D_n.
BlockDecomposition d_decompose(const SignedPermutation& w);

/// Number of type B blocks with an odd number of negative entries.
int oddness_b(const SignedPermutation& w);

/// (#type B blocks) - (#type D blocks).  Requires w in D_n.
int oddness_d(const SignedPermutation& w);

}  // namespace coxdepth
