#include "coxdepth/blocks.hpp"

#include <cstdlib>
#include <stdexcept>

namespace coxdepth {

SignedPermutation direct_sum(const SignedPermutation& u, const SignedPermutation& v) {
  const int k = u.size();
  std::vector<int> win = u.window();
  win.reserve(static_cast<std::size_t>(k + v.size()));
  for (int i = 1; i <= v.size(); ++i) {
    int x = v.entry(i);
    win.push_back(x > 0 ? x + k : x - k);
  }
  return SignedPermutation(std::move(win));
}

SignedPermutation extract_block(const SignedPermutation& w, int begin, int end) {
  if (begin < 1 || end > w.size() || begin > end) throw std::invalid_argument("bad block range");
  std::vector<int> win;
  win.reserve(static_cast<std::size_t>(end - begin + 1));
  for (int i = begin; i <= end; ++i) {
    int x = w.entry(i);
    int a = std::abs(x);
    if (a < begin || a > end) throw std::invalid_argument("slice is not closed under absolute values");
    win.push_back(x > 0 ? x - (begin - 1) : x + (begin - 1));
  }
  return SignedPermutation(std::move(win));
}

BlockDecomposition b_decompose(const SignedPermutation& w) {
  BlockDecomposition dec{BlockFlavor::B, {}, {}};
  int max_abs = 0, negs = 0;
  for (int p = 1; p <= w.size(); ++p) {
    int x = w.entry(p);
    max_abs = std::max(max_abs, std::abs(x));
    if (x < 0) ++negs;
    if (max_abs == p) {  // prefix absolute values are exactly [p]
      dec.cuts.push_back(p);
      dec.odd_block.push_back(negs % 2 != 0);
      negs = 0;
    }
  }
  return dec;
}

BlockDecomposition d_decompose(const SignedPermutation& w) {
  if (w.neg_count() % 2 != 0) throw std::domain_error("element is not in D_n");
  BlockDecomposition b = b_decompose(w);
  BlockDecomposition dec{BlockFlavor::D, {}, {}};
  bool open = false;  // inside a run started by an odd B-block
  for (int i = 0; i < b.block_count(); ++i) {
    if (!open && !b.odd_block[static_cast<std::size_t>(i)]) {
      dec.cuts.push_back(b.cuts[static_cast<std::size_t>(i)]);
      dec.odd_block.push_back(false);
    } else if (!open) {
      open = true;  // odd block opens a run
    } else if (b.odd_block[static_cast<std::size_t>(i)]) {
      dec.cuts.push_back(b.cuts[static_cast<std::size_t>(i)]);  // second odd block closes it
      dec.odd_block.push_back(false);
      open = false;
    }
  }
  if (open) throw std::logic_error("unbalanced odd blocks despite even sign count");
  return dec;
}

int oddness_b(const SignedPermutation& w) {
  BlockDecomposition dec = b_decompose(w);
  int odd = 0;
  for (bool b : dec.odd_block) odd += b ? 1 : 0;
  return odd;
}

int oddness_d(const SignedPermutation& w) {
  BlockDecomposition b = b_decompose(w);
  BlockDecomposition d = d_decompose(w);
  return b.block_count() - d.block_count();
}

}  // namespace coxdepth
