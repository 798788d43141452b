#pragma once

#include <vector>

#include "recip/rational.hpp"

namespace recip {

/// Set partitions of {0..n−1} as restricted growth strings: a[0] = 0 and
/// a[i] ≤ 1 + max(a[0..i−1]). a[i] is the block of element i.
using Rgs = std::vector<int>;

/// Advances to the lexicographically next RGS of the same length; returns
/// false (leaving `a` unspecified) after the last one.
bool next_rgs(Rgs& a);

/// All RGS of length n in lexicographic order (one empty RGS for n = 0).
std::vector<Rgs> set_partitions(int n);

/// Relabels blocks in order of first appearance so the result is an RGS.
Rgs canonical_rgs(const std::vector<int>& labels);

/// Bell number B(n) by the Bell triangle.
Integer bell_number(int n);

}  // namespace recip
