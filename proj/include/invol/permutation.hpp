#pragma once

#include <string>
#include <vector>

#include "invol/bigint.hpp"

namespace invol {

/// A permutation of {1..n} in one-line notation; v[i-1] is the image of i.
/// The empty permutation (n = 0) is valid.
struct Permutation {
  std::vector<int> v;

  Permutation() = default;
  explicit Permutation(std::vector<int> vals);  // validates bijection

  int size() const { return static_cast<int>(v.size()); }
  int operator()(int i) const { return v[static_cast<size_t>(i) - 1]; }  // 1-based
  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return v < o.v; }
};

/// Accepts whitespace-separated decimal values, or a contiguous digit string
/// when n <= 9 ("132" == "1 3 2").  Empty input is the empty permutation.
Permutation parse_permutation(const std::string& text);
std::string to_text(const Permutation& p);

bool is_involution(const Permutation& p);
Permutation inverse(const Permutation& p);

/// Number of fixed points; requires an involution.
int fixed_point_count(const Permutation& p);
/// Number of 2-cycles; requires an involution.
int cycle_count(const Permutation& p);

/// Exact number of subsequences of p order-isomorphic to tau.
BigInt occurrences(const Permutation& p, const Permutation& tau);
/// Like occurrences but stops counting once the total exceeds cap
/// (returns cap+1 in that case).  Used to evaluate "exactly r" constraints
/// without a full count.
BigInt occurrences_capped(const Permutation& p, const Permutation& tau, const BigInt& cap);

/// Short-circuiting containment test; monotone tau uses a longest
/// monotone subsequence check instead of subsequence search.
bool contains(const Permutation& p, const Permutation& tau);
bool avoids(const Permutation& p, const Permutation& tau);

int longest_increasing_subsequence(const Permutation& p);
int longest_decreasing_subsequence(const Permutation& p);

/// k when tau is 12..k (resp. k..21), otherwise 0.
int monotone_increasing_length(const Permutation& tau);
int monotone_decreasing_length(const Permutation& tau);

/// Number of increasing subsequences of length len (exact big count).
BigInt count_increasing_subsequences(const Permutation& p, int len);

}  // namespace invol
