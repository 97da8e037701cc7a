#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invol/permutation.hpp"

namespace invol {

enum class PatternKind { literal, incr, m213, cycle, kd, dw };
enum class DwForm { a, b };

/// A literal pattern or a parameterized family:
///   incr(k)   = 1 2 .. k
///   m213(k)   = 2 1 3 4 .. k           (k >= 3)
///   cycle(k)  = 2 3 .. k 1             (k >= 2)
///   kd(k, d)  = (d+1)(d+2)..k 1 2..d   (1 <= d <= k/2)
///   dw(l, sigma, form[, tail_k]): double-wedge of length 2l built from a
///     wedge sigma in S_{l-1}; form a = (sigma^-1+l, 2l, sigma, l),
///     form b = (sigma+l, 2l, sigma^-1, l); tail_k > 2l appends 2l+1..tail_k.
struct PatternSpec {
  PatternKind kind = PatternKind::literal;
  std::optional<Permutation> literal;
  std::optional<int> k, d, l;
  std::optional<Permutation> sigma;
  std::optional<DwForm> form;
  std::optional<int> tail_k;

  static PatternSpec lit(Permutation p);
  static PatternSpec incr(int k);
  static PatternSpec m213(int k);
  static PatternSpec cycle(int k);
  static PatternSpec kd(int k, int d);
  static PatternSpec dw(int l, Permutation sigma, DwForm form, std::optional<int> tail_k = std::nullopt);
};

/// Text grammar: "lit:<perm>", "incr:k", "m213:k", "cycle:k", "kd:k,d",
/// "dw:l,<sigma>,<A|B>[,tailk]".
PatternSpec parse_pattern_spec(const std::string& text);
std::string to_text(const PatternSpec& s);

Permutation materialize(const PatternSpec& s);

/// Concatenation of decreasing blocks whose value sets are consecutive
/// ascending intervals (e.g. 21354 = [21][3][54]).
bool is_layered(const Permutation& p);

bool is_wedge(const Permutation& p);

/// All wedge patterns of length m, sorted lexicographically.
std::vector<Permutation> wedge_patterns(int m);

/// All distinct double-wedge patterns of length 2l (both forms over all
/// wedge sigma in S_{l-1}), sorted.
std::vector<Permutation> double_wedge_patterns(int l);

}  // namespace invol
