#include "invol/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "invol/errors.hpp"

namespace invol {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::malformed: return "MALFORMED";
    case Errc::not_a_permutation: return "NOT_A_PERMUTATION";
    case Errc::not_an_involution: return "NOT_AN_INVOLUTION";
    case Errc::invalid_params: return "INVALID_PARAMS";
    case Errc::resource_limit: return "RESOURCE_LIMIT";
    case Errc::non_unit_constant: return "NON_UNIT_CONSTANT";
    case Errc::negative_valuation: return "NEGATIVE_VALUATION";
    case Errc::not_avoiding: return "NOT_AVOIDING";
    case Errc::not_primitive: return "NOT_PRIMITIVE";
    case Errc::wrong_occurrence_count: return "WRONG_OCCURRENCE_COUNT";
    case Errc::no_fixed_point: return "NO_FIXED_POINT";
    case Errc::not_in_class: return "NOT_IN_CLASS";
    case Errc::empty_input: return "EMPTY_INPUT";
    case Errc::not_involution_query: return "NOT_INVOLUTION_QUERY";
  }
  return "UNKNOWN";
}

static void check_bijection(const std::vector<int>& vals) {
  const int n = static_cast<int>(vals.size());
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int x : vals) {
    if (x < 1 || x > n) fail(Errc::not_a_permutation, "value " + std::to_string(x) + " out of range 1.." + std::to_string(n));
    if (seen[static_cast<size_t>(x)]) fail(Errc::not_a_permutation, "duplicate value " + std::to_string(x));
    seen[static_cast<size_t>(x)] = 1;
  }
}

Permutation::Permutation(std::vector<int> vals) : v(std::move(vals)) { check_bijection(v); }

Permutation parse_permutation(const std::string& text) {
  std::vector<int> vals;
  const bool has_space = text.find_first_of(" \t\n\r") != std::string::npos;
  std::string trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
  size_t start = 0;
  while (start < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[start]))) ++start;
  trimmed = trimmed.substr(start);
  if (trimmed.empty()) return Permutation{};

  if (!has_space) {
    bool all_digits = std::all_of(trimmed.begin(), trimmed.end(),
                                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
    if (!all_digits) fail(Errc::malformed, "non-integer token: " + trimmed);
    if (trimmed.size() <= 9) {
      for (char c : trimmed) vals.push_back(c - '0');
      return Permutation{std::move(vals)};
    }
    // Ten or more contiguous digits cannot be the compact form.
    fail(Errc::malformed, "compact digit form only allowed for n <= 9");
  }
  std::istringstream in(trimmed);
  std::string tok;
  while (in >> tok) {
    try {
      size_t pos = 0;
      int val = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      vals.push_back(val);
    } catch (const std::exception&) {
      fail(Errc::malformed, "non-integer token: " + tok);
    }
  }
  return Permutation{std::move(vals)};
}

std::string to_text(const Permutation& p) {
  std::string s;
  for (int i = 0; i < p.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p.v[static_cast<size_t>(i)]);
  }
  return s;
}

bool is_involution(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i)
    if (p(p(i)) != i) return false;
  return true;
}

Permutation inverse(const Permutation& p) {
  std::vector<int> q(static_cast<size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) q[static_cast<size_t>(p(i)) - 1] = i;
  Permutation out;
  out.v = std::move(q);
  return out;
}

int fixed_point_count(const Permutation& p) {
  if (!is_involution(p)) fail(Errc::not_an_involution, "fixed_point_count requires an involution");
  int c = 0;
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) == i) ++c;
  return c;
}

int cycle_count(const Permutation& p) {
  if (!is_involution(p)) fail(Errc::not_an_involution, "cycle_count requires an involution");
  return (p.size() - [&] {
           int c = 0;
           for (int i = 1; i <= p.size(); ++i)
             if (p(i) == i) ++c;
           return c;
         }()) /
         2;
}

namespace {

// Depth-first extension of a partial occurrence.  chosen holds the values of
// the matched prefix; a candidate p[i] is consistent iff its rank among the
// chosen values equals the rank prescribed by tau.
struct OccurrenceSearch {
  const Permutation& p;
  const Permutation& tau;
  std::vector<int> chosen;  // values, in position order
  BigInt count = 0;
  BigInt cap = -1;  // negative: unbounded
  bool stop = false;

  OccurrenceSearch(const Permutation& p_, const Permutation& tau_) : p(p_), tau(tau_) {}

  bool consistent(int value) const {
    const int j = static_cast<int>(chosen.size());  // extending to tau position j+1
    for (int t = 0; t < j; ++t) {
      const bool need_less = tau(t + 1) > tau(j + 1);
      if (need_less != (chosen[static_cast<size_t>(t)] > value)) return false;
    }
    return true;
  }

  void run(int from) {
    if (stop) return;
    const int k = tau.size();
    if (static_cast<int>(chosen.size()) == k) {
      ++count;
      if (cap >= 0 && count > cap) stop = true;
      return;
    }
    const int remaining = k - static_cast<int>(chosen.size());
    for (int i = from; i + remaining - 1 <= p.size(); ++i) {
      if (consistent(p(i))) {
        chosen.push_back(p(i));
        run(i + 1);
        chosen.pop_back();
        if (stop) return;
      }
    }
  }
};

}  // namespace

BigInt occurrences(const Permutation& p, const Permutation& tau) {
  if (tau.size() == 0) return 1;
  if (tau.size() > p.size()) return 0;
  OccurrenceSearch s(p, tau);
  s.run(1);
  return s.count;
}

BigInt occurrences_capped(const Permutation& p, const Permutation& tau, const BigInt& cap) {
  if (tau.size() == 0) return 1;
  if (tau.size() > p.size()) return 0;
  OccurrenceSearch s(p, tau);
  s.cap = cap;
  s.run(1);
  return s.count;
}

int monotone_increasing_length(const Permutation& tau) {
  for (int i = 1; i <= tau.size(); ++i)
    if (tau(i) != i) return 0;
  return tau.size();
}

int monotone_decreasing_length(const Permutation& tau) {
  const int k = tau.size();
  for (int i = 1; i <= k; ++i)
    if (tau(i) != k + 1 - i) return 0;
  return k;
}

int longest_increasing_subsequence(const Permutation& p) {
  std::vector<int> tails;  // tails[len-1] = smallest tail of an increasing subsequence of that length
  for (int x : p.v) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end())
      tails.push_back(x);
    else
      *it = x;
  }
  return static_cast<int>(tails.size());
}

int longest_decreasing_subsequence(const Permutation& p) {
  std::vector<int> tails;
  for (int x : p.v) {
    int y = -x;
    auto it = std::lower_bound(tails.begin(), tails.end(), y);
    if (it == tails.end())
      tails.push_back(y);
    else
      *it = y;
  }
  return static_cast<int>(tails.size());
}

bool contains(const Permutation& p, const Permutation& tau) {
  if (tau.size() == 0) return true;
  if (tau.size() > p.size()) return false;
  if (int k = monotone_increasing_length(tau); k > 0) return longest_increasing_subsequence(p) >= k;
  if (int k = monotone_decreasing_length(tau); k > 0) return longest_decreasing_subsequence(p) >= k;
  return occurrences_capped(p, tau, 0) > 0;
}

bool avoids(const Permutation& p, const Permutation& tau) { return !contains(p, tau); }

BigInt count_increasing_subsequences(const Permutation& p, int len) {
  if (len == 0) return 1;
  if (len < 0 || len > p.size()) return 0;
  const int n = p.size();
  // ways[l][i]: increasing subsequences of length l+1 ending at position i.
  std::vector<std::vector<BigInt>> ways(static_cast<size_t>(len), std::vector<BigInt>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) ways[0][static_cast<size_t>(i)] = 1;
  for (int l = 1; l < len; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j)
        if (p.v[static_cast<size_t>(j)] < p.v[static_cast<size_t>(i)])
          ways[static_cast<size_t>(l)][static_cast<size_t>(i)] +=
              ways[static_cast<size_t>(l) - 1][static_cast<size_t>(j)];
  BigInt total = 0;
  for (int i = 0; i < n; ++i) total += ways[static_cast<size_t>(len) - 1][static_cast<size_t>(i)];
  return total;
}

}  // namespace invol
