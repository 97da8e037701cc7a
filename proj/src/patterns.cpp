#include "invol/patterns.hpp"

#include <algorithm>
#include <set>

#include "invol/errors.hpp"

namespace invol {

PatternSpec PatternSpec::lit(Permutation p) {
  PatternSpec s;
  s.kind = PatternKind::literal;
  s.literal = std::move(p);
  return s;
}
PatternSpec PatternSpec::incr(int k) {
  PatternSpec s;
  s.kind = PatternKind::incr;
  s.k = k;
  return s;
}
PatternSpec PatternSpec::m213(int k) {
  PatternSpec s;
  s.kind = PatternKind::m213;
  s.k = k;
  return s;
}
PatternSpec PatternSpec::cycle(int k) {
  PatternSpec s;
  s.kind = PatternKind::cycle;
  s.k = k;
  return s;
}
PatternSpec PatternSpec::kd(int k, int d) {
  PatternSpec s;
  s.kind = PatternKind::kd;
  s.k = k;
  s.d = d;
  return s;
}
PatternSpec PatternSpec::dw(int l, Permutation sigma, DwForm form, std::optional<int> tail_k) {
  PatternSpec s;
  s.kind = PatternKind::dw;
  s.l = l;
  s.sigma = std::move(sigma);
  s.form = form;
  s.tail_k = tail_k;
  return s;
}

static std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

static int parse_int(const std::string& s) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(Errc::malformed, "expected integer, got '" + s + "'");
  }
}

PatternSpec parse_pattern_spec(const std::string& text) {
  size_t colon = text.find(':');
  if (colon == std::string::npos) fail(Errc::malformed, "pattern spec needs '<kind>:...': " + text);
  std::string kind = text.substr(0, colon);
  std::string body = text.substr(colon + 1);
  if (kind == "lit") return PatternSpec::lit(parse_permutation(body));
  if (kind == "incr") return PatternSpec::incr(parse_int(body));
  if (kind == "m213") return PatternSpec::m213(parse_int(body));
  if (kind == "cycle") return PatternSpec::cycle(parse_int(body));
  if (kind == "kd") {
    auto parts = split(body, ',');
    if (parts.size() != 2) fail(Errc::malformed, "kd wants k,d: " + text);
    return PatternSpec::kd(parse_int(parts[0]), parse_int(parts[1]));
  }
  if (kind == "dw") {
    auto parts = split(body, ',');
    if (parts.size() != 3 && parts.size() != 4) fail(Errc::malformed, "dw wants l,<sigma>,<A|B>[,tailk]: " + text);
    DwForm form;
    if (parts[2] == "A" || parts[2] == "a")
      form = DwForm::a;
    else if (parts[2] == "B" || parts[2] == "b")
      form = DwForm::b;
    else
      fail(Errc::malformed, "dw form must be A or B: " + parts[2]);
    std::optional<int> tail;
    if (parts.size() == 4) tail = parse_int(parts[3]);
    return PatternSpec::dw(parse_int(parts[0]), parse_permutation(parts[1]), form, tail);
  }
  fail(Errc::malformed, "unknown pattern kind: " + kind);
}

std::string to_text(const PatternSpec& s) {
  switch (s.kind) {
    case PatternKind::literal: return "lit:" + to_text(*s.literal);
    case PatternKind::incr: return "incr:" + std::to_string(*s.k);
    case PatternKind::m213: return "m213:" + std::to_string(*s.k);
    case PatternKind::cycle: return "cycle:" + std::to_string(*s.k);
    case PatternKind::kd: return "kd:" + std::to_string(*s.k) + "," + std::to_string(*s.d);
    case PatternKind::dw: {
      std::string t = "dw:" + std::to_string(*s.l) + "," + to_text(*s.sigma) + "," + (*s.form == DwForm::a ? "A" : "B");
      if (s.tail_k) t += "," + std::to_string(*s.tail_k);
      return t;
    }
  }
  return "";
}

Permutation materialize(const PatternSpec& s) {
  switch (s.kind) {
    case PatternKind::literal:
      return *s.literal;
    case PatternKind::incr: {
      const int k = s.k.value_or(0);
      if (k < 1) fail(Errc::invalid_params, "incr needs k >= 1");
      std::vector<int> v(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i) v[static_cast<size_t>(i)] = i + 1;
      return Permutation{std::move(v)};
    }
    case PatternKind::m213: {
      const int k = s.k.value_or(0);
      if (k < 3) fail(Errc::invalid_params, "m213 needs k >= 3");
      std::vector<int> v(static_cast<size_t>(k));
      v[0] = 2;
      v[1] = 1;
      for (int i = 2; i < k; ++i) v[static_cast<size_t>(i)] = i + 1;
      return Permutation{std::move(v)};
    }
    case PatternKind::cycle: {
      const int k = s.k.value_or(0);
      if (k < 2) fail(Errc::invalid_params, "cycle needs k >= 2");
      std::vector<int> v(static_cast<size_t>(k));
      for (int i = 0; i + 1 < k; ++i) v[static_cast<size_t>(i)] = i + 2;
      v[static_cast<size_t>(k) - 1] = 1;
      return Permutation{std::move(v)};
    }
    case PatternKind::kd: {
      const int k = s.k.value_or(0), d = s.d.value_or(0);
      if (k < 2 || d < 1 || 2 * d > k) fail(Errc::invalid_params, "kd needs k >= 2 and 1 <= d <= k/2");
      std::vector<int> v;
      v.reserve(static_cast<size_t>(k));
      for (int x = d + 1; x <= k; ++x) v.push_back(x);
      for (int x = 1; x <= d; ++x) v.push_back(x);
      return Permutation{std::move(v)};
    }
    case PatternKind::dw: {
      const int l = s.l.value_or(0);
      if (l < 1) fail(Errc::invalid_params, "dw needs l >= 1");
      const Permutation& sigma = s.sigma.value_or(Permutation{});
      if (sigma.size() != l - 1) fail(Errc::invalid_params, "dw sigma must have length l-1");
      if (l >= 2 && !is_wedge(sigma)) fail(Errc::invalid_params, "dw sigma must be a wedge pattern");
      Permutation sig_inv = inverse(sigma);
      const Permutation& head = (*s.form == DwForm::a) ? sig_inv : sigma;
      const Permutation& mid = (*s.form == DwForm::a) ? sigma : sig_inv;
      std::vector<int> v;
      const int tail = s.tail_k.value_or(2 * l);
      if (tail < 2 * l) fail(Errc::invalid_params, "dw tail_k must be >= 2l");
      v.reserve(static_cast<size_t>(tail));
      for (int x : head.v) v.push_back(x + l);
      v.push_back(2 * l);
      for (int x : mid.v) v.push_back(x);
      v.push_back(l);
      for (int x = 2 * l + 1; x <= tail; ++x) v.push_back(x);
      return Permutation{std::move(v)};
    }
  }
  fail(Errc::invalid_params, "unset pattern kind");
}

bool is_layered(const Permutation& p) {
  const int n = p.size();
  int bottom = 0;  // top of the previous interval; blocks tile 1..n upward
  int i = 1;
  while (i <= n) {
    const int top = p(i);  // a block starts at its maximum
    if (top <= bottom) return false;
    for (int v = top; v > bottom; --v, ++i)
      if (i > n || p(i) != v) return false;
    bottom = top;
  }
  return bottom == n;
}

bool is_wedge(const Permutation& p) {
  const int m = p.size();
  if (m == 0) return false;
  const int s = p(1) - 1;
  int next_big = s + 1;
  std::vector<int> rho_val, rho_pos;
  for (int i = 1; i <= m; ++i) {
    if (p(i) > s) {
      if (p(i) != next_big) return false;  // large values must ascend
      ++next_big;
    } else {
      rho_val.push_back(p(i));
      rho_pos.push_back(i);
    }
  }
  if (s == 0) return true;
  // Parse the small values into maximal +1 runs (the layers); layers carry
  // descending consecutive intervals, each is contiguous in p, and no two
  // layers touch (a large value separates them).
  int expected_top = s;
  size_t i = 0;
  while (i < rho_val.size()) {
    size_t j = i;
    while (j + 1 < rho_val.size() && rho_val[j + 1] == rho_val[j] + 1) ++j;
    if (rho_val[j] != expected_top) return false;
    for (size_t t = i + 1; t <= j; ++t)
      if (rho_pos[t] != rho_pos[t - 1] + 1) return false;
    if (j + 1 < rho_val.size() && rho_pos[j + 1] == rho_pos[j] + 1) return false;
    expected_top = rho_val[i] - 1;
    i = j + 1;
  }
  return expected_top == 0;
}

namespace {

void compositions(int total, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& fn) {
  if (total == 0) {
    fn(cur);
    return;
  }
  for (int part = 1; part <= total; ++part) {
    cur.push_back(part);
    compositions(total - part, cur, fn);
    cur.pop_back();
  }
}

void choose_gaps(int from, int max_gap, int need, std::vector<int>& cur,
                 const std::function<void(const std::vector<int>&)>& fn) {
  if (need == 0) {
    fn(cur);
    return;
  }
  for (int g = from; g + need - 1 <= max_gap; ++g) {
    cur.push_back(g);
    choose_gaps(g + 1, max_gap, need - 1, cur, fn);
  }
}

}  // namespace

std::vector<Permutation> wedge_patterns(int m) {
  if (m < 1) fail(Errc::invalid_params, "wedge_patterns needs m >= 1");
  std::set<Permutation> out;
  for (int s = 0; s < m; ++s) {
    const int tau_len = m - s;
    std::vector<int> comp;
    compositions(s, comp, [&](const std::vector<int>& parts) {
      const int t = static_cast<int>(parts.size());
      if (t > tau_len) return;  // each layer needs its own gap
      // Layer i (0-based) holds values (top_i - parts[i], top_i] ascending.
      std::vector<std::pair<int, int>> layers;  // (low, high)
      int top = s;
      for (int c : parts) {
        layers.emplace_back(top - c + 1, top);
        top -= c;
      }
      std::vector<int> gaps;
      choose_gaps(1, tau_len, t, gaps, [&](const std::vector<int>& g) {
        std::vector<int> word;
        word.reserve(static_cast<size_t>(m));
        size_t next_layer = 0;
        for (int pos = 1; pos <= tau_len; ++pos) {
          word.push_back(s + pos);
          if (next_layer < g.size() && g[next_layer] == pos) {
            for (int v = layers[next_layer].first; v <= layers[next_layer].second; ++v) word.push_back(v);
            ++next_layer;
          }
        }
        out.insert(Permutation{std::move(word)});
      });
    });
  }
  return {out.begin(), out.end()};
}

std::vector<Permutation> double_wedge_patterns(int l) {
  if (l < 1) fail(Errc::invalid_params, "double_wedge_patterns needs l >= 1");
  std::vector<Permutation> sigmas;
  if (l == 1)
    sigmas.push_back(Permutation{});  // degenerate: empty sigma, tau = 21
  else
    sigmas = wedge_patterns(l - 1);
  std::set<Permutation> out;
  for (const auto& sigma : sigmas)
    for (DwForm form : {DwForm::a, DwForm::b}) out.insert(materialize(PatternSpec::dw(l, sigma, form)));
  return {out.begin(), out.end()};
}

}  // namespace invol
