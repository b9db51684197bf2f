#include "oracles.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace oracle {

Mat mul(const Mat& x, const Mat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

Mat letter(char c) {
  if (c == 'L') return {1, 1, 0, 1};
  if (c == 'R') return {1, 0, 1, 1};
  throw std::invalid_argument("bad letter");
}

std::int64_t naive_trace(std::string_view plain) {
  Mat m{1, 0, 0, 1};
  for (char c : plain) m = mul(m, letter(c));
  return m[0] + m[3];
}

std::int64_t chebyshev_trace(std::int64_t t, int k) {
  std::int64_t prev = 2, cur = t;
  if (k == 0) return prev;
  for (int i = 1; i < k; ++i) {
    const std::int64_t next = t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

std::string expand_at(std::string_view s, std::size_t& i) {
  std::string out;
  while (i < s.size() && s[i] != ')') {
    std::string unit;
    if (s[i] == '(') {
      ++i;
      unit = expand_at(s, i);
      ++i;  // ')'
    } else {
      unit = std::string(1, s[i++]);
    }
    int k = 0;
    bool has = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      k = 10 * k + (s[i++] - '0');
      has = true;
    }
    if (!has) k = 1;
    for (int j = 0; j < k; ++j) out += unit;
  }
  return out;
}

std::string swap_reverse(const std::string& w) {
  std::string r(w.rbegin(), w.rend());
  for (char& c : r) c = c == 'L' ? 'R' : 'L';
  return r;
}

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

std::string expand(std::string_view compact) {
  std::size_t i = 0;
  return expand_at(compact, i);
}

std::string least_cyclic_word(const std::string& w) {
  std::string best = w;
  for (const std::string& v : {w, swap_reverse(w)}) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::string rot = v.substr(i) + v.substr(0, i);
      best = std::min(best, rot);
    }
  }
  return best;
}

std::vector<int> corner_classes(const std::vector<int>& partner) {
  // Side s of a triangle runs from corner s to corner s + 1. Gluing side
  // (t, s) to (u, r) against the orientation puts corner s of t on corner
  // r + 1 of u, and corner s + 1 of t on corner r of u.
  const int n = static_cast<int>(partner.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto corner = [](int t, int c) { return 3 * t + c % 3; };
  for (int h = 0; h < n; ++h) {
    const int t = h / 3, s = h % 3;
    const int u = partner[h] / 3, r = partner[h] % 3;
    parent[find(parent, corner(t, s))] = find(parent, corner(u, r + 1));
    parent[find(parent, corner(t, s + 1))] = find(parent, corner(u, r));
  }
  std::map<int, int> label;
  std::vector<int> out(n);
  for (int c = 0; c < n; ++c) {
    const int root = find(parent, c);
    out[c] = label.emplace(root, static_cast<int>(label.size())).first->second;
  }
  return out;
}

std::map<int, int> degree_census(const std::vector<int>& partner) {
  const std::vector<int> cls = corner_classes(partner);
  std::map<int, int> degree;
  for (int c : cls) ++degree[c];
  std::map<int, int> census;
  for (const auto& [cusp, d] : degree) ++census[d];
  return census;
}

namespace {

struct Brute {
  const std::vector<int>& reverse;
  int max_length;
  std::vector<int> path;
  std::map<std::vector<int>, BruteClass> found;

  static int next_ccw(int h) { return 3 * (h / 3) + (h % 3 + 1) % 3; }

  char turn(int in, int out) const {
    const int entry = reverse[in];
    if (out == next_ccw(entry)) return 'R';
    if (out == next_ccw(next_ccw(entry))) return 'L';
    throw std::logic_error("backtrack");
  }

  std::vector<int> reversed(const std::vector<int>& w) const {
    std::vector<int> r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(reverse[*it]);
    return r;
  }

  static std::vector<int> least_rotation(const std::vector<int>& w) {
    std::vector<int> best = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
      std::vector<int> rot(w.begin() + static_cast<long>(i), w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(i));
      best = std::min(best, rot);
    }
    return best;
  }

  static bool primitive(const std::vector<int>& w) {
    const std::size_t n = w.size();
    for (std::size_t p = 1; p < n; ++p) {
      if (n % p) continue;
      bool periodic = true;
      for (std::size_t i = p; i < n && periodic; ++i) periodic = w[i] == w[i - p];
      if (periodic) return false;
    }
    return true;
  }

  void record() {
    if (!primitive(path)) return;
    std::vector<int> key = std::min(least_rotation(path), least_rotation(reversed(path)));
    if (found.count(key)) return;
    std::string word;
    for (std::size_t i = 0; i < key.size(); ++i) word += turn(key[i], key[(i + 1) % key.size()]);
    found[key] = {word, naive_trace(word)};
  }

  void extend() {
    const int last = path.back();
    const int v = reverse[last] / 3;
    for (int s = 0; s < 3; ++s) {
      const int next = 3 * v + s;
      if (next == reverse[last]) continue;
      if (next == path.front()) record();
      if (static_cast<int>(path.size()) < max_length) {
        path.push_back(next);
        extend();
        path.pop_back();
      }
    }
  }
};

}  // namespace

std::map<std::vector<int>, BruteClass> brute_walks(const std::vector<int>& reverse, int max_length) {
  Brute b{reverse, max_length, {}, {}};
  for (int d = 0; d < static_cast<int>(reverse.size()); ++d) {
    b.path.assign(1, d);
    b.extend();
  }
  return std::move(b.found);
}

double hdist_cosh(double px, double py, double qx, double qy) {
  const double sq = (px - qx) * (px - qx) + (py - qy) * (py - qy);
  return std::acosh(1.0 + sq / (2.0 * py * qy));
}

}  // namespace oracle
