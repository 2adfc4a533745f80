#pragma once

// Reference implementations for the tests. They work on plain strings and
// share no code with the library beyond the data they are handed.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace oracle {

using Rules = std::vector<std::pair<std::string, std::string>>;
using Relations = std::vector<std::pair<std::string, std::string>>;

inline std::vector<std::size_t> occurrences(const std::string& h,
                                            const std::string& n) {
  std::vector<std::size_t> out;
  if (n.size() > h.size()) return out;
  for (std::size_t i = 0; i + n.size() <= h.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < n.size() && ok; ++j) ok = h[i + j] == n[j];
    if (ok) out.push_back(i);
  }
  return out;
}

/// Leftmost position, then lowest rule index, rescanning from scratch.
inline std::optional<std::string> normal_form(const Rules& rules,
                                              std::string w,
                                              std::size_t fuel = 1'000'000) {
  for (std::size_t step = 0;; ++step) {
    std::size_t best_pos = std::string::npos, best_rule = 0;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      auto occ = occurrences(w, rules[i].first);
      if (!occ.empty() && occ.front() < best_pos) {
        best_pos = occ.front();
        best_rule = i;
      }
    }
    if (best_pos == std::string::npos) return w;
    if (step == fuel) return std::nullopt;
    w = w.substr(0, best_pos) + rules[best_rule].second +
        w.substr(best_pos + rules[best_rule].first.size());
  }
}

/// Weighted shortlex: weight, then length, then the first differing letter
/// by rank (precedence lists letters greatest first). -1, 0, 1.
inline int compare(const std::map<char, unsigned>& weight,
                   const std::string& precedence, const std::string& u,
                   const std::string& v) {
  auto total = [&](const std::string& w) {
    std::uint64_t t = 0;
    for (char c : w) t += weight.at(c);
    return t;
  };
  auto tu = total(u), tv = total(v);
  if (tu != tv) return tu < tv ? -1 : 1;
  if (u.size() != v.size()) return u.size() < v.size() ? -1 : 1;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == v[i]) continue;
    // Earlier in the precedence string means greater.
    return precedence.find(u[i]) > precedence.find(v[i]) ? -1 : 1;
  }
  return 0;
}

/// Every (source, {left, right}) obtained by placing lhs j at offset o
/// inside or across the end of lhs i.
inline std::set<std::tuple<std::string, std::string, std::string>>
critical_pairs(const Rules& rules) {
  std::set<std::tuple<std::string, std::string, std::string>> out;
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const auto& [l1, r1] = rules[i];
      const auto& [l2, r2] = rules[j];
      for (std::size_t o = 0; o < l1.size(); ++o) {
        if (i == j && o == 0) continue;
        const std::size_t end = o + l2.size();
        std::string source = l1;
        if (end > l1.size()) {
          if (o == 0) continue;  // l1 would sit inside l2: the (j, i) case
          if (l1.substr(o) != l2.substr(0, l1.size() - o)) continue;
          source += l2.substr(l1.size() - o);
        } else if (l1.compare(o, l2.size(), l2) != 0) {
          continue;
        }
        std::string left = r1 + source.substr(l1.size());
        std::string right =
            source.substr(0, o) + r2 + source.substr(o + l2.size());
        if (left > right) std::swap(left, right);
        out.emplace(source, left, right);
      }
    }
  return out;
}

inline std::vector<std::string> neighbours(const Relations& rel,
                                           const std::string& w,
                                           std::size_t bound) {
  std::vector<std::string> out;
  for (const auto& [l, r] : rel)
    for (int dir = 0; dir < 2; ++dir) {
      const std::string& from = dir ? r : l;
      const std::string& to = dir ? l : r;
      if (w.size() + to.size() - from.size() > bound) continue;
      for (std::size_t pos = 0; pos + from.size() <= w.size(); ++pos)
        if (w.compare(pos, from.size(), from) == 0)
          out.push_back(w.substr(0, pos) + to + w.substr(pos + from.size()));
    }
  return out;
}

/// One-sided breadth-first distance between x and y through words of
/// length <= bound.
inline std::optional<std::size_t> distance(const Relations& rel,
                                           const std::string& x,
                                           const std::string& y,
                                           std::size_t bound) {
  std::unordered_map<std::string, std::size_t> dist{{x, 0}};
  std::deque<std::string> queue{x};
  while (!queue.empty()) {
    std::string u = queue.front();
    queue.pop_front();
    if (u == y) return dist[u];
    for (auto& v : neighbours(rel, u, bound))
      if (dist.emplace(v, dist[u] + 1).second) queue.push_back(v);
  }
  return std::nullopt;
}

/// Smallest L <= bound such that x and y are connected through words of
/// length <= L.
inline std::optional<std::size_t> min_space(const Relations& rel,
                                            const std::string& x,
                                            const std::string& y,
                                            std::size_t bound) {
  for (std::size_t L = std::max(x.size(), y.size()); L <= bound; ++L)
    if (distance(rel, x, y, L)) return L;
  return std::nullopt;
}

/// Dehn value over all pairs of words of length <= n over `letters`, with
/// intermediate words of length <= cap.
inline std::pair<std::size_t, std::size_t> dehn(const Relations& rel,
                                                const std::string& letters,
                                                std::size_t n,
                                                std::size_t cap) {
  std::vector<std::string> words{""};
  for (std::size_t i = 0; i < words.size(); ++i)
    if (words[i].size() < n)
      for (char c : letters) words.push_back(words[i] + c);
  std::size_t d = 0, s = 0;
  for (const auto& x : words)
    for (const auto& y : words) {
      if (auto dist = distance(rel, x, y, cap)) {
        d = std::max(d, *dist);
        s = std::max(s, *min_space(rel, x, y, cap));
      }
    }
  return {d, s};
}

}  // namespace oracle
