#include "joindet/pairs.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

namespace joindet {

namespace {

unsigned removal_mask(const std::vector<int>& removals) {
  unsigned mask = 0;
  for (int r : removals) mask |= 1u << (r - 1);
  return mask;
}

std::vector<int> mask_bits(unsigned mask) {
  std::vector<int> out;
  for (int v = 1; mask; ++v, mask >>= 1)
    if (mask & 1u) out.push_back(v);
  return out;
}

bool canonical_less(const ModPair& a, const ModPair& b) {
  if (a.handles.size() != b.handles.size())
    return a.handles.size() < b.handles.size();
  const unsigned ma = removal_mask(a.removals);
  const unsigned mb = removal_mask(b.removals);
  if (ma != mb) return ma < mb;
  return a.handles > b.handles;
}

}  // namespace

bool is_allowable(const std::vector<std::pair<int, int>>& handles, int arity,
                  const std::vector<int>& removals) {
  std::set<int> banned(removals.begin(), removals.end());
  for (int r : removals)
    if (r < 1 || r > arity) return false;
  std::set<int> seen;
  for (const auto& [u, v] : handles) {
    if (u < 1 || u > arity || v < 1 || v > arity) return false;
    if (banned.count(u) || banned.count(v)) return false;
    if (!seen.insert(u).second || !seen.insert(v).second) return false;
  }
  for (std::size_t i = 0; i < handles.size(); ++i)
    for (std::size_t k = i + 1; k < handles.size(); ++k) {
      const auto& [a, b] = handles[i];
      const auto& [c, d] = handles[k];
      if (!((a < c && b < d) || (a > c && b > d))) return false;
    }
  return true;
}

std::vector<ModPair> enumerate_pairs(int arity) {
  if (arity < 1) throw std::invalid_argument("pair enumeration needs arity >= 1");
  if (arity > 12)
    throw std::invalid_argument("pair enumeration capped at arity 12");
  const unsigned full = (1u << arity) - 1;
  std::vector<ModPair> table;
  for (unsigned rm = 0; rm <= full; ++rm) {
    const unsigned avail = full & ~rm;
    // Choose the handle sources; comparability then forces the sorted
    // sources to pair with the sorted targets one-to-one.
    for (unsigned src = avail;; src = (src - 1) & avail) {
      const unsigned rest = avail & ~src;
      const int want = std::popcount(src);
      for (unsigned dst = rest;; dst = (dst - 1) & rest) {
        if (std::popcount(dst) == want) {
          ModPair p;
          p.removals = mask_bits(rm);
          const std::vector<int> s = mask_bits(src);
          const std::vector<int> d = mask_bits(dst);
          for (int i = 0; i < want; ++i) p.handles.emplace_back(s[i], d[i]);
          table.push_back(std::move(p));
        }
        if (dst == 0) break;
      }
      if (src == 0) break;
    }
  }
  std::sort(table.begin(), table.end(), canonical_less);
  return table;
}

ModPair conjugate_pair(const ModPair& p) {
  ModPair out;
  out.removals.reserve(p.removals.size());
  for (int r : p.removals) out.removals.push_back(-r);
  out.handles.reserve(p.handles.size());
  for (const auto& [c, r] : p.handles) out.handles.emplace_back(-r, -c);
  return out;
}

int pair_sign(const ModPair& p) {
  return (p.removals.size() + p.handles.size()) % 2 == 0 ? 1 : -1;
}

IntMatrix build_sign_matrix(int arity) {
  const std::vector<ModPair> table = enumerate_pairs(arity);
  std::vector<int> signs(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) signs[i] = pair_sign(table[i]);
  return IntMatrix::diagonal(signs);
}

Digraph apply_modification(const Digraph& g, const ModPair& direct,
                           const ModPair& conj) {
  const int m = g.order();
  const ModPair conj_starred = conjugate_pair(conj);
  std::vector<std::pair<int, int>> handles = direct.handles;
  handles.insert(handles.end(), conj_starred.handles.begin(),
                 conj_starred.handles.end());
  const Digraph extended = attach_handles(g, handles);
  std::vector<int> doomed;
  doomed.reserve(direct.removals.size() + conj_starred.removals.size());
  for (int r : direct.removals) doomed.push_back(resolve_index(r, m));
  for (int r : conj_starred.removals) doomed.push_back(resolve_index(r, m));
  return delete_vertices(extended, doomed);
}

std::string format_pair(const ModPair& p) {
  static const char* kEmpty = "\xE2\x88\x85";
  std::string out = "(";
  if (p.removals.empty()) {
    out += kEmpty;
  } else {
    out += '{';
    for (std::size_t i = 0; i < p.removals.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(p.removals[i]);
    }
    out += '}';
  }
  out += ',';
  if (p.handles.empty()) {
    out += kEmpty;
  } else {
    out += '{';
    for (std::size_t i = 0; i < p.handles.size(); ++i) {
      if (i) out += ',';
      out += '[' + std::to_string(p.handles[i].first) + ',' +
             std::to_string(p.handles[i].second) + ']';
    }
    out += '}';
  }
  out += ')';
  return out;
}

std::string format_pair_sign(const ModPair& p) {
  return pair_sign(p) > 0 ? "+1" : "\xE2\x88\x92" "1";
}

}  // namespace joindet
