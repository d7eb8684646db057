// Reduced words in a free group. A letter is +(g+1) or -(g+1) for generator g.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dshuffle {

using FLetter = std::int8_t;
using FreeWord = std::vector<FLetter>;

inline FLetter fgen(int g, int sign = 1) { return (FLetter)(sign > 0 ? g + 1 : -(g + 1)); }
inline int fletter_gen(FLetter l) { return (l > 0 ? l : -l) - 1; }

struct FreeLess {
  bool operator()(const FreeWord& a, const FreeWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

inline void fw_push(FreeWord& w, FLetter l) {
  if (!w.empty() && w.back() == -l)
    w.pop_back();
  else
    w.push_back(l);
}

inline FreeWord fw_mul(const FreeWord& a, const FreeWord& b) {
  FreeWord r = a;
  for (FLetter l : b) fw_push(r, l);
  return r;
}

inline FreeWord fw_inv(const FreeWord& a) {
  FreeWord r(a.rbegin(), a.rend());
  for (auto& l : r) l = -l;
  return r;
}

inline FreeWord fw_pow(int g, int e) {
  FreeWord r;
  for (int i = 0; i < (e > 0 ? e : -e); ++i) r.push_back(fgen(g, e));
  return r;
}

// Image under the morphism sending generator g to img[g].
inline FreeWord fw_apply(const FreeWord& w, const std::vector<FreeWord>& img) {
  FreeWord r;
  for (FLetter l : w) {
    const FreeWord& x = img.at(fletter_gen(l));
    if (l > 0)
      for (FLetter m : x) fw_push(r, m);
    else
      for (auto it = x.rbegin(); it != x.rend(); ++it) fw_push(r, -*it);
  }
  return r;
}

// Syllables (generator, exponent) of a reduced word.
inline std::vector<std::pair<int, int>> fw_syllables(const FreeWord& w) {
  std::vector<std::pair<int, int>> s;
  for (FLetter l : w) {
    int g = fletter_gen(l), e = l > 0 ? 1 : -1;
    if (!s.empty() && s.back().first == g)
      s.back().second += e;
    else
      s.push_back({g, e});
  }
  return s;
}

inline std::string fw_string(const FreeWord& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  bool first = true;
  for (auto [g, e] : fw_syllables(w)) {
    if (!first) s += "*";
    s += names.at(g);
    if (e != 1) s += "^" + std::to_string(e);
    first = false;
  }
  return s;
}

}  // namespace dshuffle
