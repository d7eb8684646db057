#include "dshuffle/dr_side.hpp"

#include <sstream>

namespace dshuffle::dr {

std::string ymonomial_string(const YMonomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) s += (i ? "*y" : "y") + std::to_string(m[i]);
  return s;
}

static void compositions(int d, YMonomial& cur, std::vector<YMonomial>& out) {
  if (d == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = 1; k <= d; ++k) {
    cur.push_back(k);
    compositions(d - k, cur, out);
    cur.pop_back();
  }
}

std::vector<YMonomial> ymonomials_of_degree(int d) {
  std::vector<YMonomial> out;
  YMonomial cur;
  compositions(d, cur, out);
  return out;
}

Word y_word(const YMonomial& m) {
  Word w;
  for (int n : m) {
    if (n < 1) throw std::invalid_argument("y-index must be >= 1");
    w.insert(w.end(), n - 1, 0);
    w.push_back(1);
  }
  return w;
}

bool word_to_ymonomial(const Word& w, YMonomial& m) {
  m.clear();
  if (!w.empty() && w.back() != 1) return false;
  int run = 0;
  for (Letter l : w) {
    if (l == 0)
      ++run;
    else {
      m.push_back(run + 1);
      run = 0;
    }
  }
  return true;
}

// ---------- localization ----------

int loc_degree(const LocWord& w) {
  int d = 0;
  for (const auto& s : w) d += s.second;
  return d;
}

bool LocLess::operator()(const LocWord& a, const LocWord& b) const {
  int da = loc_degree(a), db = loc_degree(b);
  if (da != db) return da < db;
  return a < b;
}

static void push_syllable(LocWord& w, Syllable s) {
  if (s.second == 0) return;
  if (!w.empty() && w.back().first == s.first) {
    w.back().second += s.second;
    // a cancelled e1 syllable exposes an e0-run; the next pushed syllable
    // is then an e0-run and merges with it
    if (w.back().second == 0) w.pop_back();
    return;
  }
  w.push_back(s);
}

LocWord loc_word_mul(const LocWord& a, const LocWord& b) {
  LocWord r = a;
  for (const auto& s : b) push_syllable(r, s);
  return r;
}

LocWord loc_of_word(const Word& w) {
  LocWord r;
  for (Letter l : w) push_syllable(r, {l, 1});
  return r;
}

bool loc_to_word(const LocWord& w, Word& out) {
  out.clear();
  for (const auto& [l, e] : w) {
    if (e < 0) return false;
    out.insert(out.end(), e, l);
  }
  return true;
}

LocElem loc_mul_DR(const LocElem& a, const LocElem& b) {
  LocElem r;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) r.add(loc_word_mul(x, y), cx * cy);
  return r;
}

LocElem loc_from_series(const Series<Q>& a) {
  LocElem r;
  for (const auto& [w, c] : a.terms()) r.add(loc_of_word(w), c);
  return r;
}

LocTensor loc_tensor_from(const Tensor<Q>& t) {
  LocTensor r;
  for (const auto& [k, c] : t.terms()) r.add({loc_of_word(k.first), loc_of_word(k.second)}, c);
  return r;
}

LocTensor loc_tensor_mul(const LocTensor& a, const LocTensor& b) {
  LocTensor r;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms())
      r.add({loc_word_mul(x.first, y.first), loc_word_mul(x.second, y.second)}, cx * cy);
  return r;
}

static bool ends_in_e0(const LocWord& w) { return !w.empty() && w.back().first == 0; }

LocElem loc_m_class(const LocElem& a) {
  LocElem r;
  for (const auto& [w, c] : a.terms())
    if (!ends_in_e0(w)) r.add(w, c);
  return r;
}

LocTensor loc_m_class2(const LocTensor& t) {
  LocTensor r;
  for (const auto& [k, c] : t.terms())
    if (!ends_in_e0(k.first) && !ends_in_e0(k.second)) r.add(k, c);
  return r;
}

std::string loc_word_string(const LocWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& [l, e] : w) {
    s += l ? "e1" : "e0";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string loc_tensor_string(const LocTensor& t) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t.terms()) {
    os << (first ? "" : " + ") << c.get_str() << "*(" << loc_word_string(k.first) << ")x("
       << loc_word_string(k.second) << ")";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace dshuffle::dr
