#include "dshuffle/ncalg.hpp"

#include <sstream>

namespace dshuffle {

Word concat(const Word& a, const Word& b) {
  Word r;
  r.reserve(a.size() + b.size());
  r.insert(r.end(), a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

std::string word_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (Letter l : w) s += l ? "e1" : "e0";
  return s;
}

Word parse_word(const std::string& s) {
  Word w;
  if (s == "1") return w;
  if (s.size() % 2) throw std::invalid_argument("bad word: " + s);
  for (size_t i = 0; i < s.size(); i += 2) {
    if (s[i] != 'e' || (s[i + 1] != '0' && s[i + 1] != '1'))
      throw std::invalid_argument("bad word: " + s);
    w.push_back(s[i + 1] - '0');
  }
  return w;
}

std::vector<Word> words_of_degree(int d) {
  std::vector<Word> r;
  for (unsigned long m = 0; m < (1ul << d); ++m) {
    Word w(d);
    for (int i = 0; i < d; ++i) w[i] = (m >> (d - 1 - i)) & 1;
    r.push_back(w);
  }
  return r;
}

static void shuffle_rec(const Word& u, size_t i, const Word& v, size_t j, Word& cur,
                        std::map<Word, long, LenLex>& out) {
  if (i == u.size() && j == v.size()) {
    ++out[cur];
    return;
  }
  if (i < u.size()) {
    cur.push_back(u[i]);
    shuffle_rec(u, i + 1, v, j, cur, out);
    cur.pop_back();
  }
  if (j < v.size()) {
    cur.push_back(v[j]);
    shuffle_rec(u, i, v, j + 1, cur, out);
    cur.pop_back();
  }
}

void shuffle_words(const Word& u, const Word& v, std::map<Word, long, LenLex>& out) {
  Word cur;
  shuffle_rec(u, 0, v, 0, cur, out);
}

bool is_admissible(const Word& w) {
  return w.size() >= 2 && w.front() == 0 && w.back() == 1;
}

// The composite V -> V (x) k[a0,a1] -> V (x) k[a0,a1] -> V:
// e_i -> e_i (x) 1 - 1 (x) a_i, then v (x) a0^a a1^b -> e1^b v e0^a.
Series<Q> reg_word(const Word& w) {
  if (!is_admissible(w)) throw std::invalid_argument("reg_word: non-admissible word " + word_string(w));
  // state: (kept subword, a, b) -> coefficient
  struct Key {
    Word v;
    int a, b;
    bool operator<(const Key& o) const {
      if (a != o.a) return a < o.a;
      if (b != o.b) return b < o.b;
      return v < o.v;
    }
  };
  std::map<Key, Q> st{{Key{{}, 0, 0}, Q(1)}};
  for (Letter l : w) {
    std::map<Key, Q> nx;
    for (const auto& [k, c] : st) {
      Key keep = k;
      keep.v.push_back(l);
      nx[keep] += c;
      Key aux = k;
      (l ? aux.b : aux.a) += 1;
      nx[aux] -= c;
    }
    st.swap(nx);
  }
  Series<Q> r((int)w.size());
  for (const auto& [k, c] : st) {
    Word out(k.b, 1);
    out.insert(out.end(), k.v.begin(), k.v.end());
    out.insert(out.end(), k.a, 0);
    r.add(out, c);
  }
  return r;
}

std::string scalar_string(const Q& q) { return q.get_str(); }

namespace {
template <class It, class F>
std::string render(It b, It e, F key) {
  std::ostringstream os;
  bool first = true;
  for (; b != e; ++b) {
    Q c = b->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    std::string k = key(b->first);
    if (k == "1")
      os << c.get_str();
    else if (c == 1)
      os << k;
    else
      os << c.get_str() << "*" << k;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}
}  // namespace

std::string series_string(const Series<Q>& a) {
  return render(a.terms().begin(), a.terms().end(), [](const Word& w) { return word_string(w); });
}

std::string tensor_string(const Tensor<Q>& t) {
  return render(t.terms().begin(), t.terms().end(), [](const WordPair& p) {
    return "(" + word_string(p.first) + ")x(" + word_string(p.second) + ")";
  });
}

}  // namespace dshuffle
