// Multizeta values through Hoelder convolution: the iterated integral on
// [0,1] is split at 1/2 and both halves become multiple polylogarithms at
// 1/2, whose nested sums converge like 2^{-n}.
#include "dshuffle/mzv.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "dshuffle/dr_side.hpp"
#include "dshuffle/ncalg.hpp"

namespace dshuffle::mzv {

namespace {

unsigned digits10_for(unsigned bits) { return (unsigned)std::ceil(bits * 0.30102999566398120) + 1; }

// 2^e as an exact BigFloat
BigFloat pow2(long e) {
  BigFloat x = 1;
  mpfr_mul_2si(x.backend().data(), x.backend().data(), e, MPFR_RNDN);
  return x;
}

BigFloat from_q(const Q& q) {
  BigFloat x;
  mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return x;
}

unsigned working_bits(unsigned bits) { return bits + 32; }

void require_bits(unsigned bits) {
  if (bits < 16 || bits > 1u << 16) throw std::invalid_argument("precision must be between 16 and 65536 bits");
}

using Letters = std::vector<int>;  // 0 for dt/t, 1 for dt/(t-1)

// I(0; 1 0^{c1-1} ... 1 0^{cq-1}; 1/2) = (-1)^q Li_{cq,...,c1}(1/2)
ZetaValue integral_to_half(const Letters& u, unsigned bits, std::map<Letters, ZetaValue>& cache) {
  auto it = cache.find(u);
  if (it != cache.end()) return it->second;
  ZetaValue r;
  if (u.empty()) {
    r.value = 1;
    r.error = 0;
  } else {
    if (u.front() != 1) throw std::logic_error("integral_to_half: word must start with 1");
    Composition c;
    for (int l : u) {
      if (l == 1) c.push_back(1);
      else ++c.back();
    }
    Composition s(c.rbegin(), c.rend());
    r = polylog_half(s, bits);
    if (c.size() % 2) r.value = -r.value;
  }
  r.bits = bits;
  cache.emplace(u, r);
  return r;
}

}  // namespace

PrecisionScope::PrecisionScope(unsigned bits) : old_(BigFloat::default_precision()) {
  BigFloat::default_precision(digits10_for(bits));
}
PrecisionScope::~PrecisionScope() { BigFloat::default_precision(old_); }

unsigned default_precision_bits() {
  const char* s = std::getenv("DSHUFFLE_PREC");
  if (!s || !*s) return 128;
  char* end = nullptr;
  unsigned long v = std::strtoul(s, &end, 10);
  if (*end != '\0' || v < 16 || v > (1u << 16))
    throw std::invalid_argument(std::string("DSHUFFLE_PREC: expected a bit count in 16..65536, got '") + s + "'");
  return (unsigned)v;
}

bool is_admissible(const Composition& k) {
  if (k.empty() || k.front() < 2) return false;
  for (int x : k)
    if (x < 1) return false;
  return true;
}

int weight(const Composition& k) {
  int w = 0;
  for (int x : k) w += x;
  return w;
}

std::string composition_string(const Composition& k) {
  std::string s;
  for (size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s;
}

Composition parse_composition(const std::string& s) {
  Composition k;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != tok.size() || v < 1)
      throw std::invalid_argument("composition: bad entry '" + tok + "' in '" + s + "'");
    k.push_back(v);
  }
  if (k.empty()) throw std::invalid_argument("composition: empty");
  return k;
}

// Sum over n1 > ... > nq > 0 of 2^{-n1} prod n_i^{-s_i}, truncated at n1 <= M.
// S_k(n) = sum over n >= n_k > ... > n_q of the inner factors; all terms are
// positive, S_2(n-1) <= H_{n-1}^{q-1} <= n^{q-1}, so the tail after M is at
// most 2^{-(M+1)} (M+1)^{q-1} / (1 - r) with r = (1 + 1/(M+1))^{q-1} / 2.
ZetaValue polylog_half(const Composition& s, unsigned bits) {
  require_bits(bits);
  if (s.empty()) throw std::invalid_argument("polylog_half: empty index");
  for (int x : s)
    if (x < 1) throw std::invalid_argument("polylog_half: indices must be positive");
  const unsigned wp = working_bits(bits);
  PrecisionScope scope(wp);
  const int q = (int)s.size();
  const int w = weight(s);
  const long M = (long)wp + 8 * q + 16;
  int smax = 0;
  for (int x : s) smax = std::max(smax, x);

  std::vector<BigFloat> S(q + 1, BigFloat(0));  // S[k] for k = 1..q-1 (0-based inner levels), S[q] = 1
  S[q] = 1;
  std::vector<BigFloat> inv_pow(smax + 1);
  BigFloat sum = 0, half_pow = 1, half = BigFloat(1) / 2;
  for (long n = 1; n <= M; ++n) {
    half_pow *= half;
    BigFloat inv = BigFloat(1) / BigFloat(n);
    inv_pow[0] = 1;
    for (int e = 1; e <= smax; ++e) inv_pow[e] = inv_pow[e - 1] * inv;
    sum += half_pow * inv_pow[s[0]] * S[1];
    for (int k = 1; k < q; ++k) S[k] += inv_pow[s[k]] * S[k + 1];
  }
  BigFloat m1 = BigFloat(M + 1);
  BigFloat r = pow(1 + 1 / m1, q - 1) / 2;
  BigFloat tail = pow2(-(M + 1)) * pow(m1, q - 1) / (1 - r);
  BigFloat rounding = (sum + tail) * BigFloat(M * (q + 2) + w + 16) * pow2(2 - (long)wp);
  ZetaValue z;
  z.value = sum;
  z.error = 2 * (tail + rounding);
  z.bits = bits;
  return z;
}

// zeta(k) = (-1)^m I(0; a; 1) with a the innermost-first word, split at 1/2.
ZetaValue zeta(const Composition& k, unsigned bits) {
  require_bits(bits);
  if (!is_admissible(k)) throw std::invalid_argument("zeta: composition (" + composition_string(k) + ") is not admissible");
  if (weight(k) > kMaxZetaWeight)
    throw std::invalid_argument("zeta: weight " + std::to_string(weight(k)) + " exceeds " + std::to_string(kMaxZetaWeight));
  const unsigned wp = working_bits(bits);
  PrecisionScope scope(wp);
  Letters a;
  for (auto it = k.rbegin(); it != k.rend(); ++it) {
    a.push_back(1);
    a.insert(a.end(), *it - 1, 0);
  }
  const size_t n = a.size();
  std::map<Letters, ZetaValue> cache;
  BigFloat total = 0, err = 0, mag = 0;
  for (size_t j = 0; j <= n; ++j) {
    Letters u(a.begin(), a.begin() + j);
    // I(1/2; v; 1) = (-1)^{|v|} I(0; reverse(1 - v); 1/2)
    Letters v;
    for (size_t i = n; i > j; --i) v.push_back(1 - a[i - 1]);
    ZetaValue A = integral_to_half(u, bits, cache);
    ZetaValue B = integral_to_half(v, bits, cache);
    if ((n - j) % 2) B.value = -B.value;
    BigFloat prod = A.value * B.value;
    total += prod;
    err += abs(A.value) * B.error + abs(B.value) * A.error + A.error * B.error;
    mag += abs(prod);
  }
  if (k.size() % 2) total = -total;
  ZetaValue z;
  z.value = total;
  z.error = err + mag * BigFloat(n + 4) * pow2(2 - (long)wp);
  z.bits = bits;
  return z;
}

// ---------- index combinatorics ----------

CompositionComb stuffle(const Composition& u, const Composition& v) {
  CompositionComb out;
  if (u.empty() || v.empty()) {
    out[u.empty() ? v : u] = 1;
    return out;
  }
  Composition u1(u.begin() + 1, u.end()), v1(v.begin() + 1, v.end());
  auto prepend = [&](int x, const CompositionComb& c) {
    for (const auto& [k, m] : c) {
      Composition w{x};
      w.insert(w.end(), k.begin(), k.end());
      if ((out[w] += m) == 0) out.erase(w);
    }
  };
  prepend(u[0], stuffle(u1, v));
  prepend(v[0], stuffle(u, v1));
  prepend(u[0] + v[0], stuffle(u1, v1));
  return out;
}

namespace {
long binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigFloat expansion_residual(int a, int b, const CompositionComb& rhs, unsigned bits) {
  PrecisionScope scope(working_bits(bits));
  BigFloat lhs = zeta({a}, bits).value * zeta({b}, bits).value;
  for (const auto& [k, m] : rhs) lhs -= BigFloat(m) * zeta(k, bits).value;
  return abs(lhs);
}

void require_ab(int a, int b) {
  if (a < 2 || b < 2) throw std::invalid_argument("a and b must be > 1");
}
}  // namespace

CompositionComb shuffle_expansion(int a, int b) {
  require_ab(a, b);
  CompositionComb out;
  for (int i = 2; i < a + b; ++i) {
    long c = binom(i - 1, a - 1) + binom(i - 1, b - 1);
    if (c) out[{i, a + b - i}] = c;
  }
  return out;
}

// i = 1 would contribute the divergent zeta(1, a+b-1) and is left out.
CompositionComb shuffle_expansion_transposed(int a, int b) {
  require_ab(a, b);
  CompositionComb out;
  for (int i = 2; i < a + b; ++i) {
    long c = binom(a - 1, i - 1) + binom(b - 1, a + b - i - 1);
    if (c) out[{i, a + b - i}] = c;
  }
  return out;
}

BigFloat harmonic_residual(int a, int b, unsigned bits, int sign) {
  require_ab(a, b);
  CompositionComb rhs{{{a + b}, sign}};
  rhs[{a, b}] += 1;
  rhs[{b, a}] += 1;
  return expansion_residual(a, b, rhs, bits);
}

BigFloat shuffle_residual(int a, int b, unsigned bits) {
  return expansion_residual(a, b, shuffle_expansion(a, b), bits);
}

// ---------- words ----------

Composition word_to_composition(const Word& w) {
  if (w.empty() || w.back() != 1)
    throw std::invalid_argument("word_to_composition: word must end in e1: " + word_string(w));
  Composition k;
  int run = 1;
  for (Letter l : w) {
    if (l == 0) {
      ++run;
    } else {
      k.push_back(run);
      run = 1;
    }
  }
  return k;
}

Word composition_to_word(const Composition& k) {
  Word w;
  for (int x : k) {
    if (x < 1) throw std::invalid_argument("composition_to_word: entries must be positive");
    w.insert(w.end(), x - 1, 0);
    w.push_back(1);
  }
  return w;
}

// ---------- phi_KZ ----------

Series<BigFloat> phi_kz(int W, unsigned bits, const std::map<Composition, BigFloat>& shift) {
  if (W < 0 || W > kMaxZetaWeight) throw std::invalid_argument("phi_kz: weight must be in 0.." + std::to_string(kMaxZetaWeight));
  PrecisionScope scope(working_bits(bits));
  Series<BigFloat> phi = Series<BigFloat>::one(W);
  for (int d = 2; d <= W; ++d)
    for (const Word& w : words_of_degree(d)) {
      if (!dshuffle::is_admissible(w)) continue;
      Composition k = word_to_composition(w);
      BigFloat z = zeta(k, bits).value;
      if (auto it = shift.find(k); it != shift.end()) z += it->second;
      if (k.size() % 2) z = -z;
      Series<Q> r = reg_word(w).retruncate(W);
      for (const auto& [u, c] : r.terms()) phi.add(u, z * from_q(c));
    }
  return phi;
}

NumericReport numeric_dmr_check(int W, unsigned bits, double tolerance,
                                const std::map<Composition, BigFloat>& shift) {
  if (W < 0 || W > 5) throw std::invalid_argument("numeric_dmr_check: weight must be in 0..5");
  PrecisionScope scope(working_bits(bits));
  Series<BigFloat> phi = phi_kz(W, bits, shift);
  auto absf = [](const BigFloat& x) { return BigFloat(abs(x)); };
  NumericReport rep;
  rep.tolerance = tolerance;
  auto put = [&](const std::string& label, const BigFloat& v) {
    rep.residuals.push_back({label, v});
    if (!(v < tolerance)) rep.verdict = false;
  };
  put("grouplike_V", grouplike_defect(phi).max_abs(absf));
  put("coeff_e0", W >= 1 ? abs(phi.coeff(Word{0})) : BigFloat(0));
  put("coeff_e1", W >= 1 ? abs(phi.coeff(Word{1})) : BigFloat(0));
  // (2 pi i)^2 / 24 = -pi^2 / 6
  BigFloat pi = acos(BigFloat(-1));
  put("coeff_e0e1", W >= 2 ? abs(phi.coeff(Word{0, 1}) + pi * pi / 6) : BigFloat(0));
  Series<BigFloat> c = dr::m_class(inverse_series(gamma_at_minus_e1(phi)) * phi);
  put("grouplike_M", (dr::delta_M_DR(c) - Tensor<BigFloat>::product(c, c)).max_abs(absf));
  return rep;
}

// ---------- output ----------

std::string to_string(const BigFloat& x, int digits) { return x.str(digits, std::ios_base::fmtflags(0)); }

std::string zeta_csv_header() { return "composition,weight,value,error_bound"; }

std::string zeta_csv_row(const Composition& k, const ZetaValue& z) {
  int digits = (int)std::floor(z.bits * 0.30102999566398120);
  return "\"" + composition_string(k) + "\"," + std::to_string(weight(k)) + "," + to_string(z.value, digits) + "," +
         z.error.str(3, std::ios_base::scientific);
}

}  // namespace dshuffle::mzv
