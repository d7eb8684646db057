// Multiple zeta values in arbitrary precision (MPFR), stuffle and shuffle
// products of indices, the KZ associator to a given weight and a floating
// point run of the DMR conditions.
#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <map>
#include <string>
#include <vector>

#include "dshuffle/series.hpp"

namespace dshuffle::mzv {

using BigFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                               boost::multiprecision::et_off>;

// Sets the default MPFR precision (in bits) for the lifetime of the object.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned old_;
};

unsigned default_precision_bits();  // DSHUFFLE_PREC, else 128

using Composition = std::vector<int>;
bool is_admissible(const Composition& k);
int weight(const Composition& k);
std::string composition_string(const Composition& k);  // "2,1"
Composition parse_composition(const std::string& s);

constexpr int kMaxZetaWeight = 6;

struct ZetaValue {
  BigFloat value;
  BigFloat error;  // proven bound on |value - exact|
  unsigned bits = 0;
};

// Li_{s1,...,sr}(1/2) = sum_{n1>...>nr>0} 2^{-n1} / (n1^{s1} ... nr^{sr})
ZetaValue polylog_half(const Composition& s, unsigned bits);
// zeta(k1,...,km) = sum_{n1>...>nm>0} n1^{-k1} ... nm^{-km}, k1 > 1
ZetaValue zeta(const Composition& k, unsigned bits);

// index combinatorics
using CompositionComb = std::map<Composition, long>;
CompositionComb stuffle(const Composition& u, const Composition& v);
// zeta(a) zeta(b) = sum_{i+j=a+b} c_{ij} zeta(i,j)
CompositionComb shuffle_expansion(int a, int b);
// the same with the binomials C(a-1,i-1) + C(b-1,j-1) (does not hold; see tests)
CompositionComb shuffle_expansion_transposed(int a, int b);

BigFloat harmonic_residual(int a, int b, unsigned bits, int sign = 1);
BigFloat shuffle_residual(int a, int b, unsigned bits);

// Word e0^{k1-1} e1 ... e0^{km-1} e1 <-> (k1,...,km)
Composition word_to_composition(const Word& w);
Word composition_to_word(const Composition& k);

// phi_KZ = 1 + sum (-1)^{m(w)} zeta(w) reg(w) over e0{e0,e1}^*e1, weight <= W.
// `shift` perturbs individual zeta values (negative controls).
Series<BigFloat> phi_kz(int W, unsigned bits, const std::map<Composition, BigFloat>& shift = {});

struct NumericResidual {
  std::string label;
  BigFloat value;
};
struct NumericReport {
  bool verdict = true;
  double tolerance = 0;
  std::vector<NumericResidual> residuals;  // fixed order
};
NumericReport numeric_dmr_check(int W, unsigned bits, double tolerance = 1e-8,
                                const std::map<Composition, BigFloat>& shift = {});

std::string to_string(const BigFloat& x, int digits);
std::string zeta_csv_header();
std::string zeta_csv_row(const Composition& k, const ZetaValue& z);

}  // namespace dshuffle::mzv
