#include <random>
#include <sstream>

#include "dshuffle/dmr.hpp"

namespace dshuffle::dmr {

void MembershipReport::fail(const std::string& label, int degree, const std::string& witness) {
  verdict = false;
  residuals.push_back({label, degree, witness});
}

// ---------- group laws ----------

namespace {

std::vector<Series<Q>> aut1_images(const Q& mu, const Series<Q>& g) {
  const int n = g.trunc();
  Series<Q> e0 = Series<Q>::letter(0, n), e1 = Series<Q>::letter(1, n);
  return {g * (mu * e0) * inverse_series(g), mu * e1};
}

// Lowest-degree entry of a nonzero tensor, rendered "u|v".
std::pair<int, std::string> tensor_witness(const Tensor<Q>& t) {
  int best = -1;
  std::string w;
  for (const auto& [k, c] : t.terms()) {
    int d = (int)(k.first.size() + k.second.size());
    if (best < 0 || d < best) {
      best = d;
      w = word_string(k.first) + "|" + word_string(k.second);
    }
  }
  return {best, w};
}

void check_coeff(MembershipReport& r, const std::string& label, const Series<Q>& g, const Word& w,
                 const Q& expected) {
  r.checked.push_back(label);
  if ((int)w.size() > g.trunc()) return;
  if (g.coeff(w) != expected) r.fail(label, (int)w.size(), word_string(w));
}

void check_grouplike(MembershipReport& r, const std::string& label, const Series<Q>& g) {
  r.checked.push_back(label);
  if (g.constant() != 1) {
    r.fail(label, 0, "1");
    return;
  }
  Tensor<Q> d = grouplike_defect(g);
  if (!d.is_zero()) {
    auto [deg, w] = tensor_witness(d);
    r.fail(label, deg, w);
  }
}

}  // namespace

Series<Q> aut1(const GDRPoint& p, const Series<Q>& a) {
  require_same_trunc(p.g.trunc(), a.trunc());
  return substitute(a, aut1_images(p.mu, p.g));
}

Series<Q> aut10(const GDRPoint& p, const Series<Q>& a) { return aut1(p, a) * p.g; }

GDRPoint identity_point(int n) { return {Q(1), Series<Q>::one(n)}; }

GDRPoint star(const GDRPoint& p, const GDRPoint& q) {
  GDRPoint r{p.mu * q.mu, aut10(p, q.g)};
  if (!is_grouplike(r.g)) throw std::logic_error("star: product is not group-like");
  return r;
}

// aut1_p is filtered with leading part w -> mu^{|w|} w, so it is inverted
// degree by degree.
GDRPoint star_inverse(const GDRPoint& p) {
  if (p.mu == 0) throw std::domain_error("star_inverse: mu = 0");
  const int n = p.g.trunc();
  Series<Q> target = inverse_series(p.g);
  auto img = aut1_images(p.mu, p.g);
  Series<Q> h(n);
  for (int d = 0; d <= n; ++d) {
    Series<Q> r = (target - substitute(h, img)).homogeneous(d);
    Q s = 1;
    for (int k = 0; k < d; ++k) s /= p.mu;
    h += s * r;
  }
  return {1 / p.mu, h};
}

GBPoint star_B(const GBPoint& p, const GBPoint& q) {
  const int n = p.g.trunc();
  require_same_trunc(n, q.g.trunc());
  Series<Q> e0 = Series<Q>::letter(0, n), e1 = Series<Q>::letter(1, n);
  // images of X0, X1, then back to log X0, log X1
  Series<Q> x0 = p.g * exp_series(p.mu * e0) * inverse_series(p.g);
  Series<Q> x1 = exp_series(p.mu * e1);
  std::vector<Series<Q>> img{log_series(x0), log_series(x1)};
  return {p.mu * q.mu, substitute(q.g, img) * p.g};
}

Series<Q> gamma_point(const GDRPoint& p) { return inverse_series(gamma_at_minus_e1(p.g)); }

bool gamma_cocycle_check(const GDRPoint& p, const GDRPoint& q) {
  return gamma_point(star(p, q)) == gamma_point(p) * aut1(p, gamma_point(q));
}

// ---------- comparison maps ----------

Series<Q> comp_V(const GDRPoint& p, const betti::GroupAlg& a, int variant) {
  Series<Q> m = betti::magnus(a, p.g.trunc());
  if (variant == 1) return aut1(p, m);
  if (variant == 10) return aut10(p, m);
  throw std::invalid_argument("comp_V: variant must be 1 or 10");
}

Series<Q> gamma_comp_W(const GDRPoint& p, const betti::GroupAlg& a) {
  Series<Q> gm = gamma_point(p);
  return gm * comp_V(p, a, 1) * inverse_series(gm);
}

Series<Q> gamma_comp_M(const GDRPoint& p, const betti::GroupAlg& a) {
  return dr::m_class(gamma_point(p) * comp_V(p, a, 10));
}

Series<Q> gamma_aut_M(const GDRPoint& p, const Series<Q>& m) {
  return dr::m_class(gamma_point(p) * aut10(p, m));
}

// ---------- membership ----------

MembershipReport is_dmr(const GDRPoint& p) {
  MembershipReport r;
  const Series<Q>& g = p.g;
  check_grouplike(r, "grouplike_V", g);
  check_coeff(r, "coeff_e0", g, Word{0}, 0);
  check_coeff(r, "coeff_e1", g, Word{1}, 0);
  check_coeff(r, "coeff_e0e1", g, Word{0, 1}, p.mu * p.mu / 24);
  r.checked.push_back("grouplike_M");
  if (g.constant() != 0) {
    Series<Q> c = dr::m_class(inverse_series(gamma_at_minus_e1(g)) * g);
    Tensor<Q> d = dr::delta_M_DR(c) - Tensor<Q>::product(c, c);
    if (!d.is_zero()) {
      auto [deg, w] = tensor_witness(d);
      r.fail("grouplike_M", deg, w);
    }
  }
  return r;
}

MembershipReport is_dmr_B(const GBPoint& p) {
  MembershipReport r;
  const Series<Q>& g = p.g;
  check_grouplike(r, "grouplike_V", g);
  check_coeff(r, "coeff_e0", g, Word{0}, 0);
  check_coeff(r, "coeff_e1", g, Word{1}, 0);
  r.checked.push_back("quadratic");
  if (g.trunc() >= 2 && p.mu * p.mu != 1 + 24 * g.coeff(Word{0, 1})) r.fail("quadratic", 2, "e0e1");
  if (g.trunc() < 2 && p.mu * p.mu != 1) r.fail("quadratic", 0, "mu");
  r.checked.push_back("grouplike_M_B");
  if (g.constant() != 0) {
    Series<Q> c = dr::m_class(inverse_series(gamma_at_minus_e1(g)) * g);
    Tensor<Q> d = dr::m_class2(betti::delta_W_B_hat(c)) - Tensor<Q>::product(c, c);
    if (!d.is_zero()) {
      auto [deg, w] = tensor_witness(d);
      r.fail("grouplike_M_B", deg, w);
    }
  }
  return r;
}

MembershipReport is_associator(const GDRPoint& p) {
  MembershipReport r;
  const Series<Q>& g = p.g;
  check_grouplike(r, "grouplike_V", g);
  check_coeff(r, "coeff_e0", g, Word{0}, 0);
  check_coeff(r, "coeff_e1", g, Word{1}, 0);
  check_coeff(r, "coeff_e0e1", g, Word{0, 1}, p.mu * p.mu / 24);
  r.checked.push_back("pentagon");
  braids::UP5 res = pentagon_residual(g);
  if (!res.is_zero()) {
    const auto& kv = *res.terms().terms().begin();
    r.fail("pentagon", (int)(kv.first.first.size() + kv.first.second.size()),
           braids::up5_key_string(kv.first));
  }
  return r;
}

// ---------- random points ----------

GDRPoint random_point(const Q& mu, int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  Series<Q> psi(n);
  for (int d = 1; d <= n; ++d)
    for (const auto& b : lie_basis(d, n)) {
      Q c(num(rng), den(rng));
      c.canonicalize();  // mpq equality assumes canonical form
      psi += c * b;
    }
  return {mu, exp_series(psi)};
}

std::string report_string(const MembershipReport& r) {
  std::ostringstream os;
  os << (r.verdict ? "member" : "not a member");
  for (const auto& x : r.residuals)
    os << "\n  " << x.label << " fails at degree " << x.degree << " (" << x.witness << ")";
  return os.str();
}

}  // namespace dshuffle::dmr
