#include "frobkit/skewpoly.hpp"

#include <algorithm>
#include <set>

#include "frobkit/errors.hpp"

namespace frobkit {
namespace {

ModElement apply_images(const FiniteRing& ring, const std::vector<ModElement>& images, const ModElement& a) {
  const auto& shape = ring.shape();
  ModElement out = shape.zero();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) out = shape.add(out, shape.scale(a[i], images[i]));
  return out;
}

std::vector<ModElement> basis_images(const FiniteRing& ring) {
  std::vector<ModElement> out;
  for (std::size_t i = 0; i < ring.rank(); ++i) out.push_back(ring.basis(i));
  return out;
}

void require_poly(const FiniteRing& ring, const SkewPolynomial& p) {
  for (const auto& c : p) ring.shape().require(c);
}

}  // namespace

RingAutomorphism::RingAutomorphism(FiniteRing ring, std::vector<ModElement> images) : ring_(std::move(ring)) {
  const auto& shape = ring_.shape();
  if (images.size() != ring_.rank())
    throw InvalidArgument("automorphism needs " + std::to_string(ring_.rank()) + " basis images");
  for (std::size_t i = 0; i < images.size(); ++i) {
    shape.require(images[i]);
    if (!shape.scale(shape.order(i), images[i]).is_zero())
      throw InvalidArgument("image of e" + std::to_string(i) + " has the wrong additive order");
  }
  if (apply_images(ring_, images, ring_.one()) != ring_.one())
    throw InvalidArgument("automorphism does not fix 1");
  for (std::size_t i = 0; i < ring_.rank(); ++i)
    for (std::size_t j = 0; j < ring_.rank(); ++j) {
      const auto lhs = apply_images(ring_, images, ring_.mul_table()[i][j]);
      const auto rhs = ring_.mul(images[i], images[j]);
      if (lhs != rhs)
        throw InvalidArgument("map is not multiplicative on e" + std::to_string(i) + ", e" + std::to_string(j));
    }
  std::set<ModElement> seen;
  for_each_element(shape, [&](const ModElement& a) { seen.insert(apply_images(ring_, images, a)); });
  if (seen.size() != ring_.size()) throw InvalidArgument("map is not bijective");

  const auto id = basis_images(ring_);
  powers_.push_back(id);
  auto current = images;
  while (current != id) {
    powers_.push_back(current);
    std::vector<ModElement> next;
    for (const auto& c : current) next.push_back(apply_images(ring_, images, c));
    current = std::move(next);
  }
}

RingAutomorphism RingAutomorphism::identity(const FiniteRing& ring) { return RingAutomorphism(ring, basis_images(ring)); }

ModElement RingAutomorphism::apply_power(long long j, const ModElement& a) const {
  ring_.shape().require(a);
  const auto ord = static_cast<long long>(order());
  const auto r = static_cast<std::size_t>(((j % ord) + ord) % ord);
  return apply_images(ring_, powers_[r], a);
}

ModElement apply_sigma_power(const RingAutomorphism& sigma, long long j, const ModElement& a) {
  return sigma.apply_power(j, a);
}

SkewPolynomial skew_multiply(const RingAutomorphism& sigma, const SkewPolynomial& g, const SkewPolynomial& h) {
  const auto& ring = sigma.ring();
  if (g.empty() || h.empty()) return {};
  SkewPolynomial out(g.size() + h.size() - 1, ring.zero());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].is_zero()) continue;
    for (std::size_t j = 0; j < h.size(); ++j)
      out[i + j] = ring.add(out[i + j], ring.mul(g[i], sigma.apply_power(static_cast<long long>(i), h[j])));
  }
  return out;
}

SkewPolynomial right_remainder(const RingAutomorphism& sigma, SkewPolynomial g, const SkewPolynomial& f) {
  const auto& ring = sigma.ring();
  if (f.empty() || f.back() != ring.one()) throw InvalidArgument("divisor must be monic");
  const std::size_t m = f.size() - 1;
  while (g.size() > m) {
    const std::size_t d = g.size() - 1;
    const ModElement c = g[d];
    if (!c.is_zero()) {
      // g -= c x^{d-m} f, whose coefficients are c sigma^{d-m}(f_i) at degree i + d - m.
      const auto shift = static_cast<long long>(d - m);
      for (std::size_t i = 0; i <= m; ++i)
        g[i + d - m] = ring.sub(g[i + d - m], ring.mul(c, sigma.apply_power(shift, f[i])));
    }
    g.pop_back();
  }
  g.resize(m, ring.zero());
  return g;
}

TwoSidedCheck check_two_sided(const FiniteRing& ring, const RingAutomorphism& sigma, const SkewPolynomial& f) {
  if (sigma.ring() != ring) throw InvalidArgument("automorphism is defined on a different ring");
  require_poly(ring, f);
  if (f.size() < 2 || f.back() != ring.one()) throw InvalidArgument("f must be monic of positive degree");
  const std::size_t m = f.size() - 1;
  TwoSidedCheck result;

  for (std::size_t a = 0; a < ring.rank(); ++a) {
    const auto e = ring.basis(a);
    const auto shifted = sigma.apply_power(static_cast<long long>(m), e);
    for (std::size_t i = 0; i <= m; ++i) {
      const auto lhs = ring.mul(f[i], sigma.apply_power(static_cast<long long>(i), e));
      const auto rhs = ring.mul(shifted, f[i]);
      if (lhs != rhs) {
        result.two_sided = false;
        result.commutation_witness = std::make_pair(a, i);
        result.detail = "f_" + std::to_string(i) + " sigma^" + std::to_string(i) + "(e" + std::to_string(a) +
                        ") = " + to_string(lhs) + " but sigma^" + std::to_string(m) + "(e" + std::to_string(a) +
                        ") f_" + std::to_string(i) + " = " + to_string(rhs);
        return result;
      }
    }
  }

  const ModElement c = ring.sub(f[m - 1], sigma(f[m - 1]));
  const SkewPolynomial x{ring.zero(), ring.one()};
  const SkewPolynomial x_plus_c{c, ring.one()};
  const auto fx = skew_multiply(sigma, f, x);
  const auto shifted_f = skew_multiply(sigma, x_plus_c, f);
  for (std::size_t i = 0; i < fx.size(); ++i)
    if (fx[i] != shifted_f[i]) {
      result.two_sided = false;
      result.shift_witness = i;
      result.detail = "coefficient of x^" + std::to_string(i) + ": f x has " + to_string(fx[i]) + " but (x + c) f has " +
                      to_string(shifted_f[i]) + " with c = " + to_string(c);
      return result;
    }
  return result;
}

SkewQuotient::SkewQuotient(RingAutomorphism sigma, SkewPolynomial f) : sigma_(std::move(sigma)), f_(std::move(f)) {
  const auto& ring = sigma_.ring();
  for (const auto& c : f_)
    if (!ring.shape().contains(c)) throw InvalidQuotient("coefficient " + to_string(c) + " is not in the base ring");
  if (f_.size() < 2 || f_.back() != ring.one()) throw InvalidQuotient("f must be monic of positive degree");
  const auto check = check_two_sided(ring, sigma_, f_);
  if (!check.two_sided) throw InvalidQuotient("S f is not two-sided: " + check.detail);
  if (!is_unit(ring, f_[0])) throw InvalidQuotient("constant coefficient " + to_string(f_[0]) + " is not a unit");
}

bool SkewQuotient::is_x_m_minus_one() const {
  const auto& ring = base();
  if (f_[0] != ring.neg(ring.one())) return false;
  for (std::size_t i = 1; i < degree(); ++i)
    if (!f_[i].is_zero()) return false;
  return true;
}

ModElement SkewQuotient::flatten(const SkewPolynomial& g) const {
  if (g.size() != degree()) throw InvalidArgument("quotient elements need exactly deg f coefficients");
  return make_word(base(), g);
}

SkewPolynomial SkewQuotient::unflatten(const ModElement& x) const {
  SkewPolynomial out;
  for (std::size_t j = 0; j < degree(); ++j) out.push_back(word_component(base(), x, j));
  return out;
}

SkewPolynomial quotient_mul(const SkewQuotient& q, const SkewPolynomial& g, const SkewPolynomial& h) {
  if (g.size() != q.degree() || h.size() != q.degree())
    throw InvalidArgument("quotient elements need exactly deg f coefficients");
  require_poly(q.base(), g);
  require_poly(q.base(), h);
  return right_remainder(q.sigma(), skew_multiply(q.sigma(), g, h), q.modulus());
}

ModElement constant_term_closed_form(const SkewQuotient& q, const SkewPolynomial& g, const SkewPolynomial& h) {
  const auto& ring = q.base();
  const std::size_t m = q.degree();
  ModElement acc = ring.mul(g[0], h[0]);
  for (std::size_t i = 1; i < m; ++i) {
    const auto term = ring.mul(ring.mul(g[m - i], q.sigma().apply_power(static_cast<long long>(m - i), h[i])),
                               q.modulus()[0]);
    acc = ring.sub(acc, term);
  }
  return acc;
}

bool closed_form_applies(const SkewQuotient& q) {
  for (std::size_t i = 2; i < q.degree(); ++i)
    if (!q.modulus()[i].is_zero()) return false;
  return true;
}

FiniteRing as_finite_ring(const SkewQuotient& q) {
  const auto& base = q.base();
  const std::size_t k = base.rank(), m = q.degree();
  ModuleShape shape = base.shape().repeated(m);
  check_enumeration_cap(shape.cardinality());

  auto monomial = [&](std::size_t i, std::size_t j) {
    SkewPolynomial p(m, base.zero());
    p[j] = base.basis(i);
    return p;
  };
  FiniteRing::MulTable table(m * k, std::vector<ModElement>(m * k));
  for (std::size_t j1 = 0; j1 < m; ++j1)
    for (std::size_t i1 = 0; i1 < k; ++i1)
      for (std::size_t j2 = 0; j2 < m; ++j2)
        for (std::size_t i2 = 0; i2 < k; ++i2)
          table[j1 * k + i1][j2 * k + i2] = q.flatten(quotient_mul(q, monomial(i1, j1), monomial(i2, j2)));

  SkewPolynomial one(m, base.zero());
  one[0] = base.one();
  return FiniteRing(std::move(shape), std::move(table), q.flatten(one));
}

FrobeniusFunctional frobenius_form_on_quotient(const SkewQuotient& q, const FrobeniusFunctional& base_functional) {
  if (base_functional.ring() != q.base()) throw InvalidArgument("functional belongs to a different base ring");
  auto ring = as_finite_ring(q);
  std::vector<Residue> weights(ring.rank(), 0);
  const auto& base_weights = base_functional.form().weights();
  std::copy(base_weights.begin(), base_weights.end(), weights.begin());
  ZnLinearForm form(ring.shape(), std::move(weights));
  try {
    return FrobeniusFunctional(std::move(ring), std::move(form));
  } catch (const DegenerateForm&) {
    throw InternalConsistency("eps((gh)_0) is degenerate on the quotient; quotient invariants were violated");
  }
}

SkewPolynomial theta(const SkewQuotient& q, const SkewPolynomial& g) {
  if (!q.is_x_m_minus_one()) throw Unsupported("theta is only defined for f = x^m - 1");
  const std::size_t m = q.degree();
  if (g.size() != m) throw InvalidArgument("quotient elements need exactly deg f coefficients");
  SkewPolynomial out(m, q.base().zero());
  for (std::size_t i = 0; i < m; ++i)
    out[(m - i) % m] = q.sigma().apply_power(-static_cast<long long>(i), g[i]);
  return out;
}

}  // namespace frobkit
