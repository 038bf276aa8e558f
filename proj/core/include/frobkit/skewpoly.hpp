#pragma once

/// Skew polynomials A[x; sigma] with x a = sigma(a) x, and quotients
/// A[x; sigma] / A[x; sigma] f by a monic f generating a two-sided ideal.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobkit/finring.hpp"
#include "frobkit/frobenius.hpp"

namespace frobkit {

/// Coefficients from degree 0 upward.
using SkewPolynomial = std::vector<ModElement>;

class RingAutomorphism {
 public:
  /// `images[i]` is the image of the i-th basis element. Throws InvalidArgument
  /// unless the additive extension is a well-defined, bijective, unital,
  /// multiplicative map.
  RingAutomorphism(FiniteRing ring, std::vector<ModElement> images);

  static RingAutomorphism identity(const FiniteRing& ring);

  const FiniteRing& ring() const { return ring_; }
  const std::vector<ModElement>& images() const { return powers_[1 % powers_.size()]; }
  /// Smallest r >= 1 with sigma^r = id.
  std::size_t order() const { return powers_.size(); }

  ModElement operator()(const ModElement& a) const { return apply_power(1, a); }
  /// sigma^j(a); j is reduced modulo the order, so negative j gives inverse powers.
  ModElement apply_power(long long j, const ModElement& a) const;

 private:
  FiniteRing ring_;
  // powers_[r][i] = sigma^r(e_i) for 0 <= r < order.
  std::vector<std::vector<ModElement>> powers_;
};

ModElement apply_sigma_power(const RingAutomorphism& sigma, long long j, const ModElement& a);

struct TwoSidedCheck {
  bool two_sided = true;
  /// (basis index a, coefficient index i) with f_i sigma^i(e_a) != sigma^m(e_a) f_i.
  std::optional<std::pair<std::size_t, std::size_t>> commutation_witness;
  /// Coefficient of f x - (x + c) f that fails to vanish for the only admissible c.
  std::optional<std::size_t> shift_witness;
  std::string detail;
};

/// Decides S f = f S for monic f: f a = sigma^m(a) f for all basis a, and f x = (x + c) f
/// with c = f_{m-1} - sigma(f_{m-1}).
TwoSidedCheck check_two_sided(const FiniteRing& ring, const RingAutomorphism& sigma, const SkewPolynomial& f);

/// Product in A[x; sigma] without reduction.
SkewPolynomial skew_multiply(const RingAutomorphism& sigma, const SkewPolynomial& g, const SkewPolynomial& h);

/// r with g = q f + r and deg r < deg f, for monic f.
SkewPolynomial right_remainder(const RingAutomorphism& sigma, SkewPolynomial g, const SkewPolynomial& f);

class SkewQuotient {
 public:
  /// Throws InvalidQuotient when f is not monic of positive degree, the ideal
  /// is one-sided, or f_0 is not a unit.
  SkewQuotient(RingAutomorphism sigma, SkewPolynomial f);

  const FiniteRing& base() const { return sigma_.ring(); }
  const RingAutomorphism& sigma() const { return sigma_; }
  const SkewPolynomial& modulus() const { return f_; }
  std::size_t degree() const { return f_.size() - 1; }
  /// f = x^m - 1.
  bool is_x_m_minus_one() const;

  /// Coefficient list <-> element of as_finite_ring(*this) (blocks of base coordinates by degree).
  ModElement flatten(const SkewPolynomial& g) const;
  SkewPolynomial unflatten(const ModElement& x) const;

 private:
  RingAutomorphism sigma_;
  SkewPolynomial f_;
};

SkewPolynomial quotient_mul(const SkewQuotient& q, const SkewPolynomial& g, const SkewPolynomial& h);

/// g_0 h_0 - sum_{i=1}^{m-1} g_{m-i} sigma^{m-i}(h_i) f_0. Equals (gh)_0 whenever
/// f_2 = ... = f_{m-1} = 0; otherwise reductions of degrees above m feed back
/// into the constant term.
ModElement constant_term_closed_form(const SkewQuotient& q, const SkewPolynomial& g, const SkewPolynomial& h);
bool closed_form_applies(const SkewQuotient& q);

FiniteRing as_finite_ring(const SkewQuotient& q);

/// g -> eps_A(g_0), re-verified to be nondegenerate (InternalConsistency otherwise).
FrobeniusFunctional frobenius_form_on_quotient(const SkewQuotient& q, const FrobeniusFunctional& base_functional);

/// sum f_i x^i -> sum sigma^{-i}(f_i) x^{(m - i) mod m}; only for f = x^m - 1 (Unsupported otherwise).
SkewPolynomial theta(const SkewQuotient& q, const SkewPolynomial& g);

}  // namespace frobkit
