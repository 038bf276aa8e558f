#include "frobkit/codes.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <random>

#include "frobkit/corpus.hpp"
#include "frobkit/errors.hpp"

using namespace frobkit;

namespace {

ModElement el(std::vector<Residue> c) { return ModElement(std::move(c)); }

const ModElement kOne = el({1, 0});
const ModElement kW = el({0, 1});
const ModElement kW2 = el({1, 1});
const ModElement kZero = el({0, 0});

// Integer expansion of sum_w a_w (X + (q-1)Y)^{m-w} (X - Y)^w, coefficient of X^{m-k} Y^k at k.
std::vector<long long> transform_oracle(const WeightEnumerator& w, long long q) {
  const std::size_t m = w.length;
  auto poly_mul = [](const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
  };
  std::vector<long long> total(m + 1, 0);
  for (std::size_t wt = 0; wt <= m; ++wt) {
    std::vector<long long> p{1};
    for (std::size_t i = 0; i < m - wt; ++i) p = poly_mul(p, {1, q - 1});
    for (std::size_t i = 0; i < wt; ++i) p = poly_mul(p, {1, -1});
    for (std::size_t k = 0; k <= m; ++k) total[k] += static_cast<long long>(w.counts[wt]) * p[k];
  }
  return total;
}

// Binary polynomials as bit masks; cyclic shifts of a word of length m.
std::uint32_t mulmod_xm1(std::uint32_t a, std::uint32_t b, unsigned m) {
  std::uint32_t out = 0;
  for (unsigned i = 0; i < m; ++i)
    if (a >> i & 1u)
      for (unsigned j = 0; j < m; ++j)
        if (b >> j & 1u) out ^= 1u << ((i + j) % m);
  return out;
}

ElementSet binary_ideal(std::uint32_t g, unsigned m) {
  ElementSet out;
  for (std::uint32_t p = 0; p < (1u << m); ++p) {
    const auto c = mulmod_xm1(g, p, m);
    std::vector<Residue> w(m);
    for (unsigned i = 0; i < m; ++i) w[i] = c >> i & 1u;
    out.insert(ModElement(w));
  }
  return out;
}

// x^m = 1, for polynomials of degree at most m.
std::uint32_t reduce_xm1(std::uint32_t p, unsigned m) { return (p & ((1u << m) - 1)) ^ (p >> m); }

std::uint32_t reciprocal(std::uint32_t p, unsigned degree) {
  std::uint32_t out = 0;
  for (unsigned i = 0; i <= degree; ++i)
    if (p >> i & 1u) out |= 1u << (degree - i);
  return out;
}

unsigned degree_of(std::uint32_t p) {
  unsigned d = 0;
  for (unsigned i = 0; i < 32; ++i)
    if (p >> i & 1u) d = i;
  return d;
}

// Carry-less product without reduction.
std::uint32_t clmul(std::uint32_t a, std::uint32_t b) {
  std::uint32_t out = 0;
  for (unsigned i = 0; i < 16; ++i)
    if (a >> i & 1u) out ^= b << i;
  return out;
}

LinearCode words_code(const FiniteRing& ring, std::size_t m, const ElementSet& words, CodeSide side) {
  return code_from_codewords(ring, m, words, side);
}

std::vector<std::vector<std::size_t>> s3_table() {
  std::vector<std::array<int, 3>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

}  // namespace

TEST(LinearCode, Generation) {
  const auto f2 = ring_zn(2);
  EXPECT_EQ(generate(f2, 2, {el({1, 0})}, CodeSide::left).size(), 2u);
  EXPECT_EQ(generate(f2, 3, {el({1, 1, 0}), el({0, 1, 1})}, CodeSide::left).size(), 4u);
  const auto z4 = ring_zn(4);
  EXPECT_EQ(generate(z4, 2, {el({1, 1})}, CodeSide::right).size(), 4u);
  EXPECT_EQ(generate(z4, 2, {el({2, 0}), el({0, 2})}, CodeSide::left).size(), 4u);
  EXPECT_EQ(generate(z4, 2, {el({2, 1})}, CodeSide::additive).size(), 4u);
  EXPECT_THROW(generate(z4, 2, {el({2, 1, 0})}, CodeSide::left), InvalidArgument);
}

TEST(LinearCode, SidesDifferOverMatrixRings) {
  const auto m = ring_matrix(ring_zn(2), 2);
  const auto e11 = el({1, 0, 0, 0});
  const auto l = generate(m, 1, {e11}, CodeSide::left);
  const auto r = generate(m, 1, {e11}, CodeSide::right);
  EXPECT_EQ(l.size(), 4u);
  EXPECT_EQ(r.size(), 4u);
  EXPECT_NE(l.codewords(), r.codewords());
  EXPECT_THROW(same_code(l, r), SideMismatch);
  EXPECT_THROW(as_side(l, CodeSide::right), InvalidArgument);
  EXPECT_EQ(as_side(l, CodeSide::additive).codewords(), l.codewords());
  EXPECT_EQ(generate(m, 1, l.generators(), CodeSide::additive).size(), 2u);
}

TEST(LinearCode, FromCodewordsValidatesClosure) {
  const auto f2 = ring_zn(2);
  EXPECT_THROW(code_from_codewords(f2, 2, {el({0, 0}), el({1, 0}), el({0, 1})}, CodeSide::left), InvalidArgument);
  const auto c = code_from_codewords(f2, 2, {el({0, 0}), el({1, 1})}, CodeSide::left);
  EXPECT_EQ(c.generators(), (std::vector<ModElement>{el({1, 1})}));
}

TEST(WeightEnumerator, Examples) {
  const auto f2 = ring_zn(2);
  EXPECT_EQ(weight_enumerator(generate(f2, 2, {el({1, 0})}, CodeSide::left)).to_string(), "X^2 + XY");
  EXPECT_EQ(weight_enumerator(generate(f2, 3, {el({1, 1, 1})}, CodeSide::left)).to_string(), "X^3 + Y^3");
  EXPECT_EQ(weight_enumerator(generate(f2, 2, {el({1, 0}), el({0, 1})}, CodeSide::left)).to_string(),
            "X^2 + 2XY + Y^2");
  const auto z4 = generate(ring_zn(4), 1, {el({2})}, CodeSide::left);
  const auto w = weight_enumerator(z4);
  EXPECT_EQ(w.counts, (std::vector<std::uint64_t>{1, 1}));
  EXPECT_EQ(w.total(), 2u);
  EXPECT_EQ(hamming_weight(corpus::field_f4(), make_word(corpus::field_f4(), {kW, kZero, kW2})), 2u);
}

TEST(WeightEnumerator, InvariantUnderCoordinatePermutation) {
  const auto z4 = ring_zn(4);
  std::mt19937 rng(29);
  for (int t = 0; t < 20; ++t) {
    std::vector<ModElement> gens(1 + rng() % 2);
    for (auto& g : gens) g = el({Residue(rng() % 4), Residue(rng() % 4), Residue(rng() % 4)});
    const auto c = generate(z4, 3, gens, CodeSide::left);
    auto permuted = gens;
    for (auto& g : permuted) g = el({g[2], g[0], g[1]});
    EXPECT_EQ(weight_enumerator(c), weight_enumerator(generate(z4, 3, permuted, CodeSide::left)));
  }
}

TEST(Dual, CounterexampleForm) {
  const auto f2 = ring_zn(2);
  const AmbientForm q(f2, {{el({1}), el({1})}, {el({0}), el({1})}});
  const auto c = generate(f2, 2, {el({1, 0})}, CodeSide::left);
  const auto d = dual(c, q, Side::right);
  EXPECT_EQ(d.side(), CodeSide::right);
  EXPECT_EQ(d.codewords(), (ElementSet{el({0, 0}), el({1, 1})}));
  EXPECT_EQ(weight_enumerator(d).to_string(), "X^2 + Y^2");
  EXPECT_THROW(dual(c, q, Side::left), SideMismatch);
  EXPECT_THROW(dual(c, AmbientForm(f2, {{el({1}), el({1})}, {el({1}), el({1})}}), Side::right), DegenerateForm);

  const auto res = macwilliams_holds(c, q);
  EXPECT_FALSE(res.holds);
  EXPECT_FALSE(res.monomial);
  ASSERT_TRUE(res.transformed.has_value());
  EXPECT_EQ(res.transformed->to_string(), "X^2 + XY");
  EXPECT_EQ(res.dual_enumerator.to_string(), "X^2 + Y^2");
}

TEST(Monomial, Examples) {
  const auto z4 = ring_zn(4);
  EXPECT_FALSE(is_monomial(z4, {{el({0}), el({3})}, {el({2}), el({0})}}));
  EXPECT_TRUE(is_monomial(z4, {{el({0}), el({3})}, {el({1}), el({0})}}));
  EXPECT_FALSE(is_monomial(z4, {{el({1}), el({1})}, {el({0}), el({1})}}));
  EXPECT_TRUE(is_monomial(z4, AmbientForm::identity(z4, 3).matrix()));
}

TEST(MacWilliamsTransform, MatchesIntegerExpansion) {
  const WeightEnumerator w{2, {1, 1, 0}};
  EXPECT_EQ(macwilliams_transform(w, 2, 2).to_string(), "X^2 + XY");
  EXPECT_THROW(macwilliams_transform(w, 2, 3), NotApplicable);
  EXPECT_THROW(macwilliams_transform(WeightEnumerator{1, {1, 0}}, 2, 0), InvalidArgument);
  for (const auto& c : enumerate_codes(ring_zn(4), 2, CodeSide::left)) {
    const auto wc = weight_enumerator(c);
    const auto oracle = transform_oracle(wc, 4);
    const auto got = macwilliams_transform(wc, 4, c.size());
    for (std::size_t k = 0; k <= 2; ++k) EXPECT_EQ(static_cast<long long>(got.counts[k]) * c.size(), oracle[k]);
  }
}

TEST(MacWilliams, HoldsForMonomialFormsOverFrobeniusAlphabets) {
  const auto f4 = corpus::field_f4();
  const std::vector<AmbientForm> forms{
      AmbientForm::identity(ring_zn(4), 2), AmbientForm(ring_zn(4), {{el({0}), el({3})}, {el({1}), el({0})}}),
      AmbientForm::identity(f4, 2), AmbientForm(f4, {{kZero, kW}, {kOne, kZero}}),
      AmbientForm::identity(ring_matrix(ring_zn(2), 2), 1), AmbientForm::identity(ring_group_algebra(2, cyclic_group_table(2)), 2)};
  for (const auto& form : forms) {
    ASSERT_TRUE(is_monomial(form.ring(), form.matrix()));
    const auto q = form.ring().size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < form.length(); ++i) total *= q;
    for (CodeSide side : {CodeSide::left, CodeSide::right}) {
      for (const auto& c : enumerate_codes(form.ring(), form.length(), side)) {
        const auto res = macwilliams_holds(c, form);
        EXPECT_TRUE(res.holds);
        EXPECT_EQ(c.size() * res.dual_code.size(), total);
        const auto back = dual(res.dual_code, form, side == CodeSide::left ? Side::left : Side::right);
        EXPECT_EQ(back.codewords(), c.codewords());
      }
    }
  }
}

TEST(MacWilliams, FailsForNonFrobeniusAlphabet) {
  const auto r8 = corpus::ring_r8();
  const auto j = jacobson_radical(r8);
  const auto c = code_from_codewords(r8, 1, j.elements, CodeSide::left);
  const auto res = macwilliams_holds(c, AmbientForm::identity(r8, 1));
  EXPECT_FALSE(res.holds);
  EXPECT_EQ(res.dual_code.size(), 4u);
  EXPECT_EQ(res.transformed->to_string(), "X + Y");
}

TEST(EnumerateCodes, Counts) {
  EXPECT_EQ(enumerate_codes(ring_zn(2), 2, CodeSide::left).size(), 5u);
  EXPECT_EQ(enumerate_codes(ring_zn(4), 1, CodeSide::right).size(), 3u);
  EXPECT_EQ(enumerate_codes(corpus::field_f4(), 2, CodeSide::left).size(), 7u);
}

TEST(CyclicCodes, BinaryDualsMatchReciprocalCheckPolynomial) {
  // Divisors of x^m - 1 over F_2 for m = 3 and 7, as bit masks.
  const std::vector<std::pair<unsigned, std::vector<std::uint32_t>>> cases{
      {3, {0b1, 0b11, 0b111, 0b1001}},
      {7, {0b1, 0b11, 0b1011, 0b1101, 0b11101, 0b10111, 0b1111111, 0b10000001}}};
  const auto f2 = ring_zn(2);
  for (const auto& [m, divisors] : cases) {
    const auto q = corpus::x_m_minus_one(RingAutomorphism::identity(f2), m);
    const std::uint32_t xm1 = (1u << m) | 1u;
    for (const auto g : divisors) {
      // h = (x^m - 1) / g by trial.
      std::uint32_t h = 0;
      for (std::uint32_t cand = 1; cand < (1u << (m + 1)); ++cand)
        if (clmul(cand, g) == xm1) h = cand;
      ASSERT_NE(h, 0u);
      const auto code = words_code(f2, m, binary_ideal(reduce_xm1(g, m), m), CodeSide::left);
      EXPECT_TRUE(is_sigma_cyclic(code, q));
      const auto expected_dual = binary_ideal(reduce_xm1(reciprocal(h, degree_of(h)), m), m);
      EXPECT_EQ(euclidean_dual(code).codewords(), expected_dual) << m << " " << g;
      const FrobeniusFunctional eps(f2, ZnLinearForm(f2.shape(), {1}));
      EXPECT_TRUE(sigma_cyclic_dual_check(code, q, eps).passed());
    }
  }
}

TEST(SigmaCyclic, DetectsNonCyclicCodes) {
  const auto f4 = corpus::field_f4();
  const auto q = corpus::x_m_minus_one(corpus::f4_frobenius(), 2);
  EXPECT_FALSE(is_sigma_cyclic(generate(f4, 2, {make_word(f4, {kOne, kZero})}, CodeSide::left), q));
  EXPECT_TRUE(is_sigma_cyclic(generate(f4, 2, {make_word(f4, {kOne, kOne})}, CodeSide::left), q));
  EXPECT_TRUE(is_sigma_cyclic(generate(f4, 2, {make_word(f4, {kOne, kW})}, CodeSide::left), q));
  EXPECT_FALSE(is_sigma_cyclic(generate(f4, 2, {make_word(f4, {kZero, kOne})}, CodeSide::left), q));
}

TEST(SigmaCyclic, IdealGeneratedByOnePlusX) {
  const auto q = corpus::x_m_minus_one(corpus::f4_frobenius(), 2);
  const auto ring = as_finite_ring(q);
  const auto ideal = ideal_generated(ring, {q.flatten({kOne, kOne})}, Side::left);
  const auto code = code_from_codewords(q.base(), 2, ideal.elements, CodeSide::left);
  EXPECT_TRUE(is_sigma_cyclic(code, q));
  EXPECT_EQ(code.size(), 4u);
  const FrobeniusFunctional tr(corpus::field_f4(), corpus::f4_trace());
  const auto zero = generate(q.base(), 2, {}, CodeSide::left);
  const auto rep = sigma_cyclic_dual_check(zero, q, tr);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.dual_size, 16u);
}

TEST(SigmaCyclic, DualIsThetaOrthogonalOnEveryLeftIdeal) {
  const FrobeniusFunctional tr(corpus::field_f4(), corpus::f4_trace());
  const FrobeniusFunctional z4(ring_zn(4), ZnLinearForm(ModuleShape(4, {4}), {1}));
  const FrobeniusFunctional z2(ring_zn(2), ZnLinearForm(ModuleShape(2, {2}), {1}));
  const std::vector<std::pair<SkewQuotient, const FrobeniusFunctional*>> cases{
      {corpus::x_m_minus_one(corpus::f4_frobenius(), 2), &tr},
      {corpus::x_m_minus_one(RingAutomorphism::identity(ring_zn(4)), 2), &z4},
      {corpus::x_m_minus_one(RingAutomorphism::identity(ring_zn(2)), 4), &z2},
      {corpus::x_m_minus_one(RingAutomorphism::identity(corpus::field_f4()), 2), &tr}};
  for (const auto& [q, eps] : cases) {
    const auto ideals = enumerate_ideals(as_finite_ring(q), Side::left);
    EXPECT_GT(ideals.size(), 2u);
    for (const auto& ideal : ideals) {
      const auto code = code_from_codewords(q.base(), q.degree(), ideal.elements, CodeSide::left);
      ASSERT_TRUE(is_sigma_cyclic(code, q));
      const auto rep = sigma_cyclic_dual_check(code, q, *eps);
      EXPECT_TRUE(rep.passed());
      EXPECT_EQ(rep.code_size * rep.dual_size, code.ambient_shape().cardinality());
    }
  }
}

TEST(SigmaCyclic, DualCheckNeedsXmMinusOne) {
  const auto f2 = ring_zn(2);
  const SkewQuotient q(RingAutomorphism::identity(f2), {el({1}), el({1}), el({1})});
  const FrobeniusFunctional eps(f2, ZnLinearForm(f2.shape(), {1}));
  EXPECT_THROW(sigma_cyclic_dual_check(generate(f2, 2, {}, CodeSide::left), q, eps), Unsupported);
}

TEST(GroupCodes, SelfDualIdealOfZ2C2) {
  const auto ga = make_group_algebra(2, cyclic_group_table(2));
  const ElementSet s{el({0, 0}), el({1, 1})};
  const auto rep = group_algebra_dual_check(ga, s);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.dual_size, 2u);
  const auto c = code_from_codewords(ring_zn(2), 2, s, CodeSide::left);
  EXPECT_EQ(euclidean_dual(c).codewords(), s);
  EXPECT_THROW(group_algebra_dual_check(ga, {el({0, 0}), el({1, 0})}), InvalidArgument);
}

TEST(GroupCodes, DualIsThetaOfRightOrthogonalOnEveryLeftIdeal) {
  for (const auto& ga : {make_group_algebra(2, cyclic_group_table(2)), make_group_algebra(3, cyclic_group_table(3)),
                         make_group_algebra(4, cyclic_group_table(2)), make_group_algebra(2, cyclic_group_table(4)),
                         make_group_algebra(2, s3_table())}) {
    for (const auto& ideal : enumerate_ideals(ga.ring, Side::left)) {
      const auto rep = group_algebra_dual_check(ga, ideal.elements);
      EXPECT_TRUE(rep.passed()) << ga.ring.size();
      EXPECT_EQ(rep.ideal_size * rep.dual_size, ga.ring.size());
    }
  }
}
