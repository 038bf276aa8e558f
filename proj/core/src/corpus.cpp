#include "frobkit/corpus.hpp"

namespace frobkit::corpus {
namespace {

ModElement el(std::vector<Residue> c) { return ModElement(std::move(c)); }

}  // namespace

FiniteRing field_f4() {
  ModuleShape shape(2, {2, 2});
  FiniteRing::MulTable t{{el({1, 0}), el({0, 1})}, {el({0, 1}), el({1, 1})}};
  return FiniteRing(shape, std::move(t), el({1, 0}));
}

RingAutomorphism f4_frobenius() { return RingAutomorphism(field_f4(), {el({1, 0}), el({1, 1})}); }

ZnLinearForm f4_trace() { return ZnLinearForm(field_f4().shape(), {0, 1}); }

FiniteRing ring_r8() {
  ModuleShape shape(2, {2, 2, 2});
  const auto z = el({0, 0, 0});
  FiniteRing::MulTable t{{el({1, 0, 0}), el({0, 1, 0}), el({0, 0, 1})},
                         {el({0, 1, 0}), z, z},
                         {el({0, 0, 1}), z, z}};
  return FiniteRing(shape, std::move(t), el({1, 0, 0}));
}

SkewQuotient x_m_minus_one(const RingAutomorphism& sigma, std::size_t m) {
  const auto& base = sigma.ring();
  SkewPolynomial f(m + 1, base.zero());
  f[0] = base.neg(base.one());
  f[m] = base.one();
  return SkewQuotient(sigma, std::move(f));
}

std::vector<NamedRing> frobenius_corpus() {
  std::vector<NamedRing> out;
  for (Residue n = 1; n <= 12; ++n) out.push_back({"Z_" + std::to_string(n), ring_zn(n)});
  out.push_back({"Z_2 x Z_4", ring_product(ring_zn(2), ring_zn(4))});
  out.push_back({"Z_2 x Z_2", ring_product(ring_zn(2), ring_zn(2))});
  out.push_back({"M_2(F_2)", ring_matrix(ring_zn(2), 2)});
  out.push_back({"Z_2 C_2", ring_group_algebra(2, cyclic_group_table(2))});
  out.push_back({"Z_3 C_3", ring_group_algebra(3, cyclic_group_table(3))});
  out.push_back({"F_4[x;Frob]/(x^2-1)", as_finite_ring(x_m_minus_one(f4_frobenius(), 2))});
  out.push_back({"Z_4[x]/(x^2-1)", as_finite_ring(x_m_minus_one(RingAutomorphism::identity(ring_zn(4)), 2))});
  out.push_back({"R8", ring_r8()});
  return out;
}

}  // namespace frobkit::corpus
