#pragma once

// Small named rings used throughout the tests, benchmarks and CLI samples.

#include <string>
#include <vector>

#include "frobkit/finring.hpp"
#include "frobkit/skewpoly.hpp"

namespace frobkit::corpus {

/// F_4 = Z_2[w]/(w^2 + w + 1) on the basis {1, w}.
FiniteRing field_f4();
/// a -> a^2 on F_4 (w -> w + 1).
RingAutomorphism f4_frobenius();
/// Tr(a) = a + a^2, i.e. weights (0, 1).
ZnLinearForm f4_trace();

/// Z_2 {1, u, v} with all products of u, v zero: local, not Frobenius.
FiniteRing ring_r8();

/// A[x; sigma] / (x^m - 1).
SkewQuotient x_m_minus_one(const RingAutomorphism& sigma, std::size_t m);

struct NamedRing {
  std::string name;
  FiniteRing ring;
};

/// Z_1..Z_12, Z_2 x Z_4, Z_2 x Z_2, M_2(F_2), Z_2 C_2, Z_3 C_3,
/// F_4[x; Frob]/(x^2 - 1), Z_4[x]/(x^2 - 1) and R8.
std::vector<NamedRing> frobenius_corpus();

}  // namespace frobkit::corpus
