// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "frobkit/codes.hpp"
#include "frobkit/corpus.hpp"
#include "frobkit/finring.hpp"
#include "frobkit/frobenius.hpp"
#include "frobkit/skewpoly.hpp"

using namespace frobkit;

namespace {

using Failure = std::optional<std::string>;

// Time limits are defined for optimized builds; sanitizer and debug builds only report timings.
#ifdef NDEBUG
constexpr bool kEnforceTimeLimits = true;
#else
constexpr bool kEnforceTimeLimits = false;
#endif

ModElement el(std::vector<Residue> c) { return ModElement(std::move(c)); }

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0 means no time limit
  std::function<Failure()> run;
};

// Every 2 x 2 matrix over the ring.
std::vector<std::vector<std::vector<ModElement>>> all_square_matrices(const FiniteRing& ring) {
  const auto elems = enumerate_module(ring.shape());
  std::vector<std::vector<std::vector<ModElement>>> out;
  for (const auto& a : elems)
    for (const auto& b : elems)
      for (const auto& c : elems)
        for (const auto& d : elems) out.push_back({{a, b}, {c, d}});
  return out;
}

std::vector<std::vector<std::vector<ModElement>>> monomial_matrices(const FiniteRing& ring) {
  std::vector<std::vector<std::vector<ModElement>>> out;
  const auto u = units(ring);
  const auto z = ring.zero();
  for (const auto& a : u)
    for (const auto& b : u) {
      out.push_back({{a, z}, {z, b}});
      out.push_back({{z, a}, {b, z}});
    }
  return out;
}

std::uint64_t power(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// Sweep state shared by criteria 2, 3 and 6.
struct SweepStats {
  std::size_t codes = 0;
  std::vector<std::string> cardinality_failures;
};
SweepStats g_sweep;

void record_cardinality(const LinearCode& code, const LinearCode& dual_code, const std::string& where) {
  ++g_sweep.codes;
  if (code.size() * dual_code.size() != power(code.alphabet().size(), code.length()))
    g_sweep.cardinality_failures.push_back(where);
}

Failure counterexample() {
  const auto f2 = ring_zn(2);
  const AmbientForm q(f2, {{el({1}), el({1})}, {el({0}), el({1})}});
  const auto c = generate(f2, 2, {el({1, 0})}, CodeSide::left);
  const auto res = macwilliams_holds(c, q);
  if (res.dual_code.codewords() != ElementSet{el({0, 0}), el({1, 1})}) return "dual differs";
  if (res.code_enumerator.to_string() != "X^2 + XY") return "W_C = " + res.code_enumerator.to_string();
  if (res.dual_enumerator.to_string() != "X^2 + Y^2") return "W_dual = " + res.dual_enumerator.to_string();
  if (!res.transformed || res.transformed->to_string() != "X^2 + XY") return "transform differs";
  if (res.holds) return "macwilliams_holds returned true";
  return std::nullopt;
}

Failure positive_sweep() {
  const std::vector<std::pair<std::string, FiniteRing>> alphabets{
      {"F_2", ring_zn(2)},
      {"F_3", ring_zn(3)},
      {"Z_4", ring_zn(4)},
      {"F_4", corpus::field_f4()},
      {"Z_2 x Z_4", ring_product(ring_zn(2), ring_zn(4))}};
  for (const auto& [name, ring] : alphabets) {
    const auto left_codes = enumerate_codes(ring, 2, CodeSide::left);
    const auto right_codes = enumerate_codes(ring, 2, CodeSide::right);
    for (const auto& matrix : monomial_matrices(ring)) {
      const AmbientForm form(ring, matrix);
      for (const auto* codes : {&left_codes, &right_codes})
        for (const auto& c : *codes) {
          const auto res = macwilliams_holds(c, form);
          record_cardinality(c, res.dual_code, name);
          if (!res.holds) return name + ": identity fails for a monomial form";
        }
    }
  }
  return std::nullopt;
}

Failure converse_sweep() {
  const auto f2 = ring_zn(2);
  const auto codes = enumerate_codes(f2, 2, CodeSide::left);
  std::size_t checked = 0;
  for (const auto& matrix : all_square_matrices(f2)) {
    const AmbientForm form(f2, matrix);
    if (!is_nondegenerate(form) || is_monomial(f2, matrix)) continue;
    ++checked;
    bool witness = false;
    for (const auto& c : codes) {
      const auto res = macwilliams_holds(c, form);
      record_cardinality(c, res.dual_code, "F_2 non-monomial");
      witness = witness || !res.holds;
    }
    if (!witness) return std::string("no violating code for a non-monomial form");
  }
  if (checked != 4) return "expected 4 nondegenerate non-monomial forms, saw " + std::to_string(checked);
  return std::nullopt;
}

Failure frobenius_equivalence() {
  bool saw_r8 = false;
  for (const auto& [name, ring] : corpus::frobenius_corpus()) {
    const bool functional = find_frobenius_functional(ring).has_value();
    const bool socle = is_frobenius_socle(ring).frobenius;
    if (functional != socle) return name + ": functional and socle tests disagree";
    if (name == "R8") {
      saw_r8 = true;
      if (functional) return std::string("R8 reported Frobenius");
    }
  }
  if (!saw_r8) return std::string("R8 missing from corpus");
  return std::nullopt;
}

Failure double_annihilator() {
  for (const auto& [name, ring] : corpus::frobenius_corpus()) {
    const auto eps = find_frobenius_functional(ring);
    if (!eps) continue;
    const auto all = enumerate_module(ring.shape());
    for (const auto& s : enumerate_ideals(ring, Side::right)) {
      const auto l = left_annihilator(ring, s.elements);
      if (right_annihilator(ring, l.elements).elements != s.elements) return name + ": rann(lann(S)) != S";
      ElementSet eps_left;
      for (const auto& x : all) {
        bool zero = true;
        for (const auto& y : s.elements) zero = zero && (*eps)(ring.mul(x, y)) == 0;
        if (zero) eps_left.insert(x);
      }
      if (eps_left != l.elements) return name + ": lann(S) differs from the eps-orthogonal";
    }
    for (const auto& s : enumerate_ideals(ring, Side::left)) {
      const auto r = right_annihilator(ring, s.elements);
      if (left_annihilator(ring, r.elements).elements != s.elements) return name + ": lann(rann(S)) != S";
      ElementSet eps_right;
      for (const auto& x : all) {
        bool zero = true;
        for (const auto& y : s.elements) zero = zero && (*eps)(ring.mul(y, x)) == 0;
        if (zero) eps_right.insert(x);
      }
      if (eps_right != r.elements) return name + ": rann(S) differs from the eps-orthogonal";
    }
  }
  return std::nullopt;
}

Failure cardinality_identity() {
  if (g_sweep.codes == 0) return std::string("sweeps of criteria 2 and 3 did not run");
  if (!g_sweep.cardinality_failures.empty()) return "fails over " + g_sweep.cardinality_failures.front();
  return std::nullopt;
}

Failure skew_construction() {
  const FrobeniusFunctional tr(corpus::field_f4(), corpus::f4_trace());
  const FrobeniusFunctional z4(ring_zn(4), ZnLinearForm(ModuleShape(4, {4}), {1}));
  const std::vector<std::pair<SkewQuotient, const FrobeniusFunctional*>> cases{
      {corpus::x_m_minus_one(corpus::f4_frobenius(), 2), &tr},
      {corpus::x_m_minus_one(RingAutomorphism::identity(ring_zn(4)), 2), &z4}};
  for (const auto& [q, eps] : cases) {
    const auto ring = as_finite_ring(q);
    const auto all = enumerate_module(ring.shape());
    for (const auto& a : all)
      for (const auto& b : all) {
        const auto g = q.unflatten(a), h = q.unflatten(b);
        if (constant_term_closed_form(q, g, h) != quotient_mul(q, g, h)[0]) return std::string("closed form differs");
      }
    const auto form = frobenius_form_on_quotient(q, *eps);
    if (!is_nondegenerate(ring, form.form(), PairingSide::both)) return std::string("quotient form is degenerate");
    if (!is_frobenius_socle(ring).frobenius) return std::string("quotient fails the socle test");
  }
  return std::nullopt;
}

Failure sigma_cyclic() {
  const FrobeniusFunctional tr(corpus::field_f4(), corpus::f4_trace());
  const FrobeniusFunctional z2(ring_zn(2), ZnLinearForm(ModuleShape(2, {2}), {1}));
  const std::vector<std::pair<SkewQuotient, const FrobeniusFunctional*>> cases{
      {corpus::x_m_minus_one(corpus::f4_frobenius(), 2), &tr},
      {corpus::x_m_minus_one(RingAutomorphism::identity(ring_zn(2)), 3), &z2}};
  for (const auto& [q, eps] : cases) {
    for (const auto& ideal : enumerate_ideals(as_finite_ring(q), Side::left)) {
      const auto code = code_from_codewords(q.base(), q.degree(), ideal.elements, CodeSide::left);
      const auto rep = sigma_cyclic_dual_check(code, q, *eps);
      if (!rep.dual_matches_theta_orthogonal) return std::string("dual differs from the theta orthogonal");
      if (!rep.dual_is_sigma_cyclic) return std::string("dual is not sigma-cyclic");
    }
  }
  return std::nullopt;
}

Failure group_algebra() {
  for (const auto& ga : {make_group_algebra(2, cyclic_group_table(2)), make_group_algebra(3, cyclic_group_table(3))}) {
    for (const auto& ideal : enumerate_ideals(ga.ring, Side::left)) {
      const auto rep = group_algebra_dual_check(ga, ideal.elements);
      if (!rep.dual_matches_theta_rorth) return std::string("dual differs from theta(rorth(S))");
      if (!rep.dual_is_left_ideal) return std::string("dual is not a left ideal");
    }
  }
  return std::nullopt;
}

Failure character_count() {
  for (const auto& [name, ring] : corpus::frobenius_corpus())
    if (enumerate_forms(ring.shape()).size() != ring.size()) return name + ": |Hom(R, Z_n)| != |R|";
  return std::nullopt;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "counterexample form over F_2", 0.001, counterexample},
      {2, "MacWilliams identity for monomial forms, m = 2", 0, positive_sweep},
      {3, "non-monomial forms over F_2 have violating codes", 1.0, converse_sweep},
      {4, "functional search agrees with socle test", 30.0, frobenius_equivalence},
      {5, "double annihilator and eps-orthogonals", 0, double_annihilator},
      {6, "|C| |dual C| = |A|^m over the sweeps", 0, cardinality_identity},
      {7, "skew quotient constant term, form and socle", 5.0, skew_construction},
      {8, "sigma-cyclic duality", 0, sigma_cyclic},
      {9, "group algebra duality", 0, group_algebra},
      {10, "|Hom(R, Z_n)| = |R| on the corpus", 0, character_count},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Failure failure;
    try {
      failure = c.run();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string limit;
    if (c.limit_seconds > 0) {
      char buf[64];
      std::snprintf(buf, sizeof buf, ", limit %g s%s", c.limit_seconds, kEnforceTimeLimits ? "" : " not enforced");
      limit = buf;
      if (kEnforceTimeLimits && !failure && seconds >= c.limit_seconds) failure = "exceeded time limit";
    }
    if (failure) ++failures;
    std::printf("%s criterion %d: %s (%.6f s%s)%s%s\n", failure ? "FAIL" : "PASS", c.id, c.title, seconds,
                limit.c_str(), failure ? " - " : "", failure ? failure->c_str() : "");
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
