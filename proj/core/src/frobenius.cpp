#include "frobkit/frobenius.hpp"

#include <set>

#include "frobkit/errors.hpp"

namespace frobkit {
namespace {

std::vector<ModElement> test_vectors(const ModuleShape& shape) {
  std::vector<ModElement> out;
  for (std::size_t i = 0; i < shape.rank(); ++i)
    if (shape.order(i) > 1) out.push_back(shape.unit_vector(i));
  return out;
}

ZnPairing gram_pairing(const ZnMatrix& gram, Residue n) {
  return [gram, n](const ModElement& x, const ModElement& y) {
    Residue acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < y.size(); ++j) acc = (acc + (x[i] * gram[i][j]) % n * y[j]) % n;
    }
    return acc;
  };
}

}  // namespace

ZnMatrix gram_of_functional(const FiniteRing& ring, const ZnLinearForm& eps) {
  const std::size_t k = ring.rank();
  ZnMatrix gram(k, std::vector<Residue>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = eps(ring.mul_table()[i][j]);
  return gram;
}

ElementSet left_kernel(const ZnPairing& pairing, const ModuleShape& left, const ModuleShape& right) {
  const auto tests = test_vectors(right);
  ElementSet out;
  for_each_element(left, [&](const ModElement& x) {
    for (const auto& y : tests)
      if (pairing(x, y) != 0) return;
    out.insert(out.end(), x);
  });
  return out;
}

ElementSet right_kernel(const ZnPairing& pairing, const ModuleShape& left, const ModuleShape& right) {
  const auto tests = test_vectors(left);
  ElementSet out;
  for_each_element(right, [&](const ModElement& y) {
    for (const auto& x : tests)
      if (pairing(x, y) != 0) return;
    out.insert(out.end(), y);
  });
  return out;
}

bool is_nondegenerate(const ZnPairing& pairing, const ModuleShape& left, const ModuleShape& right, PairingSide side) {
  const bool right_ok = side == PairingSide::left || left_kernel(pairing, left, right).size() == 1;
  if (!right_ok) return false;
  return side == PairingSide::right || right_kernel(pairing, left, right).size() == 1;
}

bool is_nondegenerate(const FiniteRing& ring, const ZnLinearForm& eps, PairingSide side) {
  return is_nondegenerate(gram_pairing(gram_of_functional(ring, eps), ring.characteristic()), ring.shape(),
                          ring.shape(), side);
}

AssociativityResult is_associative(const FiniteRing& ring, const ZnPairing& pairing) {
  const std::size_t k = ring.rank();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        const auto ei = ring.basis(i), ej = ring.basis(j), el = ring.basis(l);
        if (pairing(ring.mul(ei, ej), el) != pairing(ei, ring.mul(ej, el)))
          return AssociativityResult{false, std::array<std::size_t, 3>{i, j, l}};
      }
  return {};
}

FrobeniusFunctional::FrobeniusFunctional(FiniteRing ring, ZnLinearForm form)
    : ring_(std::move(ring)), form_(std::move(form)) {
  if (form_.modulus() != ring_.characteristic() || form_.weights().size() != ring_.rank())
    throw InvalidArgument("linear form does not match the ring's shape");
  if (!is_nondegenerate(ring_, form_, PairingSide::both))
    throw DegenerateForm("pairing eps(ab) is degenerate for this functional");
}

std::optional<FrobeniusFunctional> find_frobenius_functional(const FiniteRing& ring) {
  for (auto& eps : enumerate_forms(ring.shape()))
    if (is_nondegenerate(ring, eps, PairingSide::both)) return FrobeniusFunctional(ring, std::move(eps));
  return std::nullopt;
}

GeneratorReport verify_generator_equivalences(const FiniteRing& ring, const ZnLinearForm& eps) {
  std::set<std::vector<Residue>> all_forms;
  for (const auto& f : enumerate_forms(ring.shape())) all_forms.insert(f.weights());

  const auto elems = enumerate_module(ring.shape());
  std::vector<std::vector<Residue>> right_images, left_images;
  for (const auto& a : elems) {
    std::vector<Residue> r(ring.rank()), l(ring.rank());
    for (std::size_t j = 0; j < ring.rank(); ++j) {
      r[j] = eps(ring.mul(a, ring.basis(j)));
      l[j] = eps(ring.mul(ring.basis(j), a));
    }
    right_images.push_back(std::move(r));
    left_images.push_back(std::move(l));
  }
  const std::set<std::vector<Residue>> right_orbit(right_images.begin(), right_images.end());
  const std::set<std::vector<Residue>> left_orbit(left_images.begin(), left_images.end());

  GeneratorReport report;
  report.right_orbit_is_dual = right_orbit == all_forms;
  report.left_orbit_is_dual = left_orbit == all_forms;
  report.right_map_bijective = right_orbit.size() == elems.size() && report.right_orbit_is_dual;
  report.left_map_bijective = left_orbit.size() == elems.size() && report.left_orbit_is_dual;
  const ZnPairing pairing = [&](const ModElement& a, const ModElement& b) { return eps(ring.mul(a, b)); };
  report.associative_nondegenerate =
      is_associative(ring, pairing).associative && is_nondegenerate(ring, eps, PairingSide::both);
  return report;
}

Ideal left_annihilator(const FiniteRing& ring, const ElementSet& subset) {
  ElementSet out;
  for_each_element(ring.shape(), [&](const ModElement& a) {
    for (const auto& s : subset)
      if (!ring.mul(a, s).is_zero()) return;
    out.insert(out.end(), a);
  });
  return Ideal{Side::left, std::move(out)};
}

Ideal right_annihilator(const FiniteRing& ring, const ElementSet& subset) {
  ElementSet out;
  for_each_element(ring.shape(), [&](const ModElement& a) {
    for (const auto& t : subset)
      if (!ring.mul(t, a).is_zero()) return;
    out.insert(out.end(), a);
  });
  return Ideal{Side::right, std::move(out)};
}

AmbientForm::AmbientForm(FiniteRing ring, std::vector<std::vector<ModElement>> matrix)
    : ring_(std::move(ring)), matrix_(std::move(matrix)), ambient_(ring_.shape().repeated(matrix_.size())) {
  if (matrix_.empty()) throw InvalidArgument("form matrix must have at least one row");
  for (const auto& row : matrix_) {
    if (row.size() != matrix_.size()) throw InvalidArgument("form matrix must be square");
    for (const auto& q : row) ring_.shape().require(q);
  }
}

AmbientForm AmbientForm::identity(const FiniteRing& ring, std::size_t m) {
  std::vector<std::vector<ModElement>> q(m, std::vector<ModElement>(m, ring.zero()));
  for (std::size_t i = 0; i < m; ++i) q[i][i] = ring.one();
  return AmbientForm(ring, std::move(q));
}

ModElement AmbientForm::operator()(const ModElement& x, const ModElement& y) const {
  ambient_.require(x);
  ambient_.require(y);
  const std::size_t m = length();
  ModElement acc = ring_.zero();
  for (std::size_t j = 0; j < m; ++j) {
    const auto yj = word_component(ring_, y, j);
    if (yj.is_zero()) continue;
    ModElement t = ring_.zero();
    for (std::size_t i = 0; i < m; ++i) t = ring_.add(t, ring_.mul(word_component(ring_, x, i), matrix_[i][j]));
    acc = ring_.add(acc, ring_.mul(t, yj));
  }
  return acc;
}

bool is_nondegenerate(const AmbientForm& form) {
  const auto& ring = form.ring();
  const std::size_t m = form.length();
  std::vector<ModElement> probes;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<ModElement> comps(m, ring.zero());
    comps[j] = ring.one();
    probes.push_back(make_word(ring, comps));
  }
  std::size_t left = 0, right = 0;
  for_each_element(form.ambient_shape(), [&](const ModElement& x) {
    bool in_left = true, in_right = true;
    for (const auto& p : probes) {
      if (in_left && !form(x, p).is_zero()) in_left = false;
      if (in_right && !form(p, x).is_zero()) in_right = false;
    }
    left += in_left;
    right += in_right;
  });
  return left == 1 && right == 1;
}

ModElement word_component(const FiniteRing& ring, const ModElement& word, std::size_t i) {
  const std::size_t k = ring.rank();
  if ((i + 1) * k > word.size()) throw InvalidArgument("word component index out of range");
  return ModElement(std::vector<Residue>(word.coords().begin() + static_cast<std::ptrdiff_t>(i * k),
                                         word.coords().begin() + static_cast<std::ptrdiff_t>((i + 1) * k)));
}

ModElement make_word(const FiniteRing& ring, const std::vector<ModElement>& components) {
  std::vector<Residue> c;
  c.reserve(components.size() * ring.rank());
  for (const auto& a : components) {
    ring.shape().require(a);
    c.insert(c.end(), a.coords().begin(), a.coords().end());
  }
  return ModElement(std::move(c));
}

ElementSet orthogonal(const AmbientForm& form, const ElementSet& subset, Side side) {
  if (side == Side::two_sided) throw InvalidArgument("orthogonal side must be left or right");
  ElementSet out;
  for_each_element(form.ambient_shape(), [&](const ModElement& v) {
    for (const auto& s : subset)
      if (!(side == Side::left ? form(v, s) : form(s, v)).is_zero()) return;
    out.insert(out.end(), v);
  });
  return out;
}

ElementSet epsilon_orthogonal(const AmbientForm& form, const ZnLinearForm& eps, const ElementSet& subset, Side side) {
  if (side == Side::two_sided) throw InvalidArgument("orthogonal side must be left or right");
  ElementSet out;
  for_each_element(form.ambient_shape(), [&](const ModElement& v) {
    for (const auto& s : subset)
      if (eps(side == Side::left ? form(v, s) : form(s, v)) != 0) return;
    out.insert(out.end(), v);
  });
  return out;
}

}  // namespace frobkit
