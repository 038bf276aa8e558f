#include "frobkit/finring.hpp"

#include <numeric>
#include <string>

#include "frobkit/errors.hpp"

namespace frobkit {
namespace {

std::string basis_name(std::size_t i) { return "e" + std::to_string(i); }

Ideal socle_given_radical(const FiniteRing& ring, const Ideal& radical, Side side) {
  ElementSet out;
  for_each_element(ring.shape(), [&](const ModElement& x) {
    for (const auto& j : radical.elements) {
      const auto p = side == Side::right ? ring.mul(x, j) : ring.mul(j, x);
      if (!p.is_zero()) return;
    }
    out.insert(out.end(), x);
  });
  if (!is_ideal(ring, out, side)) throw InternalConsistency("computed socle is not closed under the ring action");
  return Ideal{side, std::move(out)};
}

std::vector<Endomorphism> side_actions(const FiniteRing& ring, Side side) {
  std::vector<Endomorphism> ops;
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    ModElement e = ring.basis(i);
    if (side == Side::left || side == Side::two_sided)
      ops.emplace_back([&ring, e](const ModElement& x) { return ring.mul(e, x); });
    if (side == Side::right || side == Side::two_sided)
      ops.emplace_back([&ring, e](const ModElement& x) { return ring.mul(x, e); });
  }
  return ops;
}

}  // namespace

const char* to_string(Side side) {
  switch (side) {
    case Side::left:
      return "left";
    case Side::right:
      return "right";
    case Side::two_sided:
      return "two-sided";
  }
  return "?";
}

FiniteRing::FiniteRing(ModuleShape shape, MulTable mul_table, ModElement one)
    : shape_(std::move(shape)), table_(std::move(mul_table)), one_(std::move(one)) {
  validate();
}

void FiniteRing::validate() const {
  const std::size_t k = rank();
  if (table_.size() != k)
    throw InvalidArgument("multiplication table has " + std::to_string(table_.size()) + " rows, expected " +
                          std::to_string(k));
  for (std::size_t i = 0; i < k; ++i) {
    if (table_[i].size() != k)
      throw InvalidArgument("multiplication table row " + std::to_string(i) + " has " +
                            std::to_string(table_[i].size()) + " entries, expected " + std::to_string(k));
    for (const auto& entry : table_[i]) shape_.require(entry);
  }
  shape_.require(one_);

  // d_i e_i = 0, so d_i (e_i e_j) and d_j (e_i e_j) must vanish too.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const auto& p = table_[i][j];
      if (!shape_.scale(shape_.order(i), p).is_zero() || !shape_.scale(shape_.order(j), p).is_zero())
        throw InvalidRing(InvalidRing::Kind::well_definedness, {i, j},
                          "product " + basis_name(i) + "*" + basis_name(j) + " = " + to_string(p) +
                              " is not killed by the additive orders of its factors");
    }

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        const auto lhs = mul_unchecked(table_[i][j], basis(l));
        const auto rhs = mul_unchecked(basis(i), table_[j][l]);
        if (lhs != rhs)
          throw InvalidRing(InvalidRing::Kind::associativity, {i, j, l},
                            "(" + basis_name(i) + basis_name(j) + ")" + basis_name(l) + " = " + to_string(lhs) +
                                " but " + basis_name(i) + "(" + basis_name(j) + basis_name(l) +
                                ") = " + to_string(rhs));
      }

  for (std::size_t i = 0; i < k; ++i) {
    const auto e = basis(i);
    if (mul_unchecked(one_, e) != e || mul_unchecked(e, one_) != e)
      throw InvalidRing(InvalidRing::Kind::unit, {i},
                        "element " + to_string(one_) + " is not an identity for " + basis_name(i));
  }

  const Residue char_one = shape_.additive_order(one_);
  if (char_one != shape_.modulus())
    throw InvalidRing(InvalidRing::Kind::characteristic, {},
                      "additive order of 1 is " + std::to_string(char_one) + ", but the presentation is over Z_" +
                          std::to_string(shape_.modulus()));
}

ModElement FiniteRing::mul_unchecked(const ModElement& a, const ModElement& b) const {
  const std::size_t k = rank();
  const Residue n = shape_.modulus();
  std::vector<Residue> acc(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (b[j] == 0) continue;
      const Residue c = (a[i] * b[j]) % n;
      const auto& t = table_[i][j];
      for (std::size_t l = 0; l < k; ++l)
        if (t[l] != 0) acc[l] = (acc[l] + c * t[l]) % shape_.order(l);
    }
  }
  return ModElement(std::move(acc));
}

ModElement FiniteRing::add(const ModElement& a, const ModElement& b) const {
  shape_.require(a);
  shape_.require(b);
  return shape_.add(a, b);
}

ModElement FiniteRing::sub(const ModElement& a, const ModElement& b) const {
  shape_.require(a);
  shape_.require(b);
  return shape_.sub(a, b);
}

ModElement FiniteRing::neg(const ModElement& a) const {
  shape_.require(a);
  return shape_.neg(a);
}

ModElement FiniteRing::mul(const ModElement& a, const ModElement& b) const {
  shape_.require(a);
  shape_.require(b);
  return mul_unchecked(a, b);
}

bool FiniteRing::is_commutative() const {
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i + 1; j < rank(); ++j)
      if (table_[i][j] != table_[j][i]) return false;
  return true;
}

FiniteRing ring_zn(Residue n) {
  ModuleShape shape(n, {n});
  ModElement one = shape.reduce({1});
  return FiniteRing(shape, {{one}}, one);
}

FiniteRing ring_product(const FiniteRing& a, const FiniteRing& b) {
  const std::size_t ka = a.rank(), kb = b.rank(), k = ka + kb;
  std::vector<Residue> orders = a.shape().orders();
  orders.insert(orders.end(), b.shape().orders().begin(), b.shape().orders().end());
  ModuleShape shape(std::lcm(a.characteristic(), b.characteristic()), std::move(orders));

  auto embed = [&](const ModElement& x, std::size_t offset) {
    std::vector<Residue> c(k, 0);
    for (std::size_t i = 0; i < x.size(); ++i) c[offset + i] = x[i];
    return ModElement(std::move(c));
  };
  FiniteRing::MulTable table(k, std::vector<ModElement>(k, shape.zero()));
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = 0; j < ka; ++j) table[i][j] = embed(a.mul_table()[i][j], 0);
  for (std::size_t i = 0; i < kb; ++i)
    for (std::size_t j = 0; j < kb; ++j) table[ka + i][ka + j] = embed(b.mul_table()[i][j], ka);

  std::vector<Residue> one = a.one().coords();
  one.insert(one.end(), b.one().coords().begin(), b.one().coords().end());
  return FiniteRing(std::move(shape), std::move(table), ModElement(std::move(one)));
}

FiniteRing ring_matrix(const FiniteRing& base, std::size_t t) {
  if (t == 0) throw InvalidArgument("matrix size must be positive");
  const std::size_t k = base.rank();
  const std::size_t rank = t * t * k;
  ModuleShape shape = base.shape().repeated(t * t);
  check_enumeration_cap(shape.cardinality());

  auto index = [&](std::size_t r, std::size_t s, std::size_t i) { return (r * t + s) * k + i; };
  FiniteRing::MulTable table(rank, std::vector<ModElement>(rank, shape.zero()));
  for (std::size_t r = 0; r < t; ++r)
    for (std::size_t s = 0; s < t; ++s)
      for (std::size_t v = 0; v < t; ++v)
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) {
            // E_rs e_i * E_sv e_j = E_rv (e_i e_j); other products vanish.
            std::vector<Residue> c(rank, 0);
            const auto& p = base.mul_table()[i][j];
            for (std::size_t l = 0; l < k; ++l) c[index(r, v, l)] = p[l];
            table[index(r, s, i)][index(s, v, j)] = ModElement(std::move(c));
          }

  std::vector<Residue> one(rank, 0);
  for (std::size_t r = 0; r < t; ++r)
    for (std::size_t l = 0; l < k; ++l) one[index(r, r, l)] = base.one()[l];
  return FiniteRing(std::move(shape), std::move(table), ModElement(std::move(one)));
}

FiniteRing ring_from_table(ModuleShape shape, FiniteRing::MulTable mul_table, ModElement one) {
  return FiniteRing(std::move(shape), std::move(mul_table), std::move(one));
}

ModElement GroupAlgebra::invert_group(const ModElement& a) const {
  ring.shape().require(a);
  std::vector<Residue> c(a.size(), 0);
  for (std::size_t g = 0; g < a.size(); ++g) c[inverse[g]] = a[g];
  return ModElement(std::move(c));
}

GroupAlgebra make_group_algebra(Residue n, std::vector<std::vector<std::size_t>> cayley) {
  using Kind = InvalidRing::Kind;
  const std::size_t g = cayley.size();
  if (g == 0) throw InvalidRing(Kind::group_table, {}, "group table is empty");
  for (std::size_t a = 0; a < g; ++a) {
    if (cayley[a].size() != g)
      throw InvalidRing(Kind::group_table, {a}, "group table row " + std::to_string(a) + " has wrong length");
    for (std::size_t b = 0; b < g; ++b)
      if (cayley[a][b] >= g)
        throw InvalidRing(Kind::group_table, {a, b}, "group table entry out of range");
  }
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = 0; b < g; ++b)
      for (std::size_t c = 0; c < g; ++c)
        if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
          throw InvalidRing(Kind::group_table, {a, b, c}, "group law is not associative");

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < g && !identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < g && ok; ++a) ok = cayley[e][a] == a && cayley[a][e] == a;
    if (ok) identity = e;
  }
  if (!identity) throw InvalidRing(Kind::group_table, {}, "group table has no identity");

  std::vector<std::size_t> inverse(g);
  for (std::size_t a = 0; a < g; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < g && !found; ++b)
      if (cayley[a][b] == *identity && cayley[b][a] == *identity) {
        inverse[a] = b;
        found = true;
      }
    if (!found) throw InvalidRing(Kind::group_table, {a}, "group element " + std::to_string(a) + " has no inverse");
  }

  ModuleShape shape(n, std::vector<Residue>(g, n));
  FiniteRing::MulTable table(g, std::vector<ModElement>(g));
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = 0; b < g; ++b) table[a][b] = shape.unit_vector(cayley[a][b]);
  FiniteRing ring(shape, std::move(table), shape.unit_vector(*identity));
  return GroupAlgebra{std::move(ring), std::move(cayley), *identity, std::move(inverse)};
}

FiniteRing ring_group_algebra(Residue n, std::vector<std::vector<std::size_t>> cayley) {
  return make_group_algebra(n, std::move(cayley)).ring;
}

std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t order) {
  std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) t[a][b] = (a + b) % order;
  return t;
}

std::optional<ModElement> inverse(const FiniteRing& ring, const ModElement& a) {
  ring.shape().require(a);
  std::optional<ModElement> out;
  for_each_element(ring.shape(), [&](const ModElement& b) {
    if (!out && ring.mul(a, b) == ring.one() && ring.mul(b, a) == ring.one()) out = b;
  });
  return out;
}

bool is_unit(const FiniteRing& ring, const ModElement& a) { return inverse(ring, a).has_value(); }

ElementSet units(const FiniteRing& ring) {
  const auto elems = enumerate_module(ring.shape());
  ElementSet out;
  for (const auto& a : elems)
    for (const auto& b : elems)
      if (ring.mul(a, b) == ring.one() && ring.mul(b, a) == ring.one()) {
        out.insert(out.end(), a);
        break;
      }
  return out;
}

bool is_ideal(const FiniteRing& ring, const ElementSet& elements, Side side) {
  if (!elements.contains(ring.zero())) return false;
  for (const auto& x : elements) {
    if (!ring.shape().contains(x)) return false;
    for (const auto& y : elements)
      if (!elements.contains(ring.shape().add(x, y))) return false;
  }
  for (const auto& op : side_actions(ring, side))
    for (const auto& x : elements)
      if (!elements.contains(op(x))) return false;
  return true;
}

Ideal make_ideal(const FiniteRing& ring, Side side, ElementSet elements) {
  if (!is_ideal(ring, elements, side))
    throw InvalidArgument(std::string("set is not a ") + to_string(side) + " ideal");
  return Ideal{side, std::move(elements)};
}

Ideal ideal_generated(const FiniteRing& ring, const ElementSet& gens, Side side) {
  const auto ops = side_actions(ring, side);
  return Ideal{side, invariant_closure(gens, ring.shape(), ops)};
}

std::vector<Ideal> enumerate_ideals(const FiniteRing& ring, Side side) {
  const auto ops = side_actions(ring, side);
  std::vector<Ideal> out;
  for (auto& s : enumerate_invariant_subgroups(ring.shape(), ops)) out.push_back(Ideal{side, std::move(s)});
  return out;
}

Ideal ideal_product(const FiniteRing& ring, const Ideal& lhs, const Ideal& rhs) {
  ElementSet products;
  for (const auto& a : lhs.elements)
    for (const auto& b : rhs.elements) products.insert(ring.mul(a, b));
  return Ideal{Side::two_sided, span(products, ring.shape())};
}

Ideal jacobson_radical(const FiniteRing& ring) {
  const auto unit_set = units(ring);
  const auto elems = enumerate_module(ring.shape());
  ElementSet radical;
  for (const auto& x : elems) {
    bool quasi_regular = true;
    for (const auto& a : elems)
      if (!unit_set.contains(ring.sub(ring.one(), ring.mul(a, x)))) {
        quasi_regular = false;
        break;
      }
    if (quasi_regular) radical.insert(radical.end(), x);
  }
  if (!is_ideal(ring, radical, Side::two_sided))
    throw InternalConsistency("computed Jacobson radical is not a two-sided ideal");
  return Ideal{Side::two_sided, std::move(radical)};
}

Ideal socle(const FiniteRing& ring, Side side) {
  if (side == Side::two_sided) throw InvalidArgument("socle side must be left or right");
  return socle_given_radical(ring, jacobson_radical(ring), side);
}

SocleFrobeniusResult is_frobenius_socle(const FiniteRing& ring) {
  SocleFrobeniusResult result;
  const auto radical = jacobson_radical(ring);
  const auto elems = enumerate_module(ring.shape());
  result.radical_size = radical.size();
  const std::uint64_t target = ring.size() / radical.size();

  auto find_generator = [&](const Ideal& soc) -> std::optional<ModElement> {
    if (soc.size() != target) return std::nullopt;
    for (const auto& s : soc.elements) {
      ElementSet generated;
      for (const auto& r : elems) generated.insert(soc.side == Side::right ? ring.mul(s, r) : ring.mul(r, s));
      if (generated == soc.elements) return s;
    }
    return std::nullopt;
  };

  const auto right = socle_given_radical(ring, radical, Side::right);
  const auto left = socle_given_radical(ring, radical, Side::left);
  result.right_socle_size = right.size();
  result.left_socle_size = left.size();
  result.right_witness = find_generator(right);
  result.left_witness = find_generator(left);
  result.frobenius = result.right_witness.has_value() && result.left_witness.has_value();
  return result;
}

}  // namespace frobkit
