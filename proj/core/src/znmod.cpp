#include "frobkit/znmod.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <numeric>

#include "frobkit/errors.hpp"

namespace frobkit {
namespace {

std::atomic<std::uint64_t> g_cap{kDefaultEnumerationCap};

// Reasonable upper bound keeping a_i * b_j * c sums in int64.
constexpr Residue kMaxModulus = Residue{1} << 31;

// Subgroups of a shape as bitsets over lexicographic indices.
class IndexedShape {
 public:
  explicit IndexedShape(const ModuleShape& shape) : shape_(shape), elements_(enumerate_module(shape)) {
    const std::size_t count = elements_.size();
    if (count <= kTableLimit) {
      add_table_.resize(count * count);
      for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j)
          add_table_[i * count + j] =
              static_cast<std::uint32_t>(shape_.index_of(shape_.add(elements_[i], elements_[j])));
    }
  }

  std::size_t size() const { return elements_.size(); }
  const ModElement& element(std::size_t i) const { return elements_[i]; }

  std::size_t add(std::size_t i, std::size_t j) const {
    if (!add_table_.empty()) return add_table_[i * elements_.size() + j];
    return static_cast<std::size_t>(shape_.index_of(shape_.add(elements_[i], elements_[j])));
  }

  std::vector<bool> to_bits(const ElementSet& s) const {
    std::vector<bool> bits(size(), false);
    for (const auto& x : s) bits[shape_.index_of(x)] = true;
    return bits;
  }

  ElementSet to_set(const std::vector<bool>& bits) const {
    ElementSet out;
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (bits[i]) out.insert(out.end(), elements_[i]);
    return out;
  }

 private:
  static constexpr std::size_t kTableLimit = 1024;
  const ModuleShape& shape_;
  std::vector<ModElement> elements_;
  std::vector<std::uint32_t> add_table_;
};

}  // namespace

std::uint64_t enumeration_cap() { return g_cap.load(std::memory_order_relaxed); }

void set_enumeration_cap(std::uint64_t cap) { g_cap.store(cap, std::memory_order_relaxed); }

void check_enumeration_cap(std::uint64_t count) {
  const auto cap = enumeration_cap();
  if (count > cap) throw EnumerationTooLarge(count, cap);
}

Residue positive_mod(Residue a, Residue n) {
  Residue r = a % n;
  return r < 0 ? r + n : r;
}

bool ModElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Residue c) { return c == 0; });
}

std::string to_string(const ModElement& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(x[i]);
  }
  return out + ")";
}

ModuleShape::ModuleShape(Residue n, std::vector<Residue> orders) : n_(n), orders_(std::move(orders)) {
  if (n_ < 1 || n_ >= kMaxModulus)
    throw InvalidArgument("modulus must lie in [1, 2^31), got " + std::to_string(n_));
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const Residue d = orders_[i];
    if (d < 1 || n_ % d != 0)
      throw InvalidArgument("order " + std::to_string(d) + " at coordinate " + std::to_string(i) +
                            " does not divide " + std::to_string(n_));
  }
}

std::uint64_t ModuleShape::cardinality() const {
  std::uint64_t card = 1;
  for (Residue d : orders_) {
    const auto ud = static_cast<std::uint64_t>(d);
    if (card > std::numeric_limits<std::uint64_t>::max() / ud) return std::numeric_limits<std::uint64_t>::max();
    card *= ud;
  }
  return card;
}

ModuleShape ModuleShape::repeated(std::size_t m) const {
  std::vector<Residue> orders;
  orders.reserve(orders_.size() * m);
  for (std::size_t i = 0; i < m; ++i) orders.insert(orders.end(), orders_.begin(), orders_.end());
  return ModuleShape(n_, std::move(orders));
}

bool ModuleShape::contains(const ModElement& x) const {
  if (x.size() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (x[i] < 0 || x[i] >= orders_[i]) return false;
  return true;
}

void ModuleShape::require(const ModElement& x) const {
  if (!contains(x))
    throw InvalidArgument("element " + to_string(x) + " does not lie in a module of rank " +
                          std::to_string(rank()));
}

ModElement ModuleShape::reduce(std::vector<Residue> coords) const {
  if (coords.size() != rank())
    throw InvalidArgument("expected " + std::to_string(rank()) + " coordinates, got " +
                          std::to_string(coords.size()));
  for (std::size_t i = 0; i < rank(); ++i) coords[i] = positive_mod(coords[i], orders_[i]);
  return ModElement(std::move(coords));
}

ModElement ModuleShape::unit_vector(std::size_t i) const {
  std::vector<Residue> c(rank(), 0);
  c.at(i) = orders_[i] == 1 ? 0 : 1;
  return ModElement(std::move(c));
}

ModElement ModuleShape::add(const ModElement& a, const ModElement& b) const {
  std::vector<Residue> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    c[i] = a[i] + b[i];
    if (c[i] >= orders_[i]) c[i] -= orders_[i];
  }
  return ModElement(std::move(c));
}

ModElement ModuleShape::sub(const ModElement& a, const ModElement& b) const {
  std::vector<Residue> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    c[i] = a[i] - b[i];
    if (c[i] < 0) c[i] += orders_[i];
  }
  return ModElement(std::move(c));
}

ModElement ModuleShape::neg(const ModElement& a) const { return sub(zero(), a); }

ModElement ModuleShape::scale(Residue k, const ModElement& a) const {
  std::vector<Residue> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = positive_mod(positive_mod(k, orders_[i]) * a[i], orders_[i]);
  return ModElement(std::move(c));
}

Residue ModuleShape::additive_order(const ModElement& a) const {
  Residue ord = 1;
  for (std::size_t i = 0; i < rank(); ++i) ord = std::lcm(ord, orders_[i] / std::gcd(a[i], orders_[i]));
  return ord;
}

std::uint64_t ModuleShape::index_of(const ModElement& x) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) idx = idx * static_cast<std::uint64_t>(orders_[i]) + x[i];
  return idx;
}

ModElement ModuleShape::element_at(std::uint64_t index) const {
  std::vector<Residue> c(rank());
  for (std::size_t i = rank(); i-- > 0;) {
    const auto d = static_cast<std::uint64_t>(orders_[i]);
    c[i] = static_cast<Residue>(index % d);
    index /= d;
  }
  return ModElement(std::move(c));
}

ZnLinearForm::ZnLinearForm(const ModuleShape& shape, std::vector<Residue> weights)
    : n_(shape.modulus()), weights_(std::move(weights)) {
  if (weights_.size() != shape.rank())
    throw InvalidArgument("linear form needs " + std::to_string(shape.rank()) + " weights");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    weights_[i] = positive_mod(weights_[i], n_);
    if ((weights_[i] * shape.order(i)) % n_ != 0)
      throw InvalidArgument("weight " + std::to_string(weights_[i]) + " is not a multiple of " +
                            std::to_string(n_ / shape.order(i)));
  }
}

Residue ZnLinearForm::operator()(const ModElement& x) const {
  Residue acc = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) acc = (acc + weights_[i] * x[i]) % n_;
  return acc;
}

void for_each_element(const ModuleShape& shape, const std::function<void(const ModElement&)>& visit) {
  check_enumeration_cap(shape.cardinality());
  std::vector<Residue> c(shape.rank(), 0);
  while (true) {
    visit(ModElement(c));
    std::size_t i = shape.rank();
    while (i > 0) {
      --i;
      if (++c[i] < shape.order(i)) break;
      c[i] = 0;
      if (i == 0) return;
    }
    if (shape.rank() == 0) return;
  }
}

std::vector<ModElement> enumerate_module(const ModuleShape& shape) {
  std::vector<ModElement> out;
  check_enumeration_cap(shape.cardinality());
  out.reserve(shape.cardinality());
  for_each_element(shape, [&](const ModElement& x) { out.push_back(x); });
  return out;
}

std::vector<ZnLinearForm> enumerate_forms(const ModuleShape& shape) {
  // Hom(Z_d, Z_n) is generated by n/d; the weight steps through its d multiples.
  std::vector<Residue> step(shape.rank());
  for (std::size_t i = 0; i < shape.rank(); ++i) step[i] = shape.modulus() / shape.order(i);
  std::vector<ZnLinearForm> out;
  check_enumeration_cap(shape.cardinality());
  out.reserve(shape.cardinality());
  for_each_element(shape, [&](const ModElement& t) {
    std::vector<Residue> w(shape.rank());
    for (std::size_t i = 0; i < shape.rank(); ++i) w[i] = t[i] * step[i];
    out.emplace_back(shape, std::move(w));
  });
  return out;
}

ElementSet span(std::span<const ModElement> gens, const ModuleShape& shape) {
  for (const auto& g : gens) shape.require(g);
  ElementSet out{shape.zero()};
  std::vector<ModElement> frontier{shape.zero()};
  while (!frontier.empty()) {
    std::vector<ModElement> next;
    for (const auto& s : frontier) {
      for (const auto& g : gens) {
        auto sum = shape.add(s, g);
        if (out.insert(sum).second) next.push_back(std::move(sum));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

ElementSet span(const ElementSet& gens, const ModuleShape& shape) {
  std::vector<ModElement> v(gens.begin(), gens.end());
  return span(std::span<const ModElement>(v), shape);
}

ElementSet kernel_elements(const ZnPairing& pairing, const ModuleShape& left, const ModuleShape& right) {
  const auto rights = enumerate_module(right);
  ElementSet out;
  for_each_element(left, [&](const ModElement& x) {
    for (const auto& y : rights)
      if (pairing(x, y) != 0) return;
    out.insert(out.end(), x);
  });
  return out;
}

ElementSet invariant_closure(const ElementSet& gens, const ModuleShape& shape, std::span<const Endomorphism> ops) {
  ElementSet current = span(gens, shape);
  while (true) {
    ElementSet extra;
    for (const auto& x : current)
      for (const auto& op : ops) {
        auto y = op(x);
        if (!current.contains(y)) extra.insert(std::move(y));
      }
    if (extra.empty()) return current;
    extra.insert(current.begin(), current.end());
    current = span(extra, shape);
  }
}

std::vector<ElementSet> enumerate_invariant_subgroups(const ModuleShape& shape, std::span<const Endomorphism> ops) {
  IndexedShape indexed(shape);
  const std::size_t count = indexed.size();

  // Cyclic (singly generated) invariant subgroups.
  std::vector<std::vector<bool>> cyclic;
  std::set<std::vector<bool>> seen;
  for (std::size_t i = 0; i < count; ++i) {
    auto bits = indexed.to_bits(invariant_closure({indexed.element(i)}, shape, ops));
    if (seen.insert(bits).second) cyclic.push_back(std::move(bits));
  }

  std::vector<std::vector<bool>> all(cyclic.begin(), cyclic.end());
  for (std::size_t next = 0; next < all.size(); ++next) {
    for (const auto& p : cyclic) {
      const auto& base = all[next];
      bool subset = true;
      for (std::size_t i = 0; i < count && subset; ++i)
        if (p[i] && !base[i]) subset = false;
      if (subset) continue;
      std::vector<bool> sum(count, false);
      for (std::size_t i = 0; i < count; ++i) {
        if (!base[i]) continue;
        for (std::size_t j = 0; j < count; ++j)
          if (p[j]) sum[indexed.add(i, j)] = true;
      }
      if (seen.insert(sum).second) all.push_back(std::move(sum));
    }
  }

  std::vector<ElementSet> out;
  out.reserve(all.size());
  for (const auto& bits : all) out.push_back(indexed.to_set(bits));
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace frobkit
