#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mpbe {

using Elem = std::uint8_t;

inline constexpr std::size_t kMaxElements = 64;

/// Subset of a carrier with at most 64 elements.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet full(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr ElementSet singleton(Elem x) { return ElementSet(std::uint64_t{1} << x); }

  constexpr bool contains(Elem x) const { return (bits_ >> x) & 1U; }
  constexpr void insert(Elem x) { bits_ |= std::uint64_t{1} << x; }
  constexpr void erase(Elem x) { bits_ &= ~(std::uint64_t{1} << x); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<Elem> members() const;

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr bool operator==(const ElementSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Square table of a binary operation, row-major.
class Table {
 public:
  Table() = default;
  explicit Table(std::size_t n, Elem fill = 0) : n_(n), cells_(n * n, fill) {}

  std::size_t size() const { return n_; }
  Elem operator()(Elem x, Elem y) const { return cells_[x * n_ + y]; }
  Elem& at(Elem x, Elem y) { return cells_[x * n_ + y]; }
  std::span<const Elem> row(Elem x) const { return {cells_.data() + x * n_, n_}; }
  std::span<const Elem> cells() const { return cells_; }

  bool operator==(const Table&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> cells_;
};

class UnaryMap {
 public:
  UnaryMap() = default;
  explicit UnaryMap(std::vector<Elem> images) : images_(std::move(images)) {}
  static UnaryMap identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  Elem operator()(Elem x) const { return images_[x]; }
  const std::vector<Elem>& images() const { return images_; }

  /// x ↦ this(inner(x))
  UnaryMap after(const UnaryMap& inner) const;
  ElementSet image() const;
  bool is_identity() const;

  bool operator==(const UnaryMap&) const = default;
  bool operator<(const UnaryMap& o) const { return images_ < o.images_; }

 private:
  std::vector<Elem> images_;
};

/// Carrier, constants and the tables of → and ⇝.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  /// Throws InvalidAlgebra on shape errors (sizes, out-of-range entries, duplicate names).
  FiniteAlgebra(std::string name, std::vector<std::string> element_names, Elem one,
                std::optional<Elem> zero, Table arrow, Table squig);

  const std::string& name() const { return name_; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& element_names() const { return names_; }
  const std::string& element_name(Elem x) const { return names_[x]; }
  std::optional<Elem> find(std::string_view token) const;

  Elem one() const { return one_; }
  std::optional<Elem> zero() const { return zero_; }

  Elem arrow(Elem x, Elem y) const { return arrow_(x, y); }
  Elem squig(Elem x, Elem y) const { return squig_(x, y); }
  const Table& arrow_table() const { return arrow_; }
  const Table& squig_table() const { return squig_; }

  bool leq(Elem x, Elem y) const { return arrow_(x, y) == one_; }
  ElementSet carrier() const { return ElementSet::full(size()); }

  std::string format_set(ElementSet s) const;
  std::string format_tuple(std::span<const Elem> t) const;

  bool operator==(const FiniteAlgebra&) const = default;

 private:
  std::string name_;
  std::vector<std::string> names_;
  Elem one_ = 0;
  std::optional<Elem> zero_;
  Table arrow_;
  Table squig_;
};

struct NamedMap {
  std::string name;
  UnaryMap map;
  bool operator==(const NamedMap&) const = default;
};

/// A parsed algebra file: the algebra plus its `unary` blocks in file order.
struct AlgebraDocument {
  FiniteAlgebra algebra;
  std::vector<NamedMap> maps;

  const UnaryMap* find_map(std::string_view name) const;
  bool operator==(const AlgebraDocument&) const = default;
};

AlgebraDocument parse_algebra(std::string_view text);
AlgebraDocument load_algebra(const std::string& path);
std::string serialize(const FiniteAlgebra& algebra, std::span<const NamedMap> maps = {});
inline std::string serialize(const AlgebraDocument& doc) { return serialize(doc.algebra, doc.maps); }

}  // namespace mpbe
