#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace kwc {

using Vertex = int;

/// Subset of the universe {0, ..., universe-1}, stored as a packed bit array.
///
/// All binary operations require both operands to share the same universe.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);
  /// Lowest `universe` bits of `mask`; universe must be at most 64.
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

  [[nodiscard]] std::size_t universe() const { return universe_; }
  [[nodiscard]] bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);

  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] bool empty() const;
  [[nodiscard]] std::vector<Vertex> members() const;
  [[nodiscard]] std::uint64_t to_mask() const;  // universe <= 64

  [[nodiscard]] bool is_subset_of(const VertexSet& other) const;
  [[nodiscard]] bool intersects(const VertexSet& other) const;
  /// |*this ∩ other| without materialising the intersection.
  [[nodiscard]] std::size_t count_common(const VertexSet& other) const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  VertexSet& operator|=(const VertexSet& rhs);
  VertexSet& operator&=(const VertexSet& rhs);
  VertexSet& operator-=(const VertexSet& rhs);
  friend VertexSet operator|(VertexSet lhs, const VertexSet& rhs) { return lhs |= rhs; }
  friend VertexSet operator&(VertexSet lhs, const VertexSet& rhs) { return lhs &= rhs; }
  friend VertexSet operator-(VertexSet lhs, const VertexSet& rhs) { return lhs -= rhs; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

  /// Members joined by `sep`, ascending.
  [[nodiscard]] std::string to_string(const std::string& sep = ",") const;

 private:
  void check(Vertex v) const;
  void check_same_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace kwc
