#include "kwc/vertex_set.hpp"

#include <sstream>

#include "kwc/errors.hpp"

namespace kwc {

namespace {
std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }
}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (const std::size_t tail = universe % 64; tail != 0) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw PreconditionError("VertexSet::from_mask: universe exceeds 64");
  VertexSet s(universe);
  if (universe > 0) {
    const std::uint64_t keep = universe == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1;
    s.words_[0] = mask & keep;
  }
  return s;
}

void VertexSet::check(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= universe_) {
    throw PreconditionError("vertex " + std::to_string(v) + " outside universe of size " +
                            std::to_string(universe_));
  }
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) throw PreconditionError("VertexSet universes differ");
}

bool VertexSet::contains(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= universe_) return false;
  const auto i = static_cast<std::size_t>(v);
  return (words_[i / 64] >> (i % 64)) & 1U;
}

void VertexSet::insert(Vertex v) {
  check(v);
  const auto i = static_cast<std::size_t>(v);
  words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void VertexSet::erase(Vertex v) {
  check(v);
  const auto i = static_cast<std::size_t>(v);
  words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

std::size_t VertexSet::size() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::uint64_t VertexSet::to_mask() const {
  if (universe_ > 64) throw PreconditionError("VertexSet::to_mask: universe exceeds 64");
  return words_.empty() ? 0 : words_[0];
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::size_t VertexSet::count_common(const VertexSet& other) const {
  check_same_universe(other);
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return c;
}

VertexSet& VertexSet::operator|=(const VertexSet& rhs) {
  check_same_universe(rhs);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= rhs.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& rhs) {
  check_same_universe(rhs);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= rhs.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& rhs) {
  check_same_universe(rhs);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~rhs.words_[i];
  return *this;
}

std::string VertexSet::to_string(const std::string& sep) const {
  std::ostringstream os;
  bool first = true;
  for_each([&](Vertex v) {
    if (!first) os << sep;
    os << v;
    first = false;
  });
  return os.str();
}

}  // namespace kwc
