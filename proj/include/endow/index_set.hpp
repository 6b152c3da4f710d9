#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace endow {

/// Fixed-width set of dense indices (at most 64). `Tag` keeps agent sets and
/// object sets from being mixed up.
template <typename Tag>
class IndexSet {
 public:
  using word_type = std::uint64_t;
  static constexpr int kCapacity = 64;

  constexpr IndexSet() = default;
  constexpr explicit IndexSet(word_type bits) : bits_(bits) {}
  constexpr IndexSet(std::initializer_list<int> members) {
    for (int m : members) insert(m);
  }

  static constexpr IndexSet range(int n) {
    return IndexSet(n >= kCapacity ? ~word_type{0} : ((word_type{1} << n) - 1));
  }
  static constexpr IndexSet single(int i) { return IndexSet(word_type{1} << i); }

  constexpr word_type bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }

  constexpr void insert(int i) { bits_ |= word_type{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(word_type{1} << i); }

  constexpr bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(IndexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
  constexpr IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }
  constexpr IndexSet operator-(IndexSet o) const { return IndexSet(bits_ & ~o.bits_); }
  constexpr IndexSet& operator|=(IndexSet o) { bits_ |= o.bits_; return *this; }
  constexpr IndexSet& operator&=(IndexSet o) { bits_ &= o.bits_; return *this; }
  constexpr IndexSet& operator-=(IndexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr auto operator<=>(const IndexSet&) const = default;

  /// Lowest member, or -1 when empty.
  constexpr int first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (word_type b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename Fn>
  constexpr void for_each(Fn&& fn) const {
    for (word_type b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b));
  }

  /// Visits every nonempty subset in ascending numeric order. Stops early
  /// when `fn` returns true; returns whether it stopped.
  template <typename Fn>
  constexpr bool for_each_nonempty_subset(Fn&& fn) const {
    if (bits_ == 0) return false;
    word_type s = 0;
    do {
      s = (s - bits_) & bits_;
      if (fn(IndexSet(s))) return true;
    } while (s != bits_);
    return false;
  }

 private:
  word_type bits_ = 0;
};

struct AgentTag {};
struct ObjectTag {};

using AgentSet = IndexSet<AgentTag>;
using ObjectSet = IndexSet<ObjectTag>;

}  // namespace endow
