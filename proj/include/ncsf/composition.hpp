#pragma once

#include "ncsf/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace ncsf {

/// Largest weight a composition may carry; the descent set is held in a
/// 64-bit mask.
inline constexpr int kMaxWeight = 64;

/// Finite sequence of positive parts. The empty composition is the unique
/// composition of 0 and indexes the unit.
///
/// Compositions of the same weight are ordered by their descent mask (bit k-1
/// set iff k is a partial sum), so (n) comes first and (1^n) last; lighter
/// compositions precede heavier ones.
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  /// Rebuilds the composition of n whose descent set is `mask`.
  static Composition from_mask(int n, std::uint64_t mask);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vector() const { return parts_; }
  int weight() const { return weight_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int last_part() const { return parts_.back(); }
  std::uint64_t mask() const { return mask_; }

  /// "[3,1,2]"; "[]" for the empty composition.
  std::string str() const;
  /// "3.1.2", used in CSV headers.
  std::string dotted() const;

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.weight_ == b.weight_ && a.mask_ == b.mask_;
  }
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
    if (a.weight_ != b.weight_) {
      return a.weight_ <=> b.weight_;
    }
    return a.mask_ <=> b.mask_;
  }

private:
  std::vector<int> parts_;
  int weight_ = 0;
  std::uint64_t mask_ = 0;
};

struct CompositionHash {
  std::size_t operator()(const Composition& c) const noexcept {
    return std::hash<std::uint64_t>{}(c.mask() * 131u + static_cast<std::uint64_t>(c.weight()));
  }
};

std::set<int> descent_set(const Composition& I);
Composition from_descents(int n, const std::set<int>& descents);

Composition reverse(const Composition& I);
/// Ribbon conjugate: descents(~I) = {1..n-1} \ descents(reverse(I)).
Composition conjugate(const Composition& I);
Composition concat(const Composition& I, const Composition& J);
/// I ▷ J: fuses the last part of I with the first part of J.
Composition near_concat(const Composition& I, const Composition& J);

/// All 2^(n-1) compositions of n in canonical order.
std::vector<Composition> compositions_of(int n);

/// J ⪯ I: J is obtained by summing consecutive parts of I.
bool is_coarsening(const Composition& J, const Composition& I);
std::vector<Composition> coarsenings(const Composition& I);
std::vector<Composition> refinements(const Composition& I);

/// For J ⪯ I: p_k is the index (1-based) in I of the last part absorbed into
/// j_k. The implied p_0 = 0 is not returned.
std::vector<std::size_t> breakpoints(const Composition& J, const Composition& I);

/// For J ⪰ I: the contiguous blocks of J with |J_p| = i_p.
std::vector<Composition> split(const Composition& J, const Composition& I);

/// Product of successive partial sums i_1 (i_1 + i_2) ... |I|.
Rational pi_u(const Composition& I);
Rational pi_u_rel(const Composition& J, const Composition& I);
long lp(const Composition& I);
long lp_rel(const Composition& J, const Composition& I);

/// Weakly decreasing sequence of positive parts.
class Partition {
public:
  Partition() = default;
  /// Throws DomainError unless `parts` is non-increasing and positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  std::size_t length() const { return parts_.size(); }
  /// m_i: how many parts equal i.
  int multiplicity(int i) const;
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
  std::vector<int> parts_;
};

Partition sort_to_partition(const Composition& I);
/// Distinct rearrangements of the parts of mu, in canonical composition order.
std::vector<Composition> multiset_permutations(const Partition& mu);
/// u(mu) = prod_i m_i(mu)!.
long augmentation_factor(const Partition& mu);
/// Partitions of n, largest first part first.
std::vector<Partition> partitions_of(int n);

} // namespace ncsf
