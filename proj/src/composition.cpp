#include "ncsf/composition.hpp"

#include "ncsf/error.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ncsf {

namespace {

std::uint64_t full_mask(int n) { return n <= 1 ? 0 : ((std::uint64_t{1} << (n - 1)) - 1); }

std::string join(const std::vector<int>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) {
      out += sep;
    }
    out += std::to_string(parts[i]);
  }
  return out;
}

void require_nonempty(const Composition& I, const char* op) {
  if (I.empty()) {
    throw DomainError(std::string(op) + ": empty composition");
  }
}

} // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  long weight = 0;
  for (const int p : parts_) {
    if (p < 1) {
      throw DomainError("composition parts must be positive, got " + std::to_string(p));
    }
    weight += p;
    if (weight > kMaxWeight) {
      throw DomainError("composition weight exceeds " + std::to_string(kMaxWeight));
    }
  }
  weight_ = static_cast<int>(weight);
  int partial = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    partial += parts_[i];
    mask_ |= std::uint64_t{1} << (partial - 1);
  }
}

Composition Composition::from_mask(int n, std::uint64_t mask) {
  if (n < 0 || n > kMaxWeight) {
    throw DomainError("composition weight out of range");
  }
  if (n == 0) {
    return Composition{};
  }
  if ((mask & ~full_mask(n)) != 0) {
    throw DomainError("descent mask has bits outside {1..n-1}");
  }
  std::vector<int> parts;
  int last = 0;
  for (int k = 1; k < n; ++k) {
    if ((mask >> (k - 1)) & 1U) {
      parts.push_back(k - last);
      last = k;
    }
  }
  parts.push_back(n - last);
  return Composition(std::move(parts));
}

std::string Composition::str() const { return "[" + join(parts_, ',') + "]"; }

std::string Composition::dotted() const { return join(parts_, '.'); }

std::set<int> descent_set(const Composition& I) {
  require_nonempty(I, "descent_set");
  std::set<int> out;
  for (int k = 1; k < I.weight(); ++k) {
    if ((I.mask() >> (k - 1)) & 1U) {
      out.insert(k);
    }
  }
  return out;
}

Composition from_descents(int n, const std::set<int>& descents) {
  if (n < 1) {
    throw DomainError("from_descents: n must be positive");
  }
  std::uint64_t mask = 0;
  for (const int d : descents) {
    if (d < 1 || d >= n) {
      throw DomainError("from_descents: descent " + std::to_string(d) + " outside {1..n-1}");
    }
    mask |= std::uint64_t{1} << (d - 1);
  }
  return Composition::from_mask(n, mask);
}

Composition reverse(const Composition& I) {
  std::vector<int> parts(I.parts().rbegin(), I.parts().rend());
  return Composition(std::move(parts));
}

Composition conjugate(const Composition& I) {
  require_nonempty(I, "conjugate");
  const int n = I.weight();
  return Composition::from_mask(n, full_mask(n) & ~reverse(I).mask());
}

Composition concat(const Composition& I, const Composition& J) {
  std::vector<int> parts = I.vector();
  parts.insert(parts.end(), J.parts().begin(), J.parts().end());
  return Composition(std::move(parts));
}

Composition near_concat(const Composition& I, const Composition& J) {
  if (I.empty() || J.empty()) {
    throw DomainError("near_concat: both compositions must be nonempty");
  }
  std::vector<int> parts = I.vector();
  parts.back() += J[0];
  parts.insert(parts.end(), J.parts().begin() + 1, J.parts().end());
  return Composition(std::move(parts));
}

std::vector<Composition> compositions_of(int n) {
  if (n <= 0) {
    throw DomainError("compositions_of: n must be positive");
  }
  if (n > kMaxWeight) {
    throw DomainError("compositions_of: n too large");
  }
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  std::vector<Composition> out;
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    out.push_back(Composition::from_mask(n, mask));
  }
  return out;
}

bool is_coarsening(const Composition& J, const Composition& I) {
  return J.weight() == I.weight() && (J.mask() & ~I.mask()) == 0;
}

std::vector<Composition> coarsenings(const Composition& I) {
  std::vector<std::uint64_t> masks;
  for (std::uint64_t s = I.mask();; s = (s - 1) & I.mask()) {
    masks.push_back(s);
    if (s == 0) {
      break;
    }
  }
  std::sort(masks.begin(), masks.end());
  std::vector<Composition> out;
  out.reserve(masks.size());
  for (const auto m : masks) {
    out.push_back(Composition::from_mask(I.weight(), m));
  }
  return out;
}

std::vector<Composition> refinements(const Composition& I) {
  const std::uint64_t free = full_mask(I.weight()) & ~I.mask();
  std::vector<std::uint64_t> masks;
  for (std::uint64_t s = free;; s = (s - 1) & free) {
    masks.push_back(I.mask() | s);
    if (s == 0) {
      break;
    }
  }
  std::sort(masks.begin(), masks.end());
  std::vector<Composition> out;
  out.reserve(masks.size());
  for (const auto m : masks) {
    out.push_back(Composition::from_mask(I.weight(), m));
  }
  return out;
}

std::vector<std::size_t> breakpoints(const Composition& J, const Composition& I) {
  if (!is_coarsening(J, I)) {
    throw DomainError("breakpoints: " + J.str() + " is not a coarsening of " + I.str());
  }
  std::vector<std::size_t> p;
  p.reserve(J.length());
  std::size_t k = 0;
  for (const int j : J.parts()) {
    int absorbed = 0;
    while (absorbed < j) {
      absorbed += I[k++];
    }
    p.push_back(k);
  }
  return p;
}

std::vector<Composition> split(const Composition& J, const Composition& I) {
  if (!is_coarsening(I, J)) {
    throw DomainError("split: " + J.str() + " is not a refinement of " + I.str());
  }
  std::vector<Composition> blocks;
  blocks.reserve(I.length());
  std::size_t k = 0;
  for (const int target : I.parts()) {
    std::vector<int> block;
    int sum = 0;
    while (sum < target) {
      block.push_back(J[k]);
      sum += J[k++];
    }
    blocks.emplace_back(std::move(block));
  }
  return blocks;
}

Rational pi_u(const Composition& I) {
  mpz_class product = 1;
  long partial = 0;
  for (const int part : I.parts()) {
    partial += part;
    product *= partial;
  }
  return Rational(mpq_class(product));
}

Rational pi_u_rel(const Composition& J, const Composition& I) {
  Rational product(1);
  for (const auto& block : split(J, I)) {
    product *= pi_u(block);
  }
  return product;
}

long lp(const Composition& I) {
  require_nonempty(I, "lp");
  return I.last_part();
}

long lp_rel(const Composition& J, const Composition& I) {
  long product = 1;
  for (const auto& block : split(J, I)) {
    product *= block.last_part();
  }
  return product;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw DomainError("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be non-increasing");
    }
  }
}

int Partition::weight() const {
  int w = 0;
  for (const int p : parts_) {
    w += p;
  }
  return w;
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::string Partition::str() const { return "(" + join(parts_, ',') + ")"; }

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (const auto c = a.weight() <=> b.weight(); c != 0) {
    return c;
  }
  // Reverse lexicographic, so (n) leads its weight class.
  return b.parts_ <=> a.parts_;
}

Partition sort_to_partition(const Composition& I) {
  std::vector<int> parts = I.vector();
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::vector<Composition> multiset_permutations(const Partition& mu) {
  std::vector<int> parts = mu.parts();
  std::sort(parts.begin(), parts.end());
  std::vector<Composition> out;
  do {
    out.emplace_back(parts);
  } while (std::next_permutation(parts.begin(), parts.end()));
  std::sort(out.begin(), out.end());
  return out;
}

long augmentation_factor(const Partition& mu) {
  std::map<int, long> counts;
  for (const int p : mu.parts()) {
    ++counts[p];
  }
  long u = 1;
  for (const auto& [part, m] : counts) {
    for (long k = 2; k <= m; ++k) {
      u *= k;
    }
  }
  return u;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) {
    throw DomainError("partitions_of: n must be nonnegative");
  }
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int k = std::min(remaining, largest); k >= 1; --k) {
      current.push_back(k);
      rec(remaining - k, k);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

} // namespace ncsf
