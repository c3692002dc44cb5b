#ifndef ANSTAR_WEYL_HPP
#define ANSTAR_WEYL_HPP

#include "anstar/lattice.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace anstar {

/// Element of W(a_n):C_2. Acts on k-coefficients by first applying the
/// Dynkin flip (negated index reversal) when `flip` is set, then sending
/// k_j to k_{perm[j]} (0-based).
class GroupElement {
public:
  GroupElement() = default;
  GroupElement(std::vector<int> perm, bool flip);

  static GroupElement identity(int n);

  int rank() const { return static_cast<int>(perm_.size()) - 1; }
  const std::vector<int>& perm() const { return perm_; }
  bool flip() const { return flip_; }
  bool is_identity() const;

  GroupElement inverse() const;
  /// Smallest k >= 1 with g^k = 1.
  int order() const;
  std::string str() const;

  /// (a * b)(v) = a(b(v))
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.flip_ == b.flip_ && a.perm_ == b.perm_;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    if (a.flip_ != b.flip_) return b.flip_;
    return a.perm_ < b.perm_;
  }

  std::size_t hash() const;

private:
  std::vector<int> perm_;
  bool flip_ = false;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept { return g.hash(); }
};

/// r_i: k_i <-> k_{i+1}, 1 <= i <= n.
GroupElement reflection(int n, int i);
/// gamma: v -> -(index reversal of v).
GroupElement dynkin_flip(int n);
/// r_1 r_2 ... r_n; rotates the Coxeter plane by 2 pi / (n+1).
GroupElement coxeter_element(int n);
/// Parses a product such as "r1 r2 r3", "r1r2r3", "g r4" or "e" (identity).
GroupElement parse_word(int n, std::string_view word);

LatticeVector act(const GroupElement& g, const LatticeVector& v);

/// Closure of {v} under the group generated by `generators`, sorted.
std::vector<LatticeVector> orbit(const std::vector<GroupElement>& generators, const LatticeVector& v);
/// Orbit under the full Weyl group W(a_n).
std::vector<LatticeVector> weyl_orbit(const LatticeVector& v);

struct SubgroupSpec {
  int n = 0;
  /// Indices i of the chosen r_i, 1-based.
  std::vector<int> generators;
  bool include_flip = false;
};

/// Elements of the generated subgroup, sorted.
std::vector<GroupElement> subgroup_elements(const SubgroupSpec& spec);
/// |W| / |H|, where W is W(a_n), or W(a_n):C_2 when the spec includes gamma.
long coset_count(const SubgroupSpec& spec);

/// All of W(a_n) (optionally W(a_n):C_2), sorted.
std::vector<GroupElement> weyl_group_elements(int n, bool include_flip = false);
std::vector<GroupElement> stabilizer(const std::vector<GroupElement>& group, const LatticeVector& v);

long factorial(int m);

} // namespace anstar

#endif // ANSTAR_WEYL_HPP
