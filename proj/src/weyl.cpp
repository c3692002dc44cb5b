#include "anstar/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace anstar {

namespace {

// gamma P gamma^-1 as an index map: j -> rho(p(rho(j))), rho(j) = m-1-j.
std::vector<int> conjugate_by_reversal(const std::vector<int>& p) {
  const int m = static_cast<int>(p.size());
  std::vector<int> out(p.size());
  for (int j = 0; j < m; ++j) out[j] = m - 1 - p[m - 1 - j];
  return out;
}

template <typename T, typename Hash, typename Step>
std::vector<T> closure(const T& seed, std::size_t generator_count, Step step) {
  std::unordered_set<T, Hash> seen{seed};
  std::deque<T> frontier{seed};
  while (!frontier.empty()) {
    T cur = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t g = 0; g < generator_count; ++g) {
      T next = step(g, cur);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  std::vector<T> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

GroupElement::GroupElement(std::vector<int> perm, bool flip) : perm_(std::move(perm)), flip_(flip) {
  std::vector<int> check = perm_;
  std::sort(check.begin(), check.end());
  for (std::size_t j = 0; j < check.size(); ++j) {
    if (check[j] != static_cast<int>(j)) throw std::invalid_argument("GroupElement: not a permutation");
  }
}

GroupElement GroupElement::identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(n) + 1);
  std::iota(p.begin(), p.end(), 0);
  return {std::move(p), false};
}

bool GroupElement::is_identity() const {
  if (flip_) return false;
  for (std::size_t j = 0; j < perm_.size(); ++j) {
    if (perm_[j] != static_cast<int>(j)) return false;
  }
  return true;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.perm_.size() != b.perm_.size()) throw std::invalid_argument("GroupElement: rank mismatch");
  // a b = P_a G^fa P_b G^fb = P_a (G^fa P_b G^-fa) G^(fa+fb)
  const std::vector<int> inner = a.flip_ ? conjugate_by_reversal(b.perm_) : b.perm_;
  std::vector<int> p(a.perm_.size());
  for (std::size_t j = 0; j < p.size(); ++j) p[j] = a.perm_[inner[j]];
  GroupElement out;
  out.perm_ = std::move(p);
  out.flip_ = a.flip_ != b.flip_;
  return out;
}

GroupElement GroupElement::inverse() const {
  std::vector<int> inv(perm_.size());
  for (std::size_t j = 0; j < perm_.size(); ++j) inv[perm_[j]] = static_cast<int>(j);
  GroupElement out;
  // (P G)^-1 = G P^-1 = (G P^-1 G^-1) G
  out.perm_ = flip_ ? conjugate_by_reversal(inv) : std::move(inv);
  out.flip_ = flip_;
  return out;
}

int GroupElement::order() const {
  GroupElement power = *this;
  int k = 1;
  while (!power.is_identity()) {
    power = power * *this;
    ++k;
  }
  return k;
}

std::string GroupElement::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t j = 0; j < perm_.size(); ++j) os << (j ? " " : "") << perm_[j] + 1;
  os << ']';
  if (flip_) os << "*gamma";
  return os.str();
}

std::size_t GroupElement::hash() const {
  std::size_t h = flip_ ? 0x51ed27ULL : 0;
  for (int p : perm_) h = h * 31 + static_cast<std::size_t>(p);
  return h;
}

GroupElement reflection(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("reflection index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  GroupElement id = GroupElement::identity(n);
  std::vector<int> p = id.perm();
  std::swap(p[i - 1], p[i]);
  return {std::move(p), false};
}

GroupElement dynkin_flip(int n) { return {GroupElement::identity(n).perm(), true}; }

GroupElement coxeter_element(int n) {
  GroupElement c = GroupElement::identity(n);
  for (int i = 1; i <= n; ++i) c = c * reflection(n, i);
  return c;
}

GroupElement parse_word(int n, std::string_view word) {
  GroupElement g = GroupElement::identity(n);
  std::size_t pos = 0;
  while (pos < word.size()) {
    const char ch = word[pos];
    if (std::isspace(static_cast<unsigned char>(ch)) != 0 || ch == '*' || ch == '_') {
      ++pos;
    } else if (ch == 'e') {
      ++pos;
    } else if (ch == 'g') {
      g = g * dynkin_flip(n);
      ++pos;
    } else if (ch == 'r') {
      std::size_t end = ++pos;
      while (end < word.size() && std::isdigit(static_cast<unsigned char>(word[end])) != 0) ++end;
      if (end == pos) throw std::invalid_argument("word '" + std::string(word) + "': r without index");
      // Single digits concatenate ("r1r2"), so read one digit when n < 10.
      if (n < 10) end = pos + 1;
      g = g * reflection(n, std::stoi(std::string(word.substr(pos, end - pos))));
      pos = end;
    } else {
      throw std::invalid_argument("word '" + std::string(word) + "': unexpected '" + std::string(1, ch) + "'");
    }
  }
  return g;
}

LatticeVector act(const GroupElement& g, const LatticeVector& v) {
  if (g.rank() != v.rank()) throw std::invalid_argument("act: rank mismatch");
  const std::size_t m = v.size();
  std::vector<Rational> src = v.coeffs();
  if (g.flip()) {
    std::reverse(src.begin(), src.end());
    for (auto& c : src) c = -c;
  }
  std::vector<Rational> out(m);
  for (std::size_t j = 0; j < m; ++j) out[g.perm()[j]] = std::move(src[j]);
  return {v.rank(), std::move(out)};
}

std::vector<LatticeVector> orbit(const std::vector<GroupElement>& generators, const LatticeVector& v) {
  return closure<LatticeVector, LatticeVectorHash>(
      v, generators.size(), [&](std::size_t g, const LatticeVector& cur) { return act(generators[g], cur); });
}

std::vector<LatticeVector> weyl_orbit(const LatticeVector& v) {
  std::vector<GroupElement> gens;
  for (int i = 1; i <= v.rank(); ++i) gens.push_back(reflection(v.rank(), i));
  return orbit(gens, v);
}

std::vector<GroupElement> subgroup_elements(const SubgroupSpec& spec) {
  std::vector<GroupElement> gens;
  for (int i : spec.generators) gens.push_back(reflection(spec.n, i));
  if (spec.include_flip) gens.push_back(dynkin_flip(spec.n));
  return closure<GroupElement, GroupElementHash>(
      GroupElement::identity(spec.n), gens.size(),
      [&](std::size_t g, const GroupElement& cur) { return gens[g] * cur; });
}

long coset_count(const SubgroupSpec& spec) {
  const long full = factorial(spec.n + 1) * (spec.include_flip ? 2 : 1);
  return full / static_cast<long>(subgroup_elements(spec).size());
}

std::vector<GroupElement> weyl_group_elements(int n, bool include_flip) {
  SubgroupSpec spec{n, {}, include_flip};
  for (int i = 1; i <= n; ++i) spec.generators.push_back(i);
  return subgroup_elements(spec);
}

std::vector<GroupElement> stabilizer(const std::vector<GroupElement>& group, const LatticeVector& v) {
  std::vector<GroupElement> out;
  for (const auto& g : group) {
    if (act(g, v) == v) out.push_back(g);
  }
  return out;
}

long factorial(int m) {
  long r = 1;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

} // namespace anstar
