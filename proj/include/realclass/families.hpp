#pragma once

// Constructors for the standard group families, each producing a GroupSpec:
// a named generator list in cycle notation.
//
// Family expressions are prefix token lists, e.g.
//   dihedral 10
//   frobenius 7 3
//   direct_product symmetric 3 cyclic 2

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "realclass/group.hpp"
#include "realclass/number_theory.hpp"
#include "realclass/permutation.hpp"

namespace realclass {

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GroupSpec {
  std::string name;
  std::size_t degree = 1;
  std::vector<std::string> generators;  // cycle notation, 1-based
  std::string source;                   // "family" or a file path

  std::vector<Permutation> permutations() const {
    std::vector<Permutation> out;
    for (const auto& g : generators) out.push_back(parse_cycles(g, degree));
    if (out.empty()) out.push_back(Permutation::identity(degree));
    return out;
  }

  Group build(std::size_t cap = default_cap()) const {
    return Group::generate(permutations(), degree, cap);
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

namespace detail {

inline std::string cycle_string(const std::vector<std::size_t>& zero_based_points) {
  if (zero_based_points.size() < 2) return "";
  std::string out = "(";
  for (std::size_t i = 0; i < zero_based_points.size(); ++i)
    out += (i ? "," : "") + std::to_string(zero_based_points[i] + 1);
  return out + ")";
}

inline std::string images_string(const std::vector<Permutation::Point>& images) {
  const Permutation p = Permutation::from_images(images);
  return p.is_identity() ? "" : p.to_cycles();
}

inline GroupSpec make_spec(std::string name, std::size_t degree, std::vector<std::string> gens) {
  std::vector<std::string> kept;
  for (auto& g : gens)
    if (!g.empty()) kept.push_back(std::move(g));
  if (kept.empty()) kept.push_back("");
  return GroupSpec{std::move(name), degree, std::move(kept), "family"};
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  for (; exp; exp >>= 1) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
  }
  return r;
}

inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  std::uint64_t x = a % m;
  for (std::uint64_t k = 1; k <= m; ++k) {
    if (x == 1 % m) return k;
    x = x * a % m;
  }
  return 0;
}

// Regular representation of a group given by a multiplication rule on
// 0..n-1, generated by right multiplication with the listed elements.
template <typename Mul>
std::vector<std::string> regular_generators(std::size_t n, const std::vector<std::size_t>& gens,
                                            Mul mul) {
  std::vector<std::string> out;
  for (auto s : gens) {
    std::vector<Permutation::Point> images(n);
    for (std::size_t e = 0; e < n; ++e) images[e] = static_cast<Permutation::Point>(mul(e, s));
    out.push_back(images_string(images));
  }
  return out;
}

}  // namespace detail

inline GroupSpec cyclic(std::uint64_t n) {
  if (n < 1) throw ParameterError("cyclic needs n >= 1");
  std::vector<std::size_t> cycle(n);
  std::iota(cycle.begin(), cycle.end(), std::size_t{0});
  return detail::make_spec("cyclic " + std::to_string(n), n, {detail::cycle_string(cycle)});
}

// Dihedral group of the given order 2n, acting on an n-gon for n >= 3.
inline GroupSpec dihedral(std::uint64_t order) {
  if (order < 2 || order % 2 != 0) throw ParameterError("dihedral needs an even order >= 2");
  const std::string name = "dihedral " + std::to_string(order);
  const std::uint64_t n = order / 2;
  if (n == 1) return detail::make_spec(name, 2, {"(1,2)"});
  if (n == 2) return detail::make_spec(name, 4, {"(1,2)(3,4)", "(1,3)(2,4)"});
  std::vector<std::size_t> rotation(n);
  std::iota(rotation.begin(), rotation.end(), std::size_t{0});
  std::vector<Permutation::Point> reflection(n);
  for (std::size_t i = 0; i < n; ++i) reflection[i] = static_cast<Permutation::Point>((n - i) % n);
  return detail::make_spec(name, n,
                           {detail::cycle_string(rotation), detail::images_string(reflection)});
}

// Dicyclic group of order 4n: <a, x | a^{2n}, x^2 = a^n, a^x = a^-1>, in its
// regular representation.  Element a^i x^j is stored at index i + 2n*j.
inline GroupSpec dicyclic(std::uint64_t order) {
  if (order < 4 || order % 4 != 0) throw ParameterError("dicyclic needs an order divisible by 4");
  const std::uint64_t n = order / 4;
  const std::uint64_t m = 2 * n;
  auto mul = [m, n](std::size_t e, std::size_t f) -> std::size_t {
    const std::uint64_t i = e % m, j = e / m, k = f % m, l = f / m;
    if (j == 0) return (i + k) % m + m * l;
    const std::uint64_t r = (i + m - k) % m;  // a^i x a^k = a^{i-k} x
    if (l == 0) return r + m;
    return (r + n) % m;  // x^2 = a^n
  };
  return detail::make_spec("dicyclic " + std::to_string(order), order,
                           detail::regular_generators(order, {1, m}, mul));
}

inline GroupSpec symmetric(std::uint64_t n) {
  if (n < 1) throw ParameterError("symmetric needs n >= 1");
  const std::string name = "symmetric " + std::to_string(n);
  if (n == 1) return detail::make_spec(name, 1, {""});
  std::vector<std::size_t> cycle(n);
  std::iota(cycle.begin(), cycle.end(), std::size_t{0});
  return detail::make_spec(name, n, {"(1,2)", detail::cycle_string(cycle)});
}

inline GroupSpec alternating(std::uint64_t n) {
  if (n < 1) throw ParameterError("alternating needs n >= 1");
  const std::string name = "alternating " + std::to_string(n);
  if (n < 3) return detail::make_spec(name, n, {""});
  std::vector<std::string> gens;
  for (std::uint64_t i = 3; i <= n; ++i) gens.push_back("(1,2," + std::to_string(i) + ")");
  return detail::make_spec(name, n, gens);
}

inline GroupSpec elementary_abelian(std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p) || k < 1) throw ParameterError("elementary_abelian needs a prime and k >= 1");
  std::vector<std::string> gens;
  for (std::uint64_t b = 0; b < k; ++b) {
    std::vector<std::size_t> cycle(p);
    std::iota(cycle.begin(), cycle.end(), static_cast<std::size_t>(b * p));
    gens.push_back(detail::cycle_string(cycle));
  }
  return detail::make_spec("elementary_abelian " + std::to_string(p) + " " + std::to_string(k),
                           p * k, gens);
}

// C_p x| C_q acting on Z/p by x -> x + 1 and x -> a x with a of order q.
inline GroupSpec frobenius(std::uint64_t p, std::uint64_t q) {
  if (!is_prime(p) || q < 2 || (p - 1) % q != 0)
    throw ParameterError("frobenius needs a prime p and q > 1 dividing p - 1");
  std::uint64_t a = 2;
  while (detail::multiplicative_order(a, p) != q) ++a;
  std::vector<std::size_t> translation(p);
  std::iota(translation.begin(), translation.end(), std::size_t{0});
  std::vector<Permutation::Point> scaling(p);
  for (std::uint64_t x = 0; x < p; ++x) scaling[x] = static_cast<Permutation::Point>(a * x % p);
  return detail::make_spec("frobenius " + std::to_string(p) + " " + std::to_string(q), p,
                           {detail::cycle_string(translation), detail::images_string(scaling)});
}

// C_m x| C_n with y x y^-1 = x^k, regular representation.  Element x^a y^b
// is stored at index a + m*b, and x^a y^b x^c y^d = x^{a + c k^b} y^{b+d}.
inline GroupSpec metacyclic(std::uint64_t m, std::uint64_t n, std::uint64_t k) {
  if (m < 1 || n < 1 || k >= m || std::gcd(k, m) != 1 || detail::pow_mod(k, n, m) != 1 % m)
    throw ParameterError("metacyclic needs 0 <= k < m, gcd(k, m) = 1 and k^n = 1 mod m");
  auto mul = [m, n, k](std::size_t e, std::size_t f) -> std::size_t {
    const std::uint64_t a = e % m, b = e / m, c = f % m, d = f / m;
    return (a + c * detail::pow_mod(k, b, m)) % m + m * ((b + d) % n);
  };
  const std::uint64_t order = m * n;
  const std::string name = "metacyclic " + std::to_string(m) + " " + std::to_string(n) + " " +
                           std::to_string(k);
  return detail::make_spec(name, order, detail::regular_generators(order, {1 % order, m % order}, mul));
}

// PSL(2, p) on the projective line {0, ..., p-1, inf}: z -> z + 1, z -> -1/z.
inline GroupSpec psl2(std::uint64_t p) {
  if (p != 5 && p != 7 && p != 11 && p != 13) throw ParameterError("psl2 supports p in {5,7,11,13}");
  const std::size_t inf = p;
  std::vector<Permutation::Point> translate(p + 1), invert(p + 1);
  for (std::uint64_t z = 0; z < p; ++z) {
    translate[z] = static_cast<Permutation::Point>((z + 1) % p);
    invert[z] = static_cast<Permutation::Point>(
        z == 0 ? inf : (p - detail::pow_mod(z, p - 2, p)) % p);
  }
  translate[inf] = static_cast<Permutation::Point>(inf);
  invert[inf] = 0;
  return detail::make_spec("psl2 " + std::to_string(p), p + 1,
                           {detail::images_string(translate), detail::images_string(invert)});
}

inline GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b) {
  std::vector<std::string> gens;
  for (const auto& g : a.permutations())
    if (!g.is_identity()) gens.push_back(g.to_cycles());
  for (const auto& g : b.permutations()) {
    if (g.is_identity()) continue;
    std::vector<Permutation::Point> images(a.degree + b.degree);
    std::iota(images.begin(), images.end(), Permutation::Point{0});
    for (std::size_t i = 0; i < b.degree; ++i)
      images[a.degree + i] = static_cast<Permutation::Point>(a.degree + g[i]);
    gens.push_back(detail::images_string(images));
  }
  return detail::make_spec("direct_product " + a.name + " " + b.name, a.degree + b.degree, gens);
}

namespace detail {

inline std::uint64_t parse_parameter(const std::string& token) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos ||
      token.size() > 18)
    throw ParameterError("expected a non-negative integer, got '" + token + "'");
  return std::stoull(token);
}

inline GroupSpec parse_family_at(const std::vector<std::string>& tokens, std::size_t& pos) {
  if (pos >= tokens.size()) throw ParameterError("missing family name");
  const std::string name = tokens[pos++];
  auto next = [&]() -> std::uint64_t {
    if (pos >= tokens.size()) throw ParameterError("missing parameter for " + name);
    return parse_parameter(tokens[pos++]);
  };
  if (name == "cyclic") return cyclic(next());
  if (name == "dihedral") return dihedral(next());
  if (name == "dicyclic") return dicyclic(next());
  if (name == "symmetric") return symmetric(next());
  if (name == "alternating") return alternating(next());
  if (name == "psl2") return psl2(next());
  if (name == "elementary_abelian") {
    const auto p = next();
    return elementary_abelian(p, next());
  }
  if (name == "frobenius") {
    const auto p = next();
    return frobenius(p, next());
  }
  if (name == "metacyclic") {
    const auto m = next();
    const auto n = next();
    return metacyclic(m, n, next());
  }
  if (name == "direct_product") {
    GroupSpec a = parse_family_at(tokens, pos);
    GroupSpec b = parse_family_at(tokens, pos);
    return direct_product(a, b);
  }
  throw ParameterError("unknown family '" + name + "'");
}

}  // namespace detail

inline bool is_family_name(const std::string& name) {
  for (const char* f : {"cyclic", "dihedral", "dicyclic", "symmetric", "alternating", "psl2",
                        "elementary_abelian", "frobenius", "metacyclic", "direct_product"})
    if (name == f) return true;
  return false;
}

inline GroupSpec family(const std::vector<std::string>& tokens) {
  std::size_t pos = 0;
  GroupSpec spec = detail::parse_family_at(tokens, pos);
  if (pos != tokens.size()) throw ParameterError("trailing tokens after '" + spec.name + "'");
  return spec;
}

// The order a family member is built to have; used to validate constructors.
inline std::uint64_t advertised_order(const std::vector<std::string>& tokens) {
  std::size_t pos = 0;
  std::function<std::uint64_t()> walk = [&]() -> std::uint64_t {
    const std::string name = tokens.at(pos++);
    auto next = [&] { return detail::parse_parameter(tokens.at(pos++)); };
    std::uint64_t factorial = 1;
    if (name == "cyclic" || name == "dihedral" || name == "dicyclic") return next();
    if (name == "symmetric" || name == "alternating") {
      const auto n = next();
      for (std::uint64_t i = 2; i <= n; ++i) factorial *= i;
      return name == "symmetric" || n < 2 ? factorial : factorial / 2;
    }
    if (name == "psl2") {
      const auto p = next();
      return p * (p * p - 1) / 2;
    }
    if (name == "elementary_abelian") {
      const auto p = next();
      const auto k = next();
      std::uint64_t r = 1;
      for (std::uint64_t i = 0; i < k; ++i) r *= p;
      return r;
    }
    if (name == "frobenius") {
      const auto p = next();
      return p * next();
    }
    if (name == "metacyclic") {
      const auto m = next();
      const auto n = next();
      next();
      return m * n;
    }
    if (name == "direct_product") {
      const auto a = walk();
      return a * walk();
    }
    throw ParameterError("unknown family '" + name + "'");
  };
  return walk();
}

}  // namespace realclass
