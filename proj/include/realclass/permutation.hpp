#pragma once

// Permutations of {0, ..., degree-1}.
//
// Composition convention: compose(a, b) applies a first, then b, so
// compose(a, b)[i] == b[a[i]].  Conjugation is x^g = g^-1 x g under this
// convention and the commutator is [a, b] = a^-1 b^-1 a b.
//
// Points are 0-based in memory and 1-based in every textual form.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace realclass {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::string token)
      : std::runtime_error(message + ": '" + token + "'"), token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

class DegreeMismatch : public std::invalid_argument {
 public:
  DegreeMismatch(std::size_t lhs, std::size_t rhs)
      : std::invalid_argument("degree mismatch: " + std::to_string(lhs) + " vs " +
                              std::to_string(rhs)) {}
};

class Permutation {
 public:
  using Point = std::uint32_t;

  Permutation() : images_{0} {}

  static Permutation identity(std::size_t degree) {
    if (degree == 0) throw std::invalid_argument("permutation degree must be positive");
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), Point{0});
    return p;
  }

  // Throws std::invalid_argument unless images is a bijection on 0..n-1.
  static Permutation from_images(std::vector<Point> images) {
    if (images.empty()) throw std::invalid_argument("permutation degree must be positive");
    std::vector<bool> seen(images.size(), false);
    for (Point x : images) {
      if (x >= images.size() || seen[x])
        throw std::invalid_argument("images do not form a bijection");
      seen[x] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  // Disjoint-cycle form over 1-based points, e.g. "(1,2,3)(4,5)"; "()" for identity.
  std::string to_cycles() const {
    std::string out;
    std::vector<bool> done(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
      if (done[start] || images_[start] == start) continue;
      out += '(';
      std::size_t i = start;
      bool first = true;
      while (!done[i]) {
        done[i] = true;
        if (!first) out += ',';
        out += std::to_string(i + 1);
        first = false;
        i = images_[i];
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// a first, then b.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch(a.degree(), b.degree());
  Permutation r;
  r.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) r.images_[i] = b.images_[a.images_[i]];
  return r;
}

inline Permutation inverse(const Permutation& p) {
  Permutation r;
  r.images_.resize(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i)
    r.images_[p.images_[i]] = static_cast<Permutation::Point>(i);
  return r;
}

// g^-1 x g
inline Permutation conjugate(const Permutation& x, const Permutation& g) {
  return compose(compose(inverse(g), x), g);
}

inline Permutation commutator(const Permutation& a, const Permutation& b) {
  return compose(compose(inverse(a), inverse(b)), compose(a, b));
}

// Least k >= 1 with p^k = identity, i.e. the lcm of the cycle lengths.
inline std::uint64_t element_order(const Permutation& p) {
  std::uint64_t order = 1;
  std::vector<bool> done(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (done[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t i = start; !done[i]; i = p[i]) {
      done[i] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

inline Permutation power(const Permutation& p, std::int64_t k) {
  const auto n = static_cast<std::int64_t>(element_order(p));
  k %= n;
  if (k < 0) k += n;
  Permutation result = Permutation::identity(p.degree());
  Permutation base = p;
  for (auto e = static_cast<std::uint64_t>(k); e != 0; e >>= 1) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
  }
  return result;
}

// Parses disjoint-cycle notation over 1-based points, e.g. "(1,2,3)(4,5)".
// The empty string and "()" denote the identity.  Points not mentioned are fixed.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0) throw std::invalid_argument("permutation degree must be positive");
  std::vector<Permutation::Point> images(degree);
  std::iota(images.begin(), images.end(), Permutation::Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '('", std::string(text.substr(pos, 1)));
    ++pos;
    std::vector<std::size_t> cycle;
    skip_space();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;  // "()" is the identity cycle
      skip_space();
      continue;
    }
    for (;;) {
      skip_space();
      const std::size_t begin = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      const std::string token(text.substr(begin, pos - begin));
      if (token.empty()) {
        const std::string bad = pos < text.size() ? std::string(1, text[pos]) : "<end>";
        throw ParseError("expected a point", bad);
      }
      if (token.size() > 9) throw ParseError("point exceeds degree", token);
      const std::size_t point = std::stoul(token);
      if (point == 0 || point > degree) throw ParseError("point out of range", token);
      if (used[point - 1]) throw ParseError("repeated point", token);
      used[point - 1] = true;
      cycle.push_back(point - 1);
      skip_space();
      if (pos >= text.size()) throw ParseError("unterminated cycle", "<end>");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      throw ParseError("unexpected character", std::string(1, text[pos]));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = static_cast<Permutation::Point>(cycle[(i + 1) % cycle.size()]);
    skip_space();
  }
  return Permutation::from_images(std::move(images));
}

}  // namespace realclass
