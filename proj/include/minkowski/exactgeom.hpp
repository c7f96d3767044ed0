#pragma once

// Exact rational scalars and vectors.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "minkowski/error.hpp"

namespace minkowski {

/// Arbitrary-precision rational, always in canonical reduced form.
using Rat = mpq_class;

/// Parses "p/q", "p", or a finite decimal such as "-1.25".
Rat parse_rat(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);

inline int sign(const Rat& r) { return sgn(r); }

/// Dense vector of rationals with a fixed dimension.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : coords_(dim) {}
  explicit Vec(std::vector<Rat> coords) : coords_(std::move(coords)) {}
  Vec(std::initializer_list<Rat> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  const Rat& operator[](std::size_t i) const { return coords_[i]; }
  Rat& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rat>& coords() const { return coords_; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Rat& s);

  friend bool operator==(const Vec& a, const Vec& b) { return a.coords_ == b.coords_; }
  /// Lexicographic order; used for canonical vertex ordering.
  friend bool operator<(const Vec& a, const Vec& b);

 private:
  std::vector<Rat> coords_;
};

Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator-(Vec a);
Vec operator*(const Rat& s, Vec a);

Rat dot(const Vec& a, const Vec& b);

/// Concatenation (x, y).
Vec concat(const Vec& x, const Vec& y);

/// Parses "1,-1/2,3" into a vector.
Vec parse_vec(std::string_view csv);

std::string to_string(const Vec& v);

/// Rank of a set of vectors (exact Gaussian elimination).
std::size_t rank(const std::vector<Vec>& rows);

/// Dimension of the affine hull of a nonempty point set.
int affine_dimension(const std::vector<Vec>& points);

/// Solves the square system A x = b; returns false when A is singular.
bool solve_square(std::vector<Vec> a, Vec b, Vec& x);

void require_same_dim(const Vec& a, const Vec& b, const char* what);

}  // namespace minkowski
