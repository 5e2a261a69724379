#pragma once

// Exact extended rationals (Q with the single point 1/0), continued
// fractions, and the action of GL(2,Z) by Mobius transformations.

#include <gmpxx.h>

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace farey {

using Integer = mpz_class;

std::string to_string(const Integer& n);

/// A reduced slope p/q with q >= 0. The point at infinity is stored as 1/0.
class ExtendedRational {
 public:
  /// Defaults to 0/1.
  ExtendedRational() : p_(0), q_(1) {}

  /// Reduces (p, q) to canonical form. Throws DomainError on (0, 0).
  static ExtendedRational reduce(Integer p, Integer q);
  static ExtendedRational infinity() { return ExtendedRational(Integer(1), Integer(0), Canonical{}); }
  static ExtendedRational integer(Integer n) { return ExtendedRational(std::move(n), Integer(1), Canonical{}); }

  /// Accepts "p/q" (either sign on either part) or a bare integer.
  static ExtendedRational parse(std::string_view text);

  const Integer& num() const { return p_; }
  const Integer& den() const { return q_; }
  bool is_infinity() const { return q_ == 0; }
  bool is_integer() const { return q_ == 1; }

  std::string str() const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  /// Lexicographic on (p, q). Used for containers, not numeric order.
  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

  /// Numeric comparison on the finite part; 1/0 compares greater than everything else.
  static int compare_value(const ExtendedRational& a, const ExtendedRational& b);

 private:
  struct Canonical {};
  ExtendedRational(Integer p, Integer q, Canonical) : p_(std::move(p)), q_(std::move(q)) {}

  Integer p_;
  Integer q_;
};

std::string to_string(const ExtendedRational& x);

/// p*s - q*r for x = p/q and y = r/s.
Integer det(const ExtendedRational& x, const ExtendedRational& y);

/// Parses "a1,a2,...", optionally wrapped in brackets; "" and "[]" give an empty list.
std::vector<Integer> parse_integer_list(std::string_view text);

/// Positive partial quotients [a1, ..., an] standing for 1/(a1 + 1/(a2 + ... + 1/an)).
/// The empty list is 0/1. For n >= 2 the last entry is at least 2.
class ContinuedFraction {
 public:
  ContinuedFraction() = default;

  /// Throws DomainError on a non-positive entry. A trailing 1 (n >= 2) is
  /// folded into the previous entry, which keeps the value.
  explicit ContinuedFraction(std::vector<Integer> entries);

  /// parse_integer_list, then the constructor.
  static ContinuedFraction parse(std::string_view text);

  const std::vector<Integer>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Sum of the entries, which is the triangle count of the matching ladder.
  Integer total() const;
  bool all_at_least(long bound) const;

  std::string str() const;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  std::vector<Integer> entries_;
};

/// Requires 0 <= x < 1 and x finite.
ContinuedFraction cf_expand(const ExtendedRational& x);
ExtendedRational cf_eval(const ContinuedFraction& cf);
/// [a1], [a1,a2], ..., [a1..an], evaluated.
std::vector<ExtendedRational> convergents(const ContinuedFraction& cf);

/// x -> (a x + b) / (c x + d) with ad - bc = +-1.
class MobiusMap {
 public:
  MobiusMap() : a_(1), b_(0), c_(0), d_(1) {}
  MobiusMap(Integer a, Integer b, Integer c, Integer d);

  static MobiusMap identity() { return {}; }
  static MobiusMap translation(const Integer& k) { return MobiusMap(1, k, 0, 1); }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }
  Integer determinant() const { return a_ * d_ - b_ * c_; }

  ExtendedRational operator()(const ExtendedRational& x) const;
  MobiusMap inverse() const;
  /// (f * g)(x) = f(g(x)).
  friend MobiusMap operator*(const MobiusMap& f, const MobiusMap& g);

  friend bool operator==(const MobiusMap&, const MobiusMap&) = default;

 private:
  Integer a_, b_, c_, d_;
};

ExtendedRational mobius_apply(const MobiusMap& m, const ExtendedRational& x);

struct NormalizedPair {
  MobiusMap map;           // map(x) == 1/0, determinant +1
  ExtendedRational image;  // map(y), in [0, 1)
};

/// Orientation-preserving normalizer sending x to 1/0 and y into [0, 1).
/// Throws DomainError when x == y.
NormalizedPair normalize_pair(const ExtendedRational& x, const ExtendedRational& y);

}  // namespace farey
