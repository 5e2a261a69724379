#include "farey/rational.hpp"

#include <algorithm>
#include <cctype>

#include "farey/errors.hpp"

namespace farey {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view text) {
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw DomainError("not an integer: '" + std::string(text) + "'");
  }
  Integer n(std::string(text), 10);
  if (negative) n = -n;
  return n;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

std::string to_string(const Integer& n) { return n.get_str(10); }

ExtendedRational ExtendedRational::reduce(Integer p, Integer q) {
  if (p == 0 && q == 0) throw DomainError("0/0 is not a slope");
  if (q == 0) return infinity();
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) {
    mpz_divexact(p.get_mpz_t(), p.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), g.get_mpz_t());
  }
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return ExtendedRational(std::move(p), std::move(q), Canonical{});
}

ExtendedRational ExtendedRational::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return integer(parse_integer(text));
  return reduce(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string ExtendedRational::str() const { return p_.get_str(10) + "/" + q_.get_str(10); }

std::string to_string(const ExtendedRational& x) { return x.str(); }

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
  if (const int c = cmp(a.p_, b.p_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  const int c = cmp(a.q_, b.q_);
  if (c == 0) return std::strong_ordering::equal;
  return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

int ExtendedRational::compare_value(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.is_infinity() || b.is_infinity()) return static_cast<int>(a.is_infinity()) - static_cast<int>(b.is_infinity());
  const int c = cmp(Integer(a.p_ * b.q_), Integer(b.p_ * a.q_));
  return (c > 0) - (c < 0);
}

Integer det(const ExtendedRational& x, const ExtendedRational& y) { return x.num() * y.den() - x.den() * y.num(); }

ContinuedFraction::ContinuedFraction(std::vector<Integer> entries) : entries_(std::move(entries)) {
  for (const auto& a : entries_) {
    if (a <= 0) throw DomainError("continued fraction entries must be positive, got " + to_string(a));
  }
  if (entries_.size() >= 2 && entries_.back() == 1) {
    entries_.pop_back();
    entries_.back() += 1;
  }
}

std::vector<Integer> parse_integer_list(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw DomainError("unbalanced brackets in '" + std::string(text) + "'");
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<Integer> entries;
  while (!text.empty()) {
    const auto comma = text.find(',');
    entries.push_back(parse_integer(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (trim(text).empty()) throw DomainError("trailing comma in integer list");
  }
  return entries;
}

ContinuedFraction ContinuedFraction::parse(std::string_view text) { return ContinuedFraction(parse_integer_list(text)); }

Integer ContinuedFraction::total() const {
  Integer sum = 0;
  for (const auto& a : entries_) sum += a;
  return sum;
}

bool ContinuedFraction::all_at_least(long bound) const {
  return std::all_of(entries_.begin(), entries_.end(), [bound](const Integer& a) { return a >= bound; });
}

std::string ContinuedFraction::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += entries_[i].get_str(10);
  }
  out += ']';
  return out;
}

ContinuedFraction cf_expand(const ExtendedRational& x) {
  if (x.is_infinity() || x.num() < 0 || x.num() >= x.den()) {
    throw DomainError("continued fraction expansion needs 0 <= x < 1, got " + x.str());
  }
  // 1 / (q/p): Euclid on (q, p).
  std::vector<Integer> entries;
  Integer a = x.den();
  Integer b = x.num();
  Integer quot, rem;
  while (b != 0) {
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    entries.push_back(quot);
    a = std::move(b);
    b = rem;
  }
  return ContinuedFraction(std::move(entries));
}

ExtendedRational cf_eval(const ContinuedFraction& cf) {
  Integer num = 0;
  Integer den = 1;
  const auto& e = cf.entries();
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    Integer next_den = *it * den + num;
    num = std::move(den);
    den = std::move(next_den);
  }
  return ExtendedRational::reduce(std::move(num), std::move(den));
}

std::vector<ExtendedRational> convergents(const ContinuedFraction& cf) {
  std::vector<ExtendedRational> out;
  out.reserve(cf.size());
  Integer prev_h = 1, prev_k = 0;
  Integer h = 0, k = 1;
  for (const auto& a : cf.entries()) {
    Integer next_h = a * h + prev_h;
    Integer next_k = a * k + prev_k;
    prev_h = std::move(h);
    prev_k = std::move(k);
    h = std::move(next_h);
    k = std::move(next_k);
    out.push_back(ExtendedRational::reduce(h, k));
  }
  return out;
}

MobiusMap::MobiusMap(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const Integer dt = determinant();
  if (dt != 1 && dt != -1) throw DomainError("Mobius map must have determinant +-1, got " + to_string(dt));
  // Projective: (a,b,c,d) and -(a,b,c,d) act the same way. Keep c > 0, or c == 0 and d > 0.
  if (c_ < 0 || (c_ == 0 && d_ < 0)) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

ExtendedRational MobiusMap::operator()(const ExtendedRational& x) const {
  return ExtendedRational::reduce(a_ * x.num() + b_ * x.den(), c_ * x.num() + d_ * x.den());
}

MobiusMap MobiusMap::inverse() const {
  // For determinant e = +-1 the inverse matrix is e * (d, -b, -c, a); projectively the sign drops.
  return MobiusMap(d_, -b_, -c_, a_);
}

MobiusMap operator*(const MobiusMap& f, const MobiusMap& g) {
  return MobiusMap(f.a_ * g.a_ + f.b_ * g.c_, f.a_ * g.b_ + f.b_ * g.d_, f.c_ * g.a_ + f.d_ * g.c_,
                   f.c_ * g.b_ + f.d_ * g.d_);
}

ExtendedRational mobius_apply(const MobiusMap& m, const ExtendedRational& x) { return m(x); }

NormalizedPair normalize_pair(const ExtendedRational& x, const ExtendedRational& y) {
  if (x == y) throw DomainError("cannot normalize a pair with equal endpoints " + x.str());
  MobiusMap to_infinity;
  if (!x.is_infinity()) {
    // a*u + b*v = 1 for x = a/b; then (-u, -v; b, -a) has determinant 1 and sends x to 1/0.
    Integer g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    to_infinity = MobiusMap(-u, -v, x.den(), -x.num());
  }
  const ExtendedRational moved = to_infinity(y);
  const Integer shift = -floor_div(moved.num(), moved.den());
  MobiusMap map = MobiusMap::translation(shift) * to_infinity;
  ExtendedRational image = map(y);
  return {std::move(map), std::move(image)};
}

}  // namespace farey
