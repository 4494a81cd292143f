#pragma once
//
// Exact algebra of Pauli strings and sparse real vectors over the i*Pauli basis.
//
// Conventions used throughout this library:
//
//  * A Pauli string on n qubits is encoded by two bitmasks (x, z); bit (u-1)
//    describes vertex/qubit u of the paper-style 1-indexed labelling.  The
//    letter at a qubit is I=(0,0), X=(1,0), Z=(0,1), Y=(1,1), where Y is the
//    honest Pauli matrix Y = [[0,-i],[i,0]].  Equivalently, the string is
//    W(x,z) = i^{|x&z|} X^x Z^z, a Hermitian tensor product of I/X/Y/Z.
//
//  * Lie-algebra elements are REAL linear combinations sum_j c_j * (i P_j);
//    the global factor i is implicit and never materialized, so all kernel
//    arithmetic is real.  Commutant elements reuse the same container for
//    sum_j c_j * P_j; the global-i convention is irrelevant to spans and to
//    commutation constraints.
//
//  * Products obey W(x1,z1) W(x2,z2) = i^g W(x1^x2, z1^z2) with
//    g = 2*|z1&x2| + |x1&z1| + |x2&z2| - |x3&z3| (mod 4).  Two strings
//    anticommute iff |x1&z2| + |z1&x2| is odd, in which case g is odd and
//      [iP, iQ] = (-2 * i^{g-1}) * (i R),  R = P xor Q,
//    with the real factor -2*i^{g-1} in {+2, -2}.
//
//  * Total order on strings: lexicographic on (n, z, x).  The smallest string
//    present in a vector is its pivot; echelon bases normalize pivots to 1.
//
// Coefficients are either exact rationals (default), double (float mode, used
// by fixtures with irrational entries and by dense-derived vectors), or exact
// complex rationals (commutant spans).  The containers below are templated on
// the coefficient type; "mode" in the external documentation corresponds to
// the chosen instantiation.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qaoadla {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact complex rational, used for commutant elements sum c_P * P whose
/// coefficients are genuinely complex (e.g. permutation operators expanded in
/// the Pauli basis).  Only the ring operations needed by span arithmetic are
/// provided.
struct CRat {
  Rat re{0}, im{0};

  CRat() = default;
  CRat(int v) : re(v) {}  // NOLINT: implicit from small ints is convenient
  CRat(Rat r) : re(std::move(r)) {}
  CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  friend CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
  friend CRat operator-(const CRat& a) { return {-a.re, -a.im}; }
  friend CRat operator*(const CRat& a, const CRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CRat operator/(const CRat& a, const CRat& b) {
    Rat d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  CRat& operator+=(const CRat& b) { re += b.re; im += b.im; return *this; }
  CRat& operator-=(const CRat& b) { re -= b.re; im -= b.im; return *this; }
  friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
};

/// Coefficient-type traits: exactness and zero tests.  Float-mode zero tests
/// are relative to a caller-provided scale (max-abs of the vector being
/// reduced), matching the 1e-9 relative tolerance contract.
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rat> {
  static constexpr bool exact = true;
  static bool is_zero(const Rat& c, double /*scale*/) { return c == 0; }
  static double abs_value(const Rat& c) {
    return c < 0 ? -c.convert_to<double>() : c.convert_to<double>();
  }
};

template <>
struct CoeffTraits<CRat> {
  static constexpr bool exact = true;
  static bool is_zero(const CRat& c, double /*scale*/) { return c.is_zero(); }
  static double abs_value(const CRat& c) {
    return CoeffTraits<Rat>::abs_value(c.re) + CoeffTraits<Rat>::abs_value(c.im);
  }
};

template <>
struct CoeffTraits<double> {
  static constexpr bool exact = false;
  static constexpr double kRelTol = 1e-9;
  static bool is_zero(double c, double scale) {
    return std::abs(c) <= kRelTol * (scale > 0 ? scale : 1.0);
  }
  static double abs_value(double c) { return std::abs(c); }
};

/// A Pauli string: tensor product of I/X/Y/Z over n qubits, encoded as two
/// bitmasks.  Immutable value type.
struct PauliString {
  std::uint32_t x = 0;
  std::uint32_t z = 0;
  int n = 0;

  PauliString() = default;
  PauliString(int n_, std::uint32_t x_, std::uint32_t z_) : x(x_), z(z_), n(n_) {
    if (n_ < 0 || n_ > 16) throw std::invalid_argument("PauliString: qubit count out of range");
    std::uint32_t allowed = (n_ == 32) ? ~0u : ((1u << n_) - 1u);
    if ((x_ & ~allowed) || (z_ & ~allowed))
      throw std::invalid_argument("PauliString: mask bits beyond qubit count");
  }

  static PauliString identity(int n) { return PauliString(n, 0, 0); }

  /// Single-letter string: letter in {'I','X','Y','Z'} at 1-indexed vertex u.
  static PauliString single(int n, int u, char letter) {
    std::uint32_t b = 1u << (u - 1);
    switch (letter) {
      case 'I': return PauliString(n, 0, 0);
      case 'X': return PauliString(n, b, 0);
      case 'Y': return PauliString(n, b, b);
      case 'Z': return PauliString(n, 0, b);
      default: throw std::invalid_argument("PauliString: bad letter");
    }
  }

  /// Parse "XIZ"-style letter strings, leftmost letter = vertex 1.
  static PauliString from_letters(const std::string& s) {
    PauliString p(static_cast<int>(s.size()), 0, 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::uint32_t b = 1u << i;
      switch (s[i]) {
        case 'I': break;
        case 'X': p.x |= b; break;
        case 'Y': p.x |= b; p.z |= b; break;
        case 'Z': p.z |= b; break;
        default: throw std::invalid_argument("PauliString: bad letter");
      }
    }
    return p;
  }

  char letter(int u) const {
    std::uint32_t b = 1u << (u - 1);
    bool bx = x & b, bz = z & b;
    return bx ? (bz ? 'Y' : 'X') : (bz ? 'Z' : 'I');
  }

  std::string to_letters() const {
    std::string s(static_cast<std::size_t>(n), 'I');
    for (int u = 1; u <= n; ++u) s[static_cast<std::size_t>(u - 1)] = letter(u);
    return s;
  }

  bool is_identity() const { return x == 0 && z == 0; }

  bool commutes(const PauliString& o) const {
    return ((std::popcount(x & o.z) + std::popcount(z & o.x)) & 1) == 0;
  }

  /// Phase exponent g (mod 4) of the product: this * o = i^g * (this xor o).
  int phase_exponent(const PauliString& o) const {
    std::uint32_t x3 = x ^ o.x, z3 = z ^ o.z;
    int g = 2 * std::popcount(z & o.x) + std::popcount(x & z) + std::popcount(o.x & o.z) -
            std::popcount(x3 & z3);
    return ((g % 4) + 4) % 4;
  }

  PauliString xor_with(const PauliString& o) const { return PauliString(n, x ^ o.x, z ^ o.z); }

  struct LetterCounts {
    int nI = 0, nX = 0, nY = 0, nZ = 0;
  };

  LetterCounts letter_counts() const {
    LetterCounts c;
    c.nY = std::popcount(x & z);
    c.nX = std::popcount(x) - c.nY;
    c.nZ = std::popcount(z) - c.nY;
    c.nI = n - c.nX - c.nY - c.nZ;
    return c;
  }

  /// Letter counts restricted to the vertex subset given as a bitmask over
  /// bits (u-1).
  LetterCounts letter_counts(std::uint32_t subset) const {
    if (n < 32 && (subset >> n) != 0)
      throw std::invalid_argument("letter_counts: subset vertex out of range");
    LetterCounts c;
    c.nY = std::popcount(x & z & subset);
    c.nX = std::popcount(x & subset) - c.nY;
    c.nZ = std::popcount(z & subset) - c.nY;
    c.nI = std::popcount(subset) - c.nX - c.nY - c.nZ;
    return c;
  }

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.n == b.n && a.x == b.x && a.z == b.z;
  }
  /// Total order (n, z, x), the pivot order for echelon bases.
  friend bool operator<(const PauliString& a, const PauliString& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.z != b.z) return a.z < b.z;
    return a.x < b.x;
  }
};

/// Real factor of the Lie bracket of two anticommuting strings:
/// [iP, iQ] = factor * (i (P xor Q)), factor in {+2, -2}.
inline int bracket_factor(const PauliString& p, const PauliString& q) {
  int g = p.phase_exponent(q);  // odd for anticommuting pairs
  return (g == 1) ? -2 : 2;
}

/// Sparse vector over the (i*)Pauli basis with coefficients of type C.
/// Terms are kept sorted by the string total order with no explicit zeros.
template <class C>
struct PauliVec {
  int n = 0;
  std::vector<std::pair<PauliString, C>> terms;

  PauliVec() = default;
  explicit PauliVec(int n_) : n(n_) {}

  static PauliVec monomial(const PauliString& p, C coeff = C(1)) {
    PauliVec v(p.n);
    if (!CoeffTraits<C>::is_zero(coeff, 0)) v.terms.emplace_back(p, std::move(coeff));
    return v;
  }

  bool empty() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }

  double max_abs() const {
    double m = 0;
    for (const auto& [p, c] : terms) m = std::max(m, CoeffTraits<C>::abs_value(c));
    return m;
  }

  const C* coeff_of(const PauliString& p) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), p,
                               [](const auto& t, const PauliString& s) { return t.first < s; });
    if (it != terms.end() && it->first == p) return &it->second;
    return nullptr;
  }

  /// The smallest string present (the pivot position).  Precondition: nonempty.
  const PauliString& pivot() const { return terms.front().first; }

  void scale(const C& f) {
    for (auto& t : terms) t.second = t.second * f;
  }

  /// this += f * other, dropping exact zeros (float-mode cleanup is done by
  /// the echelon layer, which knows the right scale).
  void add_scaled(const PauliVec& other, const C& f) {
    if (other.n != n) throw std::invalid_argument("PauliVec: qubit-count mismatch");
    std::vector<std::pair<PauliString, C>> out;
    out.reserve(terms.size() + other.terms.size());
    auto a = terms.begin();
    auto b = other.terms.begin();
    while (a != terms.end() || b != other.terms.end()) {
      if (b == other.terms.end() || (a != terms.end() && a->first < b->first)) {
        out.push_back(*a++);
      } else if (a == terms.end() || b->first < a->first) {
        C c = b->second * f;
        if (!(c == C(0))) out.emplace_back(b->first, std::move(c));
        ++b;
      } else {
        C c = a->second + b->second * f;
        if (!(c == C(0))) out.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    terms = std::move(out);
  }

  friend PauliVec operator+(PauliVec a, const PauliVec& b) {
    a.add_scaled(b, C(1));
    return a;
  }
  friend PauliVec operator-(PauliVec a, const PauliVec& b) {
    a.add_scaled(b, C(-1));
    return a;
  }
  friend PauliVec operator*(C f, PauliVec v) {
    v.scale(f);
    v.drop_zeros();
    return v;
  }

  void drop_zeros() {
    std::erase_if(terms, [](const auto& t) { return t.second == C(0); });
  }

  /// Assemble from unsorted (possibly duplicated) term list.
  static PauliVec from_terms(int n, std::vector<std::pair<PauliString, C>> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    PauliVec v(n);
    for (auto& [p, c] : raw) {
      if (!v.terms.empty() && v.terms.back().first == p)
        v.terms.back().second += c;
      else
        v.terms.emplace_back(p, std::move(c));
    }
    v.drop_zeros();
    return v;
  }
};

/// Lie bracket [i a, i b] expressed again over the i*Pauli basis.  Commuting
/// string pairs contribute nothing; anticommuting pairs contribute +-2 times a
/// single string.
template <class C>
PauliVec<C> commutator(const PauliVec<C>& a, const PauliVec<C>& b) {
  if (a.n != b.n) throw std::invalid_argument("commutator: qubit-count mismatch");
  std::vector<std::pair<PauliString, C>> raw;
  raw.reserve(a.terms.size() * b.terms.size());
  for (const auto& [p, cp] : a.terms)
    for (const auto& [q, cq] : b.terms) {
      if (p.commutes(q)) continue;
      raw.emplace_back(p.xor_with(q), cp * cq * C(bracket_factor(p, q)));
    }
  return PauliVec<C>::from_terms(a.n, std::move(raw));
}

using RatVec = PauliVec<Rat>;
using FloatVec = PauliVec<double>;
using CRatVec = PauliVec<CRat>;

}  // namespace qaoadla
