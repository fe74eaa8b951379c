#pragma once

// Trace words w(X, X*) over the letters x_1..x_d, x_1*..x_d*, their canonical
// representatives, and trace fingerprints of matrix tuples.
//
// Two words name the same trace invariant when one is a cyclic rotation of the
// other, or of its star-reversal (reverse the letters and toggle every star):
// tr(AB) = tr(BA) and tr(M*) = conj(tr(M)). The canonical representative is
// the minimum of that orbit under the word order below.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simconj/matrix.hpp"

namespace simconj {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// x_index (1-based), optionally starred. Orders by index, then unstarred first.
struct Letter {
  std::uint32_t index = 1;
  bool starred = false;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Nonempty sequence of letters. Ordered by degree, then lexicographically.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  std::size_t degree() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  /// Largest letter index used.
  std::uint32_t max_index() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

/// Parses the text form "x1 x2* x1".
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

Word rotate(const Word& w, std::size_t k);
Word star_reverse(const Word& w);
Word canonicalize(const Word& w);
bool is_canonical(const Word& w);

/// Sorted canonical representatives of every word of degree 1..max_degree
/// over d letters (2d letters when include_star). Throws BudgetExceeded when
/// alphabet^max_degree exceeds budget.
std::vector<Word> enumerate_canonical(std::size_t d, std::size_t max_degree, bool include_star,
                                      std::uint64_t budget = kDefaultEnumerationBudget);

/// Product of the tuple members (or their stars) in letter order.
template <Field T>
Matrix<T> eval_word(const Word& w, const MatrixTuple<T>& x);

template <Field T>
struct Fingerprint {
  std::size_t arity = 0;
  std::size_t degree_bound = 0;
  bool include_star = true;
  std::map<Word, T> entries;
};

/// Maps every canonical word up to max_degree to tr(w(X, X*)).
template <Field T>
Fingerprint<T> fingerprint(const MatrixTuple<T>& x, std::size_t max_degree, bool include_star,
                           std::uint64_t budget = kDefaultEnumerationBudget);

template <Field T>
struct FingerprintMismatch {
  Word word;
  T lhs;
  T rhs;
};

template <Field T>
struct FingerprintComparison {
  bool equal = true;
  std::optional<FingerprintMismatch<T>> first_difference;
};

/// Exact comparison for rationals, absolute tolerance tol for floats. Reports
/// the order-first differing word. Throws ShapeError if the fingerprints were
/// built with different parameters.
template <Field T>
FingerprintComparison<T> fingerprints_equal(const Fingerprint<T>& a, const Fingerprint<T>& b, double tol = 1e-9);

#define SIMCONJ_EXTERN_WORDS(T)                                                                       \
  extern template Matrix<T> eval_word<T>(const Word&, const MatrixTuple<T>&);                         \
  extern template Fingerprint<T> fingerprint<T>(const MatrixTuple<T>&, std::size_t, bool, std::uint64_t); \
  extern template FingerprintComparison<T> fingerprints_equal<T>(const Fingerprint<T>&, const Fingerprint<T>&, double);

SIMCONJ_EXTERN_WORDS(Rational)
SIMCONJ_EXTERN_WORDS(Real)
SIMCONJ_EXTERN_WORDS(Complex)
#undef SIMCONJ_EXTERN_WORDS

}  // namespace simconj
