#include "simconj/words.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace simconj {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw Error("a word must have at least one letter");
  for (const auto& l : letters_) {
    if (l.index == 0) throw Error("letter indices start at 1");
  }
}

std::uint32_t Word::max_index() const {
  std::uint32_t m = 0;
  for (const auto& l : letters_) m = std::max(m, l.index);
  return m;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                b.letters_.end());
}

Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::string_view t = tok;
    Letter l;
    if (t.size() < 2 || t[0] != 'x') throw ParseError("malformed letter '" + tok + "'");
    t.remove_prefix(1);
    if (t.back() == '*') {
      l.starred = true;
      t.remove_suffix(1);
    }
    auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), l.index);
    if (ec != std::errc() || end != t.data() + t.size() || l.index == 0) {
      throw ParseError("malformed letter '" + tok + "'");
    }
    letters.push_back(l);
  }
  if (letters.empty()) throw ParseError("empty word");
  return Word(std::move(letters));
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.degree(); ++i) {
    if (i) out += ' ';
    out += 'x';
    out += std::to_string(w[i].index);
    if (w[i].starred) out += '*';
  }
  return out;
}

Word rotate(const Word& w, std::size_t k) {
  const auto& l = w.letters();
  std::vector<Letter> out(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) out[i] = l[(i + k) % l.size()];
  return Word(std::move(out));
}

Word star_reverse(const Word& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  for (auto& l : out) l.starred = !l.starred;
  return Word(std::move(out));
}

namespace {

// Three-way comparison of a against the rotation of b starting at offset k,
// without materializing the rotation.
std::strong_ordering compare_rotation(const std::vector<Letter>& a, const std::vector<Letter>& b, std::size_t k) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a[i] <=> b[(i + k) % n]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool canonical_letters(const std::vector<Letter>& w, std::vector<Letter>& scratch) {
  const std::size_t n = w.size();
  for (std::size_t k = 1; k < n; ++k) {
    if (compare_rotation(w, w, k) > 0) return false;
  }
  scratch.assign(w.rbegin(), w.rend());
  for (auto& l : scratch) l.starred = !l.starred;
  for (std::size_t k = 0; k < n; ++k) {
    if (compare_rotation(w, scratch, k) > 0) return false;
  }
  return true;
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

std::vector<Letter> alphabet(std::size_t d, bool include_star) {
  std::vector<Letter> a;
  for (std::uint32_t i = 1; i <= d; ++i) {
    a.push_back({i, false});
    if (include_star) a.push_back({i, true});
  }
  return a;
}

void check_budget(std::size_t d, std::size_t max_degree, bool include_star, std::uint64_t budget) {
  if (d == 0 || max_degree == 0) throw Error("word enumeration needs d >= 1 and degree bound >= 1");
  const std::uint64_t raw = checked_power(include_star ? 2 * d : d, max_degree, budget);
  if (raw > budget) {
    throw BudgetExceeded("enumeration budget exceeded: " + std::to_string(include_star ? 2 * d : d) + "^" +
                         std::to_string(max_degree) + " raw words > " + std::to_string(budget));
  }
}

}  // namespace

bool is_canonical(const Word& w) {
  std::vector<Letter> scratch;
  return canonical_letters(w.letters(), scratch);
}

Word canonicalize(const Word& w) {
  Word best = w;
  const Word rev = star_reverse(w);
  for (std::size_t k = 0; k < w.degree(); ++k) {
    best = std::min({best, rotate(w, k), rotate(rev, k)});
  }
  return best;
}

std::vector<Word> enumerate_canonical(std::size_t d, std::size_t max_degree, bool include_star,
                                      std::uint64_t budget) {
  check_budget(d, max_degree, include_star, budget);
  const auto letters = alphabet(d, include_star);
  const std::size_t base = letters.size();
  std::vector<Word> out;
  std::vector<Letter> current, scratch;
  for (std::size_t degree = 1; degree <= max_degree; ++degree) {
    std::vector<std::size_t> digits(degree, 0);
    current.assign(degree, letters[0]);
    while (true) {
      if (canonical_letters(current, scratch)) out.emplace_back(current);
      bool done = true;
      for (std::size_t pos = degree; pos-- > 0;) {
        if (++digits[pos] < base) {
          current[pos] = letters[digits[pos]];
          done = false;
          break;
        }
        digits[pos] = 0;
        current[pos] = letters[0];
      }
      if (done) break;
    }
  }
  // Odometer order within each degree is already lexicographic in the letter order.
  return out;
}

template <Field T>
Matrix<T> eval_word(const Word& w, const MatrixTuple<T>& x) {
  if (w.max_index() > x.arity()) throw Error("word uses a letter beyond the tuple arity");
  auto factor = [&](const Letter& l) {
    return l.starred ? star(x[l.index - 1], x.star_mode()) : x[l.index - 1];
  };
  Matrix<T> out = factor(w[0]);
  for (std::size_t i = 1; i < w.degree(); ++i) out = out * factor(w[i]);
  return out;
}

template <Field T>
Fingerprint<T> fingerprint(const MatrixTuple<T>& x, std::size_t max_degree, bool include_star,
                           std::uint64_t budget) {
  check_budget(x.arity(), max_degree, include_star, budget);
  Fingerprint<T> fp;
  fp.arity = x.arity();
  fp.degree_bound = max_degree;
  fp.include_star = include_star;

  const auto letters = alphabet(x.arity(), include_star);
  std::vector<Matrix<T>> letter_mats;
  for (const auto& l : letters) letter_mats.push_back(l.starred ? star(x[l.index - 1], x.star_mode()) : x[l.index - 1]);

  // Depth-first over all raw words, carrying prefix products.
  std::vector<Letter> current, scratch;
  std::vector<Matrix<T>> prefix;
  auto visit = [&](auto&& self, std::size_t letter) -> void {
    current.push_back(letters[letter]);
    prefix.push_back(prefix.empty() ? letter_mats[letter] : prefix.back() * letter_mats[letter]);
    if (canonical_letters(current, scratch)) fp.entries.emplace(Word(current), trace(prefix.back()));
    if (current.size() < max_degree) {
      for (std::size_t next = 0; next < letters.size(); ++next) self(self, next);
    }
    current.pop_back();
    prefix.pop_back();
  };
  for (std::size_t first = 0; first < letters.size(); ++first) visit(visit, first);
  return fp;
}

template <Field T>
FingerprintComparison<T> fingerprints_equal(const Fingerprint<T>& a, const Fingerprint<T>& b, double tol) {
  if (a.arity != b.arity || a.degree_bound != b.degree_bound || a.include_star != b.include_star ||
      a.entries.size() != b.entries.size()) {
    throw ShapeError("fingerprints were built with different parameters");
  }
  FingerprintComparison<T> out;
  auto ib = b.entries.begin();
  for (auto ia = a.entries.begin(); ia != a.entries.end(); ++ia, ++ib) {
    if (ia->first != ib->first) throw ShapeError("fingerprint key sets differ");
    bool same;
    if constexpr (is_exact_v<T>) {
      same = ia->second == ib->second;
    } else {
      same = magnitude(T(ia->second - ib->second)) <= tol;
    }
    if (!same) {
      out.equal = false;
      out.first_difference = FingerprintMismatch<T>{ia->first, ia->second, ib->second};
      return out;
    }
  }
  return out;
}

#define SIMCONJ_INSTANTIATE_WORDS(T)                                                                \
  template Matrix<T> eval_word<T>(const Word&, const MatrixTuple<T>&);                              \
  template Fingerprint<T> fingerprint<T>(const MatrixTuple<T>&, std::size_t, bool, std::uint64_t);  \
  template FingerprintComparison<T> fingerprints_equal<T>(const Fingerprint<T>&, const Fingerprint<T>&, double);

SIMCONJ_INSTANTIATE_WORDS(Rational)
SIMCONJ_INSTANTIATE_WORDS(Real)
SIMCONJ_INSTANTIATE_WORDS(Complex)

}  // namespace simconj
