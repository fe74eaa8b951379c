#include "simconj/scalar.hpp"

#include <array>
#include <charconv>
#include <cctype>

namespace simconj {

FieldKind FieldKind::make(Kind kind, StarMode star) {
  if (kind != Kind::Complex128 && star != StarMode::Transpose) {
    throw Error("star mode 'conjugate' is only valid for complex128");
  }
  return FieldKind{kind, star};
}

FieldKind FieldKind::make(Kind kind) {
  return FieldKind{kind, kind == Kind::Complex128 ? StarMode::ConjugateTranspose : StarMode::Transpose};
}

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::Rational:
      return "rational";
    case Kind::Real64:
      return "float64";
    case Kind::Complex128:
      return "complex128";
  }
  return "?";
}

std::string_view to_string(StarMode mode) {
  return mode == StarMode::Transpose ? "transpose" : "conjugate";
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.remove_prefix(1);
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw ParseError("rational '" + std::string(text) + "' has zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& x) { return x.get_str(10); }

std::string format_real(double x) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) throw Error("cannot format floating-point value");
  return std::string(buf.data(), end);
}

std::string format_value(const Rational& x) { return format_rational(x); }
std::string format_value(Real x) { return format_real(x); }
std::string format_value(const Complex& x) {
  return "[" + format_real(x.real()) + ", " + format_real(x.imag()) + "]";
}

bool FieldValue::is_zero() const {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return FieldTraits<T>::is_zero(x, 0.0);
      },
      value_);
}

FieldValue FieldValue::conj() const {
  return std::visit([](const auto& x) { return FieldValue(FieldTraits<std::decay_t<decltype(x)>>::conj(x)); },
                    value_);
}

std::string FieldValue::to_string() const {
  return std::visit([](const auto& x) { return format_value(x); }, value_);
}

namespace {

template <class Op>
FieldValue combine(const FieldValue& a, const FieldValue& b, Op op) {
  if (a.kind() != b.kind()) {
    throw KindMismatch(std::string("cannot combine ") + std::string(to_string(a.kind())) + " with " +
                       std::string(to_string(b.kind())));
  }
  return std::visit(
      [&](const auto& x) -> FieldValue {
        using T = std::decay_t<decltype(x)>;
        return FieldValue(T(op(x, std::get<T>(b.storage()))));
      },
      a.storage());
}

}  // namespace

FieldValue operator+(const FieldValue& a, const FieldValue& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}
FieldValue operator-(const FieldValue& a, const FieldValue& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}
FieldValue operator*(const FieldValue& a, const FieldValue& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}
FieldValue operator/(const FieldValue& a, const FieldValue& b) {
  return combine(a, b, [](const auto& x, const auto& y) {
    using T = std::decay_t<decltype(x)>;
    return checked_div<T>(x, y);
  });
}

bool operator==(const FieldValue& a, const FieldValue& b) {
  if (a.kind() != b.kind()) return false;
  return a.storage() == b.storage();
}

}  // namespace simconj
