#include "simconj/tuple_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace simconj {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Kind parse_kind(const std::string& s) {
  if (s == "rational") return Kind::Rational;
  if (s == "float64") return Kind::Real64;
  if (s == "complex128") return Kind::Complex128;
  throw ParseError("unknown field '" + s + "' (expected rational, float64 or complex128)");
}

StarMode parse_star(const std::string& s) {
  if (s == "transpose") return StarMode::Transpose;
  if (s == "conjugate") return StarMode::ConjugateTranspose;
  throw ParseError("unknown star mode '" + s + "' (expected transpose or conjugate)");
}

template <Field T>
T parse_entry(const json& e) {
  if constexpr (std::same_as<T, Rational>) {
    if (e.is_string()) return parse_rational(e.get<std::string>());
    if (e.is_number_integer()) return Rational(e.dump());
    throw ParseError("rational entries must be \"p/q\" strings");
  } else if constexpr (std::same_as<T, Real>) {
    if (!e.is_number()) throw ParseError("float64 entries must be numbers");
    return e.get<double>();
  } else {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ParseError("complex128 entries must be [re, im] pairs");
    }
    return Complex(e[0].get<double>(), e[1].get<double>());
  }
}

template <Field T>
ordered_json entry_json(const T& x) {
  if constexpr (std::same_as<T, Rational>) {
    return format_rational(x);
  } else if constexpr (std::same_as<T, Real>) {
    return x;
  } else {
    return ordered_json::array({x.real(), x.imag()});
  }
}

struct Header {
  FieldKind kind;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t d = 0;
  const json* matrices = nullptr;
};

std::size_t count_field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ParseError(std::string("\"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

Header read_header(const json& j, bool allow_rectangular) {
  if (!j.is_object()) throw ParseError("tuple file must be a JSON object");
  Header h;
  if (!j.contains("field") || !j["field"].is_string()) throw ParseError("missing \"field\"");
  const Kind kind = parse_kind(j["field"].get<std::string>());
  if (j.contains("star")) {
    if (!j["star"].is_string()) throw ParseError("\"star\" must be a string");
    try {
      h.kind = FieldKind::make(kind, parse_star(j["star"].get<std::string>()));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  } else {
    h.kind = FieldKind::make(kind);
  }
  if (j.contains("n")) {
    h.rows = h.cols = count_field(j, "n");
  } else if (allow_rectangular && j.contains("rows")) {
    h.rows = count_field(j, "rows");
    h.cols = count_field(j, "cols");
  } else {
    throw ParseError("missing \"n\"");
  }
  h.d = j.contains("d") ? count_field(j, "d") : 1;
  if (h.rows == 0 || h.cols == 0 || h.d == 0) throw ParseError("n and d must be positive");
  if (!j.contains("matrices") || !j["matrices"].is_array()) throw ParseError("missing \"matrices\" array");
  h.matrices = &j["matrices"];
  if (h.matrices->size() != h.d) {
    throw ParseError("expected " + std::to_string(h.d) + " matrices, found " + std::to_string(h.matrices->size()));
  }
  return h;
}

template <Field T>
std::vector<Matrix<T>> read_matrices(const Header& h) {
  std::vector<Matrix<T>> out;
  for (const auto& m : *h.matrices) {
    if (!m.is_array() || m.size() != h.rows * h.cols) {
      throw ParseError("each matrix needs " + std::to_string(h.rows * h.cols) + " entries");
    }
    std::vector<T> entries;
    entries.reserve(m.size());
    for (const auto& e : m) entries.push_back(parse_entry<T>(e));
    out.emplace_back(h.rows, h.cols, std::move(entries));
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

template <Field T>
ordered_json matrix_entries(const Matrix<T>& m) {
  ordered_json arr = ordered_json::array();
  for (const auto& x : m.entries()) arr.push_back(entry_json(x));
  return arr;
}

template <Field T>
std::string format_tuple_impl(const MatrixTuple<T>& t) {
  ordered_json j;
  j["field"] = std::string(to_string(FieldTraits<T>::kind));
  j["star"] = std::string(to_string(t.star_mode()));
  j["n"] = t.dim();
  j["d"] = t.arity();
  j["matrices"] = ordered_json::array();
  for (const auto& m : t) j["matrices"].push_back(matrix_entries(m));
  return j.dump(2) + "\n";
}

template <Field T>
std::string format_matrix_impl(const Matrix<T>& m, StarMode star) {
  if (m.is_square()) return format_tuple_impl(MatrixTuple<T>({m}, star));
  ordered_json j;
  j["field"] = std::string(to_string(FieldTraits<T>::kind));
  j["star"] = std::string(to_string(star));
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["d"] = 1;
  j["matrices"] = ordered_json::array({matrix_entries(m)});
  return j.dump(2) + "\n";
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AnyTuple parse_tuple(std::string_view text) {
  const json j = parse_json(text);
  const Header h = read_header(j, false);
  switch (h.kind.kind) {
    case Kind::Rational:
      return MatrixTuple<Rational>(read_matrices<Rational>(h), h.kind.star);
    case Kind::Real64:
      return MatrixTuple<Real>(read_matrices<Real>(h), h.kind.star);
    case Kind::Complex128:
      return MatrixTuple<Complex>(read_matrices<Complex>(h), h.kind.star);
  }
  throw ParseError("unreachable field kind");
}

AnyTuple read_tuple_file(const std::filesystem::path& path) {
  try {
    return parse_tuple(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

AnyMatrix parse_matrix(std::string_view text) {
  const json j = parse_json(text);
  const Header h = read_header(j, true);
  if (h.d != 1) throw ParseError("expected a single matrix (d = 1)");
  switch (h.kind.kind) {
    case Kind::Rational:
      return {read_matrices<Rational>(h).front(), h.kind.star};
    case Kind::Real64:
      return {read_matrices<Real>(h).front(), h.kind.star};
    case Kind::Complex128:
      return {read_matrices<Complex>(h).front(), h.kind.star};
  }
  throw ParseError("unreachable field kind");
}

AnyMatrix read_matrix_file(const std::filesystem::path& path) {
  try {
    return parse_matrix(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string format_tuple(const MatrixTuple<Rational>& t) { return format_tuple_impl(t); }
std::string format_tuple(const MatrixTuple<Real>& t) { return format_tuple_impl(t); }
std::string format_tuple(const MatrixTuple<Complex>& t) { return format_tuple_impl(t); }
std::string format_tuple(const AnyTuple& t) {
  return std::visit([](const auto& x) { return format_tuple(x); }, t);
}

std::string format_matrix(const Matrix<Rational>& m, StarMode star) { return format_matrix_impl(m, star); }
std::string format_matrix(const Matrix<Real>& m, StarMode star) { return format_matrix_impl(m, star); }
std::string format_matrix(const Matrix<Complex>& m, StarMode star) { return format_matrix_impl(m, star); }

FieldKind field_kind(const AnyTuple& t) {
  return std::visit([](const auto& x) { return x.field_kind(); }, t);
}
std::size_t tuple_dim(const AnyTuple& t) {
  return std::visit([](const auto& x) { return x.dim(); }, t);
}
std::size_t tuple_arity(const AnyTuple& t) {
  return std::visit([](const auto& x) { return x.arity(); }, t);
}

}  // namespace simconj
