#include "cdalg/io.hpp"

#include <cctype>

namespace cdalg {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

class ElementParser {
 public:
  ElementParser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  template <typename Scalar>
  Element<Scalar> parse(const Algebra<Scalar>& algebra) {
    Coeffs<Scalar> coords = Coeffs<Scalar>::Zero(algebra.dim());
    skip_space();
    if (at_end()) fail("empty element");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;

      Scalar coef(1);
      Eigen::Index index = 0;
      if (peek() == 'e') {
        index = parse_basis(algebra);
      } else {
        const std::size_t start = pos_;
        const std::string_view literal = scan_literal();
        if (literal.empty()) fail("expected a scalar or a basis element");
        try {
          coef = parse_scalar<Scalar>(literal);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), offset_ + start);
        }
        skip_space();
        if (!at_end() && peek() == '*') {
          ++pos_;
          skip_space();
          if (at_end() || peek() != 'e') fail("expected a basis element after '*'");
          index = parse_basis(algebra);
        }
      }
      coords[index] += negative ? Scalar(-coef) : coef;
      skip_space();
    }
    return Element<Scalar>(algebra, std::move(coords));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && is_space(peek())) ++pos_;
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, offset_ + pos_);
  }

  // digits, '.', '/', and an exponent part directly after a digit.
  std::string_view scan_literal() {
    const std::size_t start = pos_;
    while (!at_end()) {
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/') {
        ++pos_;
      } else if ((c == 'e' || c == 'E') && pos_ > start &&
                 std::isdigit(static_cast<unsigned char>(text_[pos_ - 1])) &&
                 pos_ + 1 < text_.size() &&
                 (text_[pos_ + 1] == '-' || text_[pos_ + 1] == '+' ||
                  std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
        pos_ += 2;
      } else {
        break;
      }
    }
    return text_.substr(start, pos_ - start);
  }

  template <typename Scalar>
  Eigen::Index parse_basis(const Algebra<Scalar>& algebra) {
    const std::size_t start = pos_;
    ++pos_;  // 'e'
    const std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) throw ParseError("expected a basis index after 'e'", offset_ + pos_);
    const std::string_view number = text_.substr(digits, pos_ - digits);
    if (number.size() > 6) throw ParseError("basis index out of range", offset_ + start);
    const auto index = static_cast<Eigen::Index>(std::stol(std::string(number)));
    if (index >= algebra.dim()) {
      throw ParseError("basis index e" + std::string(number) + " out of range for dimension " +
                           std::to_string(algebra.dim()),
                       offset_ + start);
    }
    return index;
  }

  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

template <typename Scalar>
bool is_negative(const Scalar& x) {
  return x < 0;
}

}  // namespace

template <typename Scalar>
Element<Scalar> parse_element(std::string_view text, const Algebra<Scalar>& algebra) {
  return ElementParser(text, 0).parse(algebra);
}

template <typename Scalar>
std::string format_element(const Element<Scalar>& x) {
  std::string out;
  for (Eigen::Index k = 0; k < x.dim(); ++k) {
    const Scalar& c = x[k];
    if (c == 0) continue;
    const bool negative = is_negative(c);
    const Scalar magnitude = negative ? Scalar(-c) : c;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (k == 0) {
      out += format_scalar(magnitude);
    } else if (magnitude == 1) {
      out += "e" + std::to_string(k);
    } else {
      out += format_scalar(magnitude) + "*e" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

template <typename Scalar>
Poly<Scalar> parse_poly(std::string_view text, const Algebra<Scalar>& algebra) {
  std::vector<Element<Scalar>> coeffs;
  std::size_t start = 0;
  for (;;) {
    const std::size_t semi = text.find(';', start);
    const std::string_view piece =
        text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    coeffs.push_back(ElementParser(piece, start).parse(algebra));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return Poly<Scalar>(algebra, std::move(coeffs));
}

template <typename Scalar>
std::string format_poly(const Poly<Scalar>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= f.degree(); ++k) {
    if (k > 0) out += "; ";
    out += format_element(f.coeff(k));
  }
  return out;
}

template <typename Scalar>
std::string format_scalar_poly(const ScalarPoly<Scalar>& p) {
  const int deg = p.degree();
  if (deg < 0) return "0";
  std::string out;
  for (int k = 0; k <= deg; ++k) {
    if (k > 0) out += "; ";
    out += format_scalar(p.coeffs[k]);
  }
  return out;
}

template <typename Scalar>
json element_to_json(const Element<Scalar>& x) {
  json out = json::array();
  for (Eigen::Index k = 0; k < x.dim(); ++k) out.push_back(format_scalar(x[k]));
  return out;
}

template <typename Scalar>
Element<Scalar> element_from_json(const json& j, const Algebra<Scalar>& algebra) {
  if (j.is_string()) return parse_element(j.get<std::string>(), algebra);
  if (!j.is_array()) throw std::invalid_argument("element must be an array or a string");
  if (static_cast<Eigen::Index>(j.size()) != algebra.dim()) {
    throw std::invalid_argument("element array has " + std::to_string(j.size()) +
                                " entries, expected " + std::to_string(algebra.dim()));
  }
  Coeffs<Scalar> c(algebra.dim());
  for (Eigen::Index k = 0; k < c.size(); ++k) {
    const auto& v = j[static_cast<std::size_t>(k)];
    if (v.is_string()) {
      c[k] = parse_scalar<Scalar>(v.get<std::string>());
    } else if (v.is_number_integer()) {
      c[k] = Scalar(v.get<long long>());
    } else if (v.is_number()) {
      c[k] = parse_scalar<Scalar>(v.dump());
    } else {
      throw std::invalid_argument("element entries must be strings or numbers");
    }
  }
  return Element<Scalar>(algebra, std::move(c));
}

template <typename Scalar>
json poly_to_json(const Poly<Scalar>& f) {
  json out = json::array();
  for (const auto& c : f.coeffs()) out.push_back(element_to_json(c));
  return out;
}

template <typename Scalar>
Poly<Scalar> poly_from_json(const json& j, const Algebra<Scalar>& algebra) {
  if (j.is_string()) return parse_poly(j.get<std::string>(), algebra);
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of elements");
  std::vector<Element<Scalar>> coeffs;
  for (const auto& c : j) coeffs.push_back(element_from_json(c, algebra));
  return Poly<Scalar>(algebra, std::move(coeffs));
}

template <typename Scalar>
json matrix_to_json(const Matrix2<Scalar>& m) {
  return json{{"a", element_to_json(m.a)},
              {"b", element_to_json(m.b)},
              {"c", element_to_json(m.c)},
              {"d", element_to_json(m.d)}};
}

template <typename Scalar>
Matrix2<Scalar> matrix_from_json(const json& j, const Algebra<Scalar>& algebra) {
  for (const char* key : {"a", "b", "c", "d"}) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("matrix is missing entry ") + key);
  }
  return {element_from_json(j.at("a"), algebra), element_from_json(j.at("b"), algebra),
          element_from_json(j.at("c"), algebra), element_from_json(j.at("d"), algebra)};
}

AlgebraSpec algebra_spec_from_json(const json& j) {
  AlgebraSpec spec;
  spec.gammas.clear();
  for (const auto& g : j.at("gammas")) {
    spec.gammas.push_back(g.is_string() ? g.get<std::string>() : g.dump());
  }
  if (j.contains("scalar")) spec.scalar = j.at("scalar").get<std::string>();
  if (j.contains("tol")) spec.tol = j.at("tol").get<double>();
  if (spec.scalar != "rational" && spec.scalar != "f64") {
    throw std::invalid_argument("scalar must be \"rational\" or \"f64\"");
  }
  return spec;
}

json to_json(const AlgebraSpec& spec) {
  return json{{"gammas", spec.gammas}, {"scalar", spec.scalar}, {"tol", spec.tol}};
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!piece.empty() && is_space(piece.front())) piece.remove_prefix(1);
    while (!piece.empty() && is_space(piece.back())) piece.remove_suffix(1);
    out.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

#define CDALG_INSTANTIATE_IO(S)                                                 \
  template Element<S> parse_element<S>(std::string_view, const Algebra<S>&);    \
  template std::string format_element<S>(const Element<S>&);                    \
  template Poly<S> parse_poly<S>(std::string_view, const Algebra<S>&);          \
  template std::string format_poly<S>(const Poly<S>&);                          \
  template std::string format_scalar_poly<S>(const ScalarPoly<S>&);             \
  template json element_to_json<S>(const Element<S>&);                          \
  template Element<S> element_from_json<S>(const json&, const Algebra<S>&);     \
  template json poly_to_json<S>(const Poly<S>&);                                \
  template Poly<S> poly_from_json<S>(const json&, const Algebra<S>&);           \
  template json matrix_to_json<S>(const Matrix2<S>&);                           \
  template Matrix2<S> matrix_from_json<S>(const json&, const Algebra<S>&);

CDALG_INSTANTIATE_IO(double)
CDALG_INSTANTIATE_IO(Rational)

#undef CDALG_INSTANTIATE_IO

}  // namespace cdalg
