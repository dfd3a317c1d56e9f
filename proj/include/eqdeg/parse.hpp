#pragma once

// Text forms of polynomials and ideals.
//
//   expr   := term (('+'|'-') term)*     (a leading sign is accepted)
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' uint)?
//   coeff  := int ('/' uint)?
//
// Ideal files: `vars: x1, x2, ...` first, an optional `dim: m` next, then
// one generator per line. `#` starts a comment anywhere on a line.

#include <cctype>
#include <cstddef>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "eqdeg/errors.hpp"
#include "eqdeg/ideal.hpp"
#include "eqdeg/polynomial.hpp"

namespace eqdeg {

class UnknownVariable : public ParseError {
public:
  UnknownVariable(const std::string& name, std::size_t position)
      : ParseError("unknown variable '" + name + "'", position) {}
};

namespace detail {

template <class Field>
class PolynomialParser {
public:
  using Poly = Polynomial<Field>;

  PolynomialParser(std::string_view text, const std::vector<std::string>& vars, const Field& field,
                   MonomialOrder order)
      : text_(text), vars_(vars), field_(field), order_(order) {}

  Poly parse() {
    std::vector<Term<Field>> terms;
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(parse_term(negative));
    for (;;) {
      skip_space();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') throw ParseError(std::string("unexpected character '") + op + "'", pos_);
      ++pos_;
      terms.push_back(parse_term(op == '-'));
    }
    return Poly::from_terms(field_, vars_.size(), std::move(terms), order_);
  }

private:
  Term<Field> parse_term(bool negative) {
    skip_space();
    if (at_end()) throw ParseError("expected a term", pos_);
    auto coeff = field_.one();
    ExponentVector exp(vars_.size());
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_coefficient();
    } else {
      parse_factor(exp);
    }
    for (;;) {
      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
      parse_factor(exp);
    }
    if (negative) coeff = field_.neg(coeff);
    return {coeff, exp};
  }

  typename Field::Element parse_coefficient() {
    std::size_t start = pos_;
    mpz_class num(read_digits());
    mpz_class den = 1;
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      std::size_t den_pos = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError("expected a denominator", pos_);
      }
      den = mpz_class(read_digits());
      if (den == 0) throw ParseError("zero denominator", den_pos);
    }
    try {
      return field_.from_fraction(num, den);
    } catch (const Error&) {
      // Over F_p a denominator divisible by p is as bad as a zero one.
      throw ParseError("zero denominator", start);
    }
  }

  void parse_factor(ExponentVector& exp) {
    skip_space();
    std::size_t start = pos_;
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
      throw ParseError("expected a variable", pos_);
    }
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    std::size_t index = vars_.size();
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) index = i;
    }
    if (index == vars_.size()) throw UnknownVariable(name, start);
    std::uint64_t power = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      std::size_t power_pos = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError("expected an exponent", pos_);
      }
      std::string digits = read_digits();
      if (digits.size() > 10 || std::stoull(digits) > ExponentVector::kMaxExponent) {
        throw ParseError("exponent too large", power_pos);
      }
      power = std::stoull(digits);
    }
    std::uint64_t total = std::uint64_t{exp[index]} + power;
    if (total > ExponentVector::kMaxExponent) throw ExponentOverflow("exponent overflow");
    exp.set(index, static_cast<ExponentVector::value_type>(total));
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  const Field& field_;
  MonomialOrder order_;
  std::size_t pos_ = 0;
};

inline std::string strip(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace detail

template <class Field>
Polynomial<Field> parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                                   const Field& field, MonomialOrder order = MonomialOrder::degrevlex()) {
  return detail::PolynomialParser<Field>(text, vars, field, order).parse();
}

/// Header and generator lines of an ideal file, before coefficients are
/// interpreted in a particular field.
struct IdealFile {
  std::vector<std::string> var_names;
  std::optional<std::size_t> asserted_dimension;
  std::vector<std::string> generator_lines;
  std::vector<std::size_t> line_numbers;

  template <class Field>
  IdealPresentation<Field> to_ideal(const Field& field) const {
    std::vector<Polynomial<Field>> gens;
    for (std::size_t i = 0; i < generator_lines.size(); ++i) {
      try {
        gens.push_back(parse_polynomial(generator_lines[i], var_names, field));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_numbers[i]) + ": " + e.what(), e.position());
      }
    }
    return IdealPresentation<Field>(var_names, std::move(gens), asserted_dimension);
  }
};

inline IdealFile parse_ideal_file(std::istream& in) {
  IdealFile file;
  bool have_vars = false;
  bool header_done = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = detail::strip(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (!have_vars) {
      if (line.rfind("vars:", 0) != 0) throw ParseError("line " + std::to_string(line_no) + ": expected 'vars:' header", 0);
      std::stringstream names(line.substr(5));
      std::string name;
      while (std::getline(names, name, ',')) {
        name = detail::strip(name);
        bool valid = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_');
        for (char c : name) valid = valid && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
        if (!valid) throw ParseError("line " + std::to_string(line_no) + ": bad variable name '" + name + "'", 0);
        file.var_names.push_back(name);
      }
      if (file.var_names.empty()) throw ParseError("line " + std::to_string(line_no) + ": no variables declared", 0);
      have_vars = true;
      continue;
    }
    if (!header_done && line.rfind("dim:", 0) == 0) {
      std::string value = detail::strip(line.substr(4));
      if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos || value.size() > 9) {
        throw ParseError("line " + std::to_string(line_no) + ": bad dimension '" + value + "'", 0);
      }
      file.asserted_dimension = std::stoul(value);
      header_done = true;
      continue;
    }
    header_done = true;
    file.generator_lines.push_back(line);
    file.line_numbers.push_back(line_no);
  }
  if (!have_vars) throw ParseError("missing 'vars:' header", 0);
  if (file.generator_lines.empty()) throw ParseError("no generators", 0);
  return file;
}

inline IdealFile parse_ideal_text(const std::string& text) {
  std::istringstream in(text);
  return parse_ideal_file(in);
}

}  // namespace eqdeg
