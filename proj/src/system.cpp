#include "ssg/system.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>
#include <unordered_map>

#include "ssg/errors.hpp"

namespace ssg {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Cursor over one physical line; columns are 1-based.
class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void advance() { ++pos_; }
  std::size_t column() const { return pos_ + 1; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view take_while(bool (*pred)(char)) {
    std::size_t start = pos_;
    while (!at_end() && pred(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::string_view take_word() {
    std::size_t start = pos_;
    while (!at_end() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(column(), message); }
  [[noreturn]] void fail_at(std::size_t column, const std::string& message) const {
    throw ParseError(line_, column, message);
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

struct HeaderInfo {
  std::uint32_t modulus;
  OrderKind order;
  std::vector<std::string> variables;
};

HeaderInfo parse_header(LineCursor& cur) {
  cur.skip_space();
  std::size_t col = cur.column();
  if (cur.take_word() != "ring") cur.fail_at(col, "expected 'ring <prime> <order> <variables...>'");

  cur.skip_space();
  col = cur.column();
  std::string_view modulus_text = cur.take_word();
  if (modulus_text.empty()) cur.fail_at(col, "missing modulus");
  if (!std::all_of(modulus_text.begin(), modulus_text.end(), is_digit))
    cur.fail_at(col, "modulus must be a positive integer");
  std::uint64_t modulus = 0;
  for (char c : modulus_text) {
    modulus = modulus * 10 + static_cast<std::uint64_t>(c - '0');
    if (modulus > PrimeField::kMaxModulus) cur.fail_at(col, "modulus exceeds 2^31-1");
  }
  if (!PrimeField::is_prime(modulus))
    cur.fail_at(col, "modulus " + std::string(modulus_text) + " is not prime");

  cur.skip_space();
  col = cur.column();
  std::string_view order_text = cur.take_word();
  OrderKind order;
  if (order_text == "grevlex") {
    order = OrderKind::grevlex;
  } else if (order_text == "lex") {
    order = OrderKind::lex;
  } else {
    cur.fail_at(col, "expected monomial order 'grevlex' or 'lex'");
  }

  std::vector<std::string> variables;
  while (true) {
    cur.skip_space();
    if (cur.at_end()) break;
    col = cur.column();
    std::string_view name = cur.take_word();
    if (!is_ident_start(name.front()) || !std::all_of(name.begin(), name.end(), is_ident_char))
      cur.fail_at(col, "invalid variable name '" + std::string(name) + "'");
    if (std::find(variables.begin(), variables.end(), name) != variables.end())
      cur.fail_at(col, "duplicate variable '" + std::string(name) + "'");
    variables.emplace_back(name);
  }
  if (variables.empty()) cur.fail("ring declares no variables");
  return {static_cast<std::uint32_t>(modulus), order, std::move(variables)};
}

class PolynomialParser {
 public:
  PolynomialParser(LineCursor& cur, const Ring& ring,
                   const std::unordered_map<std::string, std::size_t>& index)
      : cur_(cur), ring_(ring), index_(index) {}

  Polynomial parse() {
    std::vector<Term> terms;
    cur_.skip_space();
    bool first = true;
    while (true) {
      cur_.skip_space();
      if (cur_.at_end()) {
        if (first) cur_.fail("expected a term");
        break;
      }
      bool negative = false;
      char c = cur_.peek();
      if (c == '+' || c == '-') {
        negative = c == '-';
        cur_.advance();
        cur_.skip_space();
      } else if (!first) {
        cur_.fail(std::string("unexpected character '") + c + "'");
      }
      Term t = parse_term();
      if (negative) t.coeff = ring_.field().neg(t.coeff);
      terms.push_back(std::move(t));
      first = false;
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  Term parse_term() {
    const PrimeField& field = ring_.field();
    FieldElement coeff = field.one();
    std::vector<std::uint32_t> exps(ring_.nvars(), 0);
    bool expect_factor = true;
    bool any = false;
    while (true) {
      cur_.skip_space();
      char c = cur_.peek();
      if (is_digit(c)) {
        coeff = field.mul(coeff, parse_integer());
      } else if (is_ident_start(c)) {
        std::size_t col = cur_.column();
        std::string name(cur_.take_while(is_ident_char));
        auto it = index_.find(name);
        if (it == index_.end()) cur_.fail_at(col, "unknown variable '" + name + "'");
        std::uint32_t power = 1;
        cur_.skip_space();
        if (cur_.peek() == '^') {
          cur_.advance();
          cur_.skip_space();
          power = parse_exponent();
        }
        exps[it->second] += power;
        if (exps[it->second] > std::numeric_limits<Exponent>::max())
          cur_.fail_at(col, "exponent of '" + name + "' exceeds 65535");
      } else if (expect_factor) {
        cur_.fail(any ? "expected a factor after '*'" : "expected a term");
      } else {
        break;
      }
      any = true;
      expect_factor = false;
      cur_.skip_space();
      if (cur_.peek() == '*') {
        cur_.advance();
        expect_factor = true;
      }
    }
    std::vector<Exponent> e(exps.begin(), exps.end());
    return {coeff, Monomial(std::move(e))};
  }

  FieldElement parse_integer() {
    const std::uint64_t p = ring_.field().modulus();
    std::uint64_t value = 0;
    for (char c : cur_.take_while(is_digit)) value = (value * 10 + static_cast<std::uint64_t>(c - '0')) % p;
    return FieldElement(static_cast<std::uint32_t>(value));
  }

  std::uint32_t parse_exponent() {
    std::size_t col = cur_.column();
    std::string_view digits = cur_.take_while(is_digit);
    if (digits.empty()) cur_.fail_at(col, "malformed exponent: expected a non-negative integer after '^'");
    std::uint64_t value = 0;
    for (char c : digits) {
      value = value * 10 + static_cast<std::uint64_t>(c - '0');
      if (value > std::numeric_limits<Exponent>::max())
        cur_.fail_at(col, "malformed exponent: exceeds 65535");
    }
    return static_cast<std::uint32_t>(value);
  }

  LineCursor& cur_;
  const Ring& ring_;
  const std::unordered_map<std::string, std::size_t>& index_;
};

}  // namespace

SystemDescription parse_system(std::string_view text) {
  std::optional<SystemDescription> desc;
  std::unordered_map<std::string, std::size_t> index;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (std::all_of(line.begin(), line.end(),
                    [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }))
      continue;

    LineCursor cur(line, line_no);
    if (!desc) {
      HeaderInfo header = parse_header(cur);
      Ring ring(PrimeField(header.modulus), header.variables.size(), MonomialOrder(header.order));
      for (std::size_t i = 0; i < header.variables.size(); ++i) index.emplace(header.variables[i], i);
      desc.emplace(SystemDescription{ring, std::move(header.variables), {}});
      continue;
    }
    desc->generators.push_back(PolynomialParser(cur, desc->ring, index).parse());
  }
  if (!desc) throw ParseError(line_no == 0 ? 1 : line_no, 1, "empty system: missing 'ring' line");
  return std::move(*desc);
}

std::string format_ring_header(const SystemDescription& desc) {
  std::string out = "ring " + std::to_string(desc.ring.field().modulus()) + " " +
                    std::string(to_string(desc.ring.order().kind()));
  for (const std::string& v : desc.variables) out += " " + v;
  return out;
}

std::string format_polynomial(const Polynomial& p, std::span<const std::string> variables) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const Term& t : p.terms()) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += variables[i];
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      out += std::to_string(t.coeff.value());
    } else if (t.coeff.value() == 1) {
      out += mono;
    } else {
      out += std::to_string(t.coeff.value()) + "*" + mono;
    }
  }
  return out;
}

std::string format_system(const SystemDescription& desc) {
  std::string out = format_ring_header(desc) + "\n";
  for (const Polynomial& g : desc.generators) out += format_polynomial(g, desc.variables) + "\n";
  return out;
}

std::string format_basis(std::span<const Polynomial> basis, const SystemDescription& desc) {
  const Ring& ring = desc.ring;
  std::vector<Polynomial> sorted;
  for (const Polynomial& g : basis)
    if (!g.is_zero()) sorted.push_back(make_monic(ring, g));
  std::stable_sort(sorted.begin(), sorted.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring.order().less(a.head_monomial(), b.head_monomial());
  });
  std::string out = format_ring_header(desc) + "\n";
  for (const Polynomial& g : sorted) out += format_polynomial(g, desc.variables) + "\n";
  return out;
}

}  // namespace ssg
