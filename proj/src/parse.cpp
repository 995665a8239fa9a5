#include "gorcol/parse.hpp"

#include <cctype>

#include "gorcol/errors.hpp"

namespace gorcol {

Field parse_field(const std::string& text) {
  if (text == "q" || text == "Q") return Field::rationals();
  if (text.size() > 2 && (text[0] == 'f' || text[0] == 'F') && text[1] == ':') {
    std::size_t used = 0;
    unsigned long p = 0;
    try {
      p = std::stoul(text.substr(2), &used);
    } catch (const std::exception&) {
      throw ParseError("expected a prime after 'f:'", 2);
    }
    if (used + 2 != text.size()) throw ParseError("trailing characters in field spec", used + 2);
    return Field::prime(p);
  }
  throw ParseError("field must be 'q' or 'f:<p>'", 0);
}

std::string field_name(const Field& f) {
  return f.is_prime_field() ? "f:" + std::to_string(f.modulus()) : "q";
}

namespace {

class Cursor {
 public:
  Cursor(const RingPtr& ring, const std::string& text) : ring_(ring), text_(text) {}

  Polynomial parse_poly() {
    skip_ws();
    Polynomial out(ring_);
    bool negate = eat('-');
    out = out + parse_term(negate);
    for (;;) {
      skip_ws();
      if (eat('+')) {
        out = out + parse_term(false);
      } else if (eat('-')) {
        out = out + parse_term(true);
      } else {
        break;
      }
    }
    return out;
  }

  std::vector<Polynomial> parse_list() {
    std::vector<Polynomial> out;
    out.push_back(parse_poly());
    skip_ws();
    while (eat(',')) {
      out.push_back(parse_poly());
      skip_ws();
    }
    if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
    return out;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  long long parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    if (eat('-')) {
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected an integer", pos_);
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::stoll(text_.substr(start, pos_ - start));
  }

  std::size_t parse_variable() {
    skip_ws();
    std::size_t at = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek())))
      throw ParseError("expected a variable", pos_);
    char c = text_[pos_++];
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(text_[pos_++]);
    if (c == 'x' && !digits.empty()) {
      std::size_t idx = std::stoul(digits);
      if (idx < 1 || idx > ring_->nvars())
        throw ParseError("unknown variable x" + digits, at);
      return idx - 1;
    }
    if (!digits.empty()) throw ParseError("unknown variable", at);
    static const std::string names = "xyzw";
    std::size_t idx = names.find(c);
    if (ring_->nvars() <= 4 && idx != std::string::npos && idx < ring_->nvars()) return idx;
    throw ParseError(std::string("unknown variable '") + c + "'", at);
  }

  Polynomial parse_term(bool negate) {
    skip_ws();
    Scalar coeff = Scalar::one(ring_->field());
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      long long num = parse_integer();
      long long den = 1;
      skip_ws();
      if (eat('/')) {
        std::size_t at = pos_;
        den = parse_integer();
        if (den <= 0) throw ParseError("denominator must be positive", at);
      }
      coeff = Scalar::of_fraction(num, den, ring_->field());
      saw_coeff = true;
      skip_ws();
      if (eat('*')) skip_ws();
    }
    std::vector<int> exps(ring_->nvars(), 0);
    bool saw_var = false;
    for (;;) {
      skip_ws();
      if (!std::isalpha(static_cast<unsigned char>(peek()))) break;
      std::size_t var = parse_variable();
      long long e = 1;
      skip_ws();
      if (eat('^')) {
        std::size_t at = pos_;
        e = parse_integer();
        if (e < 0) throw ParseError("negative exponent", at);
      }
      exps[var] += static_cast<int>(e);
      saw_var = true;
      skip_ws();
      if (!eat('*')) break;
    }
    if (!saw_coeff && !saw_var) throw ParseError("expected a term", pos_);
    if (negate) coeff = -coeff;
    return Polynomial::monomial(ring_, Monomial(std::move(exps)), coeff);
  }

  RingPtr ring_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  Cursor c(ring, text);
  auto list = c.parse_list();
  if (list.size() != 1) throw ParseError("expected a single polynomial", 0);
  return list[0];
}

std::vector<Polynomial> parse_generators(const RingPtr& ring, const std::string& text) {
  Cursor c(ring, text);
  return c.parse_list();
}

IdealHandle parse_ideal(const IdealSpec& spec) {
  if (spec.d < 1) throw ParseError("need at least one variable", 0);
  auto ring = PolyRing::make(spec.d, spec.field);
  auto gens = parse_generators(ring, spec.generators);
  int max_deg = 1;
  for (const auto& g : gens) {
    auto d = g.homogeneous_wdeg();
    if (!d) throw InhomogeneousError("inhomogeneous generator: " + g.str());
    max_deg = std::max(max_deg, *d);
  }
  int bound = spec.degree_bound.value_or(default_bound(spec.d, max_deg));
  return IdealHandle::make(ring, std::move(gens), bound);
}

std::string print_polynomial(const Polynomial& p) { return p.str(); }

std::string print_generators(const IdealHandle& ideal) {
  std::string out;
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i) out += ", ";
    out += ideal.generators()[i].str();
  }
  return out;
}

}  // namespace gorcol
