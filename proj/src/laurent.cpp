#include "glued/laurent.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "glued/error.hpp"

namespace glued {

namespace {

Exponent reduced(long long num, long long den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {static_cast<int>(num), static_cast<int>(den)};
}

}  // namespace

LaurentPoly::LaurentPoly(Coeff constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(Coeff c, int num, int den) {
  if (den <= 0) throw Error(ErrorKind::InvalidArgument, "monomial denominator must be positive");
  LaurentPoly p;
  if (c == 0) return p;
  const Exponent e = reduced(num, den);
  p.unit_ = e.den;
  p.terms_[e.num] = c;
  return p;
}

void LaurentPoly::rescale(int new_unit) {
  if (new_unit == unit_) return;
  const int factor = new_unit / unit_;
  std::map<int, Coeff> out;
  for (const auto& [e, c] : terms_) out.emplace(e * factor, c);
  terms_ = std::move(out);
  unit_ = new_unit;
}

void LaurentPoly::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  if (terms_.empty()) {
    unit_ = 1;
    return;
  }
  int g = unit_;
  for (const auto& [e, c] : terms_) g = std::gcd(g, e < 0 ? -e : e);
  if (g > 1) {
    std::map<int, Coeff> out;
    for (const auto& [e, c] : terms_) out.emplace(e / g, c);
    terms_ = std::move(out);
    unit_ /= g;
  }
}

LaurentPoly::Coeff LaurentPoly::coeff(Exponent e) const {
  const long long scaled = static_cast<long long>(e.num) * unit_;
  if (scaled % e.den != 0) return 0;
  const auto it = terms_.find(static_cast<int>(scaled / e.den));
  return it == terms_.end() ? 0 : it->second;
}

Exponent LaurentPoly::max_exponent() const {
  if (terms_.empty()) return {};
  return reduced(terms_.rbegin()->first, unit_);
}

Exponent LaurentPoly::min_exponent() const {
  if (terms_.empty()) return {};
  return reduced(terms_.begin()->first, unit_);
}

Exponent LaurentPoly::span() const {
  if (terms_.empty()) return {};
  return reduced(terms_.rbegin()->first - terms_.begin()->first, unit_);
}

LaurentPoly LaurentPoly::substitute_power(int num, int den) const {
  if (den <= 0) throw Error(ErrorKind::InvalidArgument, "substitution denominator must be positive");
  LaurentPoly out;
  out.unit_ = unit_ * den;
  for (const auto& [e, c] : terms_) out.terms_[e * num] += c;
  out.normalize();
  return out;
}

LaurentPoly LaurentPoly::shifted(int num, int den) const {
  return *this * monomial(1, num, den);
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    base *= base;
    n >>= 1U;
  }
  return result;
}

LaurentPoly::Coeff LaurentPoly::at_minus_one() const {
  if (unit_ != 1) throw Error(ErrorKind::InvalidArgument, "evaluation at -1 needs integer exponents");
  Coeff sum = 0;
  for (const auto& [e, c] : terms_) sum += (e % 2 == 0) ? c : -c;
  return sum;
}

LaurentPoly::Coeff LaurentPoly::at_one() const {
  Coeff sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  const int u = std::lcm(unit_, o.unit_);
  rescale(u);
  const int factor = u / o.unit_;
  for (const auto& [e, c] : o.terms_) terms_[e * factor] += c;
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  const int u = std::lcm(unit_, o.unit_);
  const int fa = u / unit_;
  const int fb = u / o.unit_;
  std::map<int, Coeff> out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) out[ea * fa + eb * fb] += ca * cb;
  }
  terms_ = std::move(out);
  unit_ = u;
  normalize();
  return *this;
}

std::string LaurentPoly::to_string(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << '+';
    first = false;
    const Exponent x = reduced(e, unit_);
    os << c << '*' << var << "^(" << x.num << '/' << x.den << ')';
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  auto fail = [&](const char* why) {
    throw Error(ErrorKind::ParseError, std::string(why) + " in polynomial '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> long long {
    skip_ws();
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      neg = text[i] == '-';
      ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected integer");
    long long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
    return neg ? -v : v;
  };
  auto expect = [&](char ch) {
    skip_ws();
    if (i >= text.size() || text[i] != ch) fail("unexpected character");
    ++i;
  };

  skip_ws();
  if (text.substr(i) == "0") return {};
  LaurentPoly out;
  while (true) {
    const long long c = read_int();
    expect('*');
    skip_ws();
    while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
    expect('^');
    expect('(');
    const long long num = read_int();
    expect('/');
    const long long den = read_int();
    expect(')');
    if (den <= 0) fail("non-positive denominator");
    out += monomial(c, static_cast<int>(num), static_cast<int>(den));
    skip_ws();
    if (i >= text.size()) break;
    expect('+');
  }
  return out;
}

}  // namespace glued
