#include "nsgp/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace nsgp {

IntPolynomial IntPolynomial::monomial(Int k, BigInt coeff) {
  if (coeff == 0) return IntPolynomial();
  std::vector<BigInt> c(static_cast<size_t>(k) + 1, 0);
  c.back() = std::move(coeff);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::from_ints(const std::vector<Int>& coeffs) {
  return IntPolynomial(std::vector<BigInt>(coeffs.begin(), coeffs.end()));
}

Int IntPolynomial::order() const {
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] != 0) return static_cast<Int>(k);
  }
  return -1;
}

BigInt IntPolynomial::eval_at_one() const {
  BigInt s = 0;
  for (const BigInt& x : c_) s += x;
  return s;
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<BigInt> c(c_.rbegin(), c_.rend());
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::inflate(Int k) const {
  if (is_zero()) return IntPolynomial();
  std::vector<BigInt> c(static_cast<size_t>(degree() * k) + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) c[i * static_cast<size_t>(k)] = c_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::truncated(Int bound) const {
  if (bound < 0) return IntPolynomial();
  std::vector<BigInt> c(c_.begin(),
                        c_.begin() + std::min(c_.size(),
                                              static_cast<size_t>(bound) + 1));
  return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = a.coeff(static_cast<Int>(i)) + b.coeff(static_cast<Int>(i));
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = a.coeff(static_cast<Int>(i)) - b.coeff(static_cast<Int>(i));
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a) {
  std::vector<BigInt> c = a.coeffs();
  for (BigInt& x : c) x = -x;
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<BigInt> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial mul_truncated(const IntPolynomial& a, const IntPolynomial& b,
                            Int bound) {
  if (a.is_zero() || b.is_zero() || bound < 0) return IntPolynomial();
  std::vector<BigInt> c(
      std::min(a.coeffs().size() + b.coeffs().size() - 1,
               static_cast<size_t>(bound) + 1),
      0);
  for (size_t i = 0; i < a.coeffs().size() && i < c.size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs().size() && i + j < c.size(); ++j)
      c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial one_minus_power(Int k) {
  std::vector<BigInt> c(static_cast<size_t>(k) + 1, 0);
  c[0] = 1;
  c.back() -= 1;  // k = 0 gives the zero polynomial
  return IntPolynomial(std::move(c));
}

std::optional<IntPolynomial> try_exact_div(const IntPolynomial& a,
                                           const IntPolynomial& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  if (a.is_zero()) return IntPolynomial();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<BigInt> rem = a.coeffs();
  const BigInt& lead = b.coeffs().back();
  size_t qsize = static_cast<size_t>(a.degree() - b.degree()) + 1;
  std::vector<BigInt> q(qsize, 0);
  for (size_t k = qsize; k-- > 0;) {
    BigInt top = rem[k + static_cast<size_t>(b.degree())];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    BigInt f = top / lead;
    q[k] = f;
    for (size_t j = 0; j < b.coeffs().size(); ++j)
      rem[k + j] -= f * b.coeffs()[j];
  }
  for (const BigInt& x : rem) {
    if (x != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(q));
}

IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b) {
  auto q = try_exact_div(a, b);
  if (!q) {
    fail(ErrorCode::InternalInconsistency,
         "polynomial division expected to be exact left a remainder");
  }
  return std::move(*q);
}

const IntPolynomial& cyclotomic(Int n) {
  static std::map<Int, IntPolynomial> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  IntPolynomial p = -one_minus_power(n);  // t^n - 1
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    if (d < n) p = exact_div(p, cyclotomic(d));
    Int e = n / d;
    if (e != d && e < n) p = exact_div(p, cyclotomic(e));
  }
  return cache.emplace(n, std::move(p)).first->second;
}

Int euler_phi(Int n) {
  Int phi = 1;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    phi *= p - 1;
    while (n % p == 0) {
      n /= p;
      phi *= p;
    }
  }
  if (n > 1) phi *= n - 1;
  return phi;
}

std::string format_polynomial(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (Int k = 0; k <= p.degree(); ++k) {
    BigInt c = p.coeff(k);
    if (c == 0) continue;
    bool negative = c < 0;
    BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    if (k == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

namespace {

[[noreturn]] void malformed(const std::string& text) {
  throw std::invalid_argument("malformed polynomial: " + text);
}

// Sparse expression: term ((+|-) term)*, term = INT | INT? 't' ('^' INT)?.
IntPolynomial parse_expression(const std::string& text) {
  std::map<Int, BigInt> terms;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto read_int = [&]() -> BigInt {
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == start) malformed(text);
    return BigInt(text.substr(start, i - start));
  };
  skip_ws();
  bool expect_term = true;
  BigInt sign = 1;
  while (i < text.size()) {
    if (text[i] == '+' || text[i] == '-') {
      sign = (text[i] == '-') ? -sign : sign;
      ++i;
      skip_ws();
      expect_term = true;
      continue;
    }
    BigInt coeff = 1;
    bool saw_number = false;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = read_int();
      saw_number = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    Int exponent = 0;
    if (i < text.size() && text[i] == 't') {
      ++i;
      exponent = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        BigInt e = read_int();
        if (e > 1000000) malformed(text);
        exponent = static_cast<Int>(e);
      }
    } else if (!saw_number) {
      malformed(text);
    }
    terms[exponent] += sign * coeff;
    sign = 1;
    expect_term = false;
    skip_ws();
  }
  if (expect_term) malformed(text);
  if (terms.empty()) return IntPolynomial();
  std::vector<BigInt> c(static_cast<size_t>(terms.rbegin()->first) + 1, 0);
  for (const auto& [k, v] : terms) c[static_cast<size_t>(k)] = v;
  return IntPolynomial(std::move(c));
}

IntPolynomial parse_coefficient_list(const std::string& text) {
  std::vector<BigInt> c;
  std::string token;
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream stream(normalized);
  while (stream >> token) {
    size_t digits_from = (token[0] == '+' || token[0] == '-') ? 1 : 0;
    if (token.size() == digits_from) malformed(text);
    for (size_t i = digits_from; i < token.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(token[i]))) malformed(text);
    try {
      c.emplace_back(token);
    } catch (const std::exception&) {
      malformed(text);
    }
  }
  if (c.empty()) malformed(text);
  return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial parse_polynomial(const std::string& text) {
  if (text.find('t') != std::string::npos) return parse_expression(text);
  return parse_coefficient_list(text);
}

}  // namespace nsgp
