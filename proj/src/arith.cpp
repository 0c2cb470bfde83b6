#include "mordell/arith.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace mordell {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_probable_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

// Brent's variant of Pollard rho; n is odd, composite and not a prime power
// with small base (callers strip small factors first).
Integer pollard_brent(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const Integer& v) {
      Integer out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = x - y;
          q = (q * abs(diff)) % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(Integer(abs(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  for (unsigned k = 2; k <= 6; ++k) {
    if (auto root = exact_root(n, k)) {
      std::map<Integer, unsigned> sub;
      factor_into(*root, sub);
      for (auto& [p, e] : sub) out[p] += e * k;
      return;
    }
  }
  Integer f = pollard_brent(n);
  factor_into(f, out);
  factor_into(n / f, out);
}

}  // namespace

Integer parse_integer(std::string_view text) {
  text = trim(text);
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  Integer out;
  if (s.empty() || out.set_str(s, 10) != 0) {
    throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::map<Integer, unsigned> factorize(const Integer& n) {
  if (n == 0) throw InvalidArgument("factorize: zero has no factorization");
  std::map<Integer, unsigned> out;
  Integer m = abs(n);
  for (unsigned long p = 2; p < 10000 && m > 1; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++out[Integer(p)];
      m /= p;
    }
  }
  if (m > 1) factor_into(m, out);
  return out;
}

SixthPowerSplit split_sixth_power(const Integer& d) {
  if (d == 0) throw InvalidArgument("split_sixth_power: d must be nonzero");
  Integer scale = 1;
  for (const auto& [p, e] : factorize(d)) {
    for (unsigned i = 0; i < e / 6; ++i) scale *= p;
  }
  Integer s6;
  mpz_pow_ui(s6.get_mpz_t(), scale.get_mpz_t(), 6);
  return {d / s6, scale};
}

std::optional<Integer> exact_root(const Integer& n, unsigned k) {
  if (n < 0 && k % 2 == 0) return std::nullopt;
  Integer a = abs(n);
  Integer root;
  if (!mpz_root(root.get_mpz_t(), a.get_mpz_t(), k)) return std::nullopt;
  if (n < 0) root = -root;
  return root;
}

}  // namespace mordell
