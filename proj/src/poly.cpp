#include "mordell/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace mordell {

namespace {

unsigned degree_of(const MultiPoly::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

// Maps each position of `from` to its index in `to` (to is a superset).
std::vector<std::size_t> index_map(const std::vector<std::string>& from,
                                   const std::vector<std::string>& to) {
  std::vector<std::size_t> out;
  out.reserve(from.size());
  for (const auto& v : from) {
    auto it = std::lower_bound(to.begin(), to.end(), v);
    out.push_back(static_cast<std::size_t>(it - to.begin()));
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MultiPoly run() {
    MultiPoly out = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what +
                     " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expression() {
    MultiPoly acc = product();
    for (;;) {
      if (accept('+')) {
        acc += product();
      } else if (accept('-')) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  MultiPoly product() {
    MultiPoly acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MultiPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly(parse_integer(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return MultiPoly::variable(std::string(text_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

bool MultiPoly::GrlexGreater::operator()(const Exponents& lhs, const Exponents& rhs) const {
  unsigned dl = degree_of(lhs), dr = degree_of(rhs);
  if (dl != dr) return dl > dr;
  return std::lexicographical_compare(rhs.begin(), rhs.end(), lhs.begin(), lhs.end());
}

std::vector<std::string> merge_variables(const std::vector<std::string>& lhs,
                                         const std::vector<std::string>& rhs) {
  std::vector<std::string> out;
  out.reserve(lhs.size() + rhs.size());
  std::set_union(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(out));
  return out;
}

MultiPoly::MultiPoly(long constant) : MultiPoly(Integer(constant)) {}

MultiPoly::MultiPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(Exponents{}, constant);
}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, Integer(1));
  return p;
}

MultiPoly MultiPoly::monomial(const Integer& coefficient,
                              const std::map<std::string, unsigned>& powers) {
  MultiPoly p;
  if (coefficient == 0) return p;
  Exponents e;
  for (const auto& [name, power] : powers) {
    p.vars_.push_back(name);
    e.push_back(power);
  }
  p.terms_.emplace(std::move(e), coefficient);
  return p;
}

MultiPoly MultiPoly::parse(std::string_view text) { return Parser(text).run(); }

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree_of(terms_.begin()->first));
}

unsigned MultiPoly::degree_in(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return 0;
  auto idx = static_cast<std::size_t>(it - vars_.begin());
  unsigned best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e[idx]);
  return best;
}

bool MultiPoly::is_homogeneous(const std::vector<std::string>& over_vars, unsigned degree) const {
  std::vector<std::size_t> idx;
  for (const auto& v : over_vars) {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it != vars_.end() && *it == v) idx.push_back(static_cast<std::size_t>(it - vars_.begin()));
  }
  for (const auto& [e, c] : terms_) {
    unsigned d = 0;
    for (auto i : idx) d += e[i];
    if (d != degree) return false;
  }
  return true;
}

MultiPoly MultiPoly::over(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  for (const auto& v : vars_) {
    if (!std::binary_search(vars.begin(), vars.end(), v)) {
      throw InvalidArgument("MultiPoly::over: target variables must include '" + v + "'");
    }
  }
  MultiPoly out;
  out.vars_ = vars;
  auto map = index_map(vars_, vars);
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[map[i]] = e[i];
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

MultiPoly MultiPoly::coefficient(const std::string& var, unsigned power) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return power == 0 ? *this : MultiPoly();
  auto idx = static_cast<std::size_t>(it - vars_.begin());
  MultiPoly out;
  out.vars_ = vars_;
  out.vars_.erase(out.vars_.begin() + static_cast<std::ptrdiff_t>(idx));
  for (const auto& [e, c] : terms_) {
    if (e[idx] != power) continue;
    Exponents ne = e;
    ne.erase(ne.begin() + static_cast<std::ptrdiff_t>(idx));
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& assignment) const {
  std::vector<const Rational*> values(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = assignment.find(vars_[i]);
    if (it != assignment.end()) values[i] = &it->second;
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (values[i] == nullptr) throw MissingVariable("no value assigned to '" + vars_[i] + "'");
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), values[i]->get_num_mpz_t(), e[i]);
      mpz_pow_ui(p.get_den_mpz_t(), values[i]->get_den_mpz_t(), e[i]);
      term *= p;
    }
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& replacements) const {
  std::vector<std::map<unsigned, MultiPoly>> power_cache(vars_.size());
  std::vector<MultiPoly> images;
  images.reserve(vars_.size());
  for (const auto& v : vars_) {
    auto it = replacements.find(v);
    images.push_back(it != replacements.end() ? it->second : MultiPoly::variable(v));
  }
  auto power_of = [&](std::size_t i, unsigned e) -> const MultiPoly& {
    auto& cache = power_cache[i];
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, images[i].pow(e)).first;
    return it->second;
  };
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    MultiPoly term(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= power_of(i, e[i]);
    }
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  MultiPoly out;
  out.vars_ = vars_;
  if (it == vars_.end() || *it != var) return out;
  auto idx = static_cast<std::size_t>(it - vars_.begin());
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponents ne = e;
    --ne[idx];
    out.terms_.emplace(std::move(ne), c * e[idx]);
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = degree_of(e) == 0;
    bool wrote = false;
    if (mag != 1 || constant) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << vars_[i];
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (rhs.terms_.empty()) return *this;
  auto vars = merge_variables(vars_, rhs.vars_);
  if (vars != vars_) *this = over(vars);
  const MultiPoly& r = rhs.vars_ == vars ? rhs : rhs.over(vars);
  for (const auto& [e, c] : r.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) { return *this += -rhs; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  MultiPoly out;
  out.vars_ = merge_variables(lhs.vars_, rhs.vars_);
  if (lhs.terms_.empty() || rhs.terms_.empty()) return out;
  auto lmap = index_map(lhs.vars_, out.vars_);
  auto rmap = index_map(rhs.vars_, out.vars_);
  MultiPoly::Exponents e(out.vars_.size());
  Integer prod;
  for (const auto& [le, lc] : lhs.terms_) {
    for (const auto& [re, rc] : rhs.terms_) {
      std::fill(e.begin(), e.end(), 0u);
      for (std::size_t i = 0; i < le.size(); ++i) e[lmap[i]] += le[i];
      for (std::size_t i = 0; i < re.size(); ++i) e[rmap[i]] += re[i];
      mpz_mul(prod.get_mpz_t(), lc.get_mpz_t(), rc.get_mpz_t());
      auto [it, inserted] = out.terms_.emplace(e, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
  if (lhs.vars_ == rhs.vars_) return lhs.terms_ == rhs.terms_;
  auto vars = merge_variables(lhs.vars_, rhs.vars_);
  return lhs.over(vars).terms_ == rhs.over(vars).terms_;
}

}  // namespace mordell
