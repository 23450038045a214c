#include "domfan/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "domfan/error.hpp"

namespace domfan {

LaurentPoly LaurentPoly::constant(size_t nx, size_t ny, const Integer& c) {
  LaurentPoly p(nx, ny);
  p.add_term(Exponent(nx + ny, 0), c);
  return p;
}

LaurentPoly LaurentPoly::x(size_t nx, size_t ny, size_t i) {
  if (i >= nx) throw IndexOutOfRange("x-variable index out of range");
  Exponent e(nx + ny, 0);
  e[i] = 1;
  LaurentPoly p(nx, ny);
  p.add_term(e, 1);
  return p;
}

LaurentPoly LaurentPoly::y(size_t nx, size_t ny, size_t i) {
  if (i >= ny) throw IndexOutOfRange("y-variable index out of range");
  Exponent e(nx + ny, 0);
  e[nx + i] = 1;
  LaurentPoly p(nx, ny);
  p.add_term(e, 1);
  return p;
}

LaurentPoly LaurentPoly::monomial(size_t nx, size_t ny, const IntVector& xexp,
                                  const IntVector& yexp, const Integer& c) {
  if (xexp.size() != nx || yexp.size() != ny) throw InvalidArgument("monomial exponent length");
  Exponent e = xexp;
  e.insert(e.end(), yexp.begin(), yexp.end());
  LaurentPoly p(nx, ny);
  p.add_term(e, c);
  return p;
}

bool LaurentPoly::is_constant(const Integer& c) const {
  if (c == 0) return is_zero();
  if (terms_.size() != 1) return false;
  const auto& [e, v] = *terms_.begin();
  return v == c && std::all_of(e.begin(), e.end(), [](int64_t x) { return x == 0; });
}

void LaurentPoly::add_term(const Exponent& e, const Integer& c) {
  if (e.size() != nx_ + ny_) throw InvalidArgument("exponent vector has wrong length");
  for (size_t j = nx_; j < e.size(); ++j)
    if (e[j] < 0) throw InvalidArgument("y-exponents must be nonnegative");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
  if (nx_ != o.nx_ || ny_ != o.ny_) throw InvalidArgument("Laurent polynomials live in different rings");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_compatible(b);
  LaurentPoly out(a.nx_, a.ny_);
  LaurentPoly::Exponent e(a.nx_ + a.ny_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = checked_add(ea[i], eb[i]);
      auto [it, inserted] = out.terms_.try_emplace(e, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::pow(int64_t e) const {
  if (e < 0) {
    if (terms_.size() != 1) throw InvalidArgument("only single-term Laurent polynomials are invertible");
    const auto& [ex, c] = *terms_.begin();
    if (c != 1 && c != -1) throw InvalidArgument("monomial with non-unit coefficient is not invertible");
    for (size_t j = nx_; j < ex.size(); ++j)
      if (ex[j] != 0) throw InvalidArgument("y-variables are not invertible");
    LaurentPoly inv(nx_, ny_);
    Exponent neg(ex.size());
    for (size_t i = 0; i < ex.size(); ++i) neg[i] = -ex[i];
    inv.add_term(neg, c);
    return inv.pow(-e);
  }
  LaurentPoly result = constant(nx_, ny_, 1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nx_ != b.nx_) return a.nx_ < b.nx_;
  if (a.ny_ != b.ny_) return a.ny_ < b.ny_;
  return a.terms_ < b.terms_;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [e, c] : terms_) {
    if (first_term)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first_term = false;
    const Integer mag = abs(c);
    std::vector<std::string> factors;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string f = (i < nx_ ? "x" + std::to_string(i + 1) : "y" + std::to_string(i - nx_ + 1));
      if (e[i] != 1) f += "^" + std::to_string(e[i]);
      factors.push_back(std::move(f));
    }
    bool star = false;
    if (mag != 1 || factors.empty()) {
      os << mag.get_str();
      star = true;
    }
    for (const auto& f : factors) {
      os << (star ? "*" : "") << f;
      star = true;
    }
  }
  return os.str();
}

LaurentPoly div_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (num.nx() != den.nx() || num.ny() != den.ny())
    throw InvalidArgument("Laurent polynomials live in different rings");
  if (den.is_zero()) throw InvalidArgument("division by zero");
  const size_t nx = num.nx(), ny = num.ny(), width = nx + ny;
  LaurentPoly q(nx, ny);
  if (num.is_zero()) return q;

  // Each exponent of the quotient lies in [min(num) - min(den), max(num) - max(den)].
  IntVector lo(width), hi(width);
  for (size_t i = 0; i < width; ++i) {
    int64_t nmin = INT64_MAX, nmax = INT64_MIN, dmin = INT64_MAX, dmax = INT64_MIN;
    for (const auto& [e, c] : num.terms()) nmin = std::min(nmin, e[i]), nmax = std::max(nmax, e[i]);
    for (const auto& [e, c] : den.terms()) dmin = std::min(dmin, e[i]), dmax = std::max(dmax, e[i]);
    lo[i] = nmin - dmin;
    hi[i] = nmax - dmax;
    if (lo[i] > hi[i] || (i >= nx && lo[i] < 0 && hi[i] < 0))
      throw InexactDivision("inexact division: " + num.to_string() + " by " + den.to_string());
  }

  const auto& [lead_e, lead_c] = *den.terms().rbegin();
  LaurentPoly r = num;
  LaurentPoly::Exponent e(width);
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms().rbegin();
    for (size_t i = 0; i < width; ++i) {
      e[i] = re[i] - lead_e[i];
      if (e[i] < lo[i] || e[i] > hi[i] || (i >= nx && e[i] < 0))
        throw InexactDivision("inexact division: " + num.to_string() + " by " + den.to_string());
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t()))
      throw InexactDivision("inexact division: " + num.to_string() + " by " + den.to_string());
    LaurentPoly t(nx, ny);
    t.add_term(e, rc / lead_c);
    r -= t * den;
    q += t;
  }
  return q;
}

LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& xs,
                       const std::vector<LaurentPoly>& ys) {
  if (xs.size() != p.nx() || ys.size() != p.ny())
    throw InvalidArgument("substitution needs one image per variable");
  if (xs.empty() && ys.empty()) throw InvalidArgument("substitution into a ring without variables");
  const LaurentPoly& ref = xs.empty() ? ys.front() : xs.front();
  const size_t tx = ref.nx(), ty = ref.ny();
  for (const auto& img : xs)
    if (img.nx() != tx || img.ny() != ty) throw InvalidArgument("substitution images in different rings");
  for (const auto& img : ys)
    if (img.nx() != tx || img.ny() != ty) throw InvalidArgument("substitution images in different rings");

  std::vector<std::map<int64_t, LaurentPoly>> cache(p.nx() + p.ny());
  auto power = [&](size_t var, int64_t e) -> const LaurentPoly& {
    auto it = cache[var].find(e);
    if (it != cache[var].end()) return it->second;
    const LaurentPoly& base = var < p.nx() ? xs[var] : ys[var - p.nx()];
    return cache[var].emplace(e, base.pow(e)).first->second;
  };

  LaurentPoly out(tx, ty);
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly term = LaurentPoly::constant(tx, ty, c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term *= power(i, e[i]);
    out += term;
  }
  return out;
}

IntVector g_degree(const LaurentPoly& p, const ExchangeMatrix& b) {
  const size_t n = b.rank();
  if (p.nx() != n || p.ny() != n) throw InvalidArgument("g-degree needs rank-many x and y variables");
  if (p.is_zero()) throw InvalidArgument("the zero polynomial has no g-vector");
  std::optional<IntVector> deg;
  std::string first;
  for (const auto& [e, c] : p.terms()) {
    IntVector d(e.begin(), e.begin() + n);
    for (size_t k = 0; k < n; ++k)
      for (size_t i = 0; i < n; ++i) d[i] = checked_add(d[i], -checked_mul(e[n + k], b(i, k)));
    LaurentPoly t(p.nx(), p.ny());
    t.add_term(e, c);
    if (!deg) {
      deg = std::move(d);
      first = t.to_string();
    } else if (*deg != d) {
      throw Inhomogeneous("terms " + first + " and " + t.to_string() + " have different degrees");
    }
  }
  return *deg;
}

LaurentPoly f_polynomial(const LaurentPoly& z) {
  const size_t nx = z.nx(), ny = z.ny();
  std::vector<LaurentPoly> xs(nx, LaurentPoly::constant(nx, ny, 1));
  std::vector<LaurentPoly> ys;
  for (size_t j = 0; j < ny; ++j) ys.push_back(LaurentPoly::y(nx, ny, j));
  return substitute(z, xs, ys);
}

bool check_g_f(const LaurentPoly& z, const ExchangeMatrix& b) {
  const size_t n = b.rank();
  IntVector g = g_degree(z, b);
  LaurentPoly f = f_polynomial(z);
  std::vector<LaurentPoly> xs, yhat;
  for (size_t i = 0; i < n; ++i) {
    xs.push_back(LaurentPoly::x(n, n, i));
    IntVector xe(n), ye(n, 0);
    for (size_t k = 0; k < n; ++k) xe[k] = b(k, i);
    ye[i] = 1;
    yhat.push_back(LaurentPoly::monomial(n, n, xe, ye));
  }
  LaurentPoly rebuilt = LaurentPoly::monomial(n, n, g, IntVector(n, 0)) * substitute(f, xs, yhat);
  return rebuilt == z;
}

namespace {

class Parser {
 public:
  Parser(std::string_view s, size_t nx, size_t ny, const std::map<std::string, LaurentPoly>& bindings)
      : s_(s), nx_(nx), ny_(ny), bindings_(bindings) {}

  LaurentPoly parse() {
    LaurentPoly v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw InvalidArgument("cannot parse Laurent polynomial at offset " + std::to_string(pos_) + ": " +
                          what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  LaurentPoly expr() {
    LaurentPoly v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  LaurentPoly term() {
    LaurentPoly v = unary();
    for (;;) {
      if (eat('*'))
        v *= unary();
      else if (eat('/'))
        v = div_exact(v, unary());
      else
        return v;
    }
  }
  LaurentPoly unary() {
    if (eat('-')) return -unary();
    LaurentPoly base = atom();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      skip();
      return base.pow(neg ? -integer() : integer());
    }
    return base;
  }
  int64_t integer() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }
  LaurentPoly atom() {
    skip();
    if (eat('(')) {
      LaurentPoly v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return LaurentPoly::constant(nx_, ny_, Integer(std::string(s_.substr(start, pos_ - start))));
    }
    size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a term");
    std::string name(s_.substr(start, pos_ - start));
    if (auto it = bindings_.find(name); it != bindings_.end()) return it->second;
    if (name.size() >= 2 && (name[0] == 'x' || name[0] == 'y') &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      size_t idx = std::stoul(name.substr(1));
      size_t limit = name[0] == 'x' ? nx_ : ny_;
      if (idx < 1 || idx > limit) fail("variable " + name + " out of range");
      return name[0] == 'x' ? LaurentPoly::x(nx_, ny_, idx - 1) : LaurentPoly::y(nx_, ny_, idx - 1);
    }
    fail("unknown identifier " + name);
  }

  std::string_view s_;
  size_t pos_ = 0;
  size_t nx_, ny_;
  const std::map<std::string, LaurentPoly>& bindings_;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, size_t nx, size_t ny,
                          const std::map<std::string, LaurentPoly>& bindings) {
  return Parser(text, nx, ny, bindings).parse();
}

}  // namespace domfan
