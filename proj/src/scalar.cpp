#include "mhahn/scalar.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

namespace mhahn {

Scalar Scalar::exact(long num, long den) {
  if (den == 0) throw ZeroDenominator("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::exact(mpq_class q) {
  if (q.get_den() == 0) throw ZeroDenominator("rational with zero denominator");
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::integer(long n, Backend b) {
  if (b == Backend::Exact) return exact(n);
  return Scalar(static_cast<double>(n));
}

Scalar Scalar::parse(std::string_view text, Backend b) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty scalar literal");
  auto slash = s.find('/');
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw ParseError("bad rational literal '" + s + "'");
    mpq_class q(num + "/" + den, 10);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    if (b == Backend::Float) return Scalar(q.get_d());
    return Scalar(std::move(q));
  }
  if (is_int(s)) {
    mpq_class q(s, 10);
    q.canonicalize();
    if (b == Backend::Float) return Scalar(q.get_d());
    return Scalar(std::move(q));
  }
  if (b == Backend::Float) {
    char* end = nullptr;
    double x = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) throw ParseError("bad float literal '" + s + "'");
    return Scalar(x);
  }
  throw ParseError("exact backend accepts only integer or p/q literals, got '" + s + "'");
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
  return std::get<double>(v_) == 0.0;
}

bool Scalar::is_integer() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return q->get_den() == 1;
  double x = std::get<double>(v_);
  return x == std::floor(x);
}

int Scalar::sign() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q);
  double x = std::get<double>(v_);
  return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

double Scalar::to_double() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return q->get_d();
  return std::get<double>(v_);
}

const mpq_class& Scalar::rational() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q;
  throw BackendMismatch();
}

std::string Scalar::str() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
  double x = std::get<double>(v_);
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Scalar Scalar::operator-() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*q));
  return Scalar(-std::get<double>(v_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  if (auto* q = std::get_if<mpq_class>(&v_))
    *q += std::get<mpq_class>(o.v_);
  else
    std::get<double>(v_) += std::get<double>(o.v_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(o);
  if (auto* q = std::get_if<mpq_class>(&v_))
    *q -= std::get<mpq_class>(o.v_);
  else
    std::get<double>(v_) -= std::get<double>(o.v_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  if (auto* q = std::get_if<mpq_class>(&v_))
    *q *= std::get<mpq_class>(o.v_);
  else
    std::get<double>(v_) *= std::get<double>(o.v_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same(o);
  if (o.is_zero()) throw ZeroDenominator("division by zero");
  if (auto* q = std::get_if<mpq_class>(&v_))
    *q /= std::get<mpq_class>(o.v_);
  else
    std::get<double>(v_) /= std::get<double>(o.v_);
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same(b);
  if (auto* q = std::get_if<mpq_class>(&a.v_)) return *q == std::get<mpq_class>(b.v_);
  return std::get<double>(a.v_) == std::get<double>(b.v_);
}

bool operator<(const Scalar& a, const Scalar& b) {
  a.require_same(b);
  if (auto* q = std::get_if<mpq_class>(&a.v_)) return *q < std::get<mpq_class>(b.v_);
  return std::get<double>(a.v_) < std::get<double>(b.v_);
}

Scalar poch(const Scalar& a, long k) {
  if (k < 0) throw Error("poch order must be non-negative");
  Scalar r = Scalar::one(a.backend());
  for (long j = 0; j < k; ++j) r *= a + j;
  return r;
}

Scalar poch_signed(const Scalar& a, long k) {
  if (k >= 0) return poch(a, k);
  Scalar d = poch(a + k, -k);
  if (d.is_zero()) throw ZeroDenominator("pochhammer of negative order hit a zero factor");
  return Scalar::one(a.backend()) / d;
}

Scalar multi_poch(const PochList& list) {
  Backend b = list.bases.empty() ? Backend::Exact : list.bases.front().backend();
  Scalar r = Scalar::one(b);
  for (const auto& a : list.bases) r *= poch(a, list.order);
  return r;
}

Scalar factorial(long n, Backend b) { return poch(Scalar::one(b), n); }

Scalar hyp3f2(const std::array<Scalar, 3>& top, const std::array<Scalar, 2>& bottom, long kmax) {
  if (kmax < 0) throw Error("hyp3f2 kmax must be non-negative");
  Backend b = top[0].backend();
  Scalar sum = Scalar::one(b);
  Scalar term = Scalar::one(b);
  for (long k = 0; k < kmax; ++k) {
    Scalar num = (top[0] + k) * (top[1] + k) * (top[2] + k);
    if (num.is_zero()) break;  // the series has truncated
    Scalar den = (bottom[0] + k) * (bottom[1] + k) * (k + 1);
    if (den.is_zero())
      throw ZeroDenominator("hyp3f2 bottom pochhammer vanished at k=" + std::to_string(k + 1));
    term *= num / den;
    sum += term;
  }
  return sum;
}

const Scalar& PochCache::operator()(const Scalar& base, long k) {
  Key key{base, k};
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  return memo_.emplace(std::move(key), poch(base, k)).first->second;
}

}  // namespace mhahn
