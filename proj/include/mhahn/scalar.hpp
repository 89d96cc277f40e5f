// Field-generic scalar kernel: exact big rationals (GMP) or IEEE doubles
// behind one tagged value type, plus rising factorials and terminating 3F2.
#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace mhahn {

enum class Backend { Exact, Float };

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BackendMismatch : Error {
  BackendMismatch() : Error("backends may not be mixed in one expression") {}
};
struct ZeroDenominator : Error {
  explicit ZeroDenominator(const std::string& what) : Error(what) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// Immutable numeric value; exact values are kept in lowest terms with a
/// positive denominator (GMP canonical form) after every operation.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}

  static Scalar exact(long num, long den = 1);
  static Scalar exact(mpq_class q);
  static Scalar real(double x) { return Scalar(x); }
  static Scalar zero(Backend b) { return integer(0, b); }
  static Scalar one(Backend b) { return integer(1, b); }
  static Scalar integer(long n, Backend b);

  // accepts "p", "p/q" and a unary minus; Float additionally accepts
  // decimal/scientific literals
  static Scalar parse(std::string_view text, Backend b = Backend::Exact);

  Backend backend() const {
    return std::holds_alternative<mpq_class>(v_) ? Backend::Exact : Backend::Float;
  }
  bool is_exact() const { return backend() == Backend::Exact; }
  bool is_zero() const;
  bool is_integer() const;
  int sign() const;
  Scalar abs() const;

  double to_double() const;
  Scalar to_float() const { return Scalar(to_double()); }
  const mpq_class& rational() const;

  /// lowest-terms "p/q" (or "p") for exact values; shortest round-trip
  /// decimal for floats
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator<=(const Scalar& a, const Scalar& b) { return a < b || a == b; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return b <= a; }

  // integers are backend-neutral and promote to the scalar's backend
  Scalar promoted(long n) const { return integer(n, backend()); }
  friend Scalar operator+(const Scalar& a, long n) { return a + a.promoted(n); }
  friend Scalar operator+(long n, const Scalar& a) { return a.promoted(n) + a; }
  friend Scalar operator-(const Scalar& a, long n) { return a - a.promoted(n); }
  friend Scalar operator-(long n, const Scalar& a) { return a.promoted(n) - a; }
  friend Scalar operator*(const Scalar& a, long n) { return a * a.promoted(n); }
  friend Scalar operator*(long n, const Scalar& a) { return a.promoted(n) * a; }
  friend Scalar operator/(const Scalar& a, long n) { return a / a.promoted(n); }
  friend Scalar operator/(long n, const Scalar& a) { return a.promoted(n) / a; }
  friend bool operator==(const Scalar& a, long n) { return a == a.promoted(n); }
  friend bool operator!=(const Scalar& a, long n) { return !(a == n); }

 private:
  explicit Scalar(double x) : v_(x) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  void require_same(const Scalar& o) const {
    if (backend() != o.backend()) throw BackendMismatch();
  }
  std::variant<mpq_class, double> v_;
};

/// rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1
Scalar poch(const Scalar& a, long k);

/// rising factorial extended to negative order, (a)_{-k} = 1 / (a-k)_k
Scalar poch_signed(const Scalar& a, long k);

/// product notation (a_1, ..., a_j)_k = (a_1)_k ... (a_j)_k
struct PochList {
  std::vector<Scalar> bases;
  long order = 0;
};
Scalar multi_poch(const PochList& list);

Scalar factorial(long n, Backend b);

/// Terminating 3F2 at unit argument, summed through k = kmax with the
/// running-ratio term update.  The caller owns the termination index; the
/// kernel throws ZeroDenominator if a bottom factor vanishes while the
/// numerator is still alive.
Scalar hyp3f2(const std::array<Scalar, 3>& top, const std::array<Scalar, 2>& bottom, long kmax);

/// memo for repeated (base, order) rising factorials within one construction
class PochCache {
 public:
  const Scalar& operator()(const Scalar& base, long k);

 private:
  struct Key {
    Scalar base;
    long order;
    bool operator<(const Key& o) const {
      if (order != o.order) return order < o.order;
      if (base < o.base) return true;
      if (o.base < base) return false;
      return false;
    }
  };
  std::map<Key, Scalar> memo_;
};

}  // namespace mhahn
