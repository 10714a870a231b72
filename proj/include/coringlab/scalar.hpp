#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

namespace coringlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Arbitrary-precision integer with plain value semantics.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

namespace detail {

using BoostRat = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

}  // namespace detail

/// Exact rational scalar, always in lowest terms with positive denominator.
/// A thin facade over boost's rational backend: the facade has no greedy
/// converting constructors, which keeps Eigen's scalar-promotion probes from
/// wandering into boost internals on expression types.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : v_(n) {}  // NOLINT: implicit, Eigen requires Scalar(int)
  explicit Rational(detail::BoostRat v) : v_(std::move(v)) {}

  static Rational fromParts(const Int& num, const Int& den) {
    if (den == 0) throw Error("zero denominator");
    return Rational(detail::BoostRat(num) / detail::BoostRat(den));
  }

  Int numerator() const { return boost::multiprecision::numerator(v_); }
  Int denominator() const { return boost::multiprecision::denominator(v_); }

  Rational operator-() const { return Rational(detail::BoostRat(-v_)); }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.v_ == 0) throw Error("division by zero in Rational");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

  std::string str() const { return v_.str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.v_; }

 private:
  detail::BoostRat v_;
};

namespace detail {

inline std::uint64_t mulMod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powMod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulMod(r, a, p);
    a = mulMod(a, a, p);
    e >>= 1;
  }
  return r;
}

/// Deterministic Miller-Rabin, exact for any 64-bit input.
inline bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulMod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace detail

/// Prime-field scalar. The modulus is process-wide state, set once before any
/// field computation starts (default 10007); tests use FpModulusGuard to scope
/// changes. Elements are canonical representatives in [0, p).
class Fp {
 public:
  Fp() = default;
  Fp(long long n) {  // NOLINT: implicit by design, Eigen requires Scalar(int)
    const auto p = static_cast<long long>(modulus());
    long long r = n % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint64_t>(r);
  }

  static std::uint64_t modulus() { return mod_; }

  static void setModulus(std::uint64_t p) {
    if (!detail::isPrime(p)) throw Error("Fp modulus must be prime, got " + std::to_string(p));
    if (p >> 31 != 0) throw Error("Fp modulus must fit in 31 bits");
    mod_ = p;
  }

  std::uint64_t value() const { return v_; }

  static Fp fromRaw(std::uint64_t v) {
    Fp x;
    x.v_ = v % mod_;
    return x;
  }

  Fp operator-() const { return fromRaw(v_ == 0 ? 0 : mod_ - v_); }
  Fp& operator+=(const Fp& o) {
    v_ += o.v_;
    if (v_ >= mod_) v_ -= mod_;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    v_ += mod_ - o.v_;
    if (v_ >= mod_) v_ -= mod_;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    v_ = detail::mulMod(v_, o.v_, mod_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

  Fp inverse() const {
    if (v_ == 0) throw Error("division by zero in Fp");
    return fromRaw(detail::powMod(v_, mod_ - 2, mod_));
  }

  friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.v_; }

 private:
  std::uint64_t v_ = 0;
  inline static std::uint64_t mod_ = 10007;
};

/// Restores the previous Fp modulus on scope exit.
struct FpModulusGuard {
  explicit FpModulusGuard(std::uint64_t p) : saved_(Fp::modulus()) { Fp::setModulus(p); }
  ~FpModulusGuard() { Fp::setModulus(saved_); }
  FpModulusGuard(const FpModulusGuard&) = delete;
  FpModulusGuard& operator=(const FpModulusGuard&) = delete;

 private:
  std::uint64_t saved_;
};

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr bool isPrimeField = false;
  static std::string name() { return "q"; }

  static Rational fromIntPair(const Int& num, const Int& den) { return Rational::fromParts(num, den); }

  static std::string str(const Rational& x) { return x.str(); }

  /// Small-integer draw used for sampling solution spaces; the raw engine
  /// output is reduced by hand so streams replay identically on any platform.
  static Rational randomDraw(std::mt19937_64& rng) {
    return Rational(static_cast<long long>(rng() % 9) - 4);
  }
};

template <>
struct FieldTraits<Fp> {
  static constexpr bool isPrimeField = true;
  static std::string name() { return "fp " + std::to_string(Fp::modulus()); }

  static Fp fromIntPair(const Int& num, const Int& den) {
    const Int p(Fp::modulus());
    Int n = num % p;
    if (n < 0) n += p;
    Int d = den % p;
    if (d < 0) d += p;
    if (d == 0) throw Error("denominator vanishes modulo " + std::to_string(Fp::modulus()));
    Fp dn = Fp::fromRaw(static_cast<std::uint64_t>(d));
    return Fp::fromRaw(static_cast<std::uint64_t>(n)) * dn.inverse();
  }

  static std::string str(const Fp& x) { return std::to_string(x.value()); }

  static Fp randomDraw(std::mt19937_64& rng) { return Fp::fromRaw(rng() % Fp::modulus()); }
};

/// Lifts a residue to the unique small fraction n/d with |n|, d <= sqrt(p/2),
/// if one exists. Classic half-gcd lattice walk; used to replay prime-field
/// findings over the rationals.
inline std::optional<Rational> rationalReconstruct(std::uint64_t value, std::uint64_t p) {
  Int r0(p), r1(value % p);
  Int t0(0), t1(1);
  Int bound;
  {
    Int target(Int(p) / 2);
    bound = 1;
    while ((bound + 1) * (bound + 1) <= target) ++bound;
  }
  while (r1 > bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return std::nullopt;
  Int num = r1, den = t1;
  if (den < 0) {
    den = -den;
    num = -num;
  }
  if (den == 0 || den > bound) return std::nullopt;
  if (boost::multiprecision::gcd(num, den) != 1) return std::nullopt;
  if (den % Int(p) == 0) return std::nullopt;
  // Confirm the lift really reduces back to the input residue.
  Int lhs = num % Int(p);
  if (lhs < 0) lhs += p;
  Int rhs = (Int(value) * den) % Int(p);
  if (rhs < 0) rhs += p;
  if (lhs != rhs) return std::nullopt;
  return Rational::fromParts(num, den);
}

}  // namespace coringlab

namespace Eigen {

template <>
struct NumTraits<coringlab::Rational> {
  using Real = coringlab::Rational;
  using NonInteger = coringlab::Rational;
  using Literal = coringlab::Rational;
  using Nested = coringlab::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 30,
    MulCost = 30,
  };
  static inline Real epsilon() { return coringlab::Rational(0); }
  static inline Real dummy_precision() { return coringlab::Rational(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<coringlab::Fp> {
  using Real = coringlab::Fp;
  using NonInteger = coringlab::Fp;
  using Literal = coringlab::Fp;
  using Nested = coringlab::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 6,
  };
  static inline Real epsilon() { return coringlab::Fp(0); }
  static inline Real dummy_precision() { return coringlab::Fp(0); }
  static inline int digits10() { return 10; }
};

}  // namespace Eigen
