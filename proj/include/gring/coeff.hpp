#ifndef GRING_COEFF_HPP
#define GRING_COEFF_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gring {

using Int = boost::multiprecision::cpp_int;

bool is_prime_u64(uint64_t n);

// Coefficient domain: the integers, or the field of integers mod a prime p.
// Prime-field values are kept normalized in [0, p).
class CoeffRing {
public:
  static CoeffRing integers() { return CoeffRing(0); }
  static CoeffRing prime_field(uint64_t p);

  bool is_integers() const { return modulus_ == 0; }
  uint64_t modulus() const { return modulus_; }

  Int normalize(Int v) const {
    if (modulus_ == 0) return v;
    Int m(modulus_);
    v %= m;
    if (v < 0) v += m;
    return v;
  }

  std::string describe() const;

  bool operator==(const CoeffRing&) const = default;

private:
  explicit CoeffRing(uint64_t m) : modulus_(m) {}
  uint64_t modulus_;
};

}  // namespace gring

#endif
