#ifndef VALFROB_GROUND_FIELD_HPP
#define VALFROB_GROUND_FIELD_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "valfrob/errors.hpp"

namespace valfrob {

// Element of a finite field F_q, q = p^k, k <= 4. Coefficients of
// 1, g, g^2, g^3 where g is the generator of the extension; for prime
// fields only c[0] is used. All entries are reduced mod p.
struct Fq {
  std::array<std::uint32_t, 4> c{};

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
  friend bool operator==(const Fq&, const Fq&) = default;
};

// Arithmetic context for F_q. Extension fields ship with a fixed irreducible
// polynomial per (p, k); only (p, k) with p <= 3, k <= 4 are available, which
// covers everything the small examples need. Prime fields accept any prime p
// that fits in 31 bits.
class GroundField {
 public:
  GroundField(std::uint32_t p, std::uint32_t k = 1);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint64_t q() const { return q_; }

  Fq zero() const { return Fq{}; }
  Fq one() const { return Fq{{1, 0, 0, 0}}; }
  Fq generator() const;  // g, only for k > 1

  // Reduces an arbitrary integer mod p into the prime subfield.
  Fq from_int(const mpz_class& n) const;

  Fq add(const Fq& a, const Fq& b) const;
  Fq sub(const Fq& a, const Fq& b) const;
  Fq neg(const Fq& a) const;
  Fq mul(const Fq& a, const Fq& b) const;
  Fq inv(const Fq& a) const;  // error on zero
  Fq div(const Fq& a, const Fq& b) const { return mul(a, inv(b)); }
  Fq pow(const Fq& a, std::uint64_t e) const;

  // a^(p^e) and its inverse. Frobenius is a bijection here, so every element
  // has a unique p^e-th root.
  Fq frobenius(const Fq& a, unsigned e = 1) const;
  Fq pth_root(const Fq& a, unsigned e = 1) const;

  // Full element enumeration (q is small by construction).
  std::vector<Fq> elements() const;

  std::string render(const Fq& a) const;

  friend bool operator==(const GroundField& a, const GroundField& b) {
    return a.p_ == b.p_ && a.k_ == b.k_;
  }

 private:
  std::uint32_t p_, k_;
  std::uint64_t q_;
  // x^k = reduction_[0] + reduction_[1] x + ... (only for k > 1)
  std::array<std::uint32_t, 4> reduction_{};
};

}  // namespace valfrob

#endif
