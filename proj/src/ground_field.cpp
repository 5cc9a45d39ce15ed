#include "valfrob/ground_field.hpp"

#include <algorithm>

namespace valfrob {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Fixed monic irreducibles, stored as x^k = r0 + r1 x + ...
struct IrredEntry {
  std::uint32_t p, k;
  std::array<std::uint32_t, 4> reduction;
};

constexpr IrredEntry kIrreducibles[] = {
    {2, 2, {1, 1, 0, 0}},  // x^2 + x + 1
    {2, 3, {1, 1, 0, 0}},  // x^3 + x + 1
    {2, 4, {1, 1, 0, 0}},  // x^4 + x + 1
    {3, 2, {1, 1, 0, 0}},  // x^2 + 2x + 2
    {3, 3, {2, 1, 0, 0}},  // x^3 + 2x + 1
    {3, 4, {1, 0, 0, 1}},  // x^4 + 2x^3 + 2
};

}  // namespace

GroundField::GroundField(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
  if (!is_prime_u32(p) || p >= (1u << 31))
    throw DomainError("characteristic must be a prime below 2^31, got " + std::to_string(p));
  if (k < 1) throw DomainError("extension degree must be >= 1");
  if (k > 1) {
    const IrredEntry* found = nullptr;
    for (const auto& e : kIrreducibles)
      if (e.p == p && e.k == k) found = &e;
    if (!found)
      throw DomainError("no extension field table for p=" + std::to_string(p) +
                        ", k=" + std::to_string(k) + "; only p <= 3, k <= 4 are shipped");
    reduction_ = found->reduction;
  }
  q_ = 1;
  for (std::uint32_t i = 0; i < k; ++i) q_ *= p;
}

Fq GroundField::generator() const {
  if (k_ == 1) throw DomainError("prime field has no extension generator");
  return Fq{{0, 1, 0, 0}};
}

Fq GroundField::from_int(const mpz_class& n) const {
  mpz_class r = n % p_;
  if (r < 0) r += p_;
  return Fq{{static_cast<std::uint32_t>(r.get_ui()), 0, 0, 0}};
}

Fq GroundField::add(const Fq& a, const Fq& b) const {
  Fq r;
  for (int i = 0; i < 4; ++i) r.c[i] = (a.c[i] + b.c[i]) % p_;
  return r;
}

Fq GroundField::sub(const Fq& a, const Fq& b) const {
  Fq r;
  for (int i = 0; i < 4; ++i) r.c[i] = (a.c[i] + p_ - b.c[i]) % p_;
  return r;
}

Fq GroundField::neg(const Fq& a) const { return sub(zero(), a); }

Fq GroundField::mul(const Fq& a, const Fq& b) const {
  if (k_ == 1) {
    std::uint64_t prod = static_cast<std::uint64_t>(a.c[0]) * b.c[0] % p_;
    return Fq{{static_cast<std::uint32_t>(prod), 0, 0, 0}};
  }
  // Schoolbook product then reduce powers g^k..g^{2k-2} via the table.
  std::array<std::uint64_t, 7> t{};
  for (unsigned i = 0; i < k_; ++i)
    for (unsigned j = 0; j < k_; ++j) t[i + j] += static_cast<std::uint64_t>(a.c[i]) * b.c[j];
  for (int d = 2 * static_cast<int>(k_) - 2; d >= static_cast<int>(k_); --d) {
    std::uint64_t coeff = t[d] % p_;
    t[d] = 0;
    for (unsigned i = 0; i < k_; ++i) t[d - k_ + i] += coeff * reduction_[i];
  }
  Fq r;
  for (unsigned i = 0; i < k_; ++i) r.c[i] = static_cast<std::uint32_t>(t[i] % p_);
  return r;
}

Fq GroundField::pow(const Fq& a, std::uint64_t e) const {
  Fq base = a, acc = one();
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

Fq GroundField::inv(const Fq& a) const {
  if (a.is_zero()) throw DomainError("division by zero in F_q");
  return pow(a, q_ - 2);
}

Fq GroundField::frobenius(const Fq& a, unsigned e) const {
  if (a.is_zero()) return a;
  // Frobenius has order k on F_q, so only e mod k matters.
  unsigned eff = k_ == 1 ? 0 : e % k_;
  Fq r = a;
  for (unsigned i = 0; i < eff; ++i) r = pow(r, p_);
  return r;
}

Fq GroundField::pth_root(const Fq& a, unsigned e) const {
  if (k_ == 1) return a;  // F_p is fixed by Frobenius
  unsigned eff = e % k_;
  // root = inverse Frobenius = Frobenius^(k - e mod k)
  return frobenius(a, (k_ - eff) % k_);
}

std::vector<Fq> GroundField::elements() const {
  if (q_ > 4096) throw DomainError("element enumeration only supported for small fields");
  std::vector<Fq> out;
  out.reserve(static_cast<std::size_t>(q_));
  Fq cur{};
  for (std::uint64_t n = 0; n < q_; ++n) {
    out.push_back(cur);
    // increment base-p counter
    for (unsigned i = 0; i < k_; ++i) {
      if (++cur.c[i] < p_) break;
      cur.c[i] = 0;
    }
  }
  return out;
}

std::string GroundField::render(const Fq& a) const {
  if (k_ == 1 || (a.c[1] == 0 && a.c[2] == 0 && a.c[3] == 0))
    return std::to_string(a.c[0]);
  std::string out;
  for (int i = 3; i >= 0; --i) {
    if (a.c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(a.c[i]);
    } else {
      if (a.c[i] != 1) out += std::to_string(a.c[i]) + "*";
      out += i == 1 ? "g" : "g^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace valfrob
