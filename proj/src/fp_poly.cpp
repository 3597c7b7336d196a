#include "hfpt/fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hfpt::fp {

namespace {

constexpr std::size_t kKaratsubaCutoff = 48;

using Wide = std::uint64_t;

void truncate(Poly& a, std::size_t limit) {
  if (a.size() > limit) a.resize(limit);
  normalize(a);
}

Poly schoolbook(const Poly& a, const Poly& b, std::uint32_t p, std::size_t limit) {
  if (a.empty() || b.empty() || limit == 0) return {};
  const std::size_t n = std::min(limit, a.size() + b.size() - 1);
  std::vector<Wide> acc(n, 0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    const Wide ai = a[i];
    if (ai == 0) continue;
    const std::size_t jmax = std::min(b.size(), n - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      if (b[j] != 0) acc[i + j] = (acc[i + j] + ai * b[j]) % p;
    }
  }
  Poly r(acc.begin(), acc.end());
  normalize(r);
  return r;
}

// Full product of equal-length blocks, coefficients reduced mod p.
void karatsuba_rec(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, std::uint32_t p,
                   std::uint32_t* out) {
  if (n <= kKaratsubaCutoff) {
    std::fill(out, out + 2 * n - 1, 0u);
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        out[i + j] = static_cast<std::uint32_t>((out[i + j] + static_cast<Wide>(a[i]) * b[j]) % p);
      }
    }
    return;
  }
  const std::size_t lo = n / 2;
  const std::size_t hi = n - lo;
  std::vector<std::uint32_t> sa(hi), sb(hi);
  for (std::size_t i = 0; i < hi; ++i) {
    sa[i] = static_cast<std::uint32_t>(((i < lo ? a[i] : 0u) + static_cast<Wide>(a[lo + i])) % p);
    sb[i] = static_cast<std::uint32_t>(((i < lo ? b[i] : 0u) + static_cast<Wide>(b[lo + i])) % p);
  }
  std::vector<std::uint32_t> z0(2 * lo - 1), z2(2 * hi - 1), z1(2 * hi - 1);
  karatsuba_rec(a, b, lo, p, z0.data());
  karatsuba_rec(a + lo, b + lo, hi, p, z2.data());
  karatsuba_rec(sa.data(), sb.data(), hi, p, z1.data());
  for (std::size_t i = 0; i < z1.size(); ++i) {
    Wide v = z1[i] + 2 * static_cast<Wide>(p);
    v -= z2[i];
    if (i < z0.size()) v -= z0[i];
    z1[i] = static_cast<std::uint32_t>(v % p);
  }
  std::fill(out, out + 2 * n - 1, 0u);
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] = z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[2 * lo + i] = static_cast<std::uint32_t>((out[2 * lo + i] + static_cast<Wide>(z2[i])) % p);
  for (std::size_t i = 0; i < z1.size(); ++i) out[lo + i] = static_cast<std::uint32_t>((out[lo + i] + static_cast<Wide>(z1[i])) % p);
}

Poly karatsuba(Poly a, Poly b, std::uint32_t p, std::size_t limit) {
  if (a.empty() || b.empty() || limit == 0) return {};
  truncate(a, limit);
  truncate(b, limit);
  if (a.empty() || b.empty()) return {};
  const std::size_t n = std::max(a.size(), b.size());
  a.resize(n, 0);
  b.resize(n, 0);
  Poly out(2 * n - 1);
  karatsuba_rec(a.data(), b.data(), n, p, out.data());
  truncate(out, limit);
  return out;
}

Poly one() { return Poly{1}; }

Poly square_and_multiply(const Poly& g, std::uint64_t n, std::uint32_t p, std::size_t limit, MulStrategy s) {
  Poly result = one();
  Poly base = g;
  truncate(base, limit);
  while (n > 0) {
    if (n & 1u) result = mul_trunc(result, base, p, limit, s);
    n >>= 1u;
    if (n > 0) base = mul_trunc(base, base, p, limit, s);
  }
  truncate(result, limit);
  return result;
}

}  // namespace

void normalize(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly mul_trunc(const Poly& a, const Poly& b, std::uint32_t p, std::size_t limit, MulStrategy strategy) {
  switch (strategy) {
    case MulStrategy::kSchoolbook:
      return schoolbook(a, b, p, limit);
    case MulStrategy::kKaratsuba:
      return karatsuba(a, b, p, limit);
  }
  throw std::logic_error("unknown multiplication strategy");
}

Poly stretch(const Poly& g, std::uint64_t stride, std::size_t limit) {
  if (g.empty() || limit == 0) return {};
  const std::size_t n = std::min<std::uint64_t>(limit, (g.size() - 1) * stride + 1);
  Poly r(n, 0);
  for (std::size_t i = 0; i < g.size() && i * stride < n; ++i) r[i * stride] = g[i];
  normalize(r);
  return r;
}

Poly pow_trunc(const Poly& g, std::uint64_t n, std::uint32_t p, std::size_t limit, PowerMethod method,
               MulStrategy strategy) {
  if (limit == 0) return {};
  switch (method) {
    case PowerMethod::kRepeated: {
      Poly result = one();
      for (std::uint64_t i = 0; i < n; ++i) result = mul_trunc(result, g, p, limit, strategy);
      return result;
    }
    case PowerMethod::kSquareAndMultiply:
      return square_and_multiply(g, n, p, limit, strategy);
    case PowerMethod::kFrobeniusDigits: {
      // g^n = ∏_k g^{n_k}(x^{p^k}) in characteristic p.
      Poly result = one();
      std::uint64_t stride = 1;
      while (n > 0 && stride < limit) {
        const std::uint64_t digit = n % p;
        if (digit != 0) {
          const std::size_t inner_limit = static_cast<std::size_t>((limit - 1) / stride + 1);
          const Poly part = square_and_multiply(g, digit, p, inner_limit, strategy);
          result = mul_trunc(result, stretch(part, stride, limit), p, limit, strategy);
        }
        n /= p;
        stride *= p;
      }
      if (n > 0) {
        // Remaining digits only contribute x^{>= limit} terms unless g(0) != 0.
        const Poly constant_part = g.empty() ? Poly{} : Poly{g[0]};
        const Poly c = square_and_multiply(constant_part, n, p, 1, strategy);
        result = mul_trunc(result, c, p, limit, strategy);
      }
      return result;
    }
  }
  throw std::logic_error("unknown power method");
}

Poly from_roots(const std::vector<std::uint32_t>& roots, const std::vector<std::uint64_t>& mults, std::uint32_t p,
                std::size_t limit, MulStrategy strategy) {
  if (roots.size() != mults.size()) throw std::invalid_argument("roots and multiplicities differ in length");
  Poly result = one();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Poly linear{static_cast<std::uint32_t>((p - roots[i] % p) % p), 1u};
    normalize(result);
    result = mul_trunc(result, pow_trunc(linear, mults[i], p, limit, PowerMethod::kSquareAndMultiply, strategy), p,
                       limit, strategy);
  }
  truncate(result, limit);
  return result;
}

}  // namespace hfpt::fp
