#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hfpt::fp {

/// Dense univariate polynomial over F_p, coefficient i at index i. Kept
/// without trailing zeros; the zero polynomial is the empty vector.
using Poly = std::vector<std::uint32_t>;

enum class MulStrategy { kSchoolbook, kKaratsuba };

enum class PowerMethod {
  kRepeated,           ///< n-1 successive multiplications (reference only)
  kSquareAndMultiply,  ///< binary exponentiation
  kFrobeniusDigits,    ///< base-p digits, using g(x)^p = g(x^p)
};

void normalize(Poly& a);

/// a·b mod x^limit.
Poly mul_trunc(const Poly& a, const Poly& b, std::uint32_t p, std::size_t limit, MulStrategy strategy);

/// g(x^stride) mod x^limit.
Poly stretch(const Poly& g, std::uint64_t stride, std::size_t limit);

/// g^n mod x^limit.
Poly pow_trunc(const Poly& g, std::uint64_t n, std::uint32_t p, std::size_t limit, PowerMethod method,
               MulStrategy strategy);

/// ∏ (x - root_i)^{mult_i} mod x^limit.
Poly from_roots(const std::vector<std::uint32_t>& roots, const std::vector<std::uint64_t>& mults, std::uint32_t p,
                std::size_t limit, MulStrategy strategy);

}  // namespace hfpt::fp
