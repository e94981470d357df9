#pragma once

#include <cstdint>
#include <stdexcept>

namespace idcodes
{
    // Exact 64-bit integer arithmetic that throws instead of wrapping.

    inline auto checked_add(std::int64_t a, std::int64_t b) -> std::int64_t
    {
        std::int64_t result;
        if (__builtin_add_overflow(a, b, &result))
            throw std::overflow_error("integer overflow in addition");
        return result;
    }

    inline auto checked_sub(std::int64_t a, std::int64_t b) -> std::int64_t
    {
        std::int64_t result;
        if (__builtin_sub_overflow(a, b, &result))
            throw std::overflow_error("integer overflow in subtraction");
        return result;
    }

    inline auto checked_mul(std::int64_t a, std::int64_t b) -> std::int64_t
    {
        std::int64_t result;
        if (__builtin_mul_overflow(a, b, &result))
            throw std::overflow_error("integer overflow in multiplication");
        return result;
    }

    inline auto checked_pow(std::int64_t base, int exponent) -> std::int64_t
    {
        if (exponent < 0)
            throw std::invalid_argument("negative exponent");
        std::int64_t result = 1;
        for (int i = 0 ; i < exponent ; ++i)
            result = checked_mul(result, base);
        return result;
    }
}
