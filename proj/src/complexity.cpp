#include "crn/complexity.hpp"

#include <string>

#include "crn/error.hpp"

namespace crn {

namespace {

std::int64_t exact_div(std::int64_t num, std::int64_t den, const char* what) {
    if (num % den != 0)
        throw InternalError(std::string(what) + ": non-integer state count " + std::to_string(num) + "/" +
                            std::to_string(den));
    return num / den;
}

}  // namespace

std::int64_t state_count_basic(int M) {
    const std::int64_t x = M;
    return exact_div(x * x * x + 6 * x * x + 11 * x + 6, 6, "state_count_basic");
}

std::int64_t state_count_reservation(int M) {
    const std::int64_t x = M;
    return exact_div(2 * x * x * x + 9 * x * x - 23 * x - 42, 6, "state_count_reservation");
}

std::int64_t state_count_reservation(int M, int M_rp) {
    std::int64_t pairs = 0;
    for (std::int64_t v = M_rp; v <= M - M_rp; ++v) pairs += 2 * v;
    std::int64_t squares = 0;
    for (std::int64_t w = 1; w <= M - M_rp; ++w) squares += w * w;
    return (M_rp + 1) * (pairs + (M - M_rp)) + squares;
}

}  // namespace crn
