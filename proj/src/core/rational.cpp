#include "rational.hpp"

#include "error.hpp"

#include <cstdio>

namespace tablecast {

namespace {

BigInt pow10(int exponent) {
    BigInt result = 1;
    for (int i = 0; i < exponent; ++i) {
        result *= 10;
    }
    return result;
}

int digit_count(const BigInt& value) {
    return static_cast<int>(value.str().size());
}

}  // namespace

BigInt factorial(std::uint32_t n) {
    BigInt result = 1;
    for (std::uint32_t k = 2; k <= n; ++k) {
        result *= k;
    }
    return result;
}

BigInt binomial(std::uint32_t n, std::uint32_t k) {
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt result = 1;
    for (std::uint32_t i = 1; i <= k; ++i) {
        // Exact at every step: the running product is C(n-k+i, i).
        result = result * (n - k + i) / i;
    }
    return result;
}

std::string to_fraction_string(const Rational& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Rational& value, int significant) {
    if (significant < 1) {
        throw Error(ErrorCode::InvalidArgument, "significant digits must be positive");
    }
    if (value == 0) {
        return "0";
    }

    const bool negative = value < 0;
    const BigInt a = boost::multiprecision::abs(boost::multiprecision::numerator(value));
    const BigInt b = boost::multiprecision::denominator(value);

    // Largest e with 10^e <= a/b.
    int e = digit_count(a) - digit_count(b);
    auto at_least = [&](int exp10) {
        return exp10 >= 0 ? a >= b * pow10(exp10) : a * pow10(-exp10) >= b;
    };
    while (!at_least(e)) {
        --e;
    }
    while (at_least(e + 1)) {
        ++e;
    }

    const int shift = significant - 1 - e;
    BigInt num = a;
    BigInt den = b;
    if (shift >= 0) {
        num *= pow10(shift);
    } else {
        den *= pow10(-shift);
    }
    BigInt digits = num / den;
    if (2 * (num % den) >= den) {
        digits += 1;
    }
    if (digits == pow10(significant)) {
        digits /= 10;
        ++e;
    }

    std::string d = digits.str();
    std::string out = negative ? "-" : "";

    auto trim_zeros = [](std::string s) {
        while (!s.empty() && s.back() == '0') {
            s.pop_back();
        }
        return s;
    };

    if (e >= -4 && e < 15) {
        if (e >= 0) {
            std::string int_part;
            std::string frac_part;
            if (static_cast<int>(d.size()) <= e + 1) {
                int_part = d + std::string(e + 1 - d.size(), '0');
            } else {
                int_part = d.substr(0, e + 1);
                frac_part = trim_zeros(d.substr(e + 1));
            }
            out += int_part;
            if (!frac_part.empty()) {
                out += "." + frac_part;
            }
        } else {
            out += "0." + std::string(-e - 1, '0') + trim_zeros(d);
        }
        return out;
    }

    out += d.substr(0, 1);
    const std::string mantissa_tail = trim_zeros(d.substr(1));
    if (!mantissa_tail.empty()) {
        out += "." + mantissa_tail;
    }
    char exp_buf[16];
    std::snprintf(exp_buf, sizeof exp_buf, "e%c%02d", e < 0 ? '-' : '+', e < 0 ? -e : e);
    return out + exp_buf;
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Dimension: return "dimension error";
    case ErrorCode::Domain: return "domain error";
    case ErrorCode::NotPermutation: return "not a permutation";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::EmptyInput: return "empty input";
    case ErrorCode::Consistency: return "consistency error";
    case ErrorCode::DegeneratePredictor: return "degenerate predictor";
    case ErrorCode::OracleCap: return "oracle cap exceeded";
    case ErrorCode::Io: return "i/o error";
    }
    return "unknown error";
}

}  // namespace tablecast
