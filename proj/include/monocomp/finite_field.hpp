#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace monocomp {

struct NotPrimePower : std::invalid_argument {
    explicit NotPrimePower(int q)
        : std::invalid_argument(std::to_string(q) + " is not a prime power") {}
};

struct UnsupportedOrder : std::invalid_argument {
    explicit UnsupportedOrder(int q)
        : std::invalid_argument("field order " + std::to_string(q) + " exceeds supported range") {}
};

struct PrimePower {
    int p{0};
    int k{0};
    int q{0};
};

/// Factors q = p^k with p prime, k >= 1. Throws NotPrimePower otherwise.
inline PrimePower factor_prime_power(int q) {
    if (q < 2) throw NotPrimePower(q);
    int p = 0;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return {q, 1, q};  // q itself is prime
    int k = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw NotPrimePower(q);
    return {p, k, q};
}

inline bool is_prime_power(int q) {
    if (q < 2) return false;
    try {
        factor_prime_power(q);
        return true;
    } catch (const NotPrimePower&) {
        return false;
    }
}

/**
 * Dense arithmetic tables for GF(q), q <= 64. Elements are 0..q-1; an
 * element's base-p digits are the coefficients of its polynomial
 * representative (digit i multiplies x^i). zero is 0 and one is 1 in
 * every supported order.
 */
struct FieldTables {
    int q{0};
    std::vector<std::uint8_t> add;  // q*q, row-major
    std::vector<std::uint8_t> mul;  // q*q, row-major
    std::vector<std::uint8_t> inv;  // q entries, inv[0] == 0 by convention

    std::uint8_t plus(std::uint8_t a, std::uint8_t b) const { return add[a * q + b]; }
    std::uint8_t times(std::uint8_t a, std::uint8_t b) const { return mul[a * q + b]; }
    std::uint8_t inverse(std::uint8_t a) const { return inv[a]; }
};

namespace detail {

/// Low-order-first coefficients of a monic irreducible of degree k over
/// GF(p), keyed by q = p^k; the leading x^k term is implied.
inline const std::vector<int>* irreducible_tail(int q) {
    static const struct {
        int q;
        std::vector<int> tail;
    } table[] = {
        {4, {1, 1}},           // x^2 + x + 1
        {8, {1, 1, 0}},        // x^3 + x + 1
        {9, {1, 0}},           // x^2 + 1
        {16, {1, 1, 0, 0}},    // x^4 + x + 1
        {25, {2, 0}},          // x^2 + 2
        {27, {1, 2, 0}},       // x^3 + 2x + 1
        {32, {1, 0, 1, 0, 0}},    // x^5 + x^2 + 1
        {49, {1, 0}},             // x^2 + 1
        {64, {1, 1, 0, 0, 0, 0}}  // x^6 + x + 1
    };
    for (const auto& row : table)
        if (row.q == q) return &row.tail;
    return nullptr;
}

}  // namespace detail

inline FieldTables build_field(const PrimePower& pp) {
    const int q = pp.q;
    if (q < 2 || pp.p < 2 || pp.k < 1) throw NotPrimePower(q);
    if (q > 64) throw UnsupportedOrder(q);
    const int p = pp.p, k = pp.k;

    FieldTables f;
    f.q = q;
    f.add.assign(static_cast<std::size_t>(q) * q, 0);
    f.mul.assign(static_cast<std::size_t>(q) * q, 0);
    f.inv.assign(q, 0);

    auto digits = [&](int e) {
        std::vector<int> d(k, 0);
        for (int i = 0; i < k; ++i) {
            d[i] = e % p;
            e /= p;
        }
        return d;
    };
    auto encode = [&](const std::vector<int>& d) {
        int e = 0;
        for (int i = k - 1; i >= 0; --i) e = e * p + d[i];
        return e;
    };

    std::vector<int> reduction(k, 0);
    if (k > 1) {
        const std::vector<int>* tail = detail::irreducible_tail(q);
        if (tail == nullptr) throw UnsupportedOrder(q);
        // x^k ≡ -tail(x) mod the irreducible.
        for (int i = 0; i < k; ++i) reduction[i] = ((p - (*tail)[i]) % p + p) % p;
    }

    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            auto da = digits(a), db = digits(b);
            std::vector<int> sum(k);
            for (int i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
            f.add[a * q + b] = static_cast<std::uint8_t>(encode(sum));

            // Schoolbook product, then fold degrees >= k down via the
            // reduction row one degree at a time.
            std::vector<int> prod(2 * k - 1, 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            for (int d = 2 * k - 2; d >= k; --d) {
                int coef = prod[d];
                if (coef == 0) continue;
                prod[d] = 0;
                for (int i = 0; i < k; ++i)
                    prod[d - k + i] = (prod[d - k + i] + coef * reduction[i]) % p;
            }
            prod.resize(k);
            f.mul[a * q + b] = static_cast<std::uint8_t>(encode(prod));
        }

    for (int a = 1; a < q; ++a) {
        int found = 0;
        for (int b = 1; b < q; ++b)
            if (f.mul[a * q + b] == 1) {
                found = b;
                break;
            }
        if (found == 0)
            throw std::logic_error("field construction failed: " + std::to_string(a) +
                                   " has no inverse in GF(" + std::to_string(q) + ")");
        f.inv[a] = static_cast<std::uint8_t>(found);
    }
    return f;
}

inline FieldTables build_field(int q) { return build_field(factor_prime_power(q)); }

}  // namespace monocomp
