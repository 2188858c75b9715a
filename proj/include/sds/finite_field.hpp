#pragma once

// GF(p^k) as polynomials over GF(p) modulo a fixed monic irreducible
// polynomial. Coefficient vectors are constant term first throughout.

#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "sds/arith.hpp"
#include "sds/group.hpp"
#include "sds/signed_set.hpp"

namespace sds {

struct FieldElement {
    std::vector<i64> coeffs;  // length k, entries in [0, p)

    auto operator<=>(const FieldElement&) const = default;
    bool operator==(const FieldElement&) const = default;
};

namespace detail {

/// Remainder of a modulo monic b over GF(p); both constant term first.
inline std::vector<i64> poly_rem(std::vector<i64> a, const std::vector<i64>& b, i64 p)
{
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        i64 lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - lead * b[i], p);
        }
        a.pop_back();
    }
    return a;
}

inline bool is_irreducible(const std::vector<i64>& f, i64 p)
{
    const int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        // Every monic divisor candidate of degree d.
        i64 count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (i64 idx = 0; idx < count; ++idx) {
            std::vector<i64> g(static_cast<std::size_t>(d) + 1, 0);
            i64 x = idx;
            for (int i = 0; i < d; ++i) {
                g[static_cast<std::size_t>(i)] = x % p;
                x /= p;
            }
            g[static_cast<std::size_t>(d)] = 1;
            auto r = poly_rem(f, g, p);
            bool zero = true;
            for (i64 c : r) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return true;
}

} // namespace detail

class FiniteField {
public:
    FiniteField(i64 p, int k, std::vector<i64> modulus) : p_(p), k_(k), modulus_(std::move(modulus))
    {
        q_ = 1;
        for (int i = 0; i < k_; ++i) q_ = checked_mul(q_, p_);
    }

    i64 p() const noexcept { return p_; }
    int degree() const noexcept { return k_; }
    i64 q() const noexcept { return q_; }
    const std::vector<i64>& modulus() const noexcept { return modulus_; }
    FieldDescriptor descriptor() const { return {p_, k_, modulus_}; }

    FieldElement zero() const { return FieldElement{std::vector<i64>(static_cast<std::size_t>(k_), 0)}; }
    FieldElement one() const
    {
        auto e = zero();
        e.coeffs[0] = 1;
        return e;
    }

    /// Element with base-p digits of `index`, least significant digit = constant term.
    FieldElement from_index(i64 index) const
    {
        auto e = zero();
        for (int i = 0; i < k_; ++i) {
            e.coeffs[static_cast<std::size_t>(i)] = index % p_;
            index /= p_;
        }
        return e;
    }

    i64 index_of(const FieldElement& a) const
    {
        i64 idx = 0;
        for (int i = k_; i-- > 0;) idx = idx * p_ + a.coeffs[static_cast<std::size_t>(i)];
        return idx;
    }

    bool is_zero(const FieldElement& a) const
    {
        for (i64 c : a.coeffs)
            if (c != 0) return false;
        return true;
    }

    /// All q elements ordered by index; zero comes first.
    std::vector<FieldElement> enumerate_elements() const
    {
        std::vector<FieldElement> out;
        out.reserve(static_cast<std::size_t>(q_));
        for (i64 i = 0; i < q_; ++i) out.push_back(from_index(i));
        return out;
    }

    FieldElement add(const FieldElement& a, const FieldElement& b) const
    {
        auto c = zero();
        for (int i = 0; i < k_; ++i) {
            auto u = static_cast<std::size_t>(i);
            c.coeffs[u] = (a.coeffs[u] + b.coeffs[u]) % p_;
        }
        return c;
    }

    FieldElement neg(const FieldElement& a) const
    {
        auto c = zero();
        for (int i = 0; i < k_; ++i) {
            auto u = static_cast<std::size_t>(i);
            c.coeffs[u] = (p_ - a.coeffs[u]) % p_;
        }
        return c;
    }

    FieldElement mul(const FieldElement& a, const FieldElement& b) const
    {
        std::vector<i64> prod(static_cast<std::size_t>(2 * k_ - 1), 0);
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j) {
                auto& slot = prod[static_cast<std::size_t>(i + j)];
                slot = (slot + a.coeffs[static_cast<std::size_t>(i)] * b.coeffs[static_cast<std::size_t>(j)]) % p_;
            }
        auto r = detail::poly_rem(std::move(prod), modulus_, p_);
        r.resize(static_cast<std::size_t>(k_), 0);
        return FieldElement{std::move(r)};
    }

    FieldElement pow(FieldElement a, i64 e) const
    {
        auto r = one();
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    FieldElement inv(const FieldElement& a) const
    {
        if (is_zero(a)) throw Error(Errc::precondition, "inverse of zero in GF(" + std::to_string(q_) + ")");
        return pow(a, q_ - 2);
    }

    /// +1 on nonzero squares, -1 on nonsquares, 0 at zero. Odd q only.
    int quadratic_character(const FieldElement& x) const
    {
        if (q_ % 2 == 0) throw Error(Errc::precondition, "quadratic character needs odd q");
        if (is_zero(x)) return 0;
        return pow(x, (q_ - 1) / 2) == one() ? 1 : -1;
    }

    /// The additive group (Z_p)^k; coordinate i is the coefficient of x^i.
    AbelianGroup additive_group() const { return AbelianGroup(std::vector<i64>(static_cast<std::size_t>(k_), p_)); }

    GroupElement to_group_element(const FieldElement& a) const { return GroupElement{a.coeffs}; }

private:
    i64 p_;
    int k_;
    std::vector<i64> modulus_;
    i64 q_;
};

/// GF(q); for q = p^k with k > 1 the modulus is the lexicographically least
/// monic irreducible when coefficients are read constant term first.
inline FiniteField make_field(i64 q)
{
    if (q > 1'000'000) throw Error(Errc::precondition, "field order " + std::to_string(q) + " exceeds 10^6");
    auto pk = prime_power(q);
    if (!pk) throw Error(Errc::not_prime_power, std::to_string(q) + " is not a prime power");
    const auto [p, k] = *pk;
    if (k == 1) return FiniteField(p, 1, {0, 1});
    i64 count = q;  // p^k choices for the k lower coefficients
    for (i64 idx = 0; idx < count; ++idx) {
        std::vector<i64> f(static_cast<std::size_t>(k) + 1, 0);
        // Lexicographic with a_0 most significant.
        i64 x = idx;
        for (int i = k - 1; i >= 0; --i) {
            f[static_cast<std::size_t>(i)] = x % p;
            x /= p;
        }
        f[static_cast<std::size_t>(k)] = 1;
        if (f[0] == 0) continue;
        if (detail::is_irreducible(f, p)) return FiniteField(p, k, f);
    }
    throw Error(Errc::precondition, "no irreducible polynomial found");
}

inline FieldElement f_add(const FiniteField& F, const FieldElement& a, const FieldElement& b) { return F.add(a, b); }
inline FieldElement f_mul(const FiniteField& F, const FieldElement& a, const FieldElement& b) { return F.mul(a, b); }
inline FieldElement f_neg(const FiniteField& F, const FieldElement& a) { return F.neg(a); }
inline FieldElement f_inv(const FiniteField& F, const FieldElement& a) { return F.inv(a); }
inline int quadratic_character(const FiniteField& F, const FieldElement& x) { return F.quadratic_character(x); }

/// e-th power residues modulo the prime v, sorted.
inline std::vector<i64> power_residues(i64 v, i64 e)
{
    if (!is_prime(v)) throw Error(Errc::precondition, std::to_string(v) + " is not prime");
    if (e < 1 || (v - 1) % e != 0)
        throw Error(Errc::precondition, std::to_string(e) + " does not divide " + std::to_string(v - 1));
    std::vector<char> hit(static_cast<std::size_t>(v), 0);
    for (i64 x = 1; x < v; ++x) hit[static_cast<std::size_t>(pow_mod(x, e, v))] = 1;
    std::vector<i64> out;
    for (i64 r = 1; r < v; ++r)
        if (hit[static_cast<std::size_t>(r)]) out.push_back(r);
    return out;
}

struct QuarticGaussSum {
    std::complex<double> g;   // sum_{m=0}^{v-1} exp(2 pi i m^4 / v)
    std::complex<double> s4;  // (g - 1) / 4
};

inline QuarticGaussSum gauss_quartic_sum(i64 v)
{
    std::complex<long double> acc = 0;
    const long double two_pi = 2 * std::numbers::pi_v<long double>;
    for (i64 m = 0; m < v; ++m) {
        const i64 r = pow_mod(m, 4, v);
        const long double ang = two_pi * static_cast<long double>(r) / static_cast<long double>(v);
        acc += std::complex<long double>(std::cos(ang), std::sin(ang));
    }
    std::complex<double> g(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
    return {g, (g - 1.0) / 4.0};
}

} // namespace sds
